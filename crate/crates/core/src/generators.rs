//! Canonical generators of the weak endomorphism monoid, words over them,
//! constructive factorization, monoid closure and the rank certificate.
//!
//! For a path with `n >= 3` vertices the monoid is generated by the `n - 1`
//! maps `a1, .., a(n-2), b(n-1)` and no smaller set suffices. Membership of
//! a word's letters. Ranks drive the factorization: the elements of rank
//! `n - 1` are exactly the `2(n - 1)` merge maps below, each a word of
//! length at most 2 over the canonical set, and every element of lower rank
//! splits into a product of two elements of one rank higher.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigUint;

use crate::{wend, Error, PathTransformation, WendEncoding};

/// The two generator families: `A` maps onto the lower interval
/// `{1, .., n-1}`, `B` onto the upper interval `{2, .., n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    A,
    B,
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorKind::A => write!(f, "a"),
            GeneratorKind::B => write!(f, "b"),
        }
    }
}

/// One letter of a generator word, written `a<i>` or `b<i>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneratorSymbol {
    pub kind: GeneratorKind,
    pub index: usize,
}

impl GeneratorSymbol {
    /// The letter `a<index>`.
    pub fn a(index: usize) -> Self {
        Self {
            kind: GeneratorKind::A,
            index,
        }
    }

    /// The letter `b<index>`.
    pub fn b(index: usize) -> Self {
        Self {
            kind: GeneratorKind::B,
            index,
        }
    }

    /// The transformation this letter stands for on the `n`-vertex path.
    ///
    /// Panics on out-of-range parameters, like [`merge_down`].
    pub fn realize(&self, n: usize) -> PathTransformation {
        match self.kind {
            GeneratorKind::A => merge_down(n, self.index),
            GeneratorKind::B => merge_up(n, self.index),
        }
    }
}

impl fmt::Display for GeneratorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.index)
    }
}

/// A word over the generator letters, evaluated left to right on a path of
/// fixed degree. The empty word stands for the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorWord {
    degree: usize,
    symbols: Vec<GeneratorSymbol>,
}

impl GeneratorWord {
    /// Validates letter indices against the degree and builds the word.
    ///
    /// Nonempty words need `degree >= 3` (the letters are only defined
    /// there) and every index in `1..=degree-1`.
    pub fn new(degree: usize, symbols: Vec<GeneratorSymbol>) -> Result<Self, Error> {
        if degree == 0 {
            return Err(Error::DegreeTooSmall { degree, min: 1 });
        }
        if !symbols.is_empty() {
            if degree < 3 {
                return Err(Error::DegreeTooSmall { degree, min: 3 });
            }
            for symbol in &symbols {
                if symbol.index < 1 || symbol.index > degree - 1 {
                    return Err(Error::GeneratorIndexOutOfRange {
                        index: symbol.index,
                        max: degree - 1,
                    });
                }
            }
        }
        Ok(Self { degree, symbols })
    }

    /// The empty word on the `n`-vertex path.
    ///
    /// Panics if `degree == 0`.
    pub fn empty(degree: usize) -> Self {
        assert!(degree >= 1, "the path needs at least one vertex");
        Self {
            degree,
            symbols: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn symbols(&self) -> &[GeneratorSymbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Left-to-right product of the letters, starting from the identity.
    pub fn evaluate(&self) -> PathTransformation {
        self.symbols
            .iter()
            .fold(PathTransformation::identity(self.degree), |acc, symbol| {
                acc.compose(&symbol.realize(self.degree))
            })
    }

    /// Parses whitespace-separated letters, e.g. `"b2 a1"`. The empty (or
    /// all-whitespace) string is the empty word.
    pub fn parse(degree: usize, text: &str) -> Result<Self, Error> {
        let mut symbols = Vec::new();
        let mut rest = text;
        let mut base = 0usize;
        loop {
            let trimmed = rest.trim_start();
            base += rest.len() - trimmed.len();
            if trimmed.is_empty() {
                break;
            }
            let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
            let token = &trimmed[..end];
            let kind = match token.as_bytes()[0] {
                b'a' => GeneratorKind::A,
                b'b' => GeneratorKind::B,
                _ => {
                    return Err(Error::Parse {
                        position: base,
                        message: format!("expected a letter 'a<i>' or 'b<i>', got {token:?}"),
                    })
                }
            };
            let index: usize = token[1..].parse().map_err(|_| Error::Parse {
                position: base,
                message: format!("bad generator index in {token:?}"),
            })?;
            symbols.push(GeneratorSymbol { kind, index });
            rest = &trimmed[end..];
            base += end;
        }
        Self::new(degree, symbols)
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, symbol) in self.symbols.iter().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            write!(f, "{symbol}")?;
        }
        Ok(())
    }
}

/// The letter `a<i>`: fixes `1..=i` and moves every larger point one step
/// down, collapsing `{i, i+1}` onto the lower interval `{1, .., n-1}`.
///
/// Panics unless `n >= 3` and `1 <= i <= n-1`.
pub fn merge_down(n: usize, i: usize) -> PathTransformation {
    assert!(
        n >= 3,
        "generator letters need a path with at least 3 vertices"
    );
    assert!(
        (1..n).contains(&i),
        "generator index {i} is outside 1..={}",
        n - 1
    );
    let images = (1..=n).map(|x| if x <= i { x } else { x - 1 }).collect();
    PathTransformation::new(images).expect("merge images stay inside 1..=n")
}

/// The letter `b<i>`: moves `1..=i` one step up and fixes every larger
/// point, collapsing `{i, i+1}` onto the upper interval `{2, .., n}`.
///
/// Panics unless `n >= 3` and `1 <= i <= n-1`.
pub fn merge_up(n: usize, i: usize) -> PathTransformation {
    assert!(
        n >= 3,
        "generator letters need a path with at least 3 vertices"
    );
    assert!(
        (1..n).contains(&i),
        "generator index {i} is outside 1..={}",
        n - 1
    );
    let images = (1..=n).map(|x| if x <= i { x + 1 } else { x }).collect();
    PathTransformation::new(images).expect("merge images stay inside 1..=n")
}

/// The canonical generating set `{a1, .., a(n-2), b(n-1)}` of size `n - 1`.
///
/// Panics unless `n >= 3`.
pub fn canonical_generators(n: usize) -> Vec<PathTransformation> {
    assert!(n >= 3, "the canonical generating set needs n >= 3");
    let mut generators: Vec<PathTransformation> = (1..=n - 2).map(|i| merge_down(n, i)).collect();
    generators.push(merge_up(n, n - 1));
    generators
}

/// All `2(n - 1)` weak endomorphisms of rank `n - 1`: the merge-down maps
/// followed by the merge-up maps, each family by index.
///
/// Panics unless `n >= 3`.
pub fn corank_one_elements(n: usize) -> Vec<PathTransformation> {
    assert!(n >= 3, "rank n-1 elements are tabulated for n >= 3");
    (1..n)
        .map(|i| merge_down(n, i))
        .chain((1..n).map(|i| merge_up(n, i)))
        .collect()
}

/// Writes a rank-`n-1` member as a word of length at most 2 over the
/// canonical generators, by direct comparison with the `2(n - 1)` merge
/// maps: `a<i>` stays itself, `a<n-1> = b<n-1> a1`, `b<i> = a<i> b<n-1>`,
/// `b<n-1>` stays itself.
pub fn express_corank_one(f: &PathTransformation) -> Result<GeneratorWord, Error> {
    let n = f.degree();
    if n < 3 {
        return Err(Error::DegreeTooSmall { degree: n, min: 3 });
    }
    if !f.is_weak_endomorphism() {
        return Err(Error::NotWeakEndomorphism);
    }
    if f.rank() != n - 1 {
        return Err(Error::WrongRank {
            expected: n - 1,
            found: f.rank(),
        });
    }
    for i in 1..n {
        if *f == merge_down(n, i) {
            let symbols = if i <= n - 2 {
                vec![GeneratorSymbol::a(i)]
            } else {
                vec![GeneratorSymbol::b(n - 1), GeneratorSymbol::a(1)]
            };
            return GeneratorWord::new(n, symbols);
        }
        if *f == merge_up(n, i) {
            let symbols = if i <= n - 2 {
                vec![GeneratorSymbol::a(i), GeneratorSymbol::b(n - 1)]
            } else {
                vec![GeneratorSymbol::b(n - 1)]
            };
            return GeneratorWord::new(n, symbols);
        }
    }
    unreachable!("a rank n-1 member collapses exactly one arc, so it is a merge map")
}

/// Splits a member of rank `k <= n - 2` into two members of rank `k + 1`
/// whose product (left factor first) is `f`.
///
/// The left factor separates the last point of the last fiber of size >= 2;
/// the right factor rejoins it while translating the image onto its final
/// interval. Errors on non-members and on ranks above `n - 2`.
pub fn split(f: &PathTransformation) -> Result<(PathTransformation, PathTransformation), Error> {
    let code = f.encode()?;
    let n = f.degree();
    let k = code.rank();
    if k + 2 > n {
        return Err(Error::RankTooLarge {
            found: k,
            max: n.saturating_sub(2),
        });
    }
    let j = code.offset();

    if k == 1 {
        // constant map with value j + 1
        let (left, right) = if j == n - 1 {
            (
                WendEncoding::new(n, 1, vec![n - 1, 1]),
                WendEncoding::new(n, n - 2, vec![1, n - 1]),
            )
        } else {
            (
                WendEncoding::new(n, 0, vec![n - 1, 1]),
                WendEncoding::new(n, j, vec![2, n - 2]),
            )
        };
        return Ok((
            left.expect("split encodings are valid").decode(),
            right.expect("split encodings are valid").decode(),
        ));
    }

    let parts = code.parts();
    // last fiber with at least two points; one exists since k < n
    let p = (1..=k)
        .rev()
        .find(|&t| parts[t - 1] >= 2)
        .expect("rank below n forces a fiber of size at least 2");

    // left factor: detach the last point of fiber p into its own block
    let mut sizes = Vec::with_capacity(k + 1);
    sizes.extend_from_slice(&parts[..p - 1]);
    sizes.push(parts[p - 1] - 1);
    sizes.push(1);
    sizes.extend_from_slice(&parts[p..]);
    let left_offset = if j == n - k { 1 } else { 0 };
    let left = WendEncoding::new(n, left_offset, sizes)
        .expect("split encodings are valid")
        .decode();

    // right factor: rejoin blocks p and p+1 and shift onto the target image
    let right_images: Vec<usize> = (1..=n)
        .map(|t| {
            if j == n - k {
                if t <= p + 1 {
                    n - k + t - 1
                } else if t <= k + 2 {
                    n - k + t - 2
                } else {
                    n
                }
            } else if t <= p {
                j + t
            } else if t <= k + 1 {
                j + t - 1
            } else {
                j + k + 1
            }
        })
        .collect();
    let right = PathTransformation::new(right_images).expect("split images stay inside 1..=n");
    Ok((left, right))
}

/// A word over the canonical generators that evaluates to `f`.
///
/// The identity gets the empty word; rank `n - 1` uses
/// [`express_corank_one`]; lower ranks recurse through [`split`], so the
/// word length roughly doubles per missing rank. Errors on non-members and
/// on paths shorter than 3 vertices, where the canonical letters do not
/// exist.
pub fn factorize(f: &PathTransformation) -> Result<GeneratorWord, Error> {
    let n = f.degree();
    if n < 3 {
        return Err(Error::DegreeTooSmall { degree: n, min: 3 });
    }
    if !f.is_weak_endomorphism() {
        return Err(Error::NotWeakEndomorphism);
    }
    let mut symbols = Vec::new();
    collect_symbols(f, &mut symbols);
    GeneratorWord::new(n, symbols)
}

fn collect_symbols(f: &PathTransformation, out: &mut Vec<GeneratorSymbol>) {
    let n = f.degree();
    if f.rank() == n {
        // the only member of full rank is the identity
        return;
    }
    if f.rank() == n - 1 {
        let word = express_corank_one(f).expect("member of rank n-1");
        out.extend_from_slice(word.symbols());
        return;
    }
    let (left, right) = split(f).expect("member of rank at most n-2");
    collect_symbols(&left, out);
    collect_symbols(&right, out);
}

/// The submonoid generated by `generators`: the smallest set containing the
/// identity and the generators that is closed under composition. Computed
/// by breadth-first right multiplication, deduplicating on image lists.
///
/// Panics if `n == 0` or some generator has a different degree.
pub fn closure(n: usize, generators: &[PathTransformation]) -> BTreeSet<PathTransformation> {
    assert!(n >= 1, "the path needs at least one vertex");
    for g in generators {
        assert_eq!(g.degree(), n, "generators must share one degree");
    }
    let mut elements = BTreeSet::new();
    let mut queue = VecDeque::new();
    let visit = |t: PathTransformation,
                 elements: &mut BTreeSet<PathTransformation>,
                 queue: &mut VecDeque<PathTransformation>| {
        if elements.insert(t.clone()) {
            queue.push_back(t);
        }
    };
    visit(PathTransformation::identity(n), &mut elements, &mut queue);
    for g in generators {
        visit(g.clone(), &mut elements, &mut queue);
    }
    while let Some(w) = queue.pop_front() {
        for g in generators {
            visit(w.compose(g), &mut elements, &mut queue);
        }
    }
    elements
}

/// Evidence that the monoid of the `n`-vertex path has rank exactly `n - 1`.
///
/// Lower bound: the kernels of rank-`n - 1` elements must all be realized
/// inside any generating set, and there are `distinct_kernels` of them.
/// Upper bound: the canonical set of size `generating_set_size` generates
/// the whole monoid iff `closure_size == expected_size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankCertificate {
    pub degree: usize,
    pub generating_set_size: usize,
    /// Distinct kernels among the rank-`n - 1` elements.
    pub distinct_kernels: usize,
    pub closure_size: BigUint,
    pub expected_size: BigUint,
    /// True iff the closure filled the monoid and the generating set size
    /// equals the kernel count.
    pub verdict: bool,
}

/// Builds the [`RankCertificate`] for the `n`-vertex path.
///
/// Panics unless `n >= 3`; the 1- and 2-vertex monoids have ranks 0 and 2
/// and no canonical letters.
pub fn certify_rank(n: usize) -> RankCertificate {
    assert!(n >= 3, "the rank certificate needs n >= 3");
    let distinct_kernels = corank_one_elements(n)
        .iter()
        .map(PathTransformation::kernel)
        .collect::<BTreeSet<_>>()
        .len();
    let generators = canonical_generators(n);
    let closure_size = BigUint::from(closure(n, &generators).len());
    let expected_size = wend::count(n);
    let verdict = closure_size == expected_size && generators.len() == distinct_kernels;
    RankCertificate {
        degree: n,
        generating_set_size: generators.len(),
        distinct_kernels,
        closure_size,
        expected_size,
        verdict,
    }
}
