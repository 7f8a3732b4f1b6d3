//! The five endomorphism classes of the directed path, and the structure of
//! the weak endomorphism monoid.
//!
//! The directed path on `n` vertices has vertex set `{1, .., n}` and arc set
//! `{(i, i+1) : 1 <= i < n}`. For a transformation `f` of the vertex set,
//! quantifying a condition over all ordered pairs `(u, v)` yields five nested
//! classes:
//!
//! * endomorphism: an arc `(u, v)` forces an arc `(uf, vf)`;
//! * weak endomorphism: an arc `(u, v)` with `uf != vf` forces an arc
//!   `(uf, vf)` (arcs may be collapsed);
//! * strong endomorphism: `(u, v)` is an arc iff `(uf, vf)` is;
//! * strong weak endomorphism: `(u, v)` is an uncollapsed arc iff `(uf, vf)`
//!   is an arc;
//! * automorphism: a bijective strong endomorphism.
//!
//! Weak endomorphisms are exactly the order-preserving maps whose image is an
//! interval; everything else here builds on that shape. Each member is coded
//! by the interval offset plus the integer composition of fiber sizes
//! ([`WendEncoding`]), which drives [`enumerate`], [`count`] and the
//! classification of idempotent and regular elements.

use num_bigint::BigUint;

use crate::{Error, PathTransformation};

/// Arc test for the directed path; vertices are assumed in range.
fn is_arc(u: usize, v: usize) -> bool {
    v == u + 1
}

/// True iff a sorted list of distinct values is a set of consecutive integers.
fn is_interval(sorted: &[usize]) -> bool {
    sorted[sorted.len() - 1] - sorted[0] + 1 == sorted.len()
}

/// `x <- base + clamp(x - start, 0, len)`: constant `base` up to `start`,
/// then one step per point for `len` steps, then constant again.
fn ramp(n: usize, start: usize, base: usize, len: usize) -> PathTransformation {
    let images = (1..=n)
        .map(|x| base + x.saturating_sub(start).min(len))
        .collect();
    PathTransformation::new(images).expect("a ramp with valid parameters stays inside 1..=n")
}

impl PathTransformation {
    /// Membership in the weak endomorphism monoid, from the arc condition:
    /// every step `(i+1)f - if` is 0 or 1.
    pub fn is_weak_endomorphism(&self) -> bool {
        self.images()
            .windows(2)
            .all(|w| w[1] == w[0] || w[1] == w[0] + 1)
    }

    /// Same membership through the structural characterization:
    /// order-preserving with an interval image.
    pub fn is_weak_endomorphism_by_characterization(&self) -> bool {
        self.is_order_preserving() && is_interval(&self.image_set())
    }

    /// True iff every arc maps to an arc.
    pub fn is_endomorphism(&self) -> bool {
        let n = self.degree();
        (1..=n).all(|u| (1..=n).all(|v| !is_arc(u, v) || is_arc(self.apply(u), self.apply(v))))
    }

    /// True iff `(u, v)` is an arc exactly when `(uf, vf)` is.
    pub fn is_strong_endomorphism(&self) -> bool {
        let n = self.degree();
        (1..=n).all(|u| (1..=n).all(|v| is_arc(u, v) == is_arc(self.apply(u), self.apply(v))))
    }

    /// True iff `(u, v)` is an arc with `uf != vf` exactly when `(uf, vf)`
    /// is an arc.
    pub fn is_strong_weak_endomorphism(&self) -> bool {
        let n = self.degree();
        (1..=n).all(|u| {
            (1..=n).all(|v| {
                let fu = self.apply(u);
                let fv = self.apply(v);
                (is_arc(u, v) && fu != fv) == is_arc(fu, fv)
            })
        })
    }

    /// True iff the map is a bijective strong endomorphism.
    pub fn is_automorphism(&self) -> bool {
        self.is_bijective() && self.is_strong_endomorphism()
    }

    /// True iff every image point is fixed; equivalent to `f f = f`.
    pub fn is_idempotent(&self) -> bool {
        self.image_set().iter().all(|&x| self.apply(x) == x)
    }

    /// Regularity inside the weak endomorphism monoid: true iff every image
    /// point whose fiber has more than one element is the least or greatest
    /// point of the image.
    ///
    /// Errors with [`Error::NotWeakEndomorphism`] for maps outside the
    /// monoid.
    pub fn is_regular(&self) -> Result<bool, Error> {
        if !self.is_weak_endomorphism() {
            return Err(Error::NotWeakEndomorphism);
        }
        let image = self.image_set();
        let lo = image[0];
        let hi = image[image.len() - 1];
        let mut fiber_size = vec![0usize; self.degree() + 1];
        for &value in self.images() {
            fiber_size[value] += 1;
        }
        Ok(image
            .iter()
            .all(|&x| fiber_size[x] <= 1 || x == lo || x == hi))
    }

    /// A weak endomorphism `b` with `f b f = f`.
    ///
    /// A regular element is a double ramp: constant `j` on `1..=i`, then one
    /// step per point up to `j + k`, then constant. The returned map is the
    /// mirror ramp with `i` and `j` exchanged. Errors if `self` is not a
    /// weak endomorphism or not regular.
    pub fn pseudo_inverse(&self) -> Result<PathTransformation, Error> {
        if !self.is_regular()? {
            return Err(Error::NotRegular);
        }
        let code = self.encode().expect("regular elements are members");
        let j = code.offset() + 1; // least image point
        let i = code.parts()[0]; // greatest point of its fiber
        let k = code.parts().len() - 1; // rank - 1
        Ok(ramp(self.degree(), j, i, k))
    }

    /// The offset/composition code of a weak endomorphism.
    ///
    /// Errors with [`Error::NotWeakEndomorphism`] for maps outside the
    /// monoid.
    pub fn encode(&self) -> Result<WendEncoding, Error> {
        if !self.is_weak_endomorphism() {
            return Err(Error::NotWeakEndomorphism);
        }
        let mut parts = Vec::new();
        let mut run = 1usize;
        for w in self.images().windows(2) {
            if w[1] == w[0] {
                run += 1;
            } else {
                parts.push(run);
                run = 1;
            }
        }
        parts.push(run);
        // members are weakly increasing, so the first image is the least
        let offset = self.images()[0] - 1;
        WendEncoding::new(self.degree(), offset, parts)
    }

    /// Evaluates every class predicate plus idempotency, regularity, rank
    /// and image bounds in one pass.
    ///
    /// The `is_regular` flag is regularity inside the weak endomorphism
    /// monoid when the map belongs to it. For maps outside, it falls back to
    /// idempotency: an idempotent is regular in any monoid containing it,
    /// and no stronger claim is made.
    pub fn classify(&self) -> ClassificationReport {
        let image = self.image_set();
        let is_weak = self.is_weak_endomorphism();
        let is_idempotent = self.is_idempotent();
        ClassificationReport {
            is_endomorphism: self.is_endomorphism(),
            is_weak_endomorphism: is_weak,
            is_strong_endomorphism: self.is_strong_endomorphism(),
            is_strong_weak_endomorphism: self.is_strong_weak_endomorphism(),
            is_automorphism: self.is_automorphism(),
            is_idempotent,
            is_regular: if is_weak {
                self.is_regular().expect("membership just checked")
            } else {
                is_idempotent
            },
            rank: image.len(),
            image_min: image[0],
            image_max: image[image.len() - 1],
        }
    }
}

/// Offset/composition code of a weak endomorphism.
///
/// A member of rank `k` is constant on `k` consecutive blocks of points and
/// its image is the interval `{offset + 1, .., offset + k}`; part `t` of the
/// composition is the fiber size of `offset + t`. The code determines the
/// map and vice versa.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WendEncoding {
    degree: usize,
    offset: usize,
    parts: Vec<usize>,
}

impl WendEncoding {
    /// Validates and builds a code.
    ///
    /// Requirements: the parts are positive and sum to `degree`, and
    /// `offset + parts.len() <= degree` so the image interval fits.
    pub fn new(degree: usize, offset: usize, parts: Vec<usize>) -> Result<Self, Error> {
        if degree == 0 {
            return Err(Error::InvalidEncoding("degree must be positive".into()));
        }
        if parts.is_empty() {
            return Err(Error::InvalidEncoding(
                "composition must be nonempty".into(),
            ));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidEncoding(
                "composition parts must be positive".into(),
            ));
        }
        let sum: usize = parts.iter().sum();
        if sum != degree {
            return Err(Error::InvalidEncoding(format!(
                "composition sums to {sum}, expected {degree}"
            )));
        }
        if offset + parts.len() > degree {
            return Err(Error::InvalidEncoding(format!(
                "offset {offset} is too large for {} parts of degree {degree}",
                parts.len()
            )));
        }
        Ok(Self {
            degree,
            offset,
            parts,
        })
    }

    /// Number of vertices of the coded map's path.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Least image point minus one.
    pub fn offset(&self) -> usize {
        self.offset
    }

    /// Fiber sizes of the image points, in image order.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Rank of the coded map.
    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    /// The weak endomorphism this code stands for. Total: codes are
    /// validated on construction.
    pub fn decode(&self) -> PathTransformation {
        let mut images = Vec::with_capacity(self.degree);
        for (t, &size) in self.parts.iter().enumerate() {
            images.extend(std::iter::repeat_n(self.offset + t + 1, size));
        }
        PathTransformation::new(images).expect("valid codes decode to valid maps")
    }
}

/// Iterator over the compositions of `n` into `k` positive parts, in
/// colexicographic order of the partial-sum sets (the final part shrinks
/// first). Yields nothing unless `1 <= k <= n`.
pub fn compositions(n: usize, k: usize) -> Compositions {
    let state = if (1..=n).contains(&k) {
        CompositionState::Fresh
    } else {
        CompositionState::Done
    };
    Compositions {
        n,
        k,
        bars: Vec::new(),
        state,
    }
}

/// See [`compositions`].
#[derive(Debug, Clone)]
pub struct Compositions {
    n: usize,
    k: usize,
    /// `k - 1` strictly increasing cut points in `1..=n-1`.
    bars: Vec<usize>,
    state: CompositionState,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CompositionState {
    Fresh,
    Running,
    Done,
}

impl Compositions {
    fn parts(&self) -> Vec<usize> {
        let mut parts = Vec::with_capacity(self.k);
        let mut prev = 0;
        for &bar in &self.bars {
            parts.push(bar - prev);
            prev = bar;
        }
        parts.push(self.n - prev);
        parts
    }

    /// Colex successor of the cut-point set; false when exhausted.
    fn advance(&mut self) -> bool {
        for t in 0..self.bars.len() {
            let bound = if t + 1 < self.bars.len() {
                self.bars[t + 1]
            } else {
                self.n
            };
            if self.bars[t] + 1 < bound {
                self.bars[t] += 1;
                for s in 0..t {
                    self.bars[s] = s + 1;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for Compositions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        match self.state {
            CompositionState::Done => None,
            CompositionState::Fresh => {
                self.bars = (1..self.k).collect();
                self.state = CompositionState::Running;
                Some(self.parts())
            }
            CompositionState::Running => {
                if self.advance() {
                    Some(self.parts())
                } else {
                    self.state = CompositionState::Done;
                    None
                }
            }
        }
    }
}

/// Every weak endomorphism of the `n`-vertex path, each exactly once:
/// outer loop image size `k`, then image offset, then fiber composition in
/// colex order.
///
/// Panics if `n == 0`.
pub fn enumerate(n: usize) -> impl Iterator<Item = PathTransformation> {
    assert!(n >= 1, "the path needs at least one vertex");
    (1..=n).flat_map(move |k| {
        (0..=n - k).flat_map(move |offset| {
            compositions(n, k).map(move |parts| {
                WendEncoding::new(n, offset, parts)
                    .expect("enumerated codes are valid")
                    .decode()
            })
        })
    })
}

/// Size of the weak endomorphism monoid of the `n`-vertex path:
/// `sum over k of (n - k + 1) * C(n-1, k-1)`, one term per image size.
///
/// Panics if `n == 0`.
pub fn count(n: usize) -> BigUint {
    assert!(n >= 1, "the path needs at least one vertex");
    let mut total = BigUint::from(0u32);
    let mut binom = BigUint::from(1u32); // C(n-1, k-1), starting at k = 1
    for k in 1..=n {
        total += BigUint::from(n - k + 1) * &binom;
        binom = binom * BigUint::from(n - k) / BigUint::from(k);
    }
    total
}

/// Closed form `(n + 1) * 2^(n-2)` for the monoid size; defined for
/// `n >= 2`, where it agrees with [`count`].
pub fn count_closed_form(n: usize) -> Option<BigUint> {
    (n >= 2).then(|| BigUint::from(n + 1) << (n - 2))
}

/// Number of idempotent weak endomorphisms: `n (n + 1) / 2`, one per
/// nonempty subinterval of `{1, .., n}`.
///
/// Panics if `n == 0`.
pub fn count_idempotents(n: usize) -> BigUint {
    assert!(n >= 1, "the path needs at least one vertex");
    BigUint::from(n) * BigUint::from(n + 1) / BigUint::from(2u32)
}

/// Outcome of classifying one transformation against the endomorphism
/// classes of the directed path.
///
/// Flags satisfy the containments: automorphism implies strong endomorphism
/// implies endomorphism implies weak endomorphism; strong weak endomorphism
/// implies weak endomorphism; idempotent implies regular. When
/// `is_weak_endomorphism` holds, `image_max - image_min + 1 == rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub is_endomorphism: bool,
    pub is_weak_endomorphism: bool,
    pub is_strong_endomorphism: bool,
    pub is_strong_weak_endomorphism: bool,
    pub is_automorphism: bool,
    pub is_idempotent: bool,
    /// See [`PathTransformation::classify`] for the meaning outside the
    /// weak endomorphism monoid.
    pub is_regular: bool,
    pub rank: usize,
    pub image_min: usize,
    pub image_max: usize,
}
