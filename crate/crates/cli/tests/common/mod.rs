//! Brute-force oracles for the acceptance suite.
//!
//! Everything here recomputes the class definitions from scratch on raw
//! image lists, quantifying over all ordered vertex pairs, so the library's
//! single-pass predicates are checked against an independent route.

use dipath::PathTransformation;

/// Every self-map of `{1, .., n}` by odometer increment of the image list.
pub fn all_maps(n: usize) -> Vec<PathTransformation> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut images = vec![1usize; n];
    'outer: loop {
        out.push(PathTransformation::new(images.clone()).unwrap());
        let mut idx = n;
        loop {
            if idx == 0 {
                break 'outer;
            }
            idx -= 1;
            if images[idx] < n {
                images[idx] += 1;
                for v in &mut images[idx + 1..] {
                    *v = 1;
                }
                continue 'outer;
            }
        }
    }
    out
}

fn arc(u: usize, v: usize) -> bool {
    v == u + 1
}

fn at(f: &PathTransformation, x: usize) -> usize {
    f.images()[x - 1]
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |u| (1..=n).map(move |v| (u, v)))
}

/// Arcs map to arcs.
pub fn oracle_end(f: &PathTransformation) -> bool {
    pairs(f.degree()).all(|(u, v)| !arc(u, v) || arc(at(f, u), at(f, v)))
}

/// Arcs map to arcs or collapse.
pub fn oracle_wend(f: &PathTransformation) -> bool {
    pairs(f.degree()).all(|(u, v)| !arc(u, v) || at(f, u) == at(f, v) || arc(at(f, u), at(f, v)))
}

/// Arcs map to arcs and non-arcs to non-arcs.
pub fn oracle_send(f: &PathTransformation) -> bool {
    pairs(f.degree()).all(|(u, v)| arc(u, v) == arc(at(f, u), at(f, v)))
}

/// Image arcs come exactly from uncollapsed arcs.
pub fn oracle_swend(f: &PathTransformation) -> bool {
    pairs(f.degree()).all(|(u, v)| {
        let fu = at(f, u);
        let fv = at(f, v);
        (arc(u, v) && fu != fv) == arc(fu, fv)
    })
}

/// Surjective (hence bijective) and strong.
pub fn oracle_aut(f: &PathTransformation) -> bool {
    let n = f.degree();
    let mut seen = vec![false; n + 1];
    for x in 1..=n {
        seen[at(f, x)] = true;
    }
    seen[1..].iter().all(|&hit| hit) && oracle_send(f)
}

/// Composition recomputed pointwise, left map applied first.
pub fn oracle_compose(f: &PathTransformation, g: &PathTransformation) -> PathTransformation {
    assert_eq!(f.degree(), g.degree());
    let images = (1..=f.degree()).map(|x| at(g, at(f, x))).collect();
    PathTransformation::new(images).unwrap()
}
