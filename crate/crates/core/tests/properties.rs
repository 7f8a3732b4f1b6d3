//! Randomized and exhaustive invariants over small paths.
//!
//! The exhaustive parts iterate all n^n self-maps for small n; the random
//! parts drive proptest over arbitrary maps, same-degree tuples and monoid
//! members sampled through the fiber-size encoding.

use std::collections::BTreeSet;

use proptest::prelude::*;

use dipath::{generators, wend, Error, PathTransformation, WendEncoding};

/// Every self-map of `{1, .., n}` by odometer increment of the image list.
fn all_maps(n: usize) -> Vec<PathTransformation> {
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

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for _ in 0..n {
        for j in (1..=k).rev() {
            row[j] += row[j - 1];
        }
    }
    row[k]
}

/// Arbitrary self-map of a path with 1..=8 vertices.
fn any_map() -> impl Strategy<Value = PathTransformation> {
    (1..=8usize)
        .prop_flat_map(|n| proptest::collection::vec(1..=n, n))
        .prop_map(|images| PathTransformation::new(images).unwrap())
}

/// Pair of self-maps sharing one degree.
fn map_pair() -> impl Strategy<Value = (PathTransformation, PathTransformation)> {
    (1..=8usize)
        .prop_flat_map(|n| {
            (
                proptest::collection::vec(1..=n, n),
                proptest::collection::vec(1..=n, n),
            )
        })
        .prop_map(|(a, b)| {
            (
                PathTransformation::new(a).unwrap(),
                PathTransformation::new(b).unwrap(),
            )
        })
}

/// Triple of self-maps sharing one degree.
fn map_triple(
) -> impl Strategy<Value = (PathTransformation, PathTransformation, PathTransformation)> {
    (1..=8usize)
        .prop_flat_map(|n| {
            (
                proptest::collection::vec(1..=n, n),
                proptest::collection::vec(1..=n, n),
                proptest::collection::vec(1..=n, n),
            )
        })
        .prop_map(|(a, b, c)| {
            (
                PathTransformation::new(a).unwrap(),
                PathTransformation::new(b).unwrap(),
                PathTransformation::new(c).unwrap(),
            )
        })
}

/// Order-preserving self-map (sorted image list).
fn order_preserving_map() -> impl Strategy<Value = PathTransformation> {
    (1..=9usize)
        .prop_flat_map(|n| proptest::collection::vec(1..=n, n))
        .prop_map(|mut images| {
            images.sort_unstable();
            PathTransformation::new(images).unwrap()
        })
}

/// Uniformly shaped valid encoding: degree, rank, offset and a cut-point
/// set turned into fiber sizes.
fn member_encoding() -> impl Strategy<Value = WendEncoding> {
    (1..=9usize)
        .prop_flat_map(|n| (Just(n), 1..=n))
        .prop_flat_map(|(n, k)| {
            let cuts = proptest::sample::subsequence((1..n).collect::<Vec<_>>(), k - 1);
            (Just(n), 0..=(n - k), cuts)
        })
        .prop_map(|(n, offset, cuts)| {
            let mut parts = Vec::with_capacity(cuts.len() + 1);
            let mut prev = 0;
            for c in cuts {
                parts.push(c - prev);
                prev = c;
            }
            parts.push(n - prev);
            WendEncoding::new(n, offset, parts).unwrap()
        })
}

fn member() -> impl Strategy<Value = PathTransformation> {
    member_encoding().prop_map(|code| code.decode())
}

proptest! {
    #[test]
    fn composition_is_associative((f, g, h) in map_triple()) {
        prop_assert_eq!(f.compose(&g).compose(&h), f.compose(&g.compose(&h)));
    }

    #[test]
    fn identity_is_neutral(f in any_map()) {
        let id = PathTransformation::identity(f.degree());
        prop_assert_eq!(&id.compose(&f), &f);
        prop_assert_eq!(&f.compose(&id), &f);
    }

    #[test]
    fn composition_cannot_raise_rank((f, g) in map_pair()) {
        let rank = f.compose(&g).rank();
        prop_assert!(rank <= f.rank());
        prop_assert!(rank <= g.rank());
    }

    #[test]
    fn kernel_refines_through_composition((f, g) in map_pair()) {
        prop_assert!(f.kernel().refines(&f.compose(&g).kernel()));
    }

    #[test]
    fn order_preserving_kernels_have_consecutive_blocks(f in order_preserving_map()) {
        for block in f.kernel().blocks() {
            for pair in block.windows(2) {
                prop_assert_eq!(pair[1], pair[0] + 1, "{}", f);
            }
        }
    }

    #[test]
    fn membership_definitions_agree(f in any_map()) {
        prop_assert_eq!(
            f.is_weak_endomorphism(),
            f.is_weak_endomorphism_by_characterization(),
            "{}", f
        );
    }

    #[test]
    fn member_encoding_round_trips(f in member()) {
        let code = f.encode().unwrap();
        prop_assert_eq!(code.decode(), f);
    }

    #[test]
    fn encoding_member_round_trips(code in member_encoding()) {
        let f = code.decode();
        prop_assert!(f.is_weak_endomorphism(), "{}", f);
        prop_assert_eq!(f.encode().unwrap(), code);
    }

    #[test]
    fn classification_is_coherent(f in any_map()) {
        let report = f.classify();
        prop_assert_eq!(report.is_weak_endomorphism, f.is_weak_endomorphism());
        prop_assert_eq!(report.is_endomorphism, f.is_endomorphism());
        prop_assert_eq!(report.is_strong_endomorphism, f.is_strong_endomorphism());
        prop_assert_eq!(report.is_strong_weak_endomorphism, f.is_strong_weak_endomorphism());
        prop_assert_eq!(report.is_automorphism, f.is_automorphism());
        prop_assert_eq!(report.is_idempotent, f.is_idempotent());
        prop_assert_eq!(report.rank, f.rank());

        // containment chain between the classes
        prop_assert!(!report.is_automorphism || report.is_strong_endomorphism);
        prop_assert!(!report.is_strong_endomorphism || report.is_endomorphism);
        prop_assert!(!report.is_endomorphism || report.is_weak_endomorphism);
        prop_assert!(!report.is_strong_weak_endomorphism || report.is_weak_endomorphism);
        prop_assert!(!report.is_idempotent || report.is_regular);
    }

    #[test]
    fn members_have_interval_images(f in member()) {
        let report = f.classify();
        prop_assert!(report.is_weak_endomorphism);
        prop_assert_eq!(report.image_max - report.image_min + 1, report.rank);
    }

    #[test]
    fn pseudo_inverse_matches_regularity(f in member()) {
        match f.is_regular().unwrap() {
            true => {
                let back = f.pseudo_inverse().unwrap();
                prop_assert!(back.is_weak_endomorphism(), "{}", back);
                prop_assert_eq!(f.compose(&back).compose(&f), f);
            }
            false => prop_assert_eq!(f.pseudo_inverse(), Err(Error::NotRegular)),
        }
    }

    #[test]
    fn factorization_reproduces_members(f in member()) {
        if f.degree() >= 3 {
            let word = generators::factorize(&f).unwrap();
            prop_assert_eq!(word.evaluate(), f);
        }
    }
}

#[test]
fn associativity_exhausted_on_tiny_paths() {
    for n in 1..=3 {
        let maps = all_maps(n);
        for f in &maps {
            for g in &maps {
                let fg = f.compose(g);
                for h in &maps {
                    assert_eq!(fg.compose(h), f.compose(&g.compose(h)));
                }
            }
        }
    }
}

#[test]
fn enumeration_matches_membership_filter() {
    for n in 1..=6 {
        let enumerated: BTreeSet<_> = wend::enumerate(n).collect();
        let filtered: BTreeSet<_> = all_maps(n)
            .into_iter()
            .filter(PathTransformation::is_weak_endomorphism)
            .collect();
        assert_eq!(enumerated, filtered, "n={n}");
        assert_eq!(wend::count(n), enumerated.len().into(), "n={n}");
    }
}

#[test]
fn idempotent_census_matches_formula() {
    for n in 1..=8 {
        let found = wend::enumerate(n)
            .filter(PathTransformation::is_idempotent)
            .count();
        assert_eq!(found, n * (n + 1) / 2, "n={n}");
        assert_eq!(wend::count_idempotents(n), found.into(), "n={n}");
    }
}

#[test]
fn idempotence_means_squaring_fixes() {
    for n in 1..=5 {
        for f in all_maps(n) {
            assert_eq!(f.is_idempotent(), f.compose(&f) == f, "{f}");
        }
    }
}

#[test]
fn identity_is_the_only_member_of_full_rank() {
    for n in 1..=10 {
        let full: Vec<_> = wend::enumerate(n).filter(|f| f.rank() == n).collect();
        assert_eq!(full, vec![PathTransformation::identity(n)], "n={n}");
    }
}

#[test]
fn regular_members_have_ramp_shape() {
    // a regular member is pinned down by its first fiber size, its lowest
    // image point and its rank
    for n in 3..=7 {
        for f in wend::enumerate(n) {
            if !f.is_regular().unwrap() {
                continue;
            }
            let code = f.encode().unwrap();
            let first_fiber = code.parts()[0];
            let lowest = code.offset() + 1;
            let steps = code.rank() - 1;
            let rebuilt: Vec<usize> = (1..=n)
                .map(|x| lowest + x.saturating_sub(first_fiber).min(steps))
                .collect();
            assert_eq!(PathTransformation::new(rebuilt).unwrap(), f, "n={n}");
        }
    }
}

#[test]
fn two_vertex_monoid_is_explicit() {
    let found: BTreeSet<_> = wend::enumerate(2).collect();
    let expected: BTreeSet<PathTransformation> = ["[1,1]", "[1,2]", "[2,2]"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    assert_eq!(found, expected);
}

#[test]
fn composition_counts_follow_pascal() {
    for n in 1..=10 {
        for k in 1..=n {
            assert_eq!(
                wend::compositions(n, k).count() as u128,
                binomial(n - 1, k - 1),
                "n={n} k={k}"
            );
        }
    }
}
