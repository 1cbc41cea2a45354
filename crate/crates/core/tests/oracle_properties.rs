mod common;

use colorful_necklaces::{
    alpha, apply, bracelet_count, chi, exact_color_count, exact_period_count, necklace_count,
    necklace_count_components, Arrangement, Count, GroupElement, GroupKind, Oracle, S3Perm,
};
use num_bigint::BigUint;
use proptest::prelude::*;

use common::gcd;

#[test]
fn enumeration_cardinality() {
    let oracle = Oracle::default();
    for n in 1..=16 {
        let words = oracle.enumerate_colorful(n).unwrap();
        assert_eq!(
            Count::from(words.len() as u64),
            alpha(n).unwrap(),
            "n = {n}"
        );
    }
}

#[test]
fn burnside_consistency_of_scans() {
    let oracle = Oracle::default();
    for n in 1..=12 {
        let words = oracle.enumerate_colorful(n).unwrap();
        for kind in [GroupKind::Rotations, GroupKind::Dihedral] {
            let total: u64 = kind
                .elements(n)
                .unwrap()
                .iter()
                .map(|g| words.iter().filter(|w| apply(g, w).unwrap() == **w).count() as u64)
                .sum();
            let orbits = oracle.orbit_count(n, kind).unwrap().to_u64().unwrap();
            assert_eq!(total, kind.order(n) * orbits, "n = {n}, {kind:?}");
        }
    }
}

#[test]
fn conjugacy_reductions_hold_empirically() {
    let oracle = Oracle::default();
    for n in 1..=10u64 {
        let scan = |sigma, eps, shift: u64| {
            oracle
                .fixed_point_scan(&GroupElement::new(n, sigma, eps, shift as i64).unwrap())
                .unwrap()
        };
        for eps in [false, true] {
            for shift in 0..n {
                let t12 = scan(S3Perm::T12, eps, shift);
                assert_eq!(t12, scan(S3Perm::T13, eps, shift), "n = {n}");
                assert_eq!(t12, scan(S3Perm::T23, eps, shift), "n = {n}");
                assert_eq!(scan(S3Perm::C, eps, shift), scan(S3Perm::C2, eps, shift));
            }
        }
        for sigma in S3Perm::ALL {
            for shift in 0..n {
                assert_eq!(
                    scan(sigma, true, shift),
                    scan(sigma, true, shift % 2),
                    "n = {n}, sigma = {sigma}, shift = {shift}"
                );
            }
        }
    }
}

#[test]
fn components_match_scanned_rotation_sums() {
    let oracle = Oracle::default();
    for n in 1..=10u64 {
        let sum_over = |sigma| -> BigUint {
            (0..n)
                .map(|shift| {
                    let g = GroupElement::new(n, sigma, false, shift as i64).unwrap();
                    oracle.fixed_point_scan(&g).unwrap().into_biguint()
                })
                .sum()
        };
        let parts = necklace_count_components(n).unwrap();
        assert_eq!(parts.a.as_biguint(), &sum_over(S3Perm::Identity), "n = {n}");
        assert_eq!(parts.b.as_biguint(), &sum_over(S3Perm::T12), "n = {n}");
        assert_eq!(parts.c.as_biguint(), &sum_over(S3Perm::C), "n = {n}");
    }
}

#[test]
fn bracelets_never_exceed_necklaces() {
    for n in 1..=200 {
        assert!(
            bracelet_count(n).unwrap() <= necklace_count(n).unwrap(),
            "n = {n}"
        );
    }
}

#[test]
fn exact_color_counts_match_oracle() {
    // Exactly-three-color orbits counted directly.
    let oracle = Oracle::default();
    for n in 1..=12u64 {
        let words: Vec<_> = oracle
            .enumerate_colorful(n)
            .unwrap()
            .into_iter()
            .filter(|w| (1..=3).all(|c| w.letters().contains(&c)))
            .collect();
        for (kind, arrangement) in [
            (GroupKind::Rotations, Arrangement::Necklace),
            (GroupKind::Dihedral, Arrangement::Bracelet),
        ] {
            let group = kind.elements(n).unwrap();
            let mut canon: Vec<_> = words
                .iter()
                .map(|w| colorful_necklaces::oracle::canonical_form(w, &group).unwrap())
                .collect();
            canon.sort();
            canon.dedup();
            assert_eq!(
                exact_color_count(n, arrangement).unwrap(),
                canon.len() as u64,
                "n = {n}, {arrangement:?}"
            );
        }
    }
}

#[test]
fn exact_period_counts_are_consistent() {
    for arrangement in [Arrangement::Necklace, Arrangement::Bracelet] {
        for n in 1..=100u64 {
            let total: BigUint = (1..=n)
                .filter(|d| n % d == 0)
                .map(|d| exact_period_count(d, arrangement).unwrap().into_biguint())
                .sum();
            let direct = match arrangement {
                Arrangement::Necklace => necklace_count(n).unwrap(),
                Arrangement::Bracelet => bracelet_count(n).unwrap(),
            };
            assert_eq!(Count::from(total), direct);
        }
    }
}

/// The divisor weight written with cos^2(d pi / 2) sin^2(d pi / 3) instead of
/// indicator functions. Over residues mod 6 the product is exactly
/// [d even] * (3/4)[3 ∤ d], so the weight is 1 + [d even, 3 ∤ d].
#[test]
fn trigonometric_weight_matches_chi() {
    use std::f64::consts::PI;
    // exact squares over one period of each factor, as (numerator, denominator)
    let cos_sq = |d: u64| if d.is_multiple_of(2) { (1, 1) } else { (0, 1) };
    let sin_sq = |d: u64| if d.is_multiple_of(3) { (0, 1) } else { (3, 4) };
    for d in 1..=200u64 {
        let (cn, cd) = cos_sq(d);
        let (sn, sd) = sin_sq(d);
        let numeric = (d as f64 * PI / 2.0).cos().powi(2) * (d as f64 * PI / 3.0).sin().powi(2);
        assert!(
            (numeric - (cn * sn) as f64 / (cd * sd) as f64).abs() < 1e-9,
            "d = {d}"
        );
        // 1 + (4/3) * cos^2 * sin^2, as an exact fraction over 3 * cd * sd
        let denom = 3 * cd * sd;
        let weight_num = denom + 4 * cn * sn;
        assert_eq!(weight_num % denom, 0, "d = {d}");
        let weight = weight_num / denom;
        let expected = weight * gcd(d, 6);
        assert_eq!(u64::from(chi(d).unwrap()), expected, "d = {d}");
        let indicator = 1 + u64::from(d % 6 == 2 || d % 6 == 4);
        assert_eq!(u64::from(chi(d).unwrap()), gcd(d, 6) * indicator);
    }
}

fn element(n: u64) -> impl Strategy<Value = GroupElement> {
    (0..6usize, any::<bool>(), 0..n).prop_map(move |(s, eps, shift)| {
        GroupElement::new(n, S3Perm::ALL[s], eps, shift as i64).unwrap()
    })
}

fn action_case() -> impl Strategy<Value = (GroupElement, GroupElement, usize)> {
    (2u64..=8).prop_flat_map(|n| (element(n), element(n), 0usize..1000))
}

proptest! {
    #[test]
    fn action_is_compatible_with_composition((g, h, pick) in action_case()) {
        let words = Oracle::default().enumerate_colorful(g.n()).unwrap();
        let w = &words[pick % words.len()];
        let lhs = apply(&g, &apply(&h, w).unwrap()).unwrap();
        let rhs = apply(&g.compose(&h).unwrap(), w).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert!(colorful_necklaces::oracle::is_colorful(lhs.letters()));
        let back = apply(&g.inverse(), &apply(&g, w).unwrap()).unwrap();
        prop_assert_eq!(&back, w);
    }
}
