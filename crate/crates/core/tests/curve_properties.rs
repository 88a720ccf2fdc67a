use cubetwist::arith::is_cubefree;
use cubetwist::curves::{cubefree_part, fraction, search_points};
use num_rational::Ratio;
use proptest::prelude::*;

#[test]
fn search_is_monotone_in_the_height() {
    for d in [6i64, 7, 9, 19, 37, -12] {
        let small = search_points(d, 40);
        let large = search_points(d, 400);
        for p in &small {
            assert!(large.contains(p), "D={d} lost {p}");
        }
    }
}

#[test]
fn every_point_lies_on_the_curve() {
    for d in 1..=60i64 {
        for p in search_points(d, 100) {
            assert_eq!(p.x * p.x * p.x + p.y * p.y * p.y, Ratio::from_integer(d as i128));
        }
    }
}

#[test]
fn fractions_print_with_denominator() {
    assert_eq!(fraction(&Ratio::new(17, 21)), "17/21");
    assert_eq!(fraction(&Ratio::from_integer(2)), "2/1");
}

proptest! {
    #[test]
    fn cubefree_part_reconstructs(k in 1u64..10_000_000) {
        let (c, f) = cubefree_part(k);
        prop_assert_eq!(c * f * f * f, k);
        prop_assert!(is_cubefree(c as i64));
        prop_assert_eq!(cubefree_part(c), (c, 1));
    }

    #[test]
    fn sums_of_two_cubes_are_found(a in -60i64..60, b in -60i64..60) {
        let d = a.pow(3) + b.pow(3);
        prop_assume!(d != 0);
        let pts = search_points(d, 1);
        prop_assert!(pts.iter().any(|p| *p.x.numer() == a as i128 && *p.y.numer() == b as i128));
    }
}
