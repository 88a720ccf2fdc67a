use cubetwist::kubota::{
    check_homomorphism, gl2_kappa, gl3_factorizations, gl3_invariants, gl3_kappa, involution,
    multi_factorization_samples, sample_gamma, Convention, IntMatrix,
};
use cubetwist::{Error, QuadInt, Ring};
use proptest::prelude::*;

#[test]
fn gl3_kappa_is_multiplicative() {
    let report = check_homomorphism(3, Convention::Standard, 500, 4, 7).unwrap();
    assert!(report.all_passed(), "{report:?}");
}

#[test]
fn gl2_standard_is_multiplicative() {
    let report = check_homomorphism(2, Convention::Standard, 1000, 4, 7).unwrap();
    assert!(report.all_passed(), "{report:?}");
}

#[test]
fn gl2_literal_is_undefined_when_c_is_nonzero() {
    let report = check_homomorphism(2, Convention::TopRow, 200, 4, 7).unwrap();
    assert_eq!(report.failed, 0);
    assert!(report.errors > 150, "{report:?}");
}

#[test]
fn kappa_takes_every_value() {
    let mut seen3 = [false; 3];
    let mut seen2 = [false; 2];
    for seed in 0..200 {
        let g = sample_gamma(Ring::Eisenstein, 3, 4, seed).unwrap();
        seen3[gl3_kappa(&g).unwrap().exponent().unwrap() as usize] = true;
        let h = sample_gamma(Ring::Gaussian, 2, 4, seed).unwrap();
        seen2[gl2_kappa(&h, Convention::Standard).unwrap().exponent().unwrap() as usize] = true;
    }
    assert_eq!(seen3, [true; 3]);
    assert_eq!(seen2, [true; 2]);
}

#[test]
fn kappa_is_independent_of_factorization() {
    let samples = multi_factorization_samples(100, 3).unwrap();
    assert_eq!(samples.len(), 100);
    for g in &samples {
        let all = gl3_factorizations(g).unwrap();
        assert!(all.len() >= 2);
        let first = all[0].kappa().unwrap();
        for f in &all {
            f.validate().unwrap();
            assert_eq!(f.kappa().unwrap(), first, "{g}");
        }
    }
}

#[test]
fn invariants_hold_on_samples() {
    for seed in 0..1000 {
        let g = sample_gamma(Ring::Eisenstein, 3, 1 + (seed % 5) as usize, seed).unwrap();
        assert!(g.in_gamma3());
        gl3_invariants(&g).unwrap().validate().unwrap();
    }
}

#[test]
fn wrong_group_is_rejected() {
    let g = sample_gamma(Ring::Gaussian, 2, 3, 1).unwrap();
    assert!(matches!(gl3_kappa(&g), Err(Error::NotInGroup(_))));
    let h = IntMatrix::elementary(2, 0, 1, QuadInt::gaussian(1, 0));
    assert!(matches!(gl2_kappa(&h, Convention::Standard), Err(Error::NotInGroup(_))));
    assert!(sample_gamma(Ring::Gaussian, 3, 1, 1).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn involution_is_an_involutive_automorphism(s1 in any::<u64>(), s2 in any::<u64>(), len in 0usize..5) {
        let g = sample_gamma(Ring::Eisenstein, 3, len, s1).unwrap();
        let h = sample_gamma(Ring::Eisenstein, 3, len, s2).unwrap();
        prop_assert_eq!(involution(&involution(&g)), g.clone());
        prop_assert_eq!(involution(&(&g * &h)), &involution(&g) * &involution(&h));
    }

    #[test]
    fn inverse_has_inverse_kappa(seed in any::<u64>(), len in 1usize..5) {
        let g = sample_gamma(Ring::Eisenstein, 3, len, seed).unwrap();
        prop_assert_eq!(gl3_kappa(&g.inverse()).unwrap(), gl3_kappa(&g).unwrap().inverse());
        prop_assert!(g.in_gamma3());
    }
}
