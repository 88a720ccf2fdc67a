use cubetwist::rings::{element_of_norm, is_prime_element};
use cubetwist::symbols::{cubic_symbol, cubic_symbol_ideal, euler_symbol, quadratic_symbol};
use cubetwist::{QuadInt, Ring};
use proptest::prelude::*;

fn primary_cubic() -> impl Strategy<Value = QuadInt> {
    (-200i64..200, -200i64..200).prop_map(|(x, y)| QuadInt::eisenstein(3 * x + 1, 3 * y))
}

fn primary_gaussian() -> impl Strategy<Value = QuadInt> {
    // x + iy = 1 mod (1+i)^3: x odd, y even, x + y = 1 mod 4.
    (-200i64..200, -200i64..200).prop_map(|(a, b)| {
        let y = 2 * b;
        let x = 1 - y + 4 * a;
        QuadInt::gaussian(x, y)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn cubic_symbol_is_multiplicative_in_the_numerator(
        b in primary_cubic(),
        a1 in (-300i64..300, -300i64..300),
        a2 in (-300i64..300, -300i64..300),
    ) {
        let a1 = QuadInt::eisenstein(a1.0, a1.1);
        let a2 = QuadInt::eisenstein(a2.0, a2.1);
        let lhs = cubic_symbol(&(&a1 * &a2), &b).unwrap();
        let rhs = cubic_symbol(&a1, &b).unwrap().mul(cubic_symbol(&a2, &b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cubic_symbol_is_multiplicative_in_the_denominator(
        b1 in primary_cubic(),
        b2 in primary_cubic(),
        a in (-300i64..300, -300i64..300),
    ) {
        let a = QuadInt::eisenstein(a.0, a.1);
        let lhs = cubic_symbol(&a, &(&b1 * &b2)).unwrap();
        let rhs = cubic_symbol(&a, &b1).unwrap().mul(cubic_symbol(&a, &b2).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cubic_reciprocity(a in primary_cubic(), b in primary_cubic()) {
        prop_assert_eq!(cubic_symbol(&a, &b).unwrap(), cubic_symbol(&b, &a).unwrap());
    }

    #[test]
    fn quadratic_symbol_is_multiplicative(
        b in primary_gaussian(),
        a1 in (-300i64..300, -300i64..300),
        a2 in (-300i64..300, -300i64..300),
    ) {
        let a1 = QuadInt::gaussian(a1.0, a1.1);
        let a2 = QuadInt::gaussian(a2.0, a2.1);
        let lhs = quadratic_symbol(&(&a1 * &a2), &b).unwrap();
        let rhs = quadratic_symbol(&a1, &b).unwrap().mul(quadratic_symbol(&a2, &b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn quadratic_reciprocity(a in primary_gaussian(), b in primary_gaussian()) {
        prop_assert_eq!(quadratic_symbol(&a, &b).unwrap(), quadratic_symbol(&b, &a).unwrap());
    }

    #[test]
    fn symbol_depends_on_the_ideal_only(
        b in primary_cubic(),
        a in (-300i64..300, -300i64..300),
        k in 0usize..6,
    ) {
        let a = QuadInt::eisenstein(a.0, a.1);
        let u = &Ring::Eisenstein.units()[k];
        prop_assert_eq!(cubic_symbol_ideal(&a, &(&b * u)).unwrap(), cubic_symbol(&a, &b).unwrap());
    }
}

#[test]
fn oracle_agreement_at_medium_primes() {
    for p in [1009u64, 2017, 4999] {
        let pi = element_of_norm(p, Ring::Eisenstein).unwrap().primary_associate().unwrap();
        assert!(is_prime_element(&pi));
        for x in -6..6 {
            for y in -6..6 {
                let a = QuadInt::eisenstein(x, y);
                assert_eq!(cubic_symbol(&a, &pi).unwrap(), euler_symbol(&a, &pi, 3).unwrap());
            }
        }
    }
}
