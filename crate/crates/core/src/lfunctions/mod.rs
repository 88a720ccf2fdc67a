//! The L-series of `E_D : x^3 + y^3 = D`.
//!
//! `E_D` has complex multiplication by `Z[w]`, and
//! `L(E_D, s) = sum_a (D/a)_3 conj(a) N(a)^(-s)` over primary `a`. Grouping
//! the terms by norm gives integer coefficients `a_n`. Two independent
//! sources are provided: the character sum ([`hecke_coefficient`], exact, and
//! [`PrimeData`] for bulk tables) and point counting on the Weierstrass model
//! `y^2 = x^3 - 432 D^2` ([`pointcount_ap`]).
//!
//! Central values are in [`central`].

pub mod central;
mod table;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};
use crate::rings::QuadInt;
use crate::symbols::cubic_symbol;

pub use central::{l_value, root_number, LOptions, LValueEstimate, Sign};
pub use table::{prime_data, PrimeData};

/// The curve `x^3 + y^3 = D` for cube-free `D != 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistCurve {
    d: i64,
}

impl TwistCurve {
    pub fn new(d: i64) -> Result<Self> {
        check_cubefree(d)?;
        Ok(TwistCurve { d })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// `c` in the Weierstrass model `y^2 = x^3 + c`, namely `-432 D^2`.
    pub fn weierstrass_c(&self) -> i128 {
        -432 * (self.d as i128) * (self.d as i128)
    }

    /// The rational torsion subgroup is trivial for `|D| >= 3`.
    pub fn has_trivial_torsion(&self) -> bool {
        self.d.unsigned_abs() >= 3
    }
}

pub(crate) fn check_cubefree(d: i64) -> Result<()> {
    if arith::is_cubefree(d) {
        Ok(())
    } else {
        Err(Error::NotCubeFree(d))
    }
}

/// A Dirichlet coefficient `a_n` of `L(E_D, s)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HeckeCoefficient {
    pub n: u64,
    pub a_n: i64,
}

/// Primary `x + y w` of norm `n`.
pub fn primary_elements_of_norm(n: u64) -> Vec<QuadInt> {
    let n = n as i128;
    let mut out = Vec::new();
    // 4n = (2x - y)^2 + 3y^2.
    let ymax = arith::isqrt((4 * n / 3) as u128) as i128;
    for y in -ymax..=ymax {
        if y.rem_euclid(3) != 0 {
            continue;
        }
        let disc = 4 * n - 3 * y * y;
        if disc < 0 {
            continue;
        }
        let s = arith::isqrt(disc as u128) as i128;
        if s * s != disc {
            continue;
        }
        let mut xs = vec![(y + s) / 2];
        if s != 0 {
            xs.push((y - s) / 2);
        }
        for x in xs {
            if (2 * x - y).abs() == s && x.rem_euclid(3) == 1 {
                out.push(QuadInt::eisenstein(x as i64, y as i64));
            }
        }
    }
    out
}

/// `a_n = sum (D/a)_3 conj(a)` over primary `a` of norm `n`, evaluated from
/// the definition with exact residue symbols.
pub fn hecke_coefficient(d: i64, n: u64) -> Result<HeckeCoefficient> {
    check_cubefree(d)?;
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let dz = QuadInt::eisenstein(d, 0);
    let mut acc = QuadInt::eisenstein(0, 0);
    for a in primary_elements_of_norm(n) {
        let v = cubic_symbol(&dz, &a)?;
        if let Some(k) = v.exponent() {
            let w = QuadInt::eisenstein(0, 1).pow(k as u32);
            acc = &acc + &(&w * &a.conj());
        }
    }
    debug_assert!(acc.is_rational(), "coefficient sum {acc} is not rational");
    let a_n = acc.x().to_i64().expect("coefficient fits in i64");
    Ok(HeckeCoefficient { n, a_n })
}

/// `a_p = p + 1 - #E(F_p)` for `E : y^2 = x^3 - 432 D^2`, by counting points.
pub fn pointcount_ap(d: i64, p: u64) -> Result<i64> {
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    if p == 2 || p == 3 || d.rem_euclid(p as i64) == 0 {
        return Err(Error::InvalidArgument(format!(
            "p = {p} divides 6D for D = {d}"
        )));
    }
    if p > 50_000_000 {
        return Err(Error::InvalidArgument(format!("p = {p} is too large to count points")));
    }
    let pi = p as i64;
    let c = (-432i128 * (d as i128) * (d as i128)).rem_euclid(p as i128) as i64;
    // chi[t] = number of y with y^2 = t, minus one.
    let mut sq = vec![-1i8; p as usize];
    for y in 0..(pi + 1) / 2 {
        sq[(y * y % pi) as usize] = 1;
    }
    sq[0] = 0;
    let mut sum = 0i64;
    for x in 0..pi {
        let t = ((x * x % pi) * x + c) % pi;
        sum += sq[t as usize] as i64;
    }
    Ok(-sum)
}

/// `a_1..=a_m` for `D`, computed from the shared prime tables.
pub fn coefficients(d: i64, m: usize) -> Result<Vec<i64>> {
    check_cubefree(d)?;
    Ok(prime_data(m).coefficients(d, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn definition_examples() {
        assert_eq!(hecke_coefficient(1, 7).unwrap().a_n, -1);
        assert_eq!(hecke_coefficient(1, 5).unwrap().a_n, 0);
        assert_eq!(hecke_coefficient(1, 1).unwrap().a_n, 1);
        assert_eq!(hecke_coefficient(1, 25).unwrap().a_n, -5);
        assert_eq!(hecke_coefficient(7, 7).unwrap().a_n, 0);
        assert_eq!(hecke_coefficient(2, 3).unwrap().a_n, 0);
        assert_eq!(hecke_coefficient(8, 7), Err(Error::NotCubeFree(8)));
    }

    #[test]
    fn pointcount_examples() {
        assert_eq!(pointcount_ap(1, 7).unwrap(), -1);
        assert_eq!(pointcount_ap(1, 5).unwrap(), 0);
        assert!(pointcount_ap(5, 5).is_err());
        assert!(pointcount_ap(1, 9).is_err());
    }

    #[test]
    fn norm_enumeration() {
        assert_eq!(primary_elements_of_norm(7).len(), 2);
        assert_eq!(primary_elements_of_norm(1), vec![QuadInt::eisenstein(1, 0)]);
        assert_eq!(primary_elements_of_norm(4), vec![QuadInt::eisenstein(-2, 0)]);
        assert_eq!(primary_elements_of_norm(49).len(), 3);
        assert!(primary_elements_of_norm(3).is_empty());
    }

    #[test]
    fn table_matches_definition() {
        for d in [1i64, 2, 3, 5, 6, 7, 10, -11, 12, 100] {
            let table = coefficients(d, 3000).unwrap();
            for n in 1..=3000u64 {
                assert_eq!(table[n as usize], hecke_coefficient(d, n).unwrap().a_n, "D={d} n={n}");
            }
        }
    }
}
