//! Rational points on `x^3 + y^3 = D` and cube-free bookkeeping.
//!
//! A rational point in lowest terms has the form `(a/q, b/q)` with
//! `a^3 + b^3 = D q^3`. Writing `s = a + b` and
//! `t = a^2 - ab + b^2 = M / s` (`M = D q^3`), we get `(a - b)^2 = (4t - s^2)/3`
//! and `|s|^3 <= 4|M|`, so each `q` needs only the divisors of `M`.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

/// A point `(x, y)` with `x^3 + y^3 = D`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalPoint {
    pub x: Ratio<i128>,
    pub y: Ratio<i128>,
}

impl RationalPoint {
    /// Checks `x^3 + y^3 = d` exactly.
    pub fn new(x: Ratio<i128>, y: Ratio<i128>, d: i64) -> Result<Self> {
        let lhs = x * x * x + y * y * y;
        if lhs != Ratio::from_integer(d as i128) {
            return Err(Error::InvalidArgument(format!(
                "({x}, {y}) is not on x^3 + y^3 = {d}"
            )));
        }
        Ok(RationalPoint { x, y })
    }

    /// Common denominator of the coordinates.
    pub fn denominator(&self) -> i128 {
        self.x.denom().lcm(self.y.denom())
    }
}

/// Writes a fraction as `p/q`, including `q = 1`.
pub fn fraction(r: &Ratio<i128>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", fraction(&self.x), fraction(&self.y))
    }
}

/// All points with common denominator `q <= height_bound`, sorted by
/// `(q, numerator of x, numerator of y)`.
///
/// Returns an empty list for `D = 0` or `height_bound = 0`.
pub fn search_points(d: i64, height_bound: u64) -> Vec<RationalPoint> {
    let mut out = Vec::new();
    if d == 0 || height_bound == 0 {
        return out;
    }
    let spf = arith::spf_sieve(height_bound as usize);
    let d_factors = arith::factor_u64(d.unsigned_abs());
    let sign: i128 = if d < 0 { -1 } else { 1 };
    for q in 1..=height_bound {
        let mut factors = d_factors.clone();
        let mut rest = q as usize;
        while rest > 1 {
            let p = spf[rest] as u64;
            rest /= p as usize;
            match factors.iter_mut().find(|(r, _)| *r == p) {
                Some(entry) => entry.1 += 3,
                None => factors.push((p, 3)),
            }
        }
        let m_abs = d.unsigned_abs() as u128 * (q as u128).pow(3);
        let bound = 4 * m_abs;
        let qi = q as i128;
        let mut found: Vec<(i128, i128)> = Vec::new();
        for s_abs in divisors_with_cube_at_most(&factors, bound) {
            let s = sign * s_abs as i128;
            let m = sign * m_abs as i128;
            let t = m / s;
            let num = 4 * t - s * s;
            if num < 0 || num % 3 != 0 {
                continue;
            }
            let sq = num / 3;
            let r = arith::isqrt(sq as u128) as i128;
            if r * r != sq || (s - r) % 2 != 0 {
                continue;
            }
            for (a, b) in [((s + r) / 2, (s - r) / 2), ((s - r) / 2, (s + r) / 2)] {
                if a.gcd(&qi) == 1 && b.gcd(&qi) == 1 && !found.contains(&(a, b)) {
                    found.push((a, b));
                }
            }
        }
        found.sort_unstable();
        for (a, b) in found {
            let p = RationalPoint::new(Ratio::new(a, qi), Ratio::new(b, qi), d)
                .expect("constructed solutions satisfy the equation");
            out.push(p);
        }
    }
    out
}

fn divisors_with_cube_at_most(factors: &[(u64, u32)], bound: u128) -> Vec<u128> {
    let mut out = vec![1u128];
    for &(p, e) in factors {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for &dv in &out {
            let mut x = dv;
            for k in 0..=e {
                if k > 0 {
                    x *= p as u128;
                }
                if x.saturating_mul(x).saturating_mul(x) > bound {
                    break;
                }
                next.push(x);
            }
        }
        out = next;
    }
    out
}

/// `k = c f^3` with `c` cube-free.
pub fn cubefree_part(k: u64) -> (u64, u64) {
    assert!(k >= 1, "cubefree_part needs k >= 1");
    let mut c = 1u64;
    let mut f = 1u64;
    for (p, e) in arith::factor_u64(k) {
        c *= p.pow(e % 3);
        f *= p.pow(e / 3);
    }
    (c, f)
}

/// `D` in `{0, 1, -1, 2, -2}`, where the curve has non-trivial torsion or
/// degenerates.
#[allow(non_snake_case)]
pub fn is_trivial_D(d: i64) -> bool {
    d.abs() <= 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(a: i128, b: i128, q: i128) -> RationalPoint {
        RationalPoint {
            x: Ratio::new(a, q),
            y: Ratio::new(b, q),
        }
    }

    #[test]
    fn known_points() {
        let nine = search_points(9, 10);
        assert!(nine.contains(&pt(1, 2, 1)) && nine.contains(&pt(2, 1, 1)));
        assert!(search_points(6, 30).contains(&pt(17, 37, 21)));
        assert!(search_points(7, 1).contains(&pt(2, -1, 1)));
        assert!(search_points(-7, 1).contains(&pt(-2, 1, 1)));
        assert!(search_points(8, 1).contains(&pt(2, 0, 1)));
        assert!(search_points(3, 2000).is_empty());
    }

    #[test]
    fn points_are_sorted_and_reduced() {
        let pts = search_points(19, 200);
        assert!(!pts.is_empty());
        let keys: Vec<_> = pts
            .iter()
            .map(|p| (p.denominator(), *p.x.numer(), *p.y.numer()))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        for p in &pts {
            assert_eq!(*p.x.denom(), *p.y.denom());
        }
    }

    #[test]
    fn construction_checks_the_equation() {
        assert!(RationalPoint::new(Ratio::from_integer(1), Ratio::from_integer(1), 3).is_err());
        assert!(RationalPoint::new(Ratio::from_integer(1), Ratio::from_integer(1), 2).is_ok());
    }

    #[test]
    fn cube_free_parts() {
        assert_eq!(cubefree_part(24), (3, 2));
        assert_eq!(cubefree_part(7), (7, 1));
        assert_eq!(cubefree_part(72), (9, 2));
        assert_eq!(cubefree_part(1), (1, 1));
    }

    #[test]
    fn trivial_d() {
        assert!(is_trivial_D(1) && is_trivial_D(-2) && is_trivial_D(0));
        assert!(!is_trivial_D(3) && !is_trivial_D(-3));
    }
}
