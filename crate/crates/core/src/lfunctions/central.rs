//! Smoothed central values `L(E_D, 1)`.
//!
//! With `Lambda(s) = (sqrt(N)/(2 pi))^s Gamma(s) L(s) = eps Lambda(2 - s)`,
//! for every `t > 0`
//!
//! ```text
//! L(1) = G(t) + eps G(1/t),   G(t) = sum a_n/n exp(-2 pi n t / sqrt(N)).
//! ```
//!
//! At `t = 1` this is `(1 + eps) G(1)`. The conductor is `N = 3^e r^2` with
//! `r` the product of the primes `p != 3` dividing `D`; the exponent `e` in
//! `2..=5` and the sign `eps` are chosen as the pair for which the identity
//! above holds best at `t = 1` versus `t = smoothing_t`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{check_cubefree, prime_data};
use crate::arith;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
    Undetermined,
}

impl Sign {
    pub fn as_i8(self) -> Option<i8> {
        match self {
            Sign::Plus => Some(1),
            Sign::Minus => Some(-1),
            Sign::Undetermined => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
            Sign::Undetermined => "undetermined",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+1" | "1" => Ok(Sign::Plus),
            "-1" => Ok(Sign::Minus),
            "undetermined" | "0" | "?" => Ok(Sign::Undetermined),
            other => Err(Error::Parse {
                input: other.to_string(),
                reason: "expected +1, -1 or undetermined".into(),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LOptions {
    /// Terms are summed up to `cutoff_mult * sqrt(N)`; the second estimate
    /// uses half of that.
    pub cutoff_mult: f64,
    pub vanish_threshold: f64,
    /// The second smoothing parameter of the conductor/sign scan.
    pub smoothing_t: f64,
    /// Cutoff multiplier used during the scan.
    pub scan_mult: f64,
    /// Largest functional-equation discrepancy accepted as a determined sign.
    pub sign_tolerance: f64,
}

impl Default for LOptions {
    fn default() -> Self {
        LOptions {
            cutoff_mult: 20.0,
            vanish_threshold: 1e-3,
            smoothing_t: 1.2,
            scan_mult: 8.0,
            sign_tolerance: 1e-6,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LValueEstimate {
    pub d: i64,
    pub value: f64,
    /// The estimate at half the cutoff.
    pub value_half_cutoff: f64,
    pub error_bound: f64,
    pub sign: Sign,
    pub conductor_used: u64,
    /// Number of terms summed, `cutoff_mult * sqrt(N)`.
    pub cutoff: f64,
    pub vanished: bool,
    /// Functional-equation discrepancy of the chosen conductor and sign.
    pub consistency: f64,
    /// Values of the two best-scoring (conductor, sign) candidates when the
    /// sign could not be determined.
    pub candidates: Option<[f64; 2]>,
}

struct Candidate {
    exponent: u32,
    eps: f64,
    discrepancy: f64,
}

/// Product of the primes `p != 3` dividing `n`.
fn radical_prime_to_3(n: u64) -> u64 {
    let r = arith::radical(n);
    if r % 3 == 0 {
        r / 3
    } else {
        r
    }
}

/// `sum_{n <= m} c_n q^n` for `q = exp(-2 pi t / sqrt(N))`.
fn smoothed(c: &[f64], m: usize, t: f64, sqrt_n: f64) -> f64 {
    let q = (-2.0 * std::f64::consts::PI * t / sqrt_n).exp();
    let mut pw = 1.0;
    let mut acc = 0.0;
    for &cn in &c[1..=m.min(c.len() - 1)] {
        pw *= q;
        acc += cn * pw;
    }
    acc
}

/// Bound on `(1+eps) sum_{n > m} |a_n|/n exp(-2 pi n / sqrt(N))` using
/// `|a_n| <= d(n) sqrt(n) <= 2n`.
fn tail_bound(m: usize, sqrt_n: f64) -> f64 {
    let q = (-2.0 * std::f64::consts::PI / sqrt_n).exp();
    4.0 * q.powf(m as f64 + 1.0) / (1.0 - q)
}

/// Numerical `L(E_D, 1)`. `D` and `-D` give isomorphic curves.
pub fn l_value(d: i64, options: &LOptions) -> Result<LValueEstimate> {
    check_cubefree(d)?;
    let (cm, sm) = (options.cutoff_mult, options.scan_mult);
    if !(cm > 0.0 && sm > 0.0 && options.smoothing_t > 0.0 && options.smoothing_t != 1.0) {
        return Err(Error::InvalidArgument(
            "cutoff multipliers must be positive and smoothing_t must differ from 1".into(),
        ));
    }
    let dabs = d.unsigned_abs();
    let r = radical_prime_to_3(dabs) as f64;
    let sqrt_cond = |e: u32| 3f64.powf(e as f64 / 2.0) * r;
    let size = (cm.max(sm) * sqrt_cond(5)).ceil() as usize + 1;
    let a = prime_data(size).coefficients(dabs as i64, size);
    let c: Vec<f64> = a
        .iter()
        .enumerate()
        .map(|(n, &an)| if n == 0 { 0.0 } else { an as f64 / n as f64 })
        .collect();

    let t = options.smoothing_t;
    let mut candidates = Vec::with_capacity(8);
    for e in 2..=5u32 {
        let s = sqrt_cond(e);
        // The slowest decaying sum is G(1/t) when t > 1.
        let m = (sm * s * t.max(1.0 / t)).ceil() as usize;
        let g1 = smoothed(&c, m, 1.0, s);
        let gt = smoothed(&c, m, t, s);
        let ginv = smoothed(&c, m, 1.0 / t, s);
        for eps in [1.0, -1.0] {
            let lhs = (1.0 + eps) * g1;
            let rhs = gt + eps * ginv;
            candidates.push(Candidate {
                exponent: e,
                eps,
                discrepancy: (lhs - rhs).abs(),
            });
        }
    }
    candidates.sort_by(|x, y| x.discrepancy.total_cmp(&y.discrepancy));

    let evaluate = |cand: &Candidate| {
        let s = sqrt_cond(cand.exponent);
        let m = (cm * s).ceil() as usize;
        let full = (1.0 + cand.eps) * smoothed(&c, m, 1.0, s);
        let half = (1.0 + cand.eps) * smoothed(&c, m / 2, 1.0, s);
        (full, half, m)
    };
    let best = &candidates[0];
    let (value, half, m) = evaluate(best);
    let sign = if best.discrepancy <= options.sign_tolerance {
        if best.eps > 0.0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    } else {
        Sign::Undetermined
    };
    let candidate_values = (sign == Sign::Undetermined).then(|| [value, evaluate(&candidates[1]).0]);
    let s = sqrt_cond(best.exponent);
    let error_bound = (value - half).abs() + (1.0 + best.eps) / 2.0 * tail_bound(m, s) + best.discrepancy;
    let th = options.vanish_threshold;
    Ok(LValueEstimate {
        d,
        value,
        value_half_cutoff: half,
        error_bound,
        sign,
        conductor_used: 3u64.pow(best.exponent) * (r as u64) * (r as u64),
        cutoff: cm * s,
        vanished: value.abs() <= th && half.abs() <= th,
        consistency: best.discrepancy,
        candidates: candidate_values,
    })
}

/// The sign of the functional equation, as found by [`l_value`].
pub fn root_number(d: i64) -> Result<Sign> {
    Ok(l_value(d, &LOptions::default())?.sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        let o = LOptions::default();
        let one = l_value(1, &o).unwrap();
        assert!(one.value > 0.3 && !one.vanished, "{one:?}");
        assert_eq!(one.sign, Sign::Plus);
        let seven = l_value(7, &o).unwrap();
        assert!(seven.vanished, "{seven:?}");
        assert_eq!(seven.sign, Sign::Minus);
        assert_eq!(l_value(8, &o), Err(Error::NotCubeFree(8)));
        assert_eq!(l_value(-2, &o).unwrap().value, l_value(2, &o).unwrap().value);
    }

    #[test]
    fn sign_round_trip() {
        for s in [Sign::Plus, Sign::Minus, Sign::Undetermined] {
            assert_eq!(s.to_string().parse::<Sign>().unwrap(), s);
        }
    }
}
