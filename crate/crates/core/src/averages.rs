//! Statistics of central values over families of twists.
//!
//! Every routine reads central values through the [`CentralValues`] trait, so
//! callers decide whether values are computed on demand, read from a
//! precomputed table, or served from a persistent cache.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::curves::cubefree_part;
use crate::error::{Error, Result};
use crate::lfunctions::{l_value, LOptions, LValueEstimate, Sign};

/// A source of central values `L(E_D, 1)`.
pub trait CentralValues {
    fn estimate(&self, d: i64) -> Result<LValueEstimate>;
}

/// Computes every value when asked.
#[derive(Debug, Clone, Copy, Default)]
pub struct OnDemand {
    pub options: LOptions,
}

impl CentralValues for OnDemand {
    fn estimate(&self, d: i64) -> Result<LValueEstimate> {
        l_value(d, &self.options)
    }
}

/// A fixed table of estimates; missing entries are an error.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValueTable {
    values: BTreeMap<i64, LValueEstimate>,
}

impl ValueTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Estimates for every cube-free `D` in `1..=xmax`.
    pub fn compute(xmax: u64, options: &LOptions) -> Result<Self> {
        let mut t = Self::new();
        for d in 1..=xmax as i64 {
            if arith::is_cubefree(d) {
                t.insert(l_value(d, options)?);
            }
        }
        Ok(t)
    }

    pub fn insert(&mut self, e: LValueEstimate) {
        self.values.insert(e.d, e);
    }

    pub fn get(&self, d: i64) -> Option<&LValueEstimate> {
        self.values.get(&d)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &LValueEstimate> {
        self.values.values()
    }
}

impl FromIterator<LValueEstimate> for ValueTable {
    fn from_iter<I: IntoIterator<Item = LValueEstimate>>(iter: I) -> Self {
        let mut t = Self::new();
        for e in iter {
            t.insert(e);
        }
        t
    }
}

impl CentralValues for ValueTable {
    fn estimate(&self, d: i64) -> Result<LValueEstimate> {
        self.values.get(&d).cloned().ok_or(Error::MissingValue(d))
    }
}

impl<T: CentralValues + ?Sized> CentralValues for &T {
    fn estimate(&self, d: i64) -> Result<LValueEstimate> {
        (**self).estimate(d)
    }
}

/// Which cube-free `D` enter a sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Filter {
    AllCubefree,
    /// `D = c mod p` for a prime `p != 3`.
    Class { c: i64, p: u64 },
    Primes,
    PrimeSquares,
}

impl Filter {
    pub fn validate(&self) -> Result<()> {
        if let Filter::Class { p, .. } = *self {
            if p == 3 || !arith::is_prime(p) {
                return Err(Error::InvalidArgument(format!(
                    "class modulus must be a prime other than 3 (got {p})"
                )));
            }
        }
        Ok(())
    }

    pub fn matches(&self, d: i64) -> bool {
        if d <= 0 || !arith::is_cubefree(d) {
            return false;
        }
        match *self {
            Filter::AllCubefree => true,
            Filter::Class { c, p } => (d - c).rem_euclid(p as i64) == 0,
            Filter::Primes => arith::is_prime(d as u64),
            Filter::PrimeSquares => {
                let r = arith::isqrt(d as u128) as u64;
                r * r == d as u64 && arith::is_prime(r)
            }
        }
    }
}

/// `(X, S(X))` with `S(X)` the sum of central values over filtered `D <= X`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SumRow {
    pub x: u64,
    pub sum: f64,
    pub count: u64,
}

/// Checkpoints `ceil(xmax / 2^k)` that are at least 3, in increasing order.
pub fn checkpoints(xmax: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut k = 0u32;
    while k < 64 {
        let x = xmax.div_ceil(1u64 << k);
        if x < 3 {
            break;
        }
        if out.last() != Some(&x) {
            out.push(x);
        }
        k += 1;
    }
    out.reverse();
    out
}

/// Sum of central values over filtered `D` in `lo..=hi`.
pub fn sum_range(lo: u64, hi: u64, filter: Filter, values: &impl CentralValues) -> Result<(f64, u64)> {
    filter.validate()?;
    let mut sum = 0.0;
    let mut count = 0;
    for d in lo.max(1)..=hi {
        if filter.matches(d as i64) {
            sum += values.estimate(d as i64)?.value;
            count += 1;
        }
    }
    Ok((sum, count))
}

/// Partial sums `S(X)` sampled at the given increasing checkpoints.
pub fn partial_sums(xs: &[u64], filter: Filter, values: &impl CentralValues) -> Result<Vec<SumRow>> {
    filter.validate()?;
    let mut rows = Vec::with_capacity(xs.len());
    let (mut sum, mut count, mut done) = (0.0, 0u64, 0u64);
    for &x in xs {
        if x < done {
            return Err(Error::InvalidArgument("checkpoints must increase".into()));
        }
        let (s, c) = sum_range(done + 1, x, filter, values)?;
        sum += s;
        count += c;
        done = x;
        rows.push(SumRow { x, sum, count });
    }
    Ok(rows)
}

/// `S(X)` at the dyadic checkpoints of `xmax`; empty for `xmax < 3`.
pub fn sum_central_values(xmax: u64, filter: Filter, values: &impl CentralValues) -> Result<Vec<SumRow>> {
    partial_sums(&checkpoints(xmax), filter, values)
}

/// Least-squares fits of `S(X)` against `c X^beta`, `c X` and `c X log X`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GrowthFit {
    pub exponent: f64,
    pub constant: f64,
    /// Whether `c X log X` fits better than `c X`.
    pub log_preferred: bool,
    /// Relative RMS residual of the power-law fit (infinite when degenerate).
    pub residual: f64,
    pub linear_residual: f64,
    pub xlogx_residual: f64,
    pub degenerate: bool,
    pub sample_range: (f64, f64),
}

fn relative_rms(points: &[(f64, f64)], model: impl Fn(f64) -> f64) -> f64 {
    let n = points.len() as f64;
    (points
        .iter()
        .map(|&(x, s)| ((s - model(x)) / s).powi(2))
        .sum::<f64>()
        / n)
        .sqrt()
}

fn one_parameter(points: &[(f64, f64)], f: impl Fn(f64) -> f64) -> f64 {
    let num: f64 = points.iter().map(|&(x, s)| s * f(x)).sum();
    let den: f64 = points.iter().map(|&(x, _)| f(x) * f(x)).sum();
    num / den
}

pub fn growth_fit(points: &[(f64, f64)]) -> Result<GrowthFit> {
    if points.len() < 4 {
        return Err(Error::InvalidArgument(format!(
            "growth fit needs at least 4 points, got {}",
            points.len()
        )));
    }
    if points.windows(2).any(|w| w[1].0 <= w[0].0) || points[0].0 <= 1.0 {
        return Err(Error::InvalidArgument("X must be increasing and greater than 1".into()));
    }
    let sample_range = (points[0].0, points[points.len() - 1].0);
    let first = points[0].1;
    if points.iter().all(|&(_, s)| s == first) {
        return Ok(GrowthFit {
            exponent: 0.0,
            constant: first,
            log_preferred: false,
            residual: f64::INFINITY,
            linear_residual: f64::INFINITY,
            xlogx_residual: f64::INFINITY,
            degenerate: true,
            sample_range,
        });
    }
    if points.iter().any(|&(_, s)| s <= 0.0) {
        return Err(Error::InvalidArgument("partial sums must be positive to fit a power law".into()));
    }
    let n = points.len() as f64;
    let lx: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ly: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = lx.iter().map(|a| (a - mx).powi(2)).sum();
    let beta = sxy / sxx;
    let c = (my - beta * mx).exp();
    let residual = relative_rms(points, |x| c * x.powf(beta));
    let c_lin = one_parameter(points, |x| x);
    let c_log = one_parameter(points, |x| x * x.ln());
    let linear_residual = relative_rms(points, |x| c_lin * x);
    let xlogx_residual = relative_rms(points, |x| c_log * x * x.ln());
    Ok(GrowthFit {
        exponent: beta,
        constant: c,
        log_preferred: xlogx_residual < linear_residual,
        residual,
        linear_residual,
        xlogx_residual,
        degenerate: false,
        sample_range,
    })
}

/// Vanishing counts among cube-free `D <= x`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VanishingCounts {
    pub x: u64,
    pub even: u64,
    pub even_vanished: u64,
    pub odd: u64,
    pub undetermined: u64,
    /// `even_vanished / even`, or 0 when there are no even-sign curves.
    pub fraction: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZkStats {
    pub full: VanishingCounts,
    pub half: VanishingCounts,
}

fn vanishing_counts(x: u64, values: &impl CentralValues) -> Result<VanishingCounts> {
    let mut c = VanishingCounts {
        x,
        even: 0,
        even_vanished: 0,
        odd: 0,
        undetermined: 0,
        fraction: 0.0,
    };
    for d in 1..=x as i64 {
        if !arith::is_cubefree(d) {
            continue;
        }
        let e = values.estimate(d)?;
        match e.sign {
            Sign::Plus => {
                c.even += 1;
                if e.vanished {
                    c.even_vanished += 1;
                }
            }
            Sign::Minus => c.odd += 1,
            Sign::Undetermined => c.undetermined += 1,
        }
    }
    if c.even > 0 {
        c.fraction = c.even_vanished as f64 / c.even as f64;
    }
    Ok(c)
}

/// Fraction of even-sign curves with vanishing central value, at `xmax` and
/// at `xmax / 2`. Curves of undetermined sign are counted separately.
pub fn zk_vanishing_stats(xmax: u64, values: &impl CentralValues) -> Result<ZkStats> {
    Ok(ZkStats {
        full: vanishing_counts(xmax, values)?,
        half: vanishing_counts(xmax / 2, values)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GvRow {
    pub x: u64,
    pub sum: f64,
    pub normalized: f64,
}

/// `sum_{p < X, p != 3} L(E_p, 1) L(E_{p^2}, 1)`, divided by `X`, at the
/// powers of 2 not exceeding `xmax`.
pub fn gv_probe(xmax: u64, values: &impl CentralValues) -> Result<Vec<GvRow>> {
    let mut rows = Vec::new();
    let mut sum = 0.0;
    let mut next = 2u64;
    for p in arith::primes_up_to(xmax) {
        while p >= next {
            rows.push(GvRow {
                x: next,
                sum,
                normalized: sum / next as f64,
            });
            next *= 2;
        }
        if p == 3 {
            continue;
        }
        let p = p as i64;
        sum += values.estimate(p)?.value * values.estimate(p * p)?.value;
    }
    while next <= xmax {
        rows.push(GvRow {
            x: next,
            sum,
            normalized: sum / next as f64,
        });
        next *= 2;
    }
    Ok(rows)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TailCheck {
    pub k: u64,
    pub w: f64,
    pub bound: u64,
    /// `|L(E_k, 1)|`.
    pub weight: f64,
    pub partial_sum: f64,
    /// Unweighted sums over `2^j <= m^2 n < 2^(j+1)`, as `(j, sum)`.
    pub blocks: Vec<(u32, f64)>,
    pub decay_flag: bool,
}

/// Number of `m >= 1` with `m^2 | n`.
fn square_divisor_count(n: u64) -> u64 {
    arith::factor_u64(n)
        .iter()
        .map(|&(_, e)| e as u64 / 2 + 1)
        .product()
}

/// Partial sums of `sum |L(E_k, 1)| / (m^2 n)^w` over pairs `(m, n)` whose
/// product `m^2 n` has cube-free part `k`, with `m^2 n <= bound`. The term
/// `m = 1, n = k` is always included. The decay flag is set when the
/// logarithms of the dyadic block sums have negative slope.
pub fn tail_check(k: u64, w: f64, bound: u64, values: &impl CentralValues) -> Result<TailCheck> {
    if k == 0 || !arith::is_cubefree(k as i64) {
        return Err(Error::NotCubeFree(k as i64));
    }
    if !(w > 42.0 / 45.0) {
        return Err(Error::InvalidArgument(format!("w = {w} must exceed 42/45")));
    }
    let weight = values.estimate(k as i64)?.value.abs();
    let mut blocks: BTreeMap<u32, f64> = BTreeMap::new();
    let mut f = 1u64;
    loop {
        let Some(n) = f.checked_pow(3).and_then(|c| c.checked_mul(k)) else { break };
        if f > 1 && n > bound {
            break;
        }
        debug_assert_eq!(cubefree_part(n), (k, f));
        let term = square_divisor_count(n) as f64 / (n as f64).powf(w);
        *blocks.entry(63 - n.leading_zeros()).or_insert(0.0) += term;
        f += 1;
    }
    let unweighted: f64 = blocks.values().sum();
    let pts: Vec<(f64, f64)> = blocks
        .iter()
        .filter(|(_, s)| **s > 0.0)
        .map(|(&j, &s)| (j as f64, s.ln()))
        .collect();
    let decay_flag = if pts.len() < 2 {
        true
    } else {
        let n = pts.len() as f64;
        let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
        let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        sxy < 0.0
    };
    Ok(TailCheck {
        k,
        w,
        bound,
        weight,
        partial_sum: weight * unweighted,
        blocks: blocks.into_iter().collect(),
        decay_flag,
    })
}

/// Number of cube-free `D <= xmax` with non-vanishing central value, per
/// residue class modulo `p` (index = class).
pub fn class_nonvanishing_counts(xmax: u64, p: u64, values: &impl CentralValues) -> Result<Vec<u64>> {
    Filter::Class { c: 0, p }.validate()?;
    let mut counts = vec![0u64; p as usize];
    for d in 1..=xmax as i64 {
        if arith::is_cubefree(d) && !values.estimate(d)?.vanished {
            counts[d.rem_euclid(p as i64) as usize] += 1;
        }
    }
    Ok(counts)
}

/// Estimates for filtered `D` in `1..=xmax`, in increasing order of `D`.
pub fn scan(xmax: u64, filter: Filter, values: &impl CentralValues) -> Result<Vec<LValueEstimate>> {
    filter.validate()?;
    (1..=xmax as i64)
        .filter(|&d| filter.matches(d))
        .map(|d| values.estimate(d))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dyadic_checkpoints() {
        assert_eq!(checkpoints(5000), vec![3, 5, 10, 20, 40, 79, 157, 313, 625, 1250, 2500, 5000]);
        assert!(checkpoints(2).is_empty());
    }

    #[test]
    fn synthetic_growth() {
        let xs = [500.0, 1000.0, 2000.0, 4000.0, 8000.0];
        let lin: Vec<_> = xs.iter().map(|&x| (x, 2.0 * x)).collect();
        let g = growth_fit(&lin).unwrap();
        assert!((g.exponent - 1.0).abs() < 1e-9 && (g.constant - 2.0).abs() < 1e-6);
        assert!(!g.log_preferred);
        let xlog: Vec<_> = xs.iter().map(|&x| (x, x * x.ln())).collect();
        assert!(growth_fit(&xlog).unwrap().log_preferred);
        let flat: Vec<_> = xs.iter().map(|&x| (x, 5.0)).collect();
        let g = growth_fit(&flat).unwrap();
        assert_eq!(g.exponent, 0.0);
        assert!(g.degenerate && g.residual.is_infinite());
        assert!(growth_fit(&lin[..3]).is_err());
    }

    #[test]
    fn filters() {
        assert!(Filter::Class { c: 1, p: 3 }.validate().is_err());
        assert!(Filter::Class { c: 1, p: 6 }.validate().is_err());
        assert!(Filter::PrimeSquares.matches(25) && !Filter::PrimeSquares.matches(8));
        assert!(!Filter::AllCubefree.matches(16));
        assert!(Filter::Class { c: 2, p: 5 }.matches(7));
    }

    #[test]
    fn square_divisors() {
        assert_eq!(square_divisor_count(1), 1);
        assert_eq!(square_divisor_count(8), 2);
        assert_eq!(square_divisor_count(36), 4);
    }
}
