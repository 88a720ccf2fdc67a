//! Additive characters, cubic Gauss sums and the Dirichlet polynomial
//! `T(w)_{m,n}`.
//!
//! The additive character is `e(z) = exp(2 pi i Tr(z / sqrt(-3)))` with
//! `sqrt(-3) = 1 + 2w`. It is trivial exactly on the inverse different
//! `sqrt(-3)^(-1) O`, so in particular on `O`. For `z = u / 3^k` with
//! `u = x + y w` one has `Tr(z / sqrt(-3)) = y / 3^k`, which the inner sums of
//! `T` use directly.
//!
//! Residue symbols inside `T` have powers of 3 as numerators:
//! `(3^j / b)_3 = (3 / b)_3^j` with `3 = -w^2 (1 - w)^2`, evaluated by the
//! supplementary laws in [`crate::symbols`] after replacing `b` by its primary
//! associate. Residues `b` divisible by `1 - w` contribute 0.

use std::collections::HashMap;
use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rings::{self, QuadInt, Ring};
use crate::symbols::{cubic_symbol, cubic_symbol_ideal};

/// The normalization `e(z) = exp(2 pi i Tr(z / sqrt(-3)))`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AdditiveCharacter;

impl AdditiveCharacter {
    /// `Tr(num / (den sqrt(-3)))` as a reduced fraction `p/q` with
    /// `0 <= p < q`; integral inputs give `0/1`.
    pub fn phase(&self, num: &QuadInt, den: &QuadInt) -> Result<(BigInt, BigInt)> {
        if num.ring() != Ring::Eisenstein || den.ring() != Ring::Eisenstein {
            return Err(Error::OrderMismatch {
                order: 3,
                ring: Ring::Gaussian.name(),
            });
        }
        if den.is_zero() {
            return Err(Error::Zero("additive character denominator"));
        }
        // num / (den sqrt(-3)) = num conj(den) conj(sqrt(-3)) / (3 N(den)).
        let conj_sqrt = QuadInt::eisenstein(-1, -2);
        let top = &(num * &den.conj()) * &conj_sqrt;
        let q = BigInt::from(3) * den.norm();
        let p = top.trace().mod_floor(&q);
        let g = p.gcd(&q);
        if p.is_zero() {
            return Ok((BigInt::zero(), BigInt::from(1)));
        }
        Ok((&p / &g, &q / &g))
    }

    pub fn eval(&self, num: &QuadInt, den: &QuadInt) -> Result<Complex64> {
        let (p, q) = self.phase(num, den)?;
        Ok(turn(&p, &q))
    }
}

fn turn(p: &BigInt, q: &BigInt) -> Complex64 {
    // p < q, so the ratio is computed safely even for large q.
    let x = match (p.to_f64(), q.to_f64()) {
        (Some(a), Some(b)) if b.is_finite() => a / b,
        _ => 0.0,
    };
    Complex64::from_polar(1.0, 2.0 * PI * x)
}

/// `e(num / den)`.
pub fn additive_character(num: &QuadInt, den: &QuadInt) -> Result<Complex64> {
    AdditiveCharacter.eval(num, den)
}

/// `g(c, n) = sum_{b mod c} (b/c)_3 e(n b / c)` for primary `c`.
pub fn gauss_sum(c: &QuadInt, n: &QuadInt) -> Result<Complex64> {
    if c.is_zero() {
        return Err(Error::Zero("Gauss sum modulus"));
    }
    if !c.is_primary() {
        return Err(Error::NotPrimary(c.to_string()));
    }
    if c.is_unit() {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for b in rings::residues_mod(c)? {
        if let Some(k) = cubic_symbol(&b, c)?.exponent() {
            let chi = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / 3.0);
            acc += chi * additive_character(&(n * &b), c)?;
        }
    }
    Ok(acc)
}

/// One `(alpha, delta)` term of a summand of `T(w)_{m,n}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DirichletPolynomialTerm {
    /// 1, 2 or 3 for the three summands.
    pub summand: u8,
    pub alpha: u32,
    pub delta: u32,
    pub value_re: f64,
    pub value_im: f64,
}

impl DirichletPolynomialTerm {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.value_re, self.value_im)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TPolynomial {
    pub value_re: f64,
    pub value_im: f64,
    pub terms: Vec<DirichletPolynomialTerm>,
}

impl TPolynomial {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.value_re, self.value_im)
    }
}

type Pair = (i64, i64);

fn mul(a: Pair, b: Pair) -> Pair {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0 - a.1 * b.1)
}

fn reduce(a: Pair, m: i64) -> Pair {
    (a.0.rem_euclid(m), a.1.rem_euclid(m))
}

/// `e(u / 3^k) = exp(2 pi i y(u) / 3^k)`.
fn e_over_power(u: Pair, modulus: i64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * u.1.rem_euclid(modulus) as f64 / modulus as f64)
}

fn omega_power(k: i64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * k.rem_euclid(3) as f64 / 3.0)
}

/// Residues modulo `3^k` as coordinate pairs, each with `(3/b)_3` (or `None`
/// when `1 - w` divides `b`). Modulus 1 has the single representative 1.
fn residues_with_symbol(k: u32) -> Result<Vec<(Pair, Option<u8>)>> {
    if k == 0 {
        return Ok(vec![((1, 0), Some(0))]);
    }
    let m = 3i64.pow(k);
    let three = QuadInt::eisenstein(3, 0);
    let mut out = Vec::with_capacity((m * m) as usize);
    for b in 0..m {
        for a in 0..m {
            // b coprime to 1 - w iff N(a + b w) is not divisible by 3.
            let coprime = (a * a - a * b + b * b) % 3 != 0;
            let sym = if coprime {
                cubic_symbol_ideal(&three, &QuadInt::eisenstein(a, b))?.exponent()
            } else {
                None
            };
            out.push(((a, b), sym));
        }
    }
    Ok(out)
}

/// Inverse of a unit modulo `3^k`.
fn inverse_mod_power(b: Pair, k: u32) -> Pair {
    if k == 0 {
        return (1, 0);
    }
    let m = 3i64.pow(k);
    // |(O/3^k)^*| = 6 * 9^(k-1).
    let mut e = 6 * 9i64.pow(k - 1) - 1;
    let mut base = reduce(b, m);
    let mut acc = (1, 0);
    while e > 0 {
        if e & 1 == 1 {
            acc = reduce(mul(acc, base), m);
        }
        base = reduce(mul(base, base), m);
        e >>= 1;
    }
    acc
}

/// The prime-to-3 part of `m`, made primary.
fn prime_to_three_part(m: &QuadInt) -> Result<QuadInt> {
    let lam = Ring::Eisenstein.ramified_prime();
    let mut rest = m.clone();
    while let Some(q) = rest.exact_div(&lam) {
        rest = q;
    }
    rest.primary_associate()
}

fn reduce_element(z: &QuadInt, m: i64) -> Pair {
    let r = |v: &BigInt| v.mod_floor(&BigInt::from(m)).to_i64().expect("reduced");
    (r(z.x()), r(z.y()))
}

/// `T(w)_{m,n}` truncated to `alpha <= alpha_max`.
///
/// First summand, for `0 <= delta <= alpha`:
/// `3^floor((alpha - 2 delta + 1)/3) (3/m')^(alpha - 2 delta) (3^alpha)^(-1-3w)`
/// times `sum_{b2 mod 3^(alpha-delta)} (3^(alpha-delta)/b2) e(n b2 / 3^(alpha-delta))`
/// `sum_{C2 mod 3^alpha} (3^delta/C2) e(m b2^(-1) C2 / 3^delta)`, with `b2^(-1)`
/// the inverse modulo `3^delta`. Second summand:
/// `3 * 3^floor((alpha+1)/3) (3/m')^alpha (3^alpha)^(-1-3w)`
/// `sum_{b2 mod 3^alpha} (3^alpha/b2) e(n b2 / 3^alpha)`. Third: the constant 9.
pub fn t_polynomial(m: &QuadInt, n: &QuadInt, w: Complex64, alpha_max: u32) -> Result<TPolynomial> {
    if m.is_zero() || n.is_zero() {
        return Err(Error::Zero("T polynomial index"));
    }
    if m.ring() != Ring::Eisenstein || n.ring() != Ring::Eisenstein {
        return Err(Error::MixedRings(m.ring().name(), n.ring().name()));
    }
    if alpha_max > 6 {
        return Err(Error::InvalidArgument(format!(
            "alpha_max = {alpha_max} is too large (at most 6)"
        )));
    }
    let m_prime = prime_to_three_part(m)?;
    let chi_m = cubic_symbol_ideal(&QuadInt::eisenstein(3, 0), &m_prime)?
        .exponent()
        .expect("3 is coprime to the prime-to-3 part") as i64;
    let residues: Vec<Vec<(Pair, Option<u8>)>> = (0..=alpha_max)
        .map(residues_with_symbol)
        .collect::<Result<_>>()?;
    let ln3 = 3f64.ln();
    let scale = |alpha: u32| (-(1.0 + 3.0 * w) * (alpha as f64 * ln3)).exp();
    let mut terms = Vec::new();

    for alpha in 0..=alpha_max {
        for delta in 0..=alpha {
            let j = alpha - delta;
            let mod_j = 3i64.pow(j);
            let mod_d = 3i64.pow(delta);
            let n_j = reduce_element(n, mod_j);
            let m_d = reduce_element(m, mod_d);
            let mut memo: HashMap<Pair, Complex64> = HashMap::new();
            let mut inner = Complex64::new(0.0, 0.0);
            for &(b2, sym_b) in &residues[j as usize] {
                let Some(sb) = sym_b else { continue };
                let outer = omega_power(sb as i64 * j as i64) * e_over_power(mul(n_j, b2), mod_j);
                let key = reduce(mul(m_d, inverse_mod_power(b2, delta)), mod_d.max(1));
                let c_sum = *memo.entry(key).or_insert_with(|| {
                    residues[alpha as usize]
                        .iter()
                        .filter_map(|&(c2, sym_c)| {
                            sym_c.map(|sc| {
                                omega_power(sc as i64 * delta as i64)
                                    * e_over_power(mul(key, c2), mod_d)
                            })
                        })
                        .sum()
                });
                inner += outer * c_sum;
            }
            let expo = alpha as i64 - 2 * delta as i64;
            let power = 3f64.powi((expo + 1).div_euclid(3) as i32);
            let value = inner * power * omega_power(chi_m * expo) * scale(alpha);
            terms.push(DirichletPolynomialTerm {
                summand: 1,
                alpha,
                delta,
                value_re: value.re,
                value_im: value.im,
            });
        }
    }

    for alpha in 0..=alpha_max {
        let mod_a = 3i64.pow(alpha);
        let n_a = reduce_element(n, mod_a);
        let inner: Complex64 = residues[alpha as usize]
            .iter()
            .filter_map(|&(b2, sym)| {
                sym.map(|s| omega_power(s as i64 * alpha as i64) * e_over_power(mul(n_a, b2), mod_a))
            })
            .sum();
        let power = 3f64.powi(((alpha + 1) / 3) as i32);
        let value = inner * 3.0 * power * omega_power(chi_m * alpha as i64) * scale(alpha);
        terms.push(DirichletPolynomialTerm {
            summand: 2,
            alpha,
            delta: alpha,
            value_re: value.re,
            value_im: value.im,
        });
    }

    terms.push(DirichletPolynomialTerm {
        summand: 3,
        alpha: 0,
        delta: 0,
        value_re: 9.0,
        value_im: 0.0,
    });
    let total: Complex64 = terms.iter().map(|t| t.value()).sum();
    Ok(TPolynomial {
        value_re: total.re,
        value_im: total.im,
        terms,
    })
}

/// Whether `z` is integral for the additive character test: `e(z) = 1`
/// exactly for every `z` in `O`.
pub fn is_trivial_on(z: &QuadInt) -> Result<bool> {
    let (p, _) = AdditiveCharacter.phase(z, &QuadInt::eisenstein(1, 0))?;
    Ok(p.is_zero())
}
