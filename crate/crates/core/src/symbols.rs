//! Quadratic residue symbol in `Z[i]` and cubic residue symbol in `Z[w]`.
//!
//! At a prime `p` the symbol `(a/p)_k` is the `k`-th root of unity congruent
//! to `a^((N(p)-1)/k)` mod `p`; it extends multiplicatively in the
//! denominator. Values are reported as exponents: `w^e` for cubic symbols,
//! `(-1)^e` for quadratic ones.
//!
//! The fast evaluators reduce the numerator, strip the ramified prime and the
//! unit, and flip with the reciprocity law for primary elements:
//!
//! * cubic: `(a/b) = (b/a)` for primary coprime `a, b`;
//!   `(w/b) = w^((N(b)-1)/3)`; `(1-w / b) = w^(2(1-x)/3)` for `b = x + yw`.
//! * quadratic: `(a/b) = (b/a)` for primary coprime `a, b`;
//!   `(i/b) = (-1)^((N(b)-1)/4)`; `(1+i / b) = (-1)^((x-y-y^2-1)/4)` for
//!   `b = x + yi`.
//!
//! [`euler_symbol`] is the independent definition at primes, by modular
//! exponentiation.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rings::{self, QuadInt, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SymbolKind {
    Quadratic,
    Cubic,
}

impl SymbolKind {
    pub fn order(self) -> u8 {
        match self {
            SymbolKind::Quadratic => 2,
            SymbolKind::Cubic => 3,
        }
    }

    pub fn ring(self) -> Ring {
        match self {
            SymbolKind::Quadratic => Ring::Gaussian,
            SymbolKind::Cubic => Ring::Eisenstein,
        }
    }
}

/// A residue-symbol value: a root of unity given by its exponent, or
/// `NotCoprime` when numerator and denominator share a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SymbolValue {
    Root { kind: SymbolKind, exponent: u8 },
    NotCoprime { kind: SymbolKind },
}

impl SymbolValue {
    pub fn root(kind: SymbolKind, exponent: i64) -> Self {
        let k = kind.order() as i64;
        SymbolValue::Root {
            kind,
            exponent: exponent.rem_euclid(k) as u8,
        }
    }

    pub fn one(kind: SymbolKind) -> Self {
        SymbolValue::Root { kind, exponent: 0 }
    }

    pub fn kind(&self) -> SymbolKind {
        match *self {
            SymbolValue::Root { kind, .. } | SymbolValue::NotCoprime { kind } => kind,
        }
    }

    pub fn exponent(&self) -> Option<u8> {
        match *self {
            SymbolValue::Root { exponent, .. } => Some(exponent),
            SymbolValue::NotCoprime { .. } => None,
        }
    }

    pub fn is_coprime(&self) -> bool {
        self.exponent().is_some()
    }

    /// Product of symbol values (exponents add). `NotCoprime` absorbs.
    pub fn mul(self, other: SymbolValue) -> SymbolValue {
        debug_assert_eq!(self.kind(), other.kind());
        match (self.exponent(), other.exponent()) {
            (Some(a), Some(b)) => SymbolValue::root(self.kind(), a as i64 + b as i64),
            _ => SymbolValue::NotCoprime { kind: self.kind() },
        }
    }

    pub fn inverse(self) -> SymbolValue {
        match self.exponent() {
            Some(e) => SymbolValue::root(self.kind(), -(e as i64)),
            None => self,
        }
    }

    /// The value as a complex number (`w = exp(2 pi i / 3)`); zero when not
    /// coprime.
    pub fn to_complex(&self) -> Complex64 {
        match self.exponent() {
            None => Complex64::new(0.0, 0.0),
            Some(e) => {
                let k = self.kind().order() as f64;
                Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * e as f64 / k)
            }
        }
    }
}

impl fmt::Display for SymbolValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind(), self.exponent()) {
            (_, None) => write!(f, "0 (not coprime)"),
            (SymbolKind::Quadratic, Some(0)) => write!(f, "1"),
            (SymbolKind::Quadratic, Some(_)) => write!(f, "-1"),
            (SymbolKind::Cubic, Some(0)) => write!(f, "1"),
            (SymbolKind::Cubic, Some(1)) => write!(f, "w"),
            (SymbolKind::Cubic, Some(_)) => write!(f, "w^2"),
        }
    }
}

fn mod_small(n: &BigInt, m: u64) -> u64 {
    n.mod_floor(&BigInt::from(m)).to_u64().unwrap()
}

/// `(w/b)` exponent for `b` coprime to 3.
fn cubic_unit_omega(b: &QuadInt) -> i64 {
    // (N(b) - 1)/3 mod 3 = ((N(b) mod 9) - 1)/3
    let n9 = mod_small(&b.norm(), 9) as i64;
    (n9 - 1) / 3
}

/// `(1-w / b)` exponent for primary `b = x + yw`.
fn cubic_ramified(b: &QuadInt) -> i64 {
    let x9 = mod_small(b.x(), 9) as i64;
    2 * ((1 - x9).rem_euclid(9) / 3)
}

/// Exponent `j` with `u = +-w^j`.
fn eisenstein_unit_index(u: &QuadInt) -> i64 {
    let units = Ring::Eisenstein.units(); // powers of 1 + w = -w^2
    let k = units.iter().position(|v| v == u).expect("unit") as i64;
    // (-w^2)^k = (-1)^k w^(2k)
    2 * k
}

/// Cubic exponent of `(a/b)` for `b` primary, `None` when not coprime.
fn cubic_exp_primary(a: &QuadInt, b: &QuadInt) -> Option<u8> {
    let lambda = Ring::Eisenstein.ramified_prime();
    let mut acc: i64 = 0;
    let mut a = a.clone();
    let mut b = b.clone();
    loop {
        if b.is_unit() {
            return Some(acc.rem_euclid(3) as u8);
        }
        let (_, r) = a.div_rem(&b).expect("same ring, non-zero");
        if r.is_zero() {
            return None;
        }
        let mut a1 = r;
        let mut k = 0i64;
        while let Some(q) = a1.exact_div(&lambda) {
            a1 = q;
            k += 1;
        }
        let primary = a1.primary_associate().expect("coprime to 3");
        let unit = a1.exact_div(&primary).expect("associate");
        acc += k * cubic_ramified(&b) + eisenstein_unit_index(&unit) * cubic_unit_omega(&b);
        a = b;
        b = primary;
    }
}

fn gaussian_unit_index(u: &QuadInt) -> i64 {
    Ring::Gaussian.units().iter().position(|v| v == u).expect("unit") as i64
}

/// `(i/b)` exponent (mod 2) for odd `b`.
fn quadratic_unit_i(b: &QuadInt) -> i64 {
    let n8 = mod_small(&b.norm(), 8) as i64;
    (n8 - 1) / 4
}

/// `(1+i / b)` exponent (mod 2) for primary `b = x + yi`.
fn quadratic_ramified(b: &QuadInt) -> i64 {
    let x = mod_small(b.x(), 16) as i64;
    let y = mod_small(b.y(), 16) as i64;
    ((x - y - y * y - 1).rem_euclid(16) / 4) % 2
}

fn quadratic_exp_primary(a: &QuadInt, b: &QuadInt) -> Option<u8> {
    let lambda = Ring::Gaussian.ramified_prime();
    let mut acc: i64 = 0;
    let mut a = a.clone();
    let mut b = b.clone();
    loop {
        if b.is_unit() {
            return Some(acc.rem_euclid(2) as u8);
        }
        let (_, r) = a.div_rem(&b).expect("same ring, non-zero");
        if r.is_zero() {
            return None;
        }
        let mut a1 = r;
        let mut k = 0i64;
        while let Some(q) = a1.exact_div(&lambda) {
            a1 = q;
            k += 1;
        }
        let primary = a1.primary_associate().expect("odd");
        let unit = a1.exact_div(&primary).expect("associate");
        acc += k * quadratic_ramified(&b) + gaussian_unit_index(&unit) * quadratic_unit_i(&b);
        a = b;
        b = primary;
    }
}

fn require_ring(z: &QuadInt, kind: SymbolKind) -> Result<()> {
    if z.ring() == kind.ring() {
        Ok(())
    } else {
        Err(Error::OrderMismatch {
            order: kind.order() as u32,
            ring: z.ring().name(),
        })
    }
}

/// The cubic residue symbol `(a/b)_3` for primary `b` (`b = 1 mod 3`).
pub fn cubic_symbol(a: &QuadInt, b: &QuadInt) -> Result<SymbolValue> {
    require_ring(a, SymbolKind::Cubic)?;
    require_ring(b, SymbolKind::Cubic)?;
    if b.is_zero() {
        return Err(Error::Zero("symbol denominator"));
    }
    if !b.is_primary() {
        return Err(Error::NotPrimary(b.to_string()));
    }
    Ok(match cubic_exp_primary(a, b) {
        Some(e) => SymbolValue::root(SymbolKind::Cubic, e as i64),
        None => SymbolValue::NotCoprime {
            kind: SymbolKind::Cubic,
        },
    })
}

/// `(a/b)_3` for any `b` coprime to 3; the symbol only depends on the ideal
/// `(b)`, so `b` is replaced by its primary associate.
pub fn cubic_symbol_ideal(a: &QuadInt, b: &QuadInt) -> Result<SymbolValue> {
    cubic_symbol(a, &b.primary_associate()?)
}

/// The quadratic residue symbol `(a/b)_2` in `Z[i]` for odd `b`.
pub fn quadratic_symbol(a: &QuadInt, b: &QuadInt) -> Result<SymbolValue> {
    require_ring(a, SymbolKind::Quadratic)?;
    require_ring(b, SymbolKind::Quadratic)?;
    if b.is_zero() {
        return Err(Error::Zero("symbol denominator"));
    }
    let primary = match b.primary_associate() {
        Ok(p) => p,
        Err(Error::Ramified(_)) => return Err(Error::EvenDenominator(b.to_string())),
        Err(e) => return Err(e),
    };
    Ok(match quadratic_exp_primary(a, &primary) {
        Some(e) => SymbolValue::root(SymbolKind::Quadratic, e as i64),
        None => SymbolValue::NotCoprime {
            kind: SymbolKind::Quadratic,
        },
    })
}

/// Residue-symbol oracle at a prime `p`: computes `a^((N(p)-1)/order)` mod `p`
/// and identifies the root of unity it is congruent to.
pub fn euler_symbol(a: &QuadInt, p: &QuadInt, order: u32) -> Result<SymbolValue> {
    let kind = match order {
        2 => SymbolKind::Quadratic,
        3 => SymbolKind::Cubic,
        _ => {
            return Err(Error::OrderMismatch {
                order,
                ring: p.ring().name(),
            })
        }
    };
    require_ring(p, kind)?;
    require_ring(a, kind)?;
    if !rings::is_prime_element(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let n = p.norm();
    let k = BigInt::from(order);
    if !(&n - 1u32).is_multiple_of(&k) || p.is_associate(&p.ring().ramified_prime()) {
        return Err(Error::InvalidArgument(format!(
            "{p} has residue field without {order}-th roots of unity"
        )));
    }
    let e = (&n - 1u32) / &k;
    let r = pow_mod(a, &e, p)?;
    if r.is_zero() {
        return Ok(SymbolValue::NotCoprime { kind });
    }
    let zeta = match kind {
        SymbolKind::Cubic => QuadInt::eisenstein(0, 1),
        SymbolKind::Quadratic => QuadInt::gaussian(-1, 0),
    };
    let mut z = QuadInt::one(p.ring());
    for j in 0..order {
        if r.is_congruent(&z, p)? {
            return Ok(SymbolValue::root(kind, j as i64));
        }
        z = &z * &zeta;
    }
    Err(Error::UndefinedSymbol(format!(
        "power residue of {a} mod {p} is not a root of unity"
    )))
}

fn pow_mod(a: &QuadInt, e: &BigInt, m: &QuadInt) -> Result<QuadInt> {
    let mut base = rings::reduce_mod(a, m)?;
    let mut acc = rings::reduce_mod(&QuadInt::one(a.ring()), m)?;
    let mut e = e.clone();
    let two = BigInt::from(2);
    while !e.is_zero() {
        if e.is_odd() {
            acc = rings::reduce_mod(&(&acc * &base), m)?;
        }
        base = rings::reduce_mod(&(&base * &base), m)?;
        e /= &two;
    }
    Ok(acc)
}
