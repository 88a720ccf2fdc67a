//! Exact arithmetic in the Eisenstein integers `Z[w]` (`w^2 + w + 1 = 0`) and
//! the Gaussian integers `Z[i]`.
//!
//! Elements are stored as a coordinate pair `(x, y)` meaning `x + y*w` or
//! `x + y*i`, together with a ring tag. Coordinates are arbitrary precision.
//! Arithmetic operators panic on mixed rings; the fallible entry points
//! (`gcd`, `divides`, ...) report [`Error::MixedRings`] instead.
//!
//! Normal forms:
//! * primary: congruent to 1 mod 3 in `Z[w]`, to 1 mod `(1+i)^3` in `Z[i]`;
//! * otherwise the associate in the sector `0 <= y < x`
//!   (`Z[w]`, argument in `[0, 60)` degrees) or `0 <= y, 0 < x` (`Z[i]`).
//!
//! `sqrt(-3)` is `1 + 2w`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ring {
    Eisenstein,
    Gaussian,
}

impl Ring {
    pub fn name(self) -> &'static str {
        match self {
            Ring::Eisenstein => "Eisenstein",
            Ring::Gaussian => "Gaussian",
        }
    }

    fn unit_char(self) -> char {
        match self {
            Ring::Eisenstein => 'w',
            Ring::Gaussian => 'i',
        }
    }

    /// The ramified prime: `1 - w` or `1 + i`.
    pub fn ramified_prime(self) -> QuadInt {
        match self {
            Ring::Eisenstein => QuadInt::new(1, -1, self),
            Ring::Gaussian => QuadInt::new(1, 1, self),
        }
    }

    /// The modulus defining primary elements: `3` or `(1+i)^3 = -2+2i`.
    pub fn primary_modulus(self) -> QuadInt {
        match self {
            Ring::Eisenstein => QuadInt::new(3, 0, self),
            Ring::Gaussian => QuadInt::new(-2, 2, self),
        }
    }

    /// The rational prime lying under the ramified prime.
    pub fn ramified_rational_prime(self) -> u64 {
        match self {
            Ring::Eisenstein => 3,
            Ring::Gaussian => 2,
        }
    }

    /// All units, as successive powers of a generator of the unit group.
    pub fn units(self) -> Vec<QuadInt> {
        let (generator, count) = match self {
            Ring::Eisenstein => (QuadInt::new(1, 1, self), 6),
            Ring::Gaussian => (QuadInt::new(0, 1, self), 4),
        };
        let mut out = Vec::with_capacity(count);
        let mut u = QuadInt::one(self);
        for _ in 0..count {
            out.push(u.clone());
            u = &u * &generator;
        }
        out
    }
}

/// An element `x + y*w` of `Z[w]` or `x + y*i` of `Z[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadInt {
    x: BigInt,
    y: BigInt,
    ring: Ring,
}

impl QuadInt {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>, ring: Ring) -> Self {
        QuadInt {
            x: x.into(),
            y: y.into(),
            ring,
        }
    }

    pub fn eisenstein(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Self::new(x, y, Ring::Eisenstein)
    }

    pub fn gaussian(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Self::new(x, y, Ring::Gaussian)
    }

    pub fn from_int(n: impl Into<BigInt>, ring: Ring) -> Self {
        Self::new(n, 0, ring)
    }

    pub fn zero(ring: Ring) -> Self {
        Self::new(0, 0, ring)
    }

    pub fn one(ring: Ring) -> Self {
        Self::new(1, 0, ring)
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// Whether the element is a rational integer.
    pub fn is_rational(&self) -> bool {
        self.y.is_zero()
    }

    /// Coordinates as `i64`, if they fit.
    pub fn to_i64_pair(&self) -> Option<(i64, i64)> {
        Some((self.x.to_i64()?, self.y.to_i64()?))
    }

    /// `x^2 - xy + y^2` or `x^2 + y^2`.
    pub fn norm(&self) -> BigInt {
        match self.ring {
            Ring::Eisenstein => &self.x * &self.x - &self.x * &self.y + &self.y * &self.y,
            Ring::Gaussian => &self.x * &self.x + &self.y * &self.y,
        }
    }

    /// Norm as `u64`; panics beyond 64-bit scale.
    pub fn norm_u64(&self) -> u64 {
        self.norm().to_u64().expect("norm exceeds 64 bits")
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        match self.ring {
            Ring::Eisenstein => Self::new(&self.x - &self.y, -&self.y, self.ring),
            Ring::Gaussian => Self::new(self.x.clone(), -&self.y, self.ring),
        }
    }

    /// Trace to `Q`: `2x - y` or `2x`.
    pub fn trace(&self) -> BigInt {
        match self.ring {
            Ring::Eisenstein => BigInt::from(2) * &self.x - &self.y,
            Ring::Gaussian => BigInt::from(2) * &self.x,
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::MixedRings(self.ring.name(), other.ring.name()))
        }
    }

    /// Euclidean division with nearest-coordinate rounding: `self = q*d + r`
    /// with `N(r) < N(d)`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        self.check_ring(d)?;
        if d.is_zero() {
            return Err(Error::Zero("divisor"));
        }
        let n = d.norm();
        let num = self * &d.conj();
        let q = Self::new(round_div(&num.x, &n), round_div(&num.y, &n), self.ring);
        let r = self - &(&q * d);
        Ok((q, r))
    }

    /// Whether `d` divides `self`. Zero divides only zero.
    pub fn is_divisible_by(&self, d: &Self) -> Result<bool> {
        self.check_ring(d)?;
        if d.is_zero() {
            return Ok(self.is_zero());
        }
        let n = d.norm();
        let num = self * &d.conj();
        Ok(num.x.is_multiple_of(&n) && num.y.is_multiple_of(&n))
    }

    /// `self / d` when the division is exact.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if self.ring != d.ring || d.is_zero() {
            return None;
        }
        let n = d.norm();
        let num = self * &d.conj();
        let (qx, rx) = num.x.div_rem(&n);
        let (qy, ry) = num.y.div_rem(&n);
        (rx.is_zero() && ry.is_zero()).then(|| Self::new(qx, qy, self.ring))
    }

    pub fn is_congruent(&self, other: &Self, modulus: &Self) -> Result<bool> {
        self.check_ring(other)?;
        (self - other).is_divisible_by(modulus)
    }

    pub fn is_primary(&self) -> bool {
        let one = Self::one(self.ring);
        self.is_congruent(&one, &self.ring.primary_modulus())
            .unwrap_or(false)
    }

    fn is_coprime_to_ramified(&self) -> bool {
        let p = self.ring.ramified_rational_prime();
        !self.norm().is_multiple_of(&BigInt::from(p))
    }

    /// The unique associate congruent to 1 mod 3 (resp. mod `(1+i)^3`).
    pub fn primary_associate(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Zero("primary_associate argument"));
        }
        if !self.is_coprime_to_ramified() {
            return Err(Error::Ramified(self.to_string()));
        }
        self.ring
            .units()
            .into_iter()
            .map(|u| &u * self)
            .find(|z| z.is_primary())
            .ok_or_else(|| Error::NotPrimary(self.to_string()))
    }

    fn sector_associate(&self) -> Self {
        self.ring
            .units()
            .into_iter()
            .map(|u| &u * self)
            .find(|z| match z.ring {
                Ring::Eisenstein => !z.y.is_negative() && z.y < z.x,
                Ring::Gaussian => !z.y.is_negative() && z.x.is_positive(),
            })
            .expect("every non-zero element has a sector associate")
    }

    /// Canonical associate: primary when coprime to the ramified prime,
    /// otherwise the sector representative. Zero maps to zero.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        if self.is_coprime_to_ramified() {
            self.primary_associate()
                .expect("coprime elements have a primary associate")
        } else {
            self.sector_associate()
        }
    }

    /// Whether `self` is a unit multiple of `other`.
    pub fn is_associate(&self, other: &Self) -> bool {
        if self.ring != other.ring {
            return false;
        }
        self.ring.units().iter().any(|u| &(u * other) == self)
    }

    /// Multiplicative inverse modulo `m`, reduced to the canonical residue.
    pub fn inverse_mod(&self, m: &Self) -> Result<Option<Self>> {
        self.check_ring(m)?;
        if m.is_zero() {
            return Err(Error::Zero("modulus"));
        }
        let (mut r0, mut r1) = (m.clone(), self.clone());
        let (mut s0, mut s1) = (Self::zero(self.ring), Self::one(self.ring));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = &s0 - &(&q * &s1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if !r0.is_unit() {
            return Ok(None);
        }
        let u_inv = r0.conj();
        Ok(Some(reduce_mod(&(&s0 * &u_inv), m)?))
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*self + t*other = g` and
    /// `g` a (non-normalized) greatest common divisor.
    pub fn extended_gcd(&self, other: &Self) -> Result<(Self, Self, Self)> {
        self.check_ring(other)?;
        let ring = self.ring;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(ring), Self::zero(ring));
        let (mut t0, mut t1) = (Self::zero(ring), Self::one(ring));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        Ok((r0, s0, t0))
    }

    /// Parse a literal in the given ring. Plain integers are accepted.
    pub fn parse_in(s: &str, ring: Ring) -> Result<Self> {
        let z: QuadInt = parse_literal(s, Some(ring))?;
        Ok(z)
    }
}

/// Round `a / n` to the nearest integer (`n > 0`), halves rounding up.
fn round_div(a: &BigInt, n: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    (a * &two + n).div_floor(&(n * &two))
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&QuadInt> for &QuadInt {
            type Output = QuadInt;
            fn $method(self, rhs: &QuadInt) -> QuadInt {
                assert_eq!(
                    self.ring, rhs.ring,
                    "mixed-ring arithmetic ({} vs {})",
                    self.ring.name(),
                    rhs.ring.name()
                );
                let f: fn(&QuadInt, &QuadInt) -> QuadInt = $body;
                f(self, rhs)
            }
        }
        impl $trait<QuadInt> for QuadInt {
            type Output = QuadInt;
            fn $method(self, rhs: QuadInt) -> QuadInt {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&QuadInt> for QuadInt {
            type Output = QuadInt;
            fn $method(self, rhs: &QuadInt) -> QuadInt {
                (&self).$method(rhs)
            }
        }
        impl $trait<QuadInt> for &QuadInt {
            type Output = QuadInt;
            fn $method(self, rhs: QuadInt) -> QuadInt {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| QuadInt::new(&a.x + &b.x, &a.y + &b.y, a.ring));
forward_binop!(Sub, sub, |a, b| QuadInt::new(&a.x - &b.x, &a.y - &b.y, a.ring));
forward_binop!(Mul, mul, |a, b| {
    let xx = &a.x * &b.x;
    let yy = &a.y * &b.y;
    let cross = &a.x * &b.y + &a.y * &b.x;
    match a.ring {
        // w^2 = -1 - w
        Ring::Eisenstein => QuadInt::new(&xx - &yy, cross - &yy, a.ring),
        Ring::Gaussian => QuadInt::new(xx - yy, cross, a.ring),
    }
});

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt::new(-self.x, -self.y, self.ring)
    }
}

impl Neg for &QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        QuadInt::new(-&self.x, -&self.y, self.ring)
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.ring.unit_char();
        if self.y.is_zero() {
            return write!(f, "{}", self.x);
        }
        let coeff = if self.y.is_one() {
            String::new()
        } else if self.y == -BigInt::one() {
            "-".to_string()
        } else {
            self.y.to_string()
        };
        if self.x.is_zero() {
            write!(f, "{coeff}{c}")
        } else if self.y.is_negative() {
            write!(f, "{}{coeff}{c}", self.x)
        } else {
            write!(f, "{}+{coeff}{c}", self.x)
        }
    }
}

fn parse_literal(s: &str, ring: Option<Ring>) -> Result<QuadInt> {
    let fail = |reason: &str| Error::Parse {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    let t: String = s
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == 'ω' { 'w' } else { c })
        .collect();
    if t.is_empty() {
        return Err(fail("empty literal"));
    }
    let found = if t.contains('w') {
        Some(Ring::Eisenstein)
    } else if t.contains('i') {
        Some(Ring::Gaussian)
    } else {
        None
    };
    let ring = match (ring, found) {
        (Some(r), Some(f)) if r != f => return Err(fail("literal belongs to the other ring")),
        (Some(r), _) => r,
        (None, Some(f)) => f,
        (None, None) => Ring::Eisenstein,
    };
    let parse_int = |p: &str| -> Result<BigInt> {
        let p = p.strip_prefix('+').unwrap_or(p);
        p.parse::<BigInt>().map_err(|_| fail("bad integer"))
    };
    let Some(body) = t.strip_suffix(ring.unit_char()) else {
        if found.is_some() {
            return Err(fail("unit symbol must come last"));
        }
        return Ok(QuadInt::new(parse_int(&t)?, 0, ring));
    };
    if body.contains(ring.unit_char()) {
        return Err(fail("repeated unit symbol"));
    }
    // split at the last sign that is not the leading character
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(i, _)| i)
        .last();
    let (real, imag) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("", body),
    };
    let x = if real.is_empty() {
        BigInt::zero()
    } else {
        parse_int(real)?
    };
    let y = match imag {
        "" | "+" => BigInt::one(),
        "-" => -BigInt::one(),
        other => parse_int(other)?,
    };
    Ok(QuadInt::new(x, y, ring))
}

impl FromStr for QuadInt {
    type Err = Error;

    /// The ring is inferred from the unit symbol (`w`/`ω` or `i`); plain
    /// integers default to the Eisenstein integers.
    fn from_str(s: &str) -> Result<Self> {
        parse_literal(s, None)
    }
}

impl Serialize for QuadInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for QuadInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A greatest common divisor, normalized (primary when coprime to the
/// ramified prime). `gcd(z, 0)` is `z` normalized.
pub fn gcd(a: &QuadInt, b: &QuadInt) -> Result<QuadInt> {
    a.check_ring(b)?;
    let (mut r0, mut r1) = (a.clone(), b.clone());
    while !r1.is_zero() {
        let (_, r) = r0.div_rem(&r1)?;
        r0 = std::mem::replace(&mut r1, r);
    }
    Ok(r0.normalized())
}

/// `N(z)`.
pub fn norm(z: &QuadInt) -> BigInt {
    z.norm()
}

/// Prime factorization `unit * prod(prime^e)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub unit: QuadInt,
    pub factors: Vec<(QuadInt, u32)>,
}

impl Factorization {
    pub fn product(&self) -> QuadInt {
        self.factors
            .iter()
            .fold(self.unit.clone(), |acc, (p, e)| &acc * &p.pow(*e))
    }
}

/// An element of norm `p` (a rational prime that splits), found by bounded
/// search over `y`. Returns `None` when `p` does not split.
pub fn element_of_norm(p: u64, ring: Ring) -> Option<QuadInt> {
    let p = p as u128;
    let mut y: u128 = 0;
    loop {
        let (disc, done) = match ring {
            Ring::Eisenstein => {
                let t = 3 * y * y;
                (4 * p).checked_sub(t).map_or((0, true), |d| (d, false))
            }
            Ring::Gaussian => p.checked_sub(y * y).map_or((0, true), |d| (d, false)),
        };
        if done {
            return None;
        }
        let r = arith::isqrt(disc);
        if r * r == disc {
            let (x, y) = match ring {
                // x = (y + r) / 2 solves x^2 - xy + y^2 = p
                Ring::Eisenstein if (y + r) % 2 == 0 => ((y + r) / 2, y),
                Ring::Eisenstein => {
                    y += 1;
                    continue;
                }
                Ring::Gaussian => (r, y),
            };
            if x > 0 || y > 0 {
                let z = QuadInt::new(BigInt::from(x), BigInt::from(y), ring);
                if z.norm() == BigInt::from(p) {
                    return Some(z);
                }
            }
        }
        y += 1;
    }
}

/// Classification of a rational prime in the ring.
fn splits(p: u64, ring: Ring) -> Option<bool> {
    match ring {
        Ring::Eisenstein if p == 3 => None,
        Ring::Eisenstein => Some(p % 3 == 1),
        Ring::Gaussian if p == 2 => None,
        Ring::Gaussian => Some(p % 4 == 1),
    }
}

/// Complete factorization of `z != 0`.
///
/// Split primes are returned primary, inert primes as the positive rational
/// prime, and the ramified prime as `1 - w` (resp. `1 + i`). Factors are
/// sorted by norm, then by coordinates.
pub fn factor(z: &QuadInt) -> Result<Factorization> {
    if z.is_zero() {
        return Err(Error::Zero("factor argument"));
    }
    let ring = z.ring;
    let mut rest = z.clone();
    let mut factors: Vec<(QuadInt, u32)> = Vec::new();
    let mut take = |rest: &mut QuadInt, p: QuadInt| {
        let mut e = 0;
        while let Some(q) = rest.exact_div(&p) {
            *rest = q;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    let n = z.norm().to_u64().ok_or_else(|| {
        Error::InvalidArgument(format!("norm of {z} is too large to factor"))
    })?;
    for (p, _) in arith::factor_u64(n) {
        match splits(p, ring) {
            None => take(&mut rest, ring.ramified_prime()),
            Some(false) => take(&mut rest, QuadInt::from_int(p, ring)),
            Some(true) => {
                let pi = element_of_norm(p, ring)
                    .expect("split prime has an element of that norm")
                    .primary_associate()?;
                let pi_bar = pi.conj();
                take(&mut rest, pi);
                take(&mut rest, pi_bar);
            }
        }
    }
    debug_assert!(rest.is_unit());
    factors.sort_by(|(a, _), (b, _)| {
        a.norm()
            .cmp(&b.norm())
            .then_with(|| a.x.cmp(&b.x))
            .then_with(|| a.y.cmp(&b.y))
    });
    Ok(Factorization {
        unit: rest,
        factors,
    })
}

/// Whether `z` is a prime element.
pub fn is_prime_element(z: &QuadInt) -> bool {
    if z.is_zero() || z.is_unit() {
        return false;
    }
    let n = match z.norm().to_u64() {
        Some(n) => n,
        None => return false,
    };
    if arith::is_prime(n) {
        return true;
    }
    // inert rational prime up to unit: norm p^2 with p inert
    let r = arith::isqrt(n as u128) as u64;
    r * r == n
        && arith::is_prime(r)
        && splits(r, z.ring) == Some(false)
        && z.is_associate(&QuadInt::from_int(r, z.ring))
}

/// Hermite normal form data of the ideal `(m)`: the lattice contains
/// `(n1, 0)` and `(t, n2)` with `n1 * n2 = N(m)`.
struct IdealLattice {
    n1: BigInt,
    n2: BigInt,
    t: BigInt,
    ring: Ring,
}

impl IdealLattice {
    fn of(m: &QuadInt) -> Result<Self> {
        if m.is_zero() {
            return Err(Error::Zero("modulus"));
        }
        let ring = m.ring;
        let gen = match ring {
            Ring::Eisenstein => QuadInt::new(0, 1, ring),
            Ring::Gaussian => QuadInt::new(0, 1, ring),
        };
        let v1 = m.clone();
        let v2 = m * &gen;
        let g = v1.y.extended_gcd(&v2.y);
        let (n2, s, u) = if g.gcd.is_negative() {
            (-g.gcd, -g.x, -g.y)
        } else {
            (g.gcd, g.x, g.y)
        };
        let n1 = m.norm() / &n2;
        let t = (&v1.x * &s + &v2.x * &u).mod_floor(&n1);
        Ok(IdealLattice { n1, n2, t, ring })
    }

    fn reduce(&self, z: &QuadInt) -> QuadInt {
        let k = z.y.div_floor(&self.n2);
        let x = &z.x - &k * &self.t;
        let y = &z.y - &k * &self.n2;
        QuadInt::new(x.mod_floor(&self.n1), y, self.ring)
    }
}

/// Canonical representative of `z` modulo `m`, lying in the fundamental
/// domain `{a + b*w : 0 <= a < n1, 0 <= b < n2}` used by [`residues_mod`].
pub fn reduce_mod(z: &QuadInt, m: &QuadInt) -> Result<QuadInt> {
    z.check_ring(m)?;
    Ok(IdealLattice::of(m)?.reduce(z))
}

/// A complete residue system modulo `m`, of size `N(m)`, ordered by the
/// second coordinate then the first.
pub fn residues_mod(m: &QuadInt) -> Result<Vec<QuadInt>> {
    let lat = IdealLattice::of(m)?;
    let n1 = lat.n1.to_u64().ok_or(Error::InvalidArgument(
        "residue system too large".to_string(),
    ))?;
    let n2 = lat.n2.to_u64().ok_or(Error::InvalidArgument(
        "residue system too large".to_string(),
    ))?;
    let mut out = Vec::with_capacity((n1 * n2) as usize);
    for b in 0..n2 {
        for a in 0..n1 {
            out.push(QuadInt::new(a, b, m.ring));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(x: i64, y: i64) -> QuadInt {
        QuadInt::eisenstein(x, y)
    }

    fn g(x: i64, y: i64) -> QuadInt {
        QuadInt::gaussian(x, y)
    }

    #[test]
    fn norms() {
        assert_eq!(e(1, 3).norm(), BigInt::from(7));
        assert_eq!(g(1, 1).norm(), BigInt::from(2));
        assert_eq!(e(0, 0).norm(), BigInt::from(0));
        assert_eq!(g(0, 0).norm(), BigInt::from(0));
    }

    #[test]
    fn omega_relation() {
        let w = e(0, 1);
        assert_eq!(&(&w * &w) + &w + QuadInt::one(Ring::Eisenstein), e(0, 0));
        let sqrt_m3 = e(1, 2);
        assert_eq!(&sqrt_m3 * &sqrt_m3, e(-3, 0));
        let i = g(0, 1);
        assert_eq!(&i * &i, g(-1, 0));
    }

    #[test]
    #[should_panic(expected = "mixed-ring")]
    fn mixed_ring_arithmetic_panics() {
        let _ = e(1, 1) + g(1, 1);
    }

    #[test]
    fn gcd_examples() {
        // 7 = (1+3w)(-2-3w)
        assert_eq!(gcd(&e(7, 0), &e(1, 3)).unwrap(), e(1, 3));
        let z = e(2, 3);
        assert_eq!(gcd(&z, &e(0, 0)).unwrap(), z.normalized());
        assert_eq!(gcd(&z, &e(0, 0)).unwrap(), e(-2, -3));
        let r = gcd(&e(3, 0), &e(1, -1)).unwrap();
        assert!(r.is_associate(&e(1, -1)));
        assert!(matches!(
            gcd(&e(1, 0), &g(1, 0)),
            Err(Error::MixedRings(_, _))
        ));
    }

    #[test]
    fn factor_examples() {
        let f = factor(&e(7, 0)).unwrap();
        assert_eq!(f.unit, QuadInt::one(Ring::Eisenstein));
        let primes: Vec<_> = f.factors.iter().map(|(p, _)| p.clone()).collect();
        assert_eq!(primes.len(), 2);
        assert!(primes.contains(&e(1, 3)));
        assert!(primes.contains(&e(-2, -3)));
        assert_eq!(&e(1, 3) * &e(-2, -3), e(7, 0));

        let f = factor(&e(3, 0)).unwrap();
        assert_eq!(f.factors, vec![(e(1, -1), 2)]);
        // -w^2 = 1 + w
        assert_eq!(f.unit, e(1, 1));
        assert_eq!(f.product(), e(3, 0));

        let f = factor(&e(2, 0)).unwrap();
        assert_eq!(f.unit, QuadInt::one(Ring::Eisenstein));
        assert_eq!(f.factors, vec![(e(2, 0), 1)]);

        let f = factor(&g(2, 0)).unwrap();
        assert_eq!(f.factors, vec![(g(1, 1), 2)]);
        assert_eq!(f.product(), g(2, 0));
        assert!(factor(&e(0, 0)).is_err());
    }

    #[test]
    fn primary_examples() {
        assert_eq!(e(2, 3).primary_associate().unwrap(), e(-2, -3));
        assert_eq!(e(1, 3).primary_associate().unwrap(), e(1, 3));
        assert!(matches!(
            e(1, -1).primary_associate(),
            Err(Error::Ramified(_))
        ));
        assert!(e(0, 0).primary_associate().is_err());
        // Gaussian: 3 -> -3 = 1 - 4
        assert_eq!(g(3, 0).primary_associate().unwrap(), g(-3, 0));
    }

    #[test]
    fn residue_systems() {
        assert_eq!(residues_mod(&e(1, 0)).unwrap(), vec![e(0, 0)]);
        assert_eq!(residues_mod(&e(3, 0)).unwrap().len(), 9);
        let m = e(1, 3);
        let rs = residues_mod(&m).unwrap();
        assert_eq!(rs.len(), 7);
        for (i, a) in rs.iter().enumerate() {
            for b in &rs[i + 1..] {
                assert!(!a.is_congruent(b, &m).unwrap());
            }
        }
        assert!(residues_mod(&e(0, 0)).is_err());
    }

    #[test]
    fn reduce_lands_in_residue_system() {
        for m in [e(1, 3), e(3, 0), e(9, 0), e(4, 7), g(3, 2), g(4, 0)] {
            let rs = residues_mod(&m).unwrap();
            for x in -6..6 {
                for y in -6..6 {
                    let z = QuadInt::new(x, y, m.ring());
                    let r = reduce_mod(&z, &m).unwrap();
                    assert!(rs.contains(&r), "{z} mod {m} -> {r}");
                    assert!(r.is_congruent(&z, &m).unwrap());
                }
            }
        }
    }

    #[test]
    fn inverses() {
        let m = e(9, 0);
        for r in residues_mod(&m).unwrap() {
            match r.inverse_mod(&m).unwrap() {
                Some(inv) => {
                    assert!((&r * &inv).is_congruent(&QuadInt::one(Ring::Eisenstein), &m).unwrap())
                }
                None => assert!(!gcd(&r, &m).unwrap().is_unit()),
            }
        }
    }

    #[test]
    fn literals() {
        for (s, z) in [
            ("1+3w", e(1, 3)),
            ("-2-3w", e(-2, -3)),
            ("w", e(0, 1)),
            ("-w", e(0, -1)),
            ("7", e(7, 0)),
            ("1-w", e(1, -1)),
            ("i", g(0, 1)),
            ("1+i", g(1, 1)),
            ("-3i", g(0, -3)),
        ] {
            assert_eq!(s.parse::<QuadInt>().unwrap(), z);
            assert_eq!(z.to_string(), s);
        }
        assert_eq!(QuadInt::parse_in("3", Ring::Gaussian).unwrap(), g(3, 0));
        assert_eq!(QuadInt::parse_in(" 2 + 3 ω ", Ring::Eisenstein).unwrap(), e(2, 3));
        assert!(QuadInt::parse_in("1+i", Ring::Eisenstein).is_err());
        assert!("1+3x".parse::<QuadInt>().is_err());
        assert!("w1".parse::<QuadInt>().is_err());
        assert!("".parse::<QuadInt>().is_err());
    }
}
