//! Kubota symbols on congruence subgroups.
//!
//! * `Gamma(lambda^3)` in `SL(2, Z[i])`, `lambda = 1 + i`: matrices congruent
//!   to the identity modulo `lambda^3`, with a quadratic-symbol valued kappa.
//! * `Gamma` in `SL(3, Z[w])`: matrices congruent to the identity modulo 3,
//!   with the cubic kappa built from the bottom rows of `g` and `iota(g)`.
//!
//! Matrix indices are zero-based throughout.

use std::fmt;
use std::ops::Mul;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rings::{self, QuadInt, Ring};
use crate::symbols::{cubic_symbol, quadratic_symbol, SymbolKind, SymbolValue};

/// A square matrix of size 2 or 3 with determinant 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    ring: Ring,
    entries: Vec<QuadInt>,
}

impl IntMatrix {
    /// Builds a matrix from row-major entries, checking the size, the ring and
    /// that the determinant is 1.
    pub fn new(n: usize, entries: Vec<QuadInt>) -> Result<Self> {
        if !(n == 2 || n == 3) || entries.len() != n * n {
            return Err(Error::InvalidArgument(format!(
                "expected a 2x2 or 3x3 matrix, got {} entries for n = {n}",
                entries.len()
            )));
        }
        let ring = entries[0].ring();
        if let Some(bad) = entries.iter().find(|e| e.ring() != ring) {
            return Err(Error::MixedRings(ring.name(), bad.ring().name()));
        }
        let m = IntMatrix { n, ring, entries };
        let det = m.det();
        if det != QuadInt::one(ring) {
            return Err(Error::NotInGroup(format!("determinant is {det}, not 1")));
        }
        Ok(m)
    }

    pub fn identity(n: usize, ring: Ring) -> Self {
        let mut entries = vec![QuadInt::zero(ring); n * n];
        for i in 0..n {
            entries[i * n + i] = QuadInt::one(ring);
        }
        IntMatrix { n, ring, entries }
    }

    /// `I + t E_ij` for `i != j`.
    pub fn elementary(n: usize, i: usize, j: usize, t: QuadInt) -> Self {
        assert!(i != j && i < n && j < n, "elementary matrix needs i != j");
        let mut m = Self::identity(n, t.ring());
        m.entries[i * n + j] = t;
        m
    }

    /// Parses `n*n` comma-separated ring literals (row-major).
    pub fn parse(s: &str, ring: Ring) -> Result<Self> {
        let parts: Vec<&str> = s.split([',', ';']).map(str::trim).collect();
        let n = match parts.len() {
            4 => 2,
            9 => 3,
            k => {
                return Err(Error::Parse {
                    input: s.to_string(),
                    reason: format!("expected 4 or 9 entries, found {k}"),
                })
            }
        };
        let entries = parts
            .iter()
            .map(|p| QuadInt::parse_in(p, ring))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, entries)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn get(&self, i: usize, j: usize) -> &QuadInt {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[QuadInt] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn entries(&self) -> &[QuadInt] {
        &self.entries
    }

    pub fn det(&self) -> QuadInt {
        let e = |i: usize, j: usize| self.get(i, j);
        match self.n {
            2 => &(e(0, 0) * e(1, 1)) - &(e(0, 1) * e(1, 0)),
            _ => {
                let mut acc = QuadInt::zero(self.ring);
                for j in 0..3 {
                    let minor = self.cofactor(0, j);
                    acc = &acc + &(e(0, j) * &minor);
                }
                acc
            }
        }
    }

    fn cofactor(&self, i: usize, j: usize) -> QuadInt {
        match self.n {
            2 => {
                let v = self.get(1 - i, 1 - j).clone();
                if (i + j) % 2 == 0 {
                    v
                } else {
                    -v
                }
            }
            _ => {
                let rows: Vec<usize> = (0..3).filter(|&r| r != i).collect();
                let cols: Vec<usize> = (0..3).filter(|&c| c != j).collect();
                let m = &(self.get(rows[0], cols[0]) * self.get(rows[1], cols[1]))
                    - &(self.get(rows[0], cols[1]) * self.get(rows[1], cols[0]));
                if (i + j) % 2 == 0 {
                    m
                } else {
                    -m
                }
            }
        }
    }

    /// The inverse, computed as the adjugate (determinant is 1).
    pub fn inverse(&self) -> Self {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.cofactor(j, i));
            }
        }
        IntMatrix {
            n,
            ring: self.ring,
            entries,
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.get(j, i).clone());
            }
        }
        IntMatrix {
            n,
            ring: self.ring,
            entries,
        }
    }

    /// Whether every entry of `self - I` is divisible by `m`.
    pub fn is_identity_mod(&self, m: &QuadInt) -> bool {
        let id = Self::identity(self.n, self.ring);
        self.entries
            .iter()
            .zip(&id.entries)
            .all(|(a, b)| (a - b).is_divisible_by(m).unwrap_or(false))
    }

    /// Membership in `Gamma(lambda^3)` of `SL(2, Z[i])`.
    pub fn in_gamma2(&self) -> bool {
        self.n == 2
            && self.ring == Ring::Gaussian
            && self.is_identity_mod(&Ring::Gaussian.primary_modulus())
    }

    /// Membership in `Gamma` of `SL(3, Z[w])`.
    pub fn in_gamma3(&self) -> bool {
        self.n == 3 && self.ring == Ring::Eisenstein && self.is_identity_mod(&QuadInt::eisenstein(3, 0))
    }

    pub fn max_norm(&self) -> num_bigint::BigInt {
        self.entries.iter().map(|e| e.norm()).max().unwrap_or_default()
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "matrix sizes differ");
        assert_eq!(self.ring, rhs.ring, "matrix rings differ");
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = QuadInt::zero(self.ring);
                for k in 0..n {
                    acc = &acc + &(self.get(i, k) * rhs.get(k, j));
                }
                entries.push(acc);
            }
        }
        IntMatrix {
            n,
            ring: self.ring,
            entries,
        }
    }
}

impl Mul for IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: IntMatrix) -> IntMatrix {
        &self * &rhs
    }
}

impl fmt::Display for IntMatrix {
    /// Row-major, comma-separated; parses back with [`IntMatrix::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// `iota(g) = J g^{-T} J`, `J` the antidiagonal permutation matrix.
pub fn involution(g: &IntMatrix) -> IntMatrix {
    let n = g.n;
    let inv = g.inverse();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            entries.push(inv.get(n - 1 - j, n - 1 - i).clone());
        }
    }
    IntMatrix {
        n,
        ring: g.ring,
        entries,
    }
}

/// Which residue symbol represents kappa on `Gamma(lambda^3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Convention {
    /// `(a/b)_2` from the top row, as literally written. Since `b` is
    /// divisible by `lambda^3` this symbol is never defined when `c != 0`.
    TopRow,
    /// The bottom-row symbol `(c/d)_2`.
    Standard,
}

/// Kappa on `Gamma(lambda^3)`: `+1` when `c = 0`, otherwise the quadratic
/// symbol selected by `convention`.
pub fn gl2_kappa(gamma: &IntMatrix, convention: Convention) -> Result<SymbolValue> {
    if !gamma.in_gamma2() {
        return Err(Error::NotInGroup(format!(
            "{gamma} is not congruent to the identity modulo (1+i)^3 in SL(2, Z[i])"
        )));
    }
    let (a, b, c, d) = (gamma.get(0, 0), gamma.get(0, 1), gamma.get(1, 0), gamma.get(1, 1));
    if c.is_zero() {
        return Ok(SymbolValue::one(SymbolKind::Quadratic));
    }
    let (num, den) = match convention {
        Convention::TopRow => (a, b),
        Convention::Standard => (c, d),
    };
    if den.is_zero() {
        return Err(Error::UndefinedSymbol(format!("({num}/{den})_2 has zero denominator")));
    }
    let v = quadratic_symbol(num, den)?;
    if !v.is_coprime() {
        return Err(Error::UndefinedSymbol(format!("({num}/{den})_2: arguments share a factor")));
    }
    Ok(v)
}

/// Bottom-row data of `g` and `iota(g)` with a factorization
/// `B1 = r1 B1'`, `B2 = r2 B2'`, `C1 = r1 r2 C1'`, `C2 = r1 r2 C2'`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KubotaInvariants {
    pub a1: QuadInt,
    pub b1: QuadInt,
    pub c1: QuadInt,
    pub a2: QuadInt,
    pub b2: QuadInt,
    pub c2: QuadInt,
    pub r1: QuadInt,
    pub r2: QuadInt,
    pub b1p: QuadInt,
    pub b2p: QuadInt,
    pub c1p: QuadInt,
    pub c2p: QuadInt,
}

impl KubotaInvariants {
    /// Checks every structural invariant; returns a description of the first
    /// violation.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let three = QuadInt::eisenstein(3, 0);
        let one = QuadInt::eisenstein(1, 0);
        let unit_gcd = |x: &QuadInt, y: &QuadInt, z: &QuadInt| {
            rings::gcd(&rings::gcd(x, y).unwrap(), z).unwrap().is_unit()
        };
        if !unit_gcd(&self.a1, &self.b1, &self.c1) || !unit_gcd(&self.a2, &self.b2, &self.c2) {
            return Err("bottom row is not primitive".into());
        }
        let rel = &(&(&self.a1 * &self.c2) + &(&self.b1 * &self.b2)) + &(&self.c1 * &self.a2);
        if !rel.is_zero() {
            return Err(format!("A1 C2 + B1 B2 + C1 A2 = {rel}"));
        }
        for (name, v) in [("A1", &self.a1), ("A2", &self.a2), ("B1", &self.b1), ("B2", &self.b2)] {
            if !v.is_divisible_by(&three).unwrap() {
                return Err(format!("{name} = {v} is not divisible by 3"));
            }
        }
        for (name, v) in [("C1", &self.c1), ("C2", &self.c2), ("r1", &self.r1), ("r2", &self.r2)] {
            if !v.is_congruent(&one, &three).unwrap() {
                return Err(format!("{name} = {v} is not 1 mod 3"));
            }
        }
        let r = &self.r1 * &self.r2;
        let checks = [
            (&self.b1, &self.r1 * &self.b1p, "B1 = r1 B1'"),
            (&self.b2, &self.r2 * &self.b2p, "B2 = r2 B2'"),
            (&self.c1, &r * &self.c1p, "C1 = r1 r2 C1'"),
            (&self.c2, &r * &self.c2p, "C2 = r1 r2 C2'"),
        ];
        for (lhs, rhs, what) in checks {
            if *lhs != rhs {
                return Err(format!("{what} fails"));
            }
        }
        if !rings::gcd(&self.c1p, &self.c2p).unwrap().is_unit() {
            return Err("gcd(C1', C2') is not a unit".into());
        }
        Ok(())
    }

    fn with_factorization(&self, r1: QuadInt, r2: QuadInt) -> Option<Self> {
        let r = &r1 * &r2;
        let b1p = self.b1.exact_div(&r1)?;
        let b2p = self.b2.exact_div(&r2)?;
        let c1p = self.c1.exact_div(&r)?;
        let c2p = self.c2.exact_div(&r)?;
        Some(KubotaInvariants {
            r1,
            r2,
            b1p,
            b2p,
            c1p,
            c2p,
            ..self.clone()
        })
    }

    /// Every valid factorization: `r1 r2 = gcd(C1, C2)` with `r1 | B1`,
    /// `r2 | B2`, both primary.
    pub fn factorizations(&self) -> Result<Vec<KubotaInvariants>> {
        let g = rings::gcd(&self.c1, &self.c2)?;
        let mut out = Vec::new();
        for r1 in primary_divisors(&g)? {
            let r2 = g.exact_div(&r1).expect("divisor divides");
            if let Some(f) = self.with_factorization(r1, r2) {
                out.push(f);
            }
        }
        Ok(out)
    }

    /// The kappa exponent for this factorization.
    pub fn kappa(&self) -> Result<SymbolValue> {
        let terms = [
            (&self.b1p, &self.c1p, false),
            (&self.b2p, &self.c2p, false),
            (&self.c1p, &self.c2p, true),
            (&self.a1, &self.r1, false),
            (&self.a2, &self.r2, false),
        ];
        let mut acc = SymbolValue::one(SymbolKind::Cubic);
        for (num, den, invert) in terms {
            let v = cubic_symbol(num, den)?;
            if !v.is_coprime() {
                return Err(Error::UndefinedSymbol(format!("({num}/{den})_3: arguments share a factor")));
            }
            acc = acc.mul(if invert { v.inverse() } else { v });
        }
        Ok(acc)
    }
}

/// All primary divisors of a primary (or unit) element.
fn primary_divisors(g: &QuadInt) -> Result<Vec<QuadInt>> {
    let f = rings::factor(g)?;
    let mut out = vec![QuadInt::one(g.ring())];
    for (p, e) in &f.factors {
        let p = p.primary_associate()?;
        let mut next = Vec::with_capacity(out.len() * (*e as usize + 1));
        for d in &out {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..*e {
                pk = &pk * &p;
                next.push(pk.clone());
            }
        }
        out = next;
    }
    Ok(out)
}

fn require_gamma3(gamma: &IntMatrix) -> Result<()> {
    if gamma.in_gamma3() {
        Ok(())
    } else {
        Err(Error::NotInGroup(format!(
            "{gamma} is not congruent to the identity modulo 3 in SL(3, Z[w])"
        )))
    }
}

fn bottom_rows(gamma: &IntMatrix) -> KubotaInvariants {
    let i = involution(gamma);
    let one = QuadInt::one(Ring::Eisenstein);
    KubotaInvariants {
        a1: gamma.get(2, 0).clone(),
        b1: gamma.get(2, 1).clone(),
        c1: gamma.get(2, 2).clone(),
        a2: i.get(2, 0).clone(),
        b2: i.get(2, 1).clone(),
        c2: i.get(2, 2).clone(),
        r1: one.clone(),
        r2: one.clone(),
        b1p: one.clone(),
        b2p: one.clone(),
        c1p: one.clone(),
        c2p: one,
    }
}

/// Bottom-row invariants of `gamma` with a valid factorization.
///
/// The first choice tried is `r1 = gcd(G, B1)`, `r2 = G / r1` with
/// `G = gcd(C1, C2)`; if `r2` does not divide `B2` all primary divisors of
/// `G` are searched.
pub fn gl3_invariants(gamma: &IntMatrix) -> Result<KubotaInvariants> {
    require_gamma3(gamma)?;
    let base = bottom_rows(gamma);
    let g = rings::gcd(&base.c1, &base.c2)?;
    let r1 = rings::gcd(&g, &base.b1)?;
    let r2 = g.exact_div(&r1).expect("gcd divides");
    if let Some(inv) = base.with_factorization(r1, r2) {
        return Ok(inv);
    }
    base.factorizations()?
        .into_iter()
        .next()
        .ok_or_else(|| Error::NoFactorization(gamma.to_string()))
}

/// All valid factorizations of the invariants of `gamma`.
pub fn gl3_factorizations(gamma: &IntMatrix) -> Result<Vec<KubotaInvariants>> {
    require_gamma3(gamma)?;
    bottom_rows(gamma).factorizations()
}

/// The cubic Kubota symbol of `gamma`.
pub fn gl3_kappa(gamma: &IntMatrix) -> Result<SymbolValue> {
    gl3_invariants(gamma)?.kappa()
}

/// Completes a bottom row `(c, d)` with `c = 0` and `d = 1` modulo the
/// ring's primary modulus to `[a, b, c, d]` of determinant 1 and congruent to
/// the identity.
pub fn complete_sl2(c: &QuadInt, d: &QuadInt) -> Result<[QuadInt; 4]> {
    let ring = d.ring();
    let m = ring.primary_modulus();
    if c.ring() != ring || !c.is_divisible_by(&m)? || !d.is_primary() {
        return Err(Error::InvalidArgument(format!(
            "bottom row ({c}, {d}) is not congruent to (0, 1)"
        )));
    }
    let (g, s, t) = d.extended_gcd(c)?;
    if !g.is_unit() {
        return Err(Error::InvalidArgument(format!("({c}, {d}) is not primitive")));
    }
    let ginv = QuadInt::one(ring).exact_div(&g).expect("unit");
    // s d + t c = 1 after scaling; shifting by -b (c, d) makes b = 0 mod m.
    let a0 = &s * &ginv;
    let b0 = -(&t * &ginv);
    let a = &a0 - &(&b0 * c);
    let b = &b0 - &(&b0 * d);
    Ok([a, b, c.clone(), d.clone()])
}

/// A 3x3 identity with the completion of `(c, d)` placed at rows and columns
/// `i, j`: entries `(i,i), (i,j), (j,i), (j,j)` are `a, b, c, d`.
pub fn embedded_sl2(c: &QuadInt, d: &QuadInt, i: usize, j: usize) -> Result<IntMatrix> {
    if c.ring() != Ring::Eisenstein || i == j || i > 2 || j > 2 {
        return Err(Error::InvalidArgument(format!(
            "cannot embed bottom row ({c}, {d}) at ({i}, {j})"
        )));
    }
    let [a, b, c, d] = complete_sl2(c, d)?;
    let mut m = IntMatrix::identity(3, Ring::Eisenstein);
    m.entries[i * 3 + i] = a;
    m.entries[i * 3 + j] = b;
    m.entries[j * 3 + i] = c;
    m.entries[j * 3 + j] = d;
    Ok(m)
}

/// The fixed generating list used by [`sample_gamma`].
///
/// Words in the elementary matrices alone lie in the kernel of kappa, so the
/// list also holds a few `SL(2)` blocks with non-zero lower-left entry.
pub fn generators(n: usize) -> Vec<IntMatrix> {
    let (ring, units) = match n {
        2 => (Ring::Gaussian, vec![QuadInt::gaussian(1, 0), QuadInt::gaussian(0, 1)]),
        _ => (Ring::Eisenstein, vec![QuadInt::eisenstein(1, 0), QuadInt::eisenstein(0, 1)]),
    };
    let modulus = ring.primary_modulus();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for u in &units {
                let t = &modulus * u;
                out.push(IntMatrix::elementary(n, i, j, t.clone()));
                out.push(IntMatrix::elementary(n, i, j, -t));
            }
        }
    }
    let (cs, ds): (Vec<QuadInt>, Vec<QuadInt>) = match n {
        2 => (
            [(-2, 2), (2, 2), (4, 0), (0, 4)].map(|(x, y)| QuadInt::gaussian(x, y)).into(),
            [(-1, 2), (3, 2), (1, 4), (5, 0)].map(|(x, y)| QuadInt::gaussian(x, y)).into(),
        ),
        _ => (
            [(3, 0), (0, 3), (3, 6)].map(|(x, y)| QuadInt::eisenstein(x, y)).into(),
            [(-2, 0), (4, 3), (1, 3), (-2, -3)].map(|(x, y)| QuadInt::eisenstein(x, y)).into(),
        ),
    };
    for c in &cs {
        for d in &ds {
            if !d.is_primary() || !rings::gcd(c, d).map(|g| g.is_unit()).unwrap_or(false) {
                continue;
            }
            let blocks: Vec<IntMatrix> = if n == 2 {
                let e = complete_sl2(c, d).expect("valid block");
                vec![IntMatrix {
                    n: 2,
                    ring,
                    entries: e.to_vec(),
                }]
            } else {
                [(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]
                    .iter()
                    .map(|&(i, j)| embedded_sl2(c, d, i, j).expect("valid block"))
                    .collect()
            };
            for b in blocks {
                out.push(b.inverse());
                out.push(b);
            }
        }
    }
    out
}

/// A deterministic pseudo-random product of `word_length` matrices from
/// [`generators`]: for `n = 2`, generators of `Gamma(lambda^3)` in
/// `SL(2, Z[i])`; for `n = 3`, of `Gamma` in `SL(3, Z[w])`.
pub fn sample_gamma(ring: Ring, n: usize, word_length: usize, seed: u64) -> Result<IntMatrix> {
    match (ring, n) {
        (Ring::Gaussian, 2) | (Ring::Eisenstein, 3) => {}
        _ => {
            return Err(Error::InvalidArgument(format!(
                "no sampled group for {} integers with n = {n}",
                ring.name()
            )))
        }
    }
    let gens = generators(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = IntMatrix::identity(n, ring);
    for _ in 0..word_length {
        m = &m * &gens[rng.gen_range(0..gens.len())];
    }
    Ok(m)
}

/// Outcome of a sampled homomorphism check.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomomorphismReport {
    pub samples: usize,
    pub passed: usize,
    pub failed: usize,
    /// Pairs where some kappa value was undefined.
    pub errors: usize,
    pub first_error: Option<String>,
}

impl HomomorphismReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.errors == 0 && self.passed == self.samples
    }
}

/// Tests `kappa(g h) = kappa(g) kappa(h)` on `samples` pseudo-random pairs.
/// Word lengths are drawn from `1..=max_word`.
pub fn check_homomorphism(
    n: usize,
    convention: Convention,
    samples: usize,
    max_word: usize,
    seed: u64,
) -> Result<HomomorphismReport> {
    let ring = match n {
        2 => Ring::Gaussian,
        3 => Ring::Eisenstein,
        _ => return Err(Error::InvalidArgument(format!("n must be 2 or 3, got {n}"))),
    };
    let kappa = |g: &IntMatrix| match n {
        2 => gl2_kappa(g, convention),
        _ => gl3_kappa(g),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = HomomorphismReport {
        samples,
        ..Default::default()
    };
    for _ in 0..samples {
        let g = sample_gamma(ring, n, rng.gen_range(1..=max_word.max(1)), rng.gen())?;
        let h = sample_gamma(ring, n, rng.gen_range(1..=max_word.max(1)), rng.gen())?;
        match (kappa(&g), kappa(&h), kappa(&(&g * &h))) {
            (Ok(a), Ok(b), Ok(c)) => {
                if a.mul(b) == c {
                    report.passed += 1;
                } else {
                    report.failed += 1;
                }
            }
            (a, b, c) => {
                report.errors += 1;
                if report.first_error.is_none() {
                    let e = [a, b, c].into_iter().find_map(|r| r.err()).expect("one error");
                    report.first_error = Some(e.to_string());
                }
            }
        }
    }
    Ok(report)
}

/// Matrices in `Gamma` with at least two valid factorizations, built from
/// `SL(2)` blocks with composite lower-right entry and products of them.
pub fn multi_factorization_samples(count: usize, seed: u64) -> Result<Vec<IntMatrix>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let blocks = [(0usize, 2usize), (1, 2), (0, 1)];
    let mut attempts = 0usize;
    while out.len() < count {
        attempts += 1;
        if attempts > 200 * count + 1000 {
            break;
        }
        let d = QuadInt::eisenstein(1 + 3 * rng.gen_range(-8i64..=8), 3 * rng.gen_range(-8i64..=8));
        let c = QuadInt::eisenstein(3 * rng.gen_range(-6i64..=6), 3 * rng.gen_range(-6i64..=6));
        if c.is_zero() || d.is_unit() || !rings::gcd(&c, &d)?.is_unit() {
            continue;
        }
        let (i, j) = blocks[rng.gen_range(0..2)];
        let mut m = embedded_sl2(&c, &d, i, j)?;
        if rng.gen_bool(0.5) {
            let k = rng.gen_range(0..blocks.len());
            let (i2, j2) = blocks[k];
            let d2 = QuadInt::eisenstein(1 + 3 * rng.gen_range(-3i64..=3), 3 * rng.gen_range(-3i64..=3));
            let c2 = QuadInt::eisenstein(3 * rng.gen_range(-3i64..=3), 3 * rng.gen_range(-3i64..=3));
            if !c2.is_zero() && rings::gcd(&c2, &d2)?.is_unit() {
                let other = embedded_sl2(&c2, &d2, i2, j2)?;
                m = if rng.gen_bool(0.5) { &m * &other } else { &other * &m };
            }
        }
        if gl3_factorizations(&m)?.len() >= 2 {
            out.push(m);
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

    #[test]
    fn involution_examples() {
        let id = IntMatrix::identity(3, Ring::Eisenstein);
        assert_eq!(involution(&id), id);
        let g = IntMatrix::elementary(3, 2, 0, e(3, 0));
        assert_eq!(involution(&g), IntMatrix::elementary(3, 2, 0, e(-3, 0)));
    }

    #[test]
    fn invariants_of_simple_matrices() {
        let id = IntMatrix::identity(3, Ring::Eisenstein);
        let inv = gl3_invariants(&id).unwrap();
        assert_eq!((inv.a1.clone(), inv.b1.clone(), inv.c1.clone()), (e(0, 0), e(0, 0), e(1, 0)));
        assert_eq!(inv.r1, e(1, 0));
        assert_eq!(gl3_kappa(&id).unwrap().exponent(), Some(0));

        let g = IntMatrix::elementary(3, 2, 0, e(3, 0));
        let inv = gl3_invariants(&g).unwrap();
        assert_eq!((inv.a1.clone(), inv.b1.clone(), inv.c1.clone()), (e(3, 0), e(0, 0), e(1, 0)));
        assert_eq!((inv.a2.clone(), inv.b2.clone(), inv.c2.clone()), (e(-3, 0), e(0, 0), e(1, 0)));
        inv.validate().unwrap();
        assert_eq!(gl3_kappa(&g).unwrap().exponent(), Some(0));
    }

    #[test]
    fn gl2_trivial_cases() {
        let id = IntMatrix::identity(2, Ring::Gaussian);
        let up = IntMatrix::elementary(2, 0, 1, Ring::Gaussian.primary_modulus());
        for c in [Convention::TopRow, Convention::Standard] {
            assert_eq!(gl2_kappa(&id, c).unwrap().exponent(), Some(0));
            assert_eq!(gl2_kappa(&up, c).unwrap().exponent(), Some(0));
        }
    }

    #[test]
    fn top_row_symbol_is_undefined_off_the_c_zero_branch() {
        let low = IntMatrix::elementary(2, 1, 0, Ring::Gaussian.primary_modulus());
        assert!(matches!(
            gl2_kappa(&low, Convention::TopRow),
            Err(Error::UndefinedSymbol(_))
        ));
        let g = sample_gamma(Ring::Gaussian, 2, 6, 11).unwrap();
        if !g.get(1, 0).is_zero() {
            assert!(matches!(
                gl2_kappa(&g, Convention::TopRow),
                Err(Error::EvenDenominator(_)) | Err(Error::UndefinedSymbol(_))
            ));
        }
    }

    #[test]
    fn membership_checked() {
        let g = IntMatrix::elementary(3, 0, 1, e(1, 0));
        assert!(matches!(gl3_kappa(&g), Err(Error::NotInGroup(_))));
        let bad = IntMatrix::parse("2,0,0,1", Ring::Gaussian);
        assert!(matches!(bad, Err(Error::NotInGroup(_))));
    }

    #[test]
    fn parse_round_trip() {
        let g = sample_gamma(Ring::Eisenstein, 3, 5, 3).unwrap();
        assert_eq!(IntMatrix::parse(&g.to_string(), Ring::Eisenstein).unwrap(), g);
        let h = sample_gamma(Ring::Gaussian, 2, 5, 3).unwrap();
        assert_eq!(IntMatrix::parse(&h.to_string(), Ring::Gaussian).unwrap(), h);
    }

    #[test]
    fn sampling_is_deterministic() {
        assert_eq!(
            sample_gamma(Ring::Eisenstein, 3, 0, 1).unwrap(),
            IntMatrix::identity(3, Ring::Eisenstein)
        );
        let a = sample_gamma(Ring::Eisenstein, 3, 7, 42).unwrap();
        let b = sample_gamma(Ring::Eisenstein, 3, 7, 42).unwrap();
        assert_eq!(a, b);
        assert!(a.in_gamma3());
    }

    #[test]
    fn embedded_blocks_are_in_gamma() {
        let m = embedded_sl2(&e(3, 3), &e(4, 6), 0, 2).unwrap();
        assert!(m.in_gamma3());
        assert_eq!(m.get(2, 0), &e(3, 3));
    }
}
