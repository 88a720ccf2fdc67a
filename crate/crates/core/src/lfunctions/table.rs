//! Machine-integer coefficient tables.
//!
//! For every split prime `p = 1 mod 3` we store the primary `pi` of norm `p`
//! and the residue `r` of `w` modulo `pi` (so `x + y r = 0 mod p`). Then
//! `(D/pi)_3 = w^k` where `D^((p-1)/3) = r^k mod p`, and
//! `a_p = Tr(w^k conj(pi))`.

use std::sync::{Arc, OnceLock, RwLock};

use crate::arith;

/// Sieve data shared by all coefficient computations.
#[derive(Debug)]
pub struct PrimeData {
    limit: usize,
    spf: Vec<u32>,
    /// For split `p`: `r` and `Tr(w^k conj(pi))` for `k = 0, 1, 2`.
    split: Vec<SplitPrime>,
}

#[derive(Debug, Clone, Copy, Default)]
struct SplitPrime {
    r: u32,
    traces: [i32; 3],
}

impl PrimeData {
    pub fn new(limit: usize) -> Self {
        let limit = limit.max(16);
        let spf = arith::spf_sieve(limit);
        let mut split = vec![SplitPrime::default(); limit + 1];
        for p in (7..=limit).step_by(6) {
            if spf[p] as usize != p {
                continue;
            }
            let (x, y) = primary_prime(p as i64);
            let pp = p as i64;
            let r = (-x).rem_euclid(pp) * inv_mod(y.rem_euclid(pp), pp) % pp;
            // conj(x + y w) = (x - y) - y w; multiplication by w maps
            // (u, v) to (-v, u - v).
            let (mut u, mut v) = (x - y, -y);
            let mut traces = [0i32; 3];
            for t in &mut traces {
                *t = (2 * u - v) as i32;
                (u, v) = (-v, u - v);
            }
            split[p] = SplitPrime {
                r: r as u32,
                traces,
            };
        }
        PrimeData { limit, spf, split }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn smallest_prime_factor(&self, n: usize) -> u32 {
        self.spf[n]
    }

    /// `a_p` for a prime `p <= limit` and cube-free `d`.
    #[inline]
    pub fn a_p(&self, d: i64, p: u64) -> i64 {
        if p % 3 != 1 {
            return 0;
        }
        let dm = d.rem_euclid(p as i64) as u64;
        if dm == 0 {
            return 0;
        }
        let s = self.split[p as usize];
        let t = pow_mod_small(dm, (p - 1) / 3, p);
        let k = if t == 1 {
            0
        } else if t == s.r as u64 {
            1
        } else {
            debug_assert_eq!(t, s.r as u64 * s.r as u64 % p);
            2
        };
        s.traces[k] as i64
    }

    /// `a_1, ..., a_m` (index 0 unused and set to 0) for the twist by `d`.
    pub fn coefficients(&self, d: i64, m: usize) -> Vec<i64> {
        assert!(m <= self.limit, "table limit {} below {m}", self.limit);
        let mut a = vec![0i64; m + 1];
        if m == 0 {
            return a;
        }
        a[1] = 1;
        for n in 2..=m {
            let p = self.spf[n] as usize;
            let mut rest = n / p;
            let mut pk = p;
            while rest % p == 0 {
                rest /= p;
                pk *= p;
            }
            a[n] = if rest > 1 {
                a[pk] * a[rest]
            } else if p == 3 || d % p as i64 == 0 {
                0
            } else if pk == p {
                self.a_p(d, p as u64)
            } else {
                a[p] * a[n / p] - p as i64 * a[n / p / p]
            };
        }
        a
    }
}

/// Shared prime data covering at least `limit`; grows geometrically.
pub fn prime_data(limit: usize) -> Arc<PrimeData> {
    static DATA: OnceLock<RwLock<Arc<PrimeData>>> = OnceLock::new();
    let lock = DATA.get_or_init(|| RwLock::new(Arc::new(PrimeData::new(1 << 16))));
    {
        let current = lock.read().expect("prime data lock");
        if current.limit() >= limit {
            return Arc::clone(&current);
        }
    }
    let mut guard = lock.write().expect("prime data lock");
    if guard.limit() < limit {
        let target = limit.max(guard.limit() * 2);
        *guard = Arc::new(PrimeData::new(target));
    }
    Arc::clone(&guard)
}

fn pow_mod_small(base: u64, mut e: u64, m: u64) -> u64 {
    if m >= 1 << 32 {
        return arith::pow_mod(base, e, m);
    }
    let mut b = base % m;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: i64, m: i64) -> i64 {
    let (mut r0, mut r1, mut s0, mut s1) = (a, m, 1i64, 0i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1);
    s0.rem_euclid(m)
}

/// The primary element `x + y w` of norm `p = 1 mod 3`, found by reducing
/// the lattice `{(x, y) : x + y t = 0 mod p}` with `t` a cube root of unity
/// mod `p`, under the form `x^2 - xy + y^2`.
pub(crate) fn primary_prime(p: i64) -> (i64, i64) {
    let t = (2..p)
        .map(|g| pow_mod_small(g as u64, (p as u64 - 1) / 3, p as u64))
        .find(|&t| t != 1)
        .expect("p = 1 mod 3 has a nontrivial cube root of unity") as i64;
    let q = |v: (i64, i64)| (v.0 as i128).pow(2) - (v.0 as i128) * (v.1 as i128) + (v.1 as i128).pow(2);
    // Twice the associated bilinear form.
    let b2 = |u: (i64, i64), v: (i64, i64)| {
        2 * (u.0 as i128 * v.0 as i128 + u.1 as i128 * v.1 as i128)
            - (u.0 as i128 * v.1 as i128 + u.1 as i128 * v.0 as i128)
    };
    let mut u = (p, 0i64);
    let mut v = (-t, 1i64);
    if q(u) < q(v) {
        std::mem::swap(&mut u, &mut v);
    }
    loop {
        // u longer than v: subtract the nearest multiple of v.
        let num = b2(u, v);
        let den = 2 * q(v);
        let m = (2 * num + den).div_euclid(2 * den) as i64;
        u = (u.0 - m * v.0, u.1 - m * v.1);
        if q(u) >= q(v) {
            break;
        }
        std::mem::swap(&mut u, &mut v);
    }
    debug_assert_eq!(q(v), p as i128);
    // Pick the primary associate among the six unit multiples.
    let (mut x, mut y) = v;
    for _ in 0..3 {
        for (a, b) in [(x, y), (-x, -y)] {
            if a.rem_euclid(3) == 1 && b.rem_euclid(3) == 0 {
                return (a, b);
            }
        }
        (x, y) = (-y, x - y);
    }
    unreachable!("an element prime to 3 has a primary associate")
}
