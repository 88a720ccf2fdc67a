//! Rational-integer helpers: sieves, modular powers, primality and factoring
//! of machine-sized integers.

/// `base^exp mod m` for `m < 2^63`.
pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut b = (base % m) as u128;
    let m128 = m as u128;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// Deterministic Miller-Rabin for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = num_integer::gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

/// Prime factorization of `n >= 1` as sorted `(prime, exponent)` pairs.
pub fn factor_u64(n: u64) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = Vec::new();
    let mut stack = Vec::new();
    let mut m = n;
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        while m % p == 0 {
            push_prime(&mut out, p);
            m /= p;
        }
    }
    if m > 1 {
        stack.push(m);
    }
    while let Some(k) = stack.pop() {
        if k == 1 {
            continue;
        }
        if is_prime(k) {
            push_prime(&mut out, k);
            continue;
        }
        let d = pollard_rho(k);
        stack.push(d);
        stack.push(k / d);
    }
    out.sort_unstable();
    out
}

fn push_prime(out: &mut Vec<(u64, u32)>, p: u64) {
    match out.iter_mut().find(|(q, _)| *q == p) {
        Some(entry) => entry.1 += 1,
        None => out.push((p, 1)),
    }
}

/// Smallest-prime-factor table for `0..=n` (entries 0 and 1 are 0).
pub fn spf_sieve(n: usize) -> Vec<u32> {
    let mut spf = vec![0u32; n + 1];
    for i in 2..=n {
        if spf[i] == 0 {
            let mut j = i;
            while j <= n {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    spf
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Floor of the real cube root of `n >= 0`.
pub fn icbrt(n: u128) -> u128 {
    let mut r = (n as f64).cbrt() as u128;
    while r > 0 && r * r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Floor square root of `n >= 0`.
pub fn isqrt(n: u128) -> u128 {
    let mut r = (n as f64).sqrt() as u128;
    while r > 0 && r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

pub fn is_cubefree(k: i64) -> bool {
    if k == 0 {
        return false;
    }
    factor_u64(k.unsigned_abs()).iter().all(|&(_, e)| e < 3)
}

/// Product of the distinct primes dividing `n`.
pub fn radical(n: u64) -> u64 {
    factor_u64(n).iter().map(|&(p, _)| p).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_reconstructs() {
        for n in 1..3000u64 {
            let f = factor_u64(n);
            let back: u64 = f.iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(back, n);
            assert!(f.iter().all(|&(p, _)| is_prime(p)));
        }
        let big = 1_000_003u64 * 999_983;
        assert_eq!(factor_u64(big), vec![(999_983, 1), (1_000_003, 1)]);
    }

    #[test]
    fn primality_matches_sieve() {
        let ps = primes_up_to(10_000);
        for n in 0..10_000u64 {
            assert_eq!(is_prime(n), ps.binary_search(&n).is_ok(), "{n}");
        }
    }

    #[test]
    fn roots() {
        assert_eq!(icbrt(26), 2);
        assert_eq!(icbrt(27), 3);
        assert_eq!(isqrt(99), 9);
        assert_eq!(isqrt(100), 10);
        assert_eq!(icbrt(1_000_000_000_000_000_000), 1_000_000);
    }

    #[test]
    fn cubefree() {
        assert!(is_cubefree(7));
        assert!(is_cubefree(-12));
        assert!(!is_cubefree(8));
        assert!(!is_cubefree(24));
        assert!(!is_cubefree(0));
        assert_eq!(radical(72), 6);
    }
}
