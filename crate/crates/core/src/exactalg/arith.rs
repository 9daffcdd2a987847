//! Elementary number theory over `u64`: gcds, modular inverses and powers,
//! primality by trial division, factorization, totients, unit lists.
//!
//! Scale is small (parameters are human-sized, not cryptographic), so the
//! simplest correct algorithm wins every time.

use crate::{Error, Result};

/// Greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Extended gcd: returns `(g, x, y)` with `a·x + b·y = g = gcd(a, b)`.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a.abs(), if a < 0 { -1 } else { 1 }, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Inverse of `a` modulo `m` (least nonnegative), if `gcd(a, m) = 1`.
///
/// By convention the modulus 1 ring is the zero ring, where 0 is its own
/// inverse.
pub fn mod_inv(a: u64, m: u64) -> Option<u64> {
    if m == 0 {
        return None;
    }
    if m == 1 {
        return Some(0);
    }
    let (g, x, _) = ext_gcd((a % m) as i128, m as i128);
    if g != 1 {
        None
    } else {
        Some((x.rem_euclid(m as i128)) as u64)
    }
}

/// `b^e mod m` (with `m ≥ 1`; modulus 1 gives 0).
pub fn mod_pow(b: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m = m as u128;
    let mut base = (b as u128) % m;
    let mut acc: u128 = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u64
}

/// Primality by trial division — fine for the u32-ish scale used here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|dd| dd <= n) {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs in ascending prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.checked_mul(d).is_some_and(|dd| dd <= n) {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient; `euler_phi(1) = 1`.
pub fn euler_phi(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut phi = n;
    for (p, _) in factorize(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

/// If `n = p^k` with `p` prime and `k ≥ 1`, returns `(p, k)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let f = factorize(n);
    match f.as_slice() {
        [(p, k)] => Some((*p, *k)),
        _ => None,
    }
}

/// The units of `Z_n` in ascending order. For `n = 1` (the zero ring) the
/// single element 0 is the unit `1 = 0`.
pub fn units_mod(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|&a| gcd(a, n) == 1).collect()
}

/// The ring `Z_m` with explicit element arithmetic, `m ≥ 1`.
///
/// Elements are canonical representatives `0..m`. This is a convenience
/// wrapper for call sites that want checked construction and named methods;
/// hot loops use the free functions directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZMod {
    m: u64,
}

impl ZMod {
    pub fn new(m: u64) -> Result<ZMod> {
        if m == 0 {
            return Err(Error::BadParameter("modulus must be positive".into()));
        }
        Ok(ZMod { m })
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        ((a as u128 + b as u128) % self.m as u128) as u64
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a % self.m == 0 {
            0
        } else {
            self.m - a % self.m
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.m as u128) as u64
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        mod_inv(a, self.m).ok_or(Error::DivisionByZero)
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        mod_pow(a, e, self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_and_ext_gcd_agree() {
        for a in 0..60u64 {
            for b in 0..60u64 {
                let g = gcd(a, b);
                let (g2, x, y) = ext_gcd(a as i128, b as i128);
                assert_eq!(g as i128, g2);
                assert_eq!(a as i128 * x + b as i128 * y, g2, "bezout for {a},{b}");
            }
        }
    }

    #[test]
    fn mod_inv_matches_brute_force() {
        for m in 1..40u64 {
            for a in 0..m {
                let inv = mod_inv(a, m);
                let brute = (0..m).find(|&x| (a * x) % m == 1 % m);
                assert_eq!(inv, brute, "inverse of {a} mod {m}");
            }
        }
    }

    #[test]
    fn primes_below_sixty() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
    }

    #[test]
    fn factorize_roundtrip() {
        for n in 1..2000u64 {
            let f = factorize(n);
            let prod: u64 = f.iter().map(|&(p, k)| p.pow(k)).product();
            assert_eq!(prod, n);
            for &(p, _) in &f {
                assert!(is_prime(p));
            }
            for w in f.windows(2) {
                assert!(w[0].0 < w[1].0);
            }
        }
    }

    #[test]
    fn totient_small_values() {
        let expected = [1u64, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]; // φ(1)..φ(12)
        for (i, &phi) in expected.iter().enumerate() {
            assert_eq!(euler_phi(i as u64 + 1), phi);
        }
        assert_eq!(euler_phi(100), 40);
    }

    #[test]
    fn totient_counts_units() {
        for n in 1..200u64 {
            assert_eq!(units_mod(n).len() as u64, euler_phi(n));
        }
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn units_of_one_is_zero_ring_unit() {
        assert_eq!(units_mod(1), vec![0]);
        assert_eq!(units_mod(2), vec![1]);
        assert_eq!(units_mod(8), vec![1, 3, 5, 7]);
        assert_eq!(units_mod(12), vec![1, 5, 7, 11]);
    }

    #[test]
    fn zmod_arithmetic() {
        let z = ZMod::new(10).unwrap();
        assert_eq!(z.add(7, 8), 5);
        assert_eq!(z.neg(3), 7);
        assert_eq!(z.neg(0), 0);
        assert_eq!(z.mul(7, 8), 6);
        assert_eq!(z.inv(3).unwrap(), 7);
        assert!(z.inv(5).is_err());
        assert_eq!(z.pow(3, 4), 1);

        // Zero ring: 0 is the identity and its own inverse.
        let one = ZMod::new(1).unwrap();
        assert_eq!(one.inv(0).unwrap(), 0);
    }
}
