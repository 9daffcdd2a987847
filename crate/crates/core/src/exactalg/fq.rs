//! Finite fields `F_{p^k}` as quotients `F_p[x] / (f)` with a canonical
//! modulus: the lexicographically smallest monic irreducible `f` of degree
//! `k` (coefficients compared low-degree first). This makes element indexing
//! reproducible across runs and machines.
//!
//! Elements are indices `0..q`: index `i` encodes the polynomial whose
//! coefficient of `x^j` is the `j`-th base-`p` digit of `i`. Fields with at
//! most 256 elements precompute dense add/mul/neg/inv tables; larger fields
//! compute on demand.

use std::fmt;
use std::sync::Arc;

use super::arith::{factorize, is_prime};
use crate::{Error, Limits, Result};

#[derive(Debug)]
struct FieldInner {
    p: u64,
    k: u32,
    q: u64,
    /// Monic modulus, little-endian, length k+1, `modulus[k] = 1`.
    modulus: Vec<u64>,
    tables: Option<Tables>,
}

#[derive(Debug)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    /// `inv[0]` is unused (kept 0).
    inv: Vec<u32>,
}

/// A finite field of order `p^k`, cheap to clone.
#[derive(Debug, Clone)]
pub struct FqField(Arc<FieldInner>);

impl PartialEq for FqField {
    fn eq(&self, other: &Self) -> bool {
        // The modulus is determined by (p, k), so parameters suffice.
        self.0.p == other.0.p && self.0.k == other.0.k
    }
}
impl Eq for FqField {}

impl fmt::Display for FqField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.0.q)
    }
}

const TABLE_ORDER_CAP: u64 = 256;

impl FqField {
    /// Builds `F_{p^k}`. Errors with [`Error::NonPrime`] if `p` is not prime.
    pub fn new(p: u64, k: u32) -> Result<FqField> {
        FqField::with_limits(p, k, &Limits::default())
    }

    pub fn with_limits(p: u64, k: u32, limits: &Limits) -> Result<FqField> {
        if !is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if k == 0 {
            return Err(Error::BadParameter("field degree must be at least 1".into()));
        }
        let mut q: u128 = 1;
        for _ in 0..k {
            q *= p as u128;
        }
        let q = limits.check_size(&format!("F_{{{p}^{k}}}"), q)?;

        let modulus = smallest_irreducible(p, k);
        let mut inner = FieldInner {
            p,
            k,
            q,
            modulus,
            tables: None,
        };
        if q <= TABLE_ORDER_CAP {
            inner.tables = Some(build_tables(&inner));
        }
        Ok(FqField(Arc::new(inner)))
    }

    /// Convenience constructor from a prime power `q`.
    pub fn from_order(q: u64) -> Result<FqField> {
        match super::arith::prime_power(q) {
            Some((p, k)) => FqField::new(p, k),
            None => Err(Error::NonPrime(q)),
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    pub fn order(&self) -> u64 {
        self.0.q
    }

    /// The canonical modulus polynomial (little-endian, monic, degree k).
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FqElem {
        self.elem(0)
    }

    pub fn one(&self) -> FqElem {
        self.elem(1)
    }

    pub fn elem(&self, idx: u64) -> FqElem {
        assert!(idx < self.0.q, "element index {idx} out of range for {self}");
        FqElem {
            field: self.clone(),
            idx,
        }
    }

    /// Element from little-endian coefficients (arbitrary length; reduced mod p,
    /// trailing coefficients beyond degree k must be zero).
    pub fn elem_from_coeffs(&self, coeffs: &[u64]) -> Result<FqElem> {
        let p = self.0.p;
        let k = self.0.k as usize;
        for (i, &c) in coeffs.iter().enumerate() {
            if i >= k && c % p != 0 {
                return Err(Error::LengthMismatch {
                    expected: k,
                    got: coeffs.len(),
                });
            }
        }
        let mut idx = 0u64;
        for i in (0..k.min(coeffs.len())).rev() {
            idx = idx * p + coeffs[i] % p;
        }
        Ok(self.elem(idx))
    }

    pub fn coeffs_of(&self, idx: u64) -> Vec<u64> {
        let mut c = Vec::with_capacity(self.0.k as usize);
        let mut v = idx;
        for _ in 0..self.0.k {
            c.push(v % self.0.p);
            v /= self.0.p;
        }
        c
    }

    // ----- index-level arithmetic (the hot path for matrix groups) -----

    pub fn add_idx(&self, a: u64, b: u64) -> u64 {
        if let Some(t) = &self.0.tables {
            return t.add[(a * self.0.q + b) as usize] as u64;
        }
        self.add_slow(a, b)
    }

    pub fn neg_idx(&self, a: u64) -> u64 {
        if let Some(t) = &self.0.tables {
            return t.neg[a as usize] as u64;
        }
        let p = self.0.p;
        let c: Vec<u64> = self.coeffs_of(a).iter().map(|&x| (p - x) % p).collect();
        digits_to_idx(&c, p)
    }

    pub fn sub_idx(&self, a: u64, b: u64) -> u64 {
        self.add_idx(a, self.neg_idx(b))
    }

    pub fn mul_idx(&self, a: u64, b: u64) -> u64 {
        if let Some(t) = &self.0.tables {
            return t.mul[(a * self.0.q + b) as usize] as u64;
        }
        self.mul_slow(a, b)
    }

    /// Multiplicative inverse; `None` for 0.
    pub fn inv_idx(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        if let Some(t) = &self.0.tables {
            return Some(t.inv[a as usize] as u64);
        }
        Some(self.pow_idx(a, self.0.q - 2))
    }

    pub fn pow_idx(&self, a: u64, mut e: u64) -> u64 {
        let mut base = a;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_idx(acc, base);
            }
            base = self.mul_idx(base, base);
            e >>= 1;
        }
        acc
    }

    fn add_slow(&self, a: u64, b: u64) -> u64 {
        let p = self.0.p;
        let ca = self.coeffs_of(a);
        let cb = self.coeffs_of(b);
        let c: Vec<u64> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % p).collect();
        digits_to_idx(&c, p)
    }

    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        let p = self.0.p;
        let ca = self.coeffs_of(a);
        let cb = self.coeffs_of(b);
        let mut prod = vec![0u64; 2 * self.0.k as usize];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        poly_rem_in_place(&mut prod, &self.0.modulus, p);
        prod.truncate(self.0.k as usize);
        digits_to_idx(&prod, p)
    }

    /// Multiplicative order of a nonzero element.
    pub fn mult_order(&self, a: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let n = self.0.q - 1;
        let mut divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
        divisors.sort_unstable();
        divisors
            .into_iter()
            .find(|&d| self.pow_idx(a, d) == 1)
    }

    /// The smallest-index generator of the multiplicative group.
    pub fn multiplicative_generator(&self) -> u64 {
        let n = self.0.q - 1;
        let prime_factors: Vec<u64> = factorize(n).into_iter().map(|(p, _)| p).collect();
        (1..self.0.q)
            .find(|&g| prime_factors.iter().all(|&r| self.pow_idx(g, n / r) != 1))
            .expect("a finite field's multiplicative group is cyclic")
    }
}

/// A field element: a field handle plus a canonical index.
#[derive(Debug, Clone)]
pub struct FqElem {
    field: FqField,
    idx: u64,
}

impl PartialEq for FqElem {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.idx == other.idx
    }
}
impl Eq for FqElem {}

impl FqElem {
    pub fn field(&self) -> &FqField {
        &self.field
    }

    pub fn index(&self) -> u64 {
        self.idx
    }

    pub fn coeffs(&self) -> Vec<u64> {
        self.field.coeffs_of(self.idx)
    }

    pub fn add(&self, other: &FqElem) -> FqElem {
        assert_eq!(self.field, other.field);
        self.field.elem(self.field.add_idx(self.idx, other.idx))
    }

    pub fn sub(&self, other: &FqElem) -> FqElem {
        assert_eq!(self.field, other.field);
        self.field.elem(self.field.sub_idx(self.idx, other.idx))
    }

    pub fn neg(&self) -> FqElem {
        self.field.elem(self.field.neg_idx(self.idx))
    }

    pub fn mul(&self, other: &FqElem) -> FqElem {
        assert_eq!(self.field, other.field);
        self.field.elem(self.field.mul_idx(self.idx, other.idx))
    }

    /// Errors with [`Error::DivisionByZero`] on 0.
    pub fn inv(&self) -> Result<FqElem> {
        self.field
            .inv_idx(self.idx)
            .map(|i| self.field.elem(i))
            .ok_or(Error::DivisionByZero)
    }

    pub fn pow(&self, e: u64) -> FqElem {
        self.field.elem(self.field.pow_idx(self.idx, e))
    }

    pub fn is_zero(&self) -> bool {
        self.idx == 0
    }
}

fn digits_to_idx(digits: &[u64], p: u64) -> u64 {
    let mut idx = 0u64;
    for &d in digits.iter().rev() {
        idx = idx * p + d;
    }
    idx
}

/// Reduces `poly` modulo the monic `modulus` in place (coefficients mod p).
fn poly_rem_in_place(poly: &mut Vec<u64>, modulus: &[u64], p: u64) {
    let k = modulus.len() - 1;
    while poly.len() > k {
        let lead = *poly.last().unwrap() % p;
        let deg = poly.len() - 1;
        if lead != 0 {
            // Subtract lead · x^(deg-k) · modulus.
            for (i, &m) in modulus.iter().enumerate() {
                let pos = deg - k + i;
                let sub = lead * m % p;
                poly[pos] = (poly[pos] + p - sub) % p;
            }
        }
        poly.pop();
    }
    while poly.last() == Some(&0) && poly.len() > k {
        poly.pop();
    }
}

/// True if the monic polynomial (little-endian, degree ≥ 1) has no monic
/// divisor of degree between 1 and deg/2.
fn poly_is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        // All monic polynomials of degree d, enumerated by their low-coefficient
        // vector as a base-p counter.
        let count = (p as u128).pow(d as u32);
        for m in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut v = m;
            for _ in 0..d {
                g.push((v % p as u128) as u64);
                v /= p as u128;
            }
            g.push(1);
            let mut rem = f.to_vec();
            poly_rem_in_place(&mut rem, &g, p);
            if rem.iter().all(|&c| c % p == 0) {
                return false;
            }
        }
    }
    true
}

/// The lexicographically smallest monic irreducible of degree k over F_p
/// (low coefficients compared first, i.e. the base-p counter order).
fn smallest_irreducible(p: u64, k: u32) -> Vec<u64> {
    let count = (p as u128).pow(k);
    for m in 0..count {
        let mut f = Vec::with_capacity(k as usize + 1);
        let mut v = m;
        for _ in 0..k {
            f.push((v % p as u128) as u64);
            v /= p as u128;
        }
        f.push(1);
        if poly_is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree");
}

fn build_tables(inner: &FieldInner) -> Tables {
    let q = inner.q as usize;
    let p = inner.p;
    let k = inner.k;
    let field = FieldInner {
        p,
        k,
        q: inner.q,
        modulus: inner.modulus.clone(),
        tables: None,
    };
    let f = FqField(Arc::new(field));
    let mut add = vec![0u32; q * q];
    let mut mul = vec![0u32; q * q];
    let mut neg = vec![0u32; q];
    let mut inv = vec![0u32; q];
    for a in 0..q as u64 {
        neg[a as usize] = f.neg_idx(a) as u32;
        for b in 0..q as u64 {
            add[(a * q as u64 + b) as usize] = f.add_slow(a, b) as u32;
            let m = f.mul_slow(a, b);
            mul[(a * q as u64 + b) as usize] = m as u32;
            if m == 1 {
                inv[a as usize] = b as u32;
            }
        }
    }
    Tables { add, mul, neg, inv }
}
