//! Dense coefficient vectors over `Z_t` for byte-sized moduli `2 ≤ t ≤ 255`.
//!
//! The two moduli that dominate the workload get packed representations:
//! modulus 2 stores one bit per entry (addition is XOR), modulus 4 stores two
//! bits per entry with carry-aware SWAR arithmetic. Everything else stores a
//! byte per entry. The representation is an internal detail; all observable
//! behaviour is entry-level arithmetic mod `t`.

use crate::{Error, Result};

/// Bits 0, 2, 4, … set: the low bit of every 2-bit lane.
const CRUMB_LO: u64 = 0x5555_5555_5555_5555;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Modulus 2: one bit per entry.
    Bit(Vec<u64>),
    /// Modulus 4: one 2-bit lane per entry.
    Crumb(Vec<u64>),
    /// Any other modulus: one byte per entry.
    Byte(Vec<u8>),
}

/// A vector of residues mod `t` with entrywise arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoeffVec {
    modulus: u64,
    len: usize,
    repr: Repr,
}

/// Sum of two packed mod-4 words, lanewise.
#[inline]
fn crumb_add(a: u64, b: u64) -> u64 {
    a ^ b ^ ((a & b & CRUMB_LO) << 1)
}

/// Lanewise negation mod 4.
#[inline]
fn crumb_neg(a: u64) -> u64 {
    a ^ ((a & CRUMB_LO) << 1)
}

/// Lanewise doubling mod 4.
#[inline]
fn crumb_double(a: u64) -> u64 {
    (a & CRUMB_LO) << 1
}

impl CoeffVec {
    fn check_modulus(modulus: u64) -> Result<()> {
        if (2..=255).contains(&modulus) {
            Ok(())
        } else {
            Err(Error::BadParameter(format!(
                "coefficient modulus must be in 2..=255, got {modulus}"
            )))
        }
    }

    /// The zero vector of the given length.
    pub fn zeros(modulus: u64, len: usize) -> Result<CoeffVec> {
        Self::check_modulus(modulus)?;
        let repr = match modulus {
            2 => Repr::Bit(vec![0; len.div_ceil(64)]),
            4 => Repr::Crumb(vec![0; len.div_ceil(32)]),
            _ => Repr::Byte(vec![0; len]),
        };
        Ok(CoeffVec { modulus, len, repr })
    }

    /// Builds a vector from entries (reduced mod `modulus`).
    pub fn from_entries(modulus: u64, entries: &[u64]) -> Result<CoeffVec> {
        let mut v = CoeffVec::zeros(modulus, entries.len())?;
        for (i, &e) in entries.iter().enumerate() {
            v.set(i, e);
        }
        Ok(v)
    }

    /// `value · e_pos`: a single (possibly zero) entry.
    pub fn basis(modulus: u64, len: usize, pos: usize, value: u64) -> Result<CoeffVec> {
        let mut v = CoeffVec::zeros(modulus, len)?;
        if pos >= len {
            return Err(Error::BadParameter(format!(
                "basis position {pos} out of range for length {len}"
            )));
        }
        v.set(pos, value);
        Ok(v)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> u64 {
        assert!(i < self.len, "index {i} out of range");
        match &self.repr {
            Repr::Bit(w) => (w[i / 64] >> (i % 64)) & 1,
            Repr::Crumb(w) => (w[i / 32] >> ((i % 32) * 2)) & 3,
            Repr::Byte(b) => b[i] as u64,
        }
    }

    pub fn set(&mut self, i: usize, value: u64) {
        assert!(i < self.len, "index {i} out of range");
        let value = value % self.modulus;
        match &mut self.repr {
            Repr::Bit(w) => {
                let mask = 1u64 << (i % 64);
                if value == 1 {
                    w[i / 64] |= mask;
                } else {
                    w[i / 64] &= !mask;
                }
            }
            Repr::Crumb(w) => {
                let shift = (i % 32) * 2;
                w[i / 32] = (w[i / 32] & !(3u64 << shift)) | (value << shift);
            }
            Repr::Byte(b) => b[i] = value as u8,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Bit(w) | Repr::Crumb(w) => w.iter().all(|&x| x == 0),
            Repr::Byte(b) => b.iter().all(|&x| x == 0),
        }
    }

    pub fn entries(&self) -> Vec<u64> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    /// Position and value of the first nonzero entry.
    pub fn first_nonzero(&self) -> Option<(usize, u64)> {
        match &self.repr {
            Repr::Bit(w) => {
                for (wi, &word) in w.iter().enumerate() {
                    if word != 0 {
                        let pos = wi * 64 + word.trailing_zeros() as usize;
                        return Some((pos, 1));
                    }
                }
                None
            }
            Repr::Crumb(w) => {
                for (wi, &word) in w.iter().enumerate() {
                    if word != 0 {
                        let lane = word.trailing_zeros() as usize / 2;
                        let pos = wi * 32 + lane;
                        return Some((pos, (word >> (lane * 2)) & 3));
                    }
                }
                None
            }
            Repr::Byte(b) => b
                .iter()
                .position(|&x| x != 0)
                .map(|i| (i, b[i] as u64)),
        }
    }

    /// Number of nonzero entries.
    pub fn support_count(&self) -> usize {
        match &self.repr {
            Repr::Bit(w) => w.iter().map(|x| x.count_ones() as usize).sum(),
            Repr::Crumb(w) => w
                .iter()
                .map(|x| ((x | (x >> 1)) & CRUMB_LO).count_ones() as usize)
                .sum(),
            Repr::Byte(b) => b.iter().filter(|&&x| x != 0).count(),
        }
    }

    /// Calls `f(position, value)` for every nonzero entry, ascending.
    pub fn for_each_nonzero(&self, mut f: impl FnMut(usize, u64)) {
        match &self.repr {
            Repr::Bit(w) => {
                for (wi, &word) in w.iter().enumerate() {
                    let mut rest = word;
                    while rest != 0 {
                        let bit = rest.trailing_zeros() as usize;
                        f(wi * 64 + bit, 1);
                        rest &= rest - 1;
                    }
                }
            }
            Repr::Crumb(w) => {
                for (wi, &word) in w.iter().enumerate() {
                    let mut rest = (word | (word >> 1)) & CRUMB_LO;
                    while rest != 0 {
                        let bit = rest.trailing_zeros() as usize;
                        let lane = bit / 2;
                        f(wi * 32 + lane, (word >> (lane * 2)) & 3);
                        rest &= rest - 1;
                    }
                }
            }
            Repr::Byte(b) => {
                for (i, &x) in b.iter().enumerate() {
                    if x != 0 {
                        f(i, x as u64);
                    }
                }
            }
        }
    }

    fn check_compat(&self, other: &CoeffVec) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::BadParameter(format!(
                "modulus mismatch: {} vs {}",
                self.modulus, other.modulus
            )));
        }
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                got: other.len,
            });
        }
        Ok(())
    }

    /// `self += c · other`, entrywise mod `t`. Panics on shape mismatch — this
    /// is the inner-loop primitive; use [`CoeffVec::add`] for checked sums.
    pub fn add_scaled_in_place(&mut self, other: &CoeffVec, c: u64) {
        self.check_compat(other)
            .expect("add_scaled_in_place requires matching shape");
        let c = c % self.modulus;
        if c == 0 {
            return;
        }
        match (&mut self.repr, &other.repr) {
            (Repr::Bit(a), Repr::Bit(b)) => {
                for (x, y) in a.iter_mut().zip(b) {
                    *x ^= y;
                }
            }
            (Repr::Crumb(a), Repr::Crumb(b)) => match c {
                1 => {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x = crumb_add(*x, *y);
                    }
                }
                2 => {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x = crumb_add(*x, crumb_double(*y));
                    }
                }
                _ => {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x = crumb_add(*x, crumb_neg(*y));
                    }
                }
            },
            (Repr::Byte(a), Repr::Byte(b)) => {
                let m = self.modulus as u32;
                for (x, y) in a.iter_mut().zip(b) {
                    *x = ((*x as u32 + c as u32 * *y as u32) % m) as u8;
                }
            }
            _ => unreachable!("matching moduli imply matching representations"),
        }
    }

    pub fn add(&self, other: &CoeffVec) -> Result<CoeffVec> {
        self.check_compat(other)?;
        let mut out = self.clone();
        out.add_scaled_in_place(other, 1);
        Ok(out)
    }

    pub fn sub(&self, other: &CoeffVec) -> Result<CoeffVec> {
        self.check_compat(other)?;
        let mut out = self.clone();
        out.add_scaled_in_place(other, self.modulus - 1);
        Ok(out)
    }

    pub fn neg(&self) -> CoeffVec {
        let mut out = CoeffVec::zeros(self.modulus, self.len).expect("modulus already validated");
        out.add_scaled_in_place(self, self.modulus - 1);
        out
    }

    pub fn scale(&self, c: u64) -> CoeffVec {
        let mut out = CoeffVec::zeros(self.modulus, self.len).expect("modulus already validated");
        out.add_scaled_in_place(self, c);
        out
    }
}
