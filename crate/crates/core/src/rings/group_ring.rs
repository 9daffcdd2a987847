//! Coefficient-level arithmetic in group rings `Z_t[G]`.
//!
//! An enumerated [`FiniteRing`](super::FiniteRing) needs `t^|G|` indices; for
//! `|G| = 24` that is already out of reach at `t = 2`. This module works with
//! elements as coefficient vectors instead, so products, powers, and
//! two-sided ideals stay cheap no matter how large the full ring is. Ideals
//! are canonical spans ([`SubmoduleBasis`]) closed under translation, which
//! makes membership, size, and quotient-injectivity questions exact.

use crate::exactalg::{
    closure_under_operators, CoeffVec, IndexPermutation, SubmoduleBasis, VecOperator,
};
use crate::groups::FiniteGroup;
use crate::{Error, Result};

/// Arithmetic context for `Z_t[G]` with `2 ≤ t ≤ 255`.
pub struct GroupRingCtx {
    t: u64,
    group: FiniteGroup,
}

impl GroupRingCtx {
    pub fn new(t: u64, group: &FiniteGroup) -> Result<GroupRingCtx> {
        // Delegates modulus validation (2..=255) to the vector layer.
        CoeffVec::zeros(t, group.order())?;
        Ok(GroupRingCtx {
            t,
            group: group.clone(),
        })
    }

    pub fn modulus(&self) -> u64 {
        self.t
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// The rank of `Z_t[G]` as a `Z_t`-module, i.e. `|G|`.
    pub fn dim(&self) -> usize {
        self.group.order()
    }

    pub fn zero(&self) -> CoeffVec {
        CoeffVec::zeros(self.t, self.dim()).expect("modulus validated at construction")
    }

    /// The basis element `1·g`.
    pub fn basis(&self, g: usize) -> CoeffVec {
        CoeffVec::basis(self.t, self.dim(), g, 1).expect("group element index in range")
    }

    pub fn one(&self) -> CoeffVec {
        self.basis(self.group.identity())
    }

    /// The scalar `c·1` (signed, reduced mod `t`).
    pub fn scalar(&self, c: i64) -> CoeffVec {
        self.from_terms(&[(self.group.identity(), c)])
    }

    /// Builds `Σ c_g · g` from signed terms; repeated group elements
    /// accumulate.
    pub fn from_terms(&self, terms: &[(usize, i64)]) -> CoeffVec {
        let mut v = self.zero();
        let t = self.t as i64;
        for &(g, c) in terms {
            let cur = v.get(g) as i64;
            v.set(g, (cur + c).rem_euclid(t) as u64);
        }
        v
    }

    /// The product in `Z_t[G]`: `(x·y)_k = Σ_{gh=k} x_g y_h`.
    pub fn convolve(&self, x: &CoeffVec, y: &CoeffVec) -> CoeffVec {
        let mut out = self.zero();
        let t = self.t;
        x.for_each_nonzero(|g, cg| {
            y.for_each_nonzero(|h, ch| {
                let k = self.group.mul(g, h);
                let cur = out.get(k);
                out.set(k, (cur + cg * ch) % t);
            });
        });
        out
    }

    /// `x^e` by square-and-multiply (`x^0 = 1`).
    pub fn power(&self, x: &CoeffVec, mut e: u64) -> CoeffVec {
        let mut acc = self.one();
        let mut base = x.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.convolve(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.convolve(&base, &base);
            }
        }
        acc
    }

    /// Least `m ∈ 1..=cap` with `x^m = 1`, or `None` (not a unit, or the
    /// order exceeds the cap).
    pub fn element_order(&self, x: &CoeffVec, cap: u64) -> Option<u64> {
        let one = self.one();
        let mut acc = x.clone();
        for m in 1..=cap {
            if acc == one {
                return Some(m);
            }
            acc = self.convolve(&acc, x);
        }
        None
    }

    /// The two-sided ideal generated by the given elements, as a canonical
    /// span closed under left and right translation.
    ///
    /// The closure runs over a generating set of `G`; stability under
    /// translation by *every* group element is then verified directly, and a
    /// failure (impossible if the generating set is correct) is an internal
    /// error rather than a wrong answer.
    pub fn two_sided_ideal(&self, generators: &[CoeffVec]) -> Result<IdealBasis> {
        let n = self.dim();
        let mut ops: Vec<IndexPermutation> = Vec::new();
        for &s in self.group.generators() {
            ops.push(self.left_translation(s)?);
            ops.push(self.right_translation(s)?);
        }
        let op_refs: Vec<&dyn VecOperator> = ops.iter().map(|p| p as &dyn VecOperator).collect();
        let basis = closure_under_operators(self.t, n, generators, &op_refs)?;

        for g in 0..n {
            let left = self.left_translation(g)?;
            let right = self.right_translation(g)?;
            for row in basis.rows() {
                if !basis.contains(&left.apply_to(row))? || !basis.contains(&right.apply_to(row))?
                {
                    return Err(Error::Internal(format!(
                        "ideal closure in Z_{}[{}] is not stable under translation by element {g}",
                        self.t, self.group
                    )));
                }
            }
        }
        Ok(IdealBasis { basis })
    }

    fn left_translation(&self, g: usize) -> Result<IndexPermutation> {
        IndexPermutation::new((0..self.dim()).map(|h| self.group.mul(g, h)).collect())
    }

    fn right_translation(&self, g: usize) -> Result<IndexPermutation> {
        IndexPermutation::new((0..self.dim()).map(|h| self.group.mul(h, g)).collect())
    }
}

/// A two-sided ideal of `Z_t[G]` in canonical form.
pub struct IdealBasis {
    basis: SubmoduleBasis,
}

impl IdealBasis {
    pub fn contains(&self, v: &CoeffVec) -> Result<bool> {
        self.basis.contains(v)
    }

    /// Number of elements of the ideal.
    pub fn size(&self) -> u128 {
        self.basis.size()
    }

    /// `log₂` of the size when it is a power of two (always the case for
    /// `t ∈ {2, 4}`).
    pub fn log2_size(&self) -> Option<u32> {
        let s = self.size();
        if s.is_power_of_two() {
            Some(s.trailing_zeros())
        } else {
            None
        }
    }

    pub fn num_rows(&self) -> usize {
        self.basis.num_rows()
    }

    pub fn pivots(&self) -> &[(usize, u64)] {
        self.basis.pivots()
    }
}

/// Looks for two distinct group elements that become equal in `Z_t[G]/I`,
/// i.e. a witness that `G → (Z_t[G]/I)^×` is not injective. Returns the
/// first pair `(g, h)` with `g < h` and `g − h ∈ I`.
pub fn embedding_kernel_witness(
    ctx: &GroupRingCtx,
    ideal: &IdealBasis,
) -> Result<Option<(usize, usize)>> {
    let n = ctx.dim();
    for g in 0..n {
        let vg = ctx.basis(g);
        for h in g + 1..n {
            let diff = vg.sub(&ctx.basis(h))?;
            if ideal.contains(&diff)? {
                return Ok(Some((g, h)));
            }
        }
    }
    Ok(None)
}
