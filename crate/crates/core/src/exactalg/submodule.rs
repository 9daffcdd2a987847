//! Canonical spans of coefficient vectors over `Z_t`: Howell normal form.
//!
//! Over `Z_t` with `t` composite, row echelon form is not enough — a span can
//! contain vectors whose leading position is to the right of every basis
//! row's pivot (e.g. `2·(1,1) = (2,2)` over `Z_4` spans `(0,2)` only via the
//! doubled row). The Howell form fixes this by keeping, for every pivot row
//! with pivot value `g`, the "completion" `(t/g)·row` reduced into the basis.
//! The resulting canonical form is unique for a given span, so span equality
//! is row-list equality, membership is greedy reduction, and the span size is
//! `Π t/gᵢ` over pivot values `gᵢ`.
//!
//! This subsumes Gaussian elimination over `F_2`/`F_3` (where every pivot is
//! a unit and no completion rows survive) and the mod-4 case needed for group
//! rings over `Z_4`.

use super::arith::{gcd, units_mod};
use super::coeff::CoeffVec;
use crate::{Error, Result};

/// A canonical basis (Howell normal form) for a span of vectors over `Z_t`.
///
/// Invariants: pivot columns strictly increase; each pivot value divides `t`;
/// every entry above a pivot is reduced modulo that pivot value; the span is
/// stable under the implicit completions. Two equal spans have equal bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubmoduleBasis {
    modulus: u64,
    len: usize,
    rows: Vec<CoeffVec>,
    /// `(column, value)` per row, strictly increasing columns.
    pivots: Vec<(usize, u64)>,
}

impl SubmoduleBasis {
    /// The zero span.
    pub fn new(modulus: u64, len: usize) -> Result<SubmoduleBasis> {
        // Delegate modulus validation.
        CoeffVec::zeros(modulus, len)?;
        Ok(SubmoduleBasis {
            modulus,
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        })
    }

    /// The span of the given vectors.
    pub fn from_vectors(modulus: u64, len: usize, vectors: &[CoeffVec]) -> Result<SubmoduleBasis> {
        let mut basis = SubmoduleBasis::new(modulus, len)?;
        for v in vectors {
            basis.insert(v)?;
        }
        Ok(basis)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[CoeffVec] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// `(column, value)` pairs of the pivots, ascending by column.
    pub fn pivots(&self) -> &[(usize, u64)] {
        &self.pivots
    }

    /// Number of vectors in the span: `Π t / gᵢ` over pivot values.
    pub fn size(&self) -> u128 {
        self.pivots
            .iter()
            .map(|&(_, g)| (self.modulus / g) as u128)
            .product()
    }

    fn check_compat(&self, v: &CoeffVec) -> Result<()> {
        if v.modulus() != self.modulus {
            return Err(Error::BadParameter(format!(
                "modulus mismatch: basis {} vs vector {}",
                self.modulus,
                v.modulus()
            )));
        }
        if v.len() != self.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                got: v.len(),
            });
        }
        Ok(())
    }

    /// Adds a vector to the span. Returns `true` iff the span grew.
    /// Inserting a vector already in the span leaves the basis bit-identical.
    pub fn insert(&mut self, v: &CoeffVec) -> Result<bool> {
        self.check_compat(v)?;
        let t = self.modulus;
        let mut work = vec![v.clone()];
        let mut grew = false;

        while let Some(mut w) = work.pop() {
            loop {
                let Some((col, val)) = w.first_nonzero() else {
                    break; // reduced to zero: no new information
                };
                match self.pivots.binary_search_by_key(&col, |&(c, _)| c) {
                    Ok(i) => {
                        let g = self.pivots[i].1;
                        if val % g == 0 {
                            // Plain reduction: clear the leading entry.
                            w.add_scaled_in_place(&self.rows[i], t - val / g);
                        } else {
                            // Pivot refinement: combine to the smaller gcd.
                            let g2 = gcd(g, val);
                            let (a, b) = lift_combination(g, val, g2, t);
                            let mut new_row = self.rows[i].scale(a);
                            new_row.add_scaled_in_place(&w, b);
                            debug_assert_eq!(new_row.get(col), g2);
                            let mut old_row = std::mem::replace(&mut self.rows[i], new_row);
                            self.pivots[i].1 = g2;
                            // The displaced row and w both reduce below col now.
                            old_row.add_scaled_in_place(&self.rows[i], t - g / g2);
                            if !old_row.is_zero() {
                                work.push(old_row);
                            }
                            w.add_scaled_in_place(&self.rows[i], t - val / g2);
                            // Refined pivot needs its completion in the span.
                            let completion = self.rows[i].scale(t / g2);
                            if !completion.is_zero() {
                                work.push(completion);
                            }
                            grew = true;
                        }
                        debug_assert_eq!(w.get(col), 0);
                    }
                    Err(pos) => {
                        // New pivot: normalize so the pivot value divides t.
                        let d = gcd(val, t);
                        let u = unit_scaling(val, d, t);
                        let row = w.scale(u);
                        debug_assert_eq!(row.get(col), d);
                        let completion = row.scale(t / d);
                        self.rows.insert(pos, row);
                        self.pivots.insert(pos, (col, d));
                        if !completion.is_zero() {
                            work.push(completion);
                        }
                        grew = true;
                        break;
                    }
                }
            }
        }

        if grew {
            self.canonicalize();
        }
        Ok(grew)
    }

    /// Reduces entries above each pivot modulo the pivot value, making the
    /// basis canonical. Idempotent.
    fn canonicalize(&mut self) {
        let t = self.modulus;
        for i in 0..self.rows.len() {
            let (c, g) = self.pivots[i];
            let row_i = self.rows[i].clone();
            for j in 0..i {
                let q = self.rows[j].get(c) / g;
                if q > 0 {
                    self.rows[j].add_scaled_in_place(&row_i, t - q);
                }
            }
        }
    }

    /// The canonical remainder of `v` after greedy reduction by the basis.
    /// Zero iff `v` is in the span.
    pub fn reduce(&self, v: &CoeffVec) -> Result<CoeffVec> {
        self.check_compat(v)?;
        let t = self.modulus;
        let mut w = v.clone();
        for (i, &(c, g)) in self.pivots.iter().enumerate() {
            let q = w.get(c) / g;
            if q > 0 {
                w.add_scaled_in_place(&self.rows[i], t - q);
            }
        }
        Ok(w)
    }

    pub fn contains(&self, v: &CoeffVec) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }
}

/// Finds `(a, b)` with `a·g + b·val ≡ g2 (mod t)`. Moduli are byte-sized, so
/// a direct scan is exact and fast enough.
fn lift_combination(g: u64, val: u64, g2: u64, t: u64) -> (u64, u64) {
    for b in 0..t {
        let rest = (g2 + t - (b * val) % t) % t;
        if rest % gcd(g, t) == 0 {
            for a in 0..t {
                if (a * g) % t == rest {
                    return (a, b);
                }
            }
        }
    }
    unreachable!("gcd({g}, {val}) = {g2} is a Z_{t}-combination of the two")
}

/// Finds a unit `u` of `Z_t` with `u·val ≡ gcd(val, t) (mod t)`.
fn unit_scaling(val: u64, d: u64, t: u64) -> u64 {
    units_mod(t)
        .into_iter()
        .find(|&u| (u * val) % t == d)
        .expect("every residue is a unit multiple of its gcd with the modulus")
}

/// A linear operator on coefficient vectors. Implementations must be
/// `Z_t`-linear for [`closure_under_operators`] to return the true closure.
pub trait VecOperator {
    fn apply(&self, v: &CoeffVec) -> CoeffVec;
}

/// The operator permuting coordinates: entry `i` moves to `dest[i]`.
#[derive(Debug, Clone)]
pub struct IndexPermutation {
    dest: Vec<usize>,
}

impl IndexPermutation {
    pub fn new(dest: Vec<usize>) -> Result<IndexPermutation> {
        let n = dest.len();
        let mut seen = vec![false; n];
        for &d in &dest {
            if d >= n || seen[d] {
                return Err(Error::BadParameter("destination list is not a permutation".into()));
            }
            seen[d] = true;
        }
        Ok(IndexPermutation { dest })
    }

    pub fn apply_to(&self, v: &CoeffVec) -> CoeffVec {
        assert_eq!(v.len(), self.dest.len(), "permutation length mismatch");
        let mut out = CoeffVec::zeros(v.modulus(), v.len()).expect("same modulus as input");
        v.for_each_nonzero(|i, c| out.set(self.dest[i], c));
        out
    }
}

impl VecOperator for IndexPermutation {
    fn apply(&self, v: &CoeffVec) -> CoeffVec {
        self.apply_to(v)
    }
}

impl<F: Fn(&CoeffVec) -> CoeffVec> VecOperator for F {
    fn apply(&self, v: &CoeffVec) -> CoeffVec {
        self(v)
    }
}

/// Smallest span containing `generators` and stable under every operator.
///
/// Iterates to a fixpoint: a pass applies every operator to every current
/// basis row and inserts the images; when no insertion grows the span, the
/// span is stable (operators are linear, so stability on a basis is
/// stability everywhere).
pub fn closure_under_operators(
    modulus: u64,
    len: usize,
    generators: &[CoeffVec],
    operators: &[&dyn VecOperator],
) -> Result<SubmoduleBasis> {
    let mut basis = SubmoduleBasis::from_vectors(modulus, len, generators)?;
    loop {
        let mut grew = false;
        let snapshot = basis.rows().to_vec();
        for row in &snapshot {
            for op in operators {
                let image = op.apply(row);
                if basis.insert(&image)? {
                    grew = true;
                }
            }
        }
        if !grew {
            return Ok(basis);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::SplitMix64;

    /// Brute-force span: all Z_t-linear combinations of the generators.
    fn enumerate_span(modulus: u64, len: usize, gens: &[CoeffVec]) -> Vec<Vec<u64>> {
        let mut set = std::collections::BTreeSet::new();
        let k = gens.len();
        let mut coeffs = vec![0u64; k];
        loop {
            let mut acc = CoeffVec::zeros(modulus, len).unwrap();
            for (c, g) in coeffs.iter().zip(gens) {
                acc.add_scaled_in_place(g, *c);
            }
            set.insert(acc.entries());
            // Odometer over Z_t^k.
            let mut i = 0;
            loop {
                if i == k {
                    return set.into_iter().collect();
                }
                coeffs[i] += 1;
                if coeffs[i] < modulus {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
        }
    }

    fn random_vec(rng: &mut SplitMix64, modulus: u64, len: usize) -> CoeffVec {
        let entries: Vec<u64> = (0..len).map(|_| rng.below(modulus)).collect();
        CoeffVec::from_entries(modulus, &entries).unwrap()
    }

    /// Membership, size, and idempotence against exhaustive enumeration, for
    /// the moduli that matter (2, 3, 4) and a composite with two primes (6).
    #[test]
    fn howell_matches_exhaustive_enumeration() {
        for &m in &[2u64, 3, 4, 6] {
            let len = 4;
            let mut rng = SplitMix64(0xfeed_0000 + m);
            for trial in 0..40 {
                let k = 1 + (trial % 3);
                let gens: Vec<CoeffVec> = (0..k).map(|_| random_vec(&mut rng, m, len)).collect();
                let basis = SubmoduleBasis::from_vectors(m, len, &gens).unwrap();
                let span = enumerate_span(m, len, &gens);
                assert_eq!(basis.size(), span.len() as u128, "size, m={m} trial={trial}");

                // Exhaustive membership agreement over all of Z_m^len.
                let total = m.pow(len as u32);
                for code in 0..total {
                    let mut v = code;
                    let entries: Vec<u64> = (0..len)
                        .map(|_| {
                            let e = v % m;
                            v /= m;
                            e
                        })
                        .collect();
                    let vec = CoeffVec::from_entries(m, &entries).unwrap();
                    let expected = span.binary_search(&entries).is_ok();
                    assert_eq!(
                        basis.contains(&vec).unwrap(),
                        expected,
                        "membership of {entries:?}, m={m} trial={trial}"
                    );
                }

                // Re-inserting any span element must not change the basis.
                let mut again = basis.clone();
                for entries in span.iter().take(20) {
                    let vec = CoeffVec::from_entries(m, entries).unwrap();
                    assert!(!again.insert(&vec).unwrap());
                }
                assert_eq!(again, basis);
            }
        }
    }

    /// The classic completion example over Z_4: the span of (2,1) contains
    /// (0,2) = 2·(2,1), whose leading position is 1, so a second row is
    /// required for greedy reduction to find it.
    #[test]
    fn howell_completion_over_z4() {
        let gen = CoeffVec::from_entries(4, &[2, 1]).unwrap();
        let basis = SubmoduleBasis::from_vectors(4, 2, &[gen]).unwrap();
        assert_eq!(basis.size(), 4);
        let v = CoeffVec::from_entries(4, &[0, 2]).unwrap();
        assert!(basis.contains(&v).unwrap());
        // Two rows: the generator and its completion.
        assert_eq!(basis.num_rows(), 2);
        assert_eq!(basis.pivots(), &[(0, 2), (1, 2)]);
    }

    /// The canonical form must not depend on insertion order.
    #[test]
    fn canonical_form_is_order_independent() {
        for &m in &[2u64, 3, 4] {
            let len = 5;
            let mut rng = SplitMix64(0xabcd + m);
            for _ in 0..30 {
                let gens: Vec<CoeffVec> = (0..3).map(|_| random_vec(&mut rng, m, len)).collect();
                let forward = SubmoduleBasis::from_vectors(m, len, &gens).unwrap();
                let reversed: Vec<CoeffVec> = gens.iter().rev().cloned().collect();
                let backward = SubmoduleBasis::from_vectors(m, len, &reversed).unwrap();
                assert_eq!(forward, backward);
            }
        }
    }

    #[test]
    fn prime_modulus_reduces_to_gaussian_rank() {
        // Over a field every pivot is 1 and size = p^rank.
        let mut rng = SplitMix64(99);
        for &p in &[2u64, 3, 5] {
            for _ in 0..20 {
                let len = 6;
                let gens: Vec<CoeffVec> = (0..4).map(|_| random_vec(&mut rng, p, len)).collect();
                let basis = SubmoduleBasis::from_vectors(p, len, &gens).unwrap();
                for &(_, g) in basis.pivots() {
                    assert_eq!(g, 1);
                }
                assert_eq!(basis.size(), (p as u128).pow(basis.num_rows() as u32));
            }
        }
    }

    #[test]
    fn closure_under_translation_of_order_two() {
        // Z_2[C_2] as vectors of length 2; translating by the generator swaps
        // coordinates. The ideal generated by 1+g is {0, 1+g}: size 2.
        let swap = IndexPermutation::new(vec![1, 0]).unwrap();
        let gen = CoeffVec::from_entries(2, &[1, 1]).unwrap();
        let ops: Vec<&dyn VecOperator> = vec![&swap];
        let basis = closure_under_operators(2, 2, &[gen], &ops).unwrap();
        assert_eq!(basis.size(), 2);
        // By contrast, the ideal generated by the single basis vector e_0 is
        // everything.
        let e0 = CoeffVec::basis(2, 2, 0, 1).unwrap();
        let all = closure_under_operators(2, 2, &[e0], &ops).unwrap();
        assert_eq!(all.size(), 4);
    }

    #[test]
    fn closure_with_closure_operators() {
        // A non-permutation linear operator: doubling over Z_4.
        let double = |v: &CoeffVec| v.scale(2);
        let ops: Vec<&dyn VecOperator> = vec![&double];
        let gen = CoeffVec::from_entries(4, &[1, 0]).unwrap();
        let basis = closure_under_operators(4, 2, &[gen], &ops).unwrap();
        assert_eq!(basis.size(), 4); // doubling adds nothing beyond the span
    }

    #[test]
    fn rejects_mismatched_vectors() {
        let mut basis = SubmoduleBasis::new(4, 3).unwrap();
        let wrong_len = CoeffVec::zeros(4, 2).unwrap();
        let wrong_mod = CoeffVec::zeros(2, 3).unwrap();
        assert!(matches!(
            basis.insert(&wrong_len),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(basis.insert(&wrong_mod), Err(Error::BadParameter(_))));
    }
}
