//! Finite rings with exact arithmetic, built compositionally from expression
//! trees: modular rings, finite fields, (upper-triangular) matrix rings,
//! truncated polynomial rings, group rings, endomorphism rings of finite
//! abelian groups, and products.
//!
//! Every ring is enumerated: elements are indices `0..size`, with `add`,
//! `mul`, `neg` evaluated exactly per representation. Construction runs an
//! audit of the ring axioms (exhaustive on all triples for small rings,
//! sampled above), so a successfully built [`FiniteRing`] is a checked ring,
//! not an assumed one.
//!
//! Unit groups are computed by inverse search — a right inverse is confirmed
//! to be a left inverse rather than assumed (in a finite ring the two
//! coincide, and the code treats a violation as a fatal internal error).
//! Group rings `Z_t[G]` too large to enumerate are handled at the coefficient
//! level in [`group_ring`].

mod build;
mod expr;
mod group_ring;
mod hurwitz;

pub use build::{build_ring, build_ring_with};
pub use expr::RingExpr;
pub use group_ring::{embedding_kernel_witness, GroupRingCtx, IdealBasis};
pub use hurwitz::{hurwitz_unit_coords, hurwitz_unit_group};

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::exactalg::{FqField, SplitMix64};
use crate::groups::{FiniteGroup, GroupRep};
use crate::{Error, Limits, Result};

/// Rings up to this size cache flat add/mul tables (2·4 bytes per pair).
const RING_TABLE_CAP: usize = 1024;
/// All `n³` triples are audited exhaustively up to this size; beyond it a
/// fixed-seed sample is used.
const FULL_TRIPLE_CAP: usize = 512;
const SAMPLED_TRIPLES: u64 = 100_000;
/// Pairwise checks (additive commutativity) run in full up to this size.
const FULL_PAIR_CAP: usize = 4096;
/// Unit enumeration by inverse scan is O(size²); refuse beyond this unless a
/// structured fast path applies.
const UNIT_SCAN_CAP: usize = 5000;
/// Group rings over Z₂ with groups up to this order get bit-mask arithmetic
/// with per-generator translation tables.
const FAST2_MAX_GROUP: usize = 16;

pub(crate) struct Fast2 {
    /// `left_mul[g][m]` = support mask of `g · x` where `x` has support `m`.
    left_mul: Vec<Vec<u32>>,
}

pub(crate) enum RingRep {
    /// Integers mod `n`; element index = residue.
    Zmod { n: u64 },
    /// The field `F_q`; element index = the field's own element index.
    Fq { field: FqField },
    /// Full `k×k` matrices over `base`; entries in row-major order, packed
    /// little-endian base-`|base|` (entry `(i,j)` has weight `|base|^(ik+j)`).
    Matrix { base: FiniteRing, k: usize },
    /// Upper-triangular `k×k` matrices; the `k(k+1)/2` entries `(i,j)`,
    /// `i ≤ j`, in row-major order, packed little-endian.
    UpperTri { base: FiniteRing, k: usize },
    /// `base[x]/(x^k)`; coefficients `c₀..c_{k−1}` packed little-endian
    /// (constant term least significant).
    TruncPoly { base: FiniteRing, k: usize },
    /// `Z_t[G]`; coefficient of group element `g` has weight `t^g`. For
    /// `t = 2` the index is literally the support bit-mask.
    GroupRing {
        t: u64,
        group: FiniteGroup,
        fast2: Option<Fast2>,
    },
    /// Endomorphism ring of `C_{d₁} × … × C_{d_r}`: matrices `(M_ij)` with
    /// `M_ij ∈ Z_{d_i}` divisible by `d_i / gcd(d_i, d_j)`. Stored as digits
    /// `D_ij ∈ [0, gcd(d_i,d_j))` with `M_ij = D_ij · step_ij`, packed
    /// little-endian in mixed radix, row-major.
    EndAb {
        dims: Vec<u64>,
        radix: Vec<u64>,
        step: Vec<u64>,
    },
    /// Componentwise product; index = `l·|right| + r`.
    Product { left: FiniteRing, right: FiniteRing },
}

pub(crate) struct RingInner {
    label: String,
    expr: RingExpr,
    size: usize,
    one: usize,
    rep: RingRep,
    limits: Limits,
    add_table: OnceLock<Vec<u32>>,
    mul_table: OnceLock<Vec<u32>>,
    characteristic: OnceLock<u64>,
}

/// A finite ring with identity; cheap to clone (shared immutable state).
/// The zero element is always index 0.
#[derive(Clone)]
pub struct FiniteRing(Arc<RingInner>);

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, {} elements)", self.0.label, self.0.size)
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.label)
    }
}

/// Decode `x` into `count` digits of radix `radix` (little-endian).
fn decode_uniform(mut x: usize, radix: usize, count: usize) -> Vec<usize> {
    let mut d = vec![0usize; count];
    for slot in d.iter_mut() {
        *slot = x % radix;
        x /= radix;
    }
    debug_assert_eq!(x, 0);
    d
}

fn encode_uniform(digits: &[usize], radix: usize) -> usize {
    let mut x = 0usize;
    for &d in digits.iter().rev() {
        debug_assert!(d < radix);
        x = x * radix + d;
    }
    x
}

impl FiniteRing {
    pub(crate) fn from_parts(
        expr: RingExpr,
        size: usize,
        one: usize,
        rep: RingRep,
        limits: &Limits,
    ) -> Result<FiniteRing> {
        let r = FiniteRing(Arc::new(RingInner {
            label: expr.to_string(),
            expr,
            size,
            one,
            rep,
            limits: *limits,
            add_table: OnceLock::new(),
            mul_table: OnceLock::new(),
            characteristic: OnceLock::new(),
        }));
        r.audit()?;
        Ok(r)
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    /// The expression this ring was built from.
    pub fn expr(&self) -> &RingExpr {
        &self.0.expr
    }

    pub fn size(&self) -> usize {
        self.0.size
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.0.one
    }

    fn tables_allowed(&self) -> bool {
        self.0.size <= RING_TABLE_CAP
    }

    fn add_table(&self) -> &[u32] {
        self.0.add_table.get_or_init(|| {
            let n = self.0.size;
            let mut t = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    t[a * n + b] = self.rep_add(a, b) as u32;
                }
            }
            t
        })
    }

    fn mul_table(&self) -> &[u32] {
        self.0.mul_table.get_or_init(|| {
            let n = self.0.size;
            let mut t = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    t[a * n + b] = self.rep_mul(a, b) as u32;
                }
            }
            t
        })
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        if self.tables_allowed() {
            self.add_table()[a * self.0.size + b] as usize
        } else {
            self.rep_add(a, b)
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        if self.tables_allowed() {
            self.mul_table()[a * self.0.size + b] as usize
        } else {
            self.rep_mul(a, b)
        }
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn neg(&self, a: usize) -> usize {
        match &self.0.rep {
            RingRep::Zmod { n } => ((n - a as u64) % n) as usize,
            RingRep::Fq { field } => field.neg_idx(a as u64) as usize,
            RingRep::Matrix { base, k } => {
                let digits = decode_uniform(a, base.size(), k * k);
                let neg: Vec<usize> = digits.iter().map(|&d| base.neg(d)).collect();
                encode_uniform(&neg, base.size())
            }
            RingRep::UpperTri { base, k } => {
                let m = k * (k + 1) / 2;
                let digits = decode_uniform(a, base.size(), m);
                let neg: Vec<usize> = digits.iter().map(|&d| base.neg(d)).collect();
                encode_uniform(&neg, base.size())
            }
            RingRep::TruncPoly { base, k } => {
                let digits = decode_uniform(a, base.size(), *k);
                let neg: Vec<usize> = digits.iter().map(|&d| base.neg(d)).collect();
                encode_uniform(&neg, base.size())
            }
            RingRep::GroupRing { t, group, .. } => {
                if *t == 2 {
                    return a; // −x = x in characteristic 2
                }
                let m = group.order();
                let digits = decode_uniform(a, *t as usize, m);
                let neg: Vec<usize> = digits
                    .iter()
                    .map(|&d| ((*t as usize) - d) % *t as usize)
                    .collect();
                encode_uniform(&neg, *t as usize)
            }
            RingRep::EndAb { radix, .. } => {
                let digits = decode_mixed(a, radix);
                let neg: Vec<usize> = digits
                    .iter()
                    .zip(radix)
                    .map(|(&d, &r)| ((r as usize) - d) % r as usize)
                    .collect();
                encode_mixed(&neg, radix)
            }
            RingRep::Product { left, right } => {
                let nr = right.size();
                left.neg(a / nr) * nr + right.neg(a % nr)
            }
        }
    }

    fn rep_add(&self, a: usize, b: usize) -> usize {
        match &self.0.rep {
            RingRep::Zmod { n } => ((a as u64 + b as u64) % n) as usize,
            RingRep::Fq { field } => field.add_idx(a as u64, b as u64) as usize,
            RingRep::Matrix { base, k } => digitwise(a, b, base, k * k, |x, y| base.add(x, y)),
            RingRep::UpperTri { base, k } => {
                digitwise(a, b, base, k * (k + 1) / 2, |x, y| base.add(x, y))
            }
            RingRep::TruncPoly { base, k } => digitwise(a, b, base, *k, |x, y| base.add(x, y)),
            RingRep::GroupRing { t, group, .. } => {
                if *t == 2 {
                    return a ^ b;
                }
                let (t, m) = (*t as usize, group.order());
                let da = decode_uniform(a, t, m);
                let db = decode_uniform(b, t, m);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % t).collect();
                encode_uniform(&sum, t)
            }
            RingRep::EndAb { radix, .. } => {
                let da = decode_mixed(a, radix);
                let db = decode_mixed(b, radix);
                let sum: Vec<usize> = da
                    .iter()
                    .zip(&db)
                    .zip(radix)
                    .map(|((&x, &y), &r)| (x + y) % r as usize)
                    .collect();
                encode_mixed(&sum, radix)
            }
            RingRep::Product { left, right } => {
                let nr = right.size();
                left.add(a / nr, b / nr) * nr + right.add(a % nr, b % nr)
            }
        }
    }

    fn rep_mul(&self, a: usize, b: usize) -> usize {
        match &self.0.rep {
            RingRep::Zmod { n } => ((a as u64 * b as u64) % n) as usize,
            RingRep::Fq { field } => field.mul_idx(a as u64, b as u64) as usize,
            RingRep::Matrix { base, k } => {
                let k = *k;
                let n = base.size();
                let da = decode_uniform(a, n, k * k);
                let db = decode_uniform(b, n, k * k);
                let mut out = vec![0usize; k * k];
                for i in 0..k {
                    for j in 0..k {
                        let mut acc = 0usize; // base zero is index 0
                        for l in 0..k {
                            acc = base.add(acc, base.mul(da[i * k + l], db[l * k + j]));
                        }
                        out[i * k + j] = acc;
                    }
                }
                encode_uniform(&out, n)
            }
            RingRep::UpperTri { base, k } => {
                let k = *k;
                let n = base.size();
                let m = k * (k + 1) / 2;
                let da = decode_uniform(a, n, m);
                let db = decode_uniform(b, n, m);
                let pos = |i: usize, j: usize| -> usize {
                    // Row-major over the upper triangle: row i starts after
                    // k + (k−1) + … + (k−i+1) entries.
                    i * k - i * (i + 1) / 2 + i + (j - i)
                };
                let mut out = vec![0usize; m];
                for i in 0..k {
                    for j in i..k {
                        let mut acc = 0usize;
                        for l in i..=j {
                            acc = base.add(acc, base.mul(da[pos(i, l)], db[pos(l, j)]));
                        }
                        out[pos(i, j)] = acc;
                    }
                }
                encode_uniform(&out, n)
            }
            RingRep::TruncPoly { base, k } => {
                let k = *k;
                let n = base.size();
                let da = decode_uniform(a, n, k);
                let db = decode_uniform(b, n, k);
                let mut out = vec![0usize; k];
                for (i, &x) in da.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in db.iter().enumerate() {
                        if i + j >= k {
                            break;
                        }
                        if y != 0 {
                            out[i + j] = base.add(out[i + j], base.mul(x, y));
                        }
                    }
                }
                encode_uniform(&out, n)
            }
            RingRep::GroupRing { t, group, fast2 } => {
                if let Some(f) = fast2 {
                    let mut acc = 0u32;
                    let mut rest = a as u32;
                    while rest != 0 {
                        let g = rest.trailing_zeros() as usize;
                        rest &= rest - 1;
                        acc ^= f.left_mul[g][b];
                    }
                    return acc as usize;
                }
                let (t, m) = (*t as usize, group.order());
                let da = decode_uniform(a, t, m);
                let db = decode_uniform(b, t, m);
                let mut out = vec![0usize; m];
                for (g, &cg) in da.iter().enumerate() {
                    if cg == 0 {
                        continue;
                    }
                    for (h, &ch) in db.iter().enumerate() {
                        if ch == 0 {
                            continue;
                        }
                        let gh = group.mul(g, h);
                        out[gh] = (out[gh] + cg * ch) % t;
                    }
                }
                encode_uniform(&out, t)
            }
            RingRep::EndAb { dims, radix, step } => {
                let r = dims.len();
                let da = decode_mixed(a, radix);
                let db = decode_mixed(b, radix);
                // Recover actual matrix entries.
                let entry = |d: &[usize], i: usize, j: usize| -> u64 {
                    d[i * r + j] as u64 * step[i * r + j]
                };
                let mut out = vec![0usize; r * r];
                for i in 0..r {
                    for j in 0..r {
                        let mut acc = 0u64;
                        for l in 0..r {
                            acc = (acc + entry(&da, i, l) * entry(&db, l, j)) % dims[i];
                        }
                        let st = step[i * r + j];
                        assert_eq!(
                            acc % st,
                            0,
                            "endomorphism composition left the homomorphism lattice"
                        );
                        out[i * r + j] = (acc / st) as usize;
                    }
                }
                encode_mixed(&out, radix)
            }
            RingRep::Product { left, right } => {
                let nr = right.size();
                left.mul(a / nr, b / nr) * nr + right.mul(a % nr, b % nr)
            }
        }
    }

    /// Verify the ring axioms for the finished representation. Exhaustive on
    /// small rings; sampled with a fixed seed above the caps.
    fn audit(&self) -> Result<()> {
        let n = self.0.size;
        if n < 2 {
            return Err(Error::Internal(format!(
                "{}: rings must have at least two elements (0 ≠ 1)",
                self.0.label
            )));
        }
        let fail = |law: &str, a: usize, b: usize, c: usize| {
            Err(Error::Internal(format!(
                "{}: {law} fails at ({a},{b},{c})",
                self.0.label
            )))
        };
        for x in 0..n {
            if self.add(0, x) != x || self.add(x, 0) != x {
                return fail("additive identity", 0, x, 0);
            }
            if self.add(x, self.neg(x)) != 0 {
                return fail("additive inverse", x, 0, 0);
            }
            let e = self.0.one;
            if self.mul(e, x) != x || self.mul(x, e) != x {
                return fail("multiplicative identity", e, x, 0);
            }
        }
        if n <= FULL_PAIR_CAP {
            for a in 0..n {
                for b in a + 1..n {
                    if self.add(a, b) != self.add(b, a) {
                        return fail("additive commutativity", a, b, 0);
                    }
                }
            }
        } else {
            let mut rng = SplitMix64(0x7269_6e67 ^ n as u64);
            for _ in 0..SAMPLED_TRIPLES {
                let a = rng.below(n as u64) as usize;
                let b = rng.below(n as u64) as usize;
                if self.add(a, b) != self.add(b, a) {
                    return fail("additive commutativity", a, b, 0);
                }
            }
        }

        let check_triple = |a: usize, b: usize, c: usize| -> Result<()> {
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                return fail("additive associativity", a, b, c);
            }
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return fail("multiplicative associativity", a, b, c);
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return fail("left distributivity", a, b, c);
            }
            if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
                return fail("right distributivity", a, b, c);
            }
            Ok(())
        };
        if n <= FULL_TRIPLE_CAP {
            // FULL_TRIPLE_CAP ≤ RING_TABLE_CAP, so the n³ sweep is pure
            // table lookups.
            let at = self.add_table();
            let mt = self.mul_table();
            let idx = |t: &[u32], a: usize, b: usize| t[a * n + b] as usize;
            for a in 0..n {
                for b in 0..n {
                    let ab_add = idx(at, a, b);
                    let ab_mul = idx(mt, a, b);
                    for c in 0..n {
                        let bc_add = idx(at, b, c);
                        if idx(at, ab_add, c) != idx(at, a, bc_add) {
                            return fail("additive associativity", a, b, c);
                        }
                        if idx(mt, ab_mul, c) != idx(mt, a, idx(mt, b, c)) {
                            return fail("multiplicative associativity", a, b, c);
                        }
                        if idx(mt, a, bc_add) != idx(at, ab_mul, idx(mt, a, c)) {
                            return fail("left distributivity", a, b, c);
                        }
                        if idx(mt, ab_add, c) != idx(at, idx(mt, a, c), idx(mt, b, c)) {
                            return fail("right distributivity", a, b, c);
                        }
                    }
                }
            }
        } else {
            let mut rng = SplitMix64(0x6469_7374 ^ n as u64);
            for _ in 0..SAMPLED_TRIPLES {
                let a = rng.below(n as u64) as usize;
                let b = rng.below(n as u64) as usize;
                let c = rng.below(n as u64) as usize;
                check_triple(a, b, c)?;
            }
        }
        Ok(())
    }

    /// The additive order of 1 (cached).
    pub fn characteristic(&self) -> u64 {
        *self.0.characteristic.get_or_init(|| {
            let mut acc = self.0.one;
            let mut count = 1u64;
            while acc != 0 {
                acc = self.add(acc, self.0.one);
                count += 1;
            }
            count
        })
    }

    /// A set whose Z-span is the whole additive group: one entry per
    /// "digit position" of the representation.
    pub fn additive_generators(&self) -> Vec<usize> {
        match &self.0.rep {
            RingRep::Zmod { .. } => vec![1],
            RingRep::Fq { field } => {
                let p = field.characteristic() as usize;
                (0..field.degree()).map(|i| p.pow(i)).collect()
            }
            RingRep::Matrix { base, k } => positional_generators(base, k * k),
            RingRep::UpperTri { base, k } => positional_generators(base, k * (k + 1) / 2),
            RingRep::TruncPoly { base, k } => positional_generators(base, *k),
            RingRep::GroupRing { t, group, .. } => {
                let t = *t as usize;
                (0..group.order()).map(|g| t.pow(g as u32)).collect()
            }
            RingRep::EndAb { radix, .. } => {
                let mut weight = 1usize;
                let mut gens = Vec::with_capacity(radix.len());
                for &r in radix {
                    if r > 1 {
                        gens.push(weight);
                    }
                    weight *= r as usize;
                }
                gens
            }
            RingRep::Product { left, right } => {
                let nr = right.size();
                let mut gens: Vec<usize> =
                    left.additive_generators().iter().map(|&l| l * nr).collect();
                gens.extend(right.additive_generators());
                gens
            }
        }
    }

    /// True when multiplication is commutative (decided on additive
    /// generators, which is sufficient by distributivity).
    pub fn is_commutative(&self) -> bool {
        let gens = self.additive_generators();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// For every element, its two-sided inverse (or `None`). The scan looks
    /// for a right inverse and then confirms it on the left; a one-sided
    /// discrepancy is an internal error, since in a finite ring the two
    /// notions provably coincide.
    fn inverse_scan(&self) -> Result<Vec<Option<usize>>> {
        let n = self.0.size;
        if let RingRep::GroupRing { t: 2, group, fast2: Some(_) } = &self.0.rep {
            return self.inverse_scan_fast2(group.order());
        }
        if n > UNIT_SCAN_CAP {
            return Err(Error::SizeExceeded {
                what: format!("unit enumeration of {}", self.0.label),
                needed: n as u128,
                bound: UNIT_SCAN_CAP as u64,
            });
        }
        let one = self.0.one;
       let mut inv = vec![None; n];
        for x in 0..n {
            for y in 0..n {
                if self.mul(x, y) == one {
                    if self.mul(y, x) != one {
                        return Err(Error::Internal(format!(
                            "{}: {y} is a right but not left inverse of {x}",
                            self.0.label
                        )));
                    }
                    inv[x] = Some(y);
                    break;
                }
            }
        }
        Ok(inv)
    }

    /// Unit detection for `Z₂[G]` via the left-regular representation: `x`
    /// is a unit iff the columns `x·e_h` are linearly independent over F₂,
    /// and the inverse is read off by solving `x·y = 1`.
    fn inverse_scan_fast2(&self, m: usize) -> Result<Vec<Option<usize>>> {
        let n = self.0.size;
        let one = self.0.one;
        let mut inv = vec![None; n];
        for x in 0..n {
            // Echelon basis of the column space, remembering combinations.
            let mut pivots: Vec<(u32, u32)> = Vec::with_capacity(m); // (column, combo)
            let mut singular = false;
            for h in 0..m {
                let mut col = self.rep_mul(x, 1usize << h) as u32;
                let mut combo = 1u32 << h;
                for &(pc, pcombo) in &pivots {
                    if col & (1 << pc.trailing_zeros()) != 0 {
                        col ^= pc;
                        combo ^= pcombo;
                    }
                }
                if col == 0 {
                    singular = true;
                    break;
                }
                pivots.push((col, combo));
                // Keep pivot columns reduced against each other (lowest set
                // bit of each pivot column is unique by construction).
                pivots.sort_unstable_by_key(|&(c, _)| c.trailing_zeros());
            }
            if singular {
                continue;
            }
            // Solve x·y = 1 by reducing the target through the pivots.
            let mut target = one as u32;
            let mut combo = 0u32;
            for &(pc, pcombo) in &pivots {
                if target & (1 << pc.trailing_zeros()) != 0 {
                    target ^= pc;
                    combo ^= pcombo;
                }
            }
            if target != 0 {
                // Bijective left-multiplication must reach 1.
                return Err(Error::Internal(format!(
                    "{}: invertible left multiplication misses the identity at {x}",
                    self.0.label
                )));
            }
            let y = combo as usize;
            if self.rep_mul(x, y) != one || self.rep_mul(y, x) != one {
                return Err(Error::Internal(format!(
                    "{}: solved inverse of {x} fails verification",
                    self.0.label
                )));
            }
            inv[x] = Some(y);
        }
        Ok(inv)
    }

    /// The group of units. Unit `i` of the result is ring element
    /// `ring_elements()[i]`; the group operation is ring multiplication.
    pub fn units(&self) -> Result<UnitGroupResult> {
        let inv = self.inverse_scan()?;
        let elements: Vec<usize> = (0..self.0.size).filter(|&x| inv[x].is_some()).collect();
        self.0
            .limits
            .check_size(&format!("unit group of {}", self.0.label), elements.len() as u128)?;
        let index_of: Arc<HashMap<usize, usize>> = Arc::new(
            elements
                .iter()
                .enumerate()
                .map(|(i, &x)| (x, i))
                .collect(),
        );
        let identity = index_of[&self.0.one];
        let ring = self.clone();
        let elems = Arc::new(elements.clone());
        let lookup = Arc::clone(&index_of);
        let mul = move |a: usize, b: usize| -> usize {
            let prod = ring.mul(elems[a], elems[b]);
            *lookup
                .get(&prod)
                .expect("product of two units is a unit")
        };
        let group = FiniteGroup::from_parts(
            format!("U({})", self.0.label),
            elements.len(),
            identity,
            GroupRep::Dyn { mul: Arc::new(mul) },
            Vec::new(),
            &self.0.limits,
        )?;
        Ok(UnitGroupResult {
            group,
            ring_elements: elements,
            index_of,
        })
    }

    /// The Jacobson radical: `{x : 1 − r·x is a unit for every r}`. The
    /// result is verified to be a two-sided ideal before returning.
    pub fn jacobson_radical(&self) -> Result<Vec<usize>> {
        let n = self.0.size;
        let inv = self.inverse_scan()?;
        let is_unit: Vec<bool> = inv.iter().map(|i| i.is_some()).collect();
        let radical: Vec<usize> = (0..n)
            .filter(|&x| (0..n).all(|r| is_unit[self.sub(self.0.one, self.mul(r, x))]))
            .collect();
        // Soundness: the quasi-regularity criterion must have produced a
        // two-sided ideal.
        let in_radical: Vec<bool> = {
            let mut v = vec![false; n];
            for &x in &radical {
                v[x] = true;
            }
            v
        };
        for &x in &radical {
            for &y in &radical {
                if !in_radical[self.add(x, y)] {
                    return Err(Error::Internal(format!(
                        "{}: radical not additively closed at ({x},{y})",
                        self.0.label
                    )));
                }
            }
            for r in self.additive_generators() {
                if !in_radical[self.mul(r, x)] || !in_radical[self.mul(x, r)] {
                    return Err(Error::Internal(format!(
                        "{}: radical not an ideal at ({r},{x})",
                        self.0.label
                    )));
                }
            }
        }
        Ok(radical)
    }

    /// The center `{z : zr = rz for all r}` as a sorted element list.
    pub fn center(&self) -> Vec<usize> {
        if self.is_commutative() {
            return (0..self.0.size).collect();
        }
        let gens = self.additive_generators();
        (0..self.0.size)
            .filter(|&z| gens.iter().all(|&g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// Multiplicative order of `x`, or `None` when no power of `x` is 1
    /// (i.e. `x` is not a unit).
    pub fn element_order(&self, x: usize) -> Option<u64> {
        let one = self.0.one;
        if x == one {
            return Some(1);
        }
        let mut acc = x;
        for m in 1..=self.0.size as u64 {
            if acc == one {
                return Some(m);
            }
            acc = self.mul(acc, x);
        }
        None
    }

    /// Human-readable rendering of an element in the ring's natural
    /// coordinates.
    pub fn describe(&self, x: usize) -> String {
        match &self.0.rep {
            RingRep::Zmod { .. } => format!("{x}"),
            RingRep::Fq { field } => {
                let p = field.characteristic() as usize;
                let k = field.degree() as usize;
                if k == 1 {
                    return format!("{x}");
                }
                let digits = decode_uniform(x, p, k);
                poly_string(&digits)
            }
            RingRep::Matrix { base, k } => {
                let digits = decode_uniform(x, base.size(), k * k);
                let rows: Vec<String> = (0..*k)
                    .map(|i| {
                        let cells: Vec<String> =
                            (0..*k).map(|j| base.describe(digits[i * k + j])).collect();
                        format!("[{}]", cells.join(","))
                    })
                    .collect();
                format!("[{}]", rows.join(","))
            }
            RingRep::UpperTri { base, k } => {
                let k = *k;
                let m = k * (k + 1) / 2;
                let digits = decode_uniform(x, base.size(), m);
                let pos = |i: usize, j: usize| i * k - i * (i + 1) / 2 + i + (j - i);
                let rows: Vec<String> = (0..k)
                    .map(|i| {
                        let cells: Vec<String> = (0..k)
                            .map(|j| {
                                if j < i {
                                    base.describe(0)
                                } else {
                                    base.describe(digits[pos(i, j)])
                                }
                            })
                            .collect();
                        format!("[{}]", cells.join(","))
                    })
                    .collect();
                format!("[{}]", rows.join(","))
            }
            RingRep::TruncPoly { base, k } => {
                let digits = decode_uniform(x, base.size(), *k);
                let terms: Vec<String> = digits
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| match i {
                        0 => base.describe(c),
                        1 if c == base.one() => "x".to_string(),
                        1 => format!("{}·x", base.describe(c)),
                        _ if c == base.one() => format!("x^{i}"),
                        _ => format!("{}·x^{i}", base.describe(c)),
                    })
                    .collect();
                if terms.is_empty() {
                    "0".to_string()
                } else {
                    terms.join(" + ")
                }
            }
            RingRep::GroupRing { t, group, .. } => {
                let (t, m) = (*t as usize, group.order());
                let digits = decode_uniform(x, t, m);
                let terms: Vec<String> = digits
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(g, &c)| {
                        if c == 1 {
                            group.describe(g)
                        } else {
                            format!("{c}·{}", group.describe(g))
                        }
                    })
                    .collect();
                if terms.is_empty() {
                    "0".to_string()
                } else {
                    terms.join(" + ")
                }
            }
            RingRep::EndAb { dims, radix, step } => {
                let r = dims.len();
                let digits = decode_mixed(x, radix);
                let rows: Vec<String> = (0..r)
                    .map(|i| {
                        let cells: Vec<String> = (0..r)
                            .map(|j| format!("{}", digits[i * r + j] as u64 * step[i * r + j]))
                            .collect();
                        format!("[{}]", cells.join(","))
                    })
                    .collect();
                format!("[{}]", rows.join(","))
            }
            RingRep::Product { left, right } => {
                let nr = right.size();
                format!("({}, {})", left.describe(x / nr), right.describe(x % nr))
            }
        }
    }

}

fn poly_string(digits: &[usize]) -> String {
    let terms: Vec<String> = digits
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| match (i, c) {
            (0, _) => format!("{c}"),
            (1, 1) => "x".to_string(),
            (1, _) => format!("{c}x"),
            (_, 1) => format!("x^{i}"),
            (_, _) => format!("{c}x^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// One additive generator per digit position of a positional representation.
fn positional_generators(base: &FiniteRing, positions: usize) -> Vec<usize> {
    let n = base.size();
    let base_gens = base.additive_generators();
    let mut out = Vec::with_capacity(positions * base_gens.len());
    let mut weight = 1usize;
    for _ in 0..positions {
        for &g in &base_gens {
            out.push(g * weight);
        }
        weight *= n;
    }
    out
}

fn digitwise(
    a: usize,
    b: usize,
    base: &FiniteRing,
    count: usize,
    op: impl Fn(usize, usize) -> usize,
) -> usize {
    let n = base.size();
    let da = decode_uniform(a, n, count);
    let db = decode_uniform(b, n, count);
    let out: Vec<usize> = da.iter().zip(&db).map(|(&x, &y)| op(x, y)).collect();
    encode_uniform(&out, n)
}

fn decode_mixed(mut x: usize, radix: &[u64]) -> Vec<usize> {
    let mut d = vec![0usize; radix.len()];
    for (slot, &r) in d.iter_mut().zip(radix) {
        *slot = x % r as usize;
        x /= r as usize;
    }
    debug_assert_eq!(x, 0);
    d
}

fn encode_mixed(digits: &[usize], radix: &[u64]) -> usize {
    let mut x = 0usize;
    for (&d, &r) in digits.iter().zip(radix).rev() {
        debug_assert!((d as u64) < r);
        x = x * r as usize + d;
    }
    x
}

/// The unit group of a ring together with the embedding back into the ring.
pub struct UnitGroupResult {
    /// The units under ring multiplication.
    pub group: FiniteGroup,
    ring_elements: Vec<usize>,
    index_of: Arc<HashMap<usize, usize>>,
}

impl UnitGroupResult {
    pub fn order(&self) -> usize {
        self.ring_elements.len()
    }

    /// Ring element indices in group-element order.
    pub fn ring_elements(&self) -> &[usize] {
        &self.ring_elements
    }

    /// The ring element behind group element `i`.
    pub fn embed(&self, i: usize) -> usize {
        self.ring_elements[i]
    }

    /// The group element a ring index corresponds to, if it is a unit.
    pub fn unit_index(&self, ring_element: usize) -> Option<usize> {
        self.index_of.get(&ring_element).copied()
    }
}

pub(crate) fn build_fast2(group: &FiniteGroup) -> Option<Fast2> {
    let m = group.order();
    if m > FAST2_MAX_GROUP {
        return None;
    }
    let size = 1usize << m;
    let mut left_mul = Vec::with_capacity(m);
    for g in 0..m {
        // Left multiplication by g permutes the group basis.
        let perm: Vec<u32> = (0..m).map(|h| group.mul(g, h) as u32).collect();
        let mut table = vec![0u32; size];
        for (mask, slot) in table.iter_mut().enumerate() {
            let mut acc = 0u32;
            let mut rest = mask as u32;
            while rest != 0 {
                let h = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                acc ^= 1 << perm[h];
            }
            *slot = acc;
        }
        left_mul.push(table);
    }
    Some(Fast2 { left_mul })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::GroupExpr;

    fn ring(text_expr: RingExpr) -> FiniteRing {
        build_ring(&text_expr).unwrap()
    }

    #[test]
    fn zmod_basics() {
        let z6 = ring(RingExpr::Zmod(6));
        assert_eq!(z6.size(), 6);
        assert_eq!(z6.characteristic(), 6);
        assert_eq!(z6.add(4, 5), 3);
        assert_eq!(z6.mul(4, 5), 2);
        assert_eq!(z6.neg(2), 4);
        assert!(z6.is_commutative());
        let u = z6.units().unwrap();
        assert_eq!(u.order(), 2);
        assert_eq!(u.ring_elements(), &[1, 5]);
    }

    #[test]
    fn matrix_ring_over_f2() {
        let m2 = ring(RingExpr::matrix(2, RingExpr::Fq(2)));
        assert_eq!(m2.size(), 16);
        assert_eq!(m2.characteristic(), 2);
        assert!(!m2.is_commutative());
        // one = identity matrix: digits (1,0,0,1) little-endian = 1 + 8.
        assert_eq!(m2.one(), 9);
        let u = m2.units().unwrap();
        assert_eq!(u.order(), 6); // |GL2(F2)|
        assert_eq!(m2.jacobson_radical().unwrap(), vec![0]);
        // Center of M2(F2) is the scalars {0, I}.
        assert_eq!(m2.center(), vec![0, 9]);
    }

    #[test]
    fn upper_triangular_radical() {
        let u3 = ring(RingExpr::upper_triangular(3, RingExpr::Fq(2)));
        assert_eq!(u3.size(), 64);
        let rad = u3.jacobson_radical().unwrap();
        // Strictly upper-triangular matrices: 2³ of them.
        assert_eq!(rad.len(), 8);
        let units = u3.units().unwrap();
        assert_eq!(units.order(), 8);
    }

    #[test]
    fn truncated_polynomials_over_f3() {
        let r = ring(RingExpr::trunc_poly(RingExpr::Fq(3), 2));
        assert_eq!(r.size(), 9);
        assert_eq!(r.characteristic(), 3);
        // x² = 0: x is digit (0,1) = index 3.
        assert_eq!(r.mul(3, 3), 0);
        let u = r.units().unwrap();
        assert_eq!(u.order(), 6);
        assert!(u.group.is_cyclic());
        assert_eq!(r.jacobson_radical().unwrap(), vec![0, 3, 6]);
    }

    #[test]
    fn group_ring_fast_path_matches_generic() {
        // Z2[S3] both ways: the bit-mask fast path and a forced generic path
        // must agree everywhere.
        let g = crate::groups::symmetric(3).unwrap();
        let fast = FiniteRing::from_parts(
            RingExpr::GroupRing(2, GroupExpr::Symmetric(3)),
            64,
            1 << g.identity(),
            RingRep::GroupRing {
                t: 2,
                group: g.clone(),
                fast2: build_fast2(&g),
            },
            &Limits::default(),
        )
        .unwrap();
        let slow = FiniteRing::from_parts(
            RingExpr::GroupRing(2, GroupExpr::Symmetric(3)),
            64,
            1 << g.identity(),
            RingRep::GroupRing {
                t: 2,
                group: g.clone(),
                fast2: None,
            },
            &Limits::default(),
        )
        .unwrap();
        for a in 0..64 {
            for b in 0..64 {
                assert_eq!(fast.mul(a, b), slow.mul(a, b));
                assert_eq!(fast.add(a, b), slow.add(a, b));
            }
        }
        assert_eq!(
            fast.units().unwrap().ring_elements(),
            slow.units().unwrap().ring_elements()
        );
    }

    #[test]
    fn group_ring_center_of_quaternion_ring() {
        // Z2[Q8]: the center is spanned by class sums; Q8 has 5 conjugacy
        // classes, so the center has 2⁵ elements.
        let r = ring(RingExpr::GroupRing(2, GroupExpr::Quaternion));
        assert_eq!(r.size(), 256);
        let brute: Vec<usize> = (0..256)
            .filter(|&z| (0..256).all(|x| r.mul(z, x) == r.mul(x, z)))
            .collect();
        assert_eq!(r.center(), brute);
        assert_eq!(brute.len(), 32);
    }

    #[test]
    fn end_ab_ring_of_c4_x_c2() {
        let e = ring(RingExpr::EndAb(vec![4, 2]));
        assert_eq!(e.size(), 32);
        assert_eq!(e.characteristic(), 4);
        let u = e.units().unwrap();
        assert_eq!(u.order(), 8);
        let d8 = crate::groups::dihedral(8).unwrap();
        assert!(crate::groups::is_isomorphic(&u.group, &d8)
            .unwrap()
            .isomorphic);
    }

    #[test]
    fn product_ring_units_factor() {
        let r = ring(RingExpr::product(
            RingExpr::Zmod(4),
            RingExpr::matrix(2, RingExpr::Fq(2)),
        ));
        assert_eq!(r.size(), 64);
        assert_eq!(r.characteristic(), 4);
        let u = r.units().unwrap();
        assert_eq!(u.order(), 12);
        let expected = crate::groups::direct_product(
            &crate::groups::cyclic(2).unwrap(),
            &crate::groups::symmetric(3).unwrap(),
        )
        .unwrap();
        assert!(crate::groups::is_isomorphic(&u.group, &expected)
            .unwrap()
            .isomorphic);
    }

    #[test]
    fn unit_embedding_is_multiplicative() {
        let r = ring(RingExpr::matrix(2, RingExpr::Fq(3)));
        let u = r.units().unwrap();
        assert_eq!(u.order(), 48);
        for a in 0..u.order() {
            for b in 0..u.order() {
                let viaring = r.mul(u.embed(a), u.embed(b));
                assert_eq!(viaring, u.embed(u.group.mul(a, b)));
            }
        }
    }

    #[test]
    fn element_orders() {
        let z5 = ring(RingExpr::Zmod(5));
        assert_eq!(z5.element_order(2), Some(4));
        assert_eq!(z5.element_order(1), Some(1));
        assert_eq!(z5.element_order(0), None);
        let z6 = ring(RingExpr::Zmod(6));
        assert_eq!(z6.element_order(5), Some(2));
        assert_eq!(z6.element_order(3), None); // 3 is a zero divisor
    }

    #[test]
    fn describe_small_elements() {
        let z4 = ring(RingExpr::Zmod(4));
        assert_eq!(z4.describe(2), "2");
        let tp = ring(RingExpr::trunc_poly(RingExpr::Fq(3), 2));
        assert_eq!(tp.describe(0), "0");
        assert_eq!(tp.describe(3), "x");
        assert_eq!(tp.describe(7), "1 + 2·x");
    }
}
