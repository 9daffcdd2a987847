//! Finite groups with exact structural queries.
//!
//! A [`FiniteGroup`] is a set `0..order` with a multiplication rule. Small
//! standard families (cyclic, dihedral, quaternion, symmetric), holomorphs
//! `Z_n ⋊ Z_n^×`, affine and matrix groups over finite fields, and direct
//! products each keep their natural structured representation; a dense
//! multiplication table is materialized lazily and only below a size
//! threshold. Every constructor audits the group axioms on the finished
//! object (identity and inverses exhaustively, associativity exhaustively up
//! to a work bound and by fixed-seed sampling beyond it).
//!
//! Queries — element orders, centers, centralizers, conjugacy classes, normal
//! subgroups, commutator subgroups, quotients — are exact enumerations, and
//! everything is deterministic: the same inputs produce the same element
//! numbering, the same subgroup lists in the same order, the same witnesses.

mod catalog;
mod expr;
mod holomorph;
mod iso;
mod matrix;
mod standard;

pub use catalog::{abelian_invariant_factors, identify, identify_with};
pub use expr::GroupExpr;
pub use holomorph::{
    agl1, agl1_with, hol_factor_subgroup, holomorph, holomorph_pair, holomorph_with,
};
pub use iso::{
    is_dihedral_product, is_dihedral_product_with, is_isomorphic, is_isomorphic_with, IsoResult,
};
pub use matrix::{gl2, gl2_with, matrix_index, matrix_of, sl2, sl2_with, uc, uc_with};
pub use standard::{
    alternating4, cyclic, cyclic_with, dihedral, dihedral_with, direct_product,
    direct_product_with, quaternion8, symmetric, trivial,
};

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::exactalg::{FqField, SplitMix64};
use crate::{Error, Limits, Result};

/// Full associativity is checked when `order³` stays below this; beyond it a
/// fixed-seed sample of triples is used.
const FULL_ASSOC_WORK: u128 = 2_000_000;
const SAMPLED_ASSOC_TRIPLES: u64 = 100_000;

pub(crate) enum GroupRep {
    /// Dense table, row-major: `table[a·n + b] = a·b`.
    Table(Vec<u32>),
    /// `Z_n` under addition.
    Cyclic { n: u64 },
    /// Dihedral group of order `2·half`: index `f·half + i` is `sᶠ rⁱ`.
    Dihedral { half: u64 },
    /// `Z_n ⋊ Z_n^×`: index `a·φ(n) + j` is the pair `(a, units[j])`.
    HolPairs {
        n: u64,
        units: Vec<u64>,
        /// Position of each unit in `units`.
        pos: HashMap<u64, usize>,
    },
    /// Affine maps `x ↦ bx + a` over `F_q`, `b ≠ 0`: index `a·(q−1) + (b−1)`.
    AffineFq { field: FqField },
    /// 2×2 matrices over `F_q`, entries as field-element indices, enumerated
    /// in lexicographic `[a,b,c,d]` order.
    MatFq {
        field: FqField,
        elems: Vec<[u32; 4]>,
        index: HashMap<[u32; 4], u32>,
    },
    /// Direct product; index `l·|right| + r`.
    Product {
        left: FiniteGroup,
        right: FiniteGroup,
    },
    /// Opaque multiplication rule (used for unit groups of rings).
    Dyn {
        mul: Arc<dyn Fn(usize, usize) -> usize + Send + Sync>,
    },
}

pub(crate) struct GroupInner {
    label: String,
    order: usize,
    identity: usize,
    rep: GroupRep,
    gen_hint: Vec<usize>,
    limits: Limits,
    table: OnceLock<Vec<u32>>,
    inverses: OnceLock<Vec<u32>>,
    generators: OnceLock<Vec<usize>>,
}

/// A finite group; cheap to clone (shared immutable state).
#[derive(Clone)]
pub struct FiniteGroup(Arc<GroupInner>);

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.0.label, self.0.order)
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.label)
    }
}

impl FiniteGroup {
    pub(crate) fn from_parts(
        label: String,
        order: usize,
        identity: usize,
        rep: GroupRep,
        gen_hint: Vec<usize>,
        limits: &Limits,
    ) -> Result<FiniteGroup> {
        let g = FiniteGroup(Arc::new(GroupInner {
            label,
            order,
            identity,
            rep,
            gen_hint,
            limits: *limits,
            table: OnceLock::new(),
            inverses: OnceLock::new(),
            generators: OnceLock::new(),
        }));
        g.audit()?;
        Ok(g)
    }

    /// Builds a group from an explicit multiplication table
    /// (`table[a][b] = a·b`). Validates that the table is a Latin square with
    /// a two-sided identity and associative multiplication.
    pub fn from_table(label: &str, table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 {
            return Err(Error::BadParameter("empty multiplication table".into()));
        }
        Limits::default().check_size(label, n as u128)?;
        let mut flat = vec![0u32; n * n];
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            let mut seen = vec![false; n];
            for (b, &v) in row.iter().enumerate() {
                if v >= n || seen[v] {
                    return Err(Error::BadParameter(format!(
                        "row {a} of the table is not a permutation"
                    )));
                }
                seen[v] = true;
                flat[a * n + b] = v as u32;
            }
        }
        for b in 0..n {
            let mut seen = vec![false; n];
            for a in 0..n {
                let v = flat[a * n + b] as usize;
                if seen[v] {
                    return Err(Error::BadParameter(format!(
                        "column {b} of the table is not a permutation"
                    )));
                }
                seen[v] = true;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| flat[e * n + x] as usize == x && flat[x * n + e] as usize == x))
            .ok_or_else(|| Error::BadParameter("table has no two-sided identity".into()))?;
        FiniteGroup::from_parts(
            label.to_string(),
            n,
            identity,
            GroupRep::Table(flat),
            Vec::new(),
            &Limits::default(),
        )
    }

    /// Verifies the group axioms for the finished representation.
    fn audit(&self) -> Result<()> {
        let n = self.0.order;
        let e = self.0.identity;
        if n == 0 {
            return Err(Error::BadParameter("a group cannot be empty".into()));
        }
        if e >= n {
            return Err(Error::Internal("identity index out of range".into()));
        }
        for x in 0..n {
            if self.mul(e, x) != x || self.mul(x, e) != x {
                return Err(Error::Internal(format!(
                    "{}: {e} is not a two-sided identity at {x}",
                    self.0.label
                )));
            }
        }
        // Building the inverse cache verifies two-sided inverses exist.
        self.inverses()?;

        let work = (n as u128).pow(3);
        if work <= FULL_ASSOC_WORK {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(Error::Internal(format!(
                                "{}: associativity fails at ({a},{b},{c})",
                                self.0.label
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = SplitMix64(0x6161_7564 ^ n as u64);
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                let a = rng.below(n as u64) as usize;
                let b = rng.below(n as u64) as usize;
                let c = rng.below(n as u64) as usize;
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return Err(Error::Internal(format!(
                        "{}: associativity fails at ({a},{b},{c})",
                        self.0.label
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn label(&self) -> &str {
        &self.0.label
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn identity(&self) -> usize {
        self.0.identity
    }

    pub(crate) fn rep(&self) -> &GroupRep {
        &self.0.rep
    }

    /// The product `a·b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let n = self.0.order;
        assert!(a < n && b < n, "element index out of range");
        if let GroupRep::Table(t) = &self.0.rep {
            return t[a * n + b] as usize;
        }
        if let Some(t) = self.0.table.get() {
            return t[a * n + b] as usize;
        }
        self.rep_mul(a, b)
    }

    fn rep_mul(&self, a: usize, b: usize) -> usize {
        match &self.0.rep {
            GroupRep::Table(t) => t[a * self.0.order + b] as usize,
            GroupRep::Cyclic { n } => ((a as u64 + b as u64) % n) as usize,
            GroupRep::Dihedral { half } => {
                let h = *half as usize;
                let (f1, i1) = (a / h, a % h);
                let (f2, i2) = (b / h, b % h);
                let i1 = if f2 == 1 { (h - i1) % h } else { i1 };
                (f1 ^ f2) * h + (i1 + i2) % h
            }
            GroupRep::HolPairs { n, units, pos } => {
                let phi = units.len();
                let (a1, b1) = ((a / phi) as u64, units[a % phi]);
                let (a2, b2) = ((b / phi) as u64, units[b % phi]);
                let ra = (a1 + b1 * a2) % n;
                let rb = (b1 * b2) % n;
                ra as usize * phi + pos[&rb]
            }
            GroupRep::AffineFq { field } => {
                let q = field.order();
                let u = q - 1;
                let (a1, b1) = ((a as u64 / u), (a as u64 % u) + 1);
                let (a2, b2) = ((b as u64 / u), (b as u64 % u) + 1);
                let ra = field.add_idx(a1, field.mul_idx(b1, a2));
                let rb = field.mul_idx(b1, b2);
                (ra * u + (rb - 1)) as usize
            }
            GroupRep::MatFq { field, elems, index } => {
                let x = elems[a];
                let y = elems[b];
                let prod = mat2_mul(field, x, y);
                index[&prod] as usize
            }
            GroupRep::Product { left, right } => {
                let nr = right.order();
                let (l1, r1) = (a / nr, a % nr);
                let (l2, r2) = (b / nr, b % nr);
                left.mul(l1, l2) * nr + right.mul(r1, r2)
            }
            GroupRep::Dyn { mul } => mul(a, b),
        }
    }

    /// Two-sided inverse of `x`.
    pub fn inverse(&self, x: usize) -> usize {
        self.inverses().expect("inverses verified at construction")[x] as usize
    }

    fn inverses(&self) -> Result<&[u32]> {
        if let Some(v) = self.0.inverses.get() {
            return Ok(v);
        }
        let n = self.0.order;
        let e = self.0.identity;
        let mut inv = vec![0u32; n];
        for x in 0..n {
            let y = match self.rep_inverse(x) {
                Some(y) => y,
                // No formula: scan. Quadratic, but only opaque reps need it.
                None => (0..n)
                    .find(|&y| self.mul(x, y) == e)
                    .ok_or_else(|| {
                        Error::Internal(format!("{}: {x} has no right inverse", self.0.label))
                    })?,
            };
            if self.mul(x, y) != e || self.mul(y, x) != e {
                return Err(Error::Internal(format!(
                    "{}: inverse of {x} is not two-sided",
                    self.0.label
                )));
            }
            inv[x] = y as u32;
        }
        let _ = self.0.inverses.set(inv);
        Ok(self.0.inverses.get().unwrap())
    }

    fn rep_inverse(&self, x: usize) -> Option<usize> {
        match &self.0.rep {
            GroupRep::Table(_) | GroupRep::Dyn { .. } => None,
            GroupRep::Cyclic { n } => Some(((n - x as u64 % n) % n) as usize),
            GroupRep::Dihedral { half } => {
                let h = *half as usize;
                let (f, i) = (x / h, x % h);
                Some(if f == 1 { x } else { (h - i) % h })
            }
            GroupRep::HolPairs { n, units, pos } => {
                let phi = units.len();
                let (a, b) = ((x / phi) as u64, units[x % phi]);
                let bi = crate::exactalg::mod_inv(b, *n)?;
                let ai = (*n - (bi * a) % n) % n;
                Some(ai as usize * phi + pos[&bi])
            }
            GroupRep::AffineFq { field } => {
                let u = field.order() - 1;
                let (a, b) = ((x as u64 / u), (x as u64 % u) + 1);
                let bi = field.inv_idx(b)?;
                let ai = field.neg_idx(field.mul_idx(bi, a));
                Some((ai * u + (bi - 1)) as usize)
            }
            GroupRep::MatFq { field, elems, index } => {
                let [a, b, c, d] = elems[x];
                let det = field.sub_idx(
                    field.mul_idx(a as u64, d as u64),
                    field.mul_idx(b as u64, c as u64),
                );
                let di = field.inv_idx(det)?;
                let adj = [
                    field.mul_idx(di, d as u64) as u32,
                    field.mul_idx(di, field.neg_idx(b as u64)) as u32,
                    field.mul_idx(di, field.neg_idx(c as u64)) as u32,
                    field.mul_idx(di, a as u64) as u32,
                ];
                index.get(&adj).map(|&i| i as usize)
            }
            GroupRep::Product { left, right } => {
                let nr = right.order();
                Some(left.inverse(x / nr) * nr + right.inverse(x % nr))
            }
        }
    }

    /// The dense multiplication table, built on first use.
    /// Errors with [`Error::SizeExceeded`] above the table threshold.
    pub fn table(&self) -> Result<&[u32]> {
        if let GroupRep::Table(t) = &self.0.rep {
            return Ok(t);
        }
        let n = self.0.order;
        if n as u64 > self.0.limits.table_threshold {
            return Err(Error::SizeExceeded {
                what: format!("multiplication table of {}", self.0.label),
                needed: n as u128,
                bound: self.0.limits.table_threshold,
            });
        }
        Ok(self.0.table.get_or_init(|| {
            let mut t = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    t[a * n + b] = self.rep_mul(a, b) as u32;
                }
            }
            t
        }))
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, x: usize) -> u64 {
        let e = self.0.identity;
        let mut acc = x;
        let mut k = 1u64;
        while acc != e {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    /// Map from element order to the number of elements of that order.
    pub fn order_spectrum(&self) -> BTreeMap<u64, usize> {
        let mut spec = BTreeMap::new();
        for x in 0..self.0.order {
            *spec.entry(self.element_order(x)).or_insert(0) += 1;
        }
        spec
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> u64 {
        let mut l = 1u64;
        for x in 0..self.0.order {
            let o = self.element_order(x);
            l = l / crate::exactalg::gcd(l, o) * o;
        }
        l
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .all(|&g| gens.iter().all(|&h| self.mul(g, h) == self.mul(h, g)))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.0.order as u64;
        (0..self.0.order).any(|x| self.element_order(x) == n)
    }

    /// The subgroup generated by the given elements (sorted member list).
    pub fn subgroup_closure(&self, gens: &[usize]) -> Vec<usize> {
        let n = self.0.order;
        let mut in_set = vec![false; n];
        in_set[self.0.identity] = true;
        let mut members = vec![self.0.identity];
        let mut queue = vec![self.0.identity];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !in_set[y] {
                    in_set[y] = true;
                    members.push(y);
                    queue.push(y);
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// A small generating set: the construction hint if it generates,
    /// otherwise (or additionally) greedily chosen elements in index order.
    pub fn generators(&self) -> &[usize] {
        self.0.generators.get_or_init(|| {
            let n = self.0.order;
            let mut gens: Vec<usize> = Vec::new();
            let mut covered = 1usize;
            let mut closure = {
                let mut v = vec![false; n];
                v[self.0.identity] = true;
                v
            };
            let extend = |gens: &mut Vec<usize>, closure: &mut Vec<bool>, covered: &mut usize, g: usize| {
                if closure[g] {
                    return;
                }
                gens.push(g);
                let members = self.subgroup_closure(gens);
                *covered = members.len();
                closure.iter_mut().for_each(|b| *b = false);
                for &m in &members {
                    closure[m] = true;
                }
            };
            for &h in &self.0.gen_hint {
                extend(&mut gens, &mut closure, &mut covered, h);
                if covered == n {
                    return gens;
                }
            }
            for x in 0..n {
                if covered == n {
                    break;
                }
                extend(&mut gens, &mut closure, &mut covered, x);
            }
            gens
        })
    }

    /// Elements commuting with everything (computed against a generating set).
    pub fn center(&self) -> Subgroup {
        self.centralizer_of(self.generators().to_vec().as_slice())
    }

    /// Elements commuting with every element of `set`.
    pub fn centralizer_of(&self, set: &[usize]) -> Subgroup {
        let members: Vec<usize> = (0..self.0.order)
            .filter(|&x| set.iter().all(|&s| self.mul(x, s) == self.mul(s, x)))
            .collect();
        Subgroup::from_sorted_members(self, members)
    }

    /// Conjugacy classes, each sorted, ordered by (size, least element).
    /// Needs the dense table, hence bounded by the table threshold.
    pub fn conjugacy_classes(&self) -> Result<Vec<Vec<usize>>> {
        let n = self.0.order;
        self.table()?;
        self.inverses()?;
        let mut assigned = vec![false; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if assigned[x] {
                continue;
            }
            let mut class = Vec::new();
            for g in 0..n {
                let y = self.mul(self.mul(g, x), self.inverse(g));
                if !assigned[y] {
                    assigned[y] = true;
                    class.push(y);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes.sort_by_key(|c| (c.len(), c[0]));
        Ok(classes)
    }

    /// The normal closure of a set: smallest normal subgroup containing it.
    pub fn normal_closure(&self, set: &[usize]) -> Vec<usize> {
        let n = self.0.order;
        let mut conjugates = BTreeSet::new();
        for &s in set {
            for g in 0..n {
                conjugates.insert(self.mul(self.mul(g, s), self.inverse(g)));
            }
        }
        let gens: Vec<usize> = conjugates.into_iter().collect();
        // The subgroup generated by a conjugation-closed set is normal.
        self.subgroup_closure(&gens)
    }

    /// All normal subgroups, sorted by (order, member list).
    ///
    /// Every normal subgroup is a join of normal closures of conjugacy
    /// classes, so the join-closure of those atoms is the complete list.
    pub fn normal_subgroups(&self) -> Result<Vec<Subgroup>> {
        let classes = self.conjugacy_classes()?;
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        found.insert(vec![self.0.identity]);
        for class in &classes {
            found.insert(self.subgroup_closure(class));
        }
        // Join pairs until stable. Joins use reduced generating sets to stay
        // cheap.
        loop {
            let list: Vec<Vec<usize>> = found.iter().cloned().collect();
            let gens: Vec<Vec<usize>> = list.iter().map(|m| self.reduced_generating_set(m)).collect();
            let mut grew = false;
            for i in 0..list.len() {
                for j in i + 1..list.len() {
                    let mut joint = gens[i].clone();
                    joint.extend_from_slice(&gens[j]);
                    let join = self.subgroup_closure(&joint);
                    if found.insert(join) {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
            if found.len() > 100_000 {
                return Err(Error::Internal(
                    "normal subgroup lattice exceeded sanity bound".into(),
                ));
            }
        }
        let mut subs: Vec<Subgroup> = found
            .into_iter()
            .map(|m| Subgroup::from_sorted_members(self, m))
            .collect();
        subs.sort_by(|a, b| {
            (a.order(), a.members()).cmp(&(b.order(), b.members()))
        });
        debug_assert!(subs.iter().all(|s| s.is_normal()));
        Ok(subs)
    }

    /// A small generating set for a subgroup given by its sorted member list.
    fn reduced_generating_set(&self, members: &[usize]) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut covered = vec![self.0.identity];
        for &m in members {
            if covered.binary_search(&m).is_err() {
                gens.push(m);
                covered = self.subgroup_closure(&gens);
                if covered.len() == members.len() {
                    break;
                }
            }
        }
        gens
    }

    /// The commutator subgroup: normal closure of generator commutators.
    pub fn commutator_subgroup(&self) -> Subgroup {
        let gens = self.generators();
        let mut comms = BTreeSet::new();
        for &g in gens {
            for &h in gens {
                let c = self.mul(
                    self.mul(self.inverse(g), self.inverse(h)),
                    self.mul(g, h),
                );
                comms.insert(c);
            }
        }
        let set: Vec<usize> = comms.into_iter().collect();
        Subgroup::from_sorted_members(self, self.normal_closure(&set))
    }

    /// The quotient by a normal subgroup, as a table group on coset
    /// representatives (ascending least elements).
    pub fn quotient(&self, normal: &Subgroup) -> Result<FiniteGroup> {
        if !normal.is_normal() {
            return Err(Error::BadParameter(format!(
                "subgroup of order {} is not normal in {}",
                normal.order(),
                self.0.label
            )));
        }
        let n = self.0.order;
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for &m in normal.members() {
                coset_of[self.mul(x, m)] = id;
            }
        }
        let k = reps.len();
        let mut table = vec![vec![0usize; k]; k];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                table[i][j] = coset_of[self.mul(a, b)];
            }
        }
        FiniteGroup::from_table(
            &format!("{}/(order-{} normal)", self.0.label, normal.order()),
            table,
        )
    }

    /// An isomorphic copy with elements renumbered by `perm`
    /// (`perm[old] = new`). Useful for invariance testing.
    pub fn permuted_copy(&self, perm: &[usize]) -> Result<FiniteGroup> {
        let n = self.0.order;
        if perm.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: perm.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::BadParameter("not a permutation".into()));
            }
            seen[p] = true;
        }
        self.table()?;
        let mut table = vec![vec![0usize; n]; n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a]][perm[b]] = perm[self.mul(a, b)];
            }
        }
        FiniteGroup::from_table(&format!("{} (relabeled)", self.0.label), table)
    }

    /// Human-readable name of an element in the group's natural coordinates.
    pub fn describe(&self, x: usize) -> String {
        match &self.0.rep {
            GroupRep::Cyclic { .. } => format!("{x}"),
            GroupRep::Dihedral { half } => {
                let h = *half as usize;
                let (f, i) = (x / h, x % h);
                match (f, i) {
                    (0, 0) => "e".to_string(),
                    (0, _) => format!("r{i}"),
                    (1, 0) => "s".to_string(),
                    (_, _) => format!("s·r{i}"),
                }
            }
            GroupRep::HolPairs { units, .. } => {
                let phi = units.len();
                format!("({},{})", x / phi, units[x % phi])
            }
            GroupRep::AffineFq { field } => {
                let u = field.order() - 1;
                format!("(a={}, b={})", x as u64 / u, (x as u64 % u) + 1)
            }
            GroupRep::MatFq { elems, .. } => {
                let [a, b, c, d] = elems[x];
                format!("[[{a},{b}],[{c},{d}]]")
            }
            GroupRep::Product { left, right } => {
                let nr = right.order();
                format!("({}, {})", left.describe(x / nr), right.describe(x % nr))
            }
            _ => format!("g{x}"),
        }
    }
}

/// A subgroup of a parent group, stored as a sorted member list.
#[derive(Clone)]
pub struct Subgroup {
    parent: FiniteGroup,
    members: Vec<usize>,
    in_set: Vec<bool>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subgroup(order {} of {})",
            self.members.len(),
            self.parent.label()
        )
    }
}

impl Subgroup {
    /// Wraps a sorted member list that is already closed under the parent's
    /// multiplication.
    pub(crate) fn from_sorted_members(parent: &FiniteGroup, members: Vec<usize>) -> Subgroup {
        let mut in_set = vec![false; parent.order()];
        for &m in &members {
            in_set[m] = true;
        }
        debug_assert!(in_set[parent.identity()], "subgroup must contain identity");
        debug_assert!(
            members
                .iter()
                .all(|&a| members.iter().all(|&b| in_set[parent.mul(a, b)])),
            "member list must be closed under multiplication"
        );
        Subgroup {
            parent: parent.clone(),
            members,
            in_set,
        }
    }

    /// The subgroup generated by `gens`.
    pub fn generated(parent: &FiniteGroup, gens: &[usize]) -> Subgroup {
        let members = parent.subgroup_closure(gens);
        Subgroup::from_sorted_members(parent, members)
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, x: usize) -> bool {
        self.in_set[x]
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole_group(&self) -> bool {
        self.members.len() == self.parent.order()
    }

    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        (0..g.order()).all(|x| {
            let xi = g.inverse(x);
            self.members
                .iter()
                .all(|&m| self.in_set[g.mul(g.mul(x, m), xi)])
        })
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.members.len() as u64;
        self.members
            .iter()
            .any(|&m| self.parent.element_order(m) == n)
    }

    pub fn is_abelian(&self) -> bool {
        self.members.iter().all(|&a| {
            self.members
                .iter()
                .all(|&b| self.parent.mul(a, b) == self.parent.mul(b, a))
        })
    }

    /// True when the centralizer of this subgroup in the parent is the
    /// subgroup itself (for abelian subgroups: maximal abelian).
    pub fn is_self_centralizing(&self) -> bool {
        self.parent.centralizer_of(&self.members).members == self.members
    }

    /// True if the two subgroups share a non-identity element.
    pub fn meets_nontrivially(&self, other: &Subgroup) -> bool {
        let e = self.parent.identity();
        self.members
            .iter()
            .any(|&m| m != e && other.contains(m))
    }

    /// True if every member lies in `other`.
    pub fn is_contained_in(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    /// The subgroup as a standalone group on indices `0..order`, numbering
    /// members in ascending parent order.
    pub fn as_group(&self) -> Result<FiniteGroup> {
        let k = self.members.len();
        let mut pos = HashMap::with_capacity(k);
        for (i, &m) in self.members.iter().enumerate() {
            pos.insert(m, i);
        }
        let mut table = vec![vec![0usize; k]; k];
        for (i, &a) in self.members.iter().enumerate() {
            for (j, &b) in self.members.iter().enumerate() {
                table[i][j] = pos[&self.parent.mul(a, b)];
            }
        }
        FiniteGroup::from_table(
            &format!("subgroup(order {}) of {}", k, self.parent.label()),
            table,
        )
    }
}

pub(crate) fn mat2_mul(field: &FqField, x: [u32; 4], y: [u32; 4]) -> [u32; 4] {
    let m = |a: u32, b: u32| field.mul_idx(a as u64, b as u64);
    let s = |a: u64, b: u64| field.add_idx(a, b);
    [
        s(m(x[0], y[0]), m(x[1], y[2])) as u32,
        s(m(x[0], y[1]), m(x[1], y[3])) as u32,
        s(m(x[2], y[0]), m(x[3], y[2])) as u32,
        s(m(x[2], y[1]), m(x[3], y[3])) as u32,
    ]
}
