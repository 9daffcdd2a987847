//! A small expression tree describing how to build a group, used by the
//! command-line front end. `Display` round-trips through the same textual
//! grammar the CLI accepts (`C12`, `SL2(3)`, `Hol(8) x C2`, …).

use std::fmt;

use super::{FiniteGroup, Subgroup};
use crate::{Limits, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupExpr {
    /// `C<n>` — cyclic of order `n`.
    Cyclic(u64),
    /// `D<m>` — dihedral of order `m` (even).
    Dihedral(u64),
    /// `Q8` — quaternion group.
    Quaternion,
    /// `S<n>` — symmetric group on `n` letters.
    Symmetric(u32),
    /// `Hol(<n>)` — holomorph of Z_n, i.e. `Z_n ⋊ Z_n^×`.
    Holomorph(u64),
    /// `AGL1(<q>)` — affine maps `x ↦ bx + a` over `F_q`.
    Affine(u64),
    /// `GL2(<q>)`.
    GeneralLinear2(u64),
    /// `SL2(<q>)`.
    SpecialLinear2(u64),
    /// `UC(<q>)` — the subgroup of `SL2(F_q)` of matrices `[[x,y],[−y,x]]`.
    UnitCircle(u64),
    /// `<a> x <b>` — direct product.
    Product(Box<GroupExpr>, Box<GroupExpr>),
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Cyclic(n) => write!(f, "C{n}"),
            GroupExpr::Dihedral(m) => write!(f, "D{m}"),
            GroupExpr::Quaternion => write!(f, "Q8"),
            GroupExpr::Symmetric(n) => write!(f, "S{n}"),
            GroupExpr::Holomorph(n) => write!(f, "Hol({n})"),
            GroupExpr::Affine(q) => write!(f, "AGL1({q})"),
            GroupExpr::GeneralLinear2(q) => write!(f, "GL2({q})"),
            GroupExpr::SpecialLinear2(q) => write!(f, "SL2({q})"),
            GroupExpr::UnitCircle(q) => write!(f, "UC({q})"),
            GroupExpr::Product(a, b) => write!(f, "{a} x {b}"),
        }
    }
}

impl GroupExpr {
    pub fn product(a: GroupExpr, b: GroupExpr) -> GroupExpr {
        GroupExpr::Product(Box::new(a), Box::new(b))
    }

    /// Construct the group this expression denotes.
    pub fn build(&self, limits: &Limits) -> Result<FiniteGroup> {
        match self {
            GroupExpr::Cyclic(n) => super::cyclic_with(*n, limits),
            GroupExpr::Dihedral(m) => super::dihedral_with(*m, limits),
            GroupExpr::Quaternion => Ok(super::quaternion8()),
            GroupExpr::Symmetric(n) => super::symmetric(*n),
            GroupExpr::Holomorph(n) => super::holomorph_with(*n, limits),
            GroupExpr::Affine(q) => super::agl1_with(*q, limits),
            GroupExpr::GeneralLinear2(q) => super::gl2_with(*q, limits),
            GroupExpr::SpecialLinear2(q) => super::sl2_with(*q, limits),
            GroupExpr::UnitCircle(q) => self.build_unit_circle(*q, limits),
            GroupExpr::Product(a, b) => {
                let left = a.build(limits)?;
                let right = b.build(limits)?;
                super::direct_product_with(&left, &right, limits)
            }
        }
    }

    fn build_unit_circle(&self, q: u64, limits: &Limits) -> Result<FiniteGroup> {
        let circle: Subgroup = super::uc_with(q, limits)?;
        circle.as_group()
    }
}
