//! Standalone checks: the unit group of the Hurwitz quaternion order, and
//! the structure of `AGL₁(F₄)`.

use crate::groups::{
    agl1_with, cyclic_with, dihedral_with, direct_product_with, identify_with, is_isomorphic_with,
    sl2_with, symmetric,
};
use crate::rings::hurwitz_unit_group;
use crate::verifier::report::{CheckBuilder, CheckReport};
use crate::verifier::CheckOptions;
use crate::Result;

/// The 24 units of the Hurwitz quaternions (±1, ±i, ±j, ±k and the sixteen
/// `(±1±i±j±k)/2`) form a group with a unique element of order 2 that is
/// isomorphic to `SL₂(F₃)`.
pub(crate) fn check_hurwitz(opts: &CheckOptions) -> Result<CheckReport> {
    let mut b = CheckBuilder::new("hurwitz", 3);
    let g = hurwitz_unit_group()?;

    if g.order() == 24 {
        b.pass_case("the Hurwitz order has exactly 24 units");
    } else {
        b.fail_case(format!("expected 24 Hurwitz units, found {}", g.order()));
    }

    let involutions: Vec<usize> = (0..g.order()).filter(|&x| g.element_order(x) == 2).collect();
    if involutions.len() == 1 {
        b.pass_case(format!(
            "unique element of order 2: {} (index {})",
            g.describe(involutions[0]),
            involutions[0]
        ));
    } else {
        b.fail_case(format!(
            "expected a unique involution, found {}",
            involutions.len()
        ));
    }

    let sl = sl2_with(3, &opts.limits)?;
    let iso = is_isomorphic_with(&g, &sl, &opts.limits)?;
    if iso.isomorphic {
        b.pass_case("Hurwitz unit group ≅ SL2(3), isomorphism verified on all 576 products");
    } else {
        b.fail_case(format!(
            "Hurwitz unit group ≇ SL2(3): {}",
            iso.obstruction.unwrap_or_else(|| "no witness".into())
        ));
    }
    Ok(b.finish())
}

/// `AGL₁(F₄)` — the twelve affine maps `x ↦ bx + a` over the four-element
/// field — has no subgroup of index 2, abelianization of order 3, and is
/// none of the order-12 groups `D12`, `C12`, `C2 × S3`. (It is `A4`.)
pub(crate) fn check_agl1_remark(opts: &CheckOptions) -> Result<CheckReport> {
    let mut b = CheckBuilder::new("agl1-remark", 6);
    let limits = &opts.limits;
    let g = agl1_with(4, limits)?;

    if g.order() == 12 {
        b.pass_case("AGL1(4) has order 12");
    } else {
        b.fail_case(format!("AGL1(4) has order {}, expected 12", g.order()));
    }

    // Any order-6 group is generated by two elements, so closing every pair
    // is an exhaustive search for index-2 subgroups.
    let mut found_index2 = false;
    'outer: for x in 0..g.order() {
        for y in x..g.order() {
            if g.subgroup_closure(&[x, y]).len() == 6 {
                found_index2 = true;
                break 'outer;
            }
        }
    }
    if !found_index2 {
        b.pass_case("no subgroup of order 6 (all two-generated subgroups enumerated)");
    } else {
        b.fail_case("found a subgroup of index 2");
    }

    let derived = g.commutator_subgroup();
    let ab = g.quotient(&derived)?;
    if ab.order() == 3 && ab.is_cyclic() {
        b.pass_case(format!(
            "abelianization is C3 (derived subgroup has order {})",
            derived.order()
        ));
    } else {
        b.fail_case(format!(
            "abelianization has order {}, expected C3",
            ab.order()
        ));
    }

    let d12 = dihedral_with(12, limits)?;
    let c12 = cyclic_with(12, limits)?;
    let c2_s3 = direct_product_with(&cyclic_with(2, limits)?, &symmetric(3)?, limits)?;
    for other in [&d12, &c12, &c2_s3] {
        let iso = is_isomorphic_with(&g, other, limits)?;
        if !iso.isomorphic {
            b.pass_case(format!(
                "AGL1(4) ≇ {}: {}",
                other.label(),
                iso.obstruction.unwrap_or_else(|| "no isomorphism".into())
            ));
        } else {
            b.fail_case(format!("AGL1(4) is isomorphic to {}", other.label()));
        }
    }

    if let Some(name) = identify_with(&g, limits)? {
        b.note(format!("recognized: AGL1(4) ≅ {name}"));
    }
    Ok(b.finish())
}
