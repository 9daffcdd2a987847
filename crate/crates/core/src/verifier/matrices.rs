//! Checks about 2×2 matrix groups over small fields: centers and normal
//! subgroups of `SL₂`/`GL₂`, the unit-circle subgroup `UC(F_q)` of matrices
//! `[[x,y],[−y,x]]` with `x²+y²=1`, and the divisibility-by-8 pattern of
//! `|UC(F_q)|` that obstructs characteristic zero.

use crate::exactalg::{gcd, prime_power, units_mod, FqField};
use crate::groups::{
    gl2_with, identify_with, matrix_index, sl2_with, uc_with, FiniteGroup, GroupRep, Subgroup,
};
use crate::verifier::report::{CheckBuilder, CheckReport};
use crate::verifier::CheckOptions;
use crate::{Limits, Result};

fn field_of(g: &FiniteGroup) -> &FqField {
    match g.rep() {
        GroupRep::MatFq { field, .. } => field,
        _ => unreachable!("matrix groups are matrix-represented"),
    }
}

/// Names the proper nontrivial normal subgroups of `g`, in ascending order.
fn normal_subgroup_names(g: &FiniteGroup, limits: &Limits) -> Result<Vec<String>> {
    let mut names = Vec::new();
    for sub in g.normal_subgroups()? {
        if sub.is_trivial() || sub.is_whole_group() {
            continue;
        }
        let name = identify_with(&sub.as_group()?, limits)?
            .unwrap_or_else(|| format!("unrecognized group of order {}", sub.order()));
        names.push(name);
    }
    Ok(names)
}

/// Structure facts about `SL₂(F_q)` and `GL₂(F₃)` for small `q`:
/// center sizes, complete normal-subgroup inventories, the self-centralizing
/// cyclic subgroup of order 8 in `SL₂(F₇)`, and the unit counts of the
/// modular rings whose characteristics the realization table allows.
pub(crate) fn check_sl_facts(opts: &CheckOptions) -> Result<CheckReport> {
    let mut b = CheckBuilder::new("sl-facts", 16);
    let limits = &opts.limits;

    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let g = sl2_with(q, limits)?;
        let z = g.center();
        let expected = gcd(2, q - 1) as usize;
        if z.order() == expected && z.is_cyclic() {
            b.pass_case(format!("Z(SL2({q})) is cyclic of order {expected}"));
        } else {
            b.fail_case(format!(
                "Z(SL2({q})) has order {} (cyclic: {}), expected cyclic of order {expected}",
                z.order(),
                z.is_cyclic()
            ));
        }
    }

    let inventories: [(&str, FiniteGroup, &[&str]); 4] = [
        ("SL2(2)", sl2_with(2, limits)?, &["C3"]),
        ("SL2(3)", sl2_with(3, limits)?, &["C2", "Q8"]),
        ("GL2(3)", gl2_with(3, limits)?, &["C2", "Q8", "SL2(3)"]),
        ("SL2(5)", sl2_with(5, limits)?, &["C2"]),
    ];
    for (label, g, expected) in inventories {
        let names = normal_subgroup_names(&g, limits)?;
        if names == expected {
            b.pass_case(format!(
                "proper nontrivial normal subgroups of {label}: {{{}}}",
                names.join(", ")
            ));
        } else {
            b.fail_case(format!(
                "normal subgroups of {label}: got {{{}}}, expected {{{}}}",
                names.join(", "),
                expected.join(", ")
            ));
        }
    }

    // SL2(F7) contains an element of order 8 whose centralizer is exactly
    // the cyclic group it generates.
    let g7 = sl2_with(7, limits)?;
    match (0..g7.order()).find(|&x| g7.element_order(x) == 8) {
        Some(x) => {
            let cyc = Subgroup::generated(&g7, &[x]);
            let ok = cyc.order() == 8 && cyc.is_cyclic() && cyc.is_self_centralizing();
            if ok {
                b.pass_case(format!(
                    "SL2(7): ⟨g{x}⟩ ≅ C8 is self-centralizing (centralizer order 8)"
                ));
            } else {
                b.fail_case(format!(
                    "SL2(7): ⟨g{x}⟩ has order {} and centralizer order {}",
                    cyc.order(),
                    g7.centralizer_of(&[x]).order()
                ));
            }
        }
        None => b.fail_case("SL2(7) has no element of order 8".to_string()),
    }

    // |Z_c^×| for the characteristics the realization table achieves: all
    // four unit groups are tiny (trivial or C2), which is what keeps a
    // 24-element group like SL2(F3) out of the scalars.
    for (c, expected) in [(2u64, 1usize), (3, 2), (4, 2), (6, 2)] {
        let units = units_mod(c);
        if units.len() == expected {
            b.pass_case(format!("Z_{c}^× has order {expected}"));
        } else {
            b.fail_case(format!(
                "Z_{c}^× has order {}, expected {expected}",
                units.len()
            ));
        }
    }
    Ok(b.finish())
}

/// Structure of the unit-circle subgroup for odd `q ≤ 13`: cyclic of order
/// `q−1` or `q+1` according to `q mod 4`, and self-centralizing in
/// `SL₂(F_q)`. For `q ≡ 1 (mod 4)` the parametrization
/// `s ↦ [[(s+s⁻¹)/2, (s−s⁻¹)/2i], [−(s−s⁻¹)/2i, (s+s⁻¹)/2]]`
/// is verified to be a multiplicative bijection `F_q^× → UC(F_q)`.
pub(crate) fn check_uc_structure(opts: &CheckOptions) -> Result<CheckReport> {
    let qs = [3u64, 5, 7, 9, 11, 13];
    let formula_qs: Vec<u64> = qs.iter().copied().filter(|q| q % 4 == 1).collect();
    let mut b = CheckBuilder::new("uc-structure", qs.len() + formula_qs.len());

    for &q in &qs {
        let circle = uc_with(q, &opts.limits)?;
        let expected = if q % 4 == 1 { q - 1 } else { q + 1 } as usize;
        let ok = circle.order() == expected && circle.is_cyclic() && circle.is_self_centralizing();
        if ok {
            b.pass_case(format!(
                "UC(F{q}) is cyclic of order {expected} and self-centralizing in SL2({q})"
            ));
        } else {
            b.fail_case(format!(
                "UC(F{q}): order {} (expected {expected}), cyclic {}, self-centralizing {}",
                circle.order(),
                circle.is_cyclic(),
                circle.is_self_centralizing()
            ));
        }
    }

    for q in formula_qs {
        match uc_parametrization_case(q, &opts.limits)? {
            Ok(detail) => b.pass_case(detail),
            Err(problem) => b.fail_case(problem),
        }
    }
    Ok(b.finish())
}

/// For `q ≡ 1 (mod 4)` (so `−1` is a square), runs the explicit inverse
/// parametrization of the circle and reports `Ok(witness)` or
/// `Err(discrepancy)`.
fn uc_parametrization_case(q: u64, limits: &Limits) -> Result<std::result::Result<String, String>> {
    let circle = uc_with(q, limits)?;
    let parent = circle.parent().clone();
    let field = field_of(&parent);
    let neg1 = field.neg_idx(1);
    let Some(imag) = (0..q).find(|&a| field.mul_idx(a, a) == neg1) else {
        return Ok(Err(format!("no square root of −1 in F{q} although q ≡ 1 (mod 4)")));
    };
    let two = field.add_idx(1, 1);
    let halve = field.inv_idx(two).expect("odd characteristic");
    let halve_i = field
        .inv_idx(field.mul_idx(two, imag))
        .expect("2i ≠ 0 in odd characteristic");

    let image = |s: u64| -> Option<usize> {
        let si = field.inv_idx(s)?;
        let x = field.mul_idx(field.add_idx(s, si), halve);
        let y = field.mul_idx(field.sub_idx(s, si), halve_i);
        matrix_index(&parent, [x, y, field.neg_idx(y), x])
    };

    let mut images = Vec::with_capacity(q as usize - 1);
    for s in 1..q {
        match image(s) {
            Some(m) if circle.contains(m) => images.push(m),
            Some(m) => {
                return Ok(Err(format!(
                    "F(s) for s = {s} lands at element {m} outside UC(F{q})"
                )))
            }
            None => return Ok(Err(format!("F(s) undefined or not in SL2({q}) for s = {s}"))),
        }
    }
    let mut distinct = images.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != circle.order() {
        return Ok(Err(format!(
            "parametrization of UC(F{q}) is not bijective: {} distinct images for {} members",
            distinct.len(),
            circle.order()
        )));
    }
    for s in 1..q {
        for t in 1..q {
            let st = field.mul_idx(s, t);
            let lhs = image(st).expect("images checked above");
            let rhs = parent.mul(
                image(s).expect("images checked above"),
                image(t).expect("images checked above"),
            );
            if lhs != rhs {
                return Ok(Err(format!(
                    "parametrization not multiplicative at s = {s}, t = {t} over F{q}"
                )));
            }
        }
    }
    Ok(Ok(format!(
        "s ↦ ((s+s⁻¹)/2, (s−s⁻¹)/2i) is a multiplicative bijection F{q}^× → UC(F{q}) \
         ({} elements, i = field element {imag})",
        q - 1
    )))
}

/// The order of `UC(F_q)` is divisible by 8 exactly when `q ≡ ±1 (mod 8)`.
/// Sweeps the default field orders {3,5,7,9,11,13,17,23,31} (or all odd
/// prime powers up to `--bound`), checking the congruence arithmetically
/// and, for `q ≤ 13`, rebuilding the circle group to confirm its order.
pub(crate) fn check_char0_obstruction(opts: &CheckOptions) -> Result<CheckReport> {
    let qs: Vec<u64> = match opts.bound {
        Some(bound) => (3..=bound)
            .filter(|&q| q % 2 == 1 && prime_power(q).is_some())
            .collect(),
        None => vec![3, 5, 7, 9, 11, 13, 17, 23, 31],
    };
    let mut b = CheckBuilder::new("char0-obstruction", qs.len());
    let mut divisible = Vec::new();

    for &q in &qs {
        let uc_order = if q % 4 == 1 { q - 1 } else { q + 1 };
        let by_congruence = q % 8 == 1 || q % 8 == 7;
        let by_order = uc_order % 8 == 0;
        let mut confirmed = String::new();
        if q <= 13 {
            let circle = uc_with(q, &opts.limits)?;
            if circle.order() as u64 != uc_order {
                b.fail_case(format!(
                    "UC(F{q}) has order {}, arithmetic predicts {uc_order}",
                    circle.order()
                ));
                continue;
            }
            confirmed = ", group order confirmed by construction".to_string();
        }
        if by_order == by_congruence {
            if by_order {
                divisible.push(q);
            }
            b.pass_case(format!(
                "q = {q} ≡ {} (mod 8): |UC| = {uc_order}, divisible by 8: {by_order}{confirmed}",
                q % 8
            ));
        } else {
            b.fail_case(format!(
                "q = {q}: 8 | |UC| is {by_order} but q ≡ ±1 (mod 8) is {by_congruence}"
            ));
        }
    }
    b.note(format!(
        "8 divides |UC(F_q)| exactly for q ∈ {{{}}} in this range",
        divisible
            .iter()
            .map(|q| q.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    ));
    Ok(b.finish())
}
