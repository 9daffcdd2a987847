//! Checks about holomorphs `Hol(Z_n) = Z_n ⋊ Z_n^×`: the structural survey
//! over small `n`, and the classification of the `n` for which `Hol(Z_n)`
//! is a direct product of dihedral groups.

use crate::exactalg::euler_phi;
use crate::groups::{
    direct_product_with, holomorph_pair, holomorph_with, is_dihedral_product_with,
    is_isomorphic_with, FiniteGroup, Subgroup,
};
use crate::verifier::report::{CheckBuilder, CheckReport};
use crate::verifier::CheckOptions;
use crate::Result;

/// The translation subgroup `{(a, 1) : a ∈ Z_n}` — the canonical copy of
/// `Z_n` inside its holomorph.
fn translation_subgroup(g: &FiniteGroup, n: u64) -> Subgroup {
    let phi = euler_phi(n) as usize;
    let pos1 = (0..phi)
        .find(|&x| holomorph_pair(g, x).map(|(_, b)| b) == Some(1 % n))
        .expect("the unit 1 mod n is always present");
    let members: Vec<usize> = (0..n as usize).map(|a| a * phi + pos1).collect();
    Subgroup::generated(g, &members)
}

/// Per-`n` survey of `Hol(Z_n)` for `n` up to 16 (or `--bound`):
/// the center has order 1 for odd `n` and 2 for even `n`; the translation
/// copy of `Z_n` is normal and self-centralizing; and every nontrivial
/// normal subgroup meets it. Followed by fixed cases: coprime splits
/// `Hol(Z_ab) ≅ Hol(Z_a) × Hol(Z_b)`, and the containment of all normal
/// 2-subgroups in the `Hol(Z_2)`- resp. `Hol(Z_4)`-factor for
/// `n ∈ {6,10,14}` resp. `{12,20,28}`.
pub(crate) fn check_hol_facts(opts: &CheckOptions) -> Result<CheckReport> {
    let hi = opts.bound.unwrap_or(16).max(1);
    let splits: [(u64, u64); 4] = [(3, 4), (3, 5), (4, 5), (3, 7)];
    let two_part: [(u64, u64); 6] = [(6, 2), (10, 2), (14, 2), (12, 4), (20, 4), (28, 4)];
    let mut b = CheckBuilder::new("hol-facts", hi as usize + splits.len() + two_part.len());
    let limits = &opts.limits;

    for n in 1..=hi {
        let g = holomorph_with(n, limits)?;
        let z = g.center().order();
        let expected_z = if n % 2 == 0 { 2 } else { 1 };
        if z != expected_z {
            b.fail_case(format!("|Z(Hol({n}))| = {z}, expected {expected_z}"));
            continue;
        }
        let tr = translation_subgroup(&g, n);
        if tr.order() != n as usize || !tr.is_normal() || !tr.is_self_centralizing() {
            b.fail_case(format!(
                "translation Z_{n} in Hol({n}): order {}, normal {}, self-centralizing {}",
                tr.order(),
                tr.is_normal(),
                tr.is_self_centralizing()
            ));
            continue;
        }
        let normals = g.normal_subgroups()?;
        let nontrivial = normals.iter().filter(|s| !s.is_trivial());
        let misses: Vec<usize> = nontrivial
            .clone()
            .filter(|s| !s.meets_nontrivially(&tr))
            .map(|s| s.order())
            .collect();
        if misses.is_empty() {
            b.pass_case(format!(
                "Hol({n}): center order {z}, translation Z_{n} self-centralizing, \
                 all {} nontrivial normal subgroups meet Z_{n}",
                nontrivial.count()
            ));
        } else {
            b.fail_case(format!(
                "Hol({n}): normal subgroups of orders {misses:?} intersect Z_{n} trivially"
            ));
        }
    }

    for (a, m) in splits {
        let whole = holomorph_with(a * m, limits)?;
        let left = holomorph_with(a, limits)?;
        let right = holomorph_with(m, limits)?;
        let product = direct_product_with(&left, &right, limits)?;
        let iso = is_isomorphic_with(&whole, &product, limits)?;
        if iso.isomorphic {
            b.pass_case(format!(
                "Hol({}) ≅ Hol({a}) × Hol({m}) by explicit isomorphism (order {})",
                a * m,
                whole.order()
            ));
        } else {
            b.fail_case(format!(
                "Hol({}) ≇ Hol({a}) × Hol({m}): {}",
                a * m,
                iso.obstruction.unwrap_or_else(|| "no witness".into())
            ));
        }
    }

    for (n, d) in two_part {
        let g = holomorph_with(n, limits)?;
        let factor = crate::groups::hol_factor_subgroup(&g, d)?;
        let normals = g.normal_subgroups()?;
        let two_subgroups: Vec<&Subgroup> = normals
            .iter()
            .filter(|s| s.order() > 1 && s.order().is_power_of_two())
            .collect();
        let escapees: Vec<usize> = two_subgroups
            .iter()
            .filter(|s| !s.is_contained_in(&factor))
            .map(|s| s.order())
            .collect();
        if escapees.is_empty() {
            b.pass_case(format!(
                "Hol({n}): all {} normal 2-subgroups lie in the Hol({d})-factor (order {})",
                two_subgroups.len(),
                factor.order()
            ));
        } else {
            b.fail_case(format!(
                "Hol({n}): normal 2-subgroups of orders {escapees:?} escape the Hol({d})-factor"
            ));
        }
    }
    Ok(b.finish())
}

/// `Hol(Z_n)` is a direct product of dihedral groups exactly when `n`
/// divides 12. The arithmetic form — `n | 12 ⇔ n·φ(n) | 48` — is swept to
/// 100 (or `--bound`); the structural form is decided for every `n ≤ 24`
/// by exhaustive dihedral-product search, with the factor lists reported
/// for the six realizable `n`.
pub(crate) fn check_theorem_neat(opts: &CheckOptions) -> Result<CheckReport> {
    let hi = opts.bound.unwrap_or(100).max(1);
    const STRUCTURAL_HI: u64 = 24;
    let mut b = CheckBuilder::new("theorem-neat", hi as usize + STRUCTURAL_HI as usize);
    let limits = &opts.limits;

    for n in 1..=hi {
        let divides_12 = 12 % n == 0;
        let weight = n * euler_phi(n);
        let divides_48 = 48 % weight == 0;
        if divides_12 == divides_48 {
            b.pass_case(format!(
                "n = {n}: n | 12 is {divides_12}, n·φ(n) = {weight} divides 48 is {divides_48}"
            ));
        } else {
            b.fail_case(format!(
                "n = {n}: n | 12 is {divides_12} but n·φ(n) = {weight} | 48 is {divides_48}"
            ));
        }
    }

    for n in 1..=STRUCTURAL_HI {
        let g = holomorph_with(n, limits)?;
        let parts = is_dihedral_product_with(&g, limits)?;
        let divides_12 = 12 % n == 0;
        match (parts, divides_12) {
            (Some(parts), true) => {
                let list: Vec<String> = parts.iter().map(|k| format!("D{k}")).collect();
                b.pass_case(format!(
                    "Hol({n}) (order {}) = {}",
                    g.order(),
                    if list.is_empty() {
                        "the empty dihedral product (trivial group)".to_string()
                    } else {
                        list.join(" x ")
                    }
                ));
            }
            (None, false) => {
                b.pass_case(format!(
                    "Hol({n}) (order {}) is not a direct product of dihedral groups",
                    g.order()
                ));
            }
            (Some(parts), false) => {
                b.fail_case(format!(
                    "Hol({n}) = D-product {parts:?} although {n} does not divide 12"
                ));
            }
            (None, true) => {
                b.fail_case(format!(
                    "Hol({n}) is not a dihedral product although {n} divides 12"
                ));
            }
        }
    }

    b.note("boundary: 8·φ(8) = 32 ∤ 48 and Hol(8) (order 32) is not a dihedral product");
    b.note("boundary: 24·φ(24) = 192 ∤ 48 and Hol(24) (order 192) is not a dihedral product");
    Ok(b.finish())
}
