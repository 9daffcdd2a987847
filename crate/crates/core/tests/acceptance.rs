//! End-to-end acceptance battery. Each test exercises one headline guarantee
//! of the library and prints a single `criterion NN: PASS/FAIL — …` verdict
//! line (run with `cargo test --test acceptance -- --nocapture` to see all
//! ten). The assertions behind each line are exact: these structures are
//! small enough that every claim is checked by exhaustive computation, not
//! by sampling.

use finalg::exactalg::{CoeffVec, SubmoduleBasis};
use finalg::groups::{cyclic, direct_product, is_isomorphic, quaternion8, sl2, Subgroup};
use finalg::rings::{build_ring, RingExpr};
use finalg::verifier::{run_check, CheckOptions, CheckReport, CheckStatus};

fn run(name: &str) -> CheckReport {
    run_check(name, &CheckOptions::default())
        .unwrap_or_else(|e| panic!("check {name} did not run: {e}"))
}

/// Prints the criterion's verdict line, then enforces it.
fn verdict(criterion: u32, ok: bool, summary: &str) {
    let tag = if ok { "PASS" } else { "FAIL" };
    println!("criterion {criterion:02}: {tag} — {summary}");
    assert!(ok, "criterion {criterion:02} failed — {summary}");
}

/// A report that passed with every declared case examined.
fn clean_pass(r: &CheckReport) -> bool {
    r.status == CheckStatus::Pass && r.cases_examined == r.cases_total
}

fn has_witness(r: &CheckReport, needle: &str) -> bool {
    r.witnesses.iter().any(|w| w.contains(needle))
}

fn count_witnesses(r: &CheckReport, needle: &str) -> usize {
    r.witnesses.iter().filter(|w| w.contains(needle)).count()
}

// ---------------------------------------------------------------------------
// 1. The realization table: one ring per row, unit group ≅ Hol(Z_n)
// ---------------------------------------------------------------------------

#[test]
fn criterion_01_realization_table() {
    let r = run("units-table");

    // 14 constructed rows plus the definitional one-element ring of
    // characteristic 1; rows per characteristic are fixed by the table.
    let row_counts_ok = r.cases_total == 15
        && count_witnesses(&r, "char 1:") == 1
        && count_witnesses(&r, "char 2:") == 6
        && count_witnesses(&r, "char 3:") == 2
        && count_witnesses(&r, "char 4:") == 4
        && count_witnesses(&r, "char 6:") == 2;

    // Every holomorph order in the table shows up as an isomorphism target.
    let targets_ok = [1u64, 2, 3, 4, 6, 12]
        .iter()
        .all(|n| has_witness(&r, &format!("Hol({n})")));

    let ok = clean_pass(&r) && row_counts_ok && targets_ok && r.wall_time_ms < 30_000;
    verdict(
        1,
        ok,
        &format!(
            "{}/{} unit-group rows verified (largest ring 512 elements) in {} ms",
            r.cases_examined, r.cases_total, r.wall_time_ms
        ),
    );
}

// ---------------------------------------------------------------------------
// 2. Characteristic-2 ideal sweep over Z₂[SL₂(F₃)]
// ---------------------------------------------------------------------------

#[test]
fn criterion_02_char2_ideal_sweep() {
    let r = run("sl23-char2");

    let preamble_ok =
        has_witness(&r, "order of A is Some(8)") && has_witness(&r, "order of B is Some(8)");
    let cases_ok = r.cases_total == 64 && count_witnesses(&r, "non-injective") == 64;

    let ok = clean_pass(&r) && preamble_ok && cases_ok && r.wall_time_ms < 10_000;
    verdict(
        2,
        ok,
        &format!(
            "A⁸ = B⁸ = 1 and all 64 ideals (A+x, B+y) collapse the embedding, {} ms",
            r.wall_time_ms
        ),
    );
}

// ---------------------------------------------------------------------------
// 3. Characteristic-4 ideal sweep over Z₄[SL₂(F₃)]
// ---------------------------------------------------------------------------

#[test]
fn criterion_03_char4_ideal_sweep() {
    let r = run("sl23-char4");

    let lemmas_ok = has_witness(&r, "(i+j+k)² ≡ 1 (mod (1 + i²))")
        && has_witness(&r, "x³ ≡ 1 + (c² − c)(i+j+k−1)");
    // 18 gating cases, each non-injective with every 2r − 2 inside the ideal;
    // the printed-variant lines are informational notes on top of those.
    let cases_ok = r.cases_total == 18
        && count_witnesses(&r, "2r−2 ⊆ I: true") == 36
        && count_witnesses(&r, "printed-variant") == 18;

    let ok = clean_pass(&r) && lemmas_ok && cases_ok && r.wall_time_ms < 10_000;
    verdict(
        3,
        ok,
        &format!(
            "both algebra lemmas hold mod their ideals; 18/18 cases non-injective with 2r−2 ⊆ I, {} ms",
            r.wall_time_ms
        ),
    );
}

// ---------------------------------------------------------------------------
// 4. The sweeps do not depend on which order-3 element is chosen
// ---------------------------------------------------------------------------

#[test]
fn criterion_04_choice_independence() {
    let r = run("sl23-choice-independence");

    let coverage_ok = r.cases_total == 82
        && count_witnesses(&r, "char-2 case") == 64
        && count_witnesses(&r, "char-4 case") == 18;
    // The second lemma is genuinely sensitive to the choice; the note records
    // that while the per-case verdicts above are not.
    let note_ok = has_witness(&r, "choice-sensitive");

    let ok = clean_pass(&r) && coverage_ok && note_ok;
    verdict(
        4,
        ok,
        "all 82 per-case verdicts agree between the two order-3 conjugacy classes",
    );
}

// ---------------------------------------------------------------------------
// 5. Centers and normal-subgroup inventories of small linear groups
// ---------------------------------------------------------------------------

#[test]
fn criterion_05_linear_group_inventories() {
    let r = run("sl-facts");

    let centers_ok = [2u64, 3, 4, 5, 7, 8, 9].iter().all(|&q| {
        let z = if q % 2 == 0 { 1 } else { 2 };
        has_witness(&r, &format!("Z(SL2({q})) is cyclic of order {z}"))
    });
    let inventories_ok = has_witness(&r, "of SL2(2): {C3}")
        && has_witness(&r, "of SL2(3): {C2, Q8}")
        && has_witness(&r, "of GL2(3): {C2, Q8, SL2(3)}")
        && has_witness(&r, "of SL2(5): {C2}");
    let c8_ok = has_witness(&r, "C8 is self-centralizing");

    let ok = clean_pass(&r)
        && r.cases_total == 16
        && centers_ok
        && inventories_ok
        && c8_ok
        && r.wall_time_ms < 20_000;
    verdict(
        5,
        ok,
        &format!(
            "centers, normal-subgroup inventories and the SL2(7) C8 check all exact, {} ms",
            r.wall_time_ms
        ),
    );
}

// ---------------------------------------------------------------------------
// 6. Circle subgroups UC(F_q) and the mod-8 divisibility pattern
// ---------------------------------------------------------------------------

#[test]
fn criterion_06_circle_groups_and_char0() {
    let uc = run("uc-structure");
    let structure_ok = clean_pass(&uc)
        && uc.cases_total == 9
        && [3u64, 7, 11].iter().all(|&q| {
            has_witness(&uc, &format!("UC(F{q}) is cyclic of order {}", q + 1))
        })
        && [5u64, 9, 13].iter().all(|&q| {
            has_witness(&uc, &format!("UC(F{q}) is cyclic of order {}", q - 1))
        })
        && count_witnesses(&uc, "multiplicative bijection") == 3;

    let obs = run("char0-obstruction");
    let not_divisible_ok = [3u64, 5, 11, 13].iter().all(|&q| {
        uc_divisibility_line(&obs, q).is_some_and(|w| w.contains("divisible by 8: false"))
    });
    // 7 and 9 are the two constructed confirmations; 17, 23, 31 are checked
    // arithmetically only (their groups are never built).
    let divisible_confirmed_ok = [7u64, 9].iter().all(|&q| {
        uc_divisibility_line(&obs, q)
            .is_some_and(|w| w.contains("divisible by 8: true, group order confirmed"))
    });
    let divisible_arith_ok = [17u64, 23, 31].iter().all(|&q| {
        uc_divisibility_line(&obs, q)
            .is_some_and(|w| w.contains("divisible by 8: true") && !w.contains("confirmed"))
    });
    let note_ok = has_witness(&obs, "q ∈ {7, 9, 17, 23, 31}");
    let obstruction_ok = clean_pass(&obs)
        && obs.cases_total == 9
        && not_divisible_ok
        && divisible_confirmed_ok
        && divisible_arith_ok
        && note_ok;

    verdict(
        6,
        structure_ok && obstruction_ok,
        "UC(F_q) cyclic of order q∓1 and self-centralizing for q ≤ 13; 8 | |UC| exactly for q ∈ {7, 9, 17, 23, 31}",
    );
}

fn uc_divisibility_line(r: &CheckReport, q: u64) -> Option<&String> {
    r.witnesses.iter().find(|w| w.starts_with(&format!("q = {q} ")))
}

// ---------------------------------------------------------------------------
// 7. Holomorph structure for n ≤ 16, coprime splits, 2-subgroup containment
// ---------------------------------------------------------------------------

#[test]
fn criterion_07_holomorph_facts() {
    let r = run("hol-facts");

    let sample_ok = has_witness(&r, "Hol(16): center order 2")
        && has_witness(&r, "Hol(15): center order 1")
        && has_witness(&r, "Hol(12) ≅ Hol(3) × Hol(4) by explicit isomorphism")
        && has_witness(&r, "Hol(21) ≅ Hol(3) × Hol(7) by explicit isomorphism")
        && has_witness(&r, "lie in the Hol(2)-factor")
        && has_witness(&r, "lie in the Hol(4)-factor");

    let ok = clean_pass(&r) && r.cases_total == 26 && sample_ok && r.wall_time_ms < 60_000;
    verdict(
        7,
        ok,
        &format!(
            "centers, translation subgroups, normal intersections, 4 splits and 6 containments, {} ms",
            r.wall_time_ms
        ),
    );
}

// ---------------------------------------------------------------------------
// 8. n | 12 ⇔ n·φ(n) | 48 ⇔ Hol(Z_n) is a dihedral product
// ---------------------------------------------------------------------------

#[test]
fn criterion_08_dihedral_product_equivalence() {
    let r = run("theorem-neat");

    let factorizations_ok = has_witness(&r, "Hol(1) (order 1) = the empty dihedral product")
        && has_witness(&r, "Hol(2) (order 2) = D2")
        && has_witness(&r, "Hol(3) (order 6) = D6")
        && has_witness(&r, "Hol(4) (order 8) = D8")
        && has_witness(&r, "Hol(6) (order 12) = D12")
        && has_witness(&r, "Hol(12) (order 48) = D8 x D6");
    let non_divisor_ok = has_witness(
        &r,
        "Hol(5) (order 20) is not a direct product of dihedral groups",
    ) && has_witness(&r, "Hol(8) (order 32) is not a dihedral product");

    // 100 arithmetic cases plus 24 structural ones, no exceptions either way.
    let ok = clean_pass(&r)
        && r.cases_total == 124
        && factorizations_ok
        && non_divisor_ok
        && r.wall_time_ms < 60_000;
    verdict(
        8,
        ok,
        &format!(
            "arithmetic form to n = 100 and structural form to n = 24 agree everywhere, {} ms",
            r.wall_time_ms
        ),
    );
}

// ---------------------------------------------------------------------------
// 9. Hurwitz quaternion units
// ---------------------------------------------------------------------------

#[test]
fn criterion_09_hurwitz_units() {
    let r = run("hurwitz");

    let ok = clean_pass(&r)
        && r.cases_total == 3
        && has_witness(&r, "exactly 24 units")
        && has_witness(&r, "unique element of order 2")
        && has_witness(&r, "≅ SL2(3), isomorphism verified on all 576 products")
        && r.wall_time_ms < 1_000;
    verdict(
        9,
        ok,
        &format!(
            "24 units, one involution, ≅ SL2(3) with verified witness in {} ms",
            r.wall_time_ms
        ),
    );
}

// ---------------------------------------------------------------------------
// 10. Property spot-checks (deterministic instances of the randomized
//     suites in tests/props.rs)
// ---------------------------------------------------------------------------

#[test]
fn criterion_10_property_spot_checks() {
    let axioms = ring_axioms_hold_exhaustively();
    let product_units = units_of_product_is_product_of_units();
    let radical_units = one_plus_radical_is_normal();
    let submodule = submodule_membership_matches_enumeration();
    let relabeling = isomorphism_testing_ignores_relabeling();

    let ok = axioms && product_units && radical_units && submodule && relabeling;
    verdict(
        10,
        ok,
        &format!(
            "ring axioms {axioms}, units-of-product {product_units}, 1+J normality {radical_units}, \
             submodule oracle {submodule}, relabeling invariance {relabeling}"
        ),
    );
}

/// Every ring axiom, checked on every triple of four structurally different
/// small rings (the library also audits on construction; this re-derives the
/// axioms from the public operation tables alone).
fn ring_axioms_hold_exhaustively() -> bool {
    let exprs = [
        RingExpr::Zmod(6),
        RingExpr::Fq(8),
        RingExpr::product(RingExpr::Zmod(2), RingExpr::Zmod(4)),
        RingExpr::upper_triangular(2, RingExpr::Fq(2)),
    ];
    exprs.iter().all(|expr| {
        let r = build_ring(expr).unwrap();
        let n = r.size();
        let zero = r.zero();
        let one = r.one();
        for a in 0..n {
            if r.add(a, zero) != a || r.mul(a, one) != a || r.mul(one, a) != a {
                return false;
            }
            if r.add(a, r.neg(a)) != zero {
                return false;
            }
            for b in 0..n {
                if r.add(a, b) != r.add(b, a) {
                    return false;
                }
                for c in 0..n {
                    let assoc = r.add(r.add(a, b), c) == r.add(a, r.add(b, c))
                        && r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c));
                    let distrib = r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c))
                        && r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c));
                    if !assoc || !distrib {
                        return false;
                    }
                }
            }
        }
        true
    })
}

/// `U(A × B) ≅ U(A) × U(B)`, with the isomorphism exhibited and verified.
fn units_of_product_is_product_of_units() -> bool {
    let pairs = [
        (RingExpr::Zmod(4), RingExpr::matrix(2, RingExpr::Fq(2))),
        (RingExpr::Fq(3), RingExpr::Zmod(6)),
    ];
    pairs.iter().all(|(ea, eb)| {
        let ua = build_ring(ea).unwrap().units().unwrap().group;
        let ub = build_ring(eb).unwrap().units().unwrap().group;
        let u_prod = build_ring(&RingExpr::product(ea.clone(), eb.clone()))
            .unwrap()
            .units()
            .unwrap()
            .group;
        let prod_u = direct_product(&ua, &ub).unwrap();
        is_isomorphic(&u_prod, &prod_u).unwrap().isomorphic
    })
}

/// `1 + J(R)` is a normal subgroup of `R^×` of the same size as `J(R)`.
fn one_plus_radical_is_normal() -> bool {
    let exprs = [
        RingExpr::upper_triangular(3, RingExpr::Fq(2)),
        RingExpr::product(RingExpr::Zmod(4), RingExpr::matrix(2, RingExpr::Fq(2))),
    ];
    exprs.iter().all(|expr| {
        let r = build_ring(expr).unwrap();
        let radical = r.jacobson_radical().unwrap();
        let units = r.units().unwrap();
        let shifted: Vec<usize> = radical
            .iter()
            .map(|&j| {
                units
                    .unit_index(r.add(r.one(), j))
                    .expect("1 + j must be a unit for j in the radical")
            })
            .collect();
        let sub = Subgroup::generated(&units.group, &shifted);
        sub.order() == radical.len() && sub.is_normal()
    })
}

/// The canonical-form membership test over Z₄ agrees with brute-force
/// enumeration of all linear combinations, across every vector of the
/// ambient module (lengths 3 and 8).
fn submodule_membership_matches_enumeration() -> bool {
    let spans: [(usize, Vec<Vec<u64>>); 2] = [
        (3, vec![vec![2, 0, 1], vec![0, 2, 2]]),
        (
            8,
            vec![
                vec![1, 2, 3, 0, 1, 2, 3, 0],
                vec![0, 0, 2, 2, 0, 0, 2, 2],
                vec![2, 0, 0, 0, 2, 0, 0, 0],
            ],
        ),
    ];
    spans.iter().all(|(len, gens)| {
        let vectors: Vec<CoeffVec> = gens
            .iter()
            .map(|g| CoeffVec::from_entries(4, g).unwrap())
            .collect();
        let basis = SubmoduleBasis::from_vectors(4, *len, &vectors).unwrap();

        // Brute force: all Z₄-combinations of the generators.
        let mut span = std::collections::BTreeSet::new();
        let combos = 4u64.pow(gens.len() as u32);
        for combo in 0..combos {
            let mut acc = CoeffVec::zeros(4, *len).unwrap();
            let mut rest = combo;
            for v in &vectors {
                acc.add_scaled_in_place(v, rest % 4);
                rest /= 4;
            }
            span.insert(acc.entries());
        }
        if basis.size() != span.len() as u128 {
            return false;
        }

        // Every vector of the ambient module, both ways.
        let total = 4u64.pow(*len as u32);
        for code in 0..total {
            let mut entries = Vec::with_capacity(*len);
            let mut rest = code;
            for _ in 0..*len {
                entries.push(rest % 4);
                rest /= 4;
            }
            let v = CoeffVec::from_entries(4, &entries).unwrap();
            if basis.contains(&v).unwrap() != span.contains(&entries) {
                return false;
            }
        }
        true
    })
}

/// Isomorphism testing sees through an arbitrary relabeling of elements and
/// still distinguishes non-isomorphic groups of equal order.
fn isomorphism_testing_ignores_relabeling() -> bool {
    let g = sl2(3).unwrap();
    let reversed: Vec<usize> = (0..g.order()).rev().collect();
    let h = g.permuted_copy(&reversed).unwrap();
    let same = is_isomorphic(&g, &h).unwrap();

    let q8 = quaternion8();
    let c8 = cyclic(8).unwrap();
    let different = is_isomorphic(&q8, &c8).unwrap();

    same.isomorphic && same.witness.is_some() && !different.isomorphic
}
