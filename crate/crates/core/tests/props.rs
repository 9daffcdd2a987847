//! Randomized property suites. These generalize the deterministic spot
//! checks in `tests/acceptance.rs`: random ring expressions, random
//! generating sets, random relabelings. Failures shrink and persist via
//! proptest's usual machinery.

use finalg::exactalg::{CoeffVec, SubmoduleBasis};
use finalg::groups::{
    alternating4, cyclic, dihedral, direct_product, holomorph, is_isomorphic, quaternion8, sl2,
    FiniteGroup,
};
use finalg::rings::{build_ring, build_ring_with, RingExpr};
use finalg::verifier::{run_check, CheckOptions};
use finalg::{Error, Limits};
use proptest::prelude::*;

// ---------------------------------------------------------------------------
// Ring axioms on randomly assembled expressions
// ---------------------------------------------------------------------------

/// Random ring expressions of bounded depth. Some combinations blow past the
/// element cap by design — the test treats `SizeExceeded` as a legitimate
/// refusal, not a failure.
fn ring_expr() -> impl Strategy<Value = RingExpr> {
    let leaf = prop_oneof![
        (2u64..=9).prop_map(RingExpr::Zmod),
        prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9]).prop_map(RingExpr::Fq),
        Just(RingExpr::EndAb(vec![4, 2])),
        Just(RingExpr::EndAb(vec![2, 2])),
    ];
    leaf.prop_recursive(2, 6, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| RingExpr::matrix(2, e)),
            inner.clone().prop_map(|e| RingExpr::upper_triangular(2, e)),
            (inner.clone(), 2usize..=3).prop_map(|(e, k)| RingExpr::trunc_poly(e, k)),
            (inner.clone(), inner).prop_map(|(a, b)| RingExpr::product(a, b)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms_hold_on_random_expressions(
        expr in ring_expr(),
        raw in prop::collection::vec(any::<usize>(), 24),
    ) {
        // A tight element cap keeps the draws that matter (structural variety)
        // while pruning the handful of five-digit-size giants the recursion
        // can assemble; refusing those is itself correct behavior.
        let limits = Limits::with_max_elements(20_000);
        let ring = match build_ring_with(&expr, &limits) {
            Ok(r) => r,
            Err(Error::SizeExceeded { .. }) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(format!("building {expr}: {e}"))),
        };
        let n = ring.size();
        let zero = ring.zero();
        let one = ring.one();

        // The characteristic really is the additive order of 1.
        let c = ring.characteristic();
        let mut acc = zero;
        for _ in 0..c {
            acc = ring.add(acc, one);
        }
        prop_assert_eq!(acc, zero, "1 added to itself char({}) = {} times", ring.label(), c);

        for w in raw.chunks(3) {
            let (a, b, c) = (w[0] % n, w[1] % n, w[2] % n);
            prop_assert_eq!(ring.add(a, zero), a);
            prop_assert_eq!(ring.mul(a, one), a);
            prop_assert_eq!(ring.mul(one, a), a);
            prop_assert_eq!(ring.add(a, ring.neg(a)), zero);
            prop_assert_eq!(ring.add(a, b), ring.add(b, a));
            prop_assert_eq!(ring.add(ring.add(a, b), c), ring.add(a, ring.add(b, c)));
            prop_assert_eq!(ring.mul(ring.mul(a, b), c), ring.mul(a, ring.mul(b, c)));
            prop_assert_eq!(
                ring.mul(a, ring.add(b, c)),
                ring.add(ring.mul(a, b), ring.mul(a, c))
            );
            prop_assert_eq!(
                ring.mul(ring.add(a, b), c),
                ring.add(ring.mul(a, c), ring.mul(b, c))
            );
        }
    }
}

// ---------------------------------------------------------------------------
// U(A × B) ≅ U(A) × U(B)
// ---------------------------------------------------------------------------

/// Rings with small unit groups, cheap to pair up arbitrarily.
fn unit_friendly_expr() -> impl Strategy<Value = RingExpr> {
    prop::sample::select(vec![
        RingExpr::Zmod(4),
        RingExpr::Zmod(6),
        RingExpr::Zmod(8),
        RingExpr::Fq(3),
        RingExpr::Fq(5),
        RingExpr::Fq(9),
        RingExpr::matrix(2, RingExpr::Fq(2)),
        RingExpr::upper_triangular(2, RingExpr::Fq(3)),
        RingExpr::trunc_poly(RingExpr::Fq(2), 2),
        RingExpr::EndAb(vec![4, 2]),
    ])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn units_of_product_match_product_of_units(
        ea in unit_friendly_expr(),
        eb in unit_friendly_expr(),
    ) {
        let ua = build_ring(&ea).unwrap().units().unwrap().group;
        let ub = build_ring(&eb).unwrap().units().unwrap().group;
        let combined = build_ring(&RingExpr::product(ea.clone(), eb.clone()))
            .unwrap()
            .units()
            .unwrap()
            .group;
        let expected = direct_product(&ua, &ub).unwrap();
        let iso = is_isomorphic(&combined, &expected).unwrap();
        prop_assert!(
            iso.isomorphic,
            "U({} x {}) has order {} but is not ≅ U(A) × U(B): {:?}",
            ea, eb, combined.order(), iso.obstruction
        );
    }

    #[test]
    fn one_plus_radical_is_a_normal_subgroup(
        ea in unit_friendly_expr(),
        eb in unit_friendly_expr(),
    ) {
        // Products keep the radical interesting (it is the product of the
        // factor radicals) while staying cheap to enumerate.
        let ring = build_ring(&RingExpr::product(ea, eb)).unwrap();
        let radical = ring.jacobson_radical().unwrap();
        let units = ring.units().unwrap();
        let shifted: Vec<usize> = radical
            .iter()
            .map(|&j| {
                units
                    .unit_index(ring.add(ring.one(), j))
                    .expect("1 + j is a unit whenever j is in the radical")
            })
            .collect();
        let sub = finalg::groups::Subgroup::generated(&units.group, &shifted);
        prop_assert_eq!(
            sub.order(),
            radical.len(),
            "1 + J should be closed: |J| = {} in {}",
            radical.len(),
            ring.label()
        );
        prop_assert!(sub.is_normal(), "1 + J not normal in U({})", ring.label());
    }
}

// ---------------------------------------------------------------------------
// Submodule membership over Z₄ against brute-force enumeration
// ---------------------------------------------------------------------------

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn submodule_membership_agrees_with_enumeration(
        len in 1usize..=8,
        raw_gens in prop::collection::vec(prop::collection::vec(0u64..4, 8), 1..=3),
        raw_probes in prop::collection::vec(prop::collection::vec(0u64..4, 8), 24),
    ) {
        let gens: Vec<CoeffVec> = raw_gens
            .iter()
            .map(|g| CoeffVec::from_entries(4, &g[..len]).unwrap())
            .collect();
        let basis = SubmoduleBasis::from_vectors(4, len, &gens).unwrap();

        // Every element of the span is a Z₄-combination of the generators,
        // so with ≤ 3 generators the span is at most 4³ vectors.
        let mut span = std::collections::BTreeSet::new();
        for combo in 0..4u64.pow(gens.len() as u32) {
            let mut acc = CoeffVec::zeros(4, len).unwrap();
            let mut rest = combo;
            for g in &gens {
                acc.add_scaled_in_place(g, rest % 4);
                rest /= 4;
            }
            span.insert(acc.entries());
        }
        prop_assert_eq!(basis.size(), span.len() as u128);

        for member in &span {
            let v = CoeffVec::from_entries(4, member).unwrap();
            prop_assert!(basis.contains(&v).unwrap(), "span member rejected: {:?}", member);
        }
        for probe in &raw_probes {
            let entries = &probe[..len];
            let v = CoeffVec::from_entries(4, entries).unwrap();
            prop_assert_eq!(
                basis.contains(&v).unwrap(),
                span.contains(&entries.to_vec()),
                "membership disagrees on {:?}",
                entries
            );
        }
    }
}

// ---------------------------------------------------------------------------
// Isomorphism testing is invariant under relabeling
// ---------------------------------------------------------------------------

fn pool_group(idx: usize) -> FiniteGroup {
    match idx {
        0 => cyclic(12).unwrap(),
        1 => dihedral(12).unwrap(),
        2 => quaternion8(),
        3 => alternating4(),
        4 => sl2(3).unwrap(),
        5 => holomorph(6).unwrap(),
        _ => direct_product(&cyclic(2).unwrap(), &cyclic(4).unwrap()).unwrap(),
    }
}

const POOL_ORDERS: [usize; 7] = [12, 12, 8, 12, 24, 12, 8];

fn relabeling() -> impl Strategy<Value = (usize, Vec<usize>)> {
    (0..POOL_ORDERS.len()).prop_flat_map(|idx| {
        let perm = Just((0..POOL_ORDERS[idx]).collect::<Vec<usize>>()).prop_shuffle();
        (Just(idx), perm)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn isomorphism_testing_survives_relabeling((idx, perm) in relabeling()) {
        let g = pool_group(idx);
        let shuffled = g.permuted_copy(&perm).unwrap();
        prop_assert_eq!(g.order_spectrum(), shuffled.order_spectrum());
        let iso = is_isomorphic(&g, &shuffled).unwrap();
        prop_assert!(
            iso.isomorphic && iso.witness.is_some(),
            "{} not isomorphic to its own relabeling: {:?}",
            g.label(),
            iso.obstruction
        );
    }
}

// ---------------------------------------------------------------------------
// Verification reports are deterministic
// ---------------------------------------------------------------------------

#[test]
fn reports_are_reproducible_modulo_wall_time() {
    let opts = CheckOptions::default();
    for name in ["sl23-char2", "hurwitz", "agl1-remark"] {
        let first = run_check(name, &opts).unwrap();
        let second = run_check(name, &opts).unwrap();
        assert!(
            first.same_outcome(&second),
            "{name} produced different outcomes on identical inputs"
        );

        let json = serde_json::to_string(&first).unwrap();
        let parsed: finalg::verifier::CheckReport = serde_json::from_str(&json).unwrap();
        assert!(
            first.same_outcome(&parsed),
            "{name} report changed across a serialization round-trip"
        );
    }
}
