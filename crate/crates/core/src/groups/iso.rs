//! Group isomorphism testing.
//!
//! The tester first compares cheap invariants (order, element-order spectrum,
//! center size, abelianization, conjugacy-class sizes). When all invariants
//! agree it falls back to a backtracking search for an explicit isomorphism,
//! extending a partial map on a generating set and closing under
//! multiplication. Any map it returns has been verified on all `n²` products,
//! so a `Some(witness)` answer is unconditionally correct; the invariant
//! screens only make the `None` answers fast.

use std::collections::HashMap;

use super::FiniteGroup;
use crate::{Error, Limits, Result};

/// Outcome of an isomorphism test. When `isomorphic` is true, `witness`
/// holds a bijection `w` with `w[x·y] = w[x]·w[y]` (verified exhaustively);
/// otherwise `obstruction` names the invariant that separated the groups.
#[derive(Debug, Clone)]
pub struct IsoResult {
    pub isomorphic: bool,
    pub witness: Option<Vec<usize>>,
    pub obstruction: Option<String>,
}

impl IsoResult {
    fn no(reason: String) -> Self {
        IsoResult {
            isomorphic: false,
            witness: None,
            obstruction: Some(reason),
        }
    }

    fn yes(witness: Vec<usize>) -> Self {
        IsoResult {
            isomorphic: true,
            witness: Some(witness),
            obstruction: None,
        }
    }
}

fn spectrum_string(g: &FiniteGroup) -> String {
    let spec = g.order_spectrum();
    let parts: Vec<String> = spec.iter().map(|(o, c)| format!("{o}:{c}")).collect();
    parts.join(",")
}

fn class_size_multiset(g: &FiniteGroup) -> Result<Vec<usize>> {
    let mut sizes: Vec<usize> = g.conjugacy_classes()?.iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    Ok(sizes)
}

/// Decide whether `g` and `h` are isomorphic.
///
/// Exact for every input; cost is exponential only in the number of
/// generators of `g` (small for all the groups this crate builds). Both
/// groups must fit the multiplication-table bound in `limits`.
pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Result<IsoResult> {
    is_isomorphic_with(g, h, &Limits::default())
}

pub fn is_isomorphic_with(g: &FiniteGroup, h: &FiniteGroup, limits: &Limits) -> Result<IsoResult> {
    if g.order() != h.order() {
        return Ok(IsoResult::no(format!(
            "orders differ: {} vs {}",
            g.order(),
            h.order()
        )));
    }
    let n = g.order();
    // The search walks full multiplication rows, so insist both groups are
    // small enough to table.
    limits.check_size("isomorphism search", (n as u128) * (n as u128))?;
    if n == 1 {
        return Ok(IsoResult::yes(vec![0]));
    }

    let spec_g = spectrum_string(g);
    let spec_h = spectrum_string(h);
    if spec_g != spec_h {
        return Ok(IsoResult::no(format!(
            "element-order spectra differ: {{{spec_g}}} vs {{{spec_h}}}"
        )));
    }
    if g.is_abelian() != h.is_abelian() {
        return Ok(IsoResult::no("one group is abelian, the other is not".into()));
    }
    // Abelian groups with equal order spectra are isomorphic; build the
    // witness with the same backtracking machinery (it terminates fast).
    if !g.is_abelian() {
        let zg = g.center().order();
        let zh = h.center().order();
        if zg != zh {
            return Ok(IsoResult::no(format!("center sizes differ: {zg} vs {zh}")));
        }
        let cg = class_size_multiset(g)?;
        let ch = class_size_multiset(h)?;
        if cg != ch {
            return Ok(IsoResult::no(format!(
                "conjugacy class sizes differ: {cg:?} vs {ch:?}"
            )));
        }
        let dg = g.commutator_subgroup().order();
        let dh = h.commutator_subgroup().order();
        if dg != dh {
            return Ok(IsoResult::no(format!(
                "derived subgroup sizes differ: {dg} vs {dh}"
            )));
        }
    }

    match search_witness(g, h)? {
        Some(w) => Ok(IsoResult::yes(w)),
        None => Ok(IsoResult::no(
            "all invariants agree but no multiplicative bijection exists".into(),
        )),
    }
}

/// Profile used to bucket elements: order, conjugacy class size, centralizer
/// size, and order of the square. Isomorphisms preserve all four, so a
/// generator of `g` may only map to targets with an identical profile.
fn profiles(g: &FiniteGroup) -> Result<Vec<(u64, usize, usize, u64)>> {
    let n = g.order();
    let classes = g.conjugacy_classes()?;
    let mut class_size = vec![0usize; n];
    for cl in &classes {
        for &x in cl {
            class_size[x] = cl.len();
        }
    }
    Ok((0..n)
        .map(|x| {
            let ord = g.element_order(x);
            let sq = g.mul(x, x);
            (ord, class_size[x], n / class_size[x], g.element_order(sq))
        })
        .collect())
}

fn search_witness(g: &FiniteGroup, h: &FiniteGroup) -> Result<Option<Vec<usize>>> {
    let n = g.order();
    let gens = g.generators().to_vec();
    let pg = profiles(g)?;
    let ph = profiles(h)?;

    // Candidate targets for each generator, grouped by profile.
    let mut by_profile: HashMap<(u64, usize, usize, u64), Vec<usize>> = HashMap::new();
    for (y, prof) in ph.iter().enumerate() {
        by_profile.entry(*prof).or_default().push(y);
    }
    let candidates: Vec<&[usize]> = gens
        .iter()
        .map(|&x| {
            by_profile
                .get(&pg[x])
                .map(|v| v.as_slice())
                .unwrap_or(&[])
        })
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return Ok(None);
    }

    let mut map: Vec<Option<usize>> = vec![None; n];
    let mut used: Vec<bool> = vec![false; n];
    map[g.identity()] = Some(h.identity());
    used[h.identity()] = true;

    fn assign(
        g: &FiniteGroup,
        h: &FiniteGroup,
        gens: &[usize],
        candidates: &[&[usize]],
        depth: usize,
        map: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == gens.len() {
            return verify_total(g, h, map);
        }
        let x = gens[depth];
        if map[x].is_some() {
            // Generator already forced by closure of earlier choices.
            return assign(g, h, gens, candidates, depth + 1, map, used);
        }
        for &y in candidates[depth] {
            if used[y] {
                continue;
            }
            let saved_map = map.clone();
            let saved_used = used.clone();
            map[x] = Some(y);
            used[y] = true;
            if close_partial(g, h, map, used) && assign(g, h, gens, candidates, depth + 1, map, used)
            {
                return true;
            }
            *map = saved_map;
            *used = saved_used;
        }
        false
    }

    if assign(g, h, &gens, &candidates, 0, &mut map, &mut used) {
        Ok(Some(map.into_iter().map(|m| m.unwrap()).collect()))
    } else {
        Ok(None)
    }
}

/// Propagate a partial map through products until stable. Fails (returns
/// false) when two defined images conflict or injectivity breaks.
fn close_partial(
    g: &FiniteGroup,
    h: &FiniteGroup,
    map: &mut [Option<usize>],
    used: &mut [bool],
) -> bool {
    let n = g.order();
    let mut frontier: Vec<usize> = (0..n).filter(|&x| map[x].is_some()).collect();
    while let Some(x) = frontier.pop() {
        let fx = map[x].unwrap();
        let defined: Vec<usize> = (0..n).filter(|&z| map[z].is_some()).collect();
        for z in defined {
            let fz = map[z].unwrap();
            for (prod, fprod) in [(g.mul(x, z), h.mul(fx, fz)), (g.mul(z, x), h.mul(fz, fx))] {
                match map[prod] {
                    Some(existing) => {
                        if existing != fprod {
                            return false;
                        }
                    }
                    None => {
                        if used[fprod] {
                            return false; // injectivity violation
                        }
                        map[prod] = Some(fprod);
                        used[fprod] = true;
                        frontier.push(prod);
                    }
                }
            }
        }
    }
    true
}

/// Final check: the map must be a total bijection respecting every product.
fn verify_total(g: &FiniteGroup, h: &FiniteGroup, map: &[Option<usize>]) -> bool {
    let n = g.order();
    if map.iter().any(|m| m.is_none()) {
        // Generators closed to a proper subgroup image: not surjective.
        return false;
    }
    let w: Vec<usize> = map.iter().map(|m| m.unwrap()).collect();
    let mut seen = vec![false; n];
    for &y in &w {
        if seen[y] {
            return false;
        }
        seen[y] = true;
    }
    for x in 0..n {
        for y in 0..n {
            if w[g.mul(x, y)] != h.mul(w[x], w[y]) {
                return false;
            }
        }
    }
    true
}

/// If `g` is isomorphic to a direct product of dihedral groups
/// `D_{k₁} × … × D_{kᵣ}` (orders `k₁ ≥ k₂ ≥ … ≥ 2`, all even), return the
/// order multiset `[k₁, …, kᵣ]`; `None` otherwise. The trivial group gives
/// `Some([])`. Only defined for `|g| ≤ 512`; larger inputs are an error.
///
/// `D_k` here means the dihedral group *of order* `k`, so the degenerate
/// small cases count: `D₂ = C₂` and `D₄` is the Klein four-group, while
/// `D₆ ≅ S₃`. Candidate multisets are tried in descending lexicographic
/// order and the first isomorphic one is returned.
pub fn is_dihedral_product(g: &FiniteGroup) -> Result<Option<Vec<u64>>> {
    is_dihedral_product_with(g, &Limits::default())
}

pub fn is_dihedral_product_with(g: &FiniteGroup, limits: &Limits) -> Result<Option<Vec<u64>>> {
    let n = g.order() as u64;
    if n > 512 {
        return Err(Error::SizeExceeded {
            what: "dihedral-product recognition".into(),
            needed: n as u128,
            bound: 512,
        });
    }
    if n == 1 {
        return Ok(Some(Vec::new()));
    }
    let mut found: Option<Vec<u64>> = None;
    enumerate_factorizations(n, 2, &mut Vec::new(), &mut |parts| {
        if found.is_some() {
            return Ok(());
        }
        let mut candidate: Option<FiniteGroup> = None;
        for &k in parts {
            let d = super::standard::dihedral_with(k, limits)?;
            candidate = Some(match candidate {
                None => d,
                Some(acc) => super::standard::direct_product_with(&acc, &d, limits)?,
            });
        }
        let candidate = candidate.expect("parts nonempty");
        let iso = is_isomorphic_with(g, &candidate, limits)?;
        if iso.isomorphic {
            let mut sorted = parts.to_vec();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            found = Some(sorted);
        }
        Ok(())
    })?;
    Ok(found)
}

/// Call `f` on every non-increasing sequence of even factors ≥ `min` whose
/// product is `n`, in descending lexicographic order. Single-factor
/// candidates (plain dihedral groups) are therefore tried before longer
/// products.
fn enumerate_factorizations(
    n: u64,
    min: u64,
    stack: &mut Vec<u64>,
    f: &mut impl FnMut(&[u64]) -> Result<()>,
) -> Result<()> {
    debug_assert!(min >= 2);
    if n == 1 {
        if !stack.is_empty() {
            f(stack)?;
        }
        return Ok(());
    }
    let cap = stack.last().copied().unwrap_or(n);
    let mut k = cap.min(n);
    while k >= min {
        if n % k == 0 && k % 2 == 0 {
            stack.push(k);
            enumerate_factorizations(n / k, min, stack, f)?;
            stack.pop();
        }
        k -= 1;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{
        cyclic, dihedral, direct_product, holomorph, quaternion8, sl2, symmetric,
    };

    #[test]
    fn detects_matching_small_groups() {
        let s3 = symmetric(3).unwrap();
        let d6 = dihedral(6).unwrap();
        let r = is_isomorphic(&s3, &d6).unwrap();
        assert!(r.isomorphic);
        let w = r.witness.unwrap();
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(w[s3.mul(x, y)], d6.mul(w[x], w[y]));
            }
        }
    }

    #[test]
    fn separates_same_order_groups() {
        let d8 = dihedral(8).unwrap();
        let q8 = quaternion8();
        let r = is_isomorphic(&d8, &q8).unwrap();
        assert!(!r.isomorphic);
        // D8 has five involutions, Q8 has one: the spectra differ.
        assert!(r.obstruction.unwrap().contains("spectra"));

        let c4 = cyclic(4).unwrap();
        let v4 = direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap()).unwrap();
        assert!(!is_isomorphic(&c4, &v4).unwrap().isomorphic);
    }

    #[test]
    fn relabeling_is_invisible() {
        let g = sl2(3).unwrap();
        // A fixed but arbitrary relabeling of the 24 elements.
        let mut perm: Vec<usize> = (0..24).collect();
        let mut state = 0xfeed_5eedu64;
        for i in (1..24usize).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let shuffled = g.permuted_copy(&perm).unwrap();
        let r = is_isomorphic(&g, &shuffled).unwrap();
        assert!(r.isomorphic);
    }

    #[test]
    fn hol12_is_d8_times_d6() {
        let h = holomorph(12).unwrap();
        let parts = is_dihedral_product(&h).unwrap();
        assert_eq!(parts, Some(vec![8, 6]));
    }

    #[test]
    fn dihedral_product_basics() {
        assert_eq!(
            is_dihedral_product(&dihedral(6).unwrap()).unwrap(),
            Some(vec![6])
        );
        assert_eq!(
            is_dihedral_product(&cyclic(1).unwrap()).unwrap(),
            Some(vec![])
        );
        // The degenerate dihedral group of order 2 is C2 itself.
        assert_eq!(
            is_dihedral_product(&cyclic(2).unwrap()).unwrap(),
            Some(vec![2])
        );
        assert_eq!(is_dihedral_product(&cyclic(6).unwrap()).unwrap(), None);
        assert_eq!(is_dihedral_product(&quaternion8()).unwrap(), None);
        assert_eq!(is_dihedral_product(&sl2(3).unwrap()).unwrap(), None);
        // Klein four-group is the order-4 dihedral group.
        let v4 = direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap()).unwrap();
        assert_eq!(is_dihedral_product(&v4).unwrap(), Some(vec![4]));
        // Hol(23) has order 506 = 2·11·23: inside the bound, and the only
        // candidate factorization [506] is ruled out by the spectrum screen.
        let hol23 = holomorph(23).unwrap();
        assert_eq!(is_dihedral_product(&hol23).unwrap(), None);
        let too_big = holomorph(29).unwrap(); // order 812 exceeds the bound
        assert!(is_dihedral_product(&too_big).is_err());
    }

    #[test]
    fn abelian_groups_by_spectrum() {
        let c6 = cyclic(6).unwrap();
        let c2xc3 = direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap()).unwrap();
        assert!(is_isomorphic(&c6, &c2xc3).unwrap().isomorphic);
        let c8 = cyclic(8).unwrap();
        let c2xc4 = direct_product(&cyclic(2).unwrap(), &cyclic(4).unwrap()).unwrap();
        assert!(!is_isomorphic(&c8, &c2xc4).unwrap().isomorphic);
    }
}
