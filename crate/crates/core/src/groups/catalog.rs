//! Best-effort recognition of a group as a named standard group, used to
//! make command-line output readable ("order 6, isomorphic to S3 = D6").

use super::{is_dihedral_product_with, is_isomorphic_with, FiniteGroup};
use crate::exactalg::{euler_phi, factorize};
use crate::{Limits, Result};

/// Recognition is only attempted up to this order; the isomorphism search
/// needs full multiplication tables on both sides.
const RECOGNITION_CAP: usize = 1000;

/// Invariant factors `d₁ | d₂ | … | dₖ` (ascending) of an abelian group,
/// recovered from element-order counts. `None` if the group is not abelian.
/// The trivial group yields an empty list.
pub fn abelian_invariant_factors(g: &FiniteGroup) -> Option<Vec<u64>> {
    if !g.is_abelian() {
        return None;
    }
    let n = g.order() as u64;
    if n == 1 {
        return Some(Vec::new());
    }
    let orders: Vec<u64> = (0..g.order()).map(|x| g.element_order(x)).collect();

    // For each prime p dividing n, recover the partition of the Sylow
    // p-subgroup: the number of cyclic factors of order ≥ p^k equals
    // log_p of the ratio of consecutive counts of elements killed by p^k.
    let mut partitions: Vec<(u64, Vec<u32>)> = Vec::new();
    for (p, a) in factorize(n) {
        let total = p.pow(a); // size of the Sylow p-subgroup (abelian case)
        let mut parts_at_least: Vec<u32> = Vec::new(); // index k-1 → #parts ≥ k
        let mut prev = 1u64;
        let mut pk = 1u64;
        loop {
            pk *= p;
            let killed = orders
                .iter()
                .filter(|&&o| pk % o == 0)
                .count() as u64;
            let mut ratio = killed / prev;
            let mut count = 0u32;
            while ratio > 1 {
                debug_assert_eq!(ratio % p, 0);
                ratio /= p;
                count += 1;
            }
            if count == 0 {
                break;
            }
            parts_at_least.push(count);
            prev = killed;
            if killed == total {
                break;
            }
        }
        // Transpose: part i (1-based) = #{k : parts_at_least[k] ≥ i}.
        let max_parts = parts_at_least.first().copied().unwrap_or(0);
        let parts: Vec<u32> = (1..=max_parts)
            .map(|i| parts_at_least.iter().filter(|&&c| c >= i).count() as u32)
            .collect();
        partitions.push((p, parts));
    }

    let rank = partitions
        .iter()
        .map(|(_, parts)| parts.len())
        .max()
        .unwrap_or(0);
    // Descending invariant factors: the j-th combines the j-th largest part
    // of every prime.
    let mut factors: Vec<u64> = (0..rank)
        .map(|j| {
            partitions
                .iter()
                .map(|(p, parts)| parts.get(j).map_or(1, |&e| p.pow(e)))
                .product()
        })
        .collect();
    factors.reverse();
    debug_assert_eq!(factors.iter().product::<u64>(), n);
    debug_assert_eq!(*factors.last().unwrap(), g.exponent());
    Some(factors)
}

fn abelian_name(g: &FiniteGroup) -> Option<String> {
    let factors = abelian_invariant_factors(g)?;
    if factors.is_empty() {
        return Some("C1".to_string());
    }
    let parts: Vec<String> = factors.iter().map(|d| format!("C{d}")).collect();
    Some(parts.join(" x "))
}

/// Search for `n` with `Hol(Z_n) ≅ g`; the order pins `n·φ(n)`.
fn find_holomorph(g: &FiniteGroup, limits: &Limits) -> Result<Option<u64>> {
    let order = g.order() as u64;
    for n in 1..=order {
        if n * euler_phi(n) != order {
            continue;
        }
        let h = super::holomorph_with(n, limits)?;
        if is_isomorphic_with(g, &h, limits)?.isomorphic {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

fn dihedral_name(parts: &[u64]) -> String {
    let names: Vec<String> = parts.iter().map(|k| format!("D{k}")).collect();
    names.join(" x ")
}

/// A human-friendly name for `g` if it matches a standard group, `None`
/// otherwise. Never wrong: every non-abelian name is backed by an explicit
/// isomorphism check.
pub fn identify(g: &FiniteGroup) -> Result<Option<String>> {
    identify_with(g, &Limits::default())
}

pub fn identify_with(g: &FiniteGroup, limits: &Limits) -> Result<Option<String>> {
    let n = g.order();
    if n == 1 {
        return Ok(Some("C1".to_string()));
    }
    if g.is_cyclic() {
        return Ok(Some(format!("C{n}")));
    }
    if g.is_abelian() {
        return Ok(abelian_name(g));
    }
    if n > RECOGNITION_CAP {
        return Ok(None);
    }

    if n == 8 && is_isomorphic_with(g, &super::quaternion8(), limits)?.isomorphic {
        return Ok(Some("Q8".to_string()));
    }
    if n == 12 && is_isomorphic_with(g, &super::alternating4(), limits)?.isomorphic {
        return Ok(Some("A4".to_string()));
    }
    if n == 6 && is_isomorphic_with(g, &super::symmetric(3)?, limits)?.isomorphic {
        // The one symmetric group that is also dihedral.
        return Ok(Some("S3 = D6".to_string()));
    }
    if n == 24 && is_isomorphic_with(g, &super::symmetric(4)?, limits)?.isomorphic {
        return Ok(Some("S4".to_string()));
    }
    if n == 120 && is_isomorphic_with(g, &super::symmetric(5)?, limits)?.isomorphic {
        return Ok(Some("S5".to_string()));
    }
    if n == 24 && is_isomorphic_with(g, &super::sl2_with(3, limits)?, limits)?.isomorphic {
        return Ok(Some("SL2(3)".to_string()));
    }
    // Plain dihedral before the holomorph scan so D8 is named "D8" rather
    // than "Hol(4) = D8".
    if n <= 512 && n % 2 == 0 {
        let d = super::dihedral_with(n as u64, limits)?;
        if is_isomorphic_with(g, &d, limits)?.isomorphic {
            return Ok(Some(format!("D{n}")));
        }
    }
    if let Some(hn) = find_holomorph(g, limits)? {
        if n <= 512 {
            if let Some(parts) = is_dihedral_product_with(g, limits)? {
                return Ok(Some(format!("Hol({hn}) = {}", dihedral_name(&parts))));
            }
        }
        return Ok(Some(format!("Hol({hn})")));
    }
    if n <= 512 {
        if let Some(parts) = is_dihedral_product_with(g, limits)? {
            return Ok(Some(dihedral_name(&parts)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{
        alternating4, cyclic, dihedral, direct_product, holomorph, quaternion8, sl2, symmetric,
    };

    fn name(g: &FiniteGroup) -> String {
        identify(g).unwrap().unwrap_or_else(|| "?".to_string())
    }

    #[test]
    fn names_standard_groups() {
        assert_eq!(name(&cyclic(1).unwrap()), "C1");
        assert_eq!(name(&cyclic(7).unwrap()), "C7");
        assert_eq!(name(&quaternion8()), "Q8");
        assert_eq!(name(&alternating4()), "A4");
        assert_eq!(name(&symmetric(3).unwrap()), "S3 = D6");
        assert_eq!(name(&symmetric(4).unwrap()), "S4");
        assert_eq!(name(&sl2(3).unwrap()), "SL2(3)");
        assert_eq!(name(&sl2(2).unwrap()), "S3 = D6");
        assert_eq!(name(&dihedral(8).unwrap()), "D8");
        assert_eq!(name(&dihedral(14).unwrap()), "D14");
        assert_eq!(name(&holomorph(12).unwrap()), "Hol(12) = D8 x D6");
        assert_eq!(name(&holomorph(5).unwrap()), "Hol(5)");
        let d6xd6 = direct_product(&dihedral(6).unwrap(), &dihedral(6).unwrap()).unwrap();
        assert_eq!(name(&d6xd6), "D6 x D6");
    }

    #[test]
    fn names_abelian_products() {
        let c2 = cyclic(2).unwrap();
        let c4 = cyclic(4).unwrap();
        let g = direct_product(&c2, &c4).unwrap();
        assert_eq!(name(&g), "C2 x C4");
        let h = direct_product(&c4, &c2).unwrap();
        assert_eq!(name(&h), "C2 x C4");
        let c6 = direct_product(&c2, &cyclic(3).unwrap()).unwrap();
        assert_eq!(name(&c6), "C6");
        let c2c2c4 = direct_product(&direct_product(&c2, &c2).unwrap(), &c4).unwrap();
        assert_eq!(name(&c2c2c4), "C2 x C2 x C4");
    }

    #[test]
    fn invariant_factors_divide_in_sequence() {
        let g = direct_product(
            &direct_product(&cyclic(4).unwrap(), &cyclic(6).unwrap()).unwrap(),
            &cyclic(9).unwrap(),
        )
        .unwrap();
        // C4 × C6 × C9 has invariant factors 6 | 36.
        assert_eq!(abelian_invariant_factors(&g), Some(vec![6, 36]));
        assert_eq!(abelian_invariant_factors(&symmetric(3).unwrap()), None);
    }
}
