//! The unit group of the Hurwitz quaternion order: the 8 Lipschitz units
//! `±1, ±i, ±j, ±k` together with the 16 half-integer units
//! `(±1 ± i ± j ± k)/2`.
//!
//! Coordinates are stored doubled (so every unit is an integer vector of
//! norm 4), which keeps the arithmetic exact in `i64`. The multiplication
//! table is built from the quaternion product and validated by the group
//! audit; the first eight indices follow the same ordering as
//! [`quaternion8`](crate::groups::quaternion8), so `Q8` sits inside as the
//! index-3 subgroup `0..8`.

use std::collections::HashMap;

use crate::groups::FiniteGroup;
use crate::Result;

/// Doubled coordinates `(2a, 2b, 2c, 2d)` of the 24 Hurwitz units, in the
/// fixed enumeration: `1, −1, i, −i, j, −j, k, −k`, then the 16 half-units
/// `(±1 ± i ± j ± k)/2` ordered by sign mask (bit ℓ set ⇔ coordinate ℓ
/// negative).
pub fn hurwitz_unit_coords() -> Vec<[i64; 4]> {
    let mut coords = Vec::with_capacity(24);
    for axis in 0..4 {
        for sign in [1i64, -1] {
            let mut v = [0i64; 4];
            v[axis] = 2 * sign;
            coords.push(v);
        }
    }
    for mask in 0..16u32 {
        let mut v = [1i64; 4];
        for (l, slot) in v.iter_mut().enumerate() {
            if mask >> l & 1 == 1 {
                *slot = -1;
            }
        }
        coords.push(v);
    }
    coords
}

/// Quaternion product in the basis `1, i, j, k`.
fn quat_mul(x: [i64; 4], y: [i64; 4]) -> [i64; 4] {
    let [a1, b1, c1, d1] = x;
    let [a2, b2, c2, d2] = y;
    [
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    ]
}

/// Product of two units in doubled coordinates: `(2x)(2y) = 4xy`, so halving
/// recovers the doubled product.
fn mul_doubled(x: [i64; 4], y: [i64; 4]) -> [i64; 4] {
    let raw = quat_mul(x, y);
    let mut out = [0i64; 4];
    for (slot, &r) in out.iter_mut().zip(&raw) {
        assert_eq!(r % 2, 0, "unit product left the doubled lattice");
        *slot = r / 2;
    }
    out
}

/// The group of the 24 Hurwitz units under quaternion multiplication.
pub fn hurwitz_unit_group() -> Result<FiniteGroup> {
    let coords = hurwitz_unit_coords();
    let index: HashMap<[i64; 4], usize> = coords
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i))
        .collect();
    let mut table = Vec::with_capacity(24);
    for &x in &coords {
        debug_assert_eq!(x.iter().map(|v| v * v).sum::<i64>(), 4, "norm 1 check");
        let mut row = Vec::with_capacity(24);
        for &y in &coords {
            let p = mul_doubled(x, y);
            row.push(*index
                .get(&p)
                .expect("the 24 units are closed under multiplication"));
        }
        table.push(row);
    }
    FiniteGroup::from_table("Hurwitz units", table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twenty_four_units_with_unique_involution() {
        let h = hurwitz_unit_group().unwrap();
        assert_eq!(h.order(), 24);
        let spectrum = h.order_spectrum();
        assert_eq!(spectrum.get(&2), Some(&1)); // only −1 has order 2
        assert_eq!(spectrum.get(&3), Some(&8));
        assert_eq!(spectrum.get(&4), Some(&6));
        assert_eq!(spectrum.get(&6), Some(&8));
    }

    #[test]
    fn quaternion_subgroup_uses_the_same_indices() {
        let h = hurwitz_unit_group().unwrap();
        let q8 = crate::groups::quaternion8();
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(h.mul(a, b), q8.mul(a, b), "a={a} b={b}");
            }
        }
    }

    #[test]
    fn omega_has_order_three() {
        // ω = (−1 + i + j + k)/2 is the sign-mask-1 unit at index 9.
        let h = hurwitz_unit_group().unwrap();
        assert_eq!(h.element_order(9), 3);
        // Its square is the all-negative half unit (mask 15 → index 23).
        assert_eq!(h.mul(9, 9), 23);
    }

    #[test]
    fn isomorphic_to_sl2_f3() {
        let h = hurwitz_unit_group().unwrap();
        let sl = crate::groups::sl2(3).unwrap();
        let res = crate::groups::is_isomorphic(&h, &sl).unwrap();
        assert!(res.isomorphic);
    }
}
