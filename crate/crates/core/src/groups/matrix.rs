//! 2×2 matrix groups over finite fields: `GL2`, `SL2`, and the "unit circle"
//! subgroup of matrices `[[x, y], [−y, x]]` with `x² + y² = 1`.
//!
//! Elements are enumerated in lexicographic order of the entry quadruple
//! `[a, b, c, d]` (entries are field-element indices), so element numbering
//! is reproducible and matrix literals can be located with
//! [`matrix_index`].

use std::collections::HashMap;

use super::{FiniteGroup, GroupRep, Subgroup};
use crate::exactalg::{prime_power, FqField};
use crate::{Error, Limits, Result};

fn mat_group(q: u64, det_one: bool, limits: &Limits) -> Result<FiniteGroup> {
    let Some((p, k)) = prime_power(q) else {
        return Err(Error::NonPrime(q));
    };
    let label = if det_one {
        format!("SL2({q})")
    } else {
        format!("GL2({q})")
    };
    let qq = q as u128;
    let order = if det_one {
        qq * qq * qq - qq
    } else {
        (qq * qq - 1) * (qq * qq - qq)
    };
    let order = limits.check_size(&label, order)? as usize;
    let field = FqField::with_limits(p, k, limits)?;

    let mut elems: Vec<[u32; 4]> = Vec::with_capacity(order);
    for a in 0..q {
        for b in 0..q {
            // det = ad − bc; precompute the a·d and b·c rows lazily via field ops.
            for c in 0..q {
                let bc = field.mul_idx(b, c);
                for d in 0..q {
                    let det = field.sub_idx(field.mul_idx(a, d), bc);
                    let keep = if det_one { det == 1 } else { det != 0 };
                    if keep {
                        elems.push([a as u32, b as u32, c as u32, d as u32]);
                    }
                }
            }
        }
    }
    debug_assert_eq!(elems.len(), order);
    let index: HashMap<[u32; 4], u32> = elems
        .iter()
        .enumerate()
        .map(|(i, &m)| (m, i as u32))
        .collect();
    let identity = index[&[1, 0, 0, 1]] as usize;
    FiniteGroup::from_parts(
        label,
        order,
        identity,
        GroupRep::MatFq { field, elems, index },
        Vec::new(),
        limits,
    )
}

/// `GL2(F_q)`: invertible 2×2 matrices. Order `(q²−1)(q²−q)`.
pub fn gl2(q: u64) -> Result<FiniteGroup> {
    gl2_with(q, &Limits::default())
}

pub fn gl2_with(q: u64, limits: &Limits) -> Result<FiniteGroup> {
    mat_group(q, false, limits)
}

/// `SL2(F_q)`: determinant-one 2×2 matrices. Order `q³−q`.
pub fn sl2(q: u64) -> Result<FiniteGroup> {
    sl2_with(q, &Limits::default())
}

pub fn sl2_with(q: u64, limits: &Limits) -> Result<FiniteGroup> {
    mat_group(q, true, limits)
}

/// The entry quadruple of an element of a matrix group (field-element
/// indices, row-major), or `None` for non-matrix groups.
pub fn matrix_of(g: &FiniteGroup, x: usize) -> Option<[u64; 4]> {
    match g.rep() {
        GroupRep::MatFq { elems, .. } => {
            let m = elems[x];
            Some([m[0] as u64, m[1] as u64, m[2] as u64, m[3] as u64])
        }
        _ => None,
    }
}

/// The element index of a matrix literal in a matrix group, or `None` if the
/// group is not matrix-represented or the matrix is not a member.
pub fn matrix_index(g: &FiniteGroup, entries: [u64; 4]) -> Option<usize> {
    match g.rep() {
        GroupRep::MatFq { index, .. } => {
            let key = [
                entries[0] as u32,
                entries[1] as u32,
                entries[2] as u32,
                entries[3] as u32,
            ];
            index.get(&key).map(|&i| i as usize)
        }
        _ => None,
    }
}

/// The unit-circle subgroup of `SL2(F_q)` for odd `q`: all
/// `[[x, y], [−y, x]]` with `x² + y² = 1`. Cyclic of order `q−1` when
/// `q ≡ 1 (mod 4)` and `q+1` when `q ≡ 3 (mod 4)`.
pub fn uc(q: u64) -> Result<Subgroup> {
    uc_with(q, &Limits::default())
}

pub fn uc_with(q: u64, limits: &Limits) -> Result<Subgroup> {
    if q % 2 == 0 {
        return Err(Error::BadParameter(format!(
            "the unit-circle subgroup needs an odd field order, got {q}"
        )));
    }
    let parent = sl2_with(q, limits)?;
    let GroupRep::MatFq { field, index, .. } = parent.rep() else {
        unreachable!("sl2 groups are matrix-represented");
    };
    let mut members = Vec::new();
    for x in 0..q {
        let xx = field.mul_idx(x, x);
        for y in 0..q {
            let yy = field.mul_idx(y, y);
            if field.add_idx(xx, yy) == 1 {
                let m = [
                    x as u32,
                    y as u32,
                    field.neg_idx(y) as u32,
                    x as u32,
                ];
                members.push(index[&m] as usize);
            }
        }
    }
    members.sort_unstable();
    Ok(Subgroup::from_sorted_members(&parent, members))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::gcd;

    #[test]
    fn orders_of_small_matrix_groups() {
        assert_eq!(sl2(2).unwrap().order(), 6);
        assert_eq!(sl2(3).unwrap().order(), 24);
        assert_eq!(sl2(4).unwrap().order(), 60);
        assert_eq!(sl2(5).unwrap().order(), 120);
        assert_eq!(gl2(2).unwrap().order(), 6);
        assert_eq!(gl2(3).unwrap().order(), 48);
        assert_eq!(gl2(4).unwrap().order(), 180);
        assert!(sl2(6).is_err());
    }

    #[test]
    fn sl2_center_has_order_gcd_2_qm1() {
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let g = sl2(q).unwrap();
            let z = g.center();
            assert_eq!(z.order() as u64, gcd(2, q - 1), "center of SL2({q})");
        }
    }

    /// Frozen element indices in SL2(F3) under lexicographic enumeration;
    /// these anchor the quaternion-style elements used elsewhere.
    #[test]
    fn sl23_canonical_indices() {
        let g = sl2(3).unwrap();
        // i = [[0,2],[1,0]] (that is, [[0,−1],[1,0]] mod 3).
        assert_eq!(matrix_index(&g, [0, 2, 1, 0]), Some(3));
        // j = [[1,1],[1,2]] = [[1,1],[1,−1]].
        assert_eq!(matrix_index(&g, [1, 1, 1, 2]), Some(10));
        // k = i·j = [[2,1],[1,1]].
        assert_eq!(matrix_index(&g, [2, 1, 1, 1]), Some(19));
        // −1 = [[2,0],[0,2]].
        assert_eq!(matrix_index(&g, [2, 0, 0, 2]), Some(15));
        let (i, j, k, minus1) = (3, 10, 19, 15);
        assert_eq!(g.mul(i, i), minus1);
        assert_eq!(g.mul(i, j), k);
        assert_eq!(g.mul(j, j), minus1);
        assert_eq!(g.mul(k, k), minus1);
        // Identity is [[1,0],[0,1]]; six det-1 matrices with a = 0 precede it.
        assert_eq!(matrix_of(&g, g.identity()), Some([1, 0, 0, 1]));
        assert_eq!(g.identity(), 6);
        // Order spectrum of the binary tetrahedral group.
        let spec: Vec<(u64, usize)> = g.order_spectrum().into_iter().collect();
        assert_eq!(spec, vec![(1, 1), (2, 1), (3, 8), (4, 6), (6, 8)]);
        // First two elements of order 3, in index order: 2 and 5. The square
        // of the first is element 22. These picks are relied on by the
        // characteristic-two substitution sweeps.
        let order3: Vec<usize> = (0..24).filter(|&x| g.element_order(x) == 3).collect();
        assert_eq!(&order3[..2], &[2, 5]);
        assert_eq!(g.mul(2, 2), 22);
    }

    #[test]
    fn uc_orders_follow_q_mod_4() {
        for (q, expected) in [(3u64, 4u64), (5, 4), (7, 8), (9, 8), (11, 12), (13, 12)] {
            let circle = uc(q).unwrap();
            assert_eq!(circle.order() as u64, expected, "UC(F{q})");
            assert!(circle.is_cyclic(), "UC(F{q}) cyclic");
        }
        assert!(uc(4).is_err());
    }

    #[test]
    fn uc_is_self_centralizing_small() {
        for q in [3u64, 5, 7] {
            let circle = uc(q).unwrap();
            assert!(circle.is_self_centralizing(), "UC(F{q})");
        }
    }

    #[test]
    fn gl2_3_contains_sl2_3_as_derived_group() {
        let gl = gl2(3).unwrap();
        let derived = gl.commutator_subgroup();
        assert_eq!(derived.order(), 24);
        // The derived subgroup consists exactly of the determinant-1 matrices.
        let sl = sl2(3).unwrap();
        let iso = crate::groups::is_isomorphic(&derived.as_group().unwrap(), &sl).unwrap();
        assert!(iso.isomorphic);
    }
}
