//! The standard small families: cyclic, dihedral, quaternion, symmetric and
//! alternating groups, and direct products.

use super::{FiniteGroup, GroupRep};
use crate::{Error, Limits, Result};

/// The cyclic group `C_n` (written additively on `0..n`).
pub fn cyclic(n: u64) -> Result<FiniteGroup> {
    cyclic_with(n, &Limits::default())
}

pub fn cyclic_with(n: u64, limits: &Limits) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::BadParameter("cyclic group order must be positive".into()));
    }
    limits.check_size(&format!("C{n}"), n as u128)?;
    let gen_hint = if n > 1 { vec![1] } else { Vec::new() };
    FiniteGroup::from_parts(
        format!("C{n}"),
        n as usize,
        0,
        GroupRep::Cyclic { n },
        gen_hint,
        limits,
    )
}

/// The trivial group.
pub fn trivial() -> FiniteGroup {
    cyclic(1).expect("the trivial group always fits")
}

/// The dihedral group of order `m` (`m` even, `m ≥ 2`): symmetries of a
/// regular `m/2`-gon. Index `f·(m/2) + i` is `sᶠ rⁱ`. `D2 = C2` and
/// `D4 = C2×C2` are the degenerate small cases.
pub fn dihedral(m: u64) -> Result<FiniteGroup> {
    dihedral_with(m, &Limits::default())
}

pub fn dihedral_with(m: u64, limits: &Limits) -> Result<FiniteGroup> {
    if m < 2 || m % 2 != 0 {
        return Err(Error::BadParameter(format!(
            "dihedral group order must be even and at least 2, got {m}"
        )));
    }
    limits.check_size(&format!("D{m}"), m as u128)?;
    let half = m / 2;
    // Rotation r (index 1) and reflection s (index half) generate; for D2
    // there is no rotation.
    let gen_hint = if half > 1 {
        vec![1, half as usize]
    } else {
        vec![1]
    };
    FiniteGroup::from_parts(
        format!("D{m}"),
        m as usize,
        0,
        GroupRep::Dihedral { half },
        gen_hint,
        limits,
    )
}

/// The quaternion group `Q8 = {±1, ±i, ±j, ±k}` with elements ordered
/// `1, −1, i, −i, j, −j, k, −k`.
pub fn quaternion8() -> FiniteGroup {
    // Basis products: basis_mul[a][b] = (basis of a·b, sign flip).
    const BASIS_MUL: [[(usize, bool); 4]; 4] = [
        // 1·x
        [(0, false), (1, false), (2, false), (3, false)],
        // i·x: i·1=i, i·i=−1, i·j=k, i·k=−j
        [(1, false), (0, true), (3, false), (2, true)],
        // j·x: j·1=j, j·i=−k, j·j=−1, j·k=i
        [(2, false), (3, true), (0, true), (1, false)],
        // k·x: k·1=k, k·i=j, k·j=−i, k·k=−1
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let idx = |basis: usize, minus: bool| 2 * basis + usize::from(minus);
    let mut table = vec![vec![0usize; 8]; 8];
    for a in 0..8 {
        for b in 0..8 {
            let (ba, sa) = (a / 2, a % 2 == 1);
            let (bb, sb) = (b / 2, b % 2 == 1);
            let (bc, flip) = BASIS_MUL[ba][bb];
            table[a][b] = idx(bc, sa ^ sb ^ flip);
        }
    }
    FiniteGroup::from_table("Q8", table).expect("Q8 table is a group")
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // Next lexicographic permutation.
        let Some(i) = (0..n - 1).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out
}

fn permutation_parity(p: &[usize]) -> bool {
    // true = odd
    let mut seen = vec![false; p.len()];
    let mut odd = false;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len % 2 == 0 {
            odd = !odd;
        }
    }
    odd
}

fn permutation_group(label: &str, perms: Vec<Vec<usize>>) -> Result<FiniteGroup> {
    let index: std::collections::HashMap<Vec<usize>, usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let k = perms.len();
    let mut table = vec![vec![0usize; k]; k];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            // (p∘q)(x) = p(q(x)).
            let comp: Vec<usize> = (0..p.len()).map(|x| p[q[x]]).collect();
            table[i][j] = index[&comp];
        }
    }
    FiniteGroup::from_table(label, table)
}

/// The symmetric group `S_n` for `n ≤ 5`, permutations in lexicographic order
/// composing right-to-left.
pub fn symmetric(n: u32) -> Result<FiniteGroup> {
    if n == 0 || n > 5 {
        return Err(Error::BadParameter(format!(
            "symmetric groups are built only for degree 1..=5, got {n}"
        )));
    }
    permutation_group(&format!("S{n}"), permutations(n as usize))
}

/// The alternating group `A4` (even permutations of 4 points).
pub fn alternating4() -> FiniteGroup {
    let evens: Vec<Vec<usize>> = permutations(4)
        .into_iter()
        .filter(|p| !permutation_parity(p))
        .collect();
    permutation_group("A4", evens).expect("A4 table is a group")
}

/// The direct product, indexed `l·|H| + r`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    direct_product_with(g, h, &Limits::default())
}

pub fn direct_product_with(g: &FiniteGroup, h: &FiniteGroup, limits: &Limits) -> Result<FiniteGroup> {
    let order = limits.check_size(
        &format!("{} x {}", g.label(), h.label()),
        g.order() as u128 * h.order() as u128,
    )? as usize;
    let identity = g.identity() * h.order() + h.identity();
    // Generator hint: factor generators paired with identities.
    let mut hint: Vec<usize> = g
        .generators()
        .iter()
        .map(|&x| x * h.order() + h.identity())
        .collect();
    hint.extend(h.generators().iter().map(|&y| g.identity() * h.order() + y));
    FiniteGroup::from_parts(
        format!("{} x {}", g.label(), h.label()),
        order,
        identity,
        GroupRep::Product {
            left: g.clone(),
            right: h.clone(),
        },
        hint,
        limits,
    )
}
