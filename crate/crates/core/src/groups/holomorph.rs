//! Holomorphs of cyclic groups and degree-one affine groups over fields.
//!
//! `Hol(Z_n) = Z_n ⋊ Z_n^×` is realized as pairs `(a, b)` with `a ∈ Z_n`,
//! `b ∈ Z_n^×`, multiplying by `(a, b)(a', b') = (a + b·a', b·b')` — the
//! composition of the affine maps `x ↦ b·x + a`. The same recipe over a
//! finite field `F_q` (with `b ≠ 0`) gives `AGL1(F_q)`, which coincides with
//! the holomorph exactly when the additive group is cyclic (prime `q`).

use std::collections::HashMap;

use super::{FiniteGroup, GroupRep, Subgroup};
use crate::exactalg::{gcd, prime_power, units_mod, FqField};
use crate::{Error, Limits, Result};

/// `Hol(Z_n)` with default limits.
pub fn holomorph(n: u64) -> Result<FiniteGroup> {
    holomorph_with(n, &Limits::default())
}

/// `Hol(Z_n)`: pairs `(a, b)`, index `a·φ(n) + position of b` with units
/// ascending. Order `n·φ(n)`.
pub fn holomorph_with(n: u64, limits: &Limits) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::BadParameter("holomorph parameter must be positive".into()));
    }
    let units = units_mod(n);
    let phi = units.len();
    let order = limits.check_size(&format!("Hol({n})"), n as u128 * phi as u128)? as usize;
    let pos: HashMap<u64, usize> = units.iter().enumerate().map(|(i, &u)| (u, i)).collect();
    let identity = pos[&(1 % n)];
    // (1, 1) together with the pure automorphisms (0, b) always generates.
    let mut hint = Vec::new();
    if n > 1 {
        hint.push(phi + pos[&1]); // the translation (1, 1)
        hint.extend(units.iter().filter(|&&b| b != 1).map(|b| pos[b]));
    }
    FiniteGroup::from_parts(
        format!("Hol({n})"),
        order,
        identity,
        GroupRep::HolPairs { n, units, pos },
        hint,
        limits,
    )
}

/// Decodes an element of a holomorph group back to its `(a, b)` pair.
/// Returns `None` if the group is not a holomorph-represented group.
pub fn holomorph_pair(g: &FiniteGroup, x: usize) -> Option<(u64, u64)> {
    match g.rep() {
        GroupRep::HolPairs { units, .. } => {
            let phi = units.len();
            Some(((x / phi) as u64, units[x % phi]))
        }
        _ => None,
    }
}

/// The canonical copy of `Hol(Z_d)` inside `Hol(Z_n)` for a coprime split
/// `n = d·m`: pairs `(a, b)` with `a ≡ 0` and `b ≡ 1` modulo `m`.
pub fn hol_factor_subgroup(g: &FiniteGroup, d: u64) -> Result<Subgroup> {
    let GroupRep::HolPairs { n, units, .. } = g.rep() else {
        return Err(Error::BadParameter(format!(
            "{} is not a holomorph-represented group",
            g.label()
        )));
    };
    let n = *n;
    if d == 0 || n % d != 0 || gcd(d, n / d) != 1 {
        return Err(Error::BadParameter(format!(
            "{d} does not give a coprime factorization of {n}"
        )));
    }
    let m = n / d;
    let phi = units.len();
    let members: Vec<usize> = (0..g.order())
        .filter(|&x| {
            let (a, b) = ((x / phi) as u64, units[x % phi]);
            a % m == 0 && b % m == 1 % m
        })
        .collect();
    Ok(Subgroup::from_sorted_members(g, members))
}

/// `AGL1(F_q)`: invertible affine maps `x ↦ b·x + a` over the field of order
/// `q`. Order `q(q−1)`. Errors with [`Error::NonPrime`] if `q` is not a
/// prime power.
pub fn agl1(q: u64) -> Result<FiniteGroup> {
    agl1_with(q, &Limits::default())
}

pub fn agl1_with(q: u64, limits: &Limits) -> Result<FiniteGroup> {
    let Some((p, k)) = prime_power(q) else {
        return Err(Error::NonPrime(q));
    };
    let order = limits.check_size(&format!("AGL1({q})"), q as u128 * (q as u128 - 1))? as usize;
    let field = FqField::with_limits(p, k, limits)?;
    // Identity is (a, b) = (0, 1) at index 0. Generators: a translation and a
    // primitive scaling.
    let u = q - 1;
    let hint = if q > 2 {
        vec![u as usize, (field.multiplicative_generator() - 1) as usize]
    } else {
        vec![u as usize] // q = 2: the translation alone generates C2
    };
    FiniteGroup::from_parts(
        format!("AGL1({q})"),
        order,
        0,
        GroupRep::AffineFq { field },
        hint,
        limits,
    )
}
