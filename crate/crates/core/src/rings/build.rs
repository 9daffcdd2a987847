//! Construction of [`FiniteRing`]s from [`RingExpr`] trees, with parameter
//! validation and size admission checks before any enumeration happens.

use crate::exactalg::{gcd, FqField};
use crate::rings::{build_fast2, FiniteRing, RingExpr, RingRep};
use crate::{Error, Limits, Result};

pub fn build_ring(expr: &RingExpr) -> Result<FiniteRing> {
    build_ring_with(expr, &Limits::default())
}

pub fn build_ring_with(expr: &RingExpr, limits: &Limits) -> Result<FiniteRing> {
    let label = expr.to_string();
    match expr {
        RingExpr::Zmod(n) => {
            if *n < 2 {
                return Err(Error::BadParameter(format!(
                    "Z{n}: modulus must be at least 2 (the zero ring has no unit group to speak of)"
                )));
            }
            let size = limits.check_size(&label, *n as u128)? as usize;
            FiniteRing::from_parts(expr.clone(), size, 1, RingRep::Zmod { n: *n }, limits)
        }
        RingExpr::Fq(q) => {
            let size = limits.check_size(&label, *q as u128)? as usize;
            let field = FqField::from_order(*q)?;
            FiniteRing::from_parts(expr.clone(), size, 1, RingRep::Fq { field }, limits)
        }
        RingExpr::Matrix(k, base) => {
            let k = require_dim(*k, "matrix")?;
            let base = build_ring_with(base, limits)?;
            let size = admit_power(limits, &label, base.size(), k * k)?;
            // Identity matrix: base.one() on the diagonal, row-major packing.
            let mut one = 0usize;
            let nb = base.size();
            for i in 0..k {
                one += base.one() * nb.pow((i * k + i) as u32);
            }
            FiniteRing::from_parts(expr.clone(), size, one, RingRep::Matrix { base, k }, limits)
        }
        RingExpr::UpperTriangular(k, base) => {
            let k = require_dim(*k, "matrix")?;
            let base = build_ring_with(base, limits)?;
            let positions = k * (k + 1) / 2;
            let size = admit_power(limits, &label, base.size(), positions)?;
            let nb = base.size();
            let pos = |i: usize| i * k - i * (i + 1) / 2 + i; // (i,i) slot
            let mut one = 0usize;
            for i in 0..k {
                one += base.one() * nb.pow(pos(i) as u32);
            }
            FiniteRing::from_parts(
                expr.clone(),
                size,
                one,
                RingRep::UpperTri { base, k },
                limits,
            )
        }
        RingExpr::TruncPoly(base, k) => {
            let k = require_dim(*k, "truncation degree")?;
            let base = build_ring_with(base, limits)?;
            let size = admit_power(limits, &label, base.size(), k)?;
            let one = base.one();
            FiniteRing::from_parts(
                expr.clone(),
                size,
                one,
                RingRep::TruncPoly { base, k },
                limits,
            )
        }
        RingExpr::GroupRing(t, gexpr) => {
            if *t < 2 {
                return Err(Error::BadParameter(format!(
                    "GR({t},…): coefficient modulus must be at least 2"
                )));
            }
            let group = gexpr.build(limits)?;
            let size = admit_power(limits, &label, *t as usize, group.order())?;
            let one = (*t as usize).pow(group.identity() as u32);
            let fast2 = if *t == 2 { build_fast2(&group) } else { None };
            FiniteRing::from_parts(
                expr.clone(),
                size,
                one,
                RingRep::GroupRing {
                    t: *t,
                    group,
                    fast2,
                },
                limits,
            )
        }
        RingExpr::EndAb(dims) => {
            if dims.is_empty() {
                return Err(Error::BadParameter(
                    "End(): at least one cyclic factor is required".into(),
                ));
            }
            for &d in dims {
                if d < 2 {
                    return Err(Error::BadParameter(format!(
                        "End(…): cyclic factor orders must be at least 2, got {d}"
                    )));
                }
            }
            let r = dims.len();
            let mut radix = Vec::with_capacity(r * r);
            let mut step = Vec::with_capacity(r * r);
            let mut total: u128 = 1;
            for i in 0..r {
                for j in 0..r {
                    let g = gcd(dims[i], dims[j]);
                    radix.push(g);
                    step.push(dims[i] / g);
                    total = total.saturating_mul(g as u128);
                }
            }
            let size = limits.check_size(&label, total)? as usize;
            // Identity map: entry (i,i) = 1; step there is 1, so digit 1.
            let mut one = 0usize;
            let mut weight = 1usize;
            for (p, &rx) in radix.iter().enumerate() {
                let i = p / r;
                let j = p % r;
                if i == j {
                    one += weight;
                }
                weight *= rx as usize;
            }
            FiniteRing::from_parts(
                expr.clone(),
                size,
                one,
                RingRep::EndAb {
                    dims: dims.clone(),
                    radix,
                    step,
                },
                limits,
            )
        }
        RingExpr::Product(a, b) => {
            let left = build_ring_with(a, limits)?;
            let right = build_ring_with(b, limits)?;
            let total = (left.size() as u128) * (right.size() as u128);
            let size = limits.check_size(&label, total)? as usize;
            let one = left.one() * right.size() + right.one();
            FiniteRing::from_parts(
                expr.clone(),
                size,
                one,
                RingRep::Product { left, right },
                limits,
            )
        }
    }
}

fn require_dim(k: usize, what: &str) -> Result<usize> {
    if k == 0 {
        Err(Error::BadParameter(format!("{what} must be positive")))
    } else {
        Ok(k)
    }
}

/// Admit `base^exp` elements against the enumeration limit, reporting the
/// (possibly saturated) requested size on refusal.
fn admit_power(limits: &Limits, label: &str, base: usize, exp: usize) -> Result<usize> {
    let mut needed: u128 = 1;
    for _ in 0..exp {
        needed = needed.saturating_mul(base as u128);
    }
    Ok(limits.check_size(label, needed)? as usize)
}
