//! Expression tree describing how to build a finite ring. `Display` emits
//! the same grammar the CLI parses: `Z4`, `M(2,F2)`, `TP(F3,2)`,
//! `GR(2,D6)`, `End(4,2)`, `Z4 x M(2,F2)`.

use std::fmt;

use crate::groups::GroupExpr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingExpr {
    /// `Z<n>` — the integers mod `n`, `n ≥ 2`.
    Zmod(u64),
    /// `F<q>` — the field of prime-power order `q`.
    Fq(u64),
    /// `M(<k>,<ring>)` — full `k×k` matrices.
    Matrix(usize, Box<RingExpr>),
    /// `U(<k>,<ring>)` — upper-triangular `k×k` matrices.
    UpperTriangular(usize, Box<RingExpr>),
    /// `TP(<ring>,<k>)` — truncated polynomials `R[x]/(x^k)`.
    TruncPoly(Box<RingExpr>, usize),
    /// `GR(<t>,<group>)` — the group ring `Z_t[G]`.
    GroupRing(u64, GroupExpr),
    /// `End(<d1>,...,<dr>)` — endomorphisms of `C_{d1} × … × C_{dr}`.
    EndAb(Vec<u64>),
    /// `<a> x <b>` — product ring with componentwise operations.
    Product(Box<RingExpr>, Box<RingExpr>),
}

impl RingExpr {
    pub fn product(a: RingExpr, b: RingExpr) -> RingExpr {
        RingExpr::Product(Box::new(a), Box::new(b))
    }

    pub fn matrix(k: usize, sub: RingExpr) -> RingExpr {
        RingExpr::Matrix(k, Box::new(sub))
    }

    pub fn upper_triangular(k: usize, sub: RingExpr) -> RingExpr {
        RingExpr::UpperTriangular(k, Box::new(sub))
    }

    pub fn trunc_poly(sub: RingExpr, k: usize) -> RingExpr {
        RingExpr::TruncPoly(Box::new(sub), k)
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zmod(n) => write!(f, "Z{n}"),
            RingExpr::Fq(q) => write!(f, "F{q}"),
            RingExpr::Matrix(k, sub) => write!(f, "M({k},{sub})"),
            RingExpr::UpperTriangular(k, sub) => write!(f, "U({k},{sub})"),
            RingExpr::TruncPoly(sub, k) => write!(f, "TP({sub},{k})"),
            RingExpr::GroupRing(t, g) => write!(f, "GR({t},{g})"),
            RingExpr::EndAb(dims) => {
                write!(f, "End(")?;
                for (i, d) in dims.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{d}")?;
                }
                write!(f, ")")
            }
            RingExpr::Product(a, b) => write!(f, "{a} x {b}"),
        }
    }
}
