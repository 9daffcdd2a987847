//! Exact computations with small finite groups and rings.
//!
//! The library builds concrete finite structures — cyclic, dihedral and matrix
//! groups, holomorphs `Hol(Z_n) = Z_n ⋊ Z_n^×`, modular rings, matrix and
//! group rings, endomorphism rings of abelian groups — and answers structural
//! questions about them with exact arithmetic: unit groups, Jacobson radicals,
//! centers, normal subgroups, isomorphism witnesses, two-sided ideals of group
//! rings over `Z_t`.
//!
//! Everything is enumerated and checked directly; there are no floating-point
//! computations and no randomized algorithms whose answers could vary between
//! runs. Structures are small by design (the default cap is a million
//! elements), which keeps every answer exhaustively verifiable.
//!
//! The [`verifier`] module packages a battery of named checks over these
//! structures — each one recomputes a concrete claimed fact (a unit-group
//! isomorphism, an ideal non-injectivity sweep, a normal-subgroup inventory)
//! and reports per-case outcomes.

pub mod exactalg;
pub mod groups;
pub mod rings;
pub mod verifier;

mod error;
mod limits;

pub use error::{Error, Result};
pub use limits::Limits;
