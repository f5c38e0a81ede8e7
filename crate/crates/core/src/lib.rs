//! Exact computations on isotropy orbits of symmetric spaces.
//!
//! Shape-operator spectra come straight from restricted root data: for an
//! orbit through `p` and a normal vector `ξ` in the section, each positive
//! root `α` with `(α, p) ≠ 0` contributes the eigenvalue `−(α, ξ)/(p, α)` with
//! multiplicity `m_α`. Everything is computed over Q or a single Q(√d), so
//! rationality and commensurability questions are decided exactly.

pub mod error;
pub mod exactnum;
pub mod holonomy;
pub mod lattice;
pub mod linalg;
pub mod orbit;
pub mod rootsys;
pub mod scan;
pub mod surface;

pub use error::{Error, Result};
pub use exactnum::{Rational, Scalar};
pub use linalg::{ExactMatrix, ExactVector};
