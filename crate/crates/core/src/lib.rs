//! Exact-arithmetic calculators for the singularities and canonical classes
//! of spaces of rational curves on hypersurfaces.
//!
//! The crate is organized around five calculators:
//!
//! * [`cyclic`] — character arithmetic for finite cyclic groups and the
//!   quotient-singularity invariant of moduli tangent spaces at multiple
//!   covers of lines;
//! * [`determinantal`] — log discrepancies and singularity classes of
//!   generic determinantal pairs and Grassmannian cones;
//! * [`oracle`] — brute-force rank censuses over small prime fields that
//!   independently confirm the determinantal codimension formula;
//! * [`picard`] — divisor-class arithmetic on the rational Picard group,
//!   canonical classes, and a sufficient bigness test;
//! * [`classify`] — the per-`(n, d, e)` report engine tying it together.
//!
//! Everything is computed in exact integer or rational arithmetic; no
//! floating point is used anywhere.

pub mod classify;
pub mod cli;
pub mod cyclic;
pub mod determinantal;
pub mod error;
pub mod oracle;
pub mod picard;
pub mod rational;

pub use error::{Error, Result};
