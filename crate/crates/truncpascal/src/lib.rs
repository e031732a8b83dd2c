//! Exact combinatorial linear algebra around truncated Pascal matrices.
//!
//! The crate computes entirely over arbitrary-precision integers and
//! rationals — no floating point anywhere. It provides:
//!
//! * binomial-entry matrices `T(r, x) = [C(x_j, r_i)]` cut out of the
//!   infinite upper-triangular Pascal matrix by row/column selections,
//! * a fraction-free (Bareiss) determinant plus a zero-block singularity
//!   witness,
//! * the dominance order on selections and the equivalent diagonal
//!   criterion, which decide invertibility without any elimination,
//! * two-row 0/1 incidence matrices with cumulative column sums, the Pólya
//!   condition, the boolean sum-dot product, and a two-part decomposition,
//! * exact two-point Birkhoff collocation systems built from normalized
//!   derivative-evaluation functionals,
//! * sweep harnesses that exhaustively cross-check all of those
//!   invertibility viewpoints against each other at small orders, and
//! * a CLI (`truncpascal`) exposing the above.

pub mod arithmetic;
pub mod birkhoff;
pub mod cli;
pub mod error;
pub mod harness;
pub mod incidence;
pub mod matrix;
pub mod oracle;
pub mod pascal;
pub mod selection;

pub use arithmetic::{ExactInt, ExactRational};
pub use birkhoff::{BirkhoffSystem, Functional};
pub use error::{Error, Result};
pub use harness::{EquivalenceReport, HarnessConfig};
pub use incidence::{BoolMatrix2xN, IncidenceMatrix};
pub use matrix::ExactMatrix;
pub use selection::Selection;
