//! Truncated Pascal matrices and their determinant-free invertibility
//! criteria.

use crate::arithmetic::{binom, ExactRational};
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::selection::{dominates, Selection};
use num::Zero;

/// The truncated Pascal matrix `T(r, x)` with entry `(i, j) = C(x_j, r_i)`:
/// rows `r` and columns `x` cut out of the infinite upper-triangular Pascal
/// matrix.
///
/// Rectangular shapes (|r| ≠ |x|) are constructible for display and
/// inspection; every invertibility question goes through square matrices.
pub fn truncated(r: &Selection, x: &Selection) -> ExactMatrix {
    ExactMatrix::from_fn(r.len(), x.len(), |i, j| {
        ExactRational::from_integer(binom(x.entries()[j], r.entries()[i]))
    })
}

/// True iff every diagonal entry `C(x_k, r_k)` of `T(r, x)` is nonzero.
///
/// Since `C(j, i) = 0` exactly when `i > j`, this is dominance in disguise;
/// the implementation still evaluates the actual diagonal binomials so the
/// sweeps compare genuinely distinct computations.
pub fn diagonal_all_nonzero(r: &Selection, x: &Selection) -> Result<bool> {
    if r.len() != x.len() {
        return Err(Error::LengthMismatch {
            left: r.len(),
            right: x.len(),
        });
    }
    Ok(r.entries()
        .iter()
        .zip(x.entries())
        .all(|(&ri, &xi)| !binom(xi, ri).is_zero()))
}

/// Determinant-free invertibility test: `T(r, x)` is invertible iff `r ≤ x`
/// componentwise. O(d) comparisons, no arithmetic.
///
/// Deliberately a separate entry point from [`ExactMatrix::is_invertible`]
/// so the verification sweeps can compare the two routes.
pub fn is_invertible_fast(r: &Selection, x: &Selection) -> Result<bool> {
    dominates(r, x)
}
