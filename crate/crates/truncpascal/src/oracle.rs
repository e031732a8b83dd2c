//! Slow reference implementations, deliberately independent of the
//! production algorithms so the two routes can be compared in tests.

use crate::arithmetic::ExactRational;
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use num::{One, Zero};
use std::collections::HashMap;

/// Determinant by Laplace cofactor expansion along the topmost active row.
///
/// Shares no code with the elimination-based [`ExactMatrix::det`]: no
/// pivoting, no division, just signed products of entries with recursively
/// expanded minors. Repeated minors are memoized on the set of active
/// columns, which keeps the expansion usable up to roughly 12×12 — a pure
/// performance measure that does not change which products are summed.
pub fn det_cofactor(m: &ExactMatrix) -> Result<ExactRational> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            n_rows: m.n_rows(),
            n_cols: m.n_cols(),
        });
    }
    let n = m.n_rows();
    if n > 64 {
        return Err(Error::WidthTooLarge { width: n, max: 64 });
    }
    if n == 0 {
        return Ok(ExactRational::one());
    }
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let mut memo = HashMap::new();
    Ok(expand(m, n, full, &mut memo))
}

/// Expands along row `n - |mask|` over the columns still active in `mask`.
fn expand(
    m: &ExactMatrix,
    n: usize,
    mask: u64,
    memo: &mut HashMap<u64, ExactRational>,
) -> ExactRational {
    if mask == 0 {
        return ExactRational::one();
    }
    if let Some(known) = memo.get(&mask) {
        return known.clone();
    }
    let row = n - mask.count_ones() as usize;
    let mut acc = ExactRational::zero();
    let mut position = 0usize; // index of column j among the active columns
    for j in 0..n {
        if mask & (1 << j) == 0 {
            continue;
        }
        let a = m.entry(row, j);
        if !a.is_zero() {
            let minor = expand(m, n, mask & !(1 << j), memo);
            let term = a * &minor;
            if position.is_multiple_of(2) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        position += 1;
    }
    memo.insert(mask, acc.clone());
    acc
}
