//! Dense matrices of exact rationals: construction, a fraction-free
//! determinant, and the zero-block singularity witness.

use crate::arithmetic::{ExactInt, ExactRational};
use crate::error::{Error, Result};
use num::{Integer, One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// Dense row-major matrix of [`ExactRational`] entries.
///
/// This is the container for every linear system in the crate: truncated
/// Pascal matrices, Birkhoff collocation systems, and their block
/// extensions. Values are immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    n_rows: usize,
    n_cols: usize,
    entries: Vec<ExactRational>,
}

impl ExactMatrix {
    /// Builds a matrix from row-major entries; the entry count must equal
    /// `n_rows * n_cols`.
    pub fn new(n_rows: usize, n_cols: usize, entries: Vec<ExactRational>) -> Result<Self> {
        if entries.len() != n_rows * n_cols {
            return Err(Error::LengthMismatch {
                left: entries.len(),
                right: n_rows * n_cols,
            });
        }
        Ok(ExactMatrix {
            n_rows,
            n_cols,
            entries,
        })
    }

    /// Builds a matrix by evaluating `f(i, j)` at every position.
    pub fn from_fn(
        n_rows: usize,
        n_cols: usize,
        mut f: impl FnMut(usize, usize) -> ExactRational,
    ) -> Self {
        let mut entries = Vec::with_capacity(n_rows * n_cols);
        for i in 0..n_rows {
            for j in 0..n_cols {
                entries.push(f(i, j));
            }
        }
        ExactMatrix {
            n_rows,
            n_cols,
            entries,
        }
    }

    /// Builds a matrix from explicit rows, which must all share one width.
    pub fn from_rows(rows: Vec<Vec<ExactRational>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        for row in &rows {
            if row.len() != n_cols {
                return Err(Error::LengthMismatch {
                    left: row.len(),
                    right: n_cols,
                });
            }
        }
        Ok(ExactMatrix {
            n_rows,
            n_cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor from machine-integer rows (tests, examples).
    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|row| {
                    row.iter()
                        .map(|&v| ExactRational::from_integer(ExactInt::from(v)))
                        .collect()
                })
                .collect(),
        )
    }

    /// The n×n identity matrix.
    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                ExactRational::one()
            } else {
                ExactRational::zero()
            }
        })
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn is_square(&self) -> bool {
        self.n_rows == self.n_cols
    }

    /// Entry at row `i`, column `j` (0-based).
    ///
    /// # Panics
    /// Panics if either index is out of range.
    pub fn entry(&self, i: usize, j: usize) -> &ExactRational {
        assert!(i < self.n_rows && j < self.n_cols, "index out of range");
        &self.entries[i * self.n_cols + j]
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[ExactRational] {
        &self.entries[i * self.n_cols..(i + 1) * self.n_cols]
    }

    /// Matrix product `self * rhs` (inner dimensions must agree).
    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix> {
        if self.n_cols != rhs.n_rows {
            return Err(Error::LengthMismatch {
                left: self.n_cols,
                right: rhs.n_rows,
            });
        }
        Ok(Self::from_fn(self.n_rows, rhs.n_cols, |i, j| {
            (0..self.n_cols).fold(ExactRational::zero(), |acc, k| {
                acc + self.entry(i, k) * rhs.entry(k, j)
            })
        }))
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Rational entries are first cleared to integers row by row (tracking
    /// the accumulated scale), then the integer elimination divides by the
    /// previous pivot at every step — a division the Sylvester minor
    /// identity guarantees to be exact, so intermediates stay integral and
    /// polynomially bounded. A zero pivot is repaired by searching the
    /// column tail for a nonzero entry and swapping rows (flipping the
    /// sign); if the whole tail is zero the determinant is zero. The 0×0
    /// determinant is 1 by the empty-product convention.
    pub fn det(&self) -> Result<ExactRational> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                n_rows: self.n_rows,
                n_cols: self.n_cols,
            });
        }
        let n = self.n_rows;
        if n == 0 {
            return Ok(ExactRational::one());
        }

        // Clear denominators so the elimination runs over integers.
        let mut scale = ExactInt::one();
        let mut work: Vec<ExactInt> = Vec::with_capacity(n * n);
        for i in 0..n {
            let row = self.row(i);
            let lcm = row
                .iter()
                .fold(ExactInt::one(), |acc, e| acc.lcm(e.denom()));
            if lcm.is_one() {
                work.extend(row.iter().map(|e| e.numer().clone()));
            } else {
                work.extend(row.iter().map(|e| e.numer() * (&lcm / e.denom())));
                scale *= &lcm;
            }
        }
        Ok(ExactRational::new(bareiss(&mut work, n), scale))
    }

    /// True iff the (square) matrix has a nonzero determinant.
    pub fn is_invertible(&self) -> Result<bool> {
        Ok(!self.det()?.is_zero())
    }

    /// Smallest `k` such that rows `k..=d` × columns `0..=k` of this
    /// `(d+1)×(d+1)` matrix are entirely zero, if any.
    ///
    /// Such a block forces singularity: the `k + 1` leading columns are
    /// supported on only `k` leading rows, so they are linearly dependent
    /// and a witness implies a zero determinant (which the sweeps re-check).
    pub fn zero_block_witness(&self) -> Result<Option<usize>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                n_rows: self.n_rows,
                n_cols: self.n_cols,
            });
        }
        for k in 0..self.n_rows {
            let all_zero =
                (k..self.n_rows).all(|i| (0..=k).all(|j| self.entry(i, j).is_zero()));
            if all_zero {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }
}

/// Fraction-free elimination over a flat row-major integer buffer.
fn bareiss(m: &mut [ExactInt], n: usize) -> ExactInt {
    let at = |i: usize, j: usize| i * n + j;
    let mut negated = false;
    let mut prev = ExactInt::one();
    for k in 0..n - 1 {
        if m[at(k, k)].is_zero() {
            // Search the column tail for a pivot; no pivot means the
            // leading columns are dependent and the determinant vanishes.
            let Some(r) = ((k + 1)..n).find(|&r| !m[at(r, k)].is_zero()) else {
                return ExactInt::zero();
            };
            for j in 0..n {
                m.swap(at(k, j), at(r, j));
            }
            negated = !negated;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = &m[at(k, k)] * &m[at(i, j)] - &m[at(i, k)] * &m[at(k, j)];
                debug_assert!(
                    (&num % &prev).is_zero(),
                    "fraction-free step must divide exactly"
                );
                m[at(i, j)] = num / &prev;
            }
        }
        prev = m[at(k, k)].clone();
    }
    let d = m[at(n - 1, n - 1)].clone();
    if negated {
        -d
    } else {
        d
    }
}

impl fmt::Display for ExactMatrix {
    /// Right-aligned grid with two-space gutters, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n_rows == 0 || self.n_cols == 0 {
            return write!(f, "(empty {}x{} matrix)", self.n_rows, self.n_cols);
        }
        let cells: Vec<Vec<String>> = (0..self.n_rows)
            .map(|i| self.row(i).iter().map(ExactRational::to_string).collect())
            .collect();
        let widths: Vec<usize> = (0..self.n_cols)
            .map(|j| cells.iter().map(|row| row[j].len()).max().unwrap_or(0))
            .collect();
        for (i, row) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{cell:>width$}", width = widths[j])?;
            }
        }
        Ok(())
    }
}

impl Serialize for ExactMatrix {
    /// Nested arrays of decimal strings (`"5"`, `"-1/3"`), row-major.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let grid: Vec<Vec<String>> = (0..self.n_rows)
            .map(|i| self.row(i).iter().map(ExactRational::to_string).collect())
            .collect();
        grid.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let grid = Vec::<Vec<String>>::deserialize(deserializer)?;
        let rows = grid
            .iter()
            .map(|row| {
                row.iter()
                    .map(|text| {
                        ExactRational::from_str(text)
                            .map_err(|e| D::Error::custom(format!("bad entry {text:?}: {e}")))
                    })
                    .collect::<std::result::Result<Vec<_>, _>>()
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        ExactMatrix::from_rows(rows).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::det_cofactor;
    use proptest::prelude::*;

    fn m(rows: &[Vec<i64>]) -> ExactMatrix {
        ExactMatrix::from_int_rows(rows).expect("well-formed test matrix")
    }

    fn rat(n: i64, d: i64) -> ExactRational {
        ExactRational::new(ExactInt::from(n), ExactInt::from(d))
    }

    #[test]
    fn det_of_empty_matrix_is_one() {
        let empty = ExactMatrix::new(0, 0, vec![]).unwrap();
        assert_eq!(empty.det().unwrap(), ExactRational::one());
        assert!(empty.is_invertible().unwrap());
    }

    #[test]
    fn det_frozen_examples() {
        assert!(m(&[vec![1, 2, 5], vec![0, 0, 10], vec![0, 0, 5]])
            .det()
            .unwrap()
            .is_zero());
        assert_eq!(
            m(&[vec![1, 1, 1], vec![1, 2, 5], vec![0, 1, 10]])
                .det()
                .unwrap(),
            rat(6, 1)
        );
        assert_eq!(m(&[vec![7]]).det().unwrap(), rat(7, 1));
        assert!(m(&[vec![0]]).det().unwrap().is_zero());
        assert!(!m(&[vec![0]]).is_invertible().unwrap());
    }

    #[test]
    fn det_handles_zero_pivots_by_row_swap() {
        assert_eq!(m(&[vec![0, 1], vec![1, 0]]).det().unwrap(), rat(-1, 1));
        // Swap deeper in the elimination, after the first step.
        let a = m(&[
            vec![1, 1, 1, 1],
            vec![1, 1, 2, 3],
            vec![1, 2, 4, 8],
            vec![1, 3, 9, 27],
        ]);
        assert_eq!(a.det().unwrap(), det_cofactor(&a).unwrap());
    }

    #[test]
    fn det_zero_when_column_tail_vanishes() {
        assert!(m(&[vec![0, 2], vec![0, 5]]).det().unwrap().is_zero());
        assert!(m(&[vec![1, 2, 3], vec![2, 4, 6], vec![3, 6, 9]])
            .det()
            .unwrap()
            .is_zero());
    }

    #[test]
    fn det_of_rational_matrix_is_exact() {
        let a = ExactMatrix::from_rows(vec![
            vec![rat(1, 2), rat(1, 3)],
            vec![rat(1, 4), rat(1, 5)],
        ])
        .unwrap();
        // 1/10 - 1/12 = 1/60.
        assert_eq!(a.det().unwrap(), rat(1, 60));
    }

    #[test]
    fn det_rejects_rectangular_input() {
        let wide = m(&[vec![1, 2, 3], vec![4, 5, 6]]);
        assert_eq!(
            wide.det(),
            Err(Error::NotSquare {
                n_rows: 2,
                n_cols: 3
            })
        );
        assert!(wide.is_invertible().is_err());
        assert!(wide.zero_block_witness().is_err());
    }

    #[test]
    fn zero_block_witness_frozen_examples() {
        // Rows 1..=2 × columns 0..=1 vanish: witness k = 1.
        let singular = m(&[vec![1, 2, 5], vec![0, 0, 10], vec![0, 0, 5]]);
        assert_eq!(singular.zero_block_witness().unwrap(), Some(1));
        assert!(singular.det().unwrap().is_zero());

        // Rows 2..=3 × columns 0..=2 vanish: witness k = 2 (and not earlier).
        let four = m(&[
            vec![1, 1, 1, 1],
            vec![1, 1, 1, 1],
            vec![0, 0, 0, 1],
            vec![0, 0, 0, 1],
        ]);
        assert_eq!(four.zero_block_witness().unwrap(), Some(2));
        assert!(four.det().unwrap().is_zero());

        assert_eq!(ExactMatrix::identity(4).zero_block_witness().unwrap(), None);
        // A zero first column alone is already a witness at k = 0.
        assert_eq!(
            m(&[vec![0, 1], vec![0, 1]]).zero_block_witness().unwrap(),
            Some(0)
        );
    }

    #[test]
    fn display_aligns_columns() {
        let a = m(&[vec![1, 1, 1], vec![1, 2, 5], vec![0, 1, 10]]);
        assert_eq!(a.to_string(), "1  1   1\n1  2   5\n0  1  10");
    }

    #[test]
    fn serde_round_trips_rationals_and_shape() {
        let a = ExactMatrix::from_rows(vec![
            vec![rat(1, 2), rat(-7, 1)],
            vec![rat(0, 1), rat(22, 7)],
        ])
        .unwrap();
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"[["1/2","-7"],["0","22/7"]]"#);
        let back: ExactMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn serde_rejects_bad_grids() {
        assert!(serde_json::from_str::<ExactMatrix>(r#"[["1","2"],["3"]]"#).is_err());
        assert!(serde_json::from_str::<ExactMatrix>(r#"[["1/0"]]"#).is_err());
        assert!(serde_json::from_str::<ExactMatrix>(r#"[["x"]]"#).is_err());
    }

    #[test]
    fn entry_count_is_validated() {
        assert_eq!(
            ExactMatrix::new(2, 2, vec![ExactRational::one()]),
            Err(Error::LengthMismatch { left: 1, right: 4 })
        );
    }

    /// Strategy: a square matrix of small integers, dimension 1..=5.
    fn small_square() -> impl Strategy<Value = ExactMatrix> {
        (1usize..=5).prop_flat_map(|n| {
            prop::collection::vec(-9i64..=9, n * n).prop_map(move |vals| {
                ExactMatrix::from_fn(n, n, |i, j| {
                    ExactRational::from_integer(ExactInt::from(vals[i * n + j]))
                })
            })
        })
    }

    proptest! {
        #[test]
        fn det_agrees_with_cofactor_oracle(a in small_square()) {
            prop_assert_eq!(a.det().unwrap(), det_cofactor(&a).unwrap());
        }

        #[test]
        fn det_is_multiplicative(
            (a, b) in (1usize..=4).prop_flat_map(|n| {
                let entries = prop::collection::vec(-6i64..=6, n * n);
                (entries.clone(), entries).prop_map(move |(u, v)| {
                    let build = |vals: Vec<i64>| ExactMatrix::from_fn(n, n, |i, j| {
                        ExactRational::from_integer(ExactInt::from(vals[i * n + j]))
                    });
                    (build(u), build(v))
                })
            })
        ) {
            let product = a.mul(&b).unwrap();
            prop_assert_eq!(product.det().unwrap(), a.det().unwrap() * b.det().unwrap());
        }

        #[test]
        fn row_swap_negates_det(a in small_square()) {
            prop_assume!(a.n_rows() >= 2);
            let n = a.n_rows();
            let swapped = ExactMatrix::from_fn(n, n, |i, j| {
                let src = match i { 0 => 1, 1 => 0, other => other };
                a.entry(src, j).clone()
            });
            prop_assert_eq!(swapped.det().unwrap(), -a.det().unwrap());
        }

        #[test]
        fn row_scaling_scales_det(a in small_square(), c in -5i64..=5) {
            let n = a.n_rows();
            let c = ExactRational::from_integer(ExactInt::from(c));
            let scaled = ExactMatrix::from_fn(n, n, |i, j| {
                if i == 0 { &c * a.entry(i, j) } else { a.entry(i, j).clone() }
            });
            prop_assert_eq!(scaled.det().unwrap(), c * a.det().unwrap());
        }

        #[test]
        fn zero_block_witness_implies_zero_det(a in small_square()) {
            if a.zero_block_witness().unwrap().is_some() {
                prop_assert!(a.det().unwrap().is_zero());
            }
        }
    }
}
