//! Two-row 0/1 matrices: cumulative column sums, the Pólya condition, the
//! boolean sum-dot product, the two-part decomposition, and the builder
//! that turns a selection pair into an incidence matrix.

use crate::error::{Error, Result};
use crate::selection::Selection;
use itertools::Itertools;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// Widest supported matrix; rows are packed into single machine words.
pub const MAX_WIDTH: usize = 64;

/// A 2×N boolean matrix with both rows packed into `u64` bit sets
/// (bit `j` ↔ column `j`). Semantically identical to two bit sequences;
/// the packing just keeps exhaustive sweeps cheap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoolMatrix2xN {
    width: usize,
    rows: [u64; 2],
}

impl BoolMatrix2xN {
    /// Builds from two equal-length rows of booleans.
    pub fn from_rows(row0: &[bool], row1: &[bool]) -> Result<Self> {
        if row0.len() != row1.len() {
            return Err(Error::LengthMismatch {
                left: row0.len(),
                right: row1.len(),
            });
        }
        if row0.len() > MAX_WIDTH {
            return Err(Error::WidthTooLarge {
                width: row0.len(),
                max: MAX_WIDTH,
            });
        }
        let pack = |bits: &[bool]| {
            bits.iter()
                .enumerate()
                .fold(0u64, |acc, (j, &b)| acc | ((b as u64) << j))
        };
        Ok(BoolMatrix2xN {
            width: row0.len(),
            rows: [pack(row0), pack(row1)],
        })
    }

    /// Builds from packed row words; bits at or beyond `width` are ignored.
    pub fn from_bits(width: usize, row0: u64, row1: u64) -> Result<Self> {
        if width > MAX_WIDTH {
            return Err(Error::WidthTooLarge {
                width,
                max: MAX_WIDTH,
            });
        }
        let mask = width_mask(width);
        Ok(BoolMatrix2xN {
            width,
            rows: [row0 & mask, row1 & mask],
        })
    }

    /// The sum-dot identity element: all-zero row 0 over all-one row 1.
    pub fn identity(width: usize) -> Result<Self> {
        Self::from_bits(width, 0, u64::MAX)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Entry at `(row, col)`.
    ///
    /// # Panics
    /// Panics if `row > 1` or `col >= width`.
    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < 2 && col < self.width, "index out of range");
        self.rows[row] >> col & 1 == 1
    }

    /// Row `i` as a packed word (bit `j` ↔ column `j`).
    pub fn row_bits(&self, row: usize) -> u64 {
        assert!(row < 2, "index out of range");
        self.rows[row]
    }

    /// Number of ones in one row.
    pub fn row_ones(&self, row: usize) -> usize {
        assert!(row < 2, "index out of range");
        self.rows[row].count_ones() as usize
    }

    /// Total number of ones.
    pub fn ones(&self) -> usize {
        self.row_ones(0) + self.row_ones(1)
    }

    /// Cumulative column sums: `M_j` counts the ones in columns `0..=j`
    /// across both rows. Non-decreasing, ends at the total ones count.
    pub fn cumulative_sums(&self) -> Vec<usize> {
        let mut sums = Vec::with_capacity(self.width);
        let mut count = 0usize;
        for j in 0..self.width {
            count += (self.rows[0] >> j & 1) as usize + (self.rows[1] >> j & 1) as usize;
            sums.push(count);
        }
        sums
    }

    /// The boolean sum-dot product: OR on row 0, AND on row 1.
    ///
    /// The identity element is `[[0..0],[1..1]]` and the operation is
    /// idempotent; it composes interpolation conditions at two nodes.
    pub fn sum_dot(&self, other: &BoolMatrix2xN) -> Result<BoolMatrix2xN> {
        if self.width != other.width {
            return Err(Error::LengthMismatch {
                left: self.width,
                right: other.width,
            });
        }
        Ok(BoolMatrix2xN {
            width: self.width,
            rows: [self.rows[0] | other.rows[0], self.rows[1] & other.rows[1]],
        })
    }
}

/// Allocation-free check of the column-count condition `M_j > j` for all j.
fn polya_counts_hold(m: &BoolMatrix2xN) -> bool {
    let mut count = 0usize;
    for j in 0..m.width {
        count += (m.rows[0] >> j & 1) as usize + (m.rows[1] >> j & 1) as usize;
        if count <= j {
            return false;
        }
    }
    true
}

fn width_mask(width: usize) -> u64 {
    if width == MAX_WIDTH {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

/// A 2×(n+1) boolean matrix certified to carry exactly n+1 ones: one
/// interpolation condition per column count, the shape that makes a
/// two-point Birkhoff system square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct IncidenceMatrix {
    base: BoolMatrix2xN,
}

impl IncidenceMatrix {
    /// Certifies a boolean matrix: the total ones count must equal the
    /// width.
    pub fn new(base: BoolMatrix2xN) -> Result<Self> {
        if base.ones() != base.width {
            return Err(Error::NotIncidence {
                width: base.width,
                ones: base.ones(),
            });
        }
        Ok(IncidenceMatrix { base })
    }

    /// The identity incidence matrix of the given width.
    pub fn identity(width: usize) -> Result<Self> {
        Self::new(BoolMatrix2xN::identity(width)?)
    }

    /// Row 0 marks the node-0 derivative orders (the complement of `x`),
    /// row 1 the node-1 orders (`r`). Requires `|r| = |x|` and all entries
    /// within `0..=n`; the ones count then comes out to exactly n+1.
    pub fn from_selection(r: &Selection, x: &Selection, n: usize) -> Result<Self> {
        if r.len() != x.len() {
            return Err(Error::LengthMismatch {
                left: r.len(),
                right: x.len(),
            });
        }
        if let Some(max) = r.max() {
            if max > n {
                return Err(Error::EntryOutOfRange {
                    entry: max,
                    bound: n,
                });
            }
        }
        let x_complement = x.complement(n)?;
        if n + 1 > MAX_WIDTH {
            return Err(Error::WidthTooLarge {
                width: n + 1,
                max: MAX_WIDTH,
            });
        }
        let pack = |entries: &[usize]| entries.iter().fold(0u64, |acc, &j| acc | (1 << j));
        let base = BoolMatrix2xN {
            width: n + 1,
            rows: [pack(x_complement.entries()), pack(r.entries())],
        };
        Self::new(base).map_err(|_| unreachable!("|x̄| + |r| = (n+1-|x|) + |r| = n+1 ones"))
    }

    pub fn width(&self) -> usize {
        self.base.width()
    }

    pub fn as_bool(&self) -> &BoolMatrix2xN {
        &self.base
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.base.get(row, col)
    }

    pub fn row_ones(&self, row: usize) -> usize {
        self.base.row_ones(row)
    }

    pub fn cumulative_sums(&self) -> Vec<usize> {
        self.base.cumulative_sums()
    }

    /// The Pólya condition: every cumulative sum `M_j` exceeds `j`.
    /// Equivalent to invertibility of the two-point Birkhoff system built
    /// from this matrix (which the sweeps verify).
    pub fn is_polya(&self) -> bool {
        polya_counts_hold(&self.base)
    }

    /// Splits the matrix into two incidence matrices whose sum-dot
    /// reassembles it, writing `d` for the ones count of row 0:
    ///
    /// * `E1`: the first (lowest-column) one of row 0 is exchanged with the
    ///   first zero of row 1;
    /// * `E2`: the last `d − 1` ones of row 0 are exchanged with the last
    ///   `d − 1` zeros of row 1.
    ///
    /// Guarantees, re-checked wholesale by the verification sweeps:
    /// reassembly (`E1 ⊕· E2 = E`), both parts incidence, Pólya descends to
    /// both parts, the row-0 ones counts and row-1 zeros counts are
    /// additive, `d = 0` gives `(I, I)` (and then `E = I` itself), `d = 1`
    /// gives `(I, E)`, and `d > 1` makes all three matrices distinct.
    pub fn decompose(&self) -> (IncidenceMatrix, IncidenceMatrix) {
        let width = self.base.width;
        let mask = width_mask(width);
        let [r0, r1] = self.base.rows;
        let d = r0.count_ones() as usize;

        if d == 0 {
            let id = IncidenceMatrix::identity(width).expect("width already validated");
            return (id, id);
        }

        // Row 1 holds width − d ones, so it has d ≥ 1 zeros to exchange into.
        let row1_zeros = !r1 & mask;
        debug_assert!(
            row1_zeros != 0,
            "ones in row 0 of an incidence matrix leave zeros in row 1"
        );

        let first_one = 1u64 << r0.trailing_zeros();
        let first_zero = 1u64 << row1_zeros.trailing_zeros();
        let e1 = BoolMatrix2xN {
            width,
            rows: [r0 & !first_one, r1 | first_zero],
        };

        let mut top = r0;
        let mut bottom = r1;
        for _ in 1..d {
            let highest_one = 63 - top.leading_zeros();
            top &= !(1u64 << highest_one);
            let highest_zero = 63 - (!bottom & mask).leading_zeros();
            bottom |= 1u64 << highest_zero;
        }
        let e2 = BoolMatrix2xN {
            width,
            rows: [top, bottom],
        };

        let certify = |m: BoolMatrix2xN| {
            IncidenceMatrix::new(m).expect("each exchange moves one 1, preserving the total")
        };
        (certify(e1), certify(e2))
    }
}

/// The counting criterion for when the sum-dot of two incidence matrices is
/// again an incidence matrix: the row-0 overlap must have exactly as many
/// columns as the shared zeros of the row 1s.
///
/// Note that even when the sum-dot is an incidence matrix, it need not
/// satisfy the Pólya condition just because both factors do — e.g.
/// `1010/1010 ⊕· 1001/0110 = 1011/0010` fails it at column 1. Exhaustive
/// sweeps show the condition *is* preserved whenever the factors' row-0
/// supports are disjoint, which is the shape [`IncidenceMatrix::decompose`]
/// produces.
pub fn sum_dot_is_incidence(e1: &IncidenceMatrix, e2: &IncidenceMatrix) -> Result<bool> {
    let (a, b) = (&e1.base, &e2.base);
    if a.width != b.width {
        return Err(Error::LengthMismatch {
            left: a.width,
            right: b.width,
        });
    }
    let mask = width_mask(a.width);
    let row0_overlap = (a.rows[0] & b.rows[0]).count_ones();
    let shared_row1_zeros = (!a.rows[1] & !b.rows[1] & mask).count_ones();
    let verdict = row0_overlap == shared_row1_zeros;
    debug_assert_eq!(
        verdict,
        a.sum_dot(b).expect("widths match").ones() == a.width,
        "counting criterion must agree with the direct ones count"
    );
    Ok(verdict)
}

/// Every incidence matrix of the given width, in a fixed deterministic
/// order; there are C(2·width, width) of them.
pub fn enumerate(width: usize) -> Result<impl Iterator<Item = IncidenceMatrix>> {
    if width > MAX_WIDTH {
        return Err(Error::WidthTooLarge {
            width,
            max: MAX_WIDTH,
        });
    }
    Ok((0..2 * width).combinations(width).map(move |positions| {
        let mut rows = [0u64; 2];
        for p in positions {
            if p < width {
                rows[0] |= 1 << p;
            } else {
                rows[1] |= 1 << (p - width);
            }
        }
        IncidenceMatrix::new(BoolMatrix2xN { width, rows })
            .expect("exactly `width` positions were set")
    }))
}

impl fmt::Display for BoolMatrix2xN {
    /// Compact form: the two rows as 0/1 strings joined by `/`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in 0..2 {
            if row == 1 {
                write!(f, "/")?;
            }
            for col in 0..self.width {
                write!(f, "{}", (self.rows[row] >> col & 1))?;
            }
        }
        Ok(())
    }
}

impl FromStr for BoolMatrix2xN {
    type Err = Error;

    /// Parses the compact `"010100/101101"` form.
    fn from_str(s: &str) -> Result<Self> {
        let Some((top, bottom)) = s.split_once('/') else {
            return Err(Error::Parse(format!(
                "expected two 0/1 rows joined by '/', got {s:?}"
            )));
        };
        let parse_row = |text: &str| -> Result<Vec<bool>> {
            text.chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    other => Err(Error::Parse(format!("bad bit {other:?} in {text:?}"))),
                })
                .collect()
        };
        BoolMatrix2xN::from_rows(&parse_row(top)?, &parse_row(bottom)?)
    }
}

impl fmt::Display for IncidenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.base.fmt(f)
    }
}

impl FromStr for IncidenceMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IncidenceMatrix::new(s.parse::<BoolMatrix2xN>()?)
    }
}

impl Serialize for BoolMatrix2xN {
    /// JSON form: two arrays of 0/1 numbers, row 0 first.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<u8>> = (0..2)
            .map(|i| (0..self.width).map(|j| (self.rows[i] >> j & 1) as u8).collect())
            .collect();
        rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BoolMatrix2xN {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<u8>>::deserialize(deserializer)?;
        let [row0, row1]: [Vec<u8>; 2] = rows
            .try_into()
            .map_err(|_| D::Error::custom("expected exactly two rows"))?;
        let unpack = |bits: Vec<u8>| -> std::result::Result<Vec<bool>, D::Error> {
            bits.into_iter()
                .map(|b| match b {
                    0 => Ok(false),
                    1 => Ok(true),
                    other => Err(D::Error::custom(format!("bad bit {other}"))),
                })
                .collect()
        };
        BoolMatrix2xN::from_rows(&unpack(row0)?, &unpack(row1)?).map_err(D::Error::custom)
    }
}

impl Serialize for IncidenceMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.base.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IncidenceMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        IncidenceMatrix::new(BoolMatrix2xN::deserialize(deserializer)?).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bm(text: &str) -> BoolMatrix2xN {
        text.parse().expect("well-formed test matrix")
    }

    fn im(text: &str) -> IncidenceMatrix {
        text.parse().expect("incidence test matrix")
    }

    fn sel(entries: &[usize]) -> Selection {
        Selection::new(entries.to_vec()).expect("strictly increasing test data")
    }

    #[test]
    fn cumulative_sums_frozen_examples() {
        assert_eq!(bm("010100/101101").cumulative_sums(), [1, 2, 3, 5, 5, 6]);
        assert_eq!(bm("010011/011010").cumulative_sums(), [0, 2, 3, 3, 5, 6]);
        assert_eq!(bm("0000/0000").cumulative_sums(), [0, 0, 0, 0]);
    }

    #[test]
    fn polya_frozen_examples() {
        assert!(im("010100/101101").is_polya());
        // Fails at j = 0 (M_0 = 0) and j = 3 (M_3 = 3).
        assert!(!im("010011/011010").is_polya());
        assert!(IncidenceMatrix::identity(7).unwrap().is_polya());
    }

    #[test]
    fn sum_dot_frozen_product() {
        let product = bm("010100/101101").sum_dot(&bm("010011/011010")).unwrap();
        assert_eq!(product, bm("010111/001000"));
    }

    #[test]
    fn sum_dot_identity_and_idempotence() {
        let e = bm("010100/101101");
        let id = BoolMatrix2xN::identity(6).unwrap();
        assert_eq!(e.sum_dot(&id).unwrap(), e);
        assert_eq!(id.sum_dot(&e).unwrap(), e);
        assert_eq!(e.sum_dot(&e).unwrap(), e);
    }

    #[test]
    fn sum_dot_requires_equal_widths() {
        assert_eq!(
            bm("01/10").sum_dot(&bm("010/100")),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn incidence_certification_counts_ones() {
        assert!(IncidenceMatrix::new(bm("010100/101101")).is_ok());
        assert_eq!(
            IncidenceMatrix::new(bm("010100/101100")),
            Err(Error::NotIncidence { width: 6, ones: 5 })
        );
    }

    #[test]
    fn incidence_criterion_agrees_with_direct_count() {
        let e1 = im("010100/101101");
        let e2 = im("010011/011010");
        // Their sum-dot has 5 ones in width 6, so it is not incidence.
        assert!(!sum_dot_is_incidence(&e1, &e2).unwrap());
        assert_eq!(e1.as_bool().sum_dot(e2.as_bool()).unwrap().ones(), 5);

        let id = IncidenceMatrix::identity(6).unwrap();
        assert!(sum_dot_is_incidence(&id, &id).unwrap());
        assert!(sum_dot_is_incidence(&e1, &e1).unwrap());
    }

    #[test]
    fn decompose_single_one_gives_identity_and_self() {
        let e = im("0001000/1110111");
        let (e1, e2) = e.decompose();
        assert_eq!(e1, IncidenceMatrix::identity(7).unwrap());
        assert_eq!(e2, e);
    }

    #[test]
    fn decompose_frozen_boxed_example() {
        let e = im("1000110/1110010");
        let (e1, e2) = e.decompose();
        assert_eq!(e1, im("0000110/1111010"));
        assert_eq!(e2, im("1000000/1110111"));
        assert_eq!(e1.as_bool().sum_dot(e2.as_bool()).unwrap(), *e.as_bool());
    }

    #[test]
    fn decompose_identity_gives_identity_twice() {
        let id = IncidenceMatrix::identity(5).unwrap();
        let (e1, e2) = id.decompose();
        assert_eq!(e1, id);
        assert_eq!(e2, id);
    }

    #[test]
    fn decompose_clauses_hold_exhaustively_at_small_widths() {
        for width in 0..=5 {
            for e in enumerate(width).unwrap() {
                let (e1, e2) = e.decompose();
                let d = e.row_ones(0);
                assert_eq!(
                    e1.as_bool().sum_dot(e2.as_bool()).unwrap(),
                    *e.as_bool(),
                    "reassembly of {e}"
                );
                assert_eq!(e.row_ones(0), e1.row_ones(0) + e2.row_ones(0));
                let zeros = |m: &IncidenceMatrix| m.width() - m.row_ones(1);
                assert_eq!(zeros(&e), zeros(&e1) + zeros(&e2));
                if e.is_polya() {
                    assert!(e1.is_polya() && e2.is_polya(), "Pólya descends for {e}");
                }
                let id = IncidenceMatrix::identity(width).unwrap();
                match d {
                    0 => assert!(e1 == id && e2 == id && e == id),
                    1 => assert!(e1 == id && e2 == e),
                    _ => assert!(e1 != e && e2 != e && e1 != e2),
                }
            }
        }
    }

    #[test]
    fn sum_dot_of_polya_factors_need_not_be_polya() {
        // Minimal counterexample to unrestricted Pólya preservation,
        // found by exhaustive sweep: both factors satisfy the column
        // counts, their sum-dot is an incidence matrix, yet the sum-dot
        // fails at column 1 (M_1 = 1).
        let e1 = im("1010/1010");
        let e2 = im("1001/0110");
        assert!(e1.is_polya() && e2.is_polya());
        assert!(sum_dot_is_incidence(&e1, &e2).unwrap());
        let product = IncidenceMatrix::new(e1.as_bool().sum_dot(e2.as_bool()).unwrap()).unwrap();
        assert_eq!(product, im("1011/0010"));
        assert_eq!(product.cumulative_sums(), [1, 1, 3, 4]);
        assert!(!product.is_polya());
    }

    #[test]
    fn sum_dot_preserves_polya_when_row0_supports_are_disjoint() {
        // The restricted closure property that does hold (checked here
        // exhaustively at small widths, and at widths <= 7 by the
        // acceptance sweep): if no column carries a one in both row 0s,
        // an incidence sum-dot of Pólya factors is again Pólya.
        for width in 0..=5 {
            let all: Vec<IncidenceMatrix> = enumerate(width).unwrap().collect();
            for e1 in &all {
                for e2 in &all {
                    let disjoint =
                        e1.as_bool().row_bits(0) & e2.as_bool().row_bits(0) == 0;
                    if !(disjoint && e1.is_polya() && e2.is_polya()) {
                        continue;
                    }
                    if !sum_dot_is_incidence(e1, e2).unwrap() {
                        continue;
                    }
                    let product = IncidenceMatrix::new(
                        e1.as_bool().sum_dot(e2.as_bool()).unwrap(),
                    )
                    .expect("criterion held");
                    assert!(product.is_polya(), "sum-dot of {e1}, {e2} lost Pólya");
                }
            }
        }
    }

    #[test]
    fn polya_preserving_and_non_preserving_decompositions_of_one_matrix() {
        // One Pólya matrix, two valid ways to write it as a sum-dot: the
        // first splits into Pólya parts, the second does not — Pólya parts
        // are sufficient but not necessary.
        let e = im("11010/10100");
        assert!(e.is_polya());

        let (p1, p2) = (im("11000/10101"), im("10010/10110"));
        assert_eq!(p1.as_bool().sum_dot(p2.as_bool()).unwrap(), *e.as_bool());
        assert!(p1.is_polya() && p2.is_polya());

        let (q1, q2) = (im("11000/11100"), im("00010/10111"));
        assert_eq!(q1.as_bool().sum_dot(q2.as_bool()).unwrap(), *e.as_bool());
        assert!(q1.is_polya());
        assert!(!q2.is_polya(), "second factor violates the column counts");
    }

    #[test]
    fn from_selection_frozen_examples() {
        let e = IncidenceMatrix::from_selection(&sel(&[1, 5, 6]), &sel(&[1, 3, 5]), 6).unwrap();
        assert_eq!(e, im("1010101/0100011"));

        let full = Selection::full(4);
        assert_eq!(
            IncidenceMatrix::from_selection(&full, &full, 4).unwrap(),
            IncidenceMatrix::identity(5).unwrap()
        );

        let tiny = IncidenceMatrix::from_selection(&sel(&[0]), &sel(&[1]), 1).unwrap();
        assert_eq!(tiny, im("10/10"));
        assert_eq!(tiny.cumulative_sums(), [2, 2]);
        assert!(tiny.is_polya());
    }

    #[test]
    fn from_selection_validates_lengths_and_ranges() {
        assert_eq!(
            IncidenceMatrix::from_selection(&sel(&[0]), &sel(&[0, 1]), 3),
            Err(Error::LengthMismatch { left: 1, right: 2 })
        );
        assert_eq!(
            IncidenceMatrix::from_selection(&sel(&[4]), &sel(&[1]), 3),
            Err(Error::EntryOutOfRange { entry: 4, bound: 3 })
        );
        assert_eq!(
            IncidenceMatrix::from_selection(&sel(&[1]), &sel(&[4]), 3),
            Err(Error::EntryOutOfRange { entry: 4, bound: 3 })
        );
    }

    #[test]
    fn enumerate_counts_match_central_binomials() {
        let count = |w: usize| enumerate(w).unwrap().count();
        assert_eq!(count(0), 1);
        assert_eq!(count(1), 2);
        assert_eq!(count(3), 20);
        assert_eq!(count(7), 3432);
    }

    #[test]
    fn enumerate_yields_distinct_certified_matrices() {
        let all: Vec<_> = enumerate(4).unwrap().collect();
        assert_eq!(all.len(), 70);
        let mut seen = std::collections::HashSet::new();
        for e in &all {
            assert_eq!(e.as_bool().ones(), 4);
            assert!(seen.insert(*e), "duplicate {e}");
        }
    }

    #[test]
    fn parse_display_round_trip_and_errors() {
        for text in ["010100/101101", "0/1", "/"] {
            assert_eq!(bm(text).to_string(), text);
        }
        assert!("0101".parse::<BoolMatrix2xN>().is_err());
        assert!("01x/010".parse::<BoolMatrix2xN>().is_err());
        assert_eq!(
            "01/010".parse::<BoolMatrix2xN>(),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        );
        assert_eq!(
            "0110/0100".parse::<IncidenceMatrix>().unwrap_err(),
            Error::NotIncidence { width: 4, ones: 3 }
        );
    }

    #[test]
    fn serde_uses_two_bit_arrays() {
        let e = im("010/101");
        assert_eq!(serde_json::to_string(&e).unwrap(), "[[0,1,0],[1,0,1]]");
        let back: IncidenceMatrix = serde_json::from_str("[[0,1,0],[1,0,1]]").unwrap();
        assert_eq!(back, e);
        assert!(serde_json::from_str::<IncidenceMatrix>("[[0,1,0],[1,1,1]]").is_err());
        assert!(serde_json::from_str::<BoolMatrix2xN>("[[0,2],[1,0]]").is_err());
        assert!(serde_json::from_str::<BoolMatrix2xN>("[[0,1]]").is_err());
    }

    #[test]
    fn width_beyond_packing_limit_is_rejected() {
        let long = vec![false; 65];
        assert_eq!(
            BoolMatrix2xN::from_rows(&long, &long),
            Err(Error::WidthTooLarge {
                width: 65,
                max: MAX_WIDTH
            })
        );
    }

    /// Arbitrary boolean matrices of width 1..=10.
    fn any_bool_matrix() -> impl Strategy<Value = BoolMatrix2xN> {
        (1usize..=10).prop_flat_map(|w| {
            (0u64..(1 << w), 0u64..(1 << w))
                .prop_map(move |(r0, r1)| BoolMatrix2xN::from_bits(w, r0, r1).unwrap())
        })
    }

    proptest! {
        #[test]
        fn sum_dot_is_idempotent_and_identity_neutral(e in any_bool_matrix()) {
            let id = BoolMatrix2xN::identity(e.width()).unwrap();
            prop_assert_eq!(e.sum_dot(&e).unwrap(), e);
            prop_assert_eq!(e.sum_dot(&id).unwrap(), e);
            prop_assert_eq!(id.sum_dot(&e).unwrap(), e);
        }

        #[test]
        fn from_selection_always_carries_width_ones(
            (n, r, x) in (0usize..=10).prop_flat_map(|n| {
                (Just(n), 1..=n + 1).prop_flat_map(move |(n, k)| {
                    let one = move || {
                        prop::sample::subsequence((0..=n).collect::<Vec<_>>(), k)
                            .prop_map(|s| Selection::new(s).unwrap())
                    };
                    (Just(n), one(), one())
                })
            })
        ) {
            let e = IncidenceMatrix::from_selection(&r, &x, n).unwrap();
            prop_assert_eq!(e.as_bool().ones(), n + 1);
        }

        #[test]
        fn display_parse_round_trip(e in any_bool_matrix()) {
            prop_assert_eq!(e.to_string().parse::<BoolMatrix2xN>().unwrap(), e);
        }
    }
}
