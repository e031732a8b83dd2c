//! The crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong while constructing or querying the exact
/// objects in this crate. Disagreements found by the verification sweeps are
/// *data* (reported as counterexamples), never errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A would-be selection repeats or decreases somewhere.
    #[error("selection entries must be strictly increasing, but entry {index} is {entry}")]
    NotIncreasing { index: usize, entry: usize },

    /// A selection entry (or derivative order/degree) lies outside `0..=n`.
    #[error("entry {entry} exceeds the ambient bound n = {bound}")]
    EntryOutOfRange { entry: usize, bound: usize },

    /// Two lengths that must agree do not (selection sizes, row widths,
    /// entry counts, inner matrix dimensions).
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    /// An operation that needs a square matrix was handed a rectangular one.
    #[error("matrix is {n_rows}x{n_cols}, but this operation needs a square matrix")]
    NotSquare { n_rows: usize, n_cols: usize },

    /// A two-row 0/1 matrix is wider than the packed representation allows.
    #[error("width {width} exceeds the packed-row limit of {max} columns")]
    WidthTooLarge { width: usize, max: usize },

    /// A 2xN boolean matrix does not carry exactly N ones.
    #[error("a 2x{width} incidence matrix needs exactly {width} ones, found {ones}")]
    NotIncidence { width: usize, ones: usize },

    /// Free-form failure while reading one of the text formats.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
