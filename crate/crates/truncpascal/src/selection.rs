//! Strictly increasing index sequences, their complements, and the
//! componentwise dominance order.

use crate::error::{Error, Result};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

/// A strictly increasing sequence of naturals.
///
/// Selections pick rows `r` or columns `x` out of the infinite Pascal
/// matrix, and double as sets of derivative orders on the Birkhoff side.
/// The empty selection is legal and yields 0×0 matrices downstream.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Selection {
    entries: Vec<usize>,
}

impl Selection {
    /// Validates a sequence: every entry must strictly exceed its
    /// predecessor.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        for (index, pair) in entries.windows(2).enumerate() {
            if pair[1] <= pair[0] {
                return Err(Error::NotIncreasing {
                    index: index + 1,
                    entry: pair[1],
                });
            }
        }
        Ok(Selection { entries })
    }

    /// The empty selection.
    pub fn empty() -> Self {
        Selection {
            entries: Vec::new(),
        }
    }

    /// The full selection `0, 1, …, n`.
    pub fn full(n: usize) -> Self {
        Selection {
            entries: (0..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Largest entry, if any.
    pub fn max(&self) -> Option<usize> {
        self.entries.last().copied()
    }

    /// The elements of `[0..n]` not in this selection, in increasing order.
    ///
    /// Requires every entry to lie within `0..=n`; sizes always satisfy
    /// `|x| + |complement(x, n)| = n + 1`.
    pub fn complement(&self, n: usize) -> Result<Selection> {
        if let Some(max) = self.max() {
            if max > n {
                return Err(Error::EntryOutOfRange {
                    entry: max,
                    bound: n,
                });
            }
        }
        let mut out = Vec::with_capacity(n + 1 - self.len());
        let mut inside = self.entries.iter().peekable();
        for v in 0..=n {
            if inside.peek() == Some(&&v) {
                inside.next();
            } else {
                out.push(v);
            }
        }
        Ok(Selection { entries: out })
    }
}

/// True iff `x` dominates `r` componentwise: `r_i <= x_i` for every `i`.
///
/// This single comparison chain is the fast invertibility criterion for
/// truncated Pascal matrices; the sweeps check it against the determinant.
pub fn dominates(r: &Selection, x: &Selection) -> Result<bool> {
    if r.len() != x.len() {
        return Err(Error::LengthMismatch {
            left: r.len(),
            right: x.len(),
        });
    }
    Ok(r.entries.iter().zip(&x.entries).all(|(a, b)| a <= b))
}

impl FromStr for Selection {
    type Err = Error;

    /// Parses a comma-separated list of decimal naturals ("0,2,4,7").
    /// An empty (or all-whitespace) string is the empty selection.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(Selection::empty());
        }
        let entries = trimmed
            .split(',')
            .map(|token| {
                token
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad selection entry {token:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Selection::new(entries)
    }
}

impl fmt::Display for Selection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for entry in &self.entries {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{entry}")?;
            first = false;
        }
        Ok(())
    }
}

impl Serialize for Selection {
    /// JSON form: a plain array of naturals.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Selection {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let entries = Vec::<usize>::deserialize(deserializer)?;
        Selection::new(entries).map_err(D::Error::custom)
    }
}
