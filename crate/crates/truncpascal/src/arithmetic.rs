//! Exact scalar arithmetic: arbitrary-precision integers and rationals,
//! plus the binomial and factorial builders everything else leans on.
//!
//! The zero convention matters throughout the crate: `binom(j, i)` is 0
//! whenever `i > j`, which is exactly what makes truncated Pascal matrices
//! singular below the dominance threshold.

use num::{One, Zero};

/// Arbitrary-precision signed integer. Closed under addition, subtraction
/// and multiplication; division is only ever performed where it is exact.
pub type ExactInt = num::BigInt;

/// Arbitrary-precision rational, kept in lowest terms with a positive
/// denominator by construction. Parses and prints as `p` or `p/q`.
pub type ExactRational = num::BigRational;

/// Binomial coefficient `C(j, i)`, with `C(j, i) = 0` whenever `i > j`.
///
/// Computed by the multiplicative formula with a running exact division at
/// every step, so intermediates never exceed the final value times `j`.
pub fn binom(j: usize, i: usize) -> ExactInt {
    if i > j {
        return ExactInt::zero();
    }
    // C(j, i) = C(j, j - i); walking the smaller side keeps the loop short.
    let k = i.min(j - i);
    let mut acc = ExactInt::one();
    for t in 1..=k {
        // acc holds C(j - k + t - 1, t - 1); the division below is exact.
        acc = acc * ExactInt::from(j - k + t) / ExactInt::from(t);
    }
    acc
}

/// Factorial `i!` by repeated multiplication.
pub fn factorial(i: usize) -> ExactInt {
    let mut acc = ExactInt::one();
    for t in 2..=i {
        acc *= ExactInt::from(t);
    }
    acc
}
