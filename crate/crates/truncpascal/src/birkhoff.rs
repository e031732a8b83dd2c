//! Normalized derivative-evaluation functionals and the interpolation
//! systems they generate: Λᵀ·V matrices for the monomial basis, the
//! block-extended square system of a selection pair, and the system
//! attached to an incidence matrix at a chosen node pair.

use crate::arithmetic::{binom, ExactRational};
use crate::error::{Error, Result};
use crate::incidence::IncidenceMatrix;
use crate::matrix::ExactMatrix;
use crate::selection::Selection;
use num::{One, Zero};

/// One interpolation condition: the normalized functional
/// `f ↦ f^(order)(node) / order!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functional {
    node: ExactRational,
    order: usize,
}

impl Functional {
    pub fn new(node: ExactRational, order: usize) -> Self {
        Functional { node, order }
    }

    pub fn node(&self) -> &ExactRational {
        &self.node
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Action on the monomial `t^degree`: `C(degree, order) ·
    /// node^(degree − order)`, and `0` whenever `order > degree`.
    pub fn apply(&self, degree: usize) -> ExactRational {
        if self.order > degree {
            return ExactRational::zero();
        }
        let coefficient = ExactRational::from_integer(binom(degree, self.order));
        coefficient * num::pow::pow(self.node.clone(), degree - self.order)
    }
}

/// The functionals `δ_node D^i / i!` for each order `i` in the selection.
pub fn taylor_functionals(node: &ExactRational, orders: &Selection) -> Vec<Functional> {
    orders
        .entries()
        .iter()
        .map(|&i| Functional::new(node.clone(), i))
        .collect()
}

/// A family of functionals paired with a monomial basis: row `i`, column
/// `j` of its matrix is `functionals[i]` applied to `t^degrees[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BirkhoffSystem {
    functionals: Vec<Functional>,
    degrees: Vec<usize>,
}

impl BirkhoffSystem {
    pub fn new(functionals: Vec<Functional>, degrees: Vec<usize>) -> Self {
        BirkhoffSystem {
            functionals,
            degrees,
        }
    }

    pub fn functionals(&self) -> &[Functional] {
        &self.functionals
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn is_square(&self) -> bool {
        self.functionals.len() == self.degrees.len()
    }

    /// The Λᵀ·V matrix of the system.
    pub fn system_matrix(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.functionals.len(), self.degrees.len(), |i, j| {
            self.functionals[i].apply(self.degrees[j])
        })
    }
}

/// The square (n+1)×(n+1) system `[Λ₁(r), Λ₀(x̄)]ᵀ · V(x, x̄)`: node-1
/// functionals with orders `r` stacked over node-0 functionals with orders
/// `x̄`, applied to the monomials `t^x` then `t^x̄`.
///
/// Its upper-left block is the truncated Pascal matrix of `(r, x)`, the
/// lower-left block is zero, and the lower-right is an identity, so its
/// determinant equals `det(truncated(r, x))` — a square invertibility
/// proxy even though the selections need not exhaust `[0..n]`.
pub fn extended_system(r: &Selection, x: &Selection, n: usize) -> Result<ExactMatrix> {
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

    let mut functionals = taylor_functionals(&ExactRational::one(), r);
    functionals.extend(taylor_functionals(&ExactRational::zero(), &x_complement));

    let mut degrees = x.entries().to_vec();
    degrees.extend_from_slice(x_complement.entries());

    Ok(BirkhoffSystem::new(functionals, degrees).system_matrix())
}

/// The Birkhoff system of an incidence matrix: one functional per
/// 1-entry, scanned row-major (row `i` at node `nodes.i`, column `j` as
/// order `j`), over the full monomial basis `1, t, …, t^n`. Always square.
pub fn system_from_incidence(
    e: &IncidenceMatrix,
    nodes: (ExactRational, ExactRational),
) -> BirkhoffSystem {
    let width = e.width();
    let node_for = [nodes.0, nodes.1];
    let mut functionals = Vec::with_capacity(width);
    for (row, node) in node_for.iter().enumerate() {
        for col in 0..width {
            if e.get(row, col) {
                functionals.push(Functional::new(node.clone(), col));
            }
        }
    }
    BirkhoffSystem::new(functionals, (0..width).collect())
}
