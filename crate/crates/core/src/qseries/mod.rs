//! q-Pochhammer symbols, q-integers and terminating basic hypergeometric
//! series as exact rational functions of `q`, plus the specific sums and
//! closed forms whose congruences are checked in [`crate::verify`].
//!
//! Auxiliary parameters (`a`, `b`, `c`) are always exact rationals folded
//! into the coefficients, except where a parameter is itself a power of `q`
//! (the `_general` builders take rational-function parameters for that).

mod closed_forms;
mod series;

pub use closed_forms::*;
pub use series::{phi_series, q_integer, q_pochhammer, q_pochhammer_product, PhiSeriesSpec};

use thiserror::Error;

use crate::algebra::{AlgebraError, RationalFunction};

/// A q-object in canonical rational-function form.
pub type QExpression = RationalFunction;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QSeriesError {
    #[error("term {k} has a vanishing denominator factor from {parameter}")]
    ZeroTermDenominator { k: usize, parameter: String },
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("n = {n} is outside the residue class {expected}")]
    WrongResidueClass { n: usize, expected: &'static str },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
