//! Classification of the hyperplane sections `H_[A]` of `P(T_{P^n})`.

mod chart;
mod classify;
pub mod multipoly;
mod shape;

pub use chart::{local_chart_equation, ChartEquation, ChartEquationJson};
pub use classify::{
    classify, component_label, dual_membership, is_reducible, ReducibleKind, SectionReport,
    SingShape,
};
pub use multipoly::MultiPoly;
pub use shape::{v_shape_dim, VShape};

use thiserror::Error;

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SectionError {
    #[error("n = {0} is not allowed; sections of P(T_P^n) are classified for n >= 2")]
    BadN(usize),
    #[error("matrix is {rows}x{cols}; n = {n} needs a {size}x{size} matrix", size = n + 1)]
    DimensionMismatch { rows: usize, cols: usize, n: usize },
    #[error("scalar matrix is the zero class in W and does not define a hyperplane section")]
    ScalarMatrix,
    #[error("invalid V-shape: s = {s} exceeds r = {r}")]
    BadShape { s: usize, r: usize },
    #[error("chart indices i = {i}, j = {j} must be distinct and at most n = {n}")]
    ChartIndices { i: usize, j: usize, n: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
