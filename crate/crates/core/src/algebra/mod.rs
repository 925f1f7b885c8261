//! Exact linear algebra and univariate polynomials over `Q` and `F_q`.

pub mod eigen;
pub mod field;
pub mod matrix;
pub mod poly;
pub mod quotient;
pub mod roots;

pub use eigen::{
    distinct_eigenvalues, eigen_structure, ClassSignature, EigenClass, EigenStructure,
};
pub use field::{Field, PrimeField, Rationals};
pub use matrix::Matrix;
pub use poly::{Poly, PolyRing};
pub use quotient::QuotientContext;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("not a rational number: {0:?} (expected \"p\" or \"p/q\")")]
    BadRational(String),
    #[error("modulus {0} is not an admissible prime (need 2 < q < 2^31)")]
    BadModulus(u64),
    #[error("rows have different lengths")]
    Ragged,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix has size {0}; need at least 3x3 (n >= 2)")]
    TooSmall(usize),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("quotient modulus must have positive degree")]
    ConstantModulus,
    #[error("quotient modulus must be squarefree")]
    NotSquarefree,
}
