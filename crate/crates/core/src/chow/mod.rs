//! Intersection theory on a smooth hyperplane section of `P(T_{P^n})`.

mod oracle;
mod parse;
mod ring;

pub use oracle::bidegree_oracle;
pub use parse::parse_expression;
pub use ring::{BasisElement, ChowClass, ChowRing};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChowError {
    #[error("n = {0} is not allowed; the ring is defined for n >= 2")]
    BadN(u32),
    #[error("E{k} is out of range; n = {n} allows E0..E{n}")]
    ExcIndex { k: u32, n: u32 },
    #[error("classes live in different rings (n = {left} and n = {right})")]
    RingMismatch { left: u32, right: u32 },
    #[error("class has a component of degree {degree}; the top degree is {top}")]
    NotTopDegree { degree: u32, top: u32 },
    #[error("degree {k} is outside 0..={top}")]
    DegreeOutOfRange { k: u32, top: u32 },
    #[error("bidegree oracle needs a + b = 2n - 2 (got a = {a}, b = {b}, n = {n})")]
    OracleDegree { n: u32, a: u32, b: u32 },
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
}
