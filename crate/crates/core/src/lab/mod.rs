//! Point counts over small prime fields, used as an independent check on the
//! classifier.

mod catalog;
mod conjugate;
mod count;
mod finite;
mod points;
mod verify;

pub use catalog::{
    default_catalog, parse_catalog, run_entry, BlockSpec, CatalogEntry, EntryOutcome, RunOptions,
    Status,
};
pub use conjugate::{random_conjugate, random_invertible};
pub use count::count_v;
pub use finite::{FiniteSection, SplitClass, DEFAULT_MAX_N};
pub use points::{projective_points, PointPair, ProjPoint};
pub use verify::{
    chart_singular_points, verify_chart_consistency, verify_chart_cover, verify_reducible_split,
    verify_sing_prediction, ChartCheck, CountReport, ShapeCount, SplitCheck,
};

use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::section::SectionError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("n = {0} is not allowed; need n >= 2")]
    BadN(usize),
    #[error("n = {n} exceeds the enumeration limit {max}")]
    TooLarge { n: usize, max: usize },
    #[error("scalar matrix is the zero class in W and does not define a hyperplane section")]
    ScalarMatrix,
    #[error("characteristic polynomial does not split over F_{q}")]
    DoesNotSplit { q: u64 },
    #[error("section is not reducible: no eigenvalue with rank(A - λI) = 1")]
    NotReducible,
    #[error("invalid V-shape: s = {s}, r = {r}")]
    BadShape { s: usize, r: usize },
    #[error("catalog entry {0:?}: {1}")]
    BadEntry(String, String),
    #[error("catalog is not valid JSON: {0}")]
    BadCatalog(String),
    #[error("catalog is empty")]
    EmptyCatalog,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Section(#[from] SectionError),
}
