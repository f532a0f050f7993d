//! Exact rational arithmetic, sparse linear algebra and truncated series.

pub mod linalg;
pub mod matrix;
pub mod rational;
pub mod ring;
pub mod series;

pub use linalg::{determinant, inverse, nullspace, rank, to_sparse, RowEchelon, SparseVec, Subspace};
pub use matrix::QMatrix;
pub use rational::{binomial, fmt_rational, int, parse_rational, rat, Rational};
pub use ring::{Mat, Ring};
pub use series::{geometric_pole, series_inverse, series_substitute_shift, TruncatedSeries};
