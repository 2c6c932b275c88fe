//! Exact arithmetic over the Gaussian rationals: scalars, sparse
//! multivariate polynomials, and truncated power series.

mod poly;
mod scalar;
pub mod series;
mod trunc;
mod var;

pub use poly::{Monomial, MultiPoly};
pub use scalar::{format_rational, ExactScalar};
pub use series::{elementary_series, exp_series, ElementaryKind, SeriesOp, TruncSeries, DEFAULT_ORDER};
pub use trunc::{Truncation, DEFAULT_TOTAL_ORDER};
pub use var::{Var, VarKind};

/// `lhs op rhs` for the three ring operations.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(lhs: &MultiPoly, rhs: &MultiPoly, op: PolyOp) -> MultiPoly {
    match op {
        PolyOp::Add => lhs + rhs,
        PolyOp::Sub => lhs - rhs,
        PolyOp::Mul => lhs * rhs,
    }
}
