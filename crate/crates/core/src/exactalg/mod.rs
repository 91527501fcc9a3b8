//! Exact integer and rational arithmetic: sparse matrices, polynomials in
//! `u`, determinants of polynomial matrices, truncated series, and the
//! power-quotient extraction used for the factorisation certificates.

mod det;
mod matrix;
mod poly;
mod power;
mod rational;
mod series;

use num_bigint::BigInt;
use thiserror::Error;

pub use det::{
    bareiss_det, det_one_minus_um, det_poly_matrix, evaluation_points, interpolate, PolyMatrix,
};
pub use matrix::SparseIntMatrix;
pub use poly::IntPolynomial;
pub use power::{divides_some_power, extract_power_quotient, PowerQuotient};
pub use rational::RationalFunction;
pub use series::{log_series, neg_log_derivative, series_inverse};

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("determinant exceeds the degree bound {bound}: interpolation residual is nonzero")]
    DegreeBoundViolated { bound: usize },
    #[error("interpolated polynomial has non-integral coefficients")]
    NonIntegralInterpolant,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("constant term {0} is not a unit in Z")]
    NotAUnit(BigInt),
    #[error("quotient is not an integer polynomial")]
    NonIntegralQuotient,
    #[error("precondition failed: {0}")]
    Precondition(String),
}
