//! Exact sparse multivariate polynomials and rational functions over ℚ.

mod gcd;
mod linalg;
mod monomial;
mod parse;
mod polynomial;
mod rational;
mod registry;

pub use gcd::{gcd, lcm};
pub use linalg::{exact_generic_rank, jacobian, rank_at_point, rank_of_matrix, solve_unique, RankConfig};
pub use monomial::Monomial;
pub use parse::{parse_polynomial, parse_rational};
pub use polynomial::{Coeff, Polynomial, TermAccumulator};
pub use rational::{substitute_poly, RationalFunction};
pub use registry::{is_valid_name, Limits, Ring, VarId};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("variable registry is full ({0} variables)")]
    TooManyVariables(usize),
    #[error("operands belong to different variable registries")]
    RingMismatch,
    #[error("total degree {degree} exceeds the configured limit {limit}")]
    DegreeLimit { degree: u32, limit: u32 },
    #[error("division by zero: {0}")]
    DivisionByZero(String),
    #[error("{0}")]
    NotHomogeneous(String),
    #[error("variable `{0}` has no value")]
    UnboundVariable(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("every sampled point ({attempts} attempts) hit a vanishing denominator")]
    RankSampling { attempts: usize },
}

/// Rationals from integers, used everywhere constants appear.
pub fn q(n: i64) -> Coeff {
    Coeff::from_integer(n.into())
}
