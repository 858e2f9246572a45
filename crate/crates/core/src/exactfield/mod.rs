//! Prime-field scalars, dense and row-compressed matrices, and univariate
//! polynomials.

mod field;
mod gf2;
mod matrix;
mod poly;
mod sparse;
pub mod text;

pub use field::{dlog_table, DiscreteLog, PrimeField};
pub(crate) use field::prime_divisors;
pub use matrix::{linear_combination, EchelonBasis, Matrix, Rref};
pub(crate) use poly::factor;
pub use poly::Polynomial;
pub use sparse::{ProductChecker, SparseRows};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("modulus {0} outside the supported range 2..=2^31")]
    ModulusOutOfRange(u64),
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
}

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("the zero polynomial has no irreducibility verdict")]
    ZeroPolynomial,
    #[error("minimal polynomial needs a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
}
