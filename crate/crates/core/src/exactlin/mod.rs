//! Exact linear algebra over the rationals or a prime field.
//!
//! Everything downstream (Hom spaces, kernels, decompositions) is an exact
//! equality test, so there is no floating point anywhere in this crate.

mod matrix;
mod modular;
mod poly;
mod scalar;

pub use matrix::{Matrix, Rref};
pub use poly::{coprime_split, minimal_polynomial, Poly, SplitFactor};
pub use scalar::{ParseScalarError, Scalar};

/// Flatten a list of equally sized vectors into the columns of a matrix.
pub fn span_rank(rows: usize, vectors: &[Vec<Scalar>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_columns(rows, vectors).rank()
}
