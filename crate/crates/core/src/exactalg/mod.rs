//! Exact arithmetic: coefficient fields, monomials and term orders, sparse
//! weighted polynomials and matrices of polynomials.

mod field;
mod matrix;
mod monomial;
mod order;
mod poly;

pub use field::{Field, Zp};
pub use matrix::PolyMatrix;
pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub use poly::{Homogeneity, PolyRing, Polynomial};

pub use field::is_prime;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },
    #[error("index {index} out of range (length {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("weighted degree does not fit in 64 bits")]
    DegreeOverflow,
}
