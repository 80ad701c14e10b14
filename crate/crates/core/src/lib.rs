//! Defining ideals and explicit minimal graded free resolutions of affine
//! monomial curves `t -> (t^{m_0}, ..., t^{m_n})` whose exponents form an
//! arithmetic sequence, together with an independent Gröbner-basis oracle
//! that checks every construction.
//!
//! The algebra is generic over the coefficient [`Field`](exactalg::Field);
//! the aliases below fix the two backends used in practice.

pub mod closedform;
pub mod curve;
pub mod exactalg;
pub mod homology;
pub mod oracle;

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;
/// The default prime field for fast runs.
pub type Fp32003 = exactalg::Zp<32003>;

pub type QPolynomial = exactalg::Polynomial<Rational>;
pub type QPolyRing = exactalg::PolyRing<Rational>;
pub type QPolyMatrix = exactalg::PolyMatrix<Rational>;
