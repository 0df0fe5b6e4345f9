//! Exact polynomial arithmetic over the integers.
//!
//! [`Poly2`] is the universal value type: a sparse polynomial in `s` and
//! `t`. [`Poly1`] holds univariate images (coefficient generating
//! functions, `q`-specializations, Chebyshev polynomials). [`CoeffSeq`]
//! is the coefficient sequence of a weighted-homogeneous [`Poly2`].

mod coeff;
mod poly1;
mod poly2;

pub use coeff::CoeffSeq;
pub use poly1::Poly1;
pub use poly2::{Monomial, Poly2, PolyJson, TermJson};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("quotient is not a polynomial with integer coefficients")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial has monomials of different weight s_exp + 2*t_exp")]
    NotWeightedHomogeneous,
    #[error("the zero polynomial has no coefficient sequence")]
    ZeroPolynomial,
    #[error("malformed polynomial: {0}")]
    Parse(String),
}

/// Exact real-rootedness of a nonzero univariate polynomial.
pub fn real_rooted(f: &Poly1) -> bool {
    f.is_real_rooted()
}
