//! Graded polynomial algebra over F₂.
//!
//! Variables are `X_1..X_d` plus a grading variable `t` standing for `q⁻¹`.
//! Every variable has codimension 1, so all presentation relations are
//! homogeneous polynomials and Buchberger runs in an honest polynomial ring.

mod element;
mod groebner;
mod monomial;
mod poly;
mod quotient;
pub mod univariate;

pub use element::{LaurentF2, QHElement};
pub use groebner::{buchberger, GroebnerBasis};
pub use monomial::Monomial;
pub use poly::F2Poly;
pub use quotient::{standard_monomials, QuotientRing};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("NonHomogeneousGenerator: generator {index} mixes codimensions")]
    NonHomogeneousGenerator { index: usize },
    #[error("expected {expected} variables, got {got}")]
    VariableCount { expected: usize, got: usize },
    #[error("InfiniteDimensional: no leading monomial is a power of variable {variable}")]
    InfiniteDimensional { variable: usize },
}

#[cfg(test)]
mod tests;
