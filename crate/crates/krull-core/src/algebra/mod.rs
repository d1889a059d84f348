//! Monoid algebras over the rationals: exact elements and prime witnesses.
//!
//! The algebra of an affine monoid `S` over ℚ has one basis monomial
//! `X^s` per monoid element. This layer provides exact sparse arithmetic
//! on such elements ([`AlgebraElement`]) and constructive certificates
//! tying the ideal theory of the algebra back to the monoid: the product
//! witness showing monomial primes are prime, a bounded verification that
//! height-one primes of weakly Krull monoids span maximal divisorial
//! ideals, monomial shifts moving group-algebra elements into the monoid
//! algebra, and the extension of facet valuations to algebra elements.

use alloc::string::String;
use core::fmt;

use crate::monoid::MonoidError;

mod element;
mod witness;

pub use element::AlgebraElement;
pub use witness::{
    facet_valuation_extend, monomial_shift_witness, prime_product_witness,
    verify_monomial_prime_t_max, MonomialPrime, ProductWitness, ShiftOutcome,
    TMaxVerification,
};

/// Failures of algebra-level operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    /// Two elements, or an element and a monoid, live in different
    /// ambient dimensions.
    ParentMismatch { expected: usize, found: usize },
    /// An operation was called outside its stated preconditions.
    PreconditionViolated { reason: String },
    /// Facet valuations extend only over monoids equal to their root
    /// closure.
    NotNormal,
    /// Malformed textual input.
    Parse { message: String },
    /// A monoid-level computation failed underneath an algebra operation.
    Monoid(MonoidError),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::ParentMismatch { expected, found } => write!(
                f,
                "ambient dimension mismatch: expected {expected}, found {found}"
            ),
            AlgebraError::PreconditionViolated { reason } => {
                write!(f, "precondition violated: {reason}")
            }
            AlgebraError::NotNormal => write!(
                f,
                "the monoid differs from its root closure, so facet valuations \
                 do not extend"
            ),
            AlgebraError::Parse { message } => write!(f, "parse error: {message}"),
            AlgebraError::Monoid(e) => write!(f, "monoid computation failed: {e}"),
        }
    }
}

impl core::error::Error for AlgebraError {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            AlgebraError::Monoid(e) => Some(e),
            _ => None,
        }
    }
}

impl From<MonoidError> for AlgebraError {
    fn from(e: MonoidError) -> Self {
        AlgebraError::Monoid(e)
    }
}
