//! Affine monoids and their multiplicative ideal theory.
//!
//! An affine monoid is a finitely generated submonoid of ℤ^d, written
//! additively. This layer decides the classical ladder of factorization
//! properties — Krull, generalized Krull, weakly Krull, GCD, weakly
//! factorial — by exact polyhedral computations: no floating point, no
//! randomized shortcuts. Every positive answer carries a certificate and
//! every negative answer carries a witness element; questions outside the
//! supported fragment are answered `Unsupported` with a reason instead of a
//! guess.

use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;

use crate::lattice::IntVector;

pub mod build;
pub mod closure;
pub mod ideal;
pub mod properties;
pub mod spectrum;

pub use build::{AffineMonoid, ReducedForm};
pub use closure::{conductor_element, is_krull, root_closure};
pub use ideal::{ideal_dual, is_t_ideal, v_closure};
pub use properties::{
    divisor_class_group, is_gcd, is_generalized_krull, is_weakly_factorial, is_weakly_krull,
    weakly_krull_oracle, MonoidReport, OracleOutcome,
};
pub use spectrum::{
    local_membership, primary_component_exponents, prime_spectrum, PrimeIdeal,
};

/// Largest supported ambient dimension for monoid construction.
pub const DIMENSION_LIMIT: usize = 4;

/// Failures of monoid-level operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonoidError {
    /// The ambient dimension exceeds [`DIMENSION_LIMIT`].
    UnsupportedDimension { dim: usize },
    /// A generator does not live in the declared ambient space.
    GeneratorDimensionMismatch { expected: usize, found: usize },
    /// An ideal computation hit its degree bound before it could certify
    /// completeness; rerun with a larger bound.
    BoundExceeded { bound: BigInt },
    /// An enumeration grew past the per-computation point budget; the
    /// monoid is too large for exact analysis at this scale.
    BudgetExceeded { points: usize },
    /// The unit group is not a direct summand of the quotient group, so the
    /// ideal-theoretic reduction to a reduced monoid is unavailable.
    UnitGroupNotSplit,
    /// The operation is defined only for monoids equal to their root
    /// closure.
    NotNormal,
}

impl fmt::Display for MonoidError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidError::UnsupportedDimension { dim } => write!(
                f,
                "ambient dimension {dim} exceeds the supported limit {DIMENSION_LIMIT}"
            ),
            MonoidError::GeneratorDimensionMismatch { expected, found } => write!(
                f,
                "generator has dimension {found}, expected {expected}"
            ),
            MonoidError::BoundExceeded { bound } => write!(
                f,
                "degree bound {bound} exceeded before completeness could be certified"
            ),
            MonoidError::BudgetExceeded { points } => write!(
                f,
                "enumeration budget of {points} lattice points exhausted; the monoid \
                 is too large for exact analysis at this scale"
            ),
            MonoidError::UnitGroupNotSplit => write!(
                f,
                "the unit group does not split off as a direct summand; ideal-theoretic \
                 computations are unsupported for this monoid"
            ),
            MonoidError::NotNormal => write!(
                f,
                "the monoid differs from its root closure, so the requested invariant \
                 is undefined"
            ),
        }
    }
}

impl core::error::Error for MonoidError {}

/// Three-valued answer of a property decider.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Unsupported,
}

/// A decided property with its evidence: a certificate summary for `Holds`,
/// a witness element for `Fails` where one exists, or the reason the
/// question is outside the supported fragment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub verdict: Verdict,
    pub detail: String,
    /// Witness element in ambient coordinates, when the property fails
    /// because of a specific element.
    pub witness: Option<IntVector>,
}

impl Decision {
    pub fn holds(detail: String) -> Self {
        Decision {
            verdict: Verdict::Holds,
            detail,
            witness: None,
        }
    }

    pub fn fails(detail: String, witness: Option<IntVector>) -> Self {
        Decision {
            verdict: Verdict::Fails,
            detail,
            witness,
        }
    }

    pub fn unsupported(reason: String) -> Self {
        Decision {
            verdict: Verdict::Unsupported,
            detail: reason,
            witness: None,
        }
    }

    pub fn is_holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }

    pub fn is_fails(&self) -> bool {
        self.verdict == Verdict::Fails
    }

    pub fn is_unsupported(&self) -> bool {
        self.verdict == Verdict::Unsupported
    }
}
