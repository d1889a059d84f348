//! Exact decision procedures for the Krull property ladder of affine monoids
//! and their monoid algebras over a field.
//!
//! The crate is organised in four layers:
//!
//! * [`lattice`] — integer linear algebra: Smith normal form, rational cones
//!   and their face lattices, Hilbert bases, bounded knapsack membership.
//! * [`monoid`] — affine monoids `S ⊆ ℤ^d`: normalization, prime spectrum,
//!   fractional ideal duals, and the property deciders (Krull, weakly Krull,
//!   generalized Krull, GCD, weakly factorial) with machine-checkable
//!   witnesses.
//! * [`algebra`] — sparse elements of the monoid algebra `K[S]` with rational
//!   coefficients: product witnesses for monomial primes, shift witnesses,
//!   facet valuations, and a bounded t-maximality verification.
//! * [`dyadic`] — Laurent polynomials with dyadic exponents `a/2^n`, used to
//!   exercise the failure of the finite-character condition in the limit
//!   group `⟨1/2^n : n⟩ ⊆ ℚ`.
//!
//! All arithmetic is exact (arbitrary-precision integers and rationals); no
//! floating point is used anywhere. Every decision is either definite with a
//! witness/certificate, or reported as `Unsupported`/`BoundExceeded` — never
//! silently approximated.
//!
//! The crate is `no_std` (it requires `alloc`); IO, serialization and the
//! command line front end live in the companion crate `krull-cli`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod dyadic;
pub mod lattice;
pub mod monoid;

pub use lattice::{IntMatrix, IntVector};
