//! Exact integer linear algebra and polyhedral geometry.
//!
//! This layer knows nothing about monoids or algebras: it provides lattices
//! (Smith normal form, saturation, kernels), rational cones (double
//! description, facets, face lattices), Hilbert bases and exhaustive
//! membership search. All arithmetic is over arbitrary-precision integers.

use core::fmt;

pub mod cone;
pub mod face;
pub mod hilbert;
pub mod membership;
pub mod polytope;
pub mod snf;
pub mod vector;

pub use cone::{cone_of, dual_description, positive_grading, Cone, DualDescription};
pub use face::{face_lattice, Face, FaceLattice};
pub use hilbert::hilbert_basis;
pub use membership::{solve_membership, Membership, SearchCertificate};
pub use polytope::polytope_lattice_points;
pub use snf::{
    left_kernel_basis, row_lattice_basis, saturation_basis, smith_normal_form,
    solve_row_combination, unimodular_inverse, SmithNormalForm,
};
pub use vector::{IntMatrix, IntVector};

/// Failures of polyhedral operations whose preconditions are semantic, not
/// merely dimensional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeError {
    /// No functional is strictly positive on all generators (the generated
    /// cone contains a line).
    NotPositive,
    /// The cone contains a line, so no Hilbert basis exists.
    NotPointed,
    /// The polyhedron has a recession direction, so its lattice points
    /// cannot be enumerated.
    Unbounded,
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::NotPositive => {
                write!(f, "no strictly positive grading exists for these generators")
            }
            LatticeError::NotPointed => {
                write!(f, "the cone contains a line and has no Hilbert basis")
            }
            LatticeError::Unbounded => {
                write!(f, "the polyhedron is unbounded; lattice points cannot be enumerated")
            }
        }
    }
}

impl core::error::Error for LatticeError {}
