//! Exhaustive membership search for finitely generated submonoids of ℤ^d.
//!
//! Given a positive grading, every representation of a target as a
//! nonnegative integer combination of generators has multiplicities bounded
//! by degree, so depth-first search with degree pruning is a decision
//! procedure, not a heuristic. Generators are consumed left to right with
//! ascending multiplicities, so the first representation found is the
//! lexicographically smallest one.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::vector::IntVector;

/// Outcome of [`solve_membership`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// `target = Σ multiplicities[i] · gens[i]`, lexicographically smallest.
    Present { multiplicities: Vec<BigInt> },
    /// No representation exists; the certificate records the finite search
    /// space that was exhausted.
    Absent { search: SearchCertificate },
}

/// Proof of absence: the search covered all multiplicity vectors with
/// `m[i] ≤ bounds[i]`, which is exhaustive because the grading is positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchCertificate {
    /// Grading degree of the target (negative degrees are immediately absent).
    pub degree: BigInt,
    /// Per-generator multiplicity bound implied by the degree.
    pub bounds: Vec<BigInt>,
}

/// Decides whether `target` is a nonnegative integer combination of `gens`.
/// The grading must be strictly positive on every generator.
pub fn solve_membership(target: &IntVector, gens: &[IntVector], grading: &IntVector) -> Membership {
    let degrees: Vec<BigInt> = gens.iter().map(|g| grading.dot(g)).collect();
    assert!(
        degrees.iter().all(|d| d.is_positive()),
        "solve_membership requires a grading positive on all generators"
    );
    let target_degree = grading.dot(target);
    let bounds: Vec<BigInt> = degrees.iter().map(|d| &target_degree / d).collect();
    if target_degree.is_negative() {
        return Membership::Absent {
            search: SearchCertificate {
                degree: target_degree,
                bounds: alloc::vec![BigInt::zero(); gens.len()],
            },
        };
    }

    let mut multiplicities = alloc::vec![BigInt::zero(); gens.len()];
    if search(target.clone(), target_degree.clone(), 0, gens, &degrees, &mut multiplicities) {
        Membership::Present { multiplicities }
    } else {
        Membership::Absent {
            search: SearchCertificate {
                degree: target_degree,
                bounds,
            },
        }
    }
}

fn search(
    residual: IntVector,
    residual_degree: BigInt,
    index: usize,
    gens: &[IntVector],
    degrees: &[BigInt],
    multiplicities: &mut Vec<BigInt>,
) -> bool {
    if residual_degree.is_zero() {
        // a positive grading forces all remaining multiplicities to zero
        if residual.is_zero() {
            for m in multiplicities.iter_mut().skip(index) {
                *m = BigInt::zero();
            }
            return true;
        }
        return false;
    }
    if index == gens.len() {
        return false;
    }
    if index + 1 == gens.len() {
        // last generator: the residual must be an exact multiple
        let (q, r) = num_integer::div_rem(residual_degree, degrees[index].clone());
        if !r.is_zero() {
            return false;
        }
        if residual == gens[index].scale(&q) {
            multiplicities[index] = q;
            return true;
        }
        return false;
    }
    let mut m = BigInt::zero();
    let mut rest = residual;
    let mut rest_degree = residual_degree;
    loop {
        if rest_degree.is_negative() {
            return false;
        }
        multiplicities[index] = m.clone();
        if search(rest.clone(), rest_degree.clone(), index + 1, gens, degrees, multiplicities) {
            return true;
        }
        m += 1;
        rest = &rest - &gens[index];
        rest_degree -= &degrees[index];
    }
}
