//! Exact enumeration of lattice points in bounded polyhedra.
//!
//! The polyhedron is given by inequalities `a·x ≥ b`. Fourier–Motzkin
//! elimination produces, for each coordinate, the complete set of
//! inequalities involving no later coordinate; nested loops with exact
//! ceiling/floor bounds then enumerate all integer points in ascending
//! lexicographic order. Unbounded input is reported as an error rather than
//! silently truncated.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::vector::IntVector;
use super::LatticeError;

/// All integer points of `{x ∈ ℤ^dim : a·x ≥ b for all (a, b)}`, in
/// ascending lexicographic order. Fails with [`LatticeError::Unbounded`] if
/// the polyhedron has a recession direction.
pub fn polytope_lattice_points(
    rows: &[(IntVector, BigInt)],
    dim: usize,
) -> Result<Vec<IntVector>, LatticeError> {
    for (a, _) in rows {
        assert_eq!(a.dim(), dim, "inequality dimension mismatch");
    }
    let mut pending: Vec<(IntVector, BigInt)> = rows.iter().map(normalize_row).collect();
    pending.sort();
    pending.dedup();

    // buckets[c]: inequalities whose highest involved coordinate is c
    let mut buckets: Vec<Vec<(IntVector, BigInt)>> = alloc::vec![Vec::new(); dim];
    for c in (0..dim).rev() {
        let (with_c, without_c): (Vec<_>, Vec<_>) =
            pending.into_iter().partition(|(a, _)| !a[c].is_zero());
        pending = without_c;
        // combine each lower bound on x_c with each upper bound
        let mut derived: Vec<(IntVector, BigInt)> = Vec::new();
        for (al, bl) in with_c.iter().filter(|(a, _)| a[c].is_positive()) {
            for (au, bu) in with_c.iter().filter(|(a, _)| a[c].is_negative()) {
                let alpha = &al[c];
                let beta = &au[c];
                // al·x ≥ bl gives x_c ≥ …, au·x ≥ bu gives x_c ≤ …;
                // compatibility is α·(au) − β·(al) ≥ α·bu − β·bl on x₀..x_{c−1}
                let coeffs = &au.scale(alpha) - &al.scale(beta);
                let bound = alpha * bu - beta * bl;
                debug_assert!(coeffs[c].is_zero());
                derived.push(normalize_row(&(coeffs, bound)));
            }
        }
        derived.sort();
        derived.dedup();
        pending.extend(derived);
        pending.sort();
        pending.dedup();
        assert!(
            pending.len() <= 100_000,
            "inequality system too large for exact elimination"
        );
        buckets[c] = with_c;
    }

    // leftover rows have no variables: they are global feasibility checks
    for (_, b) in &pending {
        if b.is_positive() {
            return Ok(Vec::new());
        }
    }

    // a bounded polytope needs both bound directions at every level
    for (c, bucket) in buckets.iter().enumerate() {
        let has_lower = bucket.iter().any(|(a, _)| a[c].is_positive());
        let has_upper = bucket.iter().any(|(a, _)| a[c].is_negative());
        if !has_lower || !has_upper {
            return Err(LatticeError::Unbounded);
        }
    }

    let mut out = Vec::new();
    let mut prefix: Vec<BigInt> = Vec::with_capacity(dim);
    enumerate(&buckets, dim, &mut prefix, &mut out);
    Ok(out)
}

fn enumerate(
    buckets: &[Vec<(IntVector, BigInt)>],
    dim: usize,
    prefix: &mut Vec<BigInt>,
    out: &mut Vec<IntVector>,
) {
    let c = prefix.len();
    if c == dim {
        out.push(IntVector::new(prefix.clone()));
        return;
    }
    let mut lo: Option<BigInt> = None;
    let mut hi: Option<BigInt> = None;
    for (a, b) in &buckets[c] {
        let mut rest = b.clone();
        for (i, p) in prefix.iter().enumerate() {
            rest -= &a[i] * p;
        }
        // a[c]·x_c ≥ rest
        let coeff = &a[c];
        if coeff.is_positive() {
            let candidate = rest.div_ceil(coeff);
            if lo.as_ref().is_none_or(|current| candidate > *current) {
                lo = Some(candidate);
            }
        } else {
            let candidate = rest.div_floor(coeff);
            if hi.as_ref().is_none_or(|current| candidate < *current) {
                hi = Some(candidate);
            }
        }
    }
    let (Some(lo), Some(hi)) = (lo, hi) else {
        unreachable!("boundedness was checked before enumeration");
    };
    let mut v = lo;
    while v <= hi {
        prefix.push(v.clone());
        enumerate(buckets, dim, prefix, out);
        prefix.pop();
        v += 1;
    }
}

/// Divides an inequality by the gcd of all its numbers.
fn normalize_row(row: &(IntVector, BigInt)) -> (IntVector, BigInt) {
    let (a, b) = row;
    let mut g = b.abs();
    for x in a.iter() {
        g = g.gcd(x);
    }
    if g.is_zero() || g == BigInt::from(1) {
        return (a.clone(), b.clone());
    }
    let coords: Vec<BigInt> = a.iter().map(|x| x / &g).collect();
    (IntVector::new(coords), b / &g)
}
