//! Hilbert bases: the unique minimal generating set of the monoid of lattice
//! points in a pointed rational cone.
//!
//! The cone is intersected with an arbitrary sublattice, reduced to full
//! dimension by a unimodular change of coordinates, covered by simplicial
//! subcones (a pulling cover built from the face lattice), and the candidate
//! points — fundamental-parallelepiped points of each simplex plus the
//! primitive ray generators — are minimalized in increasing order of a
//! positive grading.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::cone::{cone_of, dual_description, positive_grading, Cone};
use super::face::{face_lattice, FaceLattice};
use super::snf::{left_kernel_basis, row_lattice_basis, smith_normal_form, unimodular_inverse};
use super::vector::{IntMatrix, IntVector};
use super::LatticeError;

/// Hilbert basis of `cone ∩ L` for the sublattice `L` spanned by the rows of
/// `lattice_basis`. Fails with [`LatticeError::NotPointed`] when the cone
/// contains a line, since no minimal generating set exists then.
pub fn hilbert_basis(
    c: &Cone,
    lattice_basis: &IntMatrix,
) -> Result<Vec<IntVector>, LatticeError> {
    if !c.is_pointed() {
        return Err(LatticeError::NotPointed);
    }
    let d = c.ambient_dim();
    assert_eq!(lattice_basis.ncols(), d, "lattice basis dimension mismatch");

    // basis of span(cone) ∩ L: lattice vectors orthogonal to the orthogonal
    // complement of the span
    let reduced = IntMatrix::from_rows(row_lattice_basis(lattice_basis), d);
    let complement = left_kernel_basis(&c.span_basis().transpose());
    let section_basis = if complement.is_empty() {
        reduced
    } else {
        let w = IntMatrix::from_rows(complement, d);
        let k = reduced.mul(&w.transpose());
        let coeffs = left_kernel_basis(&k);
        let rows: Vec<IntVector> = coeffs.iter().map(|cf| reduced.apply_left(cf)).collect();
        IntMatrix::from_rows(rows, d)
    };
    if section_basis.nrows() == 0 {
        return Ok(Vec::new());
    }

    // the cone inside the section, in section coordinates
    let m = section_basis.nrows();
    let constraints: Vec<IntVector> = c
        .facets()
        .iter()
        .map(|f| section_basis.transpose().apply_left(f))
        .collect();
    let dd = dual_description(&constraints, m);
    assert!(
        dd.lineality.is_empty(),
        "a pointed cone cannot acquire lineality in a section"
    );
    if dd.rays.is_empty() {
        return Ok(Vec::new());
    }

    // reduce once more to the saturated span of the section cone, so the
    // working cone is full-dimensional and the working lattice is ℤ^μ
    let snf = smith_normal_form(&IntMatrix::from_rows(dd.rays.clone(), m));
    let mu = snf.rank();
    let to_section = IntMatrix::from_rows(
        (0..mu).map(|i| snf.right_inv.row(i).clone()).collect(),
        m,
    );
    let from_section = unimodular_inverse(&snf.right_inv);
    let rays: Vec<IntVector> = dd
        .rays
        .iter()
        .map(|r| {
            let full = from_section.apply_left(r);
            debug_assert!(full.coords()[mu..].iter().all(|x| x.is_zero()));
            IntVector::new(full.coords()[..mu].to_vec())
        })
        .collect();

    let work_cone = cone_of(&rays);
    debug_assert!(work_cone.is_pointed() && work_cone.dim() == mu);
    let grading = positive_grading(&rays).expect("pointed cones admit positive gradings");

    let candidates = candidate_points(&work_cone, &rays);
    let basis = minimalize(candidates, &work_cone, &grading);

    // map back to ambient coordinates
    let mut out: Vec<IntVector> = basis
        .into_iter()
        .map(|x| section_basis.apply_left(&to_section.apply_left(&x)))
        .collect();
    out.sort();
    Ok(out)
}

/// All irreducible lattice points of a full-dimensional pointed cone lie
/// among the fundamental-parallelepiped points of a simplicial cover plus
/// the primitive ray generators.
fn candidate_points(work_cone: &Cone, rays: &[IntVector]) -> BTreeSet<IntVector> {
    let mu = work_cone.dim();
    let fl = face_lattice(work_cone);
    let simplices = simplicial_cover(&fl);

    let mut candidates: BTreeSet<IntVector> = rays.iter().cloned().collect();
    for simplex in simplices {
        let rows: Vec<IntVector> = simplex.iter().map(|&i| rays[i].clone()).collect();
        let r = IntMatrix::from_rows(rows.clone(), mu);
        let det = r.det();
        debug_assert!(!det.is_zero(), "cover simplices must be nondegenerate");
        let adj = r.adjugate();

        // bounding box of the closed parallelepiped spanned by the rows
        let lo: Vec<BigInt> = (0..mu)
            .map(|j| rows.iter().map(|row| row[j].clone()).filter(|x| x.is_negative()).sum())
            .collect();
        let hi: Vec<BigInt> = (0..mu)
            .map(|j| rows.iter().map(|row| row[j].clone()).filter(|x| x.is_positive()).sum())
            .collect();

        let mut point = lo.clone();
        'points: loop {
            let x = IntVector::new(point.clone());
            if !x.is_zero() && in_half_open_parallelepiped(&x, &adj, &det) {
                candidates.insert(x);
            }
            // odometer increment over the box
            let mut pos = mu;
            loop {
                if pos == 0 {
                    break 'points;
                }
                pos -= 1;
                point[pos] += 1;
                if point[pos] <= hi[pos] {
                    break;
                }
                point[pos] = lo[pos].clone();
            }
        }
    }
    candidates
}

/// Does `x = t · R` hold with all `tᵢ ∈ [0,1)`? Checked exactly via the
/// adjugate: `t = x·adj/det`.
fn in_half_open_parallelepiped(x: &IntVector, adj: &IntMatrix, det: &BigInt) -> bool {
    let scaled = adj.apply_left(x);
    scaled.iter().all(|num| {
        if det.is_positive() {
            !num.is_negative() && num < det
        } else {
            !num.is_positive() && num > det
        }
    })
}

/// Pulling cover: recursively cover each face by pyramids over the facets
/// not containing its smallest generator. Returns index sets into the cone
/// generators; each index set is linearly independent of full size.
fn simplicial_cover(fl: &FaceLattice) -> Vec<Vec<usize>> {
    let mut memo: Vec<Option<Vec<Vec<usize>>>> = alloc::vec![None; fl.len()];
    cover_face(fl, fl.whole_cone(), &mut memo)
}

fn cover_face(fl: &FaceLattice, face: usize, memo: &mut Vec<Option<Vec<Vec<usize>>>>) -> Vec<Vec<usize>> {
    if let Some(cached) = &memo[face] {
        return cached.clone();
    }
    let f = &fl.faces()[face];
    let result = if f.dim == 0 {
        Vec::new()
    } else if f.dim == 1 {
        let &idx = f.support.iter().next().expect("one-dimensional faces have a generator");
        alloc::vec![alloc::vec![idx]]
    } else {
        let apex = *f.support.iter().next().expect("positive-dimensional faces have generators");
        let mut simplices = Vec::new();
        for child in fl.children(face) {
            if fl.faces()[child].support.contains(&apex) {
                continue;
            }
            for mut sigma in cover_face(fl, child, memo) {
                sigma.push(apex);
                simplices.push(sigma);
            }
        }
        simplices
    };
    memo[face] = Some(result.clone());
    result
}

/// Keeps exactly the irreducible candidates: processed in increasing order
/// of grading degree, a point is dropped iff subtracting an already-kept
/// point of strictly smaller degree lands back in the cone.
fn minimalize(candidates: BTreeSet<IntVector>, work_cone: &Cone, grading: &IntVector) -> Vec<IntVector> {
    let mut graded: Vec<(BigInt, IntVector)> = candidates
        .into_iter()
        .map(|x| (grading.dot(&x), x))
        .collect();
    graded.sort();
    let mut kept: Vec<(BigInt, IntVector)> = Vec::new();
    for (deg, x) in graded {
        let reducible = kept
            .iter()
            .filter(|(kd, _)| *kd < deg)
            .any(|(_, k)| work_cone.contains(&(&x - k)));
        if !reducible {
            kept.push((deg, x));
        }
    }
    kept.into_iter().map(|(_, x)| x).collect()
}
