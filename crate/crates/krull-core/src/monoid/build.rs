//! Construction and normalization of affine monoids.
//!
//! A monoid is built from ambient generators and immediately brought into a
//! canonical working form: generators are deduplicated and sorted, the
//! quotient group gets a lattice basis, the cone over the generators is
//! computed in quotient-group coordinates (where it is full-dimensional),
//! and the unit group is split off as a direct summand whenever it is
//! saturated in the quotient group. All ideal theory then happens in the
//! reduced part, which is pointed, full-rank and positively graded.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::lattice::snf::{
    row_lattice_basis, smith_normal_form, solve_with_snf, unimodular_inverse, SmithNormalForm,
};
use crate::lattice::{cone_of, positive_grading, Cone, IntMatrix, IntVector};

use super::{MonoidError, DIMENSION_LIMIT};

/// A finitely generated submonoid of ℤ^d in canonical working form.
#[derive(Clone, Debug)]
pub struct AffineMonoid {
    ambient_dim: usize,
    /// Nonzero, deduplicated, sorted generators in ambient coordinates.
    gens: Vec<IntVector>,
    /// Rows form a basis of the quotient group `q(S)` inside ℤ^d.
    group_basis: IntMatrix,
    group_snf: SmithNormalForm,
    /// The generators in quotient-group coordinates, index-aligned with
    /// `gens`. The cone over them is full-dimensional.
    gens_q: Vec<IntVector>,
    /// Cone over `gens_q`; `None` exactly for the trivial monoid.
    cone_q: Option<Cone>,
    /// Indices of generators that are units (their negatives also lie in
    /// the monoid), together with a basis of the unit group in q-coordinates.
    unit_gen_indices: Vec<usize>,
    unit_basis_q: IntMatrix,
    unit_snf: SmithNormalForm,
    reduced: Option<ReducedForm>,
}

/// The reduced part of a monoid whose unit group splits: `S ≅ ℤ^k ⊕ S₊`
/// with `S₊` sharp (no nonzero units), full-rank and positively graded.
#[derive(Clone, Debug)]
pub struct ReducedForm {
    /// Rank `k` of the split-off unit group.
    pub unit_rank: usize,
    /// Rank `m` of the reduced part; its quotient group is all of ℤ^m.
    pub rank: usize,
    /// Generators of `S₊` in ℤ^m: nonzero, deduplicated, sorted.
    pub gens: Vec<IntVector>,
    /// Cone over the reduced generators; `None` when the monoid is a group.
    pub cone: Option<Cone>,
    /// A functional strictly positive on every reduced generator.
    pub grading: Option<IntVector>,
    /// Rows are the new basis of the quotient group expressed in
    /// q-coordinates; the first `unit_rank` rows span the unit group.
    q_of_new: IntMatrix,
    new_of_q: IntMatrix,
}

impl AffineMonoid {
    /// Builds a monoid from generators in ℤ^ambient_dim. Zero generators
    /// and duplicates are dropped; an empty list yields the trivial monoid.
    pub fn new(ambient_dim: usize, gens: Vec<IntVector>) -> Result<Self, MonoidError> {
        if ambient_dim > DIMENSION_LIMIT {
            return Err(MonoidError::UnsupportedDimension { dim: ambient_dim });
        }
        for g in &gens {
            if g.dim() != ambient_dim {
                return Err(MonoidError::GeneratorDimensionMismatch {
                    expected: ambient_dim,
                    found: g.dim(),
                });
            }
        }
        let mut gens: Vec<IntVector> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        gens.sort();
        gens.dedup();

        let gen_matrix = IntMatrix::from_rows(gens.clone(), ambient_dim);
        let group_basis = IntMatrix::from_rows(row_lattice_basis(&gen_matrix), ambient_dim);
        let group_snf = smith_normal_form(&group_basis);
        let gens_q: Vec<IntVector> = gens
            .iter()
            .map(|g| {
                solve_with_snf(&group_basis, &group_snf, g)
                    .expect("generators lie in their own quotient group")
            })
            .collect();
        let cone_q = if gens_q.is_empty() {
            None
        } else {
            Some(cone_of(&gens_q))
        };

        // a generator is a unit iff every facet functional vanishes on it;
        // the unit group is exactly the ℤ-span of the unit generators
        let unit_gen_indices: Vec<usize> = match &cone_q {
            None => Vec::new(),
            Some(c) => (0..gens_q.len())
                .filter(|&i| c.facets().iter().all(|f| f.dot(&gens_q[i]).is_zero()))
                .collect(),
        };
        let n = group_basis.nrows();
        let unit_rows: Vec<IntVector> = unit_gen_indices.iter().map(|&i| gens_q[i].clone()).collect();
        let unit_basis_q = IntMatrix::from_rows(row_lattice_basis(&IntMatrix::from_rows(unit_rows, n)), n);
        let unit_snf = smith_normal_form(&unit_basis_q);

        let reduced = build_reduced(&gens_q, &unit_basis_q, &unit_snf, n);

        Ok(AffineMonoid {
            ambient_dim,
            gens,
            group_basis,
            group_snf,
            gens_q,
            cone_q,
            unit_gen_indices,
            unit_basis_q,
            unit_snf,
            reduced,
        })
    }

    /// Convenience constructor from integer slices.
    pub fn from_i64_gens(ambient_dim: usize, gens: &[&[i64]]) -> Result<Self, MonoidError> {
        Self::new(
            ambient_dim,
            gens.iter().map(|g| IntVector::from_i64s(g)).collect(),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn gens(&self) -> &[IntVector] {
        &self.gens
    }

    /// Rank of the quotient group `q(S)`.
    pub fn group_rank(&self) -> usize {
        self.group_basis.nrows()
    }

    pub fn group_basis(&self) -> &IntMatrix {
        &self.group_basis
    }

    /// Generators in quotient-group coordinates.
    pub fn gens_q(&self) -> &[IntVector] {
        &self.gens_q
    }

    /// Cone over the generators in quotient-group coordinates, where it is
    /// full-dimensional. `None` exactly for the trivial monoid.
    pub fn cone_q(&self) -> Option<&Cone> {
        self.cone_q.as_ref()
    }

    /// The trivial monoid `{0}`.
    pub fn is_trivial(&self) -> bool {
        self.gens.is_empty()
    }

    /// Is the monoid a group (every generator a unit)?
    pub fn is_group(&self) -> bool {
        self.unit_gen_indices.len() == self.gens.len()
    }

    /// Has the monoid no units except 0?
    pub fn is_sharp(&self) -> bool {
        self.unit_basis_q.nrows() == 0
    }

    pub fn unit_rank(&self) -> usize {
        self.unit_basis_q.nrows()
    }

    /// Indices into [`AffineMonoid::gens`] of the unit generators.
    pub fn unit_gen_indices(&self) -> &[usize] {
        &self.unit_gen_indices
    }

    /// The reduced working form; `None` when the unit group is not
    /// saturated in the quotient group (no direct-summand splitting).
    pub fn reduced(&self) -> Option<&ReducedForm> {
        self.reduced.as_ref()
    }

    /// As [`AffineMonoid::reduced`] but as a `Result` for error plumbing.
    pub fn require_reduced(&self) -> Result<&ReducedForm, MonoidError> {
        self.reduced.as_ref().ok_or(MonoidError::UnitGroupNotSplit)
    }

    /// Coordinates of `x` in the quotient group, if `x` lies in it.
    pub fn q_coords(&self, x: &IntVector) -> Option<IntVector> {
        if x.dim() != self.ambient_dim {
            return None;
        }
        solve_with_snf(&self.group_basis, &self.group_snf, x)
    }

    /// Ambient representative of quotient-group coordinates.
    pub fn ambient_of_q(&self, c: &IntVector) -> IntVector {
        self.group_basis.apply_left(c)
    }

    /// Exact monoid membership, valid for every affine monoid: search for
    /// nonnegative multiplicities of the non-unit generators, with the
    /// residual absorbed by the unit group.
    pub fn contains(&self, x: &IntVector) -> bool {
        let Some(xq) = self.q_coords(x) else {
            return false;
        };
        self.contains_q(&xq)
    }

    /// As [`AffineMonoid::contains`], in quotient-group coordinates.
    pub fn contains_q(&self, xq: &IntVector) -> bool {
        let Some(cone) = &self.cone_q else {
            return xq.is_zero();
        };
        if !cone.contains(xq) {
            return false;
        }
        let positive_gens: Vec<IntVector> = (0..self.gens_q.len())
            .filter(|i| !self.unit_gen_indices.contains(i))
            .map(|i| self.gens_q[i].clone())
            .collect();
        let total = total_facet_functional(cone);
        combination_modulo(xq, &positive_gens, &total, &self.unit_basis_q, &self.unit_snf)
            .is_some()
    }

    /// Basis of the unit group in q-coordinates (empty for sharp monoids).
    pub fn unit_basis_q(&self) -> &IntMatrix {
        &self.unit_basis_q
    }

}

impl ReducedForm {
    /// Lifts reduced coordinates to q-coordinates with zero unit part.
    pub fn q_of_reduced(&self, x: &IntVector) -> IntVector {
        assert_eq!(x.dim(), self.rank, "reduced coordinate dimension mismatch");
        let mut full = alloc::vec![BigInt::zero(); self.unit_rank];
        full.extend(x.iter().cloned());
        self.q_of_new.apply_left(&IntVector::new(full))
    }

    /// Projects q-coordinates to the reduced part, forgetting the unit part.
    pub fn reduced_of_q(&self, c: &IntVector) -> IntVector {
        let new = self.new_of_q.apply_left(c);
        IntVector::new(new.coords()[self.unit_rank..].to_vec())
    }

    /// The grading, which exists whenever the monoid is not a group.
    pub fn grading_or_zero(&self) -> IntVector {
        self.grading
            .clone()
            .unwrap_or_else(|| IntVector::zero(self.rank))
    }
}

/// The sum of all facet functionals: strictly positive exactly on the
/// non-unit part of the cone, zero on the lineality space.
pub(crate) fn total_facet_functional(cone: &Cone) -> IntVector {
    let mut total = IntVector::zero(cone.ambient_dim());
    for f in cone.facets() {
        total = &total + f;
    }
    total
}

/// Depth-first search for `target = Σ mᵢ·gens[i] + u` with `mᵢ ≥ 0` and `u`
/// in the row lattice of `lattice`. The degree functional must be strictly
/// positive on every generator and vanish on the lattice, which bounds the
/// search exactly. Returns the lexicographically smallest multiplicities.
pub(crate) fn combination_modulo(
    target: &IntVector,
    gens: &[IntVector],
    degree: &IntVector,
    lattice: &IntMatrix,
    lattice_snf: &SmithNormalForm,
) -> Option<Vec<BigInt>> {
    debug_assert!(gens.iter().all(|g| degree.dot(g).is_positive()));
    debug_assert!(lattice.rows().iter().all(|r| degree.dot(r).is_zero()));
    let target_degree = degree.dot(target);
    if target_degree.is_negative() {
        return None;
    }
    let degrees: Vec<BigInt> = gens.iter().map(|g| degree.dot(g)).collect();
    let mut multiplicities = alloc::vec![BigInt::zero(); gens.len()];
    if modulo_search(
        target.clone(),
        target_degree,
        0,
        gens,
        &degrees,
        lattice,
        lattice_snf,
        &mut multiplicities,
    ) {
        Some(multiplicities)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn modulo_search(
    residual: IntVector,
    residual_degree: BigInt,
    index: usize,
    gens: &[IntVector],
    degrees: &[BigInt],
    lattice: &IntMatrix,
    lattice_snf: &SmithNormalForm,
    multiplicities: &mut Vec<BigInt>,
) -> bool {
    if residual_degree.is_zero() {
        // generators have positive degree, so only the lattice can absorb
        // a degree-zero residual; remaining multiplicities stay zero
        if solve_with_snf(lattice, lattice_snf, &residual).is_some() {
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
    let mut m = BigInt::zero();
    let mut rest = residual;
    let mut rest_degree = residual_degree;
    loop {
        if rest_degree.is_negative() {
            return false;
        }
        multiplicities[index] = m.clone();
        if modulo_search(
            rest.clone(),
            rest_degree.clone(),
            index + 1,
            gens,
            degrees,
            lattice,
            lattice_snf,
            multiplicities,
        ) {
            return true;
        }
        m += 1;
        rest = &rest - &gens[index];
        rest_degree -= &degrees[index];
    }
}

/// Splits off the unit group when it is saturated in the quotient group.
fn build_reduced(
    gens_q: &[IntVector],
    unit_basis_q: &IntMatrix,
    unit_snf: &SmithNormalForm,
    n: usize,
) -> Option<ReducedForm> {
    let k = unit_basis_q.nrows();
    if k > 0 {
        let saturated = unit_snf
            .invariant_factors()
            .iter()
            .all(|d| d.abs() == BigInt::from(1));
        if !saturated {
            return None;
        }
    }
    // complete the unit basis to a basis of ℤ^n: the SNF right-inverse of
    // the unit basis has the unit lattice as its first k rows
    let (q_of_new, new_of_q) = if k == 0 {
        (IntMatrix::identity(n), IntMatrix::identity(n))
    } else {
        let v = unit_snf.right_inv.clone();
        let inv = unimodular_inverse(&v);
        (v, inv)
    };
    let m = n - k;
    let mut reduced_gens: Vec<IntVector> = gens_q
        .iter()
        .map(|g| {
            let new = new_of_q.apply_left(g);
            IntVector::new(new.coords()[k..].to_vec())
        })
        .filter(|g| !g.is_zero())
        .collect();
    reduced_gens.sort();
    reduced_gens.dedup();
    let (cone, grading) = if reduced_gens.is_empty() {
        (None, None)
    } else {
        let c = cone_of(&reduced_gens);
        debug_assert!(c.is_pointed() && c.dim() == m);
        let g = positive_grading(&reduced_gens)
            .expect("the reduced part of a split monoid is sharp");
        (Some(c), Some(g))
    };
    Some(ReducedForm {
        unit_rank: k,
        rank: m,
        gens: reduced_gens,
        cone,
        grading,
        q_of_new,
        new_of_q,
    })
}
