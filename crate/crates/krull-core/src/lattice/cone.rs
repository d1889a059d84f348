//! Rational polyhedral cones: the double description method, facet
//! enumeration, extreme rays and positive gradings.
//!
//! Everything here is exact. Cones are represented both by generators and by
//! supporting functionals ("facets", inner-normal convention: a facet
//! functional is `≥ 0` on the whole cone). Cones of lower dimension than the
//! ambient space are handled by computing inside the saturated lattice of
//! their linear span and pulling functionals back along a unimodular
//! coordinate change.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::snf::{smith_normal_form, unimodular_inverse};
use super::vector::{IntMatrix, IntVector};
use super::LatticeError;

/// Generators of a cone `{x : a·x ≥ 0 for all constraints a}` as computed by
/// [`dual_description`]: the cone equals `lin(lineality) + cone(rays)`, the
/// lineality vectors are a lattice basis of the lineality space and the rays
/// are primitive representatives of the extreme rays modulo lineality, one
/// per ray, canonically ordered.
#[derive(Clone, Debug)]
pub struct DualDescription {
    pub lineality: Vec<IntVector>,
    pub rays: Vec<IntVector>,
}

/// Incremental double description: start from all of `ℝ^dim` and intersect
/// with one halfspace `{x : a·x ≥ 0}` at a time.
pub fn dual_description(constraints: &[IntVector], dim: usize) -> DualDescription {
    let mut lineality: Vec<IntVector> = (0..dim).map(|i| IntVector::unit(dim, i)).collect();
    let mut rays: Vec<IntVector> = Vec::new();
    let mut processed: Vec<IntVector> = Vec::new();

    for a in constraints {
        assert_eq!(a.dim(), dim, "constraint dimension mismatch");
        if a.is_zero() {
            continue;
        }
        if let Some(pos) = lineality.iter().position(|l| !a.dot(l).is_zero()) {
            // a cuts the lineality space: split off one direction l0 with
            // a·l0 > 0; it becomes a ray, every other generator is slid along
            // l0 into the hyperplane {a = 0}
            let mut l0 = lineality.remove(pos);
            if a.dot(&l0).is_negative() {
                l0 = -&l0;
            }
            let al0 = a.dot(&l0);
            for l in lineality.iter_mut() {
                let t = &l.scale(&al0) - &l0.scale(&a.dot(l));
                *l = t.primitive();
            }
            for r in rays.iter_mut() {
                let t = &r.scale(&al0) - &l0.scale(&a.dot(r));
                *r = t.primitive();
            }
            rays.retain(|r| !r.is_zero());
            rays.push(l0);
        } else {
            // classic step: keep nonnegative rays, combine each positive
            // with each negative ray on the hyperplane {a = 0}
            let neg: Vec<IntVector> = rays
                .iter()
                .filter(|r| a.dot(r).is_negative())
                .cloned()
                .collect();
            if !neg.is_empty() {
                let pos: Vec<IntVector> = rays
                    .iter()
                    .filter(|r| a.dot(r).is_positive())
                    .cloned()
                    .collect();
                rays.retain(|r| !a.dot(r).is_negative());
                for p in &pos {
                    for n in &neg {
                        let c = &n.scale(&a.dot(p)) - &p.scale(&a.dot(n));
                        let c = c.primitive();
                        if !c.is_zero() {
                            rays.push(c);
                        }
                    }
                }
            }
        }
        processed.push(a.clone());
        prune_rays(&mut rays, &lineality, &processed, dim);
    }

    lineality.sort();
    rays.sort();
    DualDescription { lineality, rays }
}

/// Keeps exactly one primitive representative per extreme ray: a ray is
/// extreme iff its tight constraints have rank `dim − dim(lineality) − 1`,
/// and two rays with the same tight set represent the same ray class.
fn prune_rays(
    rays: &mut Vec<IntVector>,
    lineality: &[IntVector],
    processed: &[IntVector],
    dim: usize,
) {
    let lin_rank = lineality.len();
    let mut by_tight_set: BTreeMap<BTreeSet<usize>, IntVector> = BTreeMap::new();
    for r in rays.iter() {
        // drop rays that fell into the lineality space
        let mut stack: Vec<IntVector> = lineality.to_vec();
        stack.push(r.clone());
        if IntMatrix::from_rows(stack, dim).rank() == lin_rank {
            continue;
        }
        let tight: BTreeSet<usize> = processed
            .iter()
            .enumerate()
            .filter(|(_, a)| a.dot(r).is_zero())
            .map(|(i, _)| i)
            .collect();
        let tight_rows: Vec<IntVector> = tight.iter().map(|&i| processed[i].clone()).collect();
        if IntMatrix::from_rows(tight_rows, dim).rank() + lin_rank + 1 != dim {
            continue;
        }
        let entry = by_tight_set.entry(tight).or_insert_with(|| r.clone());
        if r < entry {
            *entry = r.clone();
        }
    }
    *rays = by_tight_set.into_values().collect();
}

/// A strictly positive grading for a set of nonzero generators: a functional
/// `λ` with `λ·g > 0` for every generator. Computed as the sum of the
/// extreme rays of the dual cone, which lies in its interior exactly when
/// the generated cone is pointed. The result is primitive and canonical.
pub fn positive_grading(gens: &[IntVector]) -> Result<IntVector, LatticeError> {
    assert!(!gens.is_empty(), "positive_grading requires generators");
    let dim = gens[0].dim();
    let dd = dual_description(gens, dim);
    let mut lambda = IntVector::zero(dim);
    for r in &dd.rays {
        lambda = &lambda + r;
    }
    if gens.iter().all(|g| lambda.dot(g).is_positive()) {
        Ok(lambda.primitive())
    } else {
        Err(LatticeError::NotPositive)
    }
}

/// A rational polyhedral cone presented by generators, with its facet
/// functionals, extreme rays and lineality space precomputed.
#[derive(Clone, Debug)]
pub struct Cone {
    ambient_dim: usize,
    /// Saturated lattice basis of `span(C) ∩ ℤ^d`, one row per basis vector.
    span_basis: IntMatrix,
    /// Inverse of a unimodular matrix whose first `dim` rows are `span_basis`;
    /// applying it on the left reads off span coordinates.
    span_transform_inv: IntMatrix,
    /// The input generators (ambient coordinates, as given).
    gens: Vec<IntVector>,
    /// The same generators in span coordinates, index-aligned with `gens`.
    gens_span: Vec<IntVector>,
    /// Primitive facet functionals, ambient and span coordinates aligned,
    /// sorted by ambient representative.
    facets: Vec<IntVector>,
    facets_span: Vec<IntVector>,
    /// Primitive representatives of the extreme rays (ambient), sorted.
    rays: Vec<IntVector>,
    /// Lattice basis of the lineality space `C ∩ −C` (ambient), sorted.
    lineality: Vec<IntVector>,
}

/// Builds the cone generated by the given nonzero vectors. Facets are the
/// supporting functionals of codimension-one faces relative to the span of
/// the cone; for full-dimensional cones this is the usual facet description.
pub fn cone_of(gens: &[IntVector]) -> Cone {
    assert!(!gens.is_empty(), "cone_of requires at least one generator");
    let dim = gens[0].dim();
    assert!(
        gens.iter().all(|g| !g.is_zero()),
        "cone_of requires nonzero generators"
    );

    // saturated basis of the span; its SNF right-inverse completes it to a
    // unimodular matrix, giving the coordinate change onto span coordinates
    let gen_matrix = IntMatrix::from_rows(gens.to_vec(), dim);
    let snf = smith_normal_form(&gen_matrix);
    let s = snf.rank();
    let span_transform = snf.right_inv.clone();
    let span_transform_inv = unimodular_inverse(&span_transform);
    let span_basis = IntMatrix::from_rows(
        (0..s).map(|i| span_transform.row(i).clone()).collect(),
        dim,
    );

    // generators in span coordinates: g = c · span_basis with c integral
    let gens_span: Vec<IntVector> = gens
        .iter()
        .map(|g| {
            let full = span_transform_inv.apply_left(g);
            IntVector::new(full.coords()[..s].to_vec())
        })
        .collect();

    // facets of the full-dimensional cone in span coordinates are the
    // extreme rays of its dual cone
    let dual = dual_description(&gens_span, s);
    assert!(
        dual.lineality.is_empty(),
        "dual of a full-dimensional cone must be pointed"
    );
    let mut facet_pairs: Vec<(IntVector, IntVector)> = dual
        .rays
        .iter()
        .map(|mu| (pull_back_functional(mu, &span_transform_inv), mu.clone()))
        .collect();
    facet_pairs.sort();
    let (facets, facets_span): (Vec<_>, Vec<_>) = facet_pairs.into_iter().unzip();

    // extreme rays: generators whose tight facet set has corank one in the
    // span, one primitive representative per ray class
    let facet_rank = IntMatrix::from_rows(facets_span.clone(), s).rank();
    let lineality_dim = s - facet_rank;
    let mut ray_reps: BTreeMap<BTreeSet<usize>, IntVector> = BTreeMap::new();
    for (g, gs) in gens.iter().zip(&gens_span) {
        let tight: BTreeSet<usize> = facets_span
            .iter()
            .enumerate()
            .filter(|(_, mu)| mu.dot(gs).is_zero())
            .map(|(j, _)| j)
            .collect();
        let tight_rows: Vec<IntVector> = tight.iter().map(|&j| facets_span[j].clone()).collect();
        if IntMatrix::from_rows(tight_rows, s).rank() + lineality_dim + 1 != s {
            continue;
        }
        let rep = g.primitive();
        let entry = ray_reps.entry(tight).or_insert_with(|| rep.clone());
        if rep < *entry {
            *entry = rep;
        }
    }
    let mut rays: Vec<IntVector> = ray_reps.into_values().collect();
    rays.sort();

    // lineality lattice: kernel of the facet functionals inside the span
    let lineality = if lineality_dim == 0 {
        Vec::new()
    } else {
        let facet_cols = IntMatrix::from_rows(facets_span.clone(), s).transpose();
        let kernel = super::snf::left_kernel_basis(&facet_cols);
        let mut basis: Vec<IntVector> = kernel
            .iter()
            .map(|c| span_basis.apply_left(c))
            .collect();
        basis.sort();
        basis
    };

    Cone {
        ambient_dim: dim,
        span_basis,
        span_transform_inv,
        gens: gens.to_vec(),
        gens_span,
        facets,
        facets_span,
        rays,
        lineality,
    }
}

/// Pulls a functional `μ` on span coordinates back to a primitive ambient
/// functional `λ` with `λ·x = μ·coords(x)` for all `x` in the span, chosen
/// canonically as `U⁻¹·(μ,0,…,0)ᵀ` for the span transform `U`.
fn pull_back_functional(mu: &IntVector, span_transform_inv: &IntMatrix) -> IntVector {
    let d = span_transform_inv.nrows();
    let mut padded = mu.coords().to_vec();
    padded.resize(d, BigInt::zero());
    // λᵀ = U⁻¹ · (μ,0)ᵀ  ⟺  λ = (μ,0) · (U⁻¹)ᵀ
    span_transform_inv
        .transpose()
        .apply_left(&IntVector::new(padded))
        .primitive()
}

impl Cone {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the cone as a convex body (rank of its span).
    pub fn dim(&self) -> usize {
        self.span_basis.nrows()
    }

    pub fn gens(&self) -> &[IntVector] {
        &self.gens
    }

    pub fn gens_span(&self) -> &[IntVector] {
        &self.gens_span
    }

    /// Primitive inner-normal facet functionals (ambient coordinates).
    pub fn facets(&self) -> &[IntVector] {
        &self.facets
    }

    /// The same facets as functionals on span coordinates, index-aligned.
    pub fn facets_span(&self) -> &[IntVector] {
        &self.facets_span
    }

    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }

    pub fn lineality_basis(&self) -> &[IntVector] {
        &self.lineality
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality.len()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn span_basis(&self) -> &IntMatrix {
        &self.span_basis
    }

    /// Membership of an ambient vector: inside the linear span and
    /// nonnegative under every facet functional.
    pub fn contains(&self, x: &IntVector) -> bool {
        assert_eq!(x.dim(), self.ambient_dim, "cone membership dimension mismatch");
        if !self.span_contains(x) {
            return false;
        }
        self.facets.iter().all(|f| !f.dot(x).is_negative())
    }

    /// Rational span membership (ignores the lattice).
    pub fn span_contains(&self, x: &IntVector) -> bool {
        let mut rows: Vec<IntVector> = self.span_basis.rows().to_vec();
        rows.push(x.clone());
        IntMatrix::from_rows(rows, self.ambient_dim).rank() == self.span_basis.nrows()
    }

    /// Coordinates of `x` in the span basis, if `x` lies in the saturated
    /// span lattice.
    pub fn span_coords(&self, x: &IntVector) -> Option<IntVector> {
        let full = self.span_transform_inv.apply_left(x);
        let s = self.dim();
        if full.coords()[s..].iter().all(|c| c.is_zero()) {
            Some(IntVector::new(full.coords()[..s].to_vec()))
        } else {
            None
        }
    }

    /// Inverse of [`Cone::span_coords`].
    pub fn from_span_coords(&self, c: &IntVector) -> IntVector {
        assert_eq!(c.dim(), self.dim(), "span coordinate dimension mismatch");
        self.span_basis.apply_left(c)
    }

    /// Values of all facet functionals at `x` (ambient).
    pub fn facet_values(&self, x: &IntVector) -> Vec<BigInt> {
        self.facets.iter().map(|f| f.dot(x)).collect()
    }
}
