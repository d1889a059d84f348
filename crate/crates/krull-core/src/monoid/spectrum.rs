//! The prime spectrum of an affine monoid and exact localization membership.
//!
//! Nonempty prime s-ideals of an affine monoid correspond bijectively to
//! the proper faces of its cone: the prime attached to a face consists of
//! all monoid elements off that face. Heights are lengths of face chains,
//! with the empty ideal (the whole cone) as the floor, so height-one primes
//! are exactly the facet primes.
//!
//! Localization at a prime is handled exactly: membership in `S_P = S − F`
//! is a finite search, because the sum of the facet functionals defining
//! `F` bounds the multiplicities of the off-face generators, and the
//! residual is a lattice membership question in the group spanned by the
//! face generators.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::lattice::face::face_lattice;
use crate::lattice::snf::{row_lattice_basis, smith_normal_form};
use crate::lattice::{polytope_lattice_points, IntMatrix, IntVector};

use super::build::{combination_modulo, AffineMonoid};
use super::ideal::SharpMembership;
use super::MonoidError;

/// A nonempty prime s-ideal `P = S ∖ F` for a proper face `F` of the cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeIdeal {
    /// Indices into the monoid generators of the generators lying on `F`.
    pub face_support: BTreeSet<usize>,
    /// Canonical set of facet indices vanishing on `F`.
    pub face_facets: BTreeSet<usize>,
    /// Dimension of `F` as a cone.
    pub face_dim: usize,
    /// Length of the longest strictly increasing chain of primes below
    /// this one, counting the empty ideal as the floor.
    pub height: usize,
}

/// All nonempty primes, sorted by ascending height, then face support.
/// Facet primes (height one) come first.
pub fn prime_spectrum(monoid: &AffineMonoid) -> Vec<PrimeIdeal> {
    let Some(cone) = monoid.cone_q() else {
        return Vec::new();
    };
    let fl = face_lattice(cone);
    let top = fl.whole_cone();
    let mut primes: Vec<PrimeIdeal> = fl
        .faces()
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != top)
        .map(|(i, f)| PrimeIdeal {
            face_support: f.support.clone(),
            face_facets: f.facet_set.clone(),
            face_dim: f.dim,
            height: fl.longest_chain_to_top(i),
        })
        .collect();
    primes.sort_by(|a, b| {
        (a.height, &a.face_support).cmp(&(b.height, &b.face_support))
    });
    primes
}

impl PrimeIdeal {
    /// Does the prime contain the monoid element with the given
    /// quotient-group coordinates? (Membership in the monoid is assumed.)
    pub fn contains_q(&self, monoid: &AffineMonoid, xq: &IntVector) -> bool {
        let cone = monoid.cone_q().expect("primes exist only for nontrivial monoids");
        // off the face iff some defining facet functional is positive
        self.face_facets
            .iter()
            .any(|&j| !cone.facets()[j].dot(xq).is_zero())
    }

    /// Generators of the prime as an s-ideal: the monoid generators off the
    /// face, in quotient-group coordinates.
    pub fn ideal_gens_q(&self, monoid: &AffineMonoid) -> Vec<IntVector> {
        (0..monoid.gens_q().len())
            .filter(|i| !self.face_support.contains(i))
            .map(|i| monoid.gens_q()[i].clone())
            .collect()
    }
}

/// Exact membership in the localization `S_P = S − F`, for `x` in ambient
/// coordinates. Elements outside the quotient group are never members.
pub fn local_membership(monoid: &AffineMonoid, prime: &PrimeIdeal, x: &IntVector) -> bool {
    match monoid.q_coords(x) {
        Some(xq) => local_membership_q(monoid, prime, &xq),
        None => false,
    }
}

/// As [`local_membership`], in quotient-group coordinates.
pub fn local_membership_q(monoid: &AffineMonoid, prime: &PrimeIdeal, xq: &IntVector) -> bool {
    let cone = monoid.cone_q().expect("primes exist only for nontrivial monoids");
    let n = monoid.group_rank();

    // sum of the defining facet functionals: strictly positive on the
    // off-face generators, zero on the span of the face generators
    let mut degree = IntVector::zero(n);
    for &j in &prime.face_facets {
        degree = &degree + &cone.facets()[j];
    }

    let off_gens: Vec<IntVector> = prime.ideal_gens_q(monoid);
    let face_rows: Vec<IntVector> = prime
        .face_support
        .iter()
        .map(|&i| monoid.gens_q()[i].clone())
        .collect();
    let face_lattice = IntMatrix::from_rows(row_lattice_basis(&IntMatrix::from_rows(face_rows, n)), n);
    let face_snf = smith_normal_form(&face_lattice);

    combination_modulo(xq, &off_gens, &degree, &face_lattice, &face_snf).is_some()
}

/// Exponents of the primary component `(α + S_P) ∩ S` of the principal
/// ideal of a nonunit `α` at a height-one prime `P` containing it,
/// restricted to the degree box `{x : grading(x) ≤ box_bound}`.
///
/// Input and output are ambient coordinates. The box ranges over the sharp
/// part of the monoid; each member is reported by its canonical
/// representative with zero unit part, sorted lexicographically. For
/// monoids without units the representatives are the elements themselves.
pub fn primary_component_exponents(
    monoid: &AffineMonoid,
    alpha: &IntVector,
    prime: &PrimeIdeal,
    box_bound: &BigInt,
) -> Result<Vec<IntVector>, MonoidError> {
    let r = monoid.require_reduced()?;
    assert!(monoid.contains(alpha), "α must belong to the monoid");
    let aq = monoid
        .q_coords(alpha)
        .expect("monoid elements have quotient-group coordinates");
    let a_red = r.reduced_of_q(&aq);
    assert!(!a_red.is_zero(), "α must be a nonunit");
    assert_eq!(
        prime.height, 1,
        "primary components are taken at height-one primes"
    );
    assert!(prime.contains_q(monoid, &aq), "the prime must contain α");

    let cone = r.cone.as_ref().expect("nonunits exist only under a cone");
    let grading = r.grading.as_ref().expect("sharp cones are positively graded");

    let mut rows: Vec<(IntVector, BigInt)> = cone
        .facets()
        .iter()
        .map(|f| (f.clone(), BigInt::zero()))
        .collect();
    rows.push((-grading, -box_bound));
    let window = polytope_lattice_points(&rows, r.rank)
        .expect("degree slabs of pointed cones are bounded");

    let mut member = SharpMembership::new(r);
    let mut out = Vec::new();
    for x in window {
        if !member.contains(&x)? {
            continue;
        }
        let diff_q = r.q_of_reduced(&(&x - &a_red));
        if local_membership_q(monoid, prime, &diff_q) {
            out.push(monoid.ambient_of_q(&r.q_of_reduced(&x)));
        }
    }
    out.sort();
    Ok(out)
}

/// Is the localization at a facet prime the full halfspace monoid
/// `{x ∈ q(S) : f(x) ≥ 0}`? This holds iff `S_P` is a discrete valuation
/// monoid. Returns the witness that fails when it is not: a quotient-group
/// element of valuation one, or a kernel element, missing from `S_P`.
pub fn localization_is_valuation(
    monoid: &AffineMonoid,
    prime: &PrimeIdeal,
) -> Result<(), IntVector> {
    assert_eq!(prime.height, 1, "valuation test applies to facet primes");
    let cone = monoid.cone_q().expect("primes exist only for nontrivial monoids");
    let &facet_index = prime
        .face_facets
        .iter()
        .next()
        .expect("facet primes have a defining facet");
    let f = &cone.facets()[facet_index];
    let n = monoid.group_rank();

    // the halfspace monoid is generated by ± a basis of ker(f) and any
    // element of valuation one; f is primitive, so such an element exists
    let f_column = IntMatrix::from_rows(alloc::vec![f.clone()], n).transpose();
    let kernel = crate::lattice::snf::left_kernel_basis(&f_column);
    let one = crate::lattice::snf::solve_row_combination(
        &f_column,
        &IntVector::from_i64s(&[1]),
    )
    .expect("primitive functionals are surjective onto the integers");

    for k in &kernel {
        if !local_membership_q(monoid, prime, k) {
            return Err(k.clone());
        }
        let neg = -k;
        if !local_membership_q(monoid, prime, &neg) {
            return Err(neg);
        }
    }
    if !local_membership_q(monoid, prime, &one) {
        return Err(one);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn monoid(gens: &[&[i64]]) -> AffineMonoid {
        let d = gens.first().map_or(0, |g| g.len());
        AffineMonoid::from_i64_gens(d, gens).unwrap()
    }

    fn iv(coords: &[i64]) -> IntVector {
        IntVector::from_i64s(coords)
    }

    #[test]
    fn numerical_monoid_has_one_prime_of_height_one() {
        let s = monoid(&[&[2], &[3]]);
        let spec = prime_spectrum(&s);
        assert_eq!(spec.len(), 1);
        assert_eq!(spec[0].height, 1);
        assert!(spec[0].face_support.is_empty());
    }

    #[test]
    fn quadrant_spectrum_has_three_primes() {
        let s = monoid(&[&[1, 0], &[0, 1]]);
        let spec = prime_spectrum(&s);
        assert_eq!(spec.len(), 3);
        let heights: Vec<usize> = spec.iter().map(|p| p.height).collect();
        assert_eq!(heights, vec![1, 1, 2]);
        // the maximal ideal corresponds to the origin face
        assert!(spec[2].face_support.is_empty());
        assert_eq!(spec[2].face_dim, 0);
    }

    #[test]
    fn group_monoid_has_empty_spectrum() {
        let s = monoid(&[&[1, 0], &[-1, 0]]);
        assert!(prime_spectrum(&s).is_empty());
        let t = AffineMonoid::from_i64_gens(2, &[]).unwrap();
        assert!(prime_spectrum(&t).is_empty());
    }

    #[test]
    fn localization_at_the_maximal_ideal_of_a_numerical_monoid() {
        // S_P = S here because the face is the origin
        let s = monoid(&[&[2], &[3]]);
        let spec = prime_spectrum(&s);
        let p = &spec[0];
        assert!(local_membership(&s, p, &iv(&[2])));
        assert!(local_membership(&s, p, &iv(&[7])));
        assert!(!local_membership(&s, p, &iv(&[1])));
        assert!(!local_membership(&s, p, &iv(&[-2])));
    }

    #[test]
    fn localization_at_a_facet_prime_of_the_quadrant() {
        let s = monoid(&[&[1, 0], &[0, 1]]);
        let spec = prime_spectrum(&s);
        // the prime off the x-axis face; generators sort as (0,1), (1,0),
        // so the x-axis face supports generator index 1
        let p = spec
            .iter()
            .find(|p| p.height == 1 && p.face_support.contains(&1))
            .unwrap();
        // S_P = ℤ × ℕ: the x-coordinate becomes invertible
        assert!(local_membership(&s, p, &iv(&[-5, 2])));
        assert!(local_membership(&s, p, &iv(&[-1, 0])));
        assert!(!local_membership(&s, p, &iv(&[3, -1])));
    }

    #[test]
    fn valuation_test_separates_normal_from_non_normal() {
        let q = monoid(&[&[1, 0], &[0, 1]]);
        for p in prime_spectrum(&q).iter().filter(|p| p.height == 1) {
            assert!(localization_is_valuation(&q, p).is_ok());
        }
        let n = monoid(&[&[2], &[3]]);
        let spec = prime_spectrum(&n);
        let err = localization_is_valuation(&n, &spec[0]).unwrap_err();
        // the missing element is the valuation-one element 1 ∉ S = S_P
        assert_eq!(err.dim(), 1);
    }

    #[test]
    fn prime_contains_exactly_the_off_face_elements() {
        let s = monoid(&[&[1, 0], &[1, 1], &[1, 2]]);
        let spec = prime_spectrum(&s);
        for p in &spec {
            for (i, gq) in s.gens_q().iter().enumerate() {
                let on_face = p.face_support.contains(&i);
                assert_eq!(p.contains_q(&s, gq), !on_face);
            }
        }
    }

    #[test]
    fn primality_check_on_sampled_elements() {
        // brute-force the prime property a + b ∈ P ⟹ a ∈ P or b ∈ P on a
        // sample of monoid elements
        let s = monoid(&[&[2, 0], &[1, 1], &[0, 2]]);
        let spec = prime_spectrum(&s);
        let mut sample: Vec<IntVector> = Vec::new();
        for a in 0..3i64 {
            for b in 0..3i64 {
                for c in 0..3i64 {
                    let x = &(&s.gens_q()[0].scale(&a.into()) + &s.gens_q()[1].scale(&b.into()))
                        + &s.gens_q()[2].scale(&c.into());
                    sample.push(x);
                }
            }
        }
        for p in &spec {
            for a in &sample {
                for b in &sample {
                    let sum = a + b;
                    if p.contains_q(&s, &sum) {
                        assert!(p.contains_q(&s, a) || p.contains_q(&s, b));
                    }
                }
            }
        }
    }

    // grading degree of an ambient monoid element, for box comparisons
    fn degree(s: &AffineMonoid, x: &IntVector) -> BigInt {
        let r = s.reduced().unwrap();
        r.grading_or_zero().dot(&r.reduced_of_q(&s.q_coords(x).unwrap()))
    }

    #[test]
    fn primary_component_at_a_facet_prime_of_the_quadrant() {
        let s = monoid(&[&[1, 0], &[0, 1]]);
        let spec = prime_spectrum(&s);
        // the prime off the x-axis face (generators sort as (0,1), (1,0))
        let p = spec
            .iter()
            .find(|p| p.height == 1 && p.face_support.contains(&1))
            .unwrap();
        let bound = BigInt::from(4);
        let got =
            primary_component_exponents(&s, &iv(&[1, 1]), p, &bound).unwrap();
        // (α + S_P) ∩ S is exactly the set of points with b ≥ 1
        let mut expected: Vec<IntVector> = Vec::new();
        for a in 0..=4i64 {
            for b in 1..=4i64 {
                let x = iv(&[a, b]);
                if degree(&s, &x) <= bound {
                    expected.push(x);
                }
            }
        }
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn primary_component_at_the_maximal_ideal_of_a_numerical_monoid() {
        // the face is the origin, so S_P = S and the component is α + S
        let s = monoid(&[&[2], &[3]]);
        let spec = prime_spectrum(&s);
        let bound = BigInt::from(10);
        let got =
            primary_component_exponents(&s, &iv(&[2]), &spec[0], &bound).unwrap();
        let mut expected: Vec<IntVector> = Vec::new();
        for x in 0..=10i64 {
            let v = iv(&[x]);
            if s.contains(&v) && s.contains(&iv(&[x - 2])) && degree(&s, &v) <= bound {
                expected.push(v);
            }
        }
        assert_eq!(got, expected);
        assert!(got.contains(&iv(&[2])));
        assert!(!got.contains(&iv(&[3])));
    }

    #[test]
    fn primary_components_intersect_to_the_principal_ideal() {
        // both facet primes of the quadrant contain α = (1,1); the
        // intersection of the two components is α + S within the box
        let s = monoid(&[&[1, 0], &[0, 1]]);
        let spec = prime_spectrum(&s);
        let bound = BigInt::from(5);
        let alpha = iv(&[1, 1]);
        let mut components: Vec<BTreeSet<IntVector>> = Vec::new();
        for p in spec.iter().filter(|p| p.height == 1) {
            let c = primary_component_exponents(&s, &alpha, p, &bound).unwrap();
            components.push(c.into_iter().collect());
        }
        assert_eq!(components.len(), 2);
        let meet: Vec<IntVector> = components[0]
            .intersection(&components[1])
            .cloned()
            .collect();
        let mut expected: Vec<IntVector> = Vec::new();
        for a in 1..=5i64 {
            for b in 1..=5i64 {
                let x = iv(&[a, b]);
                if degree(&s, &x) <= bound {
                    expected.push(x);
                }
            }
        }
        expected.sort();
        assert_eq!(meet, expected);
    }

    #[test]
    fn primary_component_reports_canonical_representatives_under_units() {
        // S = ℤ × ℕ: the reported exponents carry zero unit part
        let s = monoid(&[&[1, 0], &[-1, 0], &[0, 1]]);
        let spec = prime_spectrum(&s);
        assert_eq!(spec.len(), 1);
        let bound = BigInt::from(4);
        let got =
            primary_component_exponents(&s, &iv(&[3, 2]), &spec[0], &bound).unwrap();
        let mut expected: Vec<IntVector> = Vec::new();
        for y in 2..=4i64 {
            let x = iv(&[0, y]);
            if degree(&s, &x) <= bound {
                expected.push(x);
            }
        }
        assert_eq!(got, expected);
    }

    #[test]
    #[should_panic(expected = "nonunit")]
    fn primary_component_rejects_units() {
        let s = monoid(&[&[1, 0], &[-1, 0], &[0, 1]]);
        let spec = prime_spectrum(&s);
        let _ = primary_component_exponents(&s, &iv(&[5, 0]), &spec[0], &BigInt::from(3));
    }

    #[test]
    #[should_panic(expected = "must contain α")]
    fn primary_component_rejects_primes_missing_alpha() {
        let s = monoid(&[&[1, 0], &[0, 1]]);
        let spec = prime_spectrum(&s);
        let p = spec
            .iter()
            .find(|p| p.height == 1 && p.face_support.contains(&1))
            .unwrap();
        // (1,0) lies on the x-axis face, hence outside this prime
        let _ = primary_component_exponents(&s, &iv(&[1, 0]), p, &BigInt::from(3));
    }
}
