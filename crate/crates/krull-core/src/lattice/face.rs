//! The face lattice of a polyhedral cone.
//!
//! A face is an intersection of the cone with some of its supporting facet
//! hyperplanes. Faces are identified canonically by the full set of facets
//! vanishing on them; the generators lying on a face determine it as a cone
//! in its own right, so each face also records its generator support.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_traits::Zero;

use super::cone::Cone;
use super::vector::{IntMatrix, IntVector};

/// One face of a cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    /// Indices of all cone facets vanishing identically on this face.
    pub facet_set: BTreeSet<usize>,
    /// Indices of the cone generators lying on this face.
    pub support: BTreeSet<usize>,
    /// Dimension of the face as a cone (rank of its supported generators).
    pub dim: usize,
}

/// All faces of a cone, ordered by (dimension, facet set). The whole cone is
/// the unique face of maximal dimension, the minimal face is the lineality
/// space (the origin for pointed cones).
#[derive(Clone, Debug)]
pub struct FaceLattice {
    faces: Vec<Face>,
    facet_count: usize,
}

/// Enumerates all faces by closing facet subsets: starting from the whole
/// cone, repeatedly intersect with one more facet hyperplane and canonicalize.
pub fn face_lattice(c: &Cone) -> FaceLattice {
    let nf = c.facets_span().len();
    let mut seen: BTreeMap<BTreeSet<usize>, Face> = BTreeMap::new();
    let mut queue: Vec<BTreeSet<usize>> = Vec::new();

    let top = close_facet_set(c, &BTreeSet::new());
    queue.push(top.facet_set.clone());
    seen.insert(top.facet_set.clone(), top);

    while let Some(facet_set) = queue.pop() {
        for j in 0..nf {
            if facet_set.contains(&j) {
                continue;
            }
            let mut extended = facet_set.clone();
            extended.insert(j);
            let face = close_facet_set(c, &extended);
            if !seen.contains_key(&face.facet_set) {
                queue.push(face.facet_set.clone());
                seen.insert(face.facet_set.clone(), face);
            }
        }
    }

    let mut faces: Vec<Face> = seen.into_values().collect();
    faces.sort_by(|a, b| {
        (a.dim, &a.facet_set, &a.support).cmp(&(b.dim, &b.facet_set, &b.support))
    });
    FaceLattice {
        faces,
        facet_count: nf,
    }
}

/// The face cut out by a facet subset, with its canonical (maximal) facet
/// set, generator support and dimension.
fn close_facet_set(c: &Cone, subset: &BTreeSet<usize>) -> Face {
    let facets = c.facets_span();
    let gens = c.gens_span();
    let support: BTreeSet<usize> = (0..gens.len())
        .filter(|&i| subset.iter().all(|&j| facets[j].dot(&gens[i]).is_zero()))
        .collect();
    let facet_set: BTreeSet<usize> = (0..facets.len())
        .filter(|&j| support.iter().all(|&i| facets[j].dot(&gens[i]).is_zero()))
        .collect();
    let rows: Vec<IntVector> = support.iter().map(|&i| gens[i].clone()).collect();
    let dim = IntMatrix::from_rows(rows, c.dim()).rank();
    Face {
        facet_set,
        support,
        dim,
    }
}

impl FaceLattice {
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// Index of the whole cone (the unique face with empty facet set).
    pub fn whole_cone(&self) -> usize {
        self.faces
            .iter()
            .position(|f| f.facet_set.is_empty())
            .expect("face lattice always contains the whole cone")
    }

    /// Index of the minimal face (all facets vanish; equals the lineality
    /// space, which is the origin exactly when the cone is pointed).
    pub fn minimal_face(&self) -> usize {
        let full: BTreeSet<usize> = (0..self.facet_count).collect();
        self.faces
            .iter()
            .position(|f| f.facet_set == full)
            .expect("face lattice always contains the minimal face")
    }

    /// Face containment is generator-support containment.
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.faces[a].support.is_subset(&self.faces[b].support)
    }

    /// Length of the longest strictly increasing chain of faces from the
    /// given face up to the whole cone (the whole cone itself has length 0).
    pub fn longest_chain_to_top(&self, face: usize) -> usize {
        // faces are sorted by dimension, so a single backward sweep suffices
        let n = self.faces.len();
        let mut best: Vec<usize> = alloc::vec![0; n];
        for i in (0..n).rev() {
            for j in i + 1..n {
                if self.faces[j].dim > self.faces[i].dim
                    && self.le(i, j)
                    && best[j] + 1 > best[i]
                {
                    best[i] = best[j] + 1;
                }
            }
        }
        best[face]
    }

    /// The facets of a face: all faces directly below it in the lattice.
    pub fn children(&self, face: usize) -> Vec<usize> {
        let f = &self.faces[face];
        self.faces
            .iter()
            .enumerate()
            .filter(|(i, g)| *i != face && g.dim + 1 == f.dim && g.support.is_subset(&f.support))
            .map(|(i, _)| i)
            .collect()
    }
}
