//! Smith normal form over `ℤ` with unimodular transforms, and the lattice
//! routines built on top of it: solving `c·A = x` over `ℤ`, kernel bases,
//! row-lattice bases and saturations.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::vector::{IntMatrix, IntVector};

/// Result of [`smith_normal_form`]: `left · m · right = diagonal` where both
/// transforms are unimodular, the diagonal entries are nonnegative and each
/// divides the next.
#[derive(Clone, Debug)]
pub struct SmithNormalForm {
    pub diagonal: IntMatrix,
    pub left: IntMatrix,
    pub left_inv: IntMatrix,
    pub right: IntMatrix,
    pub right_inv: IntMatrix,
}

impl SmithNormalForm {
    /// Number of nonzero diagonal entries, i.e. the rank of the input.
    pub fn rank(&self) -> usize {
        let n = self.diagonal.nrows().min(self.diagonal.ncols());
        (0..n)
            .take_while(|&i| !self.diagonal.entry(i, i).is_zero())
            .count()
    }

    /// The nonzero diagonal entries `d_1 | d_2 | …`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.rank())
            .map(|i| self.diagonal.entry(i, i).clone())
            .collect()
    }
}

// Working state: target together with the four transform matrices. Every
// elementary operation is applied to the target and mirrored on the
// transforms so that the two defining identities
//   target = left · input · right,   left·left_inv = right_inv·right = id
// hold at every step.
struct SnfState {
    t: IntMatrix,
    left: IntMatrix,
    left_inv: IntMatrix,
    right: IntMatrix,
    right_inv: IntMatrix,
}

impl SnfState {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        swap_rows(&mut self.t, i, j);
        swap_rows(&mut self.left, i, j);
        swap_cols(&mut self.left_inv, i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        swap_cols(&mut self.t, i, j);
        swap_cols(&mut self.right, i, j);
        swap_rows(&mut self.right_inv, i, j);
    }

    fn negate_row(&mut self, i: usize) {
        scale_row(&mut self.t, i);
        scale_row(&mut self.left, i);
        scale_col(&mut self.left_inv, i);
    }

    /// row_i += k * row_j (and the inverse operation on `left_inv`).
    fn add_row(&mut self, i: usize, j: usize, k: &BigInt) {
        add_row(&mut self.t, i, j, k);
        add_row(&mut self.left, i, j, k);
        let neg = -k;
        add_col(&mut self.left_inv, j, i, &neg);
    }

    /// col_i += k * col_j (and the inverse operation on `right_inv`).
    fn add_col(&mut self, i: usize, j: usize, k: &BigInt) {
        add_col(&mut self.t, i, j, k);
        add_col(&mut self.right, i, j, k);
        let neg = -k;
        add_row(&mut self.right_inv, j, i, &neg);
    }
}

fn swap_rows(m: &mut IntMatrix, i: usize, j: usize) {
    m.swap_rows(i, j);
}

fn swap_cols(m: &mut IntMatrix, i: usize, j: usize) {
    for r in 0..m.nrows() {
        let a = m.entry(r, i).clone();
        let b = m.entry(r, j).clone();
        m.set_entry(r, i, b);
        m.set_entry(r, j, a);
    }
}

fn scale_row(m: &mut IntMatrix, i: usize) {
    let neg = -m.row(i);
    m.set_row(i, neg);
}

fn scale_col(m: &mut IntMatrix, i: usize) {
    for r in 0..m.nrows() {
        let v = -m.entry(r, i);
        m.set_entry(r, i, v);
    }
}

fn add_row(m: &mut IntMatrix, i: usize, j: usize, k: &BigInt) {
    let sum = m.row(i) + &m.row(j).scale(k);
    m.set_row(i, sum);
}

fn add_col(m: &mut IntMatrix, i: usize, j: usize, k: &BigInt) {
    for r in 0..m.nrows() {
        let v = m.entry(r, i) + k * m.entry(r, j);
        m.set_entry(r, i, v);
    }
}

/// Computes the Smith normal form of `m` together with unimodular `left`,
/// `right` and their exact inverses, satisfying `left · m · right = diagonal`
/// with `d_1 | d_2 | …` and all `d_i ≥ 0`.
pub fn smith_normal_form(m: &IntMatrix) -> SmithNormalForm {
    let nr = m.nrows();
    let nc = m.ncols();
    let mut st = SnfState {
        t: m.clone(),
        left: IntMatrix::identity(nr),
        left_inv: IntMatrix::identity(nr),
        right: IntMatrix::identity(nc),
        right_inv: IntMatrix::identity(nc),
    };

    let mut t = 0;
    while t < nr && t < nc {
        // find a nonzero entry of minimal absolute value in the submatrix
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..nr {
            for j in t..nc {
                if st.t.entry(i, j).is_zero() {
                    continue;
                }
                let better = match pivot {
                    None => true,
                    Some((pi, pj)) => st.t.entry(i, j).abs() < st.t.entry(pi, pj).abs(),
                };
                if better {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        st.swap_rows(t, pi);
        st.swap_cols(t, pj);

        // clear row and column t; reducing one can dirty the other, so loop
        loop {
            let mut dirty = false;
            for i in t + 1..nr {
                if st.t.entry(i, t).is_zero() {
                    continue;
                }
                let q = rounded_div(st.t.entry(i, t), st.t.entry(t, t));
                let k = -q;
                st.add_row(i, t, &k);
                if !st.t.entry(i, t).is_zero() {
                    // remainder is strictly smaller; promote it to pivot
                    st.swap_rows(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..nc {
                if st.t.entry(t, j).is_zero() {
                    continue;
                }
                let q = rounded_div(st.t.entry(t, j), st.t.entry(t, t));
                let k = -q;
                st.add_col(j, t, &k);
                if !st.t.entry(t, j).is_zero() {
                    st.swap_cols(t, j);
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }

        // enforce the divisibility chain: if some entry below-right is not
        // divisible by the pivot, fold its row in and reduce again
        let mut fixed = true;
        'chain: for i in t + 1..nr {
            for j in t + 1..nc {
                if !(st.t.entry(i, j) % st.t.entry(t, t)).is_zero() {
                    st.add_row(t, i, &BigInt::one());
                    fixed = false;
                    break 'chain;
                }
            }
        }
        if fixed {
            if st.t.entry(t, t).is_negative() {
                st.negate_row(t);
            }
            t += 1;
        }
    }

    SmithNormalForm {
        diagonal: st.t,
        left: st.left,
        left_inv: st.left_inv,
        right: st.right,
        right_inv: st.right_inv,
    }
}

/// Division with remainder of minimal absolute value, so repeated reduction
/// terminates quickly.
fn rounded_div(a: &BigInt, b: &BigInt) -> BigInt {
    let q = a / b;
    let r = a - &q * b;
    if r.abs() * BigInt::from(2) > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + BigInt::one()
        } else {
            q - BigInt::one()
        }
    } else {
        q
    }
}

/// A `ℤ`-basis of the row lattice `{c·A : c ∈ ℤ^nrows}` of `A`.
pub fn row_lattice_basis(a: &IntMatrix) -> Vec<IntVector> {
    let snf = smith_normal_form(a);
    (0..snf.rank())
        .map(|i| snf.right_inv.row(i).scale(snf.diagonal.entry(i, i)))
        .collect()
}

/// A `ℤ`-basis of the saturation of the row lattice of `A`, i.e. of
/// `(ℚ-row-span of A) ∩ ℤ^ncols`.
pub fn saturation_basis(a: &IntMatrix) -> Vec<IntVector> {
    let snf = smith_normal_form(a);
    (0..snf.rank()).map(|i| snf.right_inv.row(i).clone()).collect()
}

/// Solves `c · A = x` over the integers. Returns `None` when `x` is not in
/// the row lattice of `A`.
pub fn solve_row_combination(a: &IntMatrix, x: &IntVector) -> Option<IntVector> {
    let snf = smith_normal_form(a);
    solve_with_snf(a, &snf, x)
}

/// As [`solve_row_combination`], but reusing a precomputed normal form.
pub fn solve_with_snf(a: &IntMatrix, snf: &SmithNormalForm, x: &IntVector) -> Option<IntVector> {
    assert_eq!(x.dim(), a.ncols(), "solve dimension mismatch");
    let y = snf.right.apply_left(x);
    let r = snf.rank();
    let mut c_prime = IntVector::zero(a.nrows()).into_coords();
    for j in 0..y.dim() {
        if j < r {
            let d = snf.diagonal.entry(j, j);
            if (&y[j] % d).is_zero() {
                c_prime[j] = &y[j] / d;
            } else {
                return None;
            }
        } else if !y[j].is_zero() {
            return None;
        }
    }
    Some(snf.left.apply_left(&IntVector::new(c_prime)))
}

/// A basis of the left kernel `{c ∈ ℤ^nrows : c·A = 0}`.
pub fn left_kernel_basis(a: &IntMatrix) -> Vec<IntVector> {
    let snf = smith_normal_form(a);
    (snf.rank()..a.nrows()).map(|i| snf.left.row(i).clone()).collect()
}

/// Inverse of a unimodular matrix. Panics if the matrix is not unimodular.
pub fn unimodular_inverse(a: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(a);
    assert_eq!(snf.rank(), a.nrows(), "matrix is not unimodular");
    assert!(
        snf.invariant_factors().iter().all(|d| d.is_one()),
        "matrix is not unimodular"
    );
    // left·A·right = id  ⟹  A⁻¹ = right·left
    snf.right.mul(&snf.left)
}
