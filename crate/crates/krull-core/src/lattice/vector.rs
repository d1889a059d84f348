//! Dense integer vectors and matrices over arbitrary-precision integers.
//!
//! These are deliberately simple row-major structures: every cone, monoid and
//! ideal in this crate lives in ambient dimension at most four, so asymptotic
//! cleverness buys nothing and exactness is everything.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// An element of `ℤ^d`. Ordering is lexicographic by coordinate, which is the
/// canonical tie-breaker used everywhere in this crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IntVector {
    coords: Vec<BigInt>,
}

impl IntVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        IntVector { coords }
    }

    /// Convenience constructor used pervasively in tests and examples.
    pub fn from_i64s(coords: &[i64]) -> Self {
        IntVector {
            coords: coords.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn zero(dim: usize) -> Self {
        IntVector {
            coords: vec![BigInt::zero(); dim],
        }
    }

    /// The standard basis vector `e_i` in dimension `dim`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.coords[i] = BigInt::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.coords
    }

    pub fn iter(&self) -> core::slice::Iter<'_, BigInt> {
        self.coords.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        assert_eq!(self.dim(), other.dim(), "dot product dimension mismatch");
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn scale(&self, k: &BigInt) -> IntVector {
        IntVector {
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    /// Greatest common divisor of the coordinates (0 for the zero vector).
    pub fn content(&self) -> BigInt {
        self.coords
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content; the zero vector is returned unchanged and the
    /// sign of the leading nonzero coordinate is preserved.
    pub fn primitive(&self) -> IntVector {
        let c = self.content();
        if c.is_zero() {
            return self.clone();
        }
        IntVector {
            coords: self.coords.iter().map(|x| x / &c).collect(),
        }
    }

    /// Concatenation, used when stacking unit and reduced coordinates.
    pub fn concat(&self, other: &IntVector) -> IntVector {
        let mut coords = self.coords.clone();
        coords.extend(other.coords.iter().cloned());
        IntVector { coords }
    }
}

impl Index<usize> for IntVector {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.coords[i]
    }
}

impl Add for &IntVector {
    type Output = IntVector;
    fn add(self, other: &IntVector) -> IntVector {
        assert_eq!(self.dim(), other.dim(), "vector addition dimension mismatch");
        IntVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &IntVector {
    type Output = IntVector;
    fn sub(self, other: &IntVector) -> IntVector {
        assert_eq!(self.dim(), other.dim(), "vector subtraction dimension mismatch");
        IntVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &IntVector {
    type Output = IntVector;
    fn neg(self) -> IntVector {
        IntVector {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

// Debug forwards to Display: vectors read much better that way in test
// failures and witness printouts.
impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A rectangular integer matrix stored as a list of rows of equal length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: Vec<IntVector>,
    ncols: usize,
}

impl IntMatrix {
    /// Builds a matrix from rows, which must all have the same dimension.
    /// `ncols` must be supplied for the degenerate zero-row case.
    pub fn from_rows(rows: Vec<IntVector>, ncols: usize) -> Self {
        for r in &rows {
            assert_eq!(r.dim(), ncols, "ragged rows in matrix constructor");
        }
        IntMatrix { rows, ncols }
    }

    pub fn from_i64s(rows: &[&[i64]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        IntMatrix::from_rows(rows.iter().map(|r| IntVector::from_i64s(r)).collect(), ncols)
    }

    pub fn identity(n: usize) -> Self {
        IntMatrix {
            rows: (0..n).map(|i| IntVector::unit(n, i)).collect(),
            ncols: n,
        }
    }

    pub fn zero(nrows: usize, ncols: usize) -> Self {
        IntMatrix {
            rows: (0..nrows).map(|_| IntVector::zero(ncols)).collect(),
            ncols,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &IntVector {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[IntVector] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, v: BigInt) {
        let mut coords = core::mem::take(&mut self.rows[i]).into_coords();
        coords[j] = v;
        self.rows[i] = IntVector::new(coords);
    }

    pub fn set_row(&mut self, i: usize, row: IntVector) {
        assert_eq!(row.dim(), self.ncols, "set_row dimension mismatch");
        self.rows[i] = row;
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        self.rows.swap(i, j);
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut rows = Vec::with_capacity(self.ncols);
        for j in 0..self.ncols {
            rows.push(IntVector::new(
                self.rows.iter().map(|r| r[j].clone()).collect(),
            ));
        }
        IntMatrix {
            rows,
            ncols: self.nrows(),
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.ncols, other.nrows(), "matrix product dimension mismatch");
        let mut rows = Vec::with_capacity(self.nrows());
        for r in &self.rows {
            let mut out = vec![BigInt::zero(); other.ncols()];
            for (k, c) in r.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (j, o) in out.iter_mut().enumerate() {
                    *o += c * other.entry(k, j);
                }
            }
            rows.push(IntVector::new(out));
        }
        IntMatrix {
            rows,
            ncols: other.ncols(),
        }
    }

    /// Row vector times matrix, i.e. `v · self`.
    pub fn apply_left(&self, v: &IntVector) -> IntVector {
        assert_eq!(v.dim(), self.nrows(), "apply_left dimension mismatch");
        let mut out = vec![BigInt::zero(); self.ncols];
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o += c * self.entry(k, j);
            }
        }
        IntVector::new(out)
    }

    /// Rank over the rationals, computed by fraction-free Gaussian
    /// elimination (Bareiss) so all intermediate values stay integral.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = self
            .rows
            .iter()
            .map(|r| r.coords().to_vec())
            .collect();
        let nr = m.len();
        let nc = self.ncols;
        let mut rank = 0;
        let mut prev_pivot = BigInt::one();
        for col in 0..nc {
            let pivot_row = (rank..nr).find(|&i| !m[i][col].is_zero());
            let Some(p) = pivot_row else { continue };
            m.swap(rank, p);
            let pivot = m[rank][col].clone();
            for i in rank + 1..nr {
                for j in col + 1..nc {
                    let t = &pivot * &m[i][j] - &m[i][col] * &m[rank][j];
                    m[i][j] = &t / &prev_pivot;
                }
                m[i][col] = BigInt::zero();
            }
            prev_pivot = pivot;
            rank += 1;
            if rank == nr {
                break;
            }
        }
        rank
    }

    /// Determinant of a square matrix by the Bareiss algorithm.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.nrows(), self.ncols, "determinant of non-square matrix");
        let n = self.ncols;
        if n == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> = self
            .rows
            .iter()
            .map(|r| r.coords().to_vec())
            .collect();
        let mut sign = BigInt::one();
        let mut prev_pivot = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap(k, p);
                sign = -sign;
            }
            let pivot = m[k][k].clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &pivot * &m[i][j] - &m[i][k] * &m[k][j];
                    m[i][j] = &t / &prev_pivot;
                }
                m[i][k] = BigInt::zero();
            }
            prev_pivot = pivot;
        }
        sign * m[n - 1][n - 1].clone()
    }

    pub fn is_unimodular(&self) -> bool {
        self.nrows() == self.ncols && self.det().abs().is_one()
    }

    /// Adjugate of a square matrix: `self · adj = adj · self = det · id`.
    pub fn adjugate(&self) -> IntMatrix {
        assert_eq!(self.nrows(), self.ncols, "adjugate of non-square matrix");
        let n = self.ncols;
        if n == 0 {
            return IntMatrix::identity(0);
        }
        if n == 1 {
            return IntMatrix::identity(1);
        }
        let mut out = IntMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                // adj[i][j] = (−1)^{i+j} · det(minor with row j, column i removed)
                let minor: Vec<IntVector> = (0..n)
                    .filter(|&r| r != j)
                    .map(|r| {
                        IntVector::new(
                            (0..n)
                                .filter(|&c| c != i)
                                .map(|c| self.entry(r, c).clone())
                                .collect(),
                        )
                    })
                    .collect();
                let mut cof = IntMatrix::from_rows(minor, n - 1).det();
                if (i + j) % 2 == 1 {
                    cof = -cof;
                }
                out.set_entry(i, j, cof);
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self
            .rows
            .iter()
            .map(|r| alloc::format!("{r}"))
            .collect();
        write!(f, "[{}]", entries.join("; "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_is_coordinatewise() {
        let a = IntVector::from_i64s(&[1, 5]);
        let b = IntVector::from_i64s(&[2, 0]);
        let c = IntVector::from_i64s(&[1, 6]);
        assert!(a < b);
        assert!(a < c);
        assert!(c < b);
    }

    #[test]
    fn primitive_divides_out_content() {
        let v = IntVector::from_i64s(&[6, -9, 0]);
        assert_eq!(v.content(), BigInt::from(3));
        assert_eq!(v.primitive(), IntVector::from_i64s(&[2, -3, 0]));
        let z = IntVector::zero(3);
        assert_eq!(z.primitive(), z);
    }

    #[test]
    fn rank_and_det_small_cases() {
        let m = IntMatrix::from_i64s(&[&[2, 0], &[0, 4]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.det(), BigInt::from(8));
        let singular = IntMatrix::from_i64s(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.rank(), 1);
        assert_eq!(singular.det(), BigInt::zero());
        let id = IntMatrix::identity(3);
        assert!(id.is_unimodular());
    }

    #[test]
    fn product_against_hand_computation() {
        let a = IntMatrix::from_i64s(&[&[1, 2], &[3, 4]]);
        let b = IntMatrix::from_i64s(&[&[0, 1], &[1, 1]]);
        assert_eq!(a.mul(&b), IntMatrix::from_i64s(&[&[2, 3], &[4, 7]]));
    }

    #[test]
    fn adjugate_times_matrix_is_det_scaled_identity() {
        let a = IntMatrix::from_i64s(&[&[2, 1, 0], &[-1, 3, 2], &[0, 5, 1]]);
        let d = a.det();
        let adj = a.adjugate();
        let mut scaled = IntMatrix::identity(3);
        for i in 0..3 {
            let e = &d * scaled.entry(i, i);
            scaled.set_entry(i, i, e);
        }
        assert_eq!(a.mul(&adj), scaled);
        assert_eq!(adj.mul(&a), scaled);
    }
}
