//! Sparse elements of a monoid algebra over the rationals.
//!
//! An element is a finite sum of terms `c·X^e` with nonzero rational
//! coefficient `c` and integer exponent vector `e`. Terms are stored in a
//! map ordered lexicographically by exponent, which fixes a canonical
//! form; all arithmetic is exact.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::lattice::IntVector;

use super::AlgebraError;

/// An exact element of `ℚ[X^{ℤ^d}]`: finitely many terms `c·X^e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    ambient_dim: usize,
    terms: BTreeMap<IntVector, BigRational>,
}

impl AlgebraElement {
    /// The zero element of the given ambient dimension.
    pub fn zero(ambient_dim: usize) -> Self {
        AlgebraElement {
            ambient_dim,
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative unit `X^0`.
    pub fn one(ambient_dim: usize) -> Self {
        Self::monomial(IntVector::zero(ambient_dim), BigRational::one())
    }

    /// A single term `coefficient·X^exponent`; a zero coefficient yields
    /// the zero element.
    pub fn monomial(exponent: IntVector, coefficient: BigRational) -> Self {
        let ambient_dim = exponent.dim();
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(exponent, coefficient);
        }
        AlgebraElement { ambient_dim, terms }
    }

    /// Builds an element from any term list: coefficients of equal
    /// exponents are summed and zero coefficients dropped.
    pub fn from_terms<I>(ambient_dim: usize, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (IntVector, BigRational)>,
    {
        let mut map: BTreeMap<IntVector, BigRational> = BTreeMap::new();
        for (e, c) in terms {
            if e.dim() != ambient_dim {
                return Err(AlgebraError::ParentMismatch {
                    expected: ambient_dim,
                    found: e.dim(),
                });
            }
            let entry = map.entry(e).or_insert_with(BigRational::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(AlgebraElement {
            ambient_dim,
            terms: map,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (exponent-lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&IntVector, &BigRational)> {
        self.terms.iter()
    }

    /// The exponents carrying nonzero coefficients, in canonical order.
    pub fn support(&self) -> impl Iterator<Item = &IntVector> {
        self.terms.keys()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of `X^exponent`, zero when absent.
    pub fn coefficient(&self, exponent: &IntVector) -> BigRational {
        self.terms
            .get(exponent)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    fn check_parent(&self, other: &AlgebraElement) -> Result<(), AlgebraError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(AlgebraError::ParentMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// Exact sum.
    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check_parent(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(BigRational::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(AlgebraElement {
            ambient_dim: self.ambient_dim,
            terms,
        })
    }

    /// Exact difference.
    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> AlgebraElement {
        AlgebraElement {
            ambient_dim: self.ambient_dim,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    /// Exact product.
    pub fn mul(&self, other: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check_parent(other)?;
        let mut terms: BTreeMap<IntVector, BigRational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1 + e2;
                let entry = terms.entry(e).or_insert_with(BigRational::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(AlgebraElement {
            ambient_dim: self.ambient_dim,
            terms,
        })
    }

    /// Parses the [`fmt::Display`] form: terms joined by ` + `, each term
    /// `coefficient` or `coefficient*X^[e1,…,ed]`, coefficients as
    /// integers or fractions. The ambient dimension cannot be inferred
    /// from constants, so it is a parameter.
    pub fn parse(ambient_dim: usize, input: &str) -> Result<Self, AlgebraError> {
        let input = input.trim();
        if input.is_empty() {
            return Err(AlgebraError::Parse {
                message: "empty element".into(),
            });
        }
        if input == "0" {
            return Ok(Self::zero(ambient_dim));
        }
        let mut terms: Vec<(IntVector, BigRational)> = Vec::new();
        for part in input.split(" + ") {
            let part = part.trim();
            let (coeff_str, exp) = match part.split_once("*X^") {
                None => (part, IntVector::zero(ambient_dim)),
                Some((c, e)) => (c, parse_exponent(ambient_dim, e)?),
            };
            let coeff = BigRational::from_str(coeff_str).map_err(|_| AlgebraError::Parse {
                message: format!("invalid coefficient `{coeff_str}`"),
            })?;
            terms.push((exp, coeff));
        }
        Self::from_terms(ambient_dim, terms)
    }
}

fn parse_exponent(ambient_dim: usize, input: &str) -> Result<IntVector, AlgebraError> {
    let inner = input
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| AlgebraError::Parse {
            message: format!("exponent `{input}` is not of the form [e1,…,ed]"),
        })?;
    let mut coords: Vec<BigInt> = Vec::new();
    if !inner.is_empty() {
        for tok in inner.split(',') {
            let c = BigInt::from_str(tok.trim()).map_err(|_| AlgebraError::Parse {
                message: format!("invalid exponent entry `{tok}`"),
            })?;
            coords.push(c);
        }
    }
    if coords.len() != ambient_dim {
        return Err(AlgebraError::Parse {
            message: format!(
                "exponent `{input}` has {} entries, expected {ambient_dim}",
                coords.len()
            ),
        });
    }
    Ok(IntVector::new(coords))
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if e.is_zero() {
                write!(f, "{c}")?;
            } else {
                let coords: Vec<String> = e.iter().map(|x| x.to_string()).collect();
                write!(f, "{c}*X^[{}]", coords.join(","))?;
            }
        }
        Ok(())
    }
}
