//! Laurent polynomials with dyadic rational exponents.
//!
//! The groups `G_n = ⟨1/2ⁿ⟩ ⊆ ℚ` form a strictly increasing chain whose
//! union is the ring of dyadic rationals. Their group algebras over ℚ are
//! Laurent polynomial rings after the substitution `y = X^{1/2ⁿ}`, which
//! makes questions about primes, divisibility and coprimality in the
//! chain finitely checkable. This module provides exact arithmetic on
//! such elements, the substitution to univariate form, primality and
//! divisibility tests in a fixed level of the chain, the telescoping
//! factorization of `1 − X` into `n + 1` factors at depth `n`, and the
//! integer multiplier witnessing that each level sits in `ℚ` as a root
//! extension. Together these exhibit, at any configured depth, why the
//! group algebra of ℚ fails the finite-character condition: `1 − X`
//! accumulates arbitrarily many pairwise coprime prime divisors.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

mod univariate;

/// Largest supported chain depth: exponent denominators up to `2^16`.
pub const MAX_DEPTH: u32 = 16;

/// Guard against degenerate inputs whose univariate image would be huge.
const MAX_IMAGE_LENGTH: usize = 1 << 22;

/// Failures of dyadic-chain operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DyadicError {
    /// An exponent (or requested level) needs a deeper chain level than
    /// allowed.
    DepthExceeded { depth: u32, limit: u32 },
    /// An operation was called outside its stated preconditions.
    PreconditionViolated { reason: String },
}

impl fmt::Display for DyadicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DyadicError::DepthExceeded { depth, limit } => {
                write!(f, "depth {depth} exceeds the supported limit {limit}")
            }
            DyadicError::PreconditionViolated { reason } => {
                write!(f, "precondition violated: {reason}")
            }
        }
    }
}

impl core::error::Error for DyadicError {}

/// An exact dyadic rational exponent `a / 2^k`, kept in lowest terms:
/// either the numerator is odd or `k = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicExponent {
    numerator: BigInt,
    log_denominator: u32,
}

impl DyadicExponent {
    /// Builds `numerator / 2^log_denominator` and reduces to lowest
    /// terms.
    pub fn new(numerator: BigInt, log_denominator: u32) -> Self {
        let mut n = numerator;
        let mut k = log_denominator;
        if n.is_zero() {
            k = 0;
        }
        while k > 0 && n.is_even() {
            n /= 2;
            k -= 1;
        }
        DyadicExponent {
            numerator: n,
            log_denominator: k,
        }
    }

    pub fn from_integer(n: i64) -> Self {
        DyadicExponent::new(BigInt::from(n), 0)
    }

    /// The generator `1 / 2^n` of the chain level `G_n`.
    pub fn half_power(n: u32) -> Self {
        DyadicExponent::new(BigInt::one(), n)
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    /// The `k` with denominator `2^k`; the smallest chain level
    /// containing the exponent.
    pub fn log_denominator(&self) -> u32 {
        self.log_denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn add(&self, other: &DyadicExponent) -> DyadicExponent {
        let k = self.log_denominator.max(other.log_denominator);
        let a = &self.numerator << ((k - self.log_denominator) as usize);
        let b = &other.numerator << ((k - other.log_denominator) as usize);
        DyadicExponent::new(a + b, k)
    }

    pub fn neg(&self) -> DyadicExponent {
        DyadicExponent {
            numerator: -&self.numerator,
            log_denominator: self.log_denominator,
        }
    }
}

impl Ord for DyadicExponent {
    fn cmp(&self, other: &Self) -> Ordering {
        // a/2^j against b/2^k by cross multiplication with powers of two
        let lhs = &self.numerator << (other.log_denominator as usize);
        let rhs = &other.numerator << (self.log_denominator as usize);
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for DyadicExponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for DyadicExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.log_denominator == 0 {
            write!(f, "{}", self.numerator)
        } else {
            let den = BigInt::one() << (self.log_denominator as usize);
            write!(f, "{}/{}", self.numerator, den)
        }
    }
}

/// A finite sum of terms `c·X^e` with dyadic rational exponents and
/// nonzero rational coefficients, in ascending exponent order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicLaurentPoly {
    terms: BTreeMap<DyadicExponent, BigRational>,
}

impl DyadicLaurentPoly {
    pub fn zero() -> Self {
        DyadicLaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(DyadicExponent::from_integer(0), BigRational::one())
    }

    /// A single term; a zero coefficient yields the zero element.
    pub fn monomial(exponent: DyadicExponent, coefficient: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(exponent, coefficient);
        }
        DyadicLaurentPoly { terms }
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (DyadicExponent, BigRational)>,
    {
        let mut map: BTreeMap<DyadicExponent, BigRational> = BTreeMap::new();
        for (e, c) in terms {
            let entry = map.entry(e).or_insert_with(BigRational::zero);
            *entry += c;
        }
        map.retain(|_, c| !c.is_zero());
        DyadicLaurentPoly { terms: map }
    }

    /// `1 + X^{1/2^n}`.
    pub fn one_plus_x_root(n: u32) -> Self {
        Self::from_terms([
            (DyadicExponent::from_integer(0), BigRational::one()),
            (DyadicExponent::half_power(n), BigRational::one()),
        ])
    }

    /// `1 − X^{1/2^n}`.
    pub fn one_minus_x_root(n: u32) -> Self {
        Self::from_terms([
            (DyadicExponent::from_integer(0), BigRational::one()),
            (DyadicExponent::half_power(n), -BigRational::one()),
        ])
    }

    /// `1 − X`.
    pub fn one_minus_x() -> Self {
        Self::one_minus_x_root(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&DyadicExponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponent: &DyadicExponent) -> BigRational {
        self.terms
            .get(exponent)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// The minimal chain level whose group contains every exponent.
    pub fn depth(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.log_denominator)
            .max()
            .unwrap_or(0)
    }

    pub fn add(&self, other: &DyadicLaurentPoly) -> DyadicLaurentPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert_with(BigRational::zero);
            *entry += c;
        }
        terms.retain(|_, c| !c.is_zero());
        DyadicLaurentPoly { terms }
    }

    pub fn neg(&self) -> DyadicLaurentPoly {
        DyadicLaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &DyadicLaurentPoly) -> DyadicLaurentPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &DyadicLaurentPoly) -> DyadicLaurentPoly {
        let mut terms: BTreeMap<DyadicExponent, BigRational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.add(e2);
                let entry = terms.entry(e).or_insert_with(BigRational::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        DyadicLaurentPoly { terms }
    }
}

impl fmt::Display for DyadicLaurentPoly {
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
                write!(f, "{c}*X^({e})")?;
            }
        }
        Ok(())
    }
}

/// A Laurent polynomial in `y = X^{1/2ⁿ}`, normalized as a monomial unit
/// `y^{unit_exponent}` times an ordinary polynomial with nonzero constant
/// term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivariateImage {
    pub unit_exponent: BigInt,
    /// Coefficients by ascending degree; empty for zero, and otherwise
    /// the constant term is nonzero.
    pub coefficients: Vec<BigRational>,
}

impl UnivariateImage {
    pub fn degree(&self) -> Option<usize> {
        if self.coefficients.is_empty() {
            None
        } else {
            Some(self.coefficients.len() - 1)
        }
    }
}

/// Rewrites `f` in the variable `y = X^{1/2ⁿ}`: every exponent `a/2^k`
/// with `k ≤ n` becomes the integer `a·2^{n−k}`. Fails with
/// [`DyadicError::DepthExceeded`] when some exponent needs a deeper
/// level.
pub fn to_univariate(f: &DyadicLaurentPoly, n: u32) -> Result<UnivariateImage, DyadicError> {
    if n > MAX_DEPTH {
        return Err(DyadicError::DepthExceeded {
            depth: n,
            limit: MAX_DEPTH,
        });
    }
    if f.depth() > n {
        return Err(DyadicError::DepthExceeded {
            depth: f.depth(),
            limit: n,
        });
    }
    if f.is_zero() {
        return Ok(UnivariateImage {
            unit_exponent: BigInt::zero(),
            coefficients: Vec::new(),
        });
    }
    let mut image: BTreeMap<BigInt, BigRational> = BTreeMap::new();
    for (e, c) in f.terms() {
        let y_exp = e.numerator() << ((n - e.log_denominator()) as usize);
        image.insert(y_exp, c.clone());
    }
    let min = image.keys().next().unwrap().clone();
    let max = image.keys().next_back().unwrap().clone();
    let length = (&max - &min + BigInt::one())
        .to_usize()
        .filter(|&l| l <= MAX_IMAGE_LENGTH)
        .ok_or_else(|| DyadicError::PreconditionViolated {
            reason: format!(
                "univariate image would span degrees {min} to {max}, beyond \
                 the supported size"
            ),
        })?;
    let mut coefficients = alloc::vec![BigRational::zero(); length];
    for (y_exp, c) in image {
        let idx = (&y_exp - &min).to_usize().expect("index within image length");
        coefficients[idx] = c;
    }
    Ok(UnivariateImage {
        unit_exponent: min,
        coefficients,
    })
}

/// Is `f` a prime element of the level-`n` group algebra? Units
/// (monomials) are not prime; otherwise primality is irreducibility of
/// the normalized univariate image over ℚ, which suffices because the
/// image ring is a Laurent polynomial ring over a field.
pub fn is_prime_in_gn(f: &DyadicLaurentPoly, n: u32) -> Result<bool, DyadicError> {
    if f.is_zero() {
        return Err(DyadicError::PreconditionViolated {
            reason: String::from("the zero element is not a candidate prime"),
        });
    }
    let image = to_univariate(f, n)?;
    if image.coefficients.len() <= 1 {
        return Ok(false);
    }
    Ok(univariate::irreducible_over_q(&image.coefficients))
}

/// Does `a` divide `b` in the level-`n` group algebra? Monomial units are
/// invertible, so the question reduces to exact polynomial division of
/// the normalized univariate images.
pub fn divides_in_gn(
    a: &DyadicLaurentPoly,
    b: &DyadicLaurentPoly,
    n: u32,
) -> Result<bool, DyadicError> {
    if a.is_zero() {
        return Err(DyadicError::PreconditionViolated {
            reason: String::from("division by the zero element"),
        });
    }
    if b.is_zero() {
        return Ok(true);
    }
    let ia = to_univariate(a, n)?;
    let ib = to_univariate(b, n)?;
    let (_, rem) = univariate::divrem(&ib.coefficients, &ia.coefficients);
    Ok(rem.is_empty())
}

/// Are `a` and `b` coprime in the level-`n` group algebra, i.e. is every
/// common divisor a unit?
pub fn coprime_in_gn(
    a: &DyadicLaurentPoly,
    b: &DyadicLaurentPoly,
    n: u32,
) -> Result<bool, DyadicError> {
    if a.is_zero() || b.is_zero() {
        return Err(DyadicError::PreconditionViolated {
            reason: String::from("coprimality requires nonzero elements"),
        });
    }
    let ia = to_univariate(a, n)?;
    let ib = to_univariate(b, n)?;
    let g = univariate::gcd(&ia.coefficients, &ib.coefficients);
    Ok(g.len() == 1)
}

/// The verified factorization of `1 − X` at depth `n` into `n + 1`
/// factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TelescopingCertificate {
    pub depth: u32,
    /// `1 + X^{1/2}, 1 + X^{1/4}, …, 1 + X^{1/2ⁿ}, 1 − X^{1/2ⁿ}`.
    pub factors: Vec<DyadicLaurentPoly>,
    /// Their exact product, asserted equal to `1 − X`.
    pub product: DyadicLaurentPoly,
}

/// Computes `(1+X^{1/2})(1+X^{1/4})⋯(1+X^{1/2ⁿ})·(1−X^{1/2ⁿ})` exactly
/// and asserts it equals `1 − X`.
pub fn telescoping_identity(n: u32) -> Result<TelescopingCertificate, DyadicError> {
    if n == 0 {
        return Err(DyadicError::PreconditionViolated {
            reason: String::from("the telescoping identity needs depth at least one"),
        });
    }
    if n > MAX_DEPTH {
        return Err(DyadicError::DepthExceeded {
            depth: n,
            limit: MAX_DEPTH,
        });
    }
    let mut factors: Vec<DyadicLaurentPoly> = (1..=n)
        .map(DyadicLaurentPoly::one_plus_x_root)
        .collect();
    factors.push(DyadicLaurentPoly::one_minus_x_root(n));
    let mut product = DyadicLaurentPoly::one();
    for f in &factors {
        product = product.mul(f);
    }
    assert_eq!(
        product,
        DyadicLaurentPoly::one_minus_x(),
        "telescoping product failed to collapse"
    );
    Ok(TelescopingCertificate {
        depth: n,
        factors,
        product,
    })
}

/// The integer multiplier witnessing that the chain level sits inside ℚ
/// as a root extension: for `a/b` in lowest terms, `b · (a/b) = a` is an
/// integer and every integer lies in `G_n`.
pub fn root_extension_check(
    numerator: &BigInt,
    denominator: &BigInt,
    _n: u32,
) -> Result<BigInt, DyadicError> {
    if denominator < &BigInt::one() {
        return Err(DyadicError::PreconditionViolated {
            reason: format!("denominator {denominator} must be at least one"),
        });
    }
    let g = numerator.gcd(denominator);
    let multiplier = if g.is_zero() {
        // the fraction is 0/b; multiplier 1 already lands on an integer
        BigInt::one()
    } else {
        denominator / &g
    };
    // the product with the original fraction is an integer by construction
    debug_assert!((&multiplier * numerator % denominator).is_zero());
    Ok(multiplier)
}
