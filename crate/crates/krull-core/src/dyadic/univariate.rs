//! Exact univariate polynomial arithmetic over the rationals.
//!
//! Dense representation: coefficient vectors indexed by ascending degree
//! with no trailing zeros, the empty vector being zero. The module
//! answers the factorization questions the dyadic layer asks: exact
//! division, greatest common divisors, and a complete irreducibility
//! decision over ℚ. Irreducibility combines cheap complete criteria
//! (degree, rational roots, squarefreeness) with sound finite-field
//! certificates and falls back to a Kronecker factor search, which is
//! exhaustive and therefore decides both directions.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Drops trailing zero coefficients.
pub(super) fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Degree of a trimmed polynomial, `None` for zero.
pub(super) fn degree(p: &[BigRational]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

/// Exact product.
#[cfg(test)]
pub(super) fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    trim(&mut out);
    out
}

/// Exact long division: returns `(quotient, remainder)` with
/// `deg(remainder) < deg(divisor)`.
pub(super) fn divrem(
    num: &[BigRational],
    den: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>) {
    assert!(!den.is_empty(), "division by the zero polynomial");
    let mut rem: Vec<BigRational> = num.to_vec();
    trim(&mut rem);
    let dd = den.len() - 1;
    let lead = &den[dd];
    if rem.len() <= dd {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - dd];
    while rem.len() > dd {
        let k = rem.len() - 1 - dd;
        let c = rem.last().unwrap() / lead;
        for (j, dc) in den.iter().enumerate() {
            let t = &c * dc;
            rem[k + j] -= t;
        }
        quot[k] = c;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Monic greatest common divisor; zero for two zero inputs.
pub(super) fn gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut x: Vec<BigRational> = a.to_vec();
    let mut y: Vec<BigRational> = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(lead) = x.last().cloned() {
        for c in &mut x {
            *c /= &lead;
        }
    }
    x
}

/// Formal derivative.
pub(super) fn derivative(p: &[BigRational]) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect();
    trim(&mut out);
    out
}

/// Primitive integer form of a nonzero rational polynomial: denominators
/// cleared, content divided out, leading coefficient positive.
pub(super) fn primitive_integer(p: &[BigRational]) -> Vec<BigInt> {
    assert!(!p.is_empty(), "the zero polynomial has no primitive form");
    let mut scale = BigInt::one();
    for c in p {
        scale = scale.lcm(c.denom());
    }
    let mut z: Vec<BigInt> = p
        .iter()
        .map(|c| c.numer() * (&scale / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for c in &z {
        content = content.gcd(c);
    }
    if z.last().unwrap().is_negative() {
        content = -content;
    }
    for c in &mut z {
        *c /= &content;
    }
    z
}

fn eval_int(z: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in z.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn eval_rational(z: &[BigInt], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in z.iter().rev() {
        acc = acc * x + BigRational::from_integer(c.clone());
    }
    acc
}

/// Positive divisors of `|n|` for nonzero `n`, by trial division.
fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    assert!(!n.is_zero());
    let mut small: Vec<BigInt> = Vec::new();
    let mut large: Vec<BigInt> = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Does the primitive integer polynomial have a rational root?
fn has_rational_root(z: &[BigInt]) -> bool {
    let a0 = &z[0];
    let ad = z.last().unwrap();
    debug_assert!(!a0.is_zero());
    for r in positive_divisors(a0) {
        for s in positive_divisors(ad) {
            for sign in [1i64, -1] {
                let root = BigRational::new(&r * BigInt::from(sign), s.clone());
                if eval_rational(z, &root).is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

// --- finite-field irreducibility certificates ------------------------------

const CERTIFICATE_PRIMES: [u64; 10] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31];

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % p as u128) as u64;
        }
        base = ((base as u128 * base as u128) % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

fn mod_inv(x: u64, p: u64) -> u64 {
    mod_pow(x, p - 2, p)
}

fn fp_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Remainder of `a` by the monic polynomial `f` over 𝔽_p.
fn fp_rem(mut a: Vec<u64>, f: &[u64], p: u64) -> Vec<u64> {
    let d = f.len() - 1;
    while a.len() > d {
        let c = *a.last().unwrap();
        let k = a.len() - 1 - d;
        if c != 0 {
            for (j, fc) in f.iter().enumerate() {
                let sub = (c as u128 * *fc as u128 % p as u128) as u64;
                a[k + j] = (a[k + j] + p - sub) % p;
            }
        }
        a.pop();
        fp_trim(&mut a);
    }
    fp_trim(&mut a);
    a
}

fn fp_mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ca) in a.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        for (j, &cb) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + (ca as u128 * cb as u128 % p as u128) as u64) % p;
        }
    }
    fp_trim(&mut out);
    fp_rem(out, f, p)
}

/// `a^p mod f` over 𝔽_p by binary exponentiation.
fn fp_powmod_p(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut base = a.to_vec();
    let mut exp = p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = fp_mulmod(&acc, &base, f, p);
        }
        base = fp_mulmod(&base, &base, f, p);
        exp >>= 1;
    }
    acc
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    fp_trim(&mut x);
    fp_trim(&mut y);
    while !y.is_empty() {
        // reduce x by the monic normalization of y
        let lead_inv = mod_inv(*y.last().unwrap(), p);
        let monic: Vec<u64> = y
            .iter()
            .map(|&c| (c as u128 * lead_inv as u128 % p as u128) as u64)
            .collect();
        let r = fp_rem(x, &monic, p);
        x = y;
        y = r;
    }
    x
}

fn fp_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().max(b.len())];
    for (i, &c) in a.iter().enumerate() {
        out[i] = c % p;
    }
    for (i, &c) in b.iter().enumerate() {
        out[i] = (out[i] + p - c % p) % p;
    }
    fp_trim(&mut out);
    out
}

/// Is the monic polynomial `f` irreducible over 𝔽_p? Uses the Frobenius
/// criterion: `y^{p^d} ≡ y (mod f)` and `gcd(y^{p^{d/q}} − y, f) = 1` for
/// every prime `q` dividing `d`.
fn fp_irreducible(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    // frob[j] = y^{p^j} mod f, built by iterated p-th powers
    let y = vec![0u64, 1];
    let mut frob = y.clone();
    let mut powers: Vec<Vec<u64>> = vec![y.clone()];
    for _ in 0..d {
        frob = fp_powmod_p(&frob, f, p);
        powers.push(frob.clone());
    }
    if powers[d] != y {
        return false;
    }
    let mut m = d;
    let mut prime_divisors: Vec<usize> = Vec::new();
    let mut q = 2;
    while q * q <= m {
        if m % q == 0 {
            prime_divisors.push(q);
            while m % q == 0 {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        prime_divisors.push(m);
    }
    for q in prime_divisors {
        let h = fp_sub(&powers[d / q], &y, p);
        let g = fp_gcd(&h, f, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Tries to certify irreducibility of the primitive integer polynomial by
/// reduction modulo a small prime preserving the degree.
fn certified_irreducible_mod_p(z: &[BigInt]) -> bool {
    let d = z.len() - 1;
    for &p in &CERTIFICATE_PRIMES {
        let big_p = BigInt::from(p);
        if (z.last().unwrap() % &big_p).is_zero() {
            continue;
        }
        let mut zp: Vec<u64> = z
            .iter()
            .map(|c| c.mod_floor(&big_p).to_u64().expect("residue fits"))
            .collect();
        fp_trim(&mut zp);
        if zp.len() != d + 1 {
            continue;
        }
        // make monic
        let lead_inv = mod_inv(*zp.last().unwrap(), p);
        for c in &mut zp {
            *c = (*c as u128 * lead_inv as u128 % p as u128) as u64;
        }
        if fp_irreducible(&zp, p) {
            return true;
        }
    }
    false
}

// --- Kronecker factor search -----------------------------------------------

/// Interpolation points 0, 1, −1, 2, −2, …
fn interpolation_points(count: usize) -> Vec<BigInt> {
    let mut pts = Vec::with_capacity(count);
    let mut k = 0i64;
    while pts.len() < count {
        if k == 0 {
            pts.push(BigInt::zero());
        } else {
            pts.push(BigInt::from(k));
            if pts.len() < count {
                pts.push(BigInt::from(-k));
            }
        }
        k += 1;
    }
    pts
}

/// Lagrange interpolation through `(xs[i], ys[i])`, as a rational
/// polynomial.
fn interpolate(xs: &[BigInt], ys: &[BigRational]) -> Vec<BigRational> {
    let mut acc: Vec<BigRational> = Vec::new();
    for (i, xi) in xs.iter().enumerate() {
        // basis polynomial Π_{j≠i} (y − x_j)/(x_i − x_j), scaled by ys[i]
        let mut basis = vec![ys[i].clone()];
        for (j, xj) in xs.iter().enumerate() {
            if i == j {
                continue;
            }
            let denom = BigRational::from_integer(xi - xj);
            // multiply by (y − x_j) / denom
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                let scaled = c / &denom;
                next[k] -= &scaled * BigRational::from_integer(xj.clone());
                next[k + 1] += scaled;
            }
            basis = next;
        }
        if acc.len() < basis.len() {
            acc.resize(basis.len(), BigRational::zero());
        }
        for (k, c) in basis.into_iter().enumerate() {
            acc[k] += c;
        }
    }
    trim(&mut acc);
    acc
}

/// Exhaustive Kronecker search for a nontrivial factor of a primitive
/// integer polynomial with no rational roots and nonzero constant term.
/// Complete: a factor of degree `k` takes divisor values at `k+1` points,
/// so trying every divisor combination finds one whenever it exists.
fn kronecker_reducible(z: &[BigInt]) -> bool {
    let d = z.len() - 1;
    let zq: Vec<BigRational> = z
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    for k in 2..=d / 2 {
        let xs = interpolation_points(k + 1);
        let values: Vec<BigInt> = xs.iter().map(|x| eval_int(z, x)).collect();
        debug_assert!(
            values.iter().all(|v| !v.is_zero()),
            "integer roots must be ruled out before the Kronecker search"
        );
        let divisor_lists: Vec<Vec<BigInt>> = values
            .iter()
            .map(|v| {
                let mut ds: Vec<BigInt> = Vec::new();
                for p in positive_divisors(v) {
                    ds.push(-&p);
                    ds.push(p);
                }
                ds
            })
            .collect();
        // odometer over all divisor choices
        let mut idx = vec![0usize; k + 1];
        loop {
            let ys: Vec<BigRational> = idx
                .iter()
                .enumerate()
                .map(|(i, &j)| BigRational::from_integer(divisor_lists[i][j].clone()))
                .collect();
            let g = interpolate(&xs, &ys);
            // only exact-degree integer candidates matter: smaller degrees
            // were covered by smaller k (and degree one by the root test)
            if degree(&g) == Some(k) && g.iter().all(|c| c.denom().is_one()) {
                let (_, rem) = divrem(&zq, &g);
                if rem.is_empty() {
                    return true;
                }
            }
            // advance
            let mut pos = 0;
            loop {
                if pos > k {
                    break;
                }
                idx[pos] += 1;
                if idx[pos] < divisor_lists[pos].len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
            if pos > k {
                break;
            }
        }
    }
    false
}

/// Complete irreducibility decision over ℚ for polynomials with nonzero
/// constant term; degree-zero polynomials are units and report `false`.
pub(super) fn irreducible_over_q(p: &[BigRational]) -> bool {
    let Some(d) = degree(p) else {
        return false;
    };
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    debug_assert!(
        !p[0].is_zero(),
        "callers must normalize away monomial units first"
    );
    // a repeated factor is a factor
    let g = gcd(p, &derivative(p));
    if degree(&g).is_some_and(|dg| dg >= 1) {
        return false;
    }
    let z = primitive_integer(p);
    if has_rational_root(&z) {
        return false;
    }
    // degree two and three factorizations force a linear factor
    if d <= 3 {
        return true;
    }
    if certified_irreducible_mod_p(&z) {
        return true;
    }
    !kronecker_reducible(&z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(coeffs: &[i64]) -> Vec<BigRational> {
        let mut p: Vec<BigRational> = coeffs
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        trim(&mut p);
        p
    }

    #[test]
    fn division_recovers_known_factorizations() {
        // y² − 1 = (y − 1)(y + 1)
        let (q, r) = divrem(&poly(&[-1, 0, 1]), &poly(&[-1, 1]));
        assert_eq!(q, poly(&[1, 1]));
        assert!(r.is_empty());
        // y³ + 1 divided by y + 2 leaves remainder −7
        let (_, r) = divrem(&poly(&[1, 0, 0, 1]), &poly(&[2, 1]));
        assert_eq!(r, poly(&[-7]));
    }

    #[test]
    fn gcd_extracts_the_common_factor() {
        let a = mul(&poly(&[1, 1]), &poly(&[1, 0, 1]));
        let b = mul(&poly(&[1, 1]), &poly(&[-2, 1]));
        assert_eq!(gcd(&a, &b), poly(&[1, 1]));
        assert_eq!(gcd(&poly(&[1, 1]), &poly(&[-1, 1])).len(), 1);
    }

    #[test]
    fn primitive_form_clears_denominators_and_content() {
        let p: Vec<BigRational> = vec![
            BigRational::new(BigInt::from(2), BigInt::from(3)),
            BigRational::new(BigInt::from(4), BigInt::from(3)),
        ];
        assert_eq!(primitive_integer(&p), vec![BigInt::from(1), BigInt::from(2)]);
        let q = poly(&[-2, 0, -4]);
        assert_eq!(
            primitive_integer(&q),
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(2)]
        );
    }

    #[test]
    fn frozen_irreducibility_verdicts() {
        // irreducible: linear, y²+1, y⁴+1 (reducible modulo every prime),
        // the fifth and ninth cyclotomics, y³+y+1, y⁵−y−1
        assert!(irreducible_over_q(&poly(&[1, 1])));
        assert!(irreducible_over_q(&poly(&[1, 0, 1])));
        assert!(irreducible_over_q(&poly(&[1, 0, 0, 0, 1])));
        assert!(irreducible_over_q(&poly(&[1, 1, 1, 1, 1])));
        assert!(irreducible_over_q(&poly(&[1, 0, 0, 1, 0, 0, 1])));
        assert!(irreducible_over_q(&poly(&[1, 1, 0, 1])));
        assert!(irreducible_over_q(&poly(&[-1, -1, 0, 0, 0, 1])));
        // reducible: y²−1, y⁴−5y²+6 = (y²−2)(y²−3), (y²+1)²,
        // (y²+1)(y³+y+1), y⁶+1 = (y²+1)(y⁴−y²+1)
        assert!(!irreducible_over_q(&poly(&[-1, 0, 1])));
        assert!(!irreducible_over_q(&poly(&[6, 0, -5, 0, 1])));
        assert!(!irreducible_over_q(&mul(&poly(&[1, 0, 1]), &poly(&[1, 0, 1]))));
        assert!(!irreducible_over_q(&mul(&poly(&[1, 0, 1]), &poly(&[1, 1, 0, 1]))));
        assert!(!irreducible_over_q(&poly(&[1, 0, 0, 0, 0, 0, 1])));
        // units are not irreducible
        assert!(!irreducible_over_q(&poly(&[5])));
        assert!(!irreducible_over_q(&poly(&[])));
    }

    #[test]
    fn finite_field_certificates_agree_with_known_cases() {
        // y² + 1 over 𝔽₃ is irreducible, over 𝔽₅ it splits
        assert!(fp_irreducible(&[1, 0, 1], 3));
        assert!(!fp_irreducible(&[1, 0, 1], 5));
        // y³ + y + 1 over 𝔽₅ is irreducible (no roots, degree three)
        assert!(fp_irreducible(&[1, 1, 0, 1], 5));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn division_is_exact(
            a in proptest::collection::vec(-5i64..=5, 1..6),
            b in proptest::collection::vec(-5i64..=5, 1..6),
        ) {
            let a = poly(&a);
            let b = poly(&b);
            prop_assume!(!b.is_empty());
            let (q, r) = divrem(&a, &b);
            let mut recomposed = mul(&q, &b);
            if recomposed.len() < r.len() {
                recomposed.resize(r.len(), BigRational::zero());
            }
            for (k, c) in r.iter().enumerate() {
                recomposed[k] += c;
            }
            trim(&mut recomposed);
            prop_assert_eq!(recomposed, a);
            prop_assert!(r.len() < b.len());
        }

        #[test]
        fn products_are_never_irreducible(
            a in proptest::collection::vec(-4i64..=4, 2..4),
            b in proptest::collection::vec(-4i64..=4, 2..4),
        ) {
            let a = poly(&a);
            let b = poly(&b);
            prop_assume!(degree(&a).is_some_and(|d| d >= 1));
            prop_assume!(degree(&b).is_some_and(|d| d >= 1));
            let p = mul(&a, &b);
            prop_assume!(!p[0].is_zero());
            prop_assert!(!irreducible_over_q(&p));
        }

        #[test]
        fn gcd_divides_both(
            a in proptest::collection::vec(-4i64..=4, 1..5),
            b in proptest::collection::vec(-4i64..=4, 1..5),
        ) {
            let a = poly(&a);
            let b = poly(&b);
            prop_assume!(!a.is_empty() && !b.is_empty());
            let g = gcd(&a, &b);
            prop_assert!(divrem(&a, &g).1.is_empty());
            prop_assert!(divrem(&b, &g).1.is_empty());
        }
    }
}
