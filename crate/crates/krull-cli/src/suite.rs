//! The dyadic counterexample suite behind `krull counterexample`.
//!
//! For the chain of groups `G_n = ⟨1/2ⁿ⟩ ⊆ ℚ` the suite certifies, at a
//! chosen depth, the facts that make `K[G_n]` a weakly Krull domain whose
//! element `1 − X` gains a new prime divisor at every level: each chain
//! generator `1 + X^{1/2ⁱ}` is prime, deeper generators never divide
//! coarser ones, distinct generators are coprime, every level sits inside
//! ℚ as a root extension, and the telescoping product collapses exactly
//! to `1 − X`.

use krull_core::dyadic::{
    coprime_in_gn, divides_in_gn, is_prime_in_gn, root_extension_check, telescoping_identity,
    to_univariate, DyadicLaurentPoly,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::report::ToolInfo;

/// One verified fact of the suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// The whole suite outcome at one depth.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub tool: ToolInfo,
    pub depth: u32,
    pub items: Vec<SuiteItem>,
    pub passed: bool,
}

fn item(name: &str, passed: bool, detail: String) -> SuiteItem {
    SuiteItem {
        name: name.into(),
        passed,
        detail,
    }
}

/// `1 + X^{1/2ⁿ}`, the level-`n` chain generator (`1 + X` for `n = 0`).
fn chain_generator(n: u32) -> DyadicLaurentPoly {
    if n == 0 {
        DyadicLaurentPoly::one().add(&DyadicLaurentPoly::monomial(
            krull_core::dyadic::DyadicExponent::from_integer(1),
            BigRational::one(),
        ))
    } else {
        DyadicLaurentPoly::one_plus_x_root(n)
    }
}

fn substitution_item(depth: u32) -> SuiteItem {
    // every chain generator must rewrite to 1 + y at its own level: the
    // substitution witnessing K[G_i] ≅ K[ℤ]
    let mut failed = Vec::new();
    for i in 1..=depth {
        match to_univariate(&chain_generator(i), i) {
            Ok(image)
                if image.unit_exponent == BigInt::from(0)
                    && image.coefficients == vec![BigRational::one(), BigRational::one()] => {}
            _ => failed.push(i),
        }
    }
    item(
        "substitution_images",
        failed.is_empty(),
        if failed.is_empty() {
            format!("all {depth} chain generators rewrite to 1 + y at their own level")
        } else {
            format!("levels {failed:?} failed to rewrite to 1 + y")
        },
    )
}

fn primality_item(depth: u32) -> SuiteItem {
    let mut failed = Vec::new();
    for i in 1..=depth {
        if !is_prime_in_gn(&chain_generator(i), i).unwrap_or(false) {
            failed.push(i);
        }
    }
    item(
        "generator_primality",
        failed.is_empty(),
        if failed.is_empty() {
            format!("1 + X^(1/2^i) is prime in its level algebra for every i ≤ {depth}")
        } else {
            format!("levels {failed:?} are not prime")
        },
    )
}

fn divisibility_item(depth: u32) -> SuiteItem {
    // a deeper generator never divides a coarser one, so each level's new
    // prime genuinely refines the factorization of 1 − X
    let mut failed = Vec::new();
    for n in 1..=depth {
        for m in 0..n {
            match divides_in_gn(&chain_generator(n), &chain_generator(m), n) {
                Ok(false) => {}
                _ => failed.push((n, m)),
            }
        }
    }
    item(
        "strict_divisibility_descent",
        failed.is_empty(),
        if failed.is_empty() {
            format!(
                "1 + X^(1/2^n) divides no coarser generator, all pairs m < n ≤ {depth}"
            )
        } else {
            format!("divisibility pairs {failed:?} unexpectedly succeeded")
        },
    )
}

fn coprimality_item(depth: u32) -> SuiteItem {
    // coprimality at the deeper of the two levels persists in every finer
    // level: a Bézout relation survives the substitution y ↦ y^(2^k)
    let mut failed = Vec::new();
    for j in 1..=depth {
        for i in 1..j {
            if !coprime_in_gn(&chain_generator(j), &chain_generator(i), j).unwrap_or(false) {
                failed.push((i, j));
            }
        }
    }
    item(
        "pairwise_coprimality",
        failed.is_empty(),
        if failed.is_empty() {
            format!("distinct chain generators are pairwise coprime up to depth {depth}")
        } else {
            format!("pairs {failed:?} are not coprime")
        },
    )
}

fn telescoping_item(depth: u32) -> SuiteItem {
    match telescoping_identity(depth) {
        Ok(cert) => item(
            "telescoping_product",
            cert.product == DyadicLaurentPoly::one_minus_x()
                && cert.factors.len() as u32 == depth + 1,
            format!(
                "the {} factors at depth {depth} multiply exactly to 1 − X",
                cert.factors.len()
            ),
        ),
        Err(e) => item("telescoping_product", false, e.to_string()),
    }
}

fn root_extension_item(depth: u32) -> SuiteItem {
    // each sample fraction, times the listed multiplier, is an integer
    // and hence lies in every level of the chain
    let samples: [(i64, i64, i64); 6] =
        [(5, 3, 3), (7, 1, 1), (1, 6, 6), (-3, 6, 2), (22, 7, 7), (0, 9, 1)];
    let mut failed = Vec::new();
    for (num, den, expected) in samples {
        match root_extension_check(&BigInt::from(num), &BigInt::from(den), depth) {
            Ok(m) if m == BigInt::from(expected) => {}
            _ => failed.push((num, den)),
        }
    }
    item(
        "root_extension_multipliers",
        failed.is_empty(),
        if failed.is_empty() {
            "every sample fraction reaches an integer by its reduced denominator".into()
        } else {
            format!("fractions {failed:?} got the wrong multiplier")
        },
    )
}

impl SuiteReport {
    /// Runs every item of the suite at the given depth (1 ..= 16).
    pub fn run(depth: u32) -> SuiteReport {
        let items = vec![
            substitution_item(depth),
            primality_item(depth),
            divisibility_item(depth),
            coprimality_item(depth),
            root_extension_item(depth),
            telescoping_item(depth),
        ];
        let passed = items.iter().all(|i| i.passed);
        SuiteReport {
            tool: ToolInfo::current(),
            depth,
            items,
            passed,
        }
    }

    /// The canonical JSON rendering, newline-terminated.
    pub fn to_json(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(self).expect("suite reports always serialize");
        text.push('\n');
        text
    }

    /// A stable plain-text projection: one pass/fail line per item.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {} counterexample suite at depth {}\n",
            self.tool.name, self.tool.version, self.depth
        );
        for i in &self.items {
            out.push_str(&format!(
                "  [{}] {}: {}\n",
                if i.passed { "pass" } else { "FAIL" },
                i.name,
                i.detail
            ));
        }
        out.push_str(&format!(
            "suite: {}\n",
            if self.passed { "pass" } else { "FAIL" }
        ));
        out
    }
}
