//! Seeded random monoid corpora and the decider-versus-oracle agreement
//! run behind `krull corpus`.
//!
//! Generation is fully determined by the seed: the same seed and count
//! always produce the same monoids and the same summary document.

use krull_core::monoid::{
    weakly_krull_oracle, AffineMonoid, MonoidReport, OracleOutcome, Verdict,
};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::input::MonoidInput;
use crate::report::ToolInfo;

/// Largest corpus size accepted by the command line.
pub const MAX_COUNT: u64 = 1000;

/// Draws one random monoid description: dimension up to 3, up to six
/// generators, entries of magnitude at most 5 with a bias toward
/// nonnegative vectors so that most samples have split unit groups.
fn random_input(rng: &mut ChaCha8Rng) -> MonoidInput {
    let ambient_dim = rng.gen_range(1..=3usize);
    let gen_count = rng.gen_range(1..=6usize);
    let mut generators = Vec::with_capacity(gen_count);
    for _ in 0..gen_count {
        let nonnegative = rng.gen_range(0..4u8) < 3;
        let row: Vec<i64> = (0..ambient_dim)
            .map(|_| {
                if nonnegative {
                    rng.gen_range(0..=5i64)
                } else {
                    rng.gen_range(-5..=5i64)
                }
            })
            .collect();
        generators.push(row);
    }
    MonoidInput {
        ambient_dim,
        generators,
        degree_bound: None,
    }
}

/// The deterministic corpus for a seed: `count` monoid descriptions.
pub fn generate(seed: u64, count: usize) -> Vec<MonoidInput> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_input(&mut rng)).collect()
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Fails => "fails",
        Verdict::Unsupported => "unsupported",
    }
}

/// Per-monoid outcome of the agreement run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub index: usize,
    pub ambient_dim: usize,
    pub generators: Vec<Vec<i64>>,
    pub krull: String,
    pub generalized_krull: String,
    pub weakly_krull: String,
    pub gcd: String,
    pub weakly_factorial: String,
    /// `"bounded_true"`, `"definite_false"`, or `"unavailable"`.
    pub oracle: String,
    /// False exactly when the decider claims weakly Krull while the
    /// oracle found a definite counterexample element.
    pub consistent: bool,
}

/// Tally of decider-versus-oracle outcomes over the corpus.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgreementMatrix {
    pub holds_bounded_true: usize,
    pub fails_bounded_true: usize,
    pub fails_definite_false: usize,
    /// Contradictions: the decider holds but the oracle refutes.
    pub holds_definite_false: usize,
    pub unsupported: usize,
    pub oracle_unavailable: usize,
}

/// The whole corpus run: seed echo, entries, tallies, contradictions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub tool: ToolInfo,
    pub seed: u64,
    pub count: usize,
    pub agreement: AgreementMatrix,
    /// Indices of entries where decider and oracle definitively disagree.
    pub contradictions: Vec<usize>,
    pub entries: Vec<CorpusEntry>,
}

impl CorpusSummary {
    /// Runs the ladder and the oracle over the seeded corpus.
    pub fn run(seed: u64, count: usize) -> CorpusSummary {
        let inputs = generate(seed, count);
        let mut entries = Vec::with_capacity(count);
        let mut agreement = AgreementMatrix::default();
        let mut contradictions = Vec::new();
        for (index, input) in inputs.iter().enumerate() {
            let monoid = input
                .to_monoid()
                .expect("generated inputs stay within the supported dimensions");
            let entry = Self::run_one(index, input, &monoid);
            match (entry.weakly_krull.as_str(), entry.oracle.as_str()) {
                (_, "unavailable") => agreement.oracle_unavailable += 1,
                ("holds", "bounded_true") => agreement.holds_bounded_true += 1,
                ("fails", "bounded_true") => agreement.fails_bounded_true += 1,
                ("fails", "definite_false") => agreement.fails_definite_false += 1,
                ("holds", "definite_false") => agreement.holds_definite_false += 1,
                _ => agreement.unsupported += 1,
            }
            if !entry.consistent {
                contradictions.push(index);
            }
            entries.push(entry);
        }
        CorpusSummary {
            tool: ToolInfo::current(),
            seed,
            count,
            agreement,
            contradictions,
            entries,
        }
    }

    fn run_one(index: usize, input: &MonoidInput, monoid: &AffineMonoid) -> CorpusEntry {
        // one report carries the whole ladder off a single t-classification
        let report = MonoidReport::build(monoid);
        let (oracle, refuted) = match weakly_krull_oracle(monoid, 1) {
            Ok(OracleOutcome::BoundedTrue { .. }) => ("bounded_true", false),
            Ok(OracleOutcome::DefiniteFalse { .. }) => ("definite_false", true),
            Err(_) => ("unavailable", false),
        };
        CorpusEntry {
            index,
            ambient_dim: input.ambient_dim,
            generators: input.generators.clone(),
            krull: verdict_name(report.krull.verdict).into(),
            generalized_krull: verdict_name(report.generalized_krull.verdict).into(),
            weakly_krull: verdict_name(report.weakly_krull.verdict).into(),
            gcd: verdict_name(report.gcd.verdict).into(),
            weakly_factorial: verdict_name(report.weakly_factorial.verdict).into(),
            oracle: oracle.into(),
            consistent: !(refuted && report.weakly_krull.verdict == Verdict::Holds),
        }
    }

    /// Any definite disagreement between decider and oracle?
    pub fn has_contradiction(&self) -> bool {
        !self.contradictions.is_empty()
    }

    /// The canonical JSON rendering, newline-terminated.
    pub fn to_json(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(self).expect("corpus summaries always serialize");
        text.push('\n');
        text
    }

    /// A stable plain-text projection.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{} {} corpus run: seed {}, {} monoids\n",
            self.tool.name, self.tool.version, self.seed, self.count
        ));
        let a = &self.agreement;
        out.push_str(&format!(
            "agreement: holds/bounded_true {}, fails/bounded_true {}, \
             fails/definite_false {}, holds/definite_false {}, \
             unsupported {}, oracle unavailable {}\n",
            a.holds_bounded_true,
            a.fails_bounded_true,
            a.fails_definite_false,
            a.holds_definite_false,
            a.unsupported,
            a.oracle_unavailable
        ));
        out.push_str(&format!(
            "contradictions: {:?}\n",
            self.contradictions
        ));
        for e in &self.entries {
            out.push_str(&format!(
                "  #{} dim {} gens {:?}: krull {}, gk {}, wk {}, gcd {}, wf {}, \
                 oracle {}, consistent {}\n",
                e.index,
                e.ambient_dim,
                e.generators,
                e.krull,
                e.generalized_krull,
                e.weakly_krull,
                e.gcd,
                e.weakly_factorial,
                e.oracle,
                e.consistent
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generation_is_seed_deterministic() {
        let a = generate(11, 25);
        let b = generate(11, 25);
        assert_eq!(a, b);
        let c = generate(12, 25);
        assert_ne!(a, c);
    }

    #[test]
    fn generated_inputs_stay_in_the_advertised_ranges() {
        for input in generate(3, 100) {
            assert!((1..=3).contains(&input.ambient_dim));
            assert!((1..=6).contains(&input.generators.len()));
            for row in &input.generators {
                assert_eq!(row.len(), input.ambient_dim);
                assert!(row.iter().all(|c| (-5..=5).contains(c)));
            }
            assert!(input.to_monoid().is_ok());
        }
    }

    #[test]
    fn empty_corpus_yields_an_empty_summary() {
        let summary = CorpusSummary::run(5, 0);
        assert_eq!(summary.count, 0);
        assert!(summary.entries.is_empty());
        assert!(!summary.has_contradiction());
        assert_eq!(summary.agreement, AgreementMatrix::default());
    }

    #[test]
    fn small_run_is_deterministic_and_consistent() {
        let a = CorpusSummary::run(42, 12);
        let b = CorpusSummary::run(42, 12);
        assert_eq!(a, b);
        assert_eq!(a.to_json(), b.to_json());
        assert!(!a.has_contradiction());
        assert_eq!(a.entries.len(), 12);
    }
}
