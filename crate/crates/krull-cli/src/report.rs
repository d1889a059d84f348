//! Analysis reports: a deterministic JSON document (or plain-text
//! projection) for one monoid.
//!
//! Reports are byte-identical across runs on the same input: field order
//! is fixed, collections are sorted, and wall-clock timing is never
//! written into the document (the `timing_ms` field stays null; actual
//! timing goes to stderr).

use krull_core::monoid::{
    weakly_krull_oracle, AffineMonoid, Decision, MonoidReport, OracleOutcome, Verdict,
};
use krull_core::IntVector;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::input::MonoidInput;

/// Name and version of the producing binary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

impl ToolInfo {
    pub fn current() -> ToolInfo {
        ToolInfo {
            name: "krull".into(),
            version: env!("CARGO_PKG_VERSION").into(),
        }
    }
}

/// One decided property: verdict, evidence summary, and optional witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyEntry {
    pub verdict: String,
    pub detail: String,
    pub witness: Option<Vec<i64>>,
}

impl PropertyEntry {
    fn from_decision(d: &Decision) -> PropertyEntry {
        PropertyEntry {
            verdict: verdict_name(d.verdict).into(),
            detail: d.detail.clone(),
            witness: d.witness.as_ref().map(small_coords),
        }
    }
}

/// The five ladder properties of the analyzed monoid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyTable {
    pub krull: PropertyEntry,
    pub generalized_krull: PropertyEntry,
    pub weakly_krull: PropertyEntry,
    pub gcd: PropertyEntry,
    pub weakly_factorial: PropertyEntry,
}

/// The weakly Krull verdict for the monoid algebra over a field, mirrored
/// from the monoid verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraVerdict {
    pub verdict: String,
    pub note: String,
}

/// Cross-check of the weakly Krull decider against the independent
/// brute-force oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCrossCheck {
    pub decider: String,
    /// `"bounded_true"`, `"definite_false"`, or `"unavailable"`.
    pub oracle: String,
    pub degree_bound: Option<i64>,
    pub points_checked: Option<u64>,
    pub witness: Option<Vec<i64>>,
    pub detail: Option<String>,
    /// False exactly when both sides are definite and disagree.
    pub consistent: bool,
}

/// One row of the height-one decomposition table. Monomial rows list the
/// primes coming from the monoid spectrum; the single contraction row
/// stands for the family of primes contracted from the quotient-group
/// algebra, which is infinite and therefore not enumerated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumRow {
    pub kind: String,
    pub face_generator_indices: Option<Vec<usize>>,
    pub height: usize,
    pub ideal_generators: Option<Vec<Vec<i64>>>,
    pub t_prime: Option<bool>,
    pub t_maximal: Option<bool>,
    pub note: Option<String>,
}

/// The full deterministic analysis document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool: ToolInfo,
    pub input: MonoidInput,
    pub normal: bool,
    pub properties: PropertyTable,
    pub algebra_weakly_krull: AlgebraVerdict,
    pub class_group: Option<Vec<i64>>,
    pub conductor: Option<Vec<i64>>,
    pub oracle_cross_check: OracleCrossCheck,
    pub spectrum: Vec<SpectrumRow>,
    /// Always null: timing is reported on stderr so documents stay
    /// byte-identical across runs.
    pub timing_ms: Option<u64>,
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Fails => "fails",
        Verdict::Unsupported => "unsupported",
    }
}

fn small(value: &num_bigint::BigInt) -> i64 {
    value.to_i64().expect("report value exceeds the i64 range")
}

fn small_coords(v: &IntVector) -> Vec<i64> {
    v.iter().map(small).collect()
}

fn oracle_cross_check(monoid: &AffineMonoid, weakly_krull: &Decision) -> OracleCrossCheck {
    match weakly_krull_oracle(monoid, 1) {
        Ok(OracleOutcome::BoundedTrue {
            degree_bound,
            points_checked,
        }) => OracleCrossCheck {
            decider: verdict_name(weakly_krull.verdict).into(),
            oracle: "bounded_true".into(),
            degree_bound: Some(small(&degree_bound)),
            points_checked: Some(points_checked as u64),
            witness: None,
            detail: None,
            // a bounded search that found nothing cannot contradict any
            // decider verdict
            consistent: true,
        },
        Ok(OracleOutcome::DefiniteFalse { witness }) => OracleCrossCheck {
            decider: verdict_name(weakly_krull.verdict).into(),
            oracle: "definite_false".into(),
            degree_bound: None,
            points_checked: None,
            witness: Some(small_coords(&witness)),
            detail: None,
            consistent: weakly_krull.verdict != Verdict::Holds,
        },
        Err(e) => OracleCrossCheck {
            decider: verdict_name(weakly_krull.verdict).into(),
            oracle: "unavailable".into(),
            degree_bound: None,
            points_checked: None,
            witness: None,
            detail: Some(e.to_string()),
            consistent: true,
        },
    }
}

fn spectrum_rows(monoid: &AffineMonoid, report: &MonoidReport) -> Vec<SpectrumRow> {
    let mut rows: Vec<SpectrumRow> = report
        .spectrum
        .iter()
        .map(|p| SpectrumRow {
            kind: "monomial".into(),
            face_generator_indices: Some(p.face_support.clone()),
            height: p.height,
            ideal_generators: Some(p.ideal_gens.iter().map(small_coords).collect()),
            t_prime: p.is_t_prime,
            t_maximal: p.is_t_maximal,
            note: None,
        })
        .collect();
    if monoid.group_rank() >= 1 {
        rows.push(SpectrumRow {
            kind: "contraction".into(),
            face_generator_indices: None,
            height: 1,
            ideal_generators: None,
            t_prime: None,
            t_maximal: None,
            note: Some(
                "height-one primes contracted from the quotient-group algebra; \
                 one for each prime element there, not enumerated"
                    .into(),
            ),
        });
    }
    rows
}

impl ReportDocument {
    /// Analyzes the monoid and assembles the document. The explicit degree
    /// bound, when present, drives the t-ideal classification.
    pub fn build(input: &MonoidInput, monoid: &AffineMonoid) -> ReportDocument {
        let bound = input.bound();
        let report = MonoidReport::build_bounded(monoid, bound.as_ref());
        let weakly_krull = PropertyEntry::from_decision(&report.weakly_krull);
        let algebra_weakly_krull = AlgebraVerdict {
            verdict: weakly_krull.verdict.clone(),
            note: "the monoid algebra over any field is weakly Krull exactly when \
                   the monoid is, so this verdict mirrors weakly_krull"
                .into(),
        };
        ReportDocument {
            tool: ToolInfo::current(),
            input: input.clone(),
            normal: report.krull.verdict == Verdict::Holds,
            properties: PropertyTable {
                krull: PropertyEntry::from_decision(&report.krull),
                generalized_krull: PropertyEntry::from_decision(&report.generalized_krull),
                weakly_krull,
                gcd: PropertyEntry::from_decision(&report.gcd),
                weakly_factorial: PropertyEntry::from_decision(&report.weakly_factorial),
            },
            algebra_weakly_krull,
            class_group: report
                .class_group
                .as_ref()
                .map(|cl| cl.iter().map(small).collect()),
            conductor: report.conductor.as_ref().map(small_coords),
            oracle_cross_check: oracle_cross_check(monoid, &report.weakly_krull),
            spectrum: spectrum_rows(monoid, &report),
            timing_ms: None,
        }
    }

    /// The canonical JSON rendering, newline-terminated.
    pub fn to_json(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(self).expect("report documents always serialize");
        text.push('\n');
        text
    }

    /// A stable plain-text projection of the same content.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let push = |out: &mut String, line: String| {
            out.push_str(&line);
            out.push('\n');
        };
        push(
            &mut out,
            format!("{} {} analysis report", self.tool.name, self.tool.version),
        );
        push(
            &mut out,
            format!(
                "input: ambient_dim {}, generators {:?}, degree_bound {}",
                self.input.ambient_dim,
                self.input.generators,
                match self.input.degree_bound {
                    Some(b) => b.to_string(),
                    None => "default".into(),
                }
            ),
        );
        push(&mut out, format!("normal: {}", self.normal));
        for (name, entry) in [
            ("krull", &self.properties.krull),
            ("generalized_krull", &self.properties.generalized_krull),
            ("weakly_krull", &self.properties.weakly_krull),
            ("gcd", &self.properties.gcd),
            ("weakly_factorial", &self.properties.weakly_factorial),
        ] {
            let witness = match &entry.witness {
                Some(w) => format!(" [witness {w:?}]"),
                None => String::new(),
            };
            push(
                &mut out,
                format!("{name}: {} — {}{witness}", entry.verdict, entry.detail),
            );
        }
        push(
            &mut out,
            format!(
                "algebra_weakly_krull: {} — {}",
                self.algebra_weakly_krull.verdict, self.algebra_weakly_krull.note
            ),
        );
        push(
            &mut out,
            format!(
                "class_group: {}",
                match &self.class_group {
                    Some(cl) if cl.is_empty() => "trivial".into(),
                    Some(cl) => format!("invariants {cl:?}"),
                    None => "unavailable (monoid is not normal)".into(),
                }
            ),
        );
        push(
            &mut out,
            format!(
                "conductor: {}",
                match &self.conductor {
                    Some(c) => format!("{c:?}"),
                    None => "unavailable".into(),
                }
            ),
        );
        let oc = &self.oracle_cross_check;
        let mut oracle_line = format!(
            "oracle_cross_check: decider {} vs oracle {}",
            oc.decider, oc.oracle
        );
        if let (Some(b), Some(p)) = (oc.degree_bound, oc.points_checked) {
            oracle_line.push_str(&format!(" (degree bound {b}, {p} points)"));
        }
        if let Some(w) = &oc.witness {
            oracle_line.push_str(&format!(" [witness {w:?}]"));
        }
        oracle_line.push_str(&format!(" — consistent: {}", oc.consistent));
        push(&mut out, oracle_line);
        push(&mut out, format!("spectrum ({} rows):", self.spectrum.len()));
        for row in &self.spectrum {
            let mut line = format!("  {} height={}", row.kind, row.height);
            if let Some(face) = &row.face_generator_indices {
                line.push_str(&format!(" face={face:?}"));
            }
            if let Some(gens) = &row.ideal_generators {
                line.push_str(&format!(" ideal_gens={gens:?}"));
            }
            if let Some(t) = row.t_prime {
                line.push_str(&format!(" t_prime={t}"));
            }
            if let Some(t) = row.t_maximal {
                line.push_str(&format!(" t_maximal={t}"));
            }
            if let Some(note) = &row.note {
                line.push_str(&format!(" — {note}"));
            }
            push(&mut out, line);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn document(json: &str) -> ReportDocument {
        let input = MonoidInput::parse(json).unwrap();
        let monoid = input.to_monoid().unwrap();
        ReportDocument::build(&input, &monoid)
    }

    #[test]
    fn quadrant_report_is_fully_positive() {
        let doc = document(r#"{"ambient_dim": 2, "generators": [[1, 0], [0, 1]]}"#);
        assert!(doc.normal);
        assert_eq!(doc.properties.krull.verdict, "holds");
        assert_eq!(doc.properties.weakly_krull.verdict, "holds");
        assert_eq!(doc.properties.gcd.verdict, "holds");
        assert_eq!(doc.algebra_weakly_krull.verdict, "holds");
        assert_eq!(doc.class_group, Some(vec![]));
        assert_eq!(doc.conductor, Some(vec![0, 0]));
        assert!(doc.oracle_cross_check.consistent);
        assert_eq!(doc.oracle_cross_check.oracle, "bounded_true");
        // three monomial primes plus the contraction family row
        assert_eq!(doc.spectrum.len(), 4);
        assert_eq!(
            doc.spectrum.iter().filter(|r| r.kind == "monomial").count(),
            3
        );
        assert_eq!(
            doc.spectrum.iter().filter(|r| r.kind == "contraction").count(),
            1
        );
        assert_eq!(doc.timing_ms, None);
    }

    #[test]
    fn numerical_semigroup_report_separates_the_ladder() {
        let doc = document(r#"{"ambient_dim": 1, "generators": [[2], [3]]}"#);
        assert!(!doc.normal);
        assert_eq!(doc.properties.krull.verdict, "fails");
        assert_eq!(doc.properties.weakly_krull.verdict, "holds");
        assert_eq!(doc.properties.weakly_factorial.verdict, "holds");
        assert_eq!(doc.properties.gcd.verdict, "fails");
        assert_eq!(doc.class_group, None);
        assert_eq!(doc.algebra_weakly_krull.verdict, "holds");
        let monomial: Vec<_> = doc
            .spectrum
            .iter()
            .filter(|r| r.kind == "monomial")
            .collect();
        assert_eq!(monomial.len(), 1);
        assert_eq!(monomial[0].height, 1);
        assert_eq!(monomial[0].t_prime, Some(true));
        assert_eq!(monomial[0].t_maximal, Some(true));
    }

    #[test]
    fn json_rendering_is_deterministic() {
        let a = document(r#"{"ambient_dim": 2, "generators": [[2, 0], [1, 1], [0, 2]]}"#);
        let b = document(r#"{"ambient_dim": 2, "generators": [[2, 0], [1, 1], [0, 2]]}"#);
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.to_text(), b.to_text());
        // the document round-trips through serde
        let back: ReportDocument = serde_json::from_str(&a.to_json()).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn explicit_degree_bound_is_echoed_and_used() {
        let doc = document(
            r#"{"ambient_dim": 1, "generators": [[2], [3]], "degree_bound": 40}"#,
        );
        assert_eq!(doc.input.degree_bound, Some(40));
        assert_eq!(doc.properties.weakly_krull.verdict, "holds");
    }

    #[test]
    fn group_monoid_report_has_no_monomial_rows() {
        let doc = document(r#"{"ambient_dim": 1, "generators": [[1], [-1]]}"#);
        assert!(doc.normal);
        assert_eq!(doc.properties.weakly_krull.verdict, "holds");
        assert_eq!(
            doc.spectrum.iter().filter(|r| r.kind == "monomial").count(),
            0
        );
        assert_eq!(
            doc.spectrum.iter().filter(|r| r.kind == "contraction").count(),
            1
        );
    }
}
