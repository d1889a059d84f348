//! The JSON description of an affine monoid accepted by `krull analyze`.

use krull_core::monoid::{AffineMonoid, MonoidError};
use krull_core::IntVector;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// One monoid as given on the command line: ambient dimension, generator
/// rows, and an optional degree bound for the t-ideal classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidInput {
    pub ambient_dim: usize,
    pub generators: Vec<Vec<i64>>,
    #[serde(default)]
    pub degree_bound: Option<i64>,
}

impl MonoidInput {
    /// Parses the JSON text, reporting the position of the first problem.
    pub fn parse(text: &str) -> Result<MonoidInput, String> {
        serde_json::from_str(text).map_err(|e| format!("invalid monoid description: {e}"))
    }

    /// Builds the affine monoid this input describes.
    pub fn to_monoid(&self) -> Result<AffineMonoid, MonoidError> {
        let gens: Vec<IntVector> = self
            .generators
            .iter()
            .map(|row| IntVector::new(row.iter().map(|&c| BigInt::from(c)).collect()))
            .collect();
        AffineMonoid::new(self.ambient_dim, gens)
    }

    /// The explicit degree bound, if one was given.
    pub fn bound(&self) -> Option<BigInt> {
        self.degree_bound.map(BigInt::from)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_minimal_description() {
        let input =
            MonoidInput::parse(r#"{"ambient_dim": 2, "generators": [[1, 0], [0, 1]]}"#).unwrap();
        assert_eq!(input.ambient_dim, 2);
        assert_eq!(input.generators, vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(input.degree_bound, None);
        assert!(input.to_monoid().is_ok());
    }

    #[test]
    fn parses_an_explicit_degree_bound() {
        let input = MonoidInput::parse(
            r#"{"ambient_dim": 1, "generators": [[2], [3]], "degree_bound": 12}"#,
        )
        .unwrap();
        assert_eq!(input.bound(), Some(BigInt::from(12)));
    }

    #[test]
    fn rejects_malformed_json_and_unknown_fields() {
        assert!(MonoidInput::parse("{").is_err());
        assert!(MonoidInput::parse(r#"{"ambient_dim": 1}"#).is_err());
        assert!(
            MonoidInput::parse(r#"{"ambient_dim": 1, "generators": [[1]], "extra": 3}"#).is_err()
        );
    }

    #[test]
    fn dimension_mismatches_surface_as_monoid_errors() {
        let input =
            MonoidInput::parse(r#"{"ambient_dim": 2, "generators": [[1, 0], [1]]}"#).unwrap();
        assert!(matches!(
            input.to_monoid(),
            Err(MonoidError::GeneratorDimensionMismatch { .. })
        ));
        let deep = MonoidInput::parse(
            r#"{"ambient_dim": 5, "generators": [[1, 0, 0, 0, 0]]}"#,
        )
        .unwrap();
        assert!(matches!(
            deep.to_monoid(),
            Err(MonoidError::UnsupportedDimension { dim: 5 })
        ));
    }
}
