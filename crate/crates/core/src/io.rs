//! Space file ingestion and emission.
//!
//! The canonical JSON form lists opens as arrays of 0-indexed points:
//!
//! ```json
//! {"n": 4, "opens": [[], [0], [1], [0, 1], [0, 2, 3], [0, 1, 2, 3]]}
//! ```
//!
//! Input may instead name points with string labels via a `"points"`
//! table (`{"points": ["a","b","c","d"], "opens": [[], ["a"], ...]}`);
//! compute always uses indices, and emission echoes the user's labels.
//! A compact alternative lists opens as lowercase-hex masks under
//! `"opens_hex"`, matching the corpus line format.

use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::space::{Space, SpaceError};
use crate::subset::Subset;

pub const SCHEMA_SPACE: &str = "topolab.space/1";

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed space file: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("unknown point label {label:?}")]
    UnknownLabel { label: String },
    #[error("string labels used without a \"points\" table")]
    LabelsWithoutTable,
    #[error("point count missing: provide \"n\" or a \"points\" table")]
    MissingN,
    #[error("provide exactly one of \"opens\" or \"opens_hex\"")]
    OpensAmbiguous,
    #[error("duplicate point label {label:?}")]
    DuplicateLabel { label: String },
}

/// A point literal in an input file: an index or a label.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointLit {
    Index(usize),
    Label(String),
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
struct SpaceFile {
    #[serde(default)]
    schema: Option<String>,
    #[serde(default)]
    n: Option<usize>,
    #[serde(default)]
    points: Option<Vec<String>>,
    #[serde(default)]
    opens: Option<Vec<Vec<PointLit>>>,
    #[serde(default)]
    opens_hex: Option<Vec<String>>,
}

/// A validated space together with the label table it was written with.
#[derive(Clone, Debug, PartialEq)]
pub struct LoadedSpace {
    pub space: Space,
    pub labels: Option<Vec<String>>,
}

impl LoadedSpace {
    /// Renders a subset for output: labels when the input used labels,
    /// sorted point indices otherwise.
    pub fn subset_json(&self, s: Subset) -> serde_json::Value {
        match &self.labels {
            Some(labels) => json!(s.points().map(|p| labels[p].clone()).collect::<Vec<_>>()),
            None => json!(s.to_points()),
        }
    }

    pub fn space_json(&self) -> serde_json::Value {
        let opens: Vec<serde_json::Value> =
            self.space.opens().iter().map(|&s| self.subset_json(s)).collect();
        let mut out = json!({
            "schema": SCHEMA_SPACE,
            "n": self.space.n(),
            "opens": opens,
            "fingerprint": self.space.fingerprint().to_hex(),
        });
        if let Some(labels) = &self.labels {
            out["points"] = json!(labels);
        }
        out
    }
}

pub fn parse_space_json(text: &str) -> Result<LoadedSpace, IoError> {
    let file: SpaceFile = serde_json::from_str(text)?;
    let labels = file.points.clone();
    if let Some(labels) = &labels {
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(IoError::DuplicateLabel { label: l.clone() });
            }
        }
    }
    let n = match (&labels, file.n) {
        (Some(labels), _) => labels.len(),
        (None, Some(n)) => n,
        (None, None) => return Err(IoError::MissingN),
    };

    let opens = match (file.opens, file.opens_hex) {
        (Some(opens), None) => {
            let mut subsets = Vec::with_capacity(opens.len());
            for entry in opens {
                let mut points = Vec::with_capacity(entry.len());
                for lit in entry {
                    points.push(resolve_point(&lit, &labels)?);
                }
                subsets.push(Subset::from_points(n, &points).map_err(SpaceError::from)?);
            }
            subsets
        }
        (None, Some(hexes)) => hexes
            .iter()
            .map(|h| Subset::from_hex(n, h))
            .collect::<Result<Vec<_>, _>>()
            .map_err(SpaceError::from)?,
        _ => return Err(IoError::OpensAmbiguous),
    };

    Ok(LoadedSpace { space: Space::new(n, opens)?, labels })
}

fn resolve_point(lit: &PointLit, labels: &Option<Vec<String>>) -> Result<usize, IoError> {
    match lit {
        PointLit::Index(i) => Ok(*i),
        PointLit::Label(l) => {
            let table = labels.as_ref().ok_or(IoError::LabelsWithoutTable)?;
            table
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| IoError::UnknownLabel { label: l.clone() })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_plain_index_form() {
        let loaded = parse_space_json(
            r#"{"n": 4, "opens": [[], [0], [1], [0,1], [0,2,3], [0,1,2,3]]}"#,
        )
        .unwrap();
        assert_eq!(loaded.space.n(), 4);
        assert_eq!(loaded.space.opens().len(), 6);
        assert!(loaded.labels.is_none());
    }

    #[test]
    fn parses_labeled_form_and_echoes_labels() {
        let loaded = parse_space_json(
            r#"{"points": ["a","b","c","d"],
                "opens": [[], ["a"], ["b"], ["a","b"], ["a","c","d"], ["a","b","c","d"]]}"#,
        )
        .unwrap();
        assert_eq!(loaded.space.n(), 4);
        let rendered = loaded.subset_json(Subset::from_points(4, &[0, 2, 3]).unwrap());
        assert_eq!(rendered, serde_json::json!(["a", "c", "d"]));
    }

    #[test]
    fn parses_hex_form() {
        let loaded =
            parse_space_json(r#"{"n": 4, "opens_hex": ["0", "1", "2", "3", "d", "f"]}"#).unwrap();
        assert_eq!(loaded.space.opens().len(), 6);
    }

    #[test]
    fn round_trips_through_emission() {
        let text = r#"{"points": ["a","b"], "opens": [[], ["a"], ["a","b"]]}"#;
        let loaded = parse_space_json(text).unwrap();
        let emitted = loaded.space_json().to_string();
        let back = parse_space_json(&emitted).unwrap();
        assert_eq!(back, loaded);
    }

    #[test]
    fn reports_unknown_labels_and_missing_tables() {
        assert!(matches!(
            parse_space_json(r#"{"points": ["a"], "opens": [[], ["b"]]}"#),
            Err(IoError::UnknownLabel { .. })
        ));
        assert!(matches!(
            parse_space_json(r#"{"n": 2, "opens": [[], ["a"], [0,1]]}"#),
            Err(IoError::LabelsWithoutTable)
        ));
        assert!(matches!(parse_space_json(r#"{"opens": [[]]}"#), Err(IoError::MissingN)));
        assert!(matches!(
            parse_space_json(r#"{"n": 1, "opens": [[]], "opens_hex": ["0"]}"#),
            Err(IoError::OpensAmbiguous)
        ));
    }

    #[test]
    fn reports_the_violated_axiom_on_bad_files() {
        let err = parse_space_json(r#"{"n": 2, "opens": [[], [0]]}"#).unwrap_err();
        assert!(matches!(err, IoError::Space(SpaceError::MissingFull)));
    }
}
