//! Decision outcomes: verdicts, witnesses and clause vectors.
//!
//! A failing universally-quantified property always carries a [`Witness`]
//! naming the instantiation that broke it, structured so the failure can
//! be replayed against the defining predicate. Multi-clause theorems are
//! reported as [`ClauseVector`]s with each clause computed independently;
//! a disagreement between clauses is a first-class result (a discrepancy
//! report), never an error.

use serde::{Deserialize, Serialize};

use crate::subset::{Point, Subset};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessValue {
    Point(Point),
    Subset { n: usize, points: Vec<Point> },
    Text(String),
}

impl WitnessValue {
    pub fn subset(s: Subset) -> WitnessValue {
        WitnessValue::Subset { n: s.n(), points: s.to_points() }
    }

    pub fn as_subset(&self) -> Option<Subset> {
        match self {
            WitnessValue::Subset { n, points } => Subset::from_points(*n, points).ok(),
            _ => None,
        }
    }

    pub fn as_point(&self) -> Option<Point> {
        match self {
            WitnessValue::Point(p) => Some(*p),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessItem {
    pub label: String,
    pub value: WitnessValue,
}

/// Structured counterexample data attached to a failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// What broke, e.g. `"separation-failure"` or `"clause-disagreement"`.
    pub role: String,
    pub payload: Vec<WitnessItem>,
}

impl Witness {
    pub fn new(role: &str) -> Witness {
        Witness { role: role.to_string(), payload: Vec::new() }
    }

    pub fn with_subset(mut self, label: &str, s: Subset) -> Witness {
        self.payload
            .push(WitnessItem { label: label.to_string(), value: WitnessValue::subset(s) });
        self
    }

    pub fn with_point(mut self, label: &str, p: Point) -> Witness {
        self.payload.push(WitnessItem { label: label.to_string(), value: WitnessValue::Point(p) });
        self
    }

    pub fn with_text(mut self, label: &str, text: &str) -> Witness {
        self.payload.push(WitnessItem {
            label: label.to_string(),
            value: WitnessValue::Text(text.to_string()),
        });
        self
    }

    pub fn get(&self, label: &str) -> Option<&WitnessValue> {
        self.payload.iter().find(|item| item.label == label).map(|item| &item.value)
    }
}

/// Outcome of one property decision.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub property: String,
    pub holds: bool,
    /// True when the property held because its hypotheses never fired.
    /// Scan statistics keep these apart from genuinely exercised checks.
    #[serde(default, skip_serializing_if = "is_false")]
    pub vacuous: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn holds(property: impl Into<String>) -> Verdict {
        Verdict { property: property.into(), holds: true, vacuous: false, witness: None }
    }

    pub fn vacuous(property: impl Into<String>) -> Verdict {
        Verdict { property: property.into(), holds: true, vacuous: true, witness: None }
    }

    pub fn fails(property: impl Into<String>, witness: Witness) -> Verdict {
        Verdict { property: property.into(), holds: false, vacuous: false, witness: Some(witness) }
    }
}

/// Independently computed truth values of one theorem's clauses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClauseVector {
    pub theorem: String,
    pub clauses: Vec<bool>,
    pub all_equal: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl ClauseVector {
    pub fn new(theorem: impl Into<String>, clauses: Vec<bool>) -> ClauseVector {
        let theorem = theorem.into();
        let all_equal = clauses.windows(2).all(|w| w[0] == w[1]);
        let witness = if all_equal {
            None
        } else {
            let mut w = Witness::new("clause-disagreement");
            let rendered: String =
                clauses.iter().map(|&b| if b { 'T' } else { 'F' }).collect();
            w = w.with_text("clauses", &rendered);
            Some(w)
        };
        ClauseVector { theorem, clauses, all_equal, witness }
    }
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clause_vector_flags_disagreement() {
        let ok = ClauseVector::new("thm", vec![true, true, true]);
        assert!(ok.all_equal);
        assert!(ok.witness.is_none());

        let bad = ClauseVector::new("thm", vec![true, false, true]);
        assert!(!bad.all_equal);
        let w = bad.witness.unwrap();
        assert_eq!(w.get("clauses"), Some(&WitnessValue::Text("TFT".into())));
    }

    #[test]
    fn witness_round_trips_through_json() {
        let w = Witness::new("separation-failure")
            .with_subset("F", Subset::from_points(4, &[2, 3]).unwrap())
            .with_point("x", 0);
        let text = serde_json::to_string(&w).unwrap();
        let back: Witness = serde_json::from_str(&text).unwrap();
        assert_eq!(back, w);
        assert_eq!(back.get("x").and_then(WitnessValue::as_point), Some(0));
    }
}
