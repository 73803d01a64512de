//! The sextuple information model `<o, T_h, f, c, T_m, g>` over finite sets.

use std::collections::{BTreeMap, BTreeSet};
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::time::TimeSet;

/// Identifier of a noumenon or carrier element.
pub type ElementId = String;

/// A state value: a symbolic token or a numeric scalar/vector.
///
/// Equality is exact; `-0.0` and `0.0` compare equal.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Value {
    Symbol(String),
    Scalar(f64),
    Vector(Vec<f64>),
}

fn canonical_bits(x: f64) -> u64 {
    if x == 0.0 {
        0
    } else {
        x.to_bits()
    }
}

impl PartialEq for Value {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Value::Symbol(a), Value::Symbol(b)) => a == b,
            (Value::Scalar(a), Value::Scalar(b)) => canonical_bits(*a) == canonical_bits(*b),
            (Value::Vector(a), Value::Vector(b)) => {
                a.len() == b.len() && a.iter().zip(b).all(|(x, y)| canonical_bits(*x) == canonical_bits(*y))
            }
            _ => false,
        }
    }
}

impl Eq for Value {}

impl Hash for Value {
    fn hash<H: Hasher>(&self, state: &mut H) {
        std::mem::discriminant(self).hash(state);
        match self {
            Value::Symbol(s) => s.hash(state),
            Value::Scalar(x) => canonical_bits(*x).hash(state),
            Value::Vector(v) => {
                v.len().hash(state);
                for x in v {
                    canonical_bits(*x).hash(state);
                }
            }
        }
    }
}

impl Value {
    pub fn symbol(s: impl Into<String>) -> Self {
        Value::Symbol(s.into())
    }

    /// Numeric components, or `None` for symbols.
    pub fn numeric(&self) -> Option<&[f64]> {
        match self {
            Value::Symbol(_) => None,
            Value::Scalar(x) => Some(std::slice::from_ref(x)),
            Value::Vector(v) => Some(v),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.numeric().is_none_or(|xs| xs.iter().all(|x| x.is_finite()))
    }
}

/// One element of `f(o, T_h)` or `g(c, T_m)`: the state of some subjects over a time set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StateEntry {
    pub subjects: BTreeSet<ElementId>,
    pub time: TimeSet,
    pub value: Value,
}

impl StateEntry {
    pub fn new<I, S>(subjects: I, time: TimeSet, value: Value) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<ElementId>,
    {
        StateEntry {
            subjects: subjects.into_iter().map(Into::into).collect(),
            time,
            value,
        }
    }
}

fn default_unit() -> String {
    "bit".to_string()
}

fn is_default_unit(u: &str) -> bool {
    u == "bit"
}

/// Nonnegative σ-values on noumena, carriers and reflection entries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasureAssignment {
    #[serde(default)]
    pub noumenon_measure: BTreeMap<ElementId, f64>,
    #[serde(default)]
    pub carrier_measure: BTreeMap<ElementId, f64>,
    #[serde(default)]
    pub reflection_measure: BTreeMap<usize, f64>,
    /// Unit of the reflection measure, reported alongside the volume.
    #[serde(default = "default_unit", skip_serializing_if = "is_default_unit")]
    pub volume_unit: String,
}

impl Default for MeasureAssignment {
    fn default() -> Self {
        MeasureAssignment {
            noumenon_measure: BTreeMap::new(),
            carrier_measure: BTreeMap::new(),
            reflection_measure: BTreeMap::new(),
            volume_unit: default_unit(),
        }
    }
}

fn unit_weight() -> f64 {
    1.0
}

/// One copy of the information, weighted on the copy index set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CopyRecord {
    pub carrier_measure: f64,
    #[serde(default = "unit_weight")]
    pub weight: f64,
}

impl CopyRecord {
    pub fn new(carrier_measure: f64) -> Self {
        CopyRecord {
            carrier_measure,
            weight: 1.0,
        }
    }
}

/// The sextuple model with its explicit mapping table.
///
/// Construction does not enforce the model invariants; run
/// [`validate`](crate::validate::validate) to check them.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InformationModel {
    pub noumena: BTreeSet<ElementId>,
    pub carriers: BTreeSet<ElementId>,
    pub occurrence: TimeSet,
    pub reflection: TimeSet,
    pub states: Vec<StateEntry>,
    pub reflections: Vec<StateEntry>,
    /// `(state_index, reflection_index)` pairs.
    pub mapping: Vec<(usize, usize)>,
    #[serde(default)]
    pub copies: Vec<CopyRecord>,
    #[serde(default)]
    pub measures: MeasureAssignment,
    /// Author-asserted provenance: the reflections physically arise from the states.
    #[serde(default)]
    pub enabled: bool,
}

impl InformationModel {
    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model serialization is infallible")
    }

    /// The reflection index a state maps to (first pair wins).
    pub fn image_of(&self, state: usize) -> Option<usize> {
        self.mapping.iter().find(|p| p.0 == state).map(|p| p.1)
    }

    /// State indices mapped onto `reflection`.
    pub fn preimages(&self, reflection: usize) -> impl Iterator<Item = usize> + '_ {
        self.mapping.iter().filter(move |p| p.1 == reflection).map(|p| p.0)
    }

    /// The mapping as (state entry, reflection entry) pairs; out-of-range
    /// indices are skipped.
    pub fn entry_pairs(&self) -> Vec<(&StateEntry, &StateEntry)> {
        self.mapping
            .iter()
            .filter_map(|&(s, r)| Some((self.states.get(s)?, self.reflections.get(r)?)))
            .collect()
    }

    /// Same multiset of (state entry, reflection entry) pairs, ignoring indexing.
    pub fn is_mapping_equivalent(&self, other: &InformationModel) -> bool {
        let mut a = self.entry_pairs();
        let mut b = other.entry_pairs();
        if a.len() != b.len() {
            return false;
        }
        let key = |p: &(&StateEntry, &StateEntry)| serde_json::to_string(&(p.0, p.1)).unwrap_or_default();
        a.sort_by_cached_key(key);
        b.sort_by_cached_key(key);
        a == b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_equality_is_exact_with_signed_zero() {
        assert_eq!(Value::Scalar(0.0), Value::Scalar(-0.0));
        assert_ne!(Value::Scalar(1.0), Value::Vector(vec![1.0]));
        assert_ne!(Value::Vector(vec![1.0, 2.0]), Value::Vector(vec![1.0, 2.0000001]));
        assert!(!Value::Scalar(f64::NAN).is_finite());
        assert!(Value::symbol("x").is_finite());
    }

    #[test]
    fn value_json_shape() {
        let v: Value = serde_json::from_str(r#"{"vector":[1,2.5]}"#).unwrap();
        assert_eq!(v, Value::Vector(vec![1.0, 2.5]));
        assert_eq!(serde_json::to_string(&Value::symbol("a")).unwrap(), r#"{"symbol":"a"}"#);
    }

    #[test]
    fn default_measures_are_in_bits() {
        assert_eq!(MeasureAssignment::default().volume_unit, "bit");
        let m: MeasureAssignment = serde_json::from_str("{}").unwrap();
        assert_eq!(m, MeasureAssignment::default());
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"{"noumenon_measure":{},"carrier_measure":{},"reflection_measure":{}}"#);
    }
}
