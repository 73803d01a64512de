use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{InformationModel, StateEntry};

/// Partition of the state set, given as a class label per state index.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct EquivalenceRelation {
    pub labels: BTreeMap<usize, String>,
}

impl EquivalenceRelation {
    pub fn from_labels<I, S>(labels: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        EquivalenceRelation {
            labels: labels.into_iter().map(Into::into).enumerate().collect(),
        }
    }

    /// Every state in its own class.
    pub fn identity(n: usize) -> Self {
        Self::from_labels((0..n).map(|i| i.to_string()))
    }

    /// Checks totality over `entries` and that equal entries share a class.
    pub(crate) fn check_over(&self, entries: &[StateEntry]) -> Result<()> {
        let missing: Vec<usize> = (0..entries.len()).filter(|i| !self.labels.contains_key(i)).collect();
        if !missing.is_empty() {
            return Err(Error::PartialRelation { missing });
        }
        let mut first_of: HashMap<&StateEntry, usize> = HashMap::new();
        for (i, e) in entries.iter().enumerate() {
            match first_of.get(e) {
                Some(&j) if self.labels[&j] != self.labels[&i] => {
                    return Err(Error::InconsistentRelation { first: j, second: i });
                }
                Some(_) => {}
                None => {
                    first_of.insert(e, i);
                }
            }
        }
        Ok(())
    }

    /// Number of classes among the first `n` indices.
    pub(crate) fn class_count(&self, n: usize) -> usize {
        (0..n).map(|i| &self.labels[&i]).collect::<HashSet<_>>().len()
    }
}

/// Labeled binary relations between states, as `(from, to, label)` edges.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct RelationSet {
    pub edges: Vec<(usize, usize, String)>,
}

impl RelationSet {
    pub fn new<I, S>(edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, S)>,
        S: Into<String>,
    {
        RelationSet {
            edges: edges.into_iter().map(|(a, b, l)| (a, b, l.into())).collect(),
        }
    }

    pub(crate) fn check_over(&self, n: usize) -> Result<()> {
        for (edge, (a, b, _)) in self.edges.iter().enumerate() {
            for &index in [a, b] {
                if index >= n {
                    return Err(Error::UnresolvedEdge { edge, index });
                }
            }
        }
        Ok(())
    }

    /// Distinct `(value, value, label)` triples over `entries`.
    pub(crate) fn distinct_over<'a>(&'a self, entries: &'a [StateEntry]) -> HashSet<(&'a StateEntry, &'a StateEntry, &'a str)> {
        self.edges
            .iter()
            .map(|(a, b, l)| (&entries[*a], &entries[*b], l.as_str()))
            .collect()
    }
}

/// Distinct state values of a model.
pub(crate) fn distinct_values(entries: &[StateEntry]) -> usize {
    entries.iter().collect::<HashSet<_>>().len()
}

/// Moves labels from states to their reflections along the mapping.
pub(crate) fn transport_relation(model: &InformationModel, relation: &EquivalenceRelation) -> EquivalenceRelation {
    EquivalenceRelation {
        labels: model
            .mapping
            .iter()
            .map(|&(s, r)| (r, relation.labels[&s].clone()))
            .collect(),
    }
}

/// Moves edges from states to their reflections along the mapping.
pub(crate) fn transport_edges(model: &InformationModel, relations: &RelationSet) -> RelationSet {
    let image = |s: usize| model.image_of(s).expect("valid mapping is total");
    RelationSet {
        edges: relations
            .edges
            .iter()
            .map(|(a, b, l)| (image(*a), image(*b), l.clone()))
            .collect(),
    }
}
