//! Model validity, restorability and inverse restoration.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{InformationModel, StateEntry};

/// The postulate of the sextuple model an invariant derives from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Postulate {
    /// Information has a noumenon part and a carrier part.
    BinaryAttribute,
    /// Content and form exist over their own time periods.
    ExistenceDuration,
    /// Noumenon and carrier states have their own representation.
    StateRepresentation,
    /// States of the noumena map surjectively onto carrier states.
    EnablingMapping,
}

impl fmt::Display for Postulate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Postulate::BinaryAttribute => "binary attribute",
            Postulate::ExistenceDuration => "existence duration",
            Postulate::StateRepresentation => "state representation",
            Postulate::EnablingMapping => "enabling mapping",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    NonemptyNoumena,
    NonemptyCarriers,
    NonemptyStates,
    NonemptyReflections,
    SubjectsResolve,
    TimeContainment,
    FiniteValues,
    IndexInRange,
    TotalMapping,
    Surjective,
    MeasureDomain,
    CopyDomain,
}

impl Invariant {
    /// The postulate this invariant enforces; `None` for measure bookkeeping.
    pub fn postulate(self) -> Option<Postulate> {
        use Invariant::*;
        match self {
            NonemptyNoumena | NonemptyCarriers => Some(Postulate::BinaryAttribute),
            TimeContainment => Some(Postulate::ExistenceDuration),
            NonemptyStates | NonemptyReflections | SubjectsResolve | FiniteValues => {
                Some(Postulate::StateRepresentation)
            }
            IndexInRange | TotalMapping | Surjective => Some(Postulate::EnablingMapping),
            MeasureDomain | CopyDomain => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub invariant: Invariant,
    pub postulate: Option<Postulate>,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.postulate {
            Some(p) => write!(f, "{} [{p}]", self.message),
            None => f.write_str(&self.message),
        }
    }
}

/// Informational findings that do not invalidate a model.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Note {
    DuplicateStateValue { first: usize, second: usize },
    NegativeDelay { delay: String },
    EnablingNotAsserted,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub notes: Vec<Note>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, invariant: Invariant) -> bool {
        self.violations.iter().any(|v| v.invariant == invariant)
    }

    fn push(&mut self, invariant: Invariant, message: String) {
        self.violations.push(Violation {
            invariant,
            postulate: invariant.postulate(),
            message,
        });
    }

    /// `Ok(())` when valid, otherwise an [`Error::InvalidModel`].
    pub fn into_result(self) -> Result<()> {
        match self.violations.first() {
            None => Ok(()),
            Some(first) => Err(Error::InvalidModel {
                count: self.violations.len(),
                first: first.to_string(),
            }),
        }
    }
}

pub fn validate(model: &InformationModel) -> ValidationReport {
    use Invariant::*;
    let mut report = ValidationReport::default();

    if model.noumena.is_empty() {
        report.push(NonemptyNoumena, "noumenon set is empty".into());
    }
    if model.carriers.is_empty() {
        report.push(NonemptyCarriers, "carrier set is empty".into());
    }
    if model.states.is_empty() {
        report.push(NonemptyStates, "state set is empty".into());
    }
    if model.reflections.is_empty() {
        report.push(NonemptyReflections, "reflection set is empty".into());
    }

    let sides = [
        ("state", &model.states, &model.noumena, &model.occurrence, "noumena", "occurrence"),
        ("reflection", &model.reflections, &model.carriers, &model.reflection, "carriers", "reflection"),
    ];
    for (kind, entries, elements, times, element_name, time_name) in sides {
        for (i, entry) in entries.iter().enumerate() {
            if entry.subjects.is_empty() {
                report.push(SubjectsResolve, format!("{kind} {i} has no subjects"));
            }
            let unknown: Vec<&String> = entry.subjects.iter().filter(|s| !elements.contains(*s)).collect();
            if !unknown.is_empty() {
                report.push(
                    SubjectsResolve,
                    format!("{kind} {i} refers to {unknown:?}, which are not among the {element_name}"),
                );
            }
            if !entry.time.is_subset_of(times) {
                report.push(
                    TimeContainment,
                    format!("{kind} {i} time is not contained in the {time_name} time set"),
                );
            }
            if !entry.value.is_finite() {
                report.push(FiniteValues, format!("{kind} {i} has a non-finite numeric value"));
            }
        }
    }

    let mut state_hits = vec![0usize; model.states.len()];
    let mut reflection_hits = vec![0usize; model.reflections.len()];
    for (p, &(s, r)) in model.mapping.iter().enumerate() {
        let mut in_range = true;
        if s >= model.states.len() {
            report.push(IndexInRange, format!("mapping pair {p} names missing state {s}"));
            in_range = false;
        }
        if r >= model.reflections.len() {
            report.push(IndexInRange, format!("mapping pair {p} names missing reflection {r}"));
            in_range = false;
        }
        if in_range {
            state_hits[s] += 1;
            reflection_hits[r] += 1;
        }
    }
    for (s, &hits) in state_hits.iter().enumerate() {
        match hits {
            1 => {}
            0 => report.push(TotalMapping, format!("state {s} is not mapped")),
            n => report.push(TotalMapping, format!("state {s} is mapped {n} times")),
        }
    }
    for (r, &hits) in reflection_hits.iter().enumerate() {
        if hits == 0 {
            report.push(Surjective, format!("reflection {r} is not the image of any state"));
        }
    }

    let measures = &model.measures;
    let bad = |x: f64| !(x.is_finite() && x >= 0.0);
    for (id, &x) in &measures.noumenon_measure {
        if !model.noumena.contains(id) {
            report.push(MeasureDomain, format!("noumenon measure keyed by unknown element {id:?}"));
        }
        if bad(x) {
            report.push(MeasureDomain, format!("noumenon measure of {id:?} is {x}"));
        }
    }
    for (id, &x) in &measures.carrier_measure {
        if !model.carriers.contains(id) {
            report.push(MeasureDomain, format!("carrier measure keyed by unknown element {id:?}"));
        }
        if bad(x) {
            report.push(MeasureDomain, format!("carrier measure of {id:?} is {x}"));
        }
    }
    for (&r, &x) in &measures.reflection_measure {
        if r >= model.reflections.len() {
            report.push(MeasureDomain, format!("reflection measure keyed by missing reflection {r}"));
        }
        if bad(x) {
            report.push(MeasureDomain, format!("reflection measure of {r} is {x}"));
        }
    }
    for (i, copy) in model.copies.iter().enumerate() {
        if bad(copy.carrier_measure) || bad(copy.weight) {
            report.push(CopyDomain, format!("copy {i} has a negative or non-finite measure or weight"));
        }
    }

    let mut seen: HashMap<&StateEntry, usize> = HashMap::new();
    for (i, entry) in model.states.iter().enumerate() {
        if let Some(&first) = seen.get(entry) {
            report.notes.push(Note::DuplicateStateValue { first, second: i });
        } else {
            seen.insert(entry, i);
        }
    }
    let delay = model.reflection.sup() - model.occurrence.sup();
    if delay.is_negative() {
        report.notes.push(Note::NegativeDelay {
            delay: delay.to_string(),
        });
    }
    if !model.enabled {
        report.notes.push(Note::EnablingNotAsserted);
    }

    report
}

/// Looks for a pair of mapping entries that breaks value-level bijectivity.
fn restorability_witness(model: &InformationModel) -> Option<String> {
    let mut forward: HashMap<&StateEntry, (usize, &StateEntry)> = HashMap::new();
    let mut backward: HashMap<&StateEntry, (usize, &StateEntry)> = HashMap::new();
    for &(s, r) in &model.mapping {
        let (state, refl) = (&model.states[s], &model.reflections[r]);
        if let Some(&(other, image)) = forward.get(state) {
            if image != refl {
                return Some(format!(
                    "equal states {other} and {s} map to unequal reflections"
                ));
            }
        } else {
            forward.insert(state, (s, refl));
        }
        if let Some(&(other, pre)) = backward.get(refl) {
            if pre != state {
                return Some(format!(
                    "distinct states {other} and {s} map to equal reflections"
                ));
            }
        } else {
            backward.insert(refl, (s, state));
        }
    }
    None
}

/// True when the model is valid and its mapping is a bijection between the
/// state values and the reflection values, so the inverse mapping exists.
pub fn is_restorable(model: &InformationModel) -> Result<bool> {
    validate(model).into_result()?;
    Ok(restorability_witness(model).is_none())
}

pub(crate) fn require_restorable(model: &InformationModel) -> Result<()> {
    validate(model).into_result()?;
    match restorability_witness(model) {
        None => Ok(()),
        Some(witness) => Err(Error::NotRestorable { witness }),
    }
}

/// The state entry restored from reflection `index` by the inverse mapping.
pub fn restore(model: &InformationModel, index: usize) -> Result<&StateEntry> {
    require_restorable(model)?;
    if index >= model.reflections.len() {
        return Err(Error::UnknownReflection {
            index,
            len: model.reflections.len(),
        });
    }
    let state = model
        .preimages(index)
        .next()
        .expect("valid models are surjective");
    Ok(&model.states[state])
}
