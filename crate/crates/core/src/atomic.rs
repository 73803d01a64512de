//! Atomic decomposition of information and recombination of atoms.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::model::{ElementId, InformationModel, MeasureAssignment, StateEntry};
use crate::time::TimeSet;
use crate::validate::validate;

/// An indivisible piece `<o_λ, T_hλ, f_λ, c_λ, T_mλ, g_λ>`: one state entry,
/// the reflection entry it maps to, and the measures of their subjects.
#[derive(Debug, Clone, PartialEq)]
pub struct AtomicInfo {
    pub state_index: usize,
    /// Identity of the reflection entry; pieces with the same identity overlap.
    pub reflection_index: usize,
    pub state: StateEntry,
    pub reflection: StateEntry,
    pub noumenon_measure: BTreeMap<ElementId, f64>,
    pub carrier_measure: BTreeMap<ElementId, f64>,
    pub reflection_measure: Option<f64>,
    pub volume_unit: String,
    pub enabled: bool,
}

impl AtomicInfo {
    pub fn noumena(&self) -> &BTreeSet<ElementId> {
        &self.state.subjects
    }

    pub fn occurrence(&self) -> &TimeSet {
        &self.state.time
    }

    pub fn carriers(&self) -> &BTreeSet<ElementId> {
        &self.reflection.subjects
    }

    pub fn reflection_time(&self) -> &TimeSet {
        &self.reflection.time
    }

    /// σ(g_λ); fails when the reflection has no measure.
    pub fn volume(&self) -> Result<f64> {
        self.reflection_measure.ok_or_else(|| Error::MissingMeasure {
            what: "reflection",
            missing: vec![self.reflection_index.to_string()],
        })
    }

    /// σ(o_λ): the summed measure of the atom's noumenon subjects.
    pub fn noumenon_size(&self) -> Result<f64> {
        let missing: Vec<String> = self
            .state
            .subjects
            .iter()
            .filter(|s| !self.noumenon_measure.contains_key(*s))
            .cloned()
            .collect();
        if !missing.is_empty() {
            return Err(Error::MissingMeasure {
                what: "noumenon",
                missing,
            });
        }
        Ok(self.noumenon_measure.values().sum())
    }
}

fn restrict(measure: &BTreeMap<ElementId, f64>, keys: &BTreeSet<ElementId>) -> BTreeMap<ElementId, f64> {
    keys.iter()
        .filter_map(|k| measure.get(k).map(|&v| (k.clone(), v)))
        .collect()
}

/// Splits a valid model into one atom per mapping pair.
///
/// Every reflection must be the image of exactly one state entry; a
/// reflection shared by several pairs cannot be split without overlap.
pub fn decompose_atomic(model: &InformationModel) -> Result<Vec<AtomicInfo>> {
    validate(model).into_result()?;
    let mut hits = vec![0usize; model.reflections.len()];
    for &(_, r) in &model.mapping {
        hits[r] += 1;
    }
    if let Some(r) = hits.iter().position(|&h| h > 1) {
        return Err(Error::SharedReflection { reflection: r });
    }
    let m = &model.measures;
    Ok(model
        .mapping
        .iter()
        .map(|&(s, r)| {
            let state = model.states[s].clone();
            let reflection = model.reflections[r].clone();
            AtomicInfo {
                state_index: s,
                reflection_index: r,
                noumenon_measure: restrict(&m.noumenon_measure, &state.subjects),
                carrier_measure: restrict(&m.carrier_measure, &reflection.subjects),
                reflection_measure: m.reflection_measure.get(&r).copied(),
                volume_unit: m.volume_unit.clone(),
                enabled: model.enabled,
                state,
                reflection,
            }
        })
        .collect())
}

fn merge_into(target: &mut BTreeMap<ElementId, f64>, source: &BTreeMap<ElementId, f64>) -> Result<()> {
    for (k, &v) in source {
        match target.get(k) {
            Some(&old) if old != v => return Err(Error::MeasureConflict { element: k.clone() }),
            _ => {
                target.insert(k.clone(), v);
            }
        }
    }
    Ok(())
}

/// Unites disjoint atoms into one model whose mapping pairs are exactly the atoms.
///
/// States are ordered by their original state index and reflections by
/// reflection identity, so `combine(decompose_atomic(m))` reproduces the
/// mapping of `m`.
pub fn combine(pieces: &[AtomicInfo]) -> Result<InformationModel> {
    if pieces.is_empty() {
        return Err(Error::NoPieces);
    }
    let mut by_reflection: Vec<&AtomicInfo> = pieces.iter().collect();
    by_reflection.sort_by_key(|p| p.reflection_index);
    if let Some(w) = by_reflection.windows(2).find(|w| w[0].reflection_index == w[1].reflection_index) {
        return Err(Error::OverlappingPieces {
            reflection: w[0].reflection_index,
        });
    }
    let mut by_state: Vec<usize> = (0..by_reflection.len()).collect();
    by_state.sort_by_key(|&k| (by_reflection[k].state_index, k));
    let mut state_slot = vec![0usize; by_reflection.len()];
    for (slot, &k) in by_state.iter().enumerate() {
        state_slot[k] = slot;
    }

    let mut measures = MeasureAssignment {
        volume_unit: by_reflection[0].volume_unit.clone(),
        ..MeasureAssignment::default()
    };
    let mut noumena = BTreeSet::new();
    let mut carriers = BTreeSet::new();
    let mut occurrence: Option<TimeSet> = None;
    let mut reflection: Option<TimeSet> = None;
    for (k, piece) in by_reflection.iter().enumerate() {
        noumena.extend(piece.state.subjects.iter().cloned());
        carriers.extend(piece.reflection.subjects.iter().cloned());
        occurrence = Some(match occurrence {
            None => piece.state.time.clone(),
            Some(t) => t.union(&piece.state.time),
        });
        reflection = Some(match reflection {
            None => piece.reflection.time.clone(),
            Some(t) => t.union(&piece.reflection.time),
        });
        merge_into(&mut measures.noumenon_measure, &piece.noumenon_measure)?;
        merge_into(&mut measures.carrier_measure, &piece.carrier_measure)?;
        if let Some(v) = piece.reflection_measure {
            measures.reflection_measure.insert(k, v);
        }
    }

    Ok(InformationModel {
        noumena,
        carriers,
        occurrence: occurrence.expect("pieces are nonempty"),
        reflection: reflection.expect("pieces are nonempty"),
        states: by_state.iter().map(|&k| by_reflection[k].state.clone()).collect(),
        reflections: by_reflection.iter().map(|p| p.reflection.clone()).collect(),
        mapping: (0..by_reflection.len()).map(|k| (state_slot[k], k)).collect(),
        copies: Vec::new(),
        measures,
        enabled: by_reflection.iter().all(|p| p.enabled),
    })
}
