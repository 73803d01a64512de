//! Ready-made models: the penguin photograph, identity and permutation
//! models, networks, single-quantum self-maps and transmission chains.

use std::collections::BTreeSet;

use crate::model::{CopyRecord, InformationModel, MeasureAssignment, StateEntry, Value};
use crate::time::{Seconds, TimeSet};

pub const PENGUIN_JSON: &str = include_str!("../fixtures/penguin.json");

/// Three penguins photographed over a 0.01 s shutter, stored on a laptop as a 1 MB file.
pub fn penguin() -> InformationModel {
    InformationModel::from_json(PENGUIN_JSON).expect("bundled penguin fixture parses")
}

fn ids(prefix: &str, n: usize) -> BTreeSet<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

fn unit_measures(noumena: &BTreeSet<String>, carriers: &BTreeSet<String>, reflections: usize) -> MeasureAssignment {
    MeasureAssignment {
        noumenon_measure: noumena.iter().map(|k| (k.clone(), 1.0)).collect(),
        carrier_measure: carriers.iter().map(|k| (k.clone(), 1.0)).collect(),
        reflection_measure: (0..reflections).map(|r| (r, 1.0)).collect(),
        ..MeasureAssignment::default()
    }
}

fn span(n: usize) -> TimeSet {
    TimeSet::interval(Seconds::ZERO, Seconds::from_secs(n.max(1) as i64)).expect("nonnegative span")
}

/// `n` states mapped onto identical reflections (`f = g`, mapping `k -> k`).
pub fn identity(n: usize) -> InformationModel {
    let elements = ids("x", n);
    let states: Vec<StateEntry> = (0..n)
        .map(|i| {
            StateEntry::new(
                [format!("x{i}")],
                TimeSet::point(Seconds::from_secs(i as i64)),
                Value::Symbol(format!("s{i}")),
            )
        })
        .collect();
    InformationModel {
        measures: unit_measures(&elements, &elements, n),
        noumena: elements.clone(),
        carriers: elements,
        occurrence: span(n),
        reflection: span(n),
        reflections: states.clone(),
        states,
        mapping: (0..n).map(|i| (i, i)).collect(),
        copies: vec![CopyRecord::new(n as f64)],
        enabled: true,
    }
}

/// Numeric states `0..n` mapped to reflections by `perm` (`state i -> perm[i]`).
pub fn permutation(perm: &[usize]) -> InformationModel {
    let n = perm.len();
    let noumena = ids("o", n);
    let carriers = ids("c", n);
    let offset = n as i64 + 1;
    InformationModel {
        measures: unit_measures(&noumena, &carriers, n),
        noumena,
        carriers,
        occurrence: span(n),
        reflection: TimeSet::interval(Seconds::from_secs(offset), Seconds::from_secs(offset + n as i64))
            .expect("ordered"),
        states: (0..n)
            .map(|i| {
                StateEntry::new(
                    [format!("o{i}")],
                    TimeSet::point(Seconds::from_secs(i as i64)),
                    Value::Scalar(i as f64),
                )
            })
            .collect(),
        reflections: (0..n)
            .map(|j| {
                StateEntry::new(
                    [format!("c{j}")],
                    TimeSet::point(Seconds::from_secs(offset + j as i64)),
                    Value::Vector(vec![j as f64, 1.0]),
                )
            })
            .collect(),
        mapping: perm.iter().enumerate().map(|(i, &j)| (i, j)).collect(),
        copies: vec![CopyRecord::new(n as f64)],
        enabled: true,
    }
}

/// A network of `n` nodes reporting on itself; every node measures 1 and
/// holds one copy of the information.
pub fn network(n: usize) -> InformationModel {
    let nodes = ids("node", n);
    let states: Vec<StateEntry> = (0..n)
        .map(|i| StateEntry::new([format!("node{i}")], span(1), Value::Symbol(format!("status of node{i}"))))
        .collect();
    InformationModel {
        measures: unit_measures(&nodes, &nodes, n),
        noumena: nodes.clone(),
        carriers: nodes,
        occurrence: span(1),
        reflection: span(1),
        reflections: states.clone(),
        states,
        mapping: (0..n).map(|i| (i, i)).collect(),
        copies: vec![CopyRecord::new(1.0); n],
        enabled: true,
    }
}

/// A single quantum `q` passing through `n` orthogonal states, each state a
/// self-mapped atom worth one qubit.
pub fn quantum_self_map(n: usize) -> InformationModel {
    let q: BTreeSet<String> = ["q".to_string()].into();
    let states: Vec<StateEntry> = (0..n)
        .map(|i| {
            StateEntry::new(
                ["q"],
                TimeSet::point(Seconds::from_secs(i as i64)),
                Value::symbol(if i % 2 == 0 { "|0>" } else { "|1>" }),
            )
        })
        .collect();
    let mut measures = unit_measures(&q, &q, n);
    measures.volume_unit = "qubit".into();
    InformationModel {
        measures,
        noumena: q.clone(),
        carriers: q,
        occurrence: span(n),
        reflection: span(n),
        reflections: states.clone(),
        states,
        mapping: (0..n).map(|i| (i, i)).collect(),
        copies: vec![CopyRecord::new(1.0)],
        enabled: true,
    }
}

/// A serial chain with the given per-link delays and `width` states per
/// link. Link `i` maps stage `i` onto stage `i + 1`; every link's reflections
/// equal the next link's states.
pub fn chain(delays: &[Seconds], width: usize) -> Vec<InformationModel> {
    let one = Seconds::from_secs(1);
    let mut occurrence = TimeSet::interval(Seconds::ZERO, one).expect("ordered");
    let stage_states = |stage: usize, time: &TimeSet| -> Vec<StateEntry> {
        (0..width)
            .map(|k| StateEntry::new([format!("stage{stage}")], time.clone(), Value::Symbol(format!("v{k}"))))
            .collect()
    };
    let mut links = Vec::with_capacity(delays.len());
    for (i, &d) in delays.iter().enumerate() {
        let sup = occurrence.sup() + d;
        let reflection = TimeSet::interval(sup - one, sup).expect("ordered");
        let noumena: BTreeSet<String> = [format!("stage{i}")].into();
        let carriers: BTreeSet<String> = [format!("stage{}", i + 1)].into();
        links.push(InformationModel {
            measures: unit_measures(&noumena, &carriers, width),
            noumena,
            carriers,
            states: stage_states(i, &occurrence),
            reflections: stage_states(i + 1, &reflection),
            occurrence,
            reflection: reflection.clone(),
            mapping: (0..width).map(|k| (k, k)).collect(),
            copies: vec![CopyRecord::new(1.0)],
            enabled: true,
        });
        occurrence = reflection;
    }
    links
}
