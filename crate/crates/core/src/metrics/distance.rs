use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{InformationModel, StateEntry, Value};
use crate::time::TimeSet;
use crate::validate::validate;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DistanceKind {
    Discrete,
    L1,
    #[default]
    L2,
    Linf,
}

impl DistanceKind {
    pub fn name(self) -> &'static str {
        match self {
            DistanceKind::Discrete => "discrete",
            DistanceKind::L1 => "l1",
            DistanceKind::L2 => "l2",
            DistanceKind::Linf => "linf",
        }
    }
}

/// Distance kind plus mismatch weights for `[o, T_h, f, c, T_m, g]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DistanceSpec {
    #[serde(default)]
    pub kind: DistanceKind,
    #[serde(default = "unit_weights")]
    pub weights: [f64; 6],
}

fn unit_weights() -> [f64; 6] {
    [1.0; 6]
}

impl Default for DistanceSpec {
    fn default() -> Self {
        DistanceSpec {
            kind: DistanceKind::L2,
            weights: unit_weights(),
        }
    }
}

impl DistanceSpec {
    pub fn new(kind: DistanceKind) -> Self {
        DistanceSpec {
            kind,
            ..Self::default()
        }
    }

    pub fn with_weights(mut self, weights: [f64; 6]) -> Self {
        self.weights = weights;
        self
    }

    pub fn check(&self) -> Result<()> {
        let ok = self.weights.iter().all(|w| w.is_finite() && *w >= 0.0) && self.weights.iter().any(|w| *w > 0.0);
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidWeights)
        }
    }
}

fn values_distance<'a, I>(pairs: I, n: usize, kind: DistanceKind) -> Result<f64>
where
    I: Iterator<Item = (&'a Value, &'a Value)>,
{
    if kind == DistanceKind::Discrete {
        let pairs: Vec<_> = pairs.collect();
        return Ok(if pairs.iter().all(|(a, b)| a == b) { 0.0 } else { 1.0 });
    }
    let mut diffs = Vec::with_capacity(n);
    for (a, b) in pairs {
        let (x, y) = match (a.numeric(), b.numeric()) {
            (Some(x), Some(y)) => (x, y),
            _ => return Err(Error::NonNumeric { kind: kind.name() }),
        };
        if x.len() != y.len() {
            return Err(Error::DimensionMismatch {
                expected: x.len(),
                found: y.len(),
            });
        }
        diffs.extend(x.iter().zip(y).map(|(p, q)| (p - q).abs()));
    }
    Ok(match kind {
        DistanceKind::L1 => diffs.iter().sum(),
        DistanceKind::L2 => diffs.iter().map(|d| d * d).sum::<f64>().sqrt(),
        DistanceKind::Linf => diffs.iter().copied().fold(0.0, f64::max),
        DistanceKind::Discrete => unreachable!(),
    })
}

/// d(f, f̃) between restored and true state values, entry by entry.
pub fn distortion(restored: &[Value], truth: &[Value], spec: &DistanceSpec) -> Result<f64> {
    if restored.len() != truth.len() {
        return Err(Error::DimensionMismatch {
            expected: truth.len(),
            found: restored.len(),
        });
    }
    values_distance(restored.iter().zip(truth), restored.len(), spec.kind)
}

fn set_distance<T: Eq + std::hash::Hash>(a: impl IntoIterator<Item = T>, b: impl IntoIterator<Item = T>) -> f64 {
    let a: HashSet<T> = a.into_iter().collect();
    let b: HashSet<T> = b.into_iter().collect();
    if a == b {
        0.0
    } else {
        1.0
    }
}

fn time_distance(a: &TimeSet, b: &TimeSet) -> f64 {
    ((a.sup() - b.sup()).abs() + (a.inf() - b.inf()).abs()).as_f64()
}

/// Spec metric on index-aligned values when shapes agree, otherwise 0/1 set equality.
fn entries_distance(a: &[StateEntry], b: &[StateEntry], kind: DistanceKind) -> f64 {
    if kind != DistanceKind::Discrete && a.len() == b.len() {
        if let Ok(d) = values_distance(a.iter().zip(b).map(|(x, y)| (&x.value, &y.value)), a.len(), kind) {
            return d;
        }
    }
    set_distance(a, b)
}

/// Weighted distance between a model and a target model over the six components.
pub fn mismatch(model: &InformationModel, target: &InformationModel, spec: &DistanceSpec) -> Result<f64> {
    spec.check()?;
    validate(model).into_result()?;
    validate(target).into_result()?;
    Ok(mismatch_unchecked(model, target, spec))
}

pub(crate) fn mismatch_unchecked(model: &InformationModel, target: &InformationModel, spec: &DistanceSpec) -> f64 {
    let components = [
        set_distance(&model.noumena, &target.noumena),
        time_distance(&model.occurrence, &target.occurrence),
        entries_distance(&model.states, &target.states, spec.kind),
        set_distance(&model.carriers, &target.carriers),
        time_distance(&model.reflection, &target.reflection),
        entries_distance(&model.reflections, &target.reflections, spec.kind),
    ];
    components.iter().zip(spec.weights).map(|(d, w)| d * w).sum()
}
