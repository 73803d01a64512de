//! The eleven information metrics over a validated model.

mod distance;
mod relation;
mod report;

pub use distance::{distortion, mismatch, DistanceKind, DistanceSpec};
pub(crate) use distance::mismatch_unchecked;
pub use relation::{EquivalenceRelation, RelationSet};
pub use report::{metric_report, MetricEntry, MetricReport};

pub(crate) use relation::{distinct_values, transport_edges, transport_relation};

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use serde::Serialize;

use crate::atomic::decompose_atomic;
use crate::error::{Error, Result};
use crate::model::{ElementId, InformationModel};
use crate::time::{Gap, Seconds};
use crate::validate::validate;

/// σ(g(c, T_m)): sum of the reflection measures over every reflection entry.
pub fn volume(model: &InformationModel) -> Result<f64> {
    validate(model).into_result()?;
    let measure = &model.measures.reflection_measure;
    let missing: Vec<String> = (0..model.reflections.len())
        .filter(|r| !measure.contains_key(r))
        .map(|r| r.to_string())
        .collect();
    if !missing.is_empty() {
        return Err(Error::MissingMeasure {
            what: "reflection",
            missing,
        });
    }
    Ok((0..model.reflections.len()).map(|r| measure[&r]).sum())
}

/// `sup T_m - sup T_h`; negative when the reflection ends before the occurrence.
pub fn delay(model: &InformationModel) -> Seconds {
    model.reflection.sup() - model.occurrence.sup()
}

/// `sup T_h - inf T_h`.
pub fn duration(model: &InformationModel) -> Seconds {
    model.occurrence.sup() - model.occurrence.inf()
}

fn sum_measure(what: &'static str, elements: &BTreeSet<ElementId>, measure: &BTreeMap<ElementId, f64>) -> Result<f64> {
    let missing: Vec<String> = elements.iter().filter(|e| !measure.contains_key(*e)).cloned().collect();
    if !missing.is_empty() {
        return Err(Error::MissingMeasure { what, missing });
    }
    Ok(elements.iter().map(|e| measure[e]).sum())
}

/// σ(o): total measure of the noumena.
pub fn scope(model: &InformationModel) -> Result<f64> {
    validate(model).into_result()?;
    sum_measure("noumenon", &model.noumena, &model.measures.noumenon_measure)
}

/// Mean noumenon measure σ(o_λ) over the atoms (counting measure on the index set).
pub fn granularity(model: &InformationModel) -> Result<f64> {
    let atoms = decompose_atomic(model)?;
    let sizes = atoms.iter().map(|a| a.noumenon_size()).collect::<Result<Vec<f64>>>()?;
    Ok(sizes.iter().sum::<f64>() / sizes.len() as f64)
}

/// Number of equivalence classes of `relation` on the state set.
pub fn variety(model: &InformationModel, relation: &EquivalenceRelation) -> Result<usize> {
    validate(model).into_result()?;
    relation.check_over(&model.states)?;
    Ok(relation.class_count(model.states.len()))
}

/// Gap count over total gap length, kept as an exact ratio.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SamplingRate {
    pub gaps: usize,
    pub total: Seconds,
}

impl SamplingRate {
    /// The rate in 1/s, computed from the reduced fraction so that `k`
    /// equal gaps of width `w` give exactly the same value as `1/w`.
    pub fn hz(&self) -> f64 {
        let num = self.gaps as i128 * Seconds::from_secs(1).as_nanos();
        let den = self.total.as_nanos();
        let g = num.gcd(&den);
        (num / g) as f64 / (den / g) as f64
    }
}

/// `count(U_λ) / |∪ U_λ|`. Without explicit gaps the maximal gaps of
/// `T_h` inside its hull are used.
pub fn sampling_rate(model: &InformationModel, gaps: Option<&[Gap]>) -> Result<SamplingRate> {
    let derived;
    let gaps = match gaps {
        Some(g) => g,
        None => {
            derived = model.occurrence.gaps();
            &derived
        }
    };
    model.occurrence.check_gaps(gaps)?;
    Ok(SamplingRate {
        gaps: gaps.len(),
        total: gaps.iter().map(Gap::width).sum(),
    })
}

/// Distinct labeled relations per distinct state value.
pub fn aggregation(model: &InformationModel, relations: &RelationSet) -> Result<f64> {
    if model.states.is_empty() {
        return Err(Error::EmptyStates);
    }
    validate(model).into_result()?;
    relations.check_over(model.states.len())?;
    let edges = relations.distinct_over(&model.states).len();
    Ok(edges as f64 / distinct_values(&model.states) as f64)
}

/// Σ σ(c_λ)·μ_λ over the copy records (the model itself is one of them).
pub fn coverage(model: &InformationModel) -> Result<f64> {
    if model.copies.is_empty() {
        return Err(Error::MissingCopies);
    }
    validate(model).into_result()?;
    Ok(model.copies.iter().map(|c| c.carrier_measure * c.weight).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::CopyRecord;
    use crate::time::TimeSet;

    fn s(x: &str) -> Seconds {
        x.parse().unwrap()
    }

    #[test]
    fn penguin_volume_is_one_mebibyte_in_bits() {
        assert_eq!(volume(&fixtures::penguin()).unwrap(), 8_388_608.0);
    }

    #[test]
    fn volume_needs_every_measure() {
        let mut m = fixtures::identity(3);
        m.measures.reflection_measure.remove(&1);
        assert_eq!(
            volume(&m),
            Err(Error::MissingMeasure {
                what: "reflection",
                missing: vec!["1".into()]
            })
        );
    }

    #[test]
    fn volume_sums_reflections() {
        let mut m = fixtures::identity(3);
        for (r, v) in [2.0, 3.0, 5.0].into_iter().enumerate() {
            m.measures.reflection_measure.insert(r, v);
        }
        assert_eq!(volume(&m).unwrap(), 10.0);
    }

    #[test]
    fn penguin_delay_and_duration() {
        let m = fixtures::penguin();
        assert_eq!(delay(&m), s("86400") - s("0.01"));
        assert_eq!(duration(&m), s("0.01"));
    }

    #[test]
    fn delay_and_duration_cases() {
        let mut m = fixtures::identity(2);
        assert_eq!(delay(&m), Seconds::ZERO);
        m.occurrence = TimeSet::interval(s("0"), s("0.01")).unwrap();
        m.reflection = TimeSet::interval(s("5"), s("10")).unwrap();
        assert_eq!(delay(&m), s("9.99"));

        m.occurrence = TimeSet::point(s("3"));
        assert_eq!(duration(&m), Seconds::ZERO);
        m.occurrence = TimeSet::new([(s("1"), s("2")), (s("5"), s("9"))], []).unwrap();
        assert_eq!(duration(&m), s("8"));
    }

    #[test]
    fn scope_cases() {
        assert_eq!(scope(&fixtures::network(4)).unwrap(), 4.0);
        let mut m = fixtures::identity(2);
        m.measures.noumenon_measure.insert("x0".into(), 0.5);
        m.measures.noumenon_measure.insert("x1".into(), 0.25);
        assert_eq!(scope(&m).unwrap(), 0.75);
        m.measures.noumenon_measure.remove("x1");
        assert!(matches!(scope(&m), Err(Error::MissingMeasure { .. })));
    }

    #[test]
    fn granularity_is_atom_mean() {
        let mut m = fixtures::identity(2);
        m.measures.noumenon_measure.insert("x0".into(), 1.0);
        m.measures.noumenon_measure.insert("x1".into(), 3.0);
        assert_eq!(granularity(&m).unwrap(), 2.0);
        let mut single = fixtures::identity(1);
        single.measures.noumenon_measure.insert("x0".into(), 7.0);
        assert_eq!(granularity(&single).unwrap(), 7.0);
    }

    #[test]
    fn variety_counts_classes() {
        let m = fixtures::permutation(&[0, 1, 2, 3, 4, 5]);
        let three = EquivalenceRelation::from_labels(["a", "b", "c", "a", "b", "c"]);
        assert_eq!(variety(&m, &three).unwrap(), 3);
        assert_eq!(variety(&m, &EquivalenceRelation::from_labels(["k"; 6])).unwrap(), 1);
        assert_eq!(variety(&m, &EquivalenceRelation::identity(6)).unwrap(), 6);
        let partial = EquivalenceRelation::from_labels(["a"; 4]);
        assert_eq!(variety(&m, &partial), Err(Error::PartialRelation { missing: vec![4, 5] }));
    }

    #[test]
    fn sampling_rate_cases() {
        let mut m = fixtures::identity(1);
        m.occurrence = TimeSet::new([], (0..=10).map(|k| Seconds::from_millis(100 * k))).unwrap();
        let rate = sampling_rate(&m, None).unwrap();
        assert_eq!(rate.gaps, 10);
        assert_eq!(rate.hz(), 10.0);

        m.occurrence = TimeSet::new([], [s("0"), s("4")]).unwrap();
        assert_eq!(sampling_rate(&m, None).unwrap().hz(), 0.25);

        m.occurrence = TimeSet::interval(s("0"), s("1")).unwrap();
        assert_eq!(sampling_rate(&m, None), Err(Error::NoGaps));
        let g = Gap::new(s("0.2"), s("0.3")).unwrap();
        assert_eq!(sampling_rate(&m, Some(&[g])), Err(Error::GapMeetsOccurrence { index: 0 }));
    }

    #[test]
    fn equal_gaps_give_inverse_width_exactly() {
        for w in ["0.3", "0.07", "1.1", "2.5"] {
            let w = s(w);
            for k in 1..20i64 {
                let points = (0..=k).map(|i| Seconds::from_nanos(w.as_nanos() * i as i128));
                let mut m = fixtures::identity(1);
                m.occurrence = TimeSet::new([], points).unwrap();
                let rate = sampling_rate(&m, None).unwrap();
                let single = SamplingRate { gaps: 1, total: w };
                assert_eq!(rate.hz(), single.hz());
            }
        }
    }

    #[test]
    fn aggregation_cases() {
        let m = fixtures::permutation(&[0, 1, 2]);
        let six = RelationSet::new([(0, 1, "r"), (1, 2, "r"), (2, 0, "r"), (0, 0, "s"), (1, 1, "s"), (2, 2, "s")]);
        assert_eq!(aggregation(&m, &six).unwrap(), 2.0);
        assert_eq!(aggregation(&m, &RelationSet::default()).unwrap(), 0.0);
        let repeated = RelationSet::new([(0, 1, "r"), (0, 1, "r")]);
        assert_eq!(aggregation(&m, &repeated).unwrap(), 1.0 / 3.0);
        assert_eq!(
            aggregation(&m, &RelationSet::new([(0, 9, "r")])),
            Err(Error::UnresolvedEdge { edge: 0, index: 9 })
        );
        let mut empty = m.clone();
        empty.states.clear();
        assert_eq!(aggregation(&empty, &six), Err(Error::EmptyStates));
    }

    #[test]
    fn complete_relation_gives_n() {
        for n in 1..8 {
            let m = fixtures::permutation(&(0..n).collect::<Vec<_>>());
            let complete = RelationSet::new((0..n).flat_map(|a| (0..n).map(move |b| (a, b, "e"))));
            assert_eq!(aggregation(&m, &complete).unwrap(), n as f64);
        }
    }

    #[test]
    fn coverage_cases() {
        assert_eq!(coverage(&fixtures::network(4)).unwrap(), 4.0);
        let mut m = fixtures::identity(1);
        m.copies = vec![CopyRecord::new(2.5)];
        assert_eq!(coverage(&m).unwrap(), 2.5);
        m.copies = [2.0, 3.0, 5.0].map(CopyRecord::new).to_vec();
        assert_eq!(coverage(&m).unwrap(), 10.0);
        m.copies.push(CopyRecord::new(0.5));
        assert_eq!(coverage(&m).unwrap(), 10.5);
        m.copies.clear();
        assert_eq!(coverage(&m), Err(Error::MissingCopies));
    }
}
