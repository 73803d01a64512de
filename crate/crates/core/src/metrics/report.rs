use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value as Json};

use super::{
    aggregation, coverage, delay, duration, granularity, mismatch, sampling_rate, scope, variety, volume, DistanceSpec,
    EquivalenceRelation, RelationSet,
};
use crate::error::Result;
use crate::model::InformationModel;
use crate::time::Gap;

/// One metric: its value and unit, or the reason it could not be computed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MetricEntry {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<Json>,
    pub unit: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inputs: Option<Json>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl MetricEntry {
    fn from_result<T: Into<Json>>(result: Result<T>, unit: &str) -> Self {
        match result {
            Ok(v) => MetricEntry {
                value: Some(v.into()),
                unit: unit.to_string(),
                inputs: None,
                error: None,
                note: None,
            },
            Err(e) => MetricEntry {
                value: None,
                unit: unit.to_string(),
                inputs: None,
                error: Some(e.to_string()),
                note: None,
            },
        }
    }

    fn with_inputs(mut self, inputs: Json) -> Self {
        self.inputs = Some(inputs);
        self
    }

    fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.to_string());
        self
    }

    pub fn is_ok(&self) -> bool {
        self.error.is_none()
    }
}

/// Metric name to entry, serialized in name order.
pub type MetricReport = BTreeMap<String, MetricEntry>;

/// Evaluates every metric whose inputs are available.
///
/// Variety, aggregation and mismatch appear only when a relation, relation
/// set or target model is supplied. A failing metric is reported with its
/// error instead of aborting the report.
pub fn metric_report(
    model: &InformationModel,
    relation: Option<&EquivalenceRelation>,
    relations: Option<&RelationSet>,
    gaps: Option<&[Gap]>,
    target: Option<(&InformationModel, &DistanceSpec)>,
) -> MetricReport {
    let mut report = MetricReport::new();
    let unit = model.measures.volume_unit.clone();
    let mut vol = MetricEntry::from_result(volume(model), &unit);
    if unit == "bit" {
        vol = vol.with_note("byte sizes convert at 1 MB = 2^20 bytes = 8388608 bits");
    }
    report.insert("volume".into(), vol);
    report.insert(
        "delay".into(),
        MetricEntry::from_result(Ok(delay(model).to_string()), "s"),
    );
    report.insert(
        "duration".into(),
        MetricEntry::from_result(Ok(duration(model).to_string()), "s"),
    );
    report.insert("scope".into(), MetricEntry::from_result(scope(model), "sigma(o)"));
    report.insert(
        "granularity".into(),
        MetricEntry::from_result(granularity(model), "sigma(o)"),
    );
    let rate = sampling_rate(model, gaps).map(|r| json!({ "gaps": r.gaps, "total": r.total.to_string(), "hz": r.hz() }));
    let gap_inputs = match gaps {
        Some(g) => serde_json::to_value(g).unwrap_or(Json::Null),
        None => json!("derived from occurrence time"),
    };
    report.insert(
        "sampling_rate".into(),
        MetricEntry::from_result(rate, "1/s").with_inputs(json!({ "gaps": gap_inputs })),
    );
    report.insert("coverage".into(), MetricEntry::from_result(coverage(model), "sigma(c)"));
    if let Some(r) = relation {
        report.insert(
            "variety".into(),
            MetricEntry::from_result(variety(model, r).map(|v| v as u64), "classes")
                .with_inputs(serde_json::to_value(r).unwrap_or(Json::Null)),
        );
    }
    if let Some(r) = relations {
        report.insert(
            "aggregation".into(),
            MetricEntry::from_result(aggregation(model, r), "relations per state")
                .with_inputs(serde_json::to_value(r).unwrap_or(Json::Null)),
        );
    }
    if let Some((t, spec)) = target {
        report.insert(
            "mismatch".into(),
            MetricEntry::from_result(mismatch(model, t, spec), "distance")
                .with_inputs(serde_json::to_value(spec).unwrap_or(Json::Null)),
        );
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn penguin_report() {
        let report = metric_report(&fixtures::penguin(), None, None, None, None);
        assert_eq!(report["volume"].value, Some(json!(8388608.0)));
        assert_eq!(report["duration"].value, Some(json!("0.01")));
        assert_eq!(report["delay"].value, Some(json!("86399.99")));
        assert!(!report["sampling_rate"].is_ok());
        assert!(report["volume"].note.is_some());
        assert!(!report.contains_key("variety"));
    }
}
