//! Metric evaluation over many models at once.

use crate::error::Result;
use crate::exec::Execution;
use crate::metrics::{metric_report, mismatch_unchecked, DistanceSpec, MetricReport};
use crate::model::InformationModel;
use crate::validate::{is_restorable, validate};

pub fn volumes(models: &[InformationModel], exec: Execution) -> Vec<Result<f64>> {
    exec.map(models, crate::metrics::volume)
}

pub fn restorable(models: &[InformationModel], exec: Execution) -> Vec<Result<bool>> {
    exec.map(models, is_restorable)
}

pub fn reports(models: &[InformationModel], exec: Execution) -> Vec<MetricReport> {
    exec.map(models, |m| metric_report(m, None, None, None, None))
}

/// Mismatch of every candidate against `target`, in candidate order.
pub fn mismatches(
    candidates: &[InformationModel],
    target: &InformationModel,
    spec: &DistanceSpec,
    exec: Execution,
) -> Result<Vec<f64>> {
    spec.check()?;
    validate(target).into_result()?;
    exec.map(candidates, |c| {
        validate(c).into_result()?;
        Ok(mismatch_unchecked(c, target, spec))
    })
    .into_iter()
    .collect()
}
