//! Classical calculators that each information metric reduces to: Shannon
//! entropy, serial delay, the radar range equation, the Rayleigh criterion,
//! variety and aggregation invariance, MTBF, Nyquist sampling, Metcalfe's
//! law, Kalman filtering and average search length.

mod kalman;
mod search;

pub use kalman::{estimation_error, kalman_filter, KalmanScenario, KalmanStep, KalmanTrace, LinearSystemSpec, TraceStep};
pub use search::{
    asl, asl_exact, asl_weighted, bisection_tree_asl, search_min_mismatch, Ratio, SearchAlgorithm, SearchOutcome,
    SearchSetup,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::metrics::{
    aggregation, coverage, distinct_values, scope, transport_edges, transport_relation, EquivalenceRelation,
    RelationSet,
};
use crate::model::InformationModel;
use crate::time::{Gap, Seconds};
use crate::validate::require_restorable;

const NORMALIZATION_TOLERANCE: f64 = 1e-12;

fn positive(name: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonPositive { name, value })
    }
}

/// Entropy `-Σ p_i log2 p_i` in bits: the least volume that still lets the
/// outcome of a random event be restored. Zero probabilities contribute 0.
pub fn shannon_min_volume(p: &[f64]) -> Result<f64> {
    check_distribution(p)?;
    Ok(p.iter().filter(|&&x| x > 0.0).map(|&x| -x * x.log2()).sum::<f64>().max(0.0))
}

fn check_distribution(p: &[f64]) -> Result<()> {
    if p.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some((index, &value)) = p.iter().enumerate().find(|(_, x)| !(**x >= 0.0)) {
        return Err(Error::NegativeProbability { index, value });
    }
    let sum: f64 = p.iter().sum();
    if (sum - 1.0).abs() > NORMALIZATION_TOLERANCE {
        return Err(Error::NonNormalized { sum });
    }
    Ok(())
}

/// Delay of a serial chain: the sum of its link delays.
pub fn serial_chain_delay(delays: &[Seconds]) -> Seconds {
    delays.iter().sum()
}

/// Monostatic radar: transmitter power (W), antenna gain, effective
/// aperture (m²) and minimum detectable signal (W).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, serde::Deserialize)]
pub struct RadarEquation {
    pub transmit_power: f64,
    pub gain: f64,
    pub effective_aperture: f64,
    pub min_signal: f64,
}

impl RadarEquation {
    /// Maximum detection range (m) for a target of cross-section `scope_sigma` (m²):
    /// `(P_t G_t A_e σ / ((4π)² S_min))^(1/4)`.
    pub fn max_range(&self, scope_sigma: f64) -> Result<f64> {
        let pt = positive("transmit power", self.transmit_power)?;
        let gt = positive("antenna gain", self.gain)?;
        let ae = positive("effective aperture", self.effective_aperture)?;
        let smin = positive("minimum detectable signal", self.min_signal)?;
        let sigma = positive("target cross-section", scope_sigma)?;
        let four_pi = 4.0 * std::f64::consts::PI;
        Ok((pt * gt * ae * sigma / (four_pi * four_pi * smin)).powf(0.25))
    }
}

pub fn radar_max_range(pt: f64, gt: f64, ae: f64, smin: f64, scope_sigma: f64) -> Result<f64> {
    RadarEquation {
        transmit_power: pt,
        gain: gt,
        effective_aperture: ae,
        min_signal: smin,
    }
    .max_range(scope_sigma)
}

/// Angular resolution `l / a` (rad) of an aperture of width `a` at wavelength `l`.
pub fn rayleigh_granularity(wavelength: f64, aperture_width: f64) -> Result<f64> {
    Ok(positive("wavelength", wavelength)? / positive("aperture width", aperture_width)?)
}

/// Class or ratio counts on both sides of a restorable mapping.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InvarianceCheck<T> {
    pub states: T,
    pub reflections: T,
    pub equal: bool,
}

/// Transports `relation` through the mapping and compares class counts on
/// the state set and on the reflection set.
pub fn variety_invariance_check(
    model: &InformationModel,
    relation: &EquivalenceRelation,
) -> Result<InvarianceCheck<usize>> {
    require_restorable(model)?;
    relation.check_over(&model.states)?;
    let states = relation.class_count(model.states.len());
    let reflections = transport_relation(model, relation).class_count(model.reflections.len());
    Ok(InvarianceCheck {
        states,
        reflections,
        equal: states == reflections,
    })
}

/// Transports `relations` through the mapping and compares the aggregation
/// ratio on the state set with the one on the reflection set.
pub fn aggregation_invariance_check(
    model: &InformationModel,
    relations: &RelationSet,
) -> Result<InvarianceCheck<f64>> {
    if model.states.is_empty() {
        return Err(Error::EmptyStates);
    }
    require_restorable(model)?;
    let states = aggregation(model, relations)?;
    let moved = transport_edges(model, relations);
    let reflections =
        moved.distinct_over(&model.reflections).len() as f64 / distinct_values(&model.reflections) as f64;
    Ok(InvarianceCheck {
        states,
        reflections,
        equal: states == reflections,
    })
}

/// Mean monitoring-session length (s) from `(sup, inf)` pairs; equals the
/// MTBF of the collecting device.
pub fn mtbf_duration(sessions: &[(Seconds, Seconds)]) -> Result<f64> {
    if sessions.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(index) = sessions.iter().position(|(sup, inf)| sup < inf) {
        return Err(Error::InvertedSession { index });
    }
    let total: Seconds = sessions.iter().map(|&(sup, inf)| sup - inf).sum();
    Ok(total.as_f64() / sessions.len() as f64)
}

/// Lowest restorable sampling rate `1/(2T)` of a signal with period `T`.
pub fn nyquist_min_rate(period: f64) -> Result<f64> {
    Ok(1.0 / (2.0 * positive("period", period)?))
}

/// `rate >= 1/(2T)`, boundary included.
pub fn nyquist_restorable(rate: f64, period: f64) -> Result<bool> {
    let rate = positive("sampling rate", rate)?;
    Ok(rate >= nyquist_min_rate(period)?)
}

/// Exact gap form of the Nyquist test: every gap is at most `T/2` wide.
pub fn nyquist_restorable_gaps(gaps: &[Gap], period: Seconds) -> Result<bool> {
    if !period.is_positive() {
        return Err(Error::NonPositive {
            name: "period",
            value: period.as_f64(),
        });
    }
    Ok(gaps.iter().all(|g| g.width().checked_mul(2).is_some_and(|w2| w2 <= period)))
}

/// Metcalfe value `n²` of a network of `n` nodes.
pub fn metcalfe_value(n: u64) -> u128 {
    u128::from(n) * u128::from(n)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MetcalfeCheck {
    pub nodes: u64,
    pub value: u128,
    pub max_scope: f64,
    pub max_coverage: f64,
    pub equal: bool,
}

/// Compares the network value `n²` (n = number of carrier nodes) with
/// scope × coverage of a model whose noumena and copies span the network.
pub fn metcalfe_check(model: &InformationModel) -> Result<MetcalfeCheck> {
    let nodes = model.carriers.len() as u64;
    let value = metcalfe_value(nodes);
    let max_scope = scope(model)?;
    let max_coverage = coverage(model)?;
    Ok(MetcalfeCheck {
        nodes,
        value,
        max_scope,
        max_coverage,
        equal: max_scope * max_coverage == value as f64,
    })
}
