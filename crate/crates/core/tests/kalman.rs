mod common;

use nalgebra::{DMatrix, DVector};
use oitkit::classical::{estimation_error, kalman_filter, KalmanScenario, LinearSystemSpec};
use oitkit::metrics::{distortion, DistanceSpec};
use oitkit::Value;

fn spec_of(sys: &common::RandomSystem) -> LinearSystemSpec {
    LinearSystemSpec::new(
        sys.a.clone(),
        sys.b.clone(),
        sys.h.clone(),
        sys.q.clone(),
        sys.r.clone(),
        sys.x0.clone(),
        sys.p0.clone(),
    )
    .unwrap()
}

#[test]
fn two_state_system_matches_batch_estimate() {
    let mut rng = common::rng(20);
    for _ in 0..25 {
        let sys = common::random_system(&mut rng, 2, 20);
        let steps = kalman_filter(&spec_of(&sys), &sys.inputs, &sys.measurements).unwrap();
        let batch = common::batch_mmse(&sys);
        let last = steps.last().unwrap();
        let expected = batch.last().unwrap();
        assert!((&last.x - expected).norm() <= 1e-9 * expected.norm());
    }
}

#[test]
fn covariance_stays_symmetric_psd() {
    let mut rng = common::rng(21);
    for n in 1..=3 {
        let sys = common::random_system(&mut rng, n, 30);
        for step in kalman_filter(&spec_of(&sys), &sys.inputs, &sys.measurements).unwrap() {
            assert_eq!(step.p, step.p.transpose());
            assert!(step.p.clone().symmetric_eigenvalues().min() >= -1e-10);
        }
    }
}

#[test]
fn shipped_scalar_scenario() {
    let text = include_str!("../fixtures/kalman_scalar.json");
    let scenario: KalmanScenario = serde_json::from_str(text).unwrap();
    let trace = scenario.run().unwrap();
    assert!((trace.steps[0].x[0] - 0.5).abs() < 1e-12);
    assert!((trace.steps[1].x[0] - 4.0 / 3.0).abs() < 1e-12);
    assert!((trace.steps[1].P[0][0] - 1.0 / 3.0).abs() < 1e-12);
}

#[test]
fn restored_trajectory_error_is_the_distortion() {
    let mut rng = common::rng(22);
    let sys = common::random_system(&mut rng, 3, 12);
    let steps = kalman_filter(&spec_of(&sys), &sys.inputs, &sys.measurements).unwrap();
    let truth: Vec<DVector<f64>> = (0..12).map(|k| DVector::from_element(3, k as f64 * 0.1)).collect();
    let as_values = |xs: Vec<&DVector<f64>>| -> Vec<Value> { xs.into_iter().map(|x| Value::Vector(x.iter().copied().collect())).collect() };
    let restored = as_values(steps.iter().map(|s| &s.x).collect());
    let actual = as_values(truth.iter().collect());
    let d = distortion(&restored, &actual, &DistanceSpec::default()).unwrap();
    assert!((estimation_error(&steps, &truth).unwrap() - d).abs() <= 1e-12 * d.max(1.0));
}

#[test]
fn singular_prior_with_zero_noise_is_still_solved() {
    let sys = LinearSystemSpec::new(
        DMatrix::identity(2, 2),
        DMatrix::zeros(2, 0),
        DMatrix::from_row_slice(1, 2, &[1.0, 0.0]),
        DMatrix::zeros(2, 2),
        DMatrix::from_element(1, 1, 0.5),
        DVector::zeros(2),
        DMatrix::zeros(2, 2),
    )
    .unwrap();
    let steps = kalman_filter(&sys, &[], &[DVector::from_element(1, 4.0)]).unwrap();
    assert_eq!(steps[0].x, DVector::zeros(2));
    assert_eq!(steps[0].gain, DMatrix::zeros(2, 1));
}
