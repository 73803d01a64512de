use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const SYMMETRY_TOLERANCE: f64 = 1e-9;
const PSD_TOLERANCE: f64 = 1e-10;

/// Linear Gaussian system `x(k) = A x(k-1) + B U(k) + w`, `z(k) = H x(k) + v`
/// with `w ~ (0, Q)`, `v ~ (0, R)` and prior `(x0, P0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearSystemSpec {
    pub a: DMatrix<f64>,
    pub b: DMatrix<f64>,
    pub h: DMatrix<f64>,
    pub q: DMatrix<f64>,
    pub r: DMatrix<f64>,
    pub x0: DVector<f64>,
    pub p0: DMatrix<f64>,
}

fn dim_err(what: &str, expected: (usize, usize), found: (usize, usize)) -> Error {
    Error::Dimension(format!(
        "{what} must be {}x{}, found {}x{}",
        expected.0, expected.1, found.0, found.1
    ))
}

fn check_shape(what: &str, m: &DMatrix<f64>, rows: usize, cols: usize) -> Result<()> {
    if m.shape() != (rows, cols) {
        return Err(dim_err(what, (rows, cols), m.shape()));
    }
    if m.iter().any(|x| !x.is_finite()) {
        return Err(Error::Dimension(format!("{what} has non-finite entries")));
    }
    Ok(())
}

fn check_psd(what: &str, m: &DMatrix<f64>) -> Result<()> {
    let scale = m.amax().max(1.0);
    if (m - m.transpose()).amax() > SYMMETRY_TOLERANCE * scale {
        return Err(Error::Dimension(format!("{what} is not symmetric")));
    }
    let min = m.clone().symmetric_eigenvalues().min();
    if min < -PSD_TOLERANCE * scale {
        return Err(Error::Dimension(format!(
            "{what} is not positive semidefinite (eigenvalue {min})"
        )));
    }
    Ok(())
}

impl LinearSystemSpec {
    /// Checks shapes, symmetry, semidefiniteness of `Q` and `P0` and
    /// definiteness of `R`.
    pub fn new(
        a: DMatrix<f64>,
        b: DMatrix<f64>,
        h: DMatrix<f64>,
        q: DMatrix<f64>,
        r: DMatrix<f64>,
        x0: DVector<f64>,
        p0: DMatrix<f64>,
    ) -> Result<Self> {
        let n = a.nrows();
        if n == 0 {
            return Err(Error::Dimension("state dimension must be at least 1".into()));
        }
        check_shape("A", &a, n, n)?;
        check_shape("B", &b, n, b.ncols())?;
        let p = h.nrows();
        if p == 0 {
            return Err(Error::Dimension("measurement dimension must be at least 1".into()));
        }
        check_shape("H", &h, p, n)?;
        check_shape("Q", &q, n, n)?;
        check_shape("R", &r, p, p)?;
        check_shape("P0", &p0, n, n)?;
        if x0.len() != n {
            return Err(dim_err("x0", (n, 1), (x0.len(), 1)));
        }
        check_psd("Q", &q)?;
        check_psd("P0", &p0)?;
        check_psd("R", &r)?;
        if r.clone().cholesky().is_none() {
            return Err(Error::Dimension("R is not positive definite".into()));
        }
        Ok(LinearSystemSpec { a, b, h, q, r, x0, p0 })
    }

    pub fn state_dim(&self) -> usize {
        self.a.nrows()
    }

    pub fn input_dim(&self) -> usize {
        self.b.ncols()
    }

    pub fn measurement_dim(&self) -> usize {
        self.h.nrows()
    }
}

/// Filtered state, covariance and gain after step `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct KalmanStep {
    pub x: DVector<f64>,
    pub p: DMatrix<f64>,
    pub gain: DMatrix<f64>,
}

/// Runs the predict/update recursion for `k = 1..=K`.
///
/// `inputs` may be empty when `B` has no columns; otherwise it needs one
/// vector per measurement.
pub fn kalman_filter(
    sys: &LinearSystemSpec,
    inputs: &[DVector<f64>],
    measurements: &[DVector<f64>],
) -> Result<Vec<KalmanStep>> {
    let (n, m, p) = (sys.state_dim(), sys.input_dim(), sys.measurement_dim());
    if measurements.is_empty() {
        return Err(Error::Dimension("at least one measurement is required".into()));
    }
    if !(inputs.len() == measurements.len() || (m == 0 && inputs.is_empty())) {
        return Err(Error::Dimension(format!(
            "{} inputs for {} measurements",
            inputs.len(),
            measurements.len()
        )));
    }
    if let Some(u) = inputs.iter().find(|u| u.len() != m) {
        return Err(dim_err("U(k)", (m, 1), (u.len(), 1)));
    }
    if let Some(z) = measurements.iter().find(|z| z.len() != p) {
        return Err(dim_err("z(k)", (p, 1), (z.len(), 1)));
    }

    let identity = DMatrix::<f64>::identity(n, n);
    let a_t = sys.a.transpose();
    let h_t = sys.h.transpose();
    let mut x = sys.x0.clone();
    let mut cov = sys.p0.clone();
    let mut steps = Vec::with_capacity(measurements.len());
    for (k, z) in measurements.iter().enumerate() {
        let mut x_pred = &sys.a * &x;
        if let Some(u) = inputs.get(k) {
            x_pred += &sys.b * u;
        }
        let p_pred = &sys.a * &cov * &a_t + &sys.q;
        let s = &sys.h * &p_pred * &h_t + &sys.r;
        let s = (&s + s.transpose()) * 0.5;
        let chol = s.cholesky().ok_or(Error::SingularInnovation { step: k + 1 })?;
        // G = P⁻Hᵀ S⁻¹, solved as Gᵀ = S⁻¹ H P⁻ with both S and P⁻ symmetric.
        let gain = chol.solve(&(&sys.h * &p_pred)).transpose();
        x = &x_pred + &gain * (z - &sys.h * &x_pred);
        let updated = (&identity - &gain * &sys.h) * &p_pred;
        cov = (&updated + updated.transpose()) * 0.5;
        steps.push(KalmanStep {
            x: x.clone(),
            p: cov.clone(),
            gain,
        });
    }
    Ok(steps)
}

/// Euclidean distance between the filtered trajectory and the true states,
/// stacked over all steps.
pub fn estimation_error(steps: &[KalmanStep], truth: &[DVector<f64>]) -> Result<f64> {
    if steps.len() != truth.len() {
        return Err(Error::DimensionMismatch {
            expected: truth.len(),
            found: steps.len(),
        });
    }
    let mut sum = 0.0;
    for (s, t) in steps.iter().zip(truth) {
        if s.x.len() != t.len() {
            return Err(Error::DimensionMismatch {
                expected: t.len(),
                found: s.x.len(),
            });
        }
        sum += (&s.x - t).norm_squared();
    }
    Ok(sum.sqrt())
}

type Rows = Vec<Vec<f64>>;

/// JSON scenario: matrices as row lists, vectors as plain lists.
#[allow(non_snake_case)]
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KalmanScenario {
    pub A: Rows,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub B: Option<Rows>,
    pub H: Rows,
    pub Q: Rows,
    pub R: Rows,
    pub x0: Vec<f64>,
    pub P0: Rows,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub U: Vec<Vec<f64>>,
    pub z: Vec<Vec<f64>>,
    /// Optional true states, used to report the estimation error.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truth: Option<Vec<Vec<f64>>>,
}

fn matrix(what: &str, rows: &Rows, cols_if_empty: usize) -> Result<DMatrix<f64>> {
    let cols = rows.first().map_or(cols_if_empty, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(Error::Dimension(format!("{what} has ragged rows")));
    }
    Ok(DMatrix::from_row_iterator(rows.len(), cols, rows.iter().flatten().copied()))
}

fn rows_of(m: &DMatrix<f64>) -> Rows {
    m.row_iter().map(|r| r.iter().copied().collect()).collect()
}

/// Per-step output of a scenario run.
#[allow(non_snake_case)]
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceStep {
    pub k: usize,
    pub x: Vec<f64>,
    pub P: Rows,
    pub G: Rows,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KalmanTrace {
    pub steps: Vec<TraceStep>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub estimation_error: Option<f64>,
}

impl KalmanScenario {
    pub fn system(&self) -> Result<LinearSystemSpec> {
        let a = matrix("A", &self.A, 0)?;
        let b = match &self.B {
            Some(b) => matrix("B", b, 0)?,
            None => DMatrix::zeros(a.nrows(), 0),
        };
        LinearSystemSpec::new(
            a,
            b,
            matrix("H", &self.H, 0)?,
            matrix("Q", &self.Q, 0)?,
            matrix("R", &self.R, 0)?,
            DVector::from_vec(self.x0.clone()),
            matrix("P0", &self.P0, 0)?,
        )
    }

    pub fn run(&self) -> Result<KalmanTrace> {
        let sys = self.system()?;
        let inputs: Vec<_> = self.U.iter().cloned().map(DVector::from_vec).collect();
        let zs: Vec<_> = self.z.iter().cloned().map(DVector::from_vec).collect();
        let steps = kalman_filter(&sys, &inputs, &zs)?;
        let estimation_error = match &self.truth {
            Some(t) => {
                let t: Vec<_> = t.iter().cloned().map(DVector::from_vec).collect();
                Some(estimation_error(&steps, &t)?)
            }
            None => None,
        };
        Ok(KalmanTrace {
            steps: steps
                .iter()
                .enumerate()
                .map(|(i, s)| TraceStep {
                    k: i + 1,
                    x: s.x.iter().copied().collect(),
                    P: rows_of(&s.p),
                    G: rows_of(&s.gain),
                })
                .collect(),
            estimation_error,
        })
    }
}
