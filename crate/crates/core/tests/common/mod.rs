//! Seeded random generators and independent oracles shared by the
//! integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use nalgebra::{DMatrix, DVector};
use oitkit::{CopyRecord, InformationModel, MeasureAssignment, Seconds, StateEntry, TimeSet, Value};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn secs(s: i64) -> Seconds {
    Seconds::from_secs(s)
}

/// A valid restorable model with `n` distinct states, a random bijection
/// onto `n` distinct reflections and integer reflection measures.
pub fn restorable_model(rng: &mut impl Rng, n: usize) -> InformationModel {
    let noumena_count = rng.random_range(1..=n.clamp(1, 5));
    let carrier_count = rng.random_range(1..=3);
    let noumena: BTreeSet<String> = (0..noumena_count).map(|i| format!("n{i}")).collect();
    let carriers: BTreeSet<String> = (0..carrier_count).map(|i| format!("k{i}")).collect();
    let horizon = n as i64 + 1;
    let occurrence = TimeSet::interval(secs(0), secs(horizon)).unwrap();
    let reflection = TimeSet::interval(secs(horizon), secs(2 * horizon)).unwrap();

    let subjects = |rng: &mut dyn rand::RngCore, prefix: &str, count: usize, i: usize| -> Vec<String> {
        let mut s = vec![format!("{prefix}{}", i % count)];
        if count > 1 && rng.random_bool(0.3) {
            s.push(format!("{prefix}{}", rng.random_range(0..count)));
        }
        s
    };
    let states: Vec<StateEntry> = (0..n)
        .map(|i| {
            let value = if rng.random_bool(0.5) {
                Value::Scalar(i as f64 + rng.random_range(0.0..0.5))
            } else {
                Value::Symbol(format!("s{i}"))
            };
            StateEntry::new(subjects(rng, "n", noumena_count, i), TimeSet::point(secs(i as i64)), value)
        })
        .collect();
    let reflections: Vec<StateEntry> = (0..n)
        .map(|j| {
            StateEntry::new(
                subjects(rng, "k", carrier_count, j),
                TimeSet::point(secs(horizon + j as i64)),
                Value::Vector(vec![j as f64, rng.random_range(-1.0..1.0)]),
            )
        })
        .collect();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    InformationModel {
        measures: MeasureAssignment {
            noumenon_measure: noumena.iter().map(|k| (k.clone(), rng.random_range(1..100) as f64)).collect(),
            carrier_measure: carriers.iter().map(|k| (k.clone(), rng.random_range(1..100) as f64)).collect(),
            reflection_measure: (0..n).map(|r| (r, rng.random_range(1..=1000) as f64)).collect(),
            ..MeasureAssignment::default()
        },
        noumena,
        carriers,
        occurrence,
        reflection,
        states,
        reflections,
        mapping: perm.into_iter().enumerate().collect(),
        copies: vec![CopyRecord::new(1.0)],
        enabled: true,
    }
}

/// A delay with 0 to 9 decimal places, between -10 s and 10 s.
pub fn decimal_delay(rng: &mut impl Rng) -> Seconds {
    let places = rng.random_range(0..=9u32);
    let unit = 10i128.pow(9 - places);
    let steps = 10i128.pow(places + 1);
    Seconds::from_nanos(rng.random_range(-steps..=steps) * unit)
}

/// A valid serial chain of `delays.len()` links over `width` symbols,
/// each link shuffling the symbols with its own permutation.
pub fn random_chain(rng: &mut impl Rng, delays: &[Seconds], width: usize) -> Vec<InformationModel> {
    let stage = |s: usize, time: &TimeSet| -> Vec<StateEntry> {
        (0..width)
            .map(|k| StateEntry::new([format!("hop{s}")], time.clone(), Value::Symbol(format!("w{k}"))))
            .collect()
    };
    let mut occurrence = TimeSet::interval(secs(-1), secs(0)).unwrap();
    let mut links = Vec::new();
    for (i, &d) in delays.iter().enumerate() {
        let sup = occurrence.sup() + d;
        let reflection = TimeSet::new([(sup - secs(2), sup)], []).unwrap();
        let mut perm: Vec<usize> = (0..width).collect();
        perm.shuffle(rng);
        links.push(InformationModel {
            noumena: [format!("hop{i}")].into(),
            carriers: [format!("hop{}", i + 1)].into(),
            states: stage(i, &occurrence),
            reflections: stage(i + 1, &reflection),
            occurrence,
            reflection: reflection.clone(),
            mapping: perm.into_iter().enumerate().collect(),
            copies: Vec::new(),
            measures: MeasureAssignment::default(),
            enabled: true,
        });
        occurrence = reflection;
    }
    links
}

/// A random probability vector of length `n` (normalized, with occasional zeros).
pub fn simplex_point(rng: &mut impl Rng, n: usize) -> Vec<f64> {
    let raw: Vec<f64> = (0..n)
        .map(|_| if rng.random_bool(0.1) { 0.0 } else { -rng.random_range(f64::MIN_POSITIVE..1.0).ln() })
        .collect();
    let sum: f64 = raw.iter().sum();
    if sum == 0.0 {
        let mut p = vec![0.0; n];
        p[0] = 1.0;
        return p;
    }
    let mut p: Vec<f64> = raw.iter().map(|x| x / sum).collect();
    let drift: f64 = 1.0 - p.iter().sum::<f64>();
    let i = p.iter().position(|&x| x > 0.0).unwrap();
    p[i] += drift;
    p
}

fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> DMatrix<f64> {
    DMatrix::from_fn(rows, cols, |_, _| rng.random_range(-1.0..1.0))
}

fn random_psd(rng: &mut impl Rng, n: usize, floor: f64) -> DMatrix<f64> {
    let l = random_matrix(rng, n, n);
    &l * l.transpose() + DMatrix::identity(n, n) * floor
}

/// A random stable linear system with its inputs and measurements.
pub struct RandomSystem {
    pub a: DMatrix<f64>,
    pub b: DMatrix<f64>,
    pub h: DMatrix<f64>,
    pub q: DMatrix<f64>,
    pub r: DMatrix<f64>,
    pub x0: DVector<f64>,
    pub p0: DMatrix<f64>,
    pub inputs: Vec<DVector<f64>>,
    pub measurements: Vec<DVector<f64>>,
}

pub fn random_system(rng: &mut impl Rng, n: usize, steps: usize) -> RandomSystem {
    let m = rng.random_range(0..=2);
    let p = rng.random_range(1..=3);
    let mut a = random_matrix(rng, n, n);
    let norm = a.norm();
    if norm > 0.0 {
        a *= rng.random_range(0.3..1.1) / norm.max(1.0);
    }
    // Singular Q is allowed; R is kept well away from singular.
    let q = if rng.random_bool(0.2) { DMatrix::zeros(n, n) } else { random_psd(rng, n, 0.0) * 0.1 };
    RandomSystem {
        b: random_matrix(rng, n, m),
        h: random_matrix(rng, p, n),
        q,
        r: random_psd(rng, p, 0.1),
        x0: DVector::from_fn(n, |_, _| rng.random_range(-2.0..2.0)),
        p0: random_psd(rng, n, 0.05),
        inputs: (0..steps).map(|_| DVector::from_fn(m, |_, _| rng.random_range(-1.0..1.0))).collect(),
        measurements: (0..steps).map(|_| DVector::from_fn(p, |_, _| rng.random_range(-3.0..3.0))).collect(),
        a,
    }
}

/// Batch linear-MMSE estimate of every `x(k)` given `z(1..=k)`.
///
/// The unknowns `θ = (x(0), w(1), ..., w(K))` have mean `(x0, 0, ..., 0)`
/// and block-diagonal covariance `diag(P0, Q, ..., Q)`. Each state is affine
/// in `θ`, so the conditional mean follows from one Gaussian conditioning
/// on the stacked measurements; no recursion is involved.
pub fn batch_mmse(sys: &RandomSystem) -> Vec<DVector<f64>> {
    let n = sys.a.nrows();
    let p = sys.h.nrows();
    let steps = sys.measurements.len();
    let dim = n * (steps + 1);
    let mut mean = DVector::zeros(dim);
    mean.rows_mut(0, n).copy_from(&sys.x0);
    let mut cov = DMatrix::zeros(dim, dim);
    cov.view_mut((0, 0), (n, n)).copy_from(&sys.p0);
    for k in 1..=steps {
        cov.view_mut((k * n, k * n), (n, n)).copy_from(&sys.q);
    }
    // x(k) = T[k] θ + c[k]
    let mut t = DMatrix::zeros(n, dim);
    t.view_mut((0, 0), (n, n)).copy_from(&DMatrix::identity(n, n));
    let mut c = DVector::zeros(n);
    let mut maps = Vec::with_capacity(steps);
    for k in 1..=steps {
        t = &sys.a * &t;
        for i in 0..n {
            t[(i, k * n + i)] += 1.0;
        }
        c = &sys.a * &c;
        if sys.b.ncols() > 0 {
            c += &sys.b * &sys.inputs[k - 1];
        }
        maps.push((t.clone(), c.clone()));
    }

    let mut estimates = Vec::with_capacity(steps);
    for k in 1..=steps {
        let rows = k * p;
        let mut obs = DMatrix::zeros(rows, dim);
        let mut offset = DVector::zeros(rows);
        let mut z = DVector::zeros(rows);
        let mut noise = DMatrix::zeros(rows, rows);
        for j in 0..k {
            let (tj, cj) = &maps[j];
            obs.view_mut((j * p, 0), (p, dim)).copy_from(&(&sys.h * tj));
            offset.rows_mut(j * p, p).copy_from(&(&sys.h * cj));
            z.rows_mut(j * p, p).copy_from(&sys.measurements[j]);
            noise.view_mut((j * p, j * p), (p, p)).copy_from(&sys.r);
        }
        let s = &obs * &cov * obs.transpose() + noise;
        let innovation = z - &obs * &mean - offset;
        let weights = s.lu().solve(&innovation).expect("innovation covariance is invertible");
        let theta = &mean + &cov * obs.transpose() * weights;
        let (tk, ck) = &maps[k - 1];
        estimates.push(tk * theta + ck);
    }
    estimates
}

/// Restorable iff every pair of states is distinct exactly when their
/// reflections are, and every reflection is hit.
pub fn brute_force_restorable(model: &InformationModel) -> Option<bool> {
    let n = model.states.len();
    let image: Vec<usize> = (0..n).map(|i| model.mapping.iter().find(|p| p.0 == i).map(|p| p.1)).collect::<Option<_>>()?;
    let hit: BTreeSet<usize> = image.iter().copied().collect();
    if hit.len() != model.reflections.len() || image.iter().any(|&r| r >= model.reflections.len()) {
        return None;
    }
    for i in 0..n {
        for j in 0..n {
            let same_state = model.states[i] == model.states[j];
            let same_reflection = model.reflections[image[i]] == model.reflections[image[j]];
            if same_state != same_reflection {
                return Some(false);
            }
        }
    }
    Some(true)
}

/// All restricted growth strings of length `n`: one per set partition.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn grow(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        let next = prefix.iter().max().map_or(0, |m| m + 1);
        for v in 0..=next {
            prefix.push(v);
            grow(prefix, n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), n, &mut out);
    out
}
