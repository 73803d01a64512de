use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::metrics::{mismatch_unchecked, DistanceSpec};
use crate::model::InformationModel;
use crate::validate::validate;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchAlgorithm {
    #[default]
    Sequential,
    Bisection,
}

/// Nonnegative fraction in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Ratio {
    pub num: u128,
    pub den: u128,
}

impl Ratio {
    pub fn new(num: u128, den: u128) -> Self {
        assert!(den != 0, "zero denominator");
        let g = num.gcd(&den);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidCount {
            n,
            reason: "at least one record is required",
        })
    } else {
        Ok(())
    }
}

/// Closed-form average search length under uniform probabilities.
///
/// Sequential: `(n+1)/2`. Bisection: `((n+1)/n)·log2(n+1) - 1`, defined
/// here only for perfect trees `n = 2^h - 1`.
pub fn asl_exact(algorithm: SearchAlgorithm, n: usize) -> Result<Ratio> {
    check_n(n)?;
    let n128 = n as u128;
    match algorithm {
        SearchAlgorithm::Sequential => Ok(Ratio::new(n128 + 1, 2)),
        SearchAlgorithm::Bisection => {
            if !(n128 + 1).is_power_of_two() {
                return Err(Error::InvalidCount {
                    n,
                    reason: "the bisection closed form needs n = 2^h - 1",
                });
            }
            let h = u128::from((n128 + 1).trailing_zeros());
            Ok(Ratio::new((n128 + 1) * h - n128, n128))
        }
    }
}

pub fn asl(algorithm: SearchAlgorithm, n: usize) -> Result<f64> {
    asl_exact(algorithm, n).map(Ratio::to_f64)
}

/// Sum of comparison counts over all keys of a middle-split tree on `n` keys.
fn tree_total(n: u128, memo: &mut HashMap<u128, u128>) -> u128 {
    if n == 0 {
        return 0;
    }
    if let Some(&t) = memo.get(&n) {
        return t;
    }
    let left = (n - 1) / 2;
    let right = n - 1 - left;
    let t = n + tree_total(left, memo) + tree_total(right, memo);
    memo.insert(n, t);
    t
}

/// Average comparisons of bisection over `n` sorted keys for any `n ≥ 1`,
/// splitting at `(lo + hi) / 2`.
pub fn bisection_tree_asl(n: usize) -> Result<Ratio> {
    check_n(n)?;
    Ok(Ratio::new(tree_total(n as u128, &mut HashMap::new()), n as u128))
}

/// Comparisons needed to reach each position by bisection.
fn bisection_costs(n: usize) -> Vec<u64> {
    fn fill(lo: usize, hi: usize, depth: u64, costs: &mut [u64]) {
        if lo >= hi {
            return;
        }
        let mid = lo + (hi - lo - 1) / 2;
        costs[mid] = depth;
        fill(lo, mid, depth + 1, costs);
        fill(mid + 1, hi, depth + 1, costs);
    }
    let mut costs = vec![0; n];
    fill(0, n, 1, &mut costs);
    costs
}

/// `Σ p_i c_i` with `c_i` the comparisons needed to find record `i`.
pub fn asl_weighted(algorithm: SearchAlgorithm, p: &[f64]) -> Result<f64> {
    check_n(p.len())?;
    super::check_distribution(p)?;
    let costs: Vec<u64> = match algorithm {
        SearchAlgorithm::Sequential => (1..=p.len() as u64).collect(),
        SearchAlgorithm::Bisection => bisection_costs(p.len()),
    };
    Ok(p.iter().zip(costs).map(|(p, c)| p * c as f64).sum())
}

/// Candidates, the target they are compared against, and the stopping rule.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchSetup {
    pub candidates: Vec<InformationModel>,
    pub target: InformationModel,
    #[serde(default)]
    pub spec: DistanceSpec,
    #[serde(default)]
    pub threshold: f64,
    #[serde(default)]
    pub algorithm: SearchAlgorithm,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SearchOutcome {
    pub index: usize,
    pub comparisons: usize,
    pub mismatch: f64,
}

fn argmin(d: &[f64]) -> (usize, f64) {
    d.iter()
        .copied()
        .enumerate()
        .fold((0, f64::INFINITY), |best, (i, x)| if x < best.1 { (i, x) } else { best })
}

/// Finds the candidate with the least mismatch against the target.
///
/// The search stops at the first candidate it inspects whose mismatch is at
/// most `threshold`. Otherwise every candidate is compared and the lowest
/// index among the minima is returned. Bisection orders candidates by the
/// supremum of their occurrence time and walks toward the target's.
pub fn search_min_mismatch(setup: &SearchSetup, exec: Execution) -> Result<SearchOutcome> {
    let n = setup.candidates.len();
    if n == 0 {
        return Err(Error::EmptyCandidates);
    }
    if !(setup.threshold >= 0.0) {
        return Err(Error::Negative {
            name: "threshold",
            value: setup.threshold,
        });
    }
    setup.spec.check()?;
    validate(&setup.target).into_result()?;
    let keys: Vec<_> = setup.candidates.iter().map(|c| c.occurrence.sup()).collect();
    if setup.algorithm == SearchAlgorithm::Bisection {
        if let Some(index) = (1..n).find(|&i| keys[i] < keys[i - 1]) {
            return Err(Error::UnsortedCandidates { index });
        }
    }
    let distances = exec
        .map(&setup.candidates, |c| {
            validate(c).into_result()?;
            Ok(mismatch_unchecked(c, &setup.target, &setup.spec))
        })
        .into_iter()
        .collect::<Result<Vec<f64>>>()?;

    let hit = |index: usize, comparisons: usize| SearchOutcome {
        index,
        comparisons,
        mismatch: distances[index],
    };
    match setup.algorithm {
        SearchAlgorithm::Sequential => {
            if let Some(i) = distances.iter().position(|&d| d <= setup.threshold) {
                return Ok(hit(i, i + 1));
            }
        }
        SearchAlgorithm::Bisection => {
            let goal = setup.target.occurrence.sup();
            let (mut lo, mut hi) = (0usize, n);
            let mut comparisons = 0;
            while lo < hi {
                let mid = lo + (hi - lo - 1) / 2;
                comparisons += 1;
                if distances[mid] <= setup.threshold {
                    return Ok(hit(mid, comparisons));
                }
                match goal.cmp(&keys[mid]) {
                    std::cmp::Ordering::Less => hi = mid,
                    std::cmp::Ordering::Greater => lo = mid + 1,
                    std::cmp::Ordering::Equal => break,
                }
            }
        }
    }
    let (index, _) = argmin(&distances);
    Ok(hit(index, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::Value;
    use crate::time::{Seconds, TimeSet};

    #[test]
    fn closed_forms() {
        assert_eq!(asl(SearchAlgorithm::Sequential, 7).unwrap(), 4.0);
        assert_eq!(asl_exact(SearchAlgorithm::Bisection, 7).unwrap(), Ratio::new(17, 7));
        assert_eq!(asl_exact(SearchAlgorithm::Bisection, 1).unwrap(), Ratio::new(1, 1));
        assert_eq!(asl_exact(SearchAlgorithm::Bisection, 3).unwrap(), Ratio::new(5, 3));
        assert!((asl(SearchAlgorithm::Bisection, 7).unwrap() - 2.4286).abs() < 1e-4);
        assert!(matches!(asl(SearchAlgorithm::Bisection, 6), Err(Error::InvalidCount { n: 6, .. })));
        assert!(matches!(asl(SearchAlgorithm::Sequential, 0), Err(Error::InvalidCount { n: 0, .. })));
    }

    #[test]
    fn general_tree_matches_closed_form_on_perfect_sizes() {
        for h in 1..20u32 {
            let n = (1usize << h) - 1;
            assert_eq!(bisection_tree_asl(n).unwrap(), asl_exact(SearchAlgorithm::Bisection, n).unwrap());
        }
        // 1 + 2 + 2 + 3 over four keys.
        assert_eq!(bisection_tree_asl(4).unwrap(), Ratio::new(8, 4));
    }

    #[test]
    fn costs_agree_with_tree_totals() {
        for n in 1..200 {
            let total: u64 = bisection_costs(n).iter().sum();
            assert_eq!(Ratio::new(u128::from(total), n as u128), bisection_tree_asl(n).unwrap());
        }
    }

    #[test]
    fn weighted_uniform_matches_closed_form() {
        let p = [1.0 / 7.0; 7];
        assert!((asl_weighted(SearchAlgorithm::Sequential, &p).unwrap() - 4.0).abs() < 1e-12);
        assert!((asl_weighted(SearchAlgorithm::Bisection, &p).unwrap() - 17.0 / 7.0).abs() < 1e-12);
        assert_eq!(asl_weighted(SearchAlgorithm::Sequential, &[0.0, 0.0, 1.0]).unwrap(), 3.0);
        assert!(asl_weighted(SearchAlgorithm::Sequential, &[0.5]).is_err());
    }

    fn candidates(values: &[f64]) -> Vec<InformationModel> {
        values
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let mut m = fixtures::permutation(&[0, 1]);
                m.states[0].value = Value::Scalar(v);
                let shift = Seconds::from_millis(i as i64);
                m.occurrence = TimeSet::interval(m.occurrence.inf(), m.occurrence.sup() + shift).unwrap();
                m
            })
            .collect()
    }

    fn setup(values: &[f64], target: usize, algorithm: SearchAlgorithm) -> SearchSetup {
        let c = candidates(values);
        let mut t = c[target].clone();
        t.states[1].value = Value::Scalar(100.0);
        SearchSetup {
            target: t,
            candidates: c,
            spec: DistanceSpec::default(),
            threshold: 0.0,
            algorithm,
        }
    }

    #[test]
    fn nonzero_minimum_compares_everything() {
        for algorithm in [SearchAlgorithm::Sequential, SearchAlgorithm::Bisection] {
            for exec in [Execution::Sequential, Execution::Parallel] {
                let s = setup(&[0.0, 1.0, 2.0, 3.0, 4.0], 2, algorithm);
                let out = search_min_mismatch(&s, exec).unwrap();
                assert_eq!(out.comparisons, 5);
                assert_eq!(out.index, 2);
                assert!(out.mismatch > 0.0);
            }
        }
    }

    #[test]
    fn exact_match_stops_early() {
        let mut s = setup(&[0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0], 4, SearchAlgorithm::Sequential);
        s.target = s.candidates[4].clone();
        let out = search_min_mismatch(&s, Execution::Sequential).unwrap();
        assert_eq!((out.index, out.comparisons, out.mismatch), (4, 5, 0.0));
        s.algorithm = SearchAlgorithm::Bisection;
        let out = search_min_mismatch(&s, Execution::Sequential).unwrap();
        // Middle 3, then 5, then 4.
        assert_eq!((out.index, out.comparisons), (4, 3));
    }

    #[test]
    fn ties_go_to_lowest_index() {
        let mut s = setup(&[20.0, 1.0, 1.0, 1.0], 0, SearchAlgorithm::Sequential);
        s.target.states[0].value = Value::Scalar(5.0);
        for c in &mut s.candidates {
            c.occurrence = s.target.occurrence.clone();
        }
        let out = search_min_mismatch(&s, Execution::Parallel).unwrap();
        assert_eq!((out.index, out.comparisons), (1, 4));
    }

    #[test]
    fn search_errors() {
        let mut s = setup(&[0.0, 1.0], 0, SearchAlgorithm::Bisection);
        s.candidates.reverse();
        assert_eq!(search_min_mismatch(&s, Execution::Sequential), Err(Error::UnsortedCandidates { index: 1 }));
        s.candidates.clear();
        assert_eq!(search_min_mismatch(&s, Execution::Sequential), Err(Error::EmptyCandidates));
    }
}
