mod common;

use oitkit::classical::{radar_max_range, serial_chain_delay, shannon_min_volume};
use oitkit::metrics::{delay, volume};
use oitkit::physics::{carrier_volume, quantum_volume, CarrierSpec, PhysicalConstants, Regime};
use oitkit::{combine, compose_chain, decompose_atomic, is_restorable, restore, Seconds, TimeSet};
use proptest::prelude::*;

fn seconds() -> impl Strategy<Value = Seconds> {
    (-1_000_000_000_000i128..1_000_000_000_000).prop_map(Seconds::from_nanos)
}

fn time_set() -> impl Strategy<Value = TimeSet> {
    (
        prop::collection::vec((seconds(), 0i128..5_000_000_000), 0..4),
        prop::collection::vec(seconds(), 0..4),
    )
        .prop_filter_map("nonempty", |(iv, pts)| {
            let intervals: Vec<_> = iv.into_iter().map(|(lo, w)| (lo, lo + Seconds::from_nanos(w))).collect();
            TimeSet::new(intervals, pts).ok()
        })
}

proptest! {
    #[test]
    fn seconds_display_round_trips(s in seconds()) {
        let text = s.to_string();
        prop_assert_eq!(text.parse::<Seconds>().unwrap(), s);
    }

    #[test]
    fn time_set_is_canonical(a in time_set()) {
        let again = TimeSet::new(a.intervals().to_vec(), a.points().to_vec()).unwrap();
        prop_assert_eq!(&again, &a);
        for w in a.intervals().windows(2) {
            prop_assert!(w[0].1 < w[1].0);
        }
        for p in a.points() {
            prop_assert!(!a.intervals().iter().any(|(lo, hi)| lo <= p && p <= hi));
        }
    }

    #[test]
    fn union_is_commutative_and_covers(a in time_set(), b in time_set()) {
        let u = a.union(&b);
        prop_assert_eq!(&u, &b.union(&a));
        prop_assert!(a.is_subset_of(&u) && b.is_subset_of(&u));
        prop_assert!(u.lebesgue() <= a.lebesgue() + b.lebesgue());
        prop_assert_eq!(u.inf(), a.inf().min(b.inf()));
        prop_assert_eq!(u.sup(), a.sup().max(b.sup()));
    }

    #[test]
    fn gaps_partition_the_hull(a in time_set()) {
        let gaps = a.gaps();
        let gap_total: Seconds = gaps.iter().map(|g| g.width()).sum();
        prop_assert_eq!(gap_total + a.lebesgue(), a.sup() - a.inf());
        if !gaps.is_empty() {
            prop_assert!(a.check_gaps(&gaps).is_ok());
        }
    }

    #[test]
    fn restorable_models_round_trip(seed in any::<u64>(), n in 1usize..25) {
        let mut rng = common::rng(seed);
        let m = common::restorable_model(&mut rng, n);
        prop_assert!(is_restorable(&m).unwrap());
        for &(s, r) in &m.mapping {
            prop_assert_eq!(restore(&m, r).unwrap(), &m.states[s]);
        }
        let atoms = decompose_atomic(&m).unwrap();
        prop_assert_eq!(atoms.len(), n);
        let back = combine(&atoms).unwrap();
        prop_assert!(back.is_mapping_equivalent(&m));
        prop_assert_eq!(volume(&back).unwrap(), volume(&m).unwrap());
        let json = back.to_json();
        prop_assert_eq!(oitkit::InformationModel::from_json(&json).unwrap(), back);
    }

    #[test]
    fn chain_composition_is_associative(seed in any::<u64>(), links in 3usize..7, width in 1usize..5) {
        let mut rng = common::rng(seed);
        let delays: Vec<Seconds> = (0..links).map(|_| common::decimal_delay(&mut rng)).collect();
        let chain = common::random_chain(&mut rng, &delays, width);
        let whole = compose_chain(&chain).unwrap();
        let split = rng_split(seed, links);
        let left = compose_chain(&chain[..split]).unwrap();
        let right = compose_chain(&chain[split..]).unwrap();
        let nested = compose_chain(&[left, right]).unwrap();
        prop_assert!(nested.is_mapping_equivalent(&whole));
        prop_assert_eq!(delay(&nested), delay(&whole));
        prop_assert_eq!(delay(&whole), serial_chain_delay(&delays));
        prop_assert!(is_restorable(&whole).unwrap());
    }

    #[test]
    fn entropy_is_bounded(seed in any::<u64>(), n in 1usize..64) {
        let mut rng = common::rng(seed);
        let p = common::simplex_point(&mut rng, n);
        let h = shannon_min_volume(&p).unwrap();
        prop_assert!(h >= 0.0);
        prop_assert!(h <= (n as f64).log2() + 1e-12);
    }

    #[test]
    fn radar_range_scales_with_quartic_root(sigma in 1e-3..1e3f64, a in 1e-3..1e3f64) {
        let r1 = radar_max_range(1e6, 1e3, 1.0, 1e-13, sigma).unwrap();
        let ra = radar_max_range(1e6, 1e3, 1.0, 1e-13, a * sigma).unwrap();
        prop_assert!((ra / (a.powf(0.25) * r1) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn quantum_volume_brackets_asymptote(de_exp in -25.0..-15.0f64, t_exp in -12.0..3.0f64, stretch in 1.0..3.0f64) {
        let c = PhysicalConstants::codata();
        let de = 10f64.powf(de_exp);
        let t = 10f64.powf(t_exp);
        let q = quantum_volume(de, t, &c).unwrap();
        let later = quantum_volume(de, t * stretch, &c).unwrap();
        prop_assert!(later.exact >= q.exact);
        if q.asymptotic < 1e15 {
            let diff = q.exact_f64() - q.asymptotic;
            prop_assert!(diff > 0.0 && diff <= 1.0);
        }
    }

    #[test]
    fn carrier_volume_is_linear(m in 0.0..10.0f64, er in 0.0..1e17f64, t in 1e-3..1e3f64, k in 0.1..10.0f64) {
        prop_assume!(m > 0.0 || er > 0.0);
        let c = PhysicalConstants::paper();
        let v = |m: f64, er: f64, t: f64| {
            let spec = CarrierSpec { mass: m, radiation_energy: er, duration: t, ..Default::default() };
            carrier_volume(&spec, Regime::Large, &c).unwrap().qubits
        };
        let base = v(m, er, t);
        prop_assert!((v(m, er, k * t) / (k * base) - 1.0).abs() < 1e-12);
        prop_assert!((v(k * m, k * er, t) / (k * base) - 1.0).abs() < 1e-12);
        let split = v(m, 0.0, t) + v(0.0, er, t);
        prop_assert!((split / base - 1.0).abs() < 1e-12);
    }

    #[test]
    fn identical_quanta_add_up(de_exp in -22.0..-15.0f64, n in 1u32..1_000_000, t in 1e-6..1e3f64) {
        let c = PhysicalConstants::codata();
        let de = 10f64.powf(de_exp);
        let single = quantum_volume(de, t, &c).unwrap().asymptotic;
        let spec = CarrierSpec { radiation_energy: de * f64::from(n), duration: t, ..Default::default() };
        let whole = carrier_volume(&spec, Regime::Large, &c).unwrap().qubits;
        prop_assert!((whole / (f64::from(n) * single) - 1.0).abs() < 1e-12);
    }
}

fn rng_split(seed: u64, links: usize) -> usize {
    1 + (seed as usize) % (links - 1)
}
