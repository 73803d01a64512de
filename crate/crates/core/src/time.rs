//! Exact decimal time and finite unions of closed intervals and points.
//!
//! Times are held as scaled integers (nanosecond resolution) so that
//! suprema, infima and Lebesgue measures are reproducible bit for bit.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

const FRACTION_DIGITS: usize = 9;
const SCALE: i128 = 1_000_000_000;

/// A signed number of seconds with nine exact decimal places.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Seconds(i128);

impl Seconds {
    pub const ZERO: Seconds = Seconds(0);

    pub const fn from_nanos(nanos: i128) -> Self {
        Seconds(nanos)
    }

    pub const fn from_secs(secs: i64) -> Self {
        Seconds(secs as i128 * SCALE)
    }

    /// `value / 1000` seconds.
    pub const fn from_millis(millis: i64) -> Self {
        Seconds(millis as i128 * (SCALE / 1000))
    }

    pub const fn as_nanos(self) -> i128 {
        self.0
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64 / SCALE as f64
    }

    pub fn abs(self) -> Self {
        Seconds(self.0.abs())
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    /// Multiplies by an integer factor; `None` on overflow.
    pub fn checked_mul(self, factor: i128) -> Option<Self> {
        self.0.checked_mul(factor).map(Seconds)
    }
}

impl Add for Seconds {
    type Output = Seconds;
    fn add(self, rhs: Seconds) -> Seconds {
        Seconds(self.0 + rhs.0)
    }
}

impl Sub for Seconds {
    type Output = Seconds;
    fn sub(self, rhs: Seconds) -> Seconds {
        Seconds(self.0 - rhs.0)
    }
}

impl Neg for Seconds {
    type Output = Seconds;
    fn neg(self) -> Seconds {
        Seconds(-self.0)
    }
}

impl Sum for Seconds {
    fn sum<I: Iterator<Item = Seconds>>(iter: I) -> Seconds {
        iter.fold(Seconds::ZERO, Add::add)
    }
}

impl<'a> Sum<&'a Seconds> for Seconds {
    fn sum<I: Iterator<Item = &'a Seconds>>(iter: I) -> Seconds {
        iter.copied().sum()
    }
}

impl FromStr for Seconds {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::InvalidTime(s.to_string());
        let trimmed = s.trim();
        let (negative, body) = match trimmed.as_bytes().first() {
            Some(b'-') => (true, &trimmed[1..]),
            Some(b'+') => (false, &trimmed[1..]),
            _ => (false, trimmed),
        };
        let (whole, frac) = match body.split_once('.') {
            Some((w, f)) => (w, f),
            None => (body, ""),
        };
        if whole.is_empty() && frac.is_empty() {
            return Err(bad());
        }
        if !whole.bytes().all(|b| b.is_ascii_digit()) || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let frac = frac.trim_end_matches('0');
        if frac.len() > FRACTION_DIGITS {
            return Err(bad());
        }
        let whole: i128 = if whole.is_empty() {
            0
        } else {
            whole.parse().map_err(|_| bad())?
        };
        let mut frac_nanos: i128 = 0;
        for (i, b) in frac.bytes().enumerate() {
            frac_nanos += i128::from(b - b'0') * 10i128.pow((FRACTION_DIGITS - 1 - i) as u32);
        }
        let magnitude = whole
            .checked_mul(SCALE)
            .and_then(|w| w.checked_add(frac_nanos))
            .ok_or_else(bad)?;
        Ok(Seconds(if negative { -magnitude } else { magnitude }))
    }
}

impl fmt::Display for Seconds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.0 < 0 { "-" } else { "" };
        let magnitude = self.0.unsigned_abs();
        let whole = magnitude / SCALE as u128;
        let frac = magnitude % SCALE as u128;
        if frac == 0 {
            write!(f, "{sign}{whole}")
        } else {
            let digits = format!("{frac:0width$}", width = FRACTION_DIGITS);
            write!(f, "{sign}{whole}.{}", digits.trim_end_matches('0'))
        }
    }
}

impl Serialize for Seconds {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Seconds {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Int(i64),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Text(s) => s.parse().map_err(serde::de::Error::custom),
            Raw::Int(i) => Ok(Seconds::from_secs(i)),
        }
    }
}

/// An open interval `(lo, hi)` with `lo < hi`, used for sampling gaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "(Seconds, Seconds)", into = "(Seconds, Seconds)")]
pub struct Gap {
    lo: Seconds,
    hi: Seconds,
}

impl Gap {
    pub fn new(lo: Seconds, hi: Seconds) -> Result<Self, Error> {
        if lo >= hi {
            return Err(Error::EmptyGap { lo, hi });
        }
        Ok(Gap { lo, hi })
    }

    pub fn lo(&self) -> Seconds {
        self.lo
    }

    pub fn hi(&self) -> Seconds {
        self.hi
    }

    pub fn width(&self) -> Seconds {
        self.hi - self.lo
    }

    fn overlaps(&self, other: &Gap) -> bool {
        self.lo < other.hi && other.lo < self.hi
    }
}

impl TryFrom<(Seconds, Seconds)> for Gap {
    type Error = Error;
    fn try_from((lo, hi): (Seconds, Seconds)) -> Result<Self, Error> {
        Gap::new(lo, hi)
    }
}

impl From<Gap> for (Seconds, Seconds) {
    fn from(g: Gap) -> Self {
        (g.lo, g.hi)
    }
}

/// Nonempty finite union of closed intervals and isolated points, kept in
/// canonical form: intervals sorted, disjoint and non-touching; points
/// sorted, distinct and outside every interval.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTimeSet", into = "RawTimeSet")]
pub struct TimeSet {
    intervals: Vec<(Seconds, Seconds)>,
    points: Vec<Seconds>,
}

#[derive(Serialize, Deserialize)]
struct RawTimeSet {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    intervals: Vec<(Seconds, Seconds)>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    points: Vec<Seconds>,
}

impl TryFrom<RawTimeSet> for TimeSet {
    type Error = Error;
    fn try_from(raw: RawTimeSet) -> Result<Self, Error> {
        TimeSet::new(raw.intervals, raw.points)
    }
}

impl From<TimeSet> for RawTimeSet {
    fn from(t: TimeSet) -> Self {
        RawTimeSet {
            intervals: t.intervals,
            points: t.points,
        }
    }
}

impl TimeSet {
    pub fn new(
        intervals: impl IntoIterator<Item = (Seconds, Seconds)>,
        points: impl IntoIterator<Item = Seconds>,
    ) -> Result<Self, Error> {
        let mut ivs = Vec::new();
        let mut pts: Vec<Seconds> = points.into_iter().collect();
        for (lo, hi) in intervals {
            match lo.cmp(&hi) {
                Ordering::Greater => return Err(Error::InvertedInterval { lo, hi }),
                Ordering::Equal => pts.push(lo),
                Ordering::Less => ivs.push((lo, hi)),
            }
        }
        if ivs.is_empty() && pts.is_empty() {
            return Err(Error::EmptyTimeSet);
        }

        ivs.sort();
        let mut merged: Vec<(Seconds, Seconds)> = Vec::with_capacity(ivs.len());
        for (lo, hi) in ivs {
            match merged.last_mut() {
                Some(last) if lo <= last.1 => last.1 = last.1.max(hi),
                _ => merged.push((lo, hi)),
            }
        }

        pts.sort();
        pts.dedup();
        pts.retain(|p| !merged.iter().any(|&(lo, hi)| lo <= *p && *p <= hi));

        Ok(TimeSet {
            intervals: merged,
            points: pts,
        })
    }

    pub fn interval(lo: Seconds, hi: Seconds) -> Result<Self, Error> {
        TimeSet::new([(lo, hi)], [])
    }

    pub fn point(t: Seconds) -> Self {
        TimeSet {
            intervals: Vec::new(),
            points: vec![t],
        }
    }

    pub fn intervals(&self) -> &[(Seconds, Seconds)] {
        &self.intervals
    }

    pub fn points(&self) -> &[Seconds] {
        &self.points
    }

    pub fn inf(&self) -> Seconds {
        let a = self.intervals.first().map(|iv| iv.0);
        let b = self.points.first().copied();
        match (a, b) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => unreachable!("time sets are nonempty"),
        }
    }

    pub fn sup(&self) -> Seconds {
        let a = self.intervals.last().map(|iv| iv.1);
        let b = self.points.last().copied();
        match (a, b) {
            (Some(a), Some(b)) => a.max(b),
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (None, None) => unreachable!("time sets are nonempty"),
        }
    }

    /// Lebesgue measure; isolated points contribute nothing.
    pub fn lebesgue(&self) -> Seconds {
        self.intervals.iter().map(|&(lo, hi)| hi - lo).sum()
    }

    pub fn contains(&self, t: Seconds) -> bool {
        self.intervals.iter().any(|&(lo, hi)| lo <= t && t <= hi) || self.points.binary_search(&t).is_ok()
    }

    pub fn is_subset_of(&self, other: &TimeSet) -> bool {
        self.points.iter().all(|&p| other.contains(p))
            && self
                .intervals
                .iter()
                .all(|&(lo, hi)| other.intervals.iter().any(|&(a, b)| a <= lo && hi <= b))
    }

    pub fn union(&self, other: &TimeSet) -> TimeSet {
        TimeSet::new(
            self.intervals.iter().chain(&other.intervals).copied(),
            self.points.iter().chain(&other.points).copied(),
        )
        .expect("union of nonempty canonical sets is valid")
    }

    /// Intervals and points as closed pieces `[lo, hi]`, sorted by position.
    fn pieces(&self) -> Vec<(Seconds, Seconds)> {
        let mut pieces: Vec<(Seconds, Seconds)> = self
            .intervals
            .iter()
            .copied()
            .chain(self.points.iter().map(|&p| (p, p)))
            .collect();
        pieces.sort();
        pieces
    }

    /// Maximal open gaps of the set inside `[inf, sup]`.
    pub fn gaps(&self) -> Vec<Gap> {
        self.pieces()
            .windows(2)
            .filter_map(|w| Gap::new(w[0].1, w[1].0).ok())
            .collect()
    }

    /// True when some element of the set lies strictly inside `gap`.
    pub fn meets(&self, gap: &Gap) -> bool {
        self.intervals.iter().any(|&(lo, hi)| lo < gap.hi && hi > gap.lo)
            || self.points.iter().any(|&p| gap.lo < p && p < gap.hi)
    }

    /// Checks that `gaps` are admissible sampling gaps: inside the hull,
    /// disjoint from the set and from each other.
    pub fn check_gaps(&self, gaps: &[Gap]) -> Result<(), Error> {
        if gaps.is_empty() {
            return Err(Error::NoGaps);
        }
        let (inf, sup) = (self.inf(), self.sup());
        for (i, g) in gaps.iter().enumerate() {
            if g.lo < inf || g.hi > sup {
                return Err(Error::GapOutsideHull { index: i, inf, sup });
            }
            if self.meets(g) {
                return Err(Error::GapMeetsOccurrence { index: i });
            }
            if let Some(j) = gaps[..i].iter().position(|h| h.overlaps(g)) {
                return Err(Error::GapsOverlap { first: j, second: i });
            }
        }
        Ok(())
    }
}
