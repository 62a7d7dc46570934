use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    Pdf,
    Ccdf,
    Rank,
    Richclub,
    PerDegreeMean,
}

impl SeriesKind {
    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::Pdf => "pdf",
            SeriesKind::Ccdf => "ccdf",
            SeriesKind::Rank => "rank",
            SeriesKind::Richclub => "richclub",
            SeriesKind::PerDegreeMean => "per_degree_mean",
        }
    }
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pdf" => Ok(SeriesKind::Pdf),
            "ccdf" => Ok(SeriesKind::Ccdf),
            "rank" => Ok(SeriesKind::Rank),
            "richclub" => Ok(SeriesKind::Richclub),
            "per_degree_mean" => Ok(SeriesKind::PerDegreeMean),
            other => Err(Error::Config(format!("unknown series kind `{other}`"))),
        }
    }
}

/// Ordered `(x, y)` points with strictly increasing `x`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DistributionSeries {
    pub kind: SeriesKind,
    pub points: Vec<(f64, f64)>,
}

impl DistributionSeries {
    pub fn new(kind: SeriesKind, points: Vec<(f64, f64)>) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0].0 < w[1].0));
        DistributionSeries { kind, points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `y` at the exact abscissa `x`, if present.
    pub fn y_at(&self, x: f64) -> Option<f64> {
        self.points.iter().find(|p| p.0 == x).map(|p| p.1)
    }

    /// Least-squares slope of `log10 y` against `log10 x` over points with
    /// `lo <= x <= hi` and positive coordinates. Returns the slope and the
    /// number of points used.
    pub fn loglog_slope(&self, lo: f64, hi: f64) -> Option<(f64, usize)> {
        let pts: Vec<(f64, f64)> = self
            .points
            .iter()
            .filter(|(x, y)| *x >= lo && *x <= hi && *x > 0.0 && *y > 0.0)
            .map(|(x, y)| (x.log10(), y.log10()))
            .collect();
        if pts.len() < 2 {
            return None;
        }
        Some((least_squares_slope(&pts), pts.len()))
    }
}

pub(crate) fn least_squares_slope(pts: &[(f64, f64)]) -> f64 {
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    sxy / sxx
}

/// Fraction of values `>= x` for every distinct value `x`.
pub fn ccdf_of(values: &[f64]) -> DistributionSeries {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.total_cmp(b));
    let n = sorted.len() as f64;
    let mut points = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let x = sorted[i];
        points.push((x, (sorted.len() - i) as f64 / n));
        while i < sorted.len() && sorted[i] == x {
            i += 1;
        }
    }
    DistributionSeries::new(SeriesKind::Ccdf, points)
}

/// Mean of `values` over nodes sharing a degree, for every observed degree.
pub fn per_degree_mean(degrees: &[usize], values: &[f64]) -> DistributionSeries {
    assert_eq!(degrees.len(), values.len());
    let mut acc: BTreeMap<usize, (f64, usize)> = BTreeMap::new();
    for (&k, &v) in degrees.iter().zip(values) {
        let e = acc.entry(k).or_insert((0.0, 0));
        e.0 += v;
        e.1 += 1;
    }
    DistributionSeries::new(
        SeriesKind::PerDegreeMean,
        acc.into_iter()
            .map(|(k, (s, c))| (k as f64, s / c as f64))
            .collect(),
    )
}

/// Per-node values of one metric, indexed by node id. Integer-valued
/// metrics (cycle counts) are stored exactly; they stay far below 2^53.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NodeMetricVector(pub Vec<f64>);

impl Deref for NodeMetricVector {
    type Target = [f64];
    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl NodeMetricVector {
    pub fn mean(&self) -> f64 {
        if self.0.is_empty() {
            return 0.0;
        }
        self.0.iter().sum::<f64>() / self.0.len() as f64
    }

    pub fn max(&self) -> f64 {
        self.0.iter().copied().fold(0.0, f64::max)
    }

    pub fn ccdf(&self) -> DistributionSeries {
        ccdf_of(&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ccdf_starts_at_one() {
        let s = ccdf_of(&[3.0, 1.0, 1.0, 2.0]);
        assert_eq!(s.points, vec![(1.0, 1.0), (2.0, 0.5), (3.0, 0.25)]);
    }

    #[test]
    fn per_degree_mean_groups_by_degree() {
        let s = per_degree_mean(&[1, 2, 1, 5], &[1.0, 4.0, 3.0, 0.5]);
        assert_eq!(s.points, vec![(1.0, 2.0), (2.0, 4.0), (5.0, 0.5)]);
    }

    #[test]
    fn loglog_slope_of_exact_power_law() {
        let pts = (1..=100)
            .map(|k| (k as f64, (k as f64).powf(-1.22)))
            .collect();
        let s = DistributionSeries::new(SeriesKind::Ccdf, pts);
        let (slope, used) = s.loglog_slope(1.0, 100.0).unwrap();
        assert_eq!(used, 100);
        assert!((slope + 1.22).abs() < 1e-9);
    }

    proptest! {
        #[test]
        fn ccdf_is_non_increasing(values in proptest::collection::vec(0.0f64..100.0, 1..200)) {
            let s = ccdf_of(&values);
            prop_assert_eq!(s.points[0].1, 1.0);
            prop_assert!(s.points.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 > w[1].1));
        }
    }
}
