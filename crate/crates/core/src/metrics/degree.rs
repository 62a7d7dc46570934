//! Degree distribution, power-law fitting and degree–rank ordering.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::series::{least_squares_slope, DistributionSeries, SeriesKind};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Minimum node count behind the upper end of the default fit window.
pub const FIT_TAIL_MIN_NODES: usize = 10;

/// Returns `(P(k), P_cum(k))` over the observed degrees.
pub fn degree_distribution(g: &Graph) -> (DistributionSeries, DistributionSeries) {
    let n = g.node_count() as f64;
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for v in 0..g.node_count() {
        *counts.entry(g.deg(v)).or_default() += 1;
    }
    let pdf: Vec<(f64, f64)> = counts
        .iter()
        .map(|(&k, &c)| (k as f64, c as f64 / n))
        .collect();
    let mut remaining = g.node_count();
    let mut ccdf = Vec::with_capacity(pdf.len());
    for (&k, &c) in &counts {
        ccdf.push((k as f64, remaining as f64 / n));
        remaining -= c;
    }
    (
        DistributionSeries::new(SeriesKind::Pdf, pdf),
        DistributionSeries::new(SeriesKind::Ccdf, ccdf),
    )
}

/// Degree range used for the power-law fit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FitWindow {
    pub k_min: usize,
    pub k_upper: usize,
}

impl FitWindow {
    /// `k_min = 1`; `k_upper` is the largest degree still reached by at least
    /// [`FIT_TAIL_MIN_NODES`] nodes.
    pub fn default_for(g: &Graph) -> Self {
        let mut degrees = g.degrees();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        let k_upper = degrees
            .get(FIT_TAIL_MIN_NODES - 1)
            .or(degrees.last())
            .copied()
            .unwrap_or(1);
        FitWindow { k_min: 1, k_upper }
    }
}

/// `gamma = 1 + |s|` where `s` is the least-squares slope of
/// `log10 P_cum(k)` against `log10 k` over `k_min <= k <= k_upper`.
pub fn fit_powerlaw_gamma(ccdf: &DistributionSeries, k_min: usize, k_upper: usize) -> Result<f64> {
    let (lo, hi) = (k_min as f64, k_upper as f64);
    let pts: Vec<(f64, f64)> = ccdf
        .points
        .iter()
        .filter(|(x, y)| *x >= lo && *x <= hi && *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.log10(), y.log10()))
        .collect();
    if pts.len() < 3 {
        return Err(Error::TooFewFitPoints {
            k_min: lo,
            k_upper: hi,
            found: pts.len(),
        });
    }
    Ok(1.0 + least_squares_slope(&pts).abs())
}

/// Node ids ordered by decreasing degree, ties by ascending id.
pub fn rank_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.node_count()).collect();
    order.sort_by(|&a, &b| g.deg(b).cmp(&g.deg(a)).then(a.cmp(&b)));
    order
}

/// `(r, k_r)` for `r = 1..=N`.
pub fn degree_rank(g: &Graph) -> DistributionSeries {
    let points = rank_order(g)
        .into_iter()
        .enumerate()
        .map(|(i, v)| ((i + 1) as f64, g.deg(v) as f64))
        .collect();
    DistributionSeries::new(SeriesKind::Rank, points)
}

/// Magnitude of the log–log slope of degree against rank over
/// `r_min <= r <= r_max`.
pub fn rank_exponent(rank: &DistributionSeries, r_min: usize, r_max: usize) -> Result<f64> {
    match rank.loglog_slope(r_min as f64, r_max as f64) {
        Some((s, used)) if used >= 3 => Ok(s.abs()),
        other => Err(Error::TooFewFitPoints {
            k_min: r_min as f64,
            k_upper: r_max as f64,
            found: other.map_or(0, |(_, used)| used),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NodeId;

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut g = Graph::with_nodes(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(NodeId(u), NodeId(v)).unwrap();
            }
        }
        g
    }

    fn ring(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn distributions_of_small_graphs() {
        let (pdf, ccdf) = degree_distribution(&complete(4));
        assert_eq!(pdf.points, vec![(3.0, 1.0)]);
        assert_eq!(ccdf.points, vec![(3.0, 1.0)]);

        let (pdf, ccdf) = degree_distribution(&star(5));
        assert_eq!(pdf.points, vec![(1.0, 5.0 / 6.0), (5.0, 1.0 / 6.0)]);
        assert_eq!(ccdf.points, vec![(1.0, 1.0), (5.0, 1.0 / 6.0)]);
        let total: f64 = pdf.points.iter().map(|p| p.1).sum();
        assert!((total - 1.0).abs() < 1e-9);
    }

    #[test]
    fn fit_recovers_exact_exponents() {
        for (slope, gamma) in [(1.22, 2.22), (2.0, 3.0)] {
            let pts = (1..=100)
                .map(|k| (k as f64, (k as f64).powf(-slope)))
                .collect();
            let s = DistributionSeries::new(SeriesKind::Ccdf, pts);
            let got = fit_powerlaw_gamma(&s, 1, 100).unwrap();
            assert!((got - gamma).abs() < 1e-6, "{got} vs {gamma}");
        }
    }

    #[test]
    fn fit_is_scale_invariant() {
        let pts: Vec<_> = (1..=50)
            .map(|k| (k as f64, 3.0 * (k as f64).powf(-1.5) + 0.001 * k as f64))
            .collect();
        let a = DistributionSeries::new(SeriesKind::Ccdf, pts.clone());
        let b = DistributionSeries::new(
            SeriesKind::Ccdf,
            pts.iter().map(|&(x, y)| (x, 17.5 * y)).collect(),
        );
        let ga = fit_powerlaw_gamma(&a, 1, 50).unwrap();
        let gb = fit_powerlaw_gamma(&b, 1, 50).unwrap();
        assert!((ga - gb).abs() < 1e-12);
    }

    #[test]
    fn fit_needs_three_points() {
        let s = DistributionSeries::new(SeriesKind::Ccdf, vec![(1.0, 1.0), (2.0, 0.5), (9.0, 0.1)]);
        assert!(matches!(
            fit_powerlaw_gamma(&s, 1, 5),
            Err(Error::TooFewFitPoints { found: 2, .. })
        ));
        assert!(fit_powerlaw_gamma(&s, 1, 9).is_ok());
    }

    #[test]
    fn default_window_upper_bound() {
        // 10 leaves of degree 1 and one hub of degree 10: only k=1 has >= 10 nodes.
        assert_eq!(FitWindow::default_for(&star(10)).k_upper, 1);
        let g = complete(12);
        assert_eq!(
            FitWindow::default_for(&g),
            FitWindow {
                k_min: 1,
                k_upper: 11
            }
        );
    }

    #[test]
    fn rank_of_star_and_ring() {
        let r = degree_rank(&star(5));
        assert_eq!(r.points[0], (1.0, 5.0));
        assert!(r.points[1..].iter().all(|p| p.1 == 1.0));
        assert_eq!(r.points.last().unwrap().0, 6.0);

        let r = degree_rank(&ring(8));
        assert_eq!(r.len(), 8);
        assert!(r.points.iter().all(|p| p.1 == 2.0));
    }

    #[test]
    fn rank_ties_broken_by_id() {
        let g = Graph::from_edges(4, &[(0, 3), (1, 2)]).unwrap();
        assert_eq!(rank_order(&g), vec![0, 1, 2, 3]);
    }
}
