use super::degree::rank_order;
use super::series::{DistributionSeries, SeriesKind};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Rich-club connectivity `phi(r/N)` for `r = 2..=N`: the edge density among
/// the `r` highest-ranked nodes, in the order of [`rank_order`].
pub fn rich_club(g: &Graph) -> Result<DistributionSeries> {
    let n = g.node_count();
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "rich-club needs at least 2 nodes, got {n}"
        )));
    }
    let order = rank_order(g);
    let mut rank = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    let mut inside = 0usize;
    let mut points = Vec::with_capacity(n - 1);
    for (i, &v) in order.iter().enumerate() {
        inside += g.neighbors(v).iter().filter(|&&w| rank[w] < i).count();
        let r = i + 1;
        if r >= 2 {
            let possible = (r * (r - 1) / 2) as f64;
            points.push((r as f64 / n as f64, inside as f64 / possible));
        }
    }
    Ok(DistributionSeries::new(SeriesKind::Richclub, points))
}

/// Club size used for a normalized rank: `round(fraction * N)`, at least 2.
pub fn club_size(n: usize, fraction: f64) -> usize {
    ((fraction * n as f64).round() as usize).clamp(2, n.max(2))
}

/// `phi` for the top `fraction` of nodes.
pub fn phi_at(series: &DistributionSeries, n: usize, fraction: f64) -> f64 {
    let r = club_size(n, fraction);
    series.points[r - 2].1
}
