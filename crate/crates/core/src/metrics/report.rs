use serde::{Deserialize, Serialize};

use super::cycles::{quadrangle_coefficients_with, triangle_coefficients_with};
use super::degree::{degree_distribution, degree_rank, fit_powerlaw_gamma, FitWindow};
use super::exec::Exec;
use super::knn::knn;
use super::paths::paths_and_betweenness;
use super::richclub::{phi_at, rich_club};
use super::series::{per_degree_mean, DistributionSeries};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Club fraction reported as `phi_1pct`.
pub const RICH_CLUB_FRACTION: f64 = 0.01;

/// Scalar summary of one graph. Field names are the serialized keys.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricsReport {
    pub n: usize,
    pub links: usize,
    pub mean_degree: f64,
    /// Absent when the fit window holds fewer than three degrees.
    pub gamma: Option<f64>,
    pub phi_1pct: f64,
    pub k_max: usize,
    pub p_k1: f64,
    pub p_k2: f64,
    pub p_k3: f64,
    pub l_star: f64,
    pub mean_kt: f64,
    pub max_kt: u64,
    pub mean_kq: f64,
    pub max_kq: u64,
    pub mean_knn: f64,
    pub mean_cb: f64,
    pub max_cb: f64,
}

impl MetricsReport {
    pub const KEYS: [&'static str; 17] = [
        "n",
        "links",
        "mean_degree",
        "gamma",
        "phi_1pct",
        "k_max",
        "p_k1",
        "p_k2",
        "p_k3",
        "l_star",
        "mean_kt",
        "max_kt",
        "mean_kq",
        "max_kq",
        "mean_knn",
        "mean_cb",
        "max_cb",
    ];

    /// Every field as `(key, value)` in [`Self::KEYS`] order.
    pub fn fields(&self) -> Vec<(&'static str, Option<f64>)> {
        let vals = [
            Some(self.n as f64),
            Some(self.links as f64),
            Some(self.mean_degree),
            self.gamma,
            Some(self.phi_1pct),
            Some(self.k_max as f64),
            Some(self.p_k1),
            Some(self.p_k2),
            Some(self.p_k3),
            Some(self.l_star),
            Some(self.mean_kt),
            Some(self.max_kt as f64),
            Some(self.mean_kq),
            Some(self.max_kq as f64),
            Some(self.mean_knn),
            Some(self.mean_cb),
            Some(self.max_cb),
        ];
        Self::KEYS.iter().copied().zip(vals).collect()
    }

    pub fn get(&self, key: &str) -> Option<f64> {
        self.fields()
            .into_iter()
            .find(|(k, _)| *k == key)
            .and_then(|(_, v)| v)
    }
}

/// A report together with every plot-ready series behind it.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub report: MetricsReport,
    pub fit: FitWindow,
    /// `(file suffix, series)` pairs.
    pub series: Vec<(&'static str, DistributionSeries)>,
}

impl Analysis {
    pub fn series(&self, suffix: &str) -> Option<&DistributionSeries> {
        self.series
            .iter()
            .find(|(s, _)| *s == suffix)
            .map(|(_, s)| s)
    }
}

/// Runs every metric on a connected graph with at least two nodes.
pub fn analyze(g: &Graph, fit: Option<FitWindow>, exec: Exec) -> Result<Analysis> {
    if g.node_count() < 2 {
        return Err(Error::InvalidParameter(format!(
            "analysis needs at least 2 nodes, got {}",
            g.node_count()
        )));
    }
    let fit = fit.unwrap_or_else(|| FitWindow::default_for(g));
    let n = g.node_count();
    let degrees = g.degrees();

    let (paths, between) = paths_and_betweenness(g, exec)?;
    let (pdf, ccdf) = degree_distribution(g);
    let gamma = fit_powerlaw_gamma(&ccdf, fit.k_min, fit.k_upper).ok();
    let rank = degree_rank(g);
    let club = rich_club(g)?;
    let kt = triangle_coefficients_with(g, exec);
    let kq = quadrangle_coefficients_with(g, exec);
    let nn = knn(g)?;

    let p_k = |k: f64| pdf.y_at(k).unwrap_or(0.0);
    let report = MetricsReport {
        n,
        links: g.edge_count(),
        mean_degree: 2.0 * g.edge_count() as f64 / n as f64,
        gamma,
        phi_1pct: phi_at(&club, n, RICH_CLUB_FRACTION),
        k_max: g.max_degree(),
        p_k1: p_k(1.0),
        p_k2: p_k(2.0),
        p_k3: p_k(3.0),
        l_star: paths.l_star,
        mean_kt: kt.mean(),
        max_kt: kt.max() as u64,
        mean_kq: kq.mean(),
        max_kq: kq.max() as u64,
        mean_knn: nn.mean,
        mean_cb: between.per_node.mean(),
        max_cb: between.per_node.max(),
    };

    let series = vec![
        ("pdf", pdf),
        ("ccdf", ccdf),
        ("rank", rank),
        ("richclub", club),
        ("l_ccdf", paths.ccdf),
        ("l_vs_k", paths.by_degree),
        ("kt_ccdf", kt.ccdf()),
        ("kt_vs_k", per_degree_mean(&degrees, &kt)),
        ("kq_ccdf", kq.ccdf()),
        ("kq_vs_k", per_degree_mean(&degrees, &kq)),
        ("knn_ccdf", nn.per_node.ccdf()),
        ("knn_vs_k", nn.by_degree),
        ("cb_ccdf", between.ccdf),
        ("cb_vs_k", between.by_degree),
    ];
    Ok(Analysis {
        report,
        fit,
        series,
    })
}

/// One column of scalar statistics for `g`.
pub fn full_report(g: &Graph, fit: FitWindow) -> Result<MetricsReport> {
    Ok(analyze(g, Some(fit), Exec::default())?.report)
}
