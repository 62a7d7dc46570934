//! Hop-count shortest paths and endpoint-inclusive betweenness.
//!
//! Both come from one breadth-first search per source. Betweenness follows
//! the usual dependency accumulation over the BFS DAG; the endpoint terms
//! (`p_{s,d}(s) = p_{s,d}(d) = 1`) are then added in closed form, `2 (N - 1)`
//! per node. Summing over nodes gives the exact identity
//! `mean C_B* = (N - 1)(l* + 1) / N`.

use std::collections::VecDeque;

use super::exec::{map_chunks, Exec};
use super::series::{ccdf_of, per_degree_mean, DistributionSeries, NodeMetricVector};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub(crate) fn require_connected(g: &Graph) -> Result<()> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    match g.find_unreachable() {
        Some((a, b)) => Err(Error::Disconnected(a, b)),
        None => Ok(()),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PathStats {
    /// Mean hop distance from each node to every other node.
    pub per_node: NodeMetricVector,
    /// Characteristic path length.
    pub l_star: f64,
    pub ccdf: DistributionSeries,
    pub by_degree: DistributionSeries,
}

impl PathStats {
    fn from_sums(g: &Graph, sums: &[u64]) -> Self {
        let n = g.node_count();
        let denom = (n.max(2) - 1) as f64;
        let per_node: Vec<f64> = sums.iter().map(|&s| s as f64 / denom).collect();
        let l_star = per_node.iter().sum::<f64>() / n as f64;
        PathStats {
            ccdf: ccdf_of(&per_node),
            by_degree: per_degree_mean(&g.degrees(), &per_node),
            per_node: NodeMetricVector(per_node),
            l_star,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Betweenness {
    /// `C_B*(w) = C_B(w) / N`.
    pub per_node: NodeMetricVector,
    pub ccdf: DistributionSeries,
    pub by_degree: DistributionSeries,
}

fn bfs_sums(g: &Graph, sources: std::ops::Range<usize>) -> Vec<u64> {
    let n = g.node_count();
    let mut dist = vec![u32::MAX; n];
    let mut queue = VecDeque::with_capacity(n);
    let mut out = Vec::with_capacity(sources.len());
    for s in sources {
        dist.fill(u32::MAX);
        dist[s] = 0;
        queue.push_back(s);
        let mut sum = 0u64;
        while let Some(v) = queue.pop_front() {
            let dv = dist[v];
            sum += dv as u64;
            for &w in g.neighbors(v) {
                if dist[w] == u32::MAX {
                    dist[w] = dv + 1;
                    queue.push_back(w);
                }
            }
        }
        out.push(sum);
    }
    out
}

/// Per-node mean distances, `l*`, their ccdf and the per-degree means.
pub fn shortest_path_stats(g: &Graph) -> Result<PathStats> {
    shortest_path_stats_with(g, Exec::default())
}

pub fn shortest_path_stats_with(g: &Graph, exec: Exec) -> Result<PathStats> {
    require_connected(g)?;
    let sums: Vec<u64> = map_chunks(g.node_count(), exec, |r| bfs_sums(g, r))
        .into_iter()
        .flatten()
        .collect();
    Ok(PathStats::from_sums(g, &sums))
}

struct ChunkAccum {
    dist_sums: Vec<u64>,
    dependency: Vec<f64>,
}

fn brandes_chunk(g: &Graph, sources: std::ops::Range<usize>) -> ChunkAccum {
    let n = g.node_count();
    let mut dist = vec![u32::MAX; n];
    let mut sigma = vec![0f64; n];
    let mut delta = vec![0f64; n];
    let mut order = Vec::with_capacity(n);
    let mut dependency = vec![0f64; n];
    let mut dist_sums = Vec::with_capacity(sources.len());
    for s in sources {
        dist.fill(u32::MAX);
        sigma.fill(0.0);
        delta.fill(0.0);
        order.clear();
        dist[s] = 0;
        sigma[s] = 1.0;
        order.push(s);
        let mut head = 0;
        let mut sum = 0u64;
        while head < order.len() {
            let v = order[head];
            head += 1;
            let dv = dist[v];
            sum += dv as u64;
            for &w in g.neighbors(v) {
                if dist[w] == u32::MAX {
                    dist[w] = dv + 1;
                    order.push(w);
                }
                if dist[w] == dv + 1 {
                    sigma[w] += sigma[v];
                }
            }
        }
        for &w in order.iter().rev() {
            let dw = dist[w];
            if dw == 0 {
                continue;
            }
            let coeff = (1.0 + delta[w]) / sigma[w];
            for &v in g.neighbors(w) {
                if dist[v] + 1 == dw {
                    delta[v] += sigma[v] * coeff;
                }
            }
            dependency[w] += delta[w];
        }
        dist_sums.push(sum);
    }
    ChunkAccum {
        dist_sums,
        dependency,
    }
}

/// Distance sums and raw ordered-pair dependencies from a single sweep.
pub(crate) fn all_pairs(g: &Graph, exec: Exec) -> Result<(Vec<u64>, Vec<f64>)> {
    require_connected(g)?;
    let n = g.node_count();
    let chunks = map_chunks(n, exec, |r| brandes_chunk(g, r));
    let mut sums = Vec::with_capacity(n);
    let mut dependency = vec![0f64; n];
    for c in chunks {
        sums.extend_from_slice(&c.dist_sums);
        for (acc, d) in dependency.iter_mut().zip(&c.dependency) {
            *acc += d;
        }
    }
    Ok((sums, dependency))
}

fn betweenness_from(g: &Graph, dependency: &[f64]) -> Betweenness {
    let n = g.node_count();
    let endpoints = 2.0 * (n as f64 - 1.0);
    let per_node: Vec<f64> = dependency
        .iter()
        .map(|&d| (d + endpoints) / n as f64)
        .collect();
    Betweenness {
        ccdf: ccdf_of(&per_node),
        by_degree: per_degree_mean(&g.degrees(), &per_node),
        per_node: NodeMetricVector(per_node),
    }
}

/// Endpoint-inclusive betweenness over ordered pairs, normalized by `N`.
pub fn betweenness(g: &Graph) -> Result<Betweenness> {
    betweenness_with(g, Exec::default())
}

pub fn betweenness_with(g: &Graph, exec: Exec) -> Result<Betweenness> {
    let (_, dependency) = all_pairs(g, exec)?;
    Ok(betweenness_from(g, &dependency))
}

/// Path statistics and betweenness from one shared sweep.
pub fn paths_and_betweenness(g: &Graph, exec: Exec) -> Result<(PathStats, Betweenness)> {
    let (sums, dependency) = all_pairs(g, exec)?;
    Ok((
        PathStats::from_sums(g, &sums),
        betweenness_from(g, &dependency),
    ))
}
