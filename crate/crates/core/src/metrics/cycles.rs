//! Triangle and quadrangle coefficients.
//!
//! `k_t(v)` is the number of edges among the neighbors of `v`. `k_q(v)` is the
//! number of simple 4-cycles through `v`, chorded ones included: for every
//! node `w != v` reached by `c_w` distinct 2-paths `v-a-w`, each pair of those
//! paths closes one 4-cycle, giving `sum_w C(c_w, 2)`.

use super::exec::{map_chunks, Exec};
use super::series::NodeMetricVector;
use crate::graph::Graph;

pub fn triangle_coefficients(g: &Graph) -> NodeMetricVector {
    triangle_coefficients_with(g, Exec::default())
}

pub fn triangle_coefficients_with(g: &Graph, exec: Exec) -> NodeMetricVector {
    let n = g.node_count();
    let parts = map_chunks(n, exec, |range| {
        let mut mark = vec![false; n];
        let mut out = Vec::with_capacity(range.len());
        for v in range {
            for &a in g.neighbors(v) {
                mark[a] = true;
            }
            let mut twice = 0u64;
            for &a in g.neighbors(v) {
                twice += g.neighbors(a).iter().filter(|&&w| mark[w]).count() as u64;
            }
            for &a in g.neighbors(v) {
                mark[a] = false;
            }
            out.push((twice / 2) as f64);
        }
        out
    });
    NodeMetricVector(parts.into_iter().flatten().collect())
}

pub fn quadrangle_coefficients(g: &Graph) -> NodeMetricVector {
    quadrangle_coefficients_with(g, Exec::default())
}

pub fn quadrangle_coefficients_with(g: &Graph, exec: Exec) -> NodeMetricVector {
    let n = g.node_count();
    let parts = map_chunks(n, exec, |range| {
        let mut paths = vec![0u64; n];
        let mut touched = Vec::new();
        let mut out = Vec::with_capacity(range.len());
        for v in range {
            for &a in g.neighbors(v) {
                for &w in g.neighbors(a) {
                    if w == v {
                        continue;
                    }
                    if paths[w] == 0 {
                        touched.push(w);
                    }
                    paths[w] += 1;
                }
            }
            let mut count = 0u64;
            for &w in &touched {
                let c = paths[w];
                count += c * (c - 1) / 2;
                paths[w] = 0;
            }
            touched.clear();
            out.push(count as f64);
        }
        out
    });
    NodeMetricVector(parts.into_iter().flatten().collect())
}

/// `c = 2 k_t / (k (k - 1))`, defined as 0 when `k < 2`.
pub fn clustering_coefficient(k: usize, k_t: u64) -> f64 {
    if k < 2 {
        return 0.0;
    }
    2.0 * k_t as f64 / (k as f64 * (k as f64 - 1.0))
}
