use rand::seq::index;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// Small connected starting network: a random recursive tree on `n0` nodes
/// plus `extra_edges` distinct non-tree edges chosen uniformly.
pub fn seed_network<R: Rng + ?Sized>(n0: usize, extra_edges: usize, rng: &mut R) -> Result<Graph> {
    if n0 < 3 {
        return Err(Error::InvalidParameter(format!(
            "seed network needs at least 3 nodes, got {n0}"
        )));
    }
    let max_extra = n0 * (n0 - 1) / 2 - (n0 - 1);
    if extra_edges > max_extra {
        return Err(Error::InvalidParameter(format!(
            "{extra_edges} extra edges requested but a {n0}-node tree leaves only {max_extra} free pairs"
        )));
    }
    let mut g = Graph::with_nodes(n0);
    for v in 1..n0 {
        let parent = rng.gen_range(0..v);
        g.add_edge(NodeId(v), NodeId(parent))?;
    }
    let free: Vec<(usize, usize)> = (0..n0)
        .flat_map(|u| (u + 1..n0).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.neighbors(u).contains(&v))
        .collect();
    for i in index::sample(rng, free.len(), extra_edges).into_iter() {
        let (u, v) = free[i];
        g.add_edge(NodeId(u), NodeId(v))?;
    }
    Ok(g)
}
