use super::series::{per_degree_mean, DistributionSeries, NodeMetricVector};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq)]
pub struct Knn {
    /// Mean degree of each node's neighbors.
    pub per_node: NodeMetricVector,
    pub by_degree: DistributionSeries,
    pub mean: f64,
}

/// Nearest-neighbors average degree. Isolated nodes are an error.
pub fn knn(g: &Graph) -> Result<Knn> {
    let mut values = Vec::with_capacity(g.node_count());
    for v in 0..g.node_count() {
        let nbrs = g.neighbors(v);
        if nbrs.is_empty() {
            return Err(Error::IsolatedNode(v));
        }
        let total: usize = nbrs.iter().map(|&w| g.deg(w)).sum();
        values.push(total as f64 / nbrs.len() as f64);
    }
    let per_node = NodeMetricVector(values);
    Ok(Knn {
        by_degree: per_degree_mean(&g.degrees(), &per_node),
        mean: per_node.mean(),
        per_node,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_and_ring() {
        let star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        let k = knn(&star).unwrap();
        assert_eq!(k.per_node.0, vec![1.0, 5.0, 5.0, 5.0, 5.0, 5.0]);
        assert_eq!(k.by_degree.points, vec![(1.0, 5.0), (5.0, 1.0)]);

        let edges: Vec<_> = (0..9).map(|i| (i, (i + 1) % 9)).collect();
        let ring = Graph::from_edges(9, &edges).unwrap();
        let k = knn(&ring).unwrap();
        assert!(k.per_node.iter().all(|&x| x == 2.0));
        assert_eq!(k.mean, 2.0);
    }

    #[test]
    fn isolated_node_rejected() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(knn(&g), Err(Error::IsolatedNode(2))));
    }
}
