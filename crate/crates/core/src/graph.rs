//! Append-only undirected simple graph.
//!
//! Node ids are dense and assigned in creation order, so a node's id doubles as
//! its age. Neighbor lists are kept sorted, which makes membership tests
//! logarithmic and the edge set canonical.

use std::fmt;

use crate::error::{Error, Result};

/// Dense node identifier, `0 <= id < node_count`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for NodeId {
    fn from(v: usize) -> Self {
        NodeId(v)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph with `n` isolated nodes.
    pub fn with_nodes(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn add_node(&mut self) -> NodeId {
        self.adjacency.push(Vec::new());
        NodeId(self.adjacency.len() - 1)
    }

    fn check(&self, v: NodeId) -> Result<()> {
        if v.0 < self.adjacency.len() {
            Ok(())
        } else {
            Err(Error::InvalidNode {
                node: v.0,
                node_count: self.adjacency.len(),
            })
        }
    }

    /// Inserts the undirected edge `{u, v}`.
    ///
    /// Returns `Ok(false)` for a self-loop or an edge that already exists, in
    /// which case the graph is left untouched. An out-of-range id is an error.
    pub fn add_edge(&mut self, u: NodeId, v: NodeId) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Ok(false);
        }
        let pos_u = match self.adjacency[u.0].binary_search(&v.0) {
            Ok(_) => return Ok(false),
            Err(pos) => pos,
        };
        self.adjacency[u.0].insert(pos_u, v.0);
        let pos_v = self.adjacency[v.0]
            .binary_search(&u.0)
            .expect_err("adjacency lists out of sync");
        self.adjacency[v.0].insert(pos_v, u.0);
        self.edge_count += 1;
        Ok(true)
    }

    pub fn degree(&self, v: NodeId) -> Result<usize> {
        self.check(v)?;
        Ok(self.adjacency[v.0].len())
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.adjacency[u.0].binary_search(&v.0).is_ok())
    }

    /// Sorted neighbor list of `v`. Panics on an invalid id.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Degree by raw index. Panics on an invalid id.
    #[inline]
    pub fn deg(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Every edge once as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, nbrs)| {
            let start = nbrs.partition_point(|&w| w <= u);
            nbrs[start..].iter().map(move |&w| (u, w))
        })
    }

    /// Checks that every node is reachable from node 0.
    ///
    /// On failure returns a pair `(0, v)` that has no connecting path.
    pub fn find_unreachable(&self) -> Option<(usize, usize)> {
        let n = self.node_count();
        if n == 0 {
            return None;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().position(|s| !s).map(|v| (0, v))
    }

    pub fn is_connected(&self) -> bool {
        self.find_unreachable().is_none()
    }

    /// Verifies the structural invariants: sorted, loop-free, duplicate-free,
    /// symmetric adjacency and a consistent edge count.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let mut degree_sum = 0usize;
        for (v, nbrs) in self.adjacency.iter().enumerate() {
            degree_sum += nbrs.len();
            for pair in nbrs.windows(2) {
                if pair[0] >= pair[1] {
                    return Err(format!("neighbors of {v} not strictly sorted"));
                }
            }
            for &w in nbrs {
                if w == v {
                    return Err(format!("self-loop at {v}"));
                }
                if w >= self.node_count() {
                    return Err(format!("neighbor {w} of {v} out of range"));
                }
                if self.adjacency[w].binary_search(&v).is_err() {
                    return Err(format!("edge {v}-{w} not symmetric"));
                }
            }
        }
        if degree_sum != 2 * self.edge_count {
            return Err(format!(
                "degree sum {degree_sum} != 2 * edge count {}",
                self.edge_count
            ));
        }
        Ok(())
    }

    /// Builds a graph from an edge list, ignoring loops and duplicates.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::with_nodes(n);
        for &(u, v) in edges {
            g.add_edge(NodeId(u), NodeId(v))?;
        }
        Ok(g)
    }

    /// Copy of the graph with node `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.node_count());
        let mut g = Graph::with_nodes(self.node_count());
        for (u, v) in self.edges() {
            g.add_edge(NodeId(perm[u]), NodeId(perm[v]))
                .expect("permutation in range");
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k(n: usize) -> Graph {
        let mut g = Graph::with_nodes(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(NodeId(u), NodeId(v)).unwrap();
            }
        }
        g
    }

    #[test]
    fn add_node_ids_are_contiguous() {
        let mut g = Graph::new();
        assert_eq!(g.add_node(), NodeId(0));
        assert_eq!(g.node_count(), 1);

        let mut g = Graph::with_nodes(5);
        assert_eq!(g.add_node(), NodeId(5));

        let mut g = Graph::with_nodes(7);
        assert_eq!(g.add_node(), NodeId(7));
        assert_eq!(g.add_node(), NodeId(8));
        assert_eq!(g.degree(NodeId(8)).unwrap(), 0);
    }

    #[test]
    fn add_edge_rejects_loops_and_duplicates() {
        let mut g = Graph::with_nodes(4);
        assert!(!g.add_edge(NodeId(3), NodeId(3)).unwrap());
        assert!(g.add_edge(NodeId(0), NodeId(1)).unwrap());
        assert_eq!(g.edge_count(), 1);
        assert!(!g.add_edge(NodeId(1), NodeId(0)).unwrap());
        assert!(!g.add_edge(NodeId(0), NodeId(1)).unwrap());
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn invalid_ids_are_errors() {
        let mut g = Graph::with_nodes(2);
        assert!(matches!(
            g.add_edge(NodeId(0), NodeId(2)),
            Err(Error::InvalidNode { node: 2, .. })
        ));
        assert!(g.degree(NodeId(9)).is_err());
    }

    #[test]
    fn degrees_of_small_graphs() {
        let g = Graph::with_nodes(1);
        assert_eq!(g.degree(NodeId(0)).unwrap(), 0);

        let star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        assert_eq!(star.degree(NodeId(0)).unwrap(), 5);

        let k4 = k(4);
        for v in 0..4 {
            assert_eq!(k4.degree(NodeId(v)).unwrap(), 3);
        }
    }

    #[test]
    fn edges_are_canonical() {
        let g = Graph::from_edges(3, &[(2, 1), (1, 0), (0, 2)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn connectivity() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.find_unreachable(), Some((0, 2)));
        assert!(k(5).is_connected());
    }

    proptest! {
        #[test]
        fn handshake_holds_after_any_insertions(
            n in 1usize..20,
            ops in proptest::collection::vec((0usize..20, 0usize..20), 0..80),
        ) {
            let mut g = Graph::with_nodes(n);
            for (u, v) in ops {
                let _ = g.add_edge(NodeId(u % n), NodeId(v % n));
            }
            prop_assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
            prop_assert!(g.validate().is_ok());
        }

        #[test]
        fn repeated_insertion_is_idempotent(
            edges in proptest::collection::vec((0usize..10, 0usize..10), 0..30),
        ) {
            let once = Graph::from_edges(10, &edges).unwrap();
            let doubled: Vec<_> = edges.iter().chain(edges.iter()).copied().collect();
            let twice = Graph::from_edges(10, &doubled).unwrap();
            prop_assert_eq!(once, twice);
        }
    }
}
