//! Weighted sampling without replacement.
//!
//! [`WeightTree`] is a sum tree over non-negative leaf weights. Drawing is a
//! root-to-leaf descent, and updating one weight recomputes its ancestors from
//! their children, so zeroing a leaf and restoring it later leaves the tree
//! bit-for-bit unchanged. The growth models use it directly: a node is
//! excluded from a draw by zeroing its weight for the duration of the step.

use rand::Rng;

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct WeightTree {
    capacity: usize,
    len: usize,
    nodes: Vec<f64>,
}

impl Default for WeightTree {
    fn default() -> Self {
        Self::with_capacity(1)
    }
}

impl WeightTree {
    pub fn with_capacity(capacity: usize) -> Self {
        let capacity = capacity.max(1).next_power_of_two();
        WeightTree {
            capacity,
            len: 0,
            nodes: vec![0.0; 2 * capacity],
        }
    }

    pub fn from_weights(weights: &[f64]) -> Self {
        let mut tree = Self::with_capacity(weights.len());
        tree.len = weights.len();
        tree.nodes[tree.capacity..tree.capacity + weights.len()].copy_from_slice(weights);
        for p in (1..tree.capacity).rev() {
            tree.nodes[p] = tree.nodes[2 * p] + tree.nodes[2 * p + 1];
        }
        tree
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn total(&self) -> f64 {
        self.nodes[1.min(self.nodes.len() - 1)]
    }

    pub fn get(&self, i: usize) -> f64 {
        assert!(i < self.len);
        self.nodes[self.capacity + i]
    }

    pub fn set(&mut self, i: usize, weight: f64) {
        assert!(i < self.len, "leaf {i} out of range");
        let mut p = self.capacity + i;
        self.nodes[p] = weight;
        p /= 2;
        while p >= 1 {
            self.nodes[p] = self.nodes[2 * p] + self.nodes[2 * p + 1];
            p /= 2;
        }
    }

    /// Appends a leaf, returning its index.
    pub fn push(&mut self, weight: f64) -> usize {
        if self.len == self.capacity {
            let leaves: Vec<f64> = self.nodes[self.capacity..self.capacity + self.len].to_vec();
            let mut grown = Self::with_capacity(2 * self.capacity);
            grown.len = leaves.len();
            grown.nodes[grown.capacity..grown.capacity + leaves.len()].copy_from_slice(&leaves);
            for p in (1..grown.capacity).rev() {
                grown.nodes[p] = grown.nodes[2 * p] + grown.nodes[2 * p + 1];
            }
            *self = grown;
        }
        self.len += 1;
        self.set(self.len - 1, weight);
        self.len - 1
    }

    /// Draws one leaf with probability proportional to its weight, or `None`
    /// when every weight is zero.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Option<usize> {
        if self.len == 0 || self.total() <= 0.0 {
            return None;
        }
        let mut u = rng.gen::<f64>() * self.total();
        let mut p = 1;
        while p < self.capacity {
            let left = self.nodes[2 * p];
            let right = self.nodes[2 * p + 1];
            if (u < left && left > 0.0) || right <= 0.0 {
                p *= 2;
            } else {
                u -= left;
                p = 2 * p + 1;
            }
        }
        Some(p - self.capacity)
    }
}

/// Draws `count` distinct candidates, each draw proportional to the weights
/// of the candidates still remaining. Returned in draw order.
pub fn sample_distinct<T: Clone, R: Rng + ?Sized>(
    candidates: &[T],
    weights: &[f64],
    count: usize,
    rng: &mut R,
) -> Result<Vec<T>> {
    if candidates.len() != weights.len() {
        return Err(Error::InvalidParameter(format!(
            "{} candidates but {} weights",
            candidates.len(),
            weights.len()
        )));
    }
    if count > candidates.len() {
        return Err(Error::SampleTooLarge {
            requested: count,
            available: candidates.len(),
        });
    }
    if let Some((index, &weight)) = weights
        .iter()
        .enumerate()
        .find(|(_, w)| !(w.is_finite() && **w > 0.0))
    {
        return Err(Error::BadWeight { index, weight });
    }
    let mut tree = WeightTree::from_weights(weights);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let i = tree.sample(rng).expect("positive weights remain");
        tree.set(i, 0.0);
        out.push(candidates[i].clone());
    }
    Ok(out)
}
