//! The four growth models.
//!
//! Every model is a loop of steps. A step adds one new node attached to one or
//! more *hosts*, and optionally adds internal links from one host to *peers*.
//! All draws within a step use the degrees as they stood at the start of the
//! step; the graph and the weight tree are updated only once the step's
//! endpoints are fixed.
//!
//! Peers exclude the originating host and its current neighbors, so every
//! internal link is a new edge. When no such peer exists the link is skipped
//! and counted in [`GrowthRun::skipped_links`].

use log::debug;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::config::{GrowthConfig, Model};
use super::kernel::PreferenceScheme;
use super::sampler::WeightTree;
use super::seed::seed_network;
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// Rejection attempts before falling back to explicit neighbor exclusion.
const PEER_REJECTION_TRIES: usize = 32;

#[derive(Debug, Clone)]
pub struct GrowthRun {
    pub graph: Graph,
    pub steps: usize,
    /// Internal links dropped because the host was adjacent to every old node.
    pub skipped_links: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeTrajectory {
    pub node: usize,
    /// `(network size, degree)` pairs, starting at the node's birth.
    pub samples: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy)]
struct Step {
    hosts: usize,
    peers: usize,
}

struct Engine {
    graph: Graph,
    tree: WeightTree,
    scheme: PreferenceScheme,
    skipped: usize,
    scratch: Vec<(usize, f64)>,
}

impl Engine {
    fn new(graph: Graph, scheme: PreferenceScheme) -> Result<Self> {
        let mut weights = Vec::with_capacity(graph.node_count());
        for v in 0..graph.node_count() {
            weights.push(super::kernel::preference_weight(graph.deg(v), &scheme)?);
        }
        Ok(Engine {
            tree: WeightTree::from_weights(&weights),
            graph,
            scheme,
            skipped: 0,
            scratch: Vec::new(),
        })
    }

    fn exclude(&mut self, v: usize) {
        let w = self.tree.get(v);
        if w > 0.0 {
            self.scratch.push((v, w));
            self.tree.set(v, 0.0);
        }
    }

    fn restore_all(&mut self) {
        while let Some((v, w)) = self.scratch.pop() {
            self.tree.set(v, w);
        }
    }

    fn draw_peer<R: Rng + ?Sized>(&mut self, origin: usize, rng: &mut R) -> Option<usize> {
        for _ in 0..PEER_REJECTION_TRIES {
            let s = self.tree.sample(rng)?;
            if self.graph.neighbors(origin).binary_search(&s).is_err() {
                return Some(s);
            }
        }
        let mark = self.scratch.len();
        for i in 0..self.graph.deg(origin) {
            let w = self.graph.neighbors(origin)[i];
            self.exclude(w);
        }
        let pick = self.tree.sample(rng);
        while self.scratch.len() > mark {
            let (v, w) = self.scratch.pop().expect("len checked");
            self.tree.set(v, w);
        }
        pick
    }

    fn step<R: Rng + ?Sized>(&mut self, step: Step, rng: &mut R) -> Result<NodeId> {
        let old_nodes = self.graph.node_count();
        let mut hosts = Vec::with_capacity(step.hosts);
        for _ in 0..step.hosts {
            let h = self.tree.sample(rng).ok_or(Error::SampleTooLarge {
                requested: step.hosts,
                available: old_nodes,
            })?;
            self.exclude(h);
            hosts.push(h);
        }
        self.restore_all();

        let mut internal = Vec::with_capacity(step.peers);
        if step.peers > 0 {
            let origin = if hosts.len() == 1 {
                hosts[0]
            } else {
                hosts[rng.gen_range(0..hosts.len())]
            };
            self.exclude(origin);
            for _ in 0..step.peers {
                match self.draw_peer(origin, rng) {
                    Some(peer) => {
                        self.exclude(peer);
                        internal.push((origin, peer));
                    }
                    None => {
                        self.skipped += 1;
                        debug!(
                            "node {origin} is adjacent to every old node; internal link skipped"
                        );
                    }
                }
            }
            self.restore_all();
        }

        let v = self.graph.add_node();
        for &h in &hosts {
            let added = self.graph.add_edge(v, NodeId(h))?;
            debug_assert!(added);
        }
        for &(a, b) in &internal {
            let added = self.graph.add_edge(NodeId(a), NodeId(b))?;
            debug_assert!(added, "internal link {a}-{b} already present");
        }
        let scheme = self.scheme;
        for &u in hosts.iter().chain(internal.iter().map(|(_, b)| b)) {
            self.tree.set(u, scheme.weight(self.graph.deg(u)));
        }
        self.tree.push(scheme.weight(self.graph.deg(v.0)));
        Ok(v)
    }
}

fn next_step<R: Rng + ?Sized>(config: &GrowthConfig, rng: &mut R) -> Step {
    match config.model {
        Model::Ba => Step {
            hosts: config.m,
            peers: 0,
        },
        Model::Ig | Model::TestStar => {
            if rng.gen::<f64>() < config.p {
                Step { hosts: 1, peers: 2 }
            } else {
                Step { hosts: 2, peers: 1 }
            }
        }
        Model::Pfp => {
            let u = rng.gen::<f64>();
            if u < config.p {
                Step { hosts: 1, peers: 1 }
            } else if u < config.p + config.q {
                Step { hosts: 1, peers: 2 }
            } else {
                Step { hosts: 2, peers: 1 }
            }
        }
    }
}

fn run<R, F>(config: &GrowthConfig, rng: &mut R, mut observe: F) -> Result<GrowthRun>
where
    R: Rng + ?Sized,
    F: FnMut(&Graph, NodeId),
{
    config.validate()?;
    let seed = seed_network(config.seed_nodes, config.seed_extra_edges, rng)?;
    let mut engine = Engine::new(seed, config.scheme())?;
    let mut steps = 0;
    while engine.graph.node_count() < config.target_n {
        let step = next_step(config, rng);
        let v = engine.step(step, rng)?;
        steps += 1;
        observe(&engine.graph, v);
    }
    Ok(GrowthRun {
        graph: engine.graph,
        steps,
        skipped_links: engine.skipped,
    })
}

fn expect_model(config: &GrowthConfig, want: Model) -> Result<()> {
    if config.model == want {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "config is for model `{}`, expected `{want}`",
            config.model
        )))
    }
}

/// Barabási–Albert growth: each new node links to `m` distinct old nodes
/// drawn by linear preference.
pub fn grow_ba<R: Rng + ?Sized>(config: &GrowthConfig, rng: &mut R) -> Result<GrowthRun> {
    expect_model(config, Model::Ba)?;
    run(config, rng, |_, _| {})
}

/// Interactive growth with linear preference.
pub fn grow_ig<R: Rng + ?Sized>(config: &GrowthConfig, rng: &mut R) -> Result<GrowthRun> {
    expect_model(config, Model::Ig)?;
    run(config, rng, |_, _| {})
}

/// Interactive growth with the `k^alpha` kernel.
pub fn grow_test_star<R: Rng + ?Sized>(config: &GrowthConfig, rng: &mut R) -> Result<GrowthRun> {
    expect_model(config, Model::TestStar)?;
    run(config, rng, |_, _| {})
}

/// Positive-feedback preference model.
pub fn grow_pfp<R: Rng + ?Sized>(config: &GrowthConfig, rng: &mut R) -> Result<GrowthRun> {
    expect_model(config, Model::Pfp)?;
    run(config, rng, |_, _| {})
}

/// Runs whichever model the config selects.
pub fn grow<R: Rng + ?Sized>(config: &GrowthConfig, rng: &mut R) -> Result<GrowthRun> {
    run(config, rng, |_, _| {})
}

/// Grows a network with a fresh RNG seeded from `config.rng_seed`.
pub fn generate(config: &GrowthConfig) -> Result<GrowthRun> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.rng_seed);
    grow(config, &mut rng)
}

/// Grows the configured model while following every `watch_every`-th new
/// node (the first new node included), recording its degree after each step
/// from its birth onwards.
pub fn record_trajectories<R: Rng + ?Sized>(
    config: &GrowthConfig,
    watch_every: usize,
    rng: &mut R,
) -> Result<(GrowthRun, Vec<DegreeTrajectory>)> {
    if watch_every == 0 {
        return Err(Error::InvalidParameter("watch_every must be >= 1".into()));
    }
    let mut born = 0usize;
    let mut tracks: Vec<DegreeTrajectory> = Vec::new();
    let grown = run(config, rng, |g, v| {
        if born.is_multiple_of(watch_every) {
            tracks.push(DegreeTrajectory {
                node: v.0,
                samples: Vec::new(),
            });
        }
        born += 1;
        let size = g.node_count();
        for t in &mut tracks {
            t.samples.push((size, g.deg(t.node)));
        }
    })?;
    Ok((grown, tracks))
}
