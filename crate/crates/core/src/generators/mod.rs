//! Seed networks, attachment kernels, weighted sampling and the growth models.

mod config;
mod growth;
mod kernel;
mod sampler;
mod seed;

pub use config::{
    parse_kv, GrowthConfig, Model, DEFAULT_RNG_SEED, DEFAULT_SEED_EXTRA_EDGES, DEFAULT_SEED_NODES,
    DEFAULT_TARGET_N,
};
pub use growth::{
    generate, grow, grow_ba, grow_ig, grow_pfp, grow_test_star, record_trajectories,
    DegreeTrajectory, GrowthRun,
};
pub use kernel::{preference_weight, PreferenceScheme};
pub use sampler::{sample_distinct, WeightTree};
pub use seed::seed_network;
