//! Follows every 50th arrival while the network grows and prints the three
//! that end with the highest degree, next to the largest degree in the whole
//! network. Under positive feedback the seed core keeps almost all of the
//! advantage, so even the best later arrivals stay small.
//!
//! ```bash
//! cargo run --release --example degree_trajectories
//! ```

use astopo::generators::{record_trajectories, GrowthConfig, Model};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> astopo::Result<()> {
    let checkpoints = [100, 1000, 5000, 11122];
    for model in [Model::Ig, Model::Pfp] {
        let cfg = GrowthConfig::defaults(model);
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
        let (run, mut tracks) = record_trajectories(&cfg, 50, &mut rng)?;
        tracks.sort_by_key(|t| std::cmp::Reverse(t.samples.last().map_or(0, |s| s.1)));
        println!("{model}: final max degree {}", run.graph.max_degree());
        for t in tracks.iter().take(3) {
            print!("  node {:>5}:", t.node);
            for size in checkpoints {
                match t.samples.iter().find(|s| s.0 == size) {
                    Some((_, k)) => print!(" k({size})={k:<6}"),
                    None => print!(" k({size})={:<6}", "-"),
                }
            }
            println!();
        }
    }
    Ok(())
}
