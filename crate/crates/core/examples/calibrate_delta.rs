//! Sweeps the positive-feedback strength and reports how the degree tail
//! responds, for picking a `delta` that matches a target maximum degree.
//!
//! ```bash
//! cargo run --release --example calibrate_delta -- [runs]
//! ```

use astopo::generators::{generate, GrowthConfig, Model};
use astopo::metrics::{degree_distribution, fit_powerlaw_gamma, phi_at, rich_club, FitWindow};

fn main() -> astopo::Result<()> {
    let runs: u64 = std::env::args()
        .nth(1)
        .map_or(5, |s| s.parse().expect("runs"));
    println!("{:>7} {:>9} {:>7} {:>7}", "delta", "k_max", "gamma", "phi");
    for delta in [0.0, 0.02, 0.04, 0.048, 0.06, 0.08, 0.1] {
        let (mut k_max, mut gamma, mut phi) = (0.0, 0.0, 0.0);
        for seed in 1..=runs {
            let mut cfg = GrowthConfig::defaults(Model::Pfp).with_seed(seed);
            cfg.delta = delta;
            let g = generate(&cfg)?.graph;
            let (_, ccdf) = degree_distribution(&g);
            let w = FitWindow::default_for(&g);
            k_max += g.max_degree() as f64;
            gamma += fit_powerlaw_gamma(&ccdf, w.k_min, w.k_upper)?;
            phi += phi_at(&rich_club(&g)?, g.node_count(), 0.01);
        }
        let r = runs as f64;
        println!(
            "{delta:>7} {:>9.1} {:>7.3} {:>7.3}",
            k_max / r,
            gamma / r,
            phi / r
        );
    }
    Ok(())
}
