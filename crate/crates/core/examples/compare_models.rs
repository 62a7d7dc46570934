//! Grows several networks per model at the reference size, averages their
//! metrics and checks each model against its reference column.
//!
//! ```bash
//! cargo run --release -p astopo --example compare_models -- [runs] [n]
//! ```

use astopo::generators::{generate, GrowthConfig, Model};
use astopo::metrics::{analyze, Exec};
use astopo::reference::{compare, Reference};
use rayon::prelude::*;

fn main() -> astopo::Result<()> {
    let mut args = std::env::args().skip(1);
    let runs: u64 = args.next().map_or(10, |s| s.parse().expect("runs"));
    let n: usize = args.next().map_or(11122, |s| s.parse().expect("n"));

    for (model, reference) in [
        (Model::Pfp, "pfp"),
        (Model::Ig, "ig"),
        (Model::Ba, "ba"),
        (Model::TestStar, "as"),
    ] {
        let start = std::time::Instant::now();
        let reports = (0..runs)
            .into_par_iter()
            .map(|seed| {
                let cfg = GrowthConfig::defaults(model)
                    .with_target_n(n)
                    .with_seed(seed + 1);
                let g = generate(&cfg)?.graph;
                Ok(analyze(&g, None, Exec::Parallel)?.report)
            })
            .collect::<astopo::Result<Vec<_>>>()?;
        let cmp = compare(&reports, &Reference::builtin(reference).unwrap())?;
        println!("== {model} ({:.1?})\n{cmp}\n", start.elapsed());
    }
    Ok(())
}
