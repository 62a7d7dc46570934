//! Rich-club connectivity of each growth model at a few club sizes. Under
//! linear preference the best-connected nodes barely know each other; the
//! interactive models build a tight core.
//!
//! ```bash
//! cargo run --release --example rich_club
//! ```

use astopo::generators::{generate, GrowthConfig, Model};
use astopo::metrics::{club_size, rich_club};

fn main() -> astopo::Result<()> {
    let fractions = [0.001, 0.005, 0.01, 0.05, 0.1];
    print!("{:<6}", "model");
    for f in fractions {
        print!("{:>10}", format!("r/N={f}"));
    }
    println!();
    for model in [Model::Ba, Model::Ig, Model::TestStar, Model::Pfp] {
        let g = generate(&GrowthConfig::defaults(model))?.graph;
        let club = rich_club(&g)?;
        print!("{:<6}", model.to_string());
        for f in fractions {
            let r = club_size(g.node_count(), f);
            print!("{:>10.4}", club.points[r - 2].1);
        }
        println!();
    }
    Ok(())
}
