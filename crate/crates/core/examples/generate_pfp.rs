//! Grows one Positive-Feedback Preference network and writes its edge list.
//!
//! ```bash
//! cargo run --release --example generate_pfp -- pfp.edges [seed]
//! ```

use std::fs::File;
use std::io::BufWriter;

use astopo::generators::{generate, GrowthConfig, Model};
use astopo::io::write_edge_list;

fn main() -> astopo::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args.next().unwrap_or_else(|| "pfp.edges".into());
    let seed: u64 = args.next().map_or(1, |s| s.parse().expect("seed"));

    let cfg = GrowthConfig::defaults(Model::Pfp).with_seed(seed);
    let run = generate(&cfg)?;
    let g = &run.graph;
    write_edge_list(g, Some(&cfg.hash()), BufWriter::new(File::create(&path)?))?;

    println!("{}", cfg.to_kv_string());
    println!(
        "wrote {path}: {} nodes, {} links, max degree {}, {} internal links skipped",
        g.node_count(),
        g.edge_count(),
        g.max_degree(),
        run.skipped_links
    );
    Ok(())
}
