//! Reads an edge list (for instance a measured AS graph) and prints its
//! metrics report as JSON, followed by a comparison with the AS column.
//!
//! ```bash
//! cargo run --release --example analyze_edge_list -- as.edges
//! ```

use std::fs::File;
use std::io::BufReader;

use astopo::io::{read_edge_list, write_report, ReadMode, ReportFormat};
use astopo::metrics::{analyze, Exec};
use astopo::reference::{compare, Reference};

fn main() -> astopo::Result<()> {
    let path = std::env::args()
        .nth(1)
        .expect("usage: analyze_edge_list <edges>");
    let (g, summary) = read_edge_list(BufReader::new(File::open(&path)?), ReadMode::Lenient)?;
    if summary.duplicates_skipped + summary.self_loops_skipped > 0 {
        eprintln!(
            "skipped {} duplicate edges and {} self-loops",
            summary.duplicates_skipped, summary.self_loops_skipped
        );
    }
    let analysis = analyze(&g, None, Exec::Parallel)?;
    eprintln!(
        "power-law fit over {} <= k <= {}",
        analysis.fit.k_min, analysis.fit.k_upper
    );
    write_report(&analysis.report, ReportFormat::Json, std::io::stdout())?;
    let reference = Reference::builtin("as").expect("builtin");
    println!("{}", compare(&[analysis.report], &reference)?);
    Ok(())
}
