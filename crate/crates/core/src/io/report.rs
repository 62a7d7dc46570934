use std::io::{BufRead, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::metrics::{DistributionSeries, MetricsReport, SeriesKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl ReportFormat {
    pub fn from_path(path: &Path) -> Result<Self> {
        match path.extension().and_then(|e| e.to_str()) {
            Some("json") => Ok(ReportFormat::Json),
            Some("csv") => Ok(ReportFormat::Csv),
            _ => Err(Error::Config(format!(
                "cannot infer report format of {}",
                path.display()
            ))),
        }
    }
}

/// Serializes a report under the fixed key set. Numbers use the shortest
/// representation that parses back to the same double.
pub fn write_report<W: Write>(
    report: &MetricsReport,
    format: ReportFormat,
    mut out: W,
) -> Result<()> {
    match format {
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut out, report)?;
            writeln!(out)?;
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.serialize(report)?;
            w.flush()?;
        }
    }
    out.flush()?;
    Ok(())
}

/// Reads every report in a stream: one JSON object, or one CSV row each.
pub fn read_reports<R: Read>(input: R, format: ReportFormat) -> Result<Vec<MetricsReport>> {
    match format {
        ReportFormat::Json => Ok(vec![serde_json::from_reader(input)?]),
        ReportFormat::Csv => {
            let mut r = csv::Reader::from_reader(input);
            let header = r.headers()?.clone();
            if header.iter().ne(MetricsReport::KEYS.iter().copied()) {
                return Err(Error::Config(format!(
                    "report header {:?} does not match the expected keys",
                    header.iter().collect::<Vec<_>>()
                )));
            }
            r.deserialize()
                .map(|row| row.map_err(Error::from))
                .collect()
        }
    }
}

/// Two-column `x y` rows after a `# kind` header.
pub fn write_series<W: Write>(series: &DistributionSeries, mut out: W) -> Result<()> {
    let mut buf = format!("# {}\n", series.kind);
    for (x, y) in &series.points {
        use std::fmt::Write as _;
        let _ = writeln!(buf, "{x} {y}");
    }
    out.write_all(buf.as_bytes())?;
    out.flush()?;
    Ok(())
}

pub fn read_series<R: BufRead>(input: R) -> Result<DistributionSeries> {
    let mut kind = None;
    let mut points = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        if let Some(rest) = t.strip_prefix('#') {
            if kind.is_none() {
                kind = Some(rest.trim().parse::<SeriesKind>()?);
            }
            continue;
        }
        let bad = || Error::Parse {
            line: i + 1,
            message: format!("expected `x y`, got `{t}`"),
        };
        let mut it = t.split_whitespace();
        let x: f64 = it.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        let y: f64 = it.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        points.push((x, y));
    }
    let kind = kind.ok_or_else(|| Error::Config("series has no `# kind` header".into()))?;
    Ok(DistributionSeries { kind, points })
}
