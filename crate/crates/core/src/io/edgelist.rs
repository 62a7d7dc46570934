use std::collections::HashMap;
use std::io::{BufRead, Write};

use log::warn;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReadMode {
    /// Self-loops and duplicate edges are errors.
    #[default]
    Strict,
    /// Self-loops and duplicate edges are dropped and counted.
    Lenient,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ReadSummary {
    pub edges: usize,
    pub self_loops_skipped: usize,
    pub duplicates_skipped: usize,
}

fn parse_line(line: &str, lineno: usize) -> Result<Option<(&str, &str)>> {
    let trimmed = line.trim();
    if trimmed.is_empty() || trimmed.starts_with('#') {
        return Ok(None);
    }
    let mut tokens = trimmed.split_whitespace();
    match (tokens.next(), tokens.next(), tokens.next()) {
        (Some(a), Some(b), None) => Ok(Some((a, b))),
        _ => Err(Error::Parse {
            line: lineno,
            message: format!("expected two node ids, got `{trimmed}`"),
        }),
    }
}

fn parse_id<T: std::str::FromStr>(token: &str, lineno: usize) -> Result<T> {
    token.parse().map_err(|_| Error::Parse {
        line: lineno,
        message: if token.starts_with('-') && token[1..].chars().all(|c| c.is_ascii_digit()) {
            format!("negative node id `{token}`")
        } else {
            format!("`{token}` is not a non-negative integer node id")
        },
    })
}

fn build<R: BufRead, F>(reader: R, mode: ReadMode, mut id: F) -> Result<(Graph, ReadSummary)>
where
    F: FnMut(&str, usize) -> Result<usize>,
{
    let mut pairs = Vec::new();
    let mut max_id = None;
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        if let Some((a, b)) = parse_line(&line, lineno)? {
            let u = id(a, lineno)?;
            let v = id(b, lineno)?;
            max_id = max_id.max(Some(u.max(v)));
            pairs.push((u, v, lineno));
        }
    }
    let mut g = Graph::with_nodes(max_id.map_or(0, |m| m + 1));
    let mut summary = ReadSummary::default();
    for (u, v, lineno) in pairs {
        if u == v {
            match mode {
                ReadMode::Strict => {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("self-loop on node {u}"),
                    })
                }
                ReadMode::Lenient => summary.self_loops_skipped += 1,
            }
            continue;
        }
        if g.add_edge(NodeId(u), NodeId(v))? {
            summary.edges += 1;
        } else {
            match mode {
                ReadMode::Strict => {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("duplicate edge {u}-{v}"),
                    })
                }
                ReadMode::Lenient => summary.duplicates_skipped += 1,
            }
        }
    }
    if summary.self_loops_skipped + summary.duplicates_skipped > 0 {
        warn!(
            "skipped {} self-loops and {} duplicate edges",
            summary.self_loops_skipped, summary.duplicates_skipped
        );
    }
    Ok((g, summary))
}

/// Reads whitespace-separated `u v` lines with dense integer ids. The node
/// count is one more than the largest id seen. `#` lines and blank lines are
/// ignored.
pub fn read_edge_list<R: BufRead>(reader: R, mode: ReadMode) -> Result<(Graph, ReadSummary)> {
    build(reader, mode, parse_id::<usize>)
}

/// Bridge between sparse external identifiers (AS numbers) and dense ids.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct IdMapping {
    external: Vec<u64>,
    dense: HashMap<u64, usize>,
}

impl IdMapping {
    pub fn len(&self) -> usize {
        self.external.len()
    }

    pub fn is_empty(&self) -> bool {
        self.external.is_empty()
    }

    pub fn intern(&mut self, external: u64) -> usize {
        if let Some(&d) = self.dense.get(&external) {
            return d;
        }
        let d = self.external.len();
        self.external.push(external);
        self.dense.insert(external, d);
        d
    }

    pub fn dense_id(&self, external: u64) -> Option<usize> {
        self.dense.get(&external).copied()
    }

    pub fn external_id(&self, dense: usize) -> Option<u64> {
        self.external.get(dense).copied()
    }

    /// Two columns per line: `external dense`.
    pub fn write<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "# external dense")?;
        for (d, e) in self.external.iter().enumerate() {
            writeln!(out, "{e} {d}")?;
        }
        Ok(())
    }

    pub fn read<R: BufRead>(reader: R) -> Result<Self> {
        let mut rows = Vec::new();
        for (i, line) in reader.lines().enumerate() {
            let line = line?;
            if let Some((e, d)) = parse_line(&line, i + 1)? {
                rows.push((
                    parse_id::<u64>(e, i + 1)?,
                    parse_id::<usize>(d, i + 1)?,
                    i + 1,
                ));
            }
        }
        rows.sort_by_key(|r| r.1);
        let mut map = IdMapping::default();
        for (e, d, line) in rows {
            if d != map.len() || map.dense.contains_key(&e) {
                return Err(Error::Parse {
                    line,
                    message: format!("mapping `{e} {d}` is not a dense one-to-one assignment"),
                });
            }
            map.intern(e);
        }
        Ok(map)
    }
}

/// Reads an edge list whose ids are arbitrary non-negative integers,
/// assigning dense ids in order of first appearance.
pub fn read_edge_list_mapped<R: BufRead>(
    reader: R,
    mode: ReadMode,
) -> Result<(Graph, IdMapping, ReadSummary)> {
    let mut mapping = IdMapping::default();
    let (g, summary) = build(reader, mode, |tok, line| {
        Ok(mapping.intern(parse_id::<u64>(tok, line)?))
    })?;
    Ok((g, mapping, summary))
}

/// Writes each edge once as `u v` with `u < v`, lexicographically sorted,
/// after a comment header. `config_hash` identifies the generating config.
pub fn write_edge_list<W: Write>(g: &Graph, config_hash: Option<&str>, mut out: W) -> Result<()> {
    writeln!(out, "# nodes {} edges {}", g.node_count(), g.edge_count())?;
    if let Some(hash) = config_hash {
        writeln!(out, "# config-sha256 {hash}")?;
    }
    let mut buf = String::with_capacity(16 * g.edge_count());
    for (u, v) in g.edges() {
        use std::fmt::Write as _;
        let _ = writeln!(buf, "{u} {v}");
    }
    out.write_all(buf.as_bytes())?;
    out.flush()?;
    Ok(())
}
