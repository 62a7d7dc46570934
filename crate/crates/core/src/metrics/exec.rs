use std::ops::Range;

use rayon::prelude::*;

/// How per-source sweeps are executed. Both modes partition sources into the
/// same fixed chunks and merge chunk results in chunk order, so they produce
/// bit-identical output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Serial,
    #[default]
    Parallel,
}

pub(crate) const CHUNK: usize = 64;

/// Applies `f` to consecutive index ranges of length [`CHUNK`] covering
/// `0..n` and returns the results in range order.
pub(crate) fn map_chunks<T, F>(n: usize, exec: Exec, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Range<usize>) -> T + Sync,
{
    let ranges: Vec<Range<usize>> = (0..n)
        .step_by(CHUNK)
        .map(|start| start..(start + CHUNK).min(n))
        .collect();
    match exec {
        Exec::Serial => ranges.into_iter().map(&f).collect(),
        Exec::Parallel => ranges.into_par_iter().map(&f).collect(),
    }
}
