//! Verification runs producing JSON reports.

mod exhaustive;
mod report;
mod sample;
mod tightness;

pub use exhaustive::{characterization_check, exhaustive_verify};
pub use report::{
    Counters, GraphRecord, RunKind, RunParameters, Shard, TightnessRow, VerificationReport, SCHEMA_VERSION,
};
pub use sample::{density_grid, sample_verify, MAX_RETRIES};
pub use tightness::{tightness_row, tightness_scan, SOLVER_CONFIRM_LIMIT};

use std::collections::BTreeMap;

use crate::arithmetic::scan_all;
use crate::error::Result;
use crate::graph::{decode, encode, iso::canonical_form};
use crate::solver::find_hamiltonian_cycle;

/// Settings shared by all runs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOptions {
    /// Worker threads (default 1).
    pub jobs: usize,
    /// Record the wall time in the report.
    pub timing: bool,
    /// Most exceptional graphs listed; the rest are only counted.
    pub record_limit: usize,
    /// Keep one exceptional graph per isomorphism class (parts to parts).
    pub dedup: bool,
    /// Allow the long exhaustive runs (up to `n = 12`).
    pub long_run: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self { jobs: 1, timing: false, record_limit: 100_000, dedup: false, long_run: false }
    }
}

impl RunOptions {
    /// Largest `n` for exhaustive enumeration.
    pub fn exhaustive_limit(&self) -> usize {
        if self.long_run {
            12
        } else {
            9
        }
    }
}

/// Deduplicates and truncates listings, runs the self-check and stamps the
/// wall time if requested.
pub(crate) fn finalize(mut rep: VerificationReport, opts: &RunOptions, start: std::time::Instant) -> VerificationReport {
    if opts.dedup && !rep.exceptional.is_empty() {
        let mut by_form: BTreeMap<Vec<u8>, GraphRecord> = BTreeMap::new();
        for r in std::mem::take(&mut rep.exceptional) {
            let form = decode(&r.graph).ok().and_then(|g| canonical_form(&g).ok()).unwrap_or_default();
            by_form.entry(form).or_insert(r);
        }
        rep.distinct_exceptional = Some(by_form.len() as u64);
        rep.exceptional = by_form.into_values().collect();
        rep.exceptional.sort();
    }
    if rep.exceptional.len() > opts.record_limit {
        rep.exceptional_truncated += (rep.exceptional.len() - opts.record_limit) as u64;
        rep.exceptional.truncate(opts.record_limit);
    }
    rep.self_check_passed &= rep.counterexamples.iter().chain(&rep.exceptional).all(self_check);
    if opts.timing {
        rep.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    rep
}

/// Re-decodes a recorded non-Hamiltonian graph, checks the encoding is
/// stable, re-solves it and re-checks its witness.
fn self_check(r: &GraphRecord) -> bool {
    let Ok(g) = decode(&r.graph) else { return false };
    if encode(&g) != r.graph || g.min_degree() != r.min_degree {
        return false;
    }
    if r.witness.as_ref().is_some_and(|w| !w.check(&g)) {
        return false;
    }
    match find_hamiltonian_cycle(&g) {
        Ok(c) => c.is_none(),
        // Too large to re-solve: rely on the witness.
        Err(_) => r.witness.is_some(),
    }
}

/// Calls `visit` on every graph over the block partition of `(n, k)` in the
/// shard with minimum degree at least `floor`, in enumeration order.
/// With `k = n` this enumerates all labelled graphs on `n` vertices.
pub fn for_each_graph(
    n: usize,
    k: usize,
    floor: usize,
    shard: Shard,
    visit: &mut dyn FnMut(&crate::graph::KPartiteGraph),
) -> Result<()> {
    crate::graph::KPartiteGraph::with_block_parts(n, k, &[])?;
    if n > 64 {
        return Err(crate::Error::GuardExceeded { what: "graph enumeration", n, limit: 64 });
    }
    let e = exhaustive::Enumerator::new(n, k, floor);
    exhaustive::check_shard(shard, e.pair_count())?;
    e.run(shard, &mut |adj| visit(&exhaustive::words_to_graph(n, k, adj)));
    Ok(())
}

/// The arithmetic fact scans as a report.
pub fn facts_report(k_max: usize, m_max: usize, opts: &RunOptions) -> Result<VerificationReport> {
    let start = std::time::Instant::now();
    let facts = scan_all(k_max, m_max)?;
    let params = RunParameters { k_max: Some(k_max), m_max: Some(m_max), ..RunParameters::default() };
    let mut rep = VerificationReport::new(RunKind::Facts, params);
    rep.counters.graphs_enumerated = 0;
    rep.facts = Some(facts);
    Ok(finalize(rep, opts, start))
}
