//! Exhaustive enumeration of balanced k-partite graphs above a degree floor.
//!
//! The partition is fixed to block parts. Cross-part pairs are listed in
//! lexicographic order and decided one at a time, exclusion first, so the
//! enumeration runs through the edge-subset counter in increasing order with
//! pair 0 as the most significant bit. A subtree is skipped as soon as some
//! vertex cannot reach the floor even with every remaining pair included.

use rayon::prelude::*;

use super::report::{GraphRecord, RunKind, RunParameters, Shard, VerificationReport};
use super::{finalize, RunOptions};
use crate::arithmetic::{required_degree, theorem_threshold};
use crate::constructions::{recognize, FamilyMatch};
use crate::error::{Error, Result};
use crate::graph::{bits, encode, KPartiteGraph};
use crate::solver::{non_hamiltonicity_witness, part_masks, HamSearch};

pub(crate) struct Enumerator {
    n: usize,
    floor: usize,
    pairs: Vec<(usize, usize)>,
    // rem[i][v]: pairs at index >= i that contain v.
    rem: Vec<Vec<usize>>,
}

impl Enumerator {
    pub(crate) fn new(n: usize, k: usize, floor: usize) -> Self {
        let m = n / k;
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| u / m != v / m)
            .collect();
        let mut rem = vec![vec![0; n]; pairs.len() + 1];
        for i in (0..pairs.len()).rev() {
            rem[i] = rem[i + 1].clone();
            rem[i][pairs[i].0] += 1;
            rem[i][pairs[i].1] += 1;
        }
        Self { n, floor, pairs, rem }
    }

    pub(crate) fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    /// Visits every graph in the shard whose minimum degree reaches the
    /// floor, in enumeration order.
    pub(crate) fn run(&self, shard: Shard, visit: &mut dyn FnMut(&[u64])) {
        let s = shard.bits() as usize;
        let mut adj = vec![0u64; self.n];
        let mut deg = vec![0usize; self.n];
        for i in 0..s {
            if shard.index >> (s - 1 - i) & 1 == 1 {
                let (u, v) = self.pairs[i];
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        if (0..self.n).any(|v| deg[v] + self.rem[s][v] < self.floor) {
            return;
        }
        self.dfs(s, &mut adj, &mut deg, visit);
    }

    fn dfs(&self, i: usize, adj: &mut [u64], deg: &mut [usize], visit: &mut dyn FnMut(&[u64])) {
        if i == self.pairs.len() {
            visit(adj);
            return;
        }
        let (u, v) = self.pairs[i];
        let next = &self.rem[i + 1];
        if deg[u] + next[u] >= self.floor && deg[v] + next[v] >= self.floor {
            self.dfs(i + 1, adj, deg, visit);
        }
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        deg[u] += 1;
        deg[v] += 1;
        self.dfs(i + 1, adj, deg, visit);
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        deg[u] -= 1;
        deg[v] -= 1;
    }
}

pub(crate) fn words_to_graph(n: usize, k: usize, adj: &[u64]) -> KPartiteGraph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| bits(adj[u]).filter(move |&v| v > u).map(move |v| (u, v)))
        .collect();
    KPartiteGraph::with_block_parts(n, k, &edges).expect("enumerated graphs respect the partition")
}

/// How a non-Hamiltonian graph is judged.
#[derive(Clone, Copy)]
pub(crate) struct Judge {
    pub n: usize,
    pub k: usize,
    pub required: usize,
    /// Classify graphs below the required degree; unclassified ones count
    /// as counterexamples.
    pub classify: bool,
}

impl Judge {
    /// Solves one graph and records the outcome in `rep`.
    pub(crate) fn examine(&self, adj: &[u64], parts: &[u64], rep: &mut VerificationReport) {
        let delta = adj.iter().map(|r| r.count_ones() as usize).min().unwrap_or(0);
        rep.counters.graphs_enumerated += 1;
        if delta >= self.required {
            rep.counters.graphs_above_threshold += 1;
        }
        if HamSearch::new(adj, parts).run().is_some() {
            rep.counters.hamiltonian_found += 1;
            return;
        }
        rep.counters.non_hamiltonian += 1;
        let g = words_to_graph(self.n, self.k, adj);
        let witness = non_hamiltonicity_witness(&g);
        if witness.as_ref().is_some_and(|w| w.check(&g)) {
            rep.counters.witnesses_found += 1;
        }
        let above = delta >= self.required;
        let classification = (self.classify && !above).then(|| recognize(&g).unwrap_or(FamilyMatch::None));
        let record = GraphRecord { graph: encode(&g), min_degree: delta, witness, classification, note: None };
        if above || classification == Some(FamilyMatch::None) {
            rep.counterexamples.push(record);
        } else {
            if let Some(c) = classification {
                *rep.classification_counts.entry(format!("{c:?}")).or_default() += 1;
            }
            rep.exceptional.push(record);
        }
    }
}

pub(crate) fn check_shard(shard: Shard, pairs: usize) -> Result<()> {
    if shard.count == 0 || !shard.count.is_power_of_two() {
        return Err(Error::InvalidParameters(format!("shard count {} is not a power of two", shard.count)));
    }
    if shard.index >= shard.count {
        return Err(Error::InvalidParameters(format!("shard index {} out of range 0..{}", shard.index, shard.count)));
    }
    if shard.bits() as usize > pairs {
        return Err(Error::InvalidParameters(format!("{} shards exceed the {pairs} edge pairs", shard.count)));
    }
    Ok(())
}

/// Runs the enumeration of `shard`, split further into sub-shards across
/// `opts.jobs` worker threads, and merges the partial reports.
pub(crate) fn run_enumeration(
    e: &Enumerator,
    judge: Judge,
    shard: Shard,
    opts: &RunOptions,
    base: VerificationReport,
) -> Result<VerificationReport> {
    check_shard(shard, e.pair_count())?;
    let parts: Vec<u64> = {
        let g = KPartiteGraph::with_block_parts(judge.n, judge.k, &[])?;
        part_masks(&g)
    };
    let s = shard.bits() as usize;
    let extra = if opts.jobs > 1 {
        (opts.jobs.next_power_of_two().trailing_zeros() as usize + 4).min(e.pair_count() - s)
    } else {
        0
    };
    let subs: Vec<Shard> = (0..1u64 << extra)
        .map(|j| Shard { index: shard.index << extra | j, count: shard.count << extra })
        .collect();
    let work = |sub: &Shard| {
        let mut rep = VerificationReport::new(base.kind, RunParameters::default());
        e.run(*sub, &mut |adj| judge.examine(adj, &parts, &mut rep));
        rep
    };
    let partials: Vec<VerificationReport> = if opts.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::InvalidParameters(format!("thread pool: {e}")))?;
        pool.install(|| subs.par_iter().map(work).collect())
    } else {
        subs.iter().map(work).collect()
    };
    Ok(partials.into_iter().fold(base, VerificationReport::merge))
}

fn guard(n: usize, opts: &RunOptions) -> Result<()> {
    let limit = opts.exhaustive_limit();
    if n > limit {
        return Err(Error::GuardExceeded { what: "exhaustive enumeration", n, limit });
    }
    Ok(())
}

/// Enumerates every graph on the block partition with minimum degree at
/// least `floor` (default: the required degree) and solves each one.
///
/// A non-Hamiltonian graph is a counterexample when its minimum degree
/// reaches the required degree; below that it is listed as exceptional.
pub fn exhaustive_verify(
    n: usize,
    k: usize,
    floor: Option<usize>,
    shard: Option<Shard>,
    opts: &RunOptions,
) -> Result<VerificationReport> {
    let required = required_degree(n, k)?.max(0) as usize;
    guard(n, opts)?;
    let start = std::time::Instant::now();
    let floor = floor.unwrap_or(required);
    let e = Enumerator::new(n, k, floor);
    let shard = shard.unwrap_or(Shard::WHOLE);
    let params = RunParameters {
        n: Some(n),
        k: Some(k),
        degree_floor: Some(floor),
        threshold: Some(theorem_threshold(n, k)?),
        required_degree: Some(required as i64),
        edge_pairs: Some(e.pair_count()),
        shard: (shard != Shard::WHOLE).then_some(shard),
        ..RunParameters::default()
    };
    let base = VerificationReport::new(RunKind::Exhaustive, params);
    let judge = Judge { n, k, required, classify: false };
    let rep = run_enumeration(&e, judge, shard, opts, base)?;
    Ok(finalize(rep, opts, start))
}

/// Enumerates every graph with `n = 2k`, `4 | n` and minimum degree at least
/// `n/2 − 1`; each non-Hamiltonian one must belong to one of the three
/// families.
pub fn characterization_check(n: usize, k: usize, shard: Option<Shard>, opts: &RunOptions) -> Result<VerificationReport> {
    if n != 2 * k || !n.is_multiple_of(4) || n < 8 {
        return Err(Error::InvalidParameters(format!(
            "characterization needs n = 2k with 4 | n and n >= 8, got n = {n}, k = {k}"
        )));
    }
    let limit = if opts.long_run { 12 } else { 8 };
    if n > limit {
        return Err(Error::GuardExceeded { what: "characterization", n, limit });
    }
    let required = required_degree(n, k)? as usize;
    let start = std::time::Instant::now();
    let floor = n / 2 - 1;
    let e = Enumerator::new(n, k, floor);
    let shard = shard.unwrap_or(Shard::WHOLE);
    let params = RunParameters {
        n: Some(n),
        k: Some(k),
        degree_floor: Some(floor),
        threshold: Some(theorem_threshold(n, k)?),
        required_degree: Some(required as i64),
        edge_pairs: Some(e.pair_count()),
        shard: (shard != Shard::WHOLE).then_some(shard),
        ..RunParameters::default()
    };
    let base = VerificationReport::new(RunKind::Characterization, params);
    let judge = Judge { n, k, required, classify: true };
    let rep = run_enumeration(&e, judge, shard, opts, base)?;
    Ok(finalize(rep, opts, start))
}
