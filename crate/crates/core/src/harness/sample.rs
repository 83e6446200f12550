//! Seeded random verification beyond the exhaustive range.
//!
//! Every cross-part pair is included independently with probability `p`.
//! Trials cycle through three densities chosen so that the expected minimum
//! degree sits at the floor, one above it and two above it; samples below
//! the floor are redrawn up to a fixed number of times.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::exhaustive::Judge;
use super::report::{RunKind, RunParameters, VerificationReport};
use super::{finalize, RunOptions};
use crate::arithmetic::{required_degree, theorem_threshold};
use crate::error::{Error, Result};
use crate::graph::KPartiteGraph;
use crate::solver::part_masks;

/// Redraws allowed per trial before it is reported as infeasible.
pub const MAX_RETRIES: u32 = 10_000;

const CHUNK: u64 = 256;

/// Approximate expected minimum of `n` binomial degrees with `d` trials.
fn expected_min_degree(n: usize, d: usize, p: f64) -> f64 {
    let mean = d as f64 * p;
    let sd = (d as f64 * p * (1.0 - p)).sqrt();
    mean - sd * (2.0 * (n as f64).ln()).sqrt()
}

/// Edge probabilities putting the expected minimum degree at
/// `floor`, `floor + 1` and `floor + 2`.
pub fn density_grid(n: usize, k: usize, floor: usize) -> Vec<f64> {
    let d = n - n / k;
    (0..3)
        .map(|step| {
            let target = (floor + step) as f64;
            if target >= d as f64 {
                return 1.0;
            }
            let (mut lo, mut hi) = (0.0f64, 1.0f64);
            for _ in 0..60 {
                let mid = (lo + hi) / 2.0;
                if expected_min_degree(n, d, mid) < target {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            hi
        })
        .collect()
}

fn draw(rng: &mut ChaCha8Rng, n: usize, m: usize, p: f64) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    for u in 0..n {
        for v in u + 1..n {
            if u / m != v / m && rng.random_bool(p) {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
    }
    adj
}

/// Runs `trials` seeded samples with minimum degree at least `floor`
/// (default: the required degree) and solves each one. Trial `t` uses
/// stream `t` of a ChaCha8 generator seeded with `seed`, so results do not
/// depend on the number of worker threads.
///
/// In the regime `k = n/2`, `4 | n`, non-Hamiltonian samples below the
/// required degree must belong to one of the three families.
pub fn sample_verify(
    n: usize,
    k: usize,
    trials: u64,
    seed: u64,
    floor: Option<usize>,
    opts: &RunOptions,
) -> Result<VerificationReport> {
    let required = required_degree(n, k)?.max(0) as usize;
    if n > 64 {
        return Err(Error::GuardExceeded { what: "sampled verification", n, limit: 64 });
    }
    let start = std::time::Instant::now();
    let m = n / k;
    let floor = floor.unwrap_or(required);
    if floor > n - m {
        return Err(Error::InvalidParameters(format!("degree floor {floor} exceeds the maximum degree {}", n - m)));
    }
    let grid = density_grid(n, k, floor);
    let classify = n == 2 * k && n.is_multiple_of(4) && n <= crate::constructions::RECOGNIZE_LIMIT;
    let judge = Judge { n, k, required, classify };
    let parts = part_masks(&KPartiteGraph::with_block_parts(n, k, &[])?);
    let params = RunParameters {
        n: Some(n),
        k: Some(k),
        degree_floor: Some(floor),
        threshold: Some(theorem_threshold(n, k)?),
        required_degree: Some(required as i64),
        seed: Some(seed),
        trials: Some(trials),
        ..RunParameters::default()
    };
    let chunk = |c: u64| {
        let mut rep = VerificationReport::new(RunKind::Sample, RunParameters::default());
        let mut exhausted = 0u64;
        for t in c * CHUNK..((c + 1) * CHUNK).min(trials) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t);
            let p = grid[(t % 3) as usize];
            let accepted = (0..MAX_RETRIES)
                .map(|_| draw(&mut rng, n, m, p))
                .find(|adj| adj.iter().all(|r| r.count_ones() as usize >= floor));
            match accepted {
                Some(adj) => judge.examine(&adj, &parts, &mut rep),
                None => exhausted += 1,
            }
        }
        (rep, exhausted)
    };
    let chunks = trials.div_ceil(CHUNK);
    let partials: Vec<(VerificationReport, u64)> = if opts.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .map_err(|e| Error::InvalidParameters(format!("thread pool: {e}")))?;
        pool.install(|| (0..chunks).into_par_iter().map(chunk).collect())
    } else {
        (0..chunks).map(chunk).collect()
    };
    let mut exhausted = 0;
    let mut rep = VerificationReport::new(RunKind::Sample, params);
    for (part, e) in partials {
        rep = rep.merge(part);
        exhausted += e;
    }
    if exhausted > 0 {
        rep.notes.push(format!("{exhausted} trials found no graph above the floor within {MAX_RETRIES} draws"));
    }
    Ok(finalize(rep, opts, start))
}
