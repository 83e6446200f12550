//! The default `F` member for every `(k, m)` sits one below the threshold
//! and has no Hamiltonian cycle.

use super::report::{GraphRecord, RunKind, RunParameters, TightnessRow, VerificationReport};
use super::{finalize, RunOptions};
use crate::arithmetic::theorem_threshold;
use crate::constructions::{build_family_f, f_independent_size, FamilySpec};
use crate::error::{Error, Result};
use crate::graph::encode;
use crate::solver::{find_hamiltonian_cycle, NonHamWitness};

/// Largest `n` at which the scan also runs the exact solver.
pub const SOLVER_CONFIRM_LIMIT: usize = 12;

/// Checks one `(k, m)`; the graph is returned for failure reports.
pub fn tightness_row(k: usize, m: usize) -> Result<(TightnessRow, crate::graph::KPartiteGraph)> {
    let n = m * k;
    let g = build_family_f(k, m, None)?;
    let set = FamilySpec::F { k, m, sizes: None }.designated_independent_set()?.expect("F has a designated set");
    let threshold = theorem_threshold(n, k)?;
    let certificate_size = set.len();
    let certificate_valid = NonHamWitness::IndependentSetTooLarge { set }.check(&g);
    let solver_non_hamiltonian = (n <= SOLVER_CONFIRM_LIMIT).then(|| find_hamiltonian_cycle(&g).map(|c| c.is_none())).transpose()?;
    let min_degree = g.min_degree();
    let ok = min_degree as i64 == threshold - 1
        && certificate_valid
        && certificate_size == f_independent_size(n)
        && solver_non_hamiltonian != Some(false);
    Ok((TightnessRow { k, m, n, threshold, min_degree, certificate_size, certificate_valid, solver_non_hamiltonian, ok }, g))
}

/// Every `2 ≤ k ≤ k_max`, `1 ≤ m ≤ m_max` with `mk ≥ 3`.
pub fn tightness_scan(k_max: usize, m_max: usize, opts: &RunOptions) -> Result<VerificationReport> {
    if k_max < 2 || m_max < 1 {
        return Err(Error::InvalidParameters(format!("need k_max >= 2 and m_max >= 1, got {k_max}, {m_max}")));
    }
    let start = std::time::Instant::now();
    let params = RunParameters { k_max: Some(k_max), m_max: Some(m_max), ..RunParameters::default() };
    let mut rep = VerificationReport::new(RunKind::Tightness, params);
    for k in 2..=k_max {
        for m in 1..=m_max {
            if m * k < 3 {
                continue;
            }
            rep.counters.graphs_enumerated += 1;
            match tightness_row(k, m) {
                Ok((row, g)) => {
                    rep.counters.witnesses_found += u64::from(row.certificate_valid);
                    rep.counters.non_hamiltonian += u64::from(row.certificate_valid);
                    if row.solver_non_hamiltonian == Some(false) {
                        rep.counters.hamiltonian_found += 1;
                    }
                    if !row.ok {
                        rep.counterexamples.push(GraphRecord {
                            graph: encode(&g),
                            min_degree: row.min_degree,
                            witness: None,
                            classification: None,
                            note: Some(format!("k = {k}, m = {m}")),
                        });
                    }
                    rep.tightness.push(row);
                }
                Err(e) => {
                    rep.notes.push(format!("k = {k}, m = {m}: {e}"));
                    rep.self_check_passed = false;
                }
            }
        }
    }
    Ok(finalize(rep, opts, start))
}
