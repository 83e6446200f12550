//! Exact cycle searches and non-Hamiltonicity certificates.

mod hamiltonian;
mod longest;
mod witness;

pub use hamiltonian::{search_hamiltonian, HamOutcome};
pub(crate) use hamiltonian::{part_masks, HamSearch};
pub use longest::{enumerate_longest_cycles, enumerate_longest_cycles_with, longest_cycle, longest_cycle_with};
pub use witness::{non_hamiltonicity_witness, non_hamiltonicity_witness_with, NonHamWitness, WitnessOptions};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{CycleCertificate, KPartiteGraph};

/// Size guards for the exact searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverLimits {
    /// Largest `n` for [`find_hamiltonian_cycle`]. At most 64.
    pub hamiltonian: usize,
    /// Largest `n` for [`longest_cycle`].
    pub longest: usize,
    /// Largest `n` for [`enumerate_longest_cycles`].
    pub enumerate: usize,
}

impl Default for SolverLimits {
    fn default() -> Self {
        Self { hamiltonian: 64, longest: 24, enumerate: 16 }
    }
}

pub(crate) fn graph_words(g: &KPartiteGraph, what: &'static str, limit: usize) -> Result<Vec<u64>> {
    let limit = limit.min(64);
    if g.n() > limit {
        return Err(Error::GuardExceeded { what, n: g.n(), limit });
    }
    Ok(g.adjacency_words().expect("n <= 64"))
}

/// A Hamiltonian cycle of `g`, or `None` if there is none.
pub fn find_hamiltonian_cycle(g: &KPartiteGraph) -> Result<Option<CycleCertificate>> {
    find_hamiltonian_cycle_with(g, &SolverLimits::default())
}

pub fn find_hamiltonian_cycle_with(g: &KPartiteGraph, limits: &SolverLimits) -> Result<Option<CycleCertificate>> {
    Ok(search_hamiltonian(g, limits.hamiltonian)?.cycle)
}

/// True iff `cert` lists at least three distinct vertices of `g`, each
/// adjacent to the next and the last adjacent to the first.
pub fn verify_cycle(g: &KPartiteGraph, cert: &CycleCertificate) -> bool {
    let vs = &cert.vertices;
    if vs.len() < 3 || vs.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &v in vs {
        if std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    (0..vs.len()).all(|i| g.has_edge(vs[i], vs[(i + 1) % vs.len()]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle_graph(n: usize) -> KPartiteGraph {
        KPartiteGraph::general(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn octahedron_is_hamiltonian() {
        let g = KPartiteGraph::complete_multipartite(6, 3).unwrap();
        let c = find_hamiltonian_cycle(&g).unwrap().unwrap();
        assert_eq!(c.len(), 6);
        assert!(verify_cycle(&g, &c));
    }

    #[test]
    fn cycle_graph_returns_itself() {
        for n in 3..10 {
            let g = cycle_graph(n);
            let c = find_hamiltonian_cycle(&g).unwrap().unwrap();
            assert!(verify_cycle(&g, &c));
            assert_eq!(c.canonical().vertices, (0..n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn path_is_not_hamiltonian() {
        let g = KPartiteGraph::general(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(find_hamiltonian_cycle(&g).unwrap().is_none());
    }

    #[test]
    fn verify_cycle_cases() {
        let g = KPartiteGraph::complete_multipartite(4, 2).unwrap();
        // Parts {0,1}, {2,3}.
        assert!(verify_cycle(&g, &CycleCertificate::new(vec![0, 2, 1, 3])));
        assert!(!verify_cycle(&g, &CycleCertificate::new(vec![0, 1, 2, 3])));
        assert!(!verify_cycle(&g, &CycleCertificate::new(vec![0, 2, 0, 3])));
        assert!(!verify_cycle(&g, &CycleCertificate::new(vec![0, 2])));
        assert!(!verify_cycle(&g, &CycleCertificate::new(vec![0, 2, 1, 7])));
    }

    #[test]
    fn guard_is_configurable() {
        let g = cycle_graph(10);
        let limits = SolverLimits { hamiltonian: 8, ..SolverLimits::default() };
        assert!(matches!(
            find_hamiltonian_cycle_with(&g, &limits),
            Err(Error::GuardExceeded { n: 10, limit: 8, .. })
        ));
    }
}
