//! Longest cycles by branch and bound over path extensions.
//!
//! Every cycle is found from its smallest vertex `s`, extending only through
//! vertices larger than `s`. The bound is the path length plus the number of
//! allowed vertices still reachable from the path's end.

use super::{graph_words, search_hamiltonian, SolverLimits};
use crate::error::{Error, Result};
use crate::graph::{bits, low_mask, CycleCertificate, KPartiteGraph};

fn reachable(adj: &[u64], from: usize, allowed: u64) -> u32 {
    let mut seen = 0u64;
    let mut frontier = adj[from] & allowed;
    while frontier != 0 {
        seen |= frontier;
        let mut next = 0;
        for v in bits(frontier) {
            next |= adj[v];
        }
        frontier = next & allowed & !seen;
    }
    seen.count_ones()
}

enum Goal {
    Best { len: usize, cycle: Vec<usize> },
    All { target: usize, found: Vec<Vec<usize>> },
}

struct Search<'a> {
    adj: &'a [u64],
    s: usize,
    path: Vec<usize>,
    goal: Goal,
}

impl Search<'_> {
    fn extend(&mut self, end: usize, allowed: u64) {
        let len = self.path.len();
        let closes = len >= 3 && self.adj[end] >> self.s & 1 == 1;
        match &mut self.goal {
            Goal::Best { len: best, cycle } => {
                if closes && len > *best {
                    *best = len;
                    cycle.clone_from(&self.path);
                }
                if len + reachable(self.adj, end, allowed) as usize <= *best {
                    return;
                }
            }
            Goal::All { target, found } => {
                // Each cycle is met twice, once per direction.
                if closes && len == *target && self.path[1] < self.path[len - 1] {
                    found.push(self.path.clone());
                }
                if len >= *target || len + (reachable(self.adj, end, allowed) as usize) < *target {
                    return;
                }
            }
        }
        for u in bits(self.adj[end] & allowed) {
            self.path.push(u);
            self.extend(u, allowed & !(1 << u));
            self.path.pop();
        }
    }
}

fn run(adj: &[u64], goal: Goal) -> Goal {
    let n = adj.len();
    let mut search = Search { adj, s: 0, path: Vec::with_capacity(n), goal };
    for s in 0..n {
        let remaining = n - s;
        let enough = match &search.goal {
            Goal::Best { len, .. } => remaining <= *len,
            Goal::All { target, .. } => remaining < *target,
        };
        if enough {
            break;
        }
        search.s = s;
        search.path.clear();
        search.path.push(s);
        let allowed = low_mask(n) & !low_mask(s + 1);
        search.extend(s, allowed);
    }
    search.goal
}

/// A longest cycle of `g`.
pub fn longest_cycle(g: &KPartiteGraph) -> Result<CycleCertificate> {
    longest_cycle_with(g, &SolverLimits::default())
}

pub fn longest_cycle_with(g: &KPartiteGraph, limits: &SolverLimits) -> Result<CycleCertificate> {
    let adj = graph_words(g, "longest cycle search", limits.longest)?;
    if let Some(c) = search_hamiltonian(g, limits.longest)?.cycle {
        return Ok(c);
    }
    match run(&adj, Goal::Best { len: 0, cycle: Vec::new() }) {
        Goal::Best { len: 0, .. } => Err(Error::Acyclic),
        Goal::Best { cycle, .. } => Ok(CycleCertificate::new(cycle)),
        Goal::All { .. } => unreachable!(),
    }
}

/// All longest cycles, each once up to rotation and reflection, in
/// canonical form and sorted. Empty for acyclic graphs.
pub fn enumerate_longest_cycles(g: &KPartiteGraph) -> Result<Vec<CycleCertificate>> {
    enumerate_longest_cycles_with(g, &SolverLimits::default())
}

pub fn enumerate_longest_cycles_with(g: &KPartiteGraph, limits: &SolverLimits) -> Result<Vec<CycleCertificate>> {
    let adj = graph_words(g, "longest cycle enumeration", limits.enumerate)?;
    let target = match longest_cycle_with(g, &SolverLimits { longest: limits.enumerate, ..*limits }) {
        Ok(c) => c.len(),
        Err(Error::Acyclic) => return Ok(Vec::new()),
        Err(e) => return Err(e),
    };
    let Goal::All { found, .. } = run(&adj, Goal::All { target, found: Vec::new() }) else {
        unreachable!()
    };
    let mut out: Vec<CycleCertificate> = found.into_iter().map(|c| CycleCertificate::new(c).canonical()).collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k22_longest_is_four() {
        let g = KPartiteGraph::complete_multipartite(4, 2).unwrap();
        assert_eq!(longest_cycle(&g).unwrap().len(), 4);
    }

    #[test]
    fn triangle_with_pendant() {
        let g = KPartiteGraph::general(4, &[(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let c = longest_cycle(&g).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(enumerate_longest_cycles(&g).unwrap().len(), 1);
    }

    #[test]
    fn acyclic_input_errors() {
        let g = KPartiteGraph::general(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(longest_cycle(&g), Err(Error::Acyclic));
        assert!(enumerate_longest_cycles(&g).unwrap().is_empty());
    }

    #[test]
    fn cycle_counts() {
        let c6 = KPartiteGraph::general(6, &(0..6).map(|i| (i, (i + 1) % 6)).collect::<Vec<_>>()).unwrap();
        assert_eq!(enumerate_longest_cycles(&c6).unwrap().len(), 1);
        let k4 = KPartiteGraph::complete_multipartite(4, 4).unwrap();
        assert_eq!(enumerate_longest_cycles(&k4).unwrap().len(), 3);
        let k5 = KPartiteGraph::complete_multipartite(5, 5).unwrap();
        assert_eq!(enumerate_longest_cycles(&k5).unwrap().len(), 12);
    }

    #[test]
    fn non_hamiltonian_longest() {
        // Two triangles sharing vertex 2: longest cycle is a triangle.
        let g = KPartiteGraph::general(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert_eq!(longest_cycle(&g).unwrap().len(), 3);
        assert_eq!(enumerate_longest_cycles(&g).unwrap().len(), 2);
    }
}
