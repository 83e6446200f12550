//! Exact Hamiltonian-cycle search by depth-first path extension.
//!
//! The path grows from a fixed start vertex; every node of the search checks
//! three necessary conditions for the remaining path `end → U → start`:
//!
//! 1. every unvisited vertex keeps at least two usable neighbours;
//! 2. the unvisited vertices induce a connected graph;
//! 3. no part has more unvisited vertices than can sit pairwise
//!    non-consecutively on the remaining path.

use super::graph_words;
use crate::error::Result;
use crate::graph::{bits, low_mask, CycleCertificate, KPartiteGraph};

/// Result of one search, with the number of search nodes visited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamOutcome {
    pub cycle: Option<CycleCertificate>,
    pub nodes: u64,
}

/// Search context over packed adjacency (`n ≤ 64`).
pub(crate) struct HamSearch<'a> {
    adj: &'a [u64],
    // Parts with at least two vertices.
    parts: Vec<u64>,
    start: usize,
    path: Vec<usize>,
    pub(crate) nodes: u64,
}

fn connected_within(adj: &[u64], set: u64) -> bool {
    if set == 0 {
        return true;
    }
    let first = set.trailing_zeros() as usize;
    let mut seen = 1u64 << first;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= adj[v];
        }
        next &= set & !seen;
        seen |= next;
        frontier = next;
    }
    seen == set
}

impl<'a> HamSearch<'a> {
    pub(crate) fn new(adj: &'a [u64], part_masks: &[u64]) -> Self {
        Self {
            adj,
            parts: part_masks.iter().copied().filter(|p| p.count_ones() >= 2).collect(),
            start: 0,
            path: Vec::with_capacity(adj.len()),
            nodes: 0,
        }
    }

    /// Returns a Hamiltonian cycle as a vertex order, if one exists.
    pub(crate) fn run(&mut self) -> Option<Vec<usize>> {
        let n = self.adj.len();
        self.nodes = 0;
        if n < 3 {
            return None;
        }
        let all = low_mask(n);
        if self.adj.iter().any(|row| row.count_ones() < 2) || !connected_within(self.adj, all) {
            self.nodes = 1;
            return None;
        }
        // Fail-first: begin at a minimum-degree vertex, smallest id on ties.
        self.start = (0..n).min_by_key(|&v| (self.adj[v].count_ones(), v)).unwrap();
        self.path.clear();
        self.path.push(self.start);
        if self.extend(self.start, all & !(1 << self.start)) {
            Some(self.path.clone())
        } else {
            None
        }
    }

    fn feasible(&self, end: usize, unvisited: u64) -> bool {
        let adj = self.adj;
        let start_bit = 1u64 << self.start;
        let end_bit = 1u64 << end;
        if adj[end] & unvisited == 0 || adj[self.start] & unvisited == 0 {
            return false;
        }
        let usable = unvisited | start_bit | end_bit;
        for u in bits(unvisited) {
            if (adj[u] & usable).count_ones() < 2 {
                return false;
            }
        }
        if !connected_within(adj, unvisited) {
            return false;
        }
        let r = unvisited.count_ones() as i64;
        for &p in &self.parts {
            let t = (p & unvisited).count_ones() as i64;
            if t == 0 {
                continue;
            }
            let slots = r - i64::from(p & end_bit != 0) - i64::from(p & start_bit != 0);
            if slots < 0 || t > (slots + 1) / 2 {
                return false;
            }
        }
        true
    }

    fn extend(&mut self, end: usize, unvisited: u64) -> bool {
        self.nodes += 1;
        let adj = self.adj;
        if unvisited == 0 {
            return adj[end] >> self.start & 1 == 1;
        }
        if !self.feasible(end, unvisited) {
            return false;
        }
        let usable = unvisited | 1 << self.start;
        let mut cands: Vec<(u32, usize)> = Vec::new();
        // A vertex with exactly two usable neighbours, one of them `end`,
        // has to come next.
        if end != self.start {
            let mut forced = None;
            for u in bits(adj[end] & unvisited) {
                if (adj[u] & (usable | 1 << end)).count_ones() == 2 {
                    if forced.is_some() {
                        return false;
                    }
                    forced = Some(u);
                }
            }
            if let Some(u) = forced {
                cands.push((0, u));
            }
        }
        if cands.is_empty() {
            cands = bits(adj[end] & unvisited).map(|u| ((adj[u] & usable).count_ones(), u)).collect();
            cands.sort_unstable();
        }
        for (_, u) in cands {
            self.path.push(u);
            if self.extend(u, unvisited & !(1 << u)) {
                return true;
            }
            self.path.pop();
        }
        false
    }
}

pub(crate) fn part_masks(g: &KPartiteGraph) -> Vec<u64> {
    g.parts().iter().map(|p| p.iter().fold(0u64, |m, &v| m | 1 << v)).collect()
}

/// Exact search with the number of search nodes.
pub fn search_hamiltonian(g: &KPartiteGraph, limit: usize) -> Result<HamOutcome> {
    let adj = graph_words(g, "Hamiltonian cycle search", limit)?;
    let parts = part_masks(g);
    let mut s = HamSearch::new(&adj, &parts);
    let cycle = s.run().map(CycleCertificate::new);
    Ok(HamOutcome { cycle, nodes: s.nodes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_within_masks() {
        let adj = [0b0010, 0b0101, 0b0010, 0b0000];
        assert!(connected_within(&adj, 0b0111));
        assert!(!connected_within(&adj, 0b1011));
        assert!(connected_within(&adj, 0));
    }

    #[test]
    fn part_bound_rejects_unbalanced_remainder() {
        // K_{3,2} as a graph: any cycle alternates, the three-vertex side
        // cannot be covered.
        let g = KPartiteGraph::general(5, &[(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        assert!(search_hamiltonian(&g, 64).unwrap().cycle.is_none());
    }
}
