//! Certificates that a graph has no Hamiltonian cycle.

use serde::{Deserialize, Serialize};

use super::{search_hamiltonian, SolverLimits};
use crate::graph::{
    components_without, cut_vertex, is_connected, is_independent, maximum_independent_set, KPartiteGraph, VertexSet,
};

/// Why a graph is not Hamiltonian.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NonHamWitness {
    /// An independent set with more than `n/2` vertices.
    IndependentSetTooLarge { set: Vec<usize> },
    /// A set `S` whose removal leaves more than `max(|S|, 1)` components.
    SmallCut { cut: Vec<usize> },
    /// An independent set `A` of exactly `n/2` vertices and a vertex outside
    /// it with at most one neighbour in `A`. A Hamiltonian cycle would have
    /// to alternate between `A` and the rest.
    BipartiteDegreeOne { side_a: Vec<usize>, vertex: usize },
    /// The exact search finished without a cycle.
    ExhaustiveSearch { nodes: u64 },
}

fn as_set(g: &KPartiteGraph, vs: &[usize]) -> Option<VertexSet> {
    let mut s = VertexSet::new(g.n());
    for &v in vs {
        if v >= g.n() || !s.insert(v) {
            return None;
        }
    }
    Some(s)
}

impl NonHamWitness {
    /// Checks the certificate against `g`.
    ///
    /// For `ExhaustiveSearch` this reruns the exact search, so it is only as
    /// independent as the solver itself.
    pub fn check(&self, g: &KPartiteGraph) -> bool {
        let n = g.n();
        if n < 3 {
            return true;
        }
        match self {
            Self::IndependentSetTooLarge { set } => {
                as_set(g, set).is_some_and(|s| 2 * s.len() > n && is_independent(g, &s))
            }
            Self::SmallCut { cut } => as_set(g, cut)
                .is_some_and(|s| s.len() < n && components_without(g, &s).len() > s.len().max(1)),
            Self::BipartiteDegreeOne { side_a, vertex } => as_set(g, side_a).is_some_and(|a| {
                2 * a.len() == n
                    && is_independent(g, &a)
                    && *vertex < n
                    && !a.contains(*vertex)
                    && g.neighbors(*vertex).intersection_len(&a) <= 1
            }),
            Self::ExhaustiveSearch { .. } => {
                search_hamiltonian(g, SolverLimits::default().hamiltonian).is_ok_and(|o| o.cycle.is_none())
            }
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Self::IndependentSetTooLarge { .. } => "independent_set_too_large",
            Self::SmallCut { .. } => "small_cut",
            Self::BipartiteDegreeOne { .. } => "bipartite_degree_one",
            Self::ExhaustiveSearch { .. } => "exhaustive_search",
        }
    }
}

/// Size guards for [`non_hamiltonicity_witness_with`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WitnessOptions {
    /// A candidate independent set, e.g. a family's designated set.
    pub hint: Option<Vec<usize>>,
    /// Largest `n` for the exact independence number (default 40).
    pub alpha_limit: Option<usize>,
    /// Largest `n` for the two-vertex cut scan (default 64).
    pub pair_cut_limit: Option<usize>,
    /// Largest `n` for the exhaustive fallback (default 24).
    pub search_limit: Option<usize>,
}

const PART_SEARCH_BUDGET: u64 = 1 << 18;

pub fn non_hamiltonicity_witness(g: &KPartiteGraph) -> Option<NonHamWitness> {
    non_hamiltonicity_witness_with(g, &WitnessOptions::default())
}

/// Tries, in order: the hinted independent set, a cut of size at most one, an oversized independent
/// set, an `n/2` independent union of parts with a poorly attached vertex,
/// a two-vertex cut with three components, and exhaustive search.
///
/// Returns `None` when `g` is Hamiltonian or when nothing was found within
/// the size guards.
pub fn non_hamiltonicity_witness_with(g: &KPartiteGraph, opts: &WitnessOptions) -> Option<NonHamWitness> {
    let n = g.n();
    if n < 3 {
        return None;
    }
    if let Some(hint) = &opts.hint {
        let w = NonHamWitness::IndependentSetTooLarge { set: hint.clone() };
        if w.check(g) {
            return Some(w);
        }
    }
    if !is_connected(g) {
        return Some(NonHamWitness::SmallCut { cut: Vec::new() });
    }
    if let Some(v) = cut_vertex(g) {
        return Some(NonHamWitness::SmallCut { cut: vec![v] });
    }
    if n <= opts.alpha_limit.unwrap_or(40).min(64) {
        let s = maximum_independent_set(g, 64).expect("guarded");
        if 2 * s.len() > n {
            return Some(NonHamWitness::IndependentSetTooLarge { set: s.to_vec() });
        }
    }
    if let Some(w) = bipartite_degree_one(g) {
        return Some(w);
    }
    if n <= opts.pair_cut_limit.unwrap_or(64) {
        for u in 0..n {
            for v in u + 1..n {
                let cut = vec![u, v];
                if components_without(g, &g.vertex_set([u, v])).len() > 2 {
                    return Some(NonHamWitness::SmallCut { cut });
                }
            }
        }
    }
    if n <= opts.search_limit.unwrap_or(24).min(64) {
        let out = search_hamiltonian(g, 64).expect("guarded");
        if out.cycle.is_none() {
            return Some(NonHamWitness::ExhaustiveSearch { nodes: out.nodes });
        }
    }
    None
}

/// Looks for an independent union of `k/2` parts with a vertex outside it
/// that has at most one neighbour inside.
fn bipartite_degree_one(g: &KPartiteGraph) -> Option<NonHamWitness> {
    let k = g.k();
    if !k.is_multiple_of(2) || k > 64 {
        return None;
    }
    // Part-level adjacency: parts joined by at least one edge.
    let mut padj = vec![0u64; k];
    for (u, v) in g.edges() {
        let (a, b) = (g.part_of(u), g.part_of(v));
        padj[a] |= 1 << b;
        padj[b] |= 1 << a;
    }
    let mut budget = PART_SEARCH_BUDGET;
    let mut chosen = Vec::with_capacity(k / 2);
    search_parts(g, &padj, 0, 0, &mut chosen, &mut budget)
}

fn search_parts(
    g: &KPartiteGraph,
    padj: &[u64],
    from: usize,
    blocked: u64,
    chosen: &mut Vec<usize>,
    budget: &mut u64,
) -> Option<NonHamWitness> {
    let k = g.k();
    if *budget == 0 {
        return None;
    }
    *budget -= 1;
    if chosen.len() == k / 2 {
        let mut a = VertexSet::new(g.n());
        for &p in chosen.iter() {
            a.union_with(&g.part_set(p));
        }
        let vertex = (0..g.n()).find(|&b| !a.contains(b) && g.neighbors(b).intersection_len(&a) <= 1)?;
        return Some(NonHamWitness::BipartiteDegreeOne { side_a: a.to_vec(), vertex });
    }
    for p in from..k {
        if blocked >> p & 1 == 1 || k - p < k / 2 - chosen.len() {
            continue;
        }
        chosen.push(p);
        let found = search_parts(g, padj, p + 1, blocked | padj[p], chosen, budget);
        chosen.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}
