//! Degree conditions and cycle-structure predicates.

use serde::{Deserialize, Serialize};

use crate::arithmetic::half_parts;
use crate::error::{Error, Result};
use crate::graph::{is_independent, vertex_connectivity, BipartiteGraph, CycleCertificate, KPartiteGraph, VertexSet};
use crate::solver::{enumerate_longest_cycles_with, find_hamiltonian_cycle_with, verify_cycle, SolverLimits};

/// Chvátal's sufficient condition for a balanced bipartite graph with sides
/// `U` and `V` (`v_side` names `V`): with both degree sequences sorted
/// ascending, `d(v_t) ≤ t < n/2` implies `d(u_{n/2−t}) ≥ n/2 − t + 1`.
///
/// `true` means Hamiltonian; `false` means nothing.
pub fn chvatal_bipartite_condition(h: &BipartiteGraph, v_side: usize) -> Result<bool> {
    if v_side > 1 {
        return Err(Error::InvalidParameters(format!("side index must be 0 or 1, got {v_side}")));
    }
    if !h.is_balanced() {
        return Err(Error::InvalidVertexSets(format!(
            "sides have {} and {} vertices",
            h.side(0).len(),
            h.side(1).len()
        )));
    }
    let half = h.side(0).len();
    if half < 2 {
        return Err(Error::InvalidParameters("the condition needs n >= 4".into()));
    }
    let sorted = |s: usize| {
        let mut d: Vec<usize> = h.side(s).iter().map(|v| h.degree(v)).collect();
        d.sort_unstable();
        d
    };
    let (du, dv) = (sorted(1 - v_side), sorted(v_side));
    Ok((1..half).all(|t| dv[t - 1] > t || du[half - t - 1] > half - t))
}

fn outside_of(g: &KPartiteGraph, cycle: &CycleCertificate) -> VertexSet {
    let mut out = VertexSet::full(g.n());
    for &v in &cycle.vertices {
        out.remove(v);
    }
    out
}

/// The vertices off the cycle are independent and no two of their
/// neighbours are consecutive on the cycle.
pub fn is_strongly_dominating(g: &KPartiteGraph, cycle: &CycleCertificate) -> Result<bool> {
    if !verify_cycle(g, cycle) {
        return Err(Error::InvalidCycle("not a cycle of the graph".into()));
    }
    let out = outside_of(g, cycle);
    if !is_independent(g, &out) {
        return Ok(false);
    }
    let mut touched = VertexSet::new(g.n());
    for u in out.iter() {
        touched.union_with(g.neighbors(u));
    }
    let len = cycle.len();
    Ok((0..len).all(|i| !(touched.contains(cycle.vertices[i]) && touched.contains(cycle.successor(i)))))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "cycle", rename_all = "snake_case")]
pub enum DomCycleOutcome {
    Holds,
    NotApplicable,
    Violated(CycleCertificate),
}

/// In a 2-connected graph with `δ ≥ (n+2)/3`, every longest cycle should be
/// strongly dominating. Checks that claim on `g`.
pub fn check_domcycle_lemma(g: &KPartiteGraph) -> Result<DomCycleOutcome> {
    check_domcycle_lemma_with(g, &SolverLimits::default())
}

pub fn check_domcycle_lemma_with(g: &KPartiteGraph, limits: &SolverLimits) -> Result<DomCycleOutcome> {
    let n = g.n();
    if n > limits.enumerate {
        return Err(Error::GuardExceeded { what: "strongly dominating cycle check", n, limit: limits.enumerate });
    }
    if n < 3 || 3 * g.min_degree() < n + 2 || vertex_connectivity(g) < 2 {
        return Ok(DomCycleOutcome::NotApplicable);
    }
    if find_hamiltonian_cycle_with(g, limits)?.is_some() {
        return Ok(DomCycleOutcome::Holds);
    }
    for c in enumerate_longest_cycles_with(g, limits)? {
        if !is_strongly_dominating(g, &c)? {
            return Ok(DomCycleOutcome::Violated(c));
        }
    }
    Ok(DomCycleOutcome::Holds)
}

/// Successor and predecessor sets of a vertex `z` off a cycle, with flags
/// for the inequalities expected when the cycle is longest and the graph
/// meets the degree threshold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuccessorProfile {
    pub cycle: CycleCertificate,
    pub z: usize,
    /// Off-cycle vertices plus the successor of every cycle neighbour of `z`.
    pub s: Vec<usize>,
    /// Off-cycle vertices plus the predecessor of every cycle neighbour of `z`.
    pub r: Vec<usize>,
    /// Number of parts meeting `s`.
    pub ell: usize,
    /// Number of parts meeting `r`.
    pub ell_prime: usize,
    pub flags: ProfileFlags,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileFlags {
    pub s_independent: bool,
    pub r_independent: bool,
    /// `|S| ≥ δ + 1` and `|R| ≥ δ + 1`.
    pub sizes_at_least_degree_plus_one: bool,
    /// `ℓ, ℓ′ ≥ ⌈k/2⌉`.
    pub parts_at_least_half: bool,
    /// `(ℓ + ℓ′)/2 < ⌈(k+1)/2⌉`.
    pub mean_parts_below_bound: bool,
}

impl ProfileFlags {
    pub fn all(&self) -> bool {
        self.s_independent
            && self.r_independent
            && self.sizes_at_least_degree_plus_one
            && self.parts_at_least_half
            && self.mean_parts_below_bound
    }
}

pub fn successor_profile(g: &KPartiteGraph, cycle: &CycleCertificate, z: usize) -> Result<SuccessorProfile> {
    if !verify_cycle(g, cycle) {
        return Err(Error::InvalidCycle("not a cycle of the graph".into()));
    }
    if z >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: z, n: g.n() });
    }
    if cycle.vertices.contains(&z) {
        return Err(Error::InvalidParameters(format!("vertex {z} lies on the cycle")));
    }
    let out = outside_of(g, cycle);
    let mut s = out.clone();
    let mut r = out;
    for (i, &v) in cycle.vertices.iter().enumerate() {
        if g.has_edge(z, v) {
            s.insert(cycle.successor(i));
            r.insert(cycle.predecessor(i));
        }
    }
    let parts_meeting = |set: &VertexSet| (0..g.k()).filter(|&p| !g.part_set(p).is_disjoint(set)).count();
    let (ell, ell_prime) = (parts_meeting(&s), parts_meeting(&r));
    let k = g.k();
    let delta = g.min_degree();
    let flags = ProfileFlags {
        s_independent: is_independent(g, &s),
        r_independent: is_independent(g, &r),
        sizes_at_least_degree_plus_one: s.len() > delta && r.len() > delta,
        parts_at_least_half: ell.min(ell_prime) >= k.div_ceil(2),
        mean_parts_below_bound: ell + ell_prime < 2 * half_parts(k),
    };
    Ok(SuccessorProfile { cycle: cycle.clone(), z, s: s.to_vec(), r: r.to_vec(), ell, ell_prime, flags })
}
