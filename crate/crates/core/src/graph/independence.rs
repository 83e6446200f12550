//! Exact maximum independent sets for graphs on at most 64 vertices.

use super::{bits, low_mask, KPartiteGraph, VertexSet};
use crate::error::{Error, Result};

/// Default size guard for the exact search.
pub const DEFAULT_ALPHA_LIMIT: usize = 64;

pub fn is_independent(g: &KPartiteGraph, s: &VertexSet) -> bool {
    s.iter().all(|v| g.neighbors(v).is_disjoint(s))
}

/// A maximum independent set, found by branch and bound.
///
/// `limit` bounds `n`; the packed search itself cannot exceed 64.
pub fn maximum_independent_set(g: &KPartiteGraph, limit: usize) -> Result<VertexSet> {
    let n = g.n();
    let limit = limit.min(64);
    if n > limit {
        return Err(Error::GuardExceeded { what: "independence number", n, limit });
    }
    let adj = g.adjacency_words().expect("n <= 64");
    let mut best = (0usize, 0u64);
    search(&adj, low_mask(n), 0, 0, &mut best);
    Ok(g.vertex_set(bits(best.1)))
}

pub fn independence_number(g: &KPartiteGraph, limit: usize) -> Result<usize> {
    maximum_independent_set(g, limit).map(|s| s.len())
}

fn search(adj: &[u64], mut cand: u64, mut size: usize, mut chosen: u64, best: &mut (usize, u64)) {
    loop {
        if size + cand.count_ones() as usize <= best.0 {
            return;
        }
        // Vertices of degree <= 1 inside the candidate set belong to some
        // maximum independent set.
        let mut pivot = None;
        let mut pivot_deg = 0;
        let mut forced = None;
        for v in bits(cand) {
            let d = (adj[v] & cand).count_ones();
            if d <= 1 {
                forced = Some(v);
                break;
            }
            if d > pivot_deg {
                pivot_deg = d;
                pivot = Some(v);
            }
        }
        match (forced, pivot) {
            (Some(v), _) => {
                chosen |= 1 << v;
                size += 1;
                cand &= !(adj[v] | 1 << v);
                if cand == 0 {
                    if size > best.0 {
                        *best = (size, chosen);
                    }
                    return;
                }
            }
            (None, Some(v)) => {
                search(adj, cand & !(adj[v] | 1 << v), size + 1, chosen | 1 << v, best);
                cand &= !(1 << v);
            }
            (None, None) => {
                if size > best.0 {
                    *best = (size, chosen);
                }
                return;
            }
        }
    }
}
