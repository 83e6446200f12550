//! Membership tests for the `n = 2k`, `4 | n` families.
//!
//! Each test looks for the structural pattern first, reads off the member's
//! parameters, builds that member, and confirms with a part-respecting
//! isomorphism search.

use serde::{Deserialize, Serialize};

use super::{build_f2, build_family_f1, build_family_f3, F3Options};
use crate::error::{Error, Result};
use crate::graph::iso::{are_isomorphic, PartMode};
use crate::graph::{KPartiteGraph, VertexSet};

/// Default size guard for [`recognize`].
pub const RECOGNIZE_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyMatch {
    InF1,
    IsoF2,
    InF3,
    None,
}

/// Which family, if any, `g` belongs to. Requires parts of size two and
/// `4 | n`.
pub fn recognize(g: &KPartiteGraph) -> Result<FamilyMatch> {
    let (n, k) = (g.n(), g.k());
    if n > RECOGNIZE_LIMIT {
        return Err(Error::GuardExceeded { what: "family recognition", n, limit: RECOGNIZE_LIMIT });
    }
    if n != 2 * k || n % 4 != 0 {
        return Err(Error::InvalidParameters(format!(
            "recognition needs n = 2k with 4 | n, got n = {n}, k = {k}"
        )));
    }
    // The partition of F2 is one of several valid choices, so any
    // balanced partition is accepted here.
    if n == 8 && are_isomorphic(g, &build_f2(), PartMode::Ignore)? {
        return Ok(FamilyMatch::IsoF2);
    }
    if in_f1(g)? {
        return Ok(FamilyMatch::InF1);
    }
    if in_f3(g)? {
        return Ok(FamilyMatch::InF3);
    }
    Ok(FamilyMatch::None)
}

fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    inv
}

fn in_f1(g: &KPartiteGraph) -> Result<bool> {
    let k = g.k();
    let parts = g.parts();
    for t in 0u32..1 << k {
        let xs: Vec<usize> = (0..k).map(|p| parts[p][(t >> p & 1) as usize]).collect();
        let ys: Vec<usize> = (0..k).map(|p| parts[p][1 - (t >> p & 1) as usize]).collect();
        let is_clique = (0..k).all(|i| (i + 1..k).all(|j| g.has_edge(xs[i], xs[j])));
        if !is_clique {
            continue;
        }
        let yset = g.vertex_set(ys.iter().copied());
        if ys.iter().any(|&y| g.degree(y) < k - 1) {
            continue;
        }
        for c in 0..k {
            let isolated_rest = (0..k).all(|i| i == c || g.neighbors(xs[i]).is_disjoint(&yset));
            let hub = ys.iter().all(|&y| y == ys[c] || g.has_edge(y, ys[c]));
            if !isolated_rest || !hub {
                continue;
            }
            // Part c becomes the last part.
            let order: Vec<usize> = (0..k).filter(|&p| p != c).chain([c]).collect();
            let mut perm = vec![0; 2 * k];
            for (newp, &p) in order.iter().enumerate() {
                perm[xs[p]] = 2 * newp;
                perm[ys[p]] = 2 * newp + 1;
            }
            let inv = inverse(&perm);
            let hub_new = 2 * k - 1;
            let choices: Vec<Vec<usize>> = (0..k - 1)
                .map(|i| {
                    g.neighbors(inv[2 * i + 1])
                        .iter()
                        .map(|u| perm[u])
                        .filter(|&u| u != hub_new)
                        .collect()
                })
                .collect();
            if let Ok(member) = build_family_f1(k, Some(&choices)) {
                if are_isomorphic(g, &member, PartMode::Respect)? {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

fn in_f3(g: &KPartiteGraph) -> Result<bool> {
    let (n, k) = (g.n(), g.k());
    let half = k / 2;
    let parts = g.parts();
    for t in 0u32..1 << k {
        if t.count_ones() as usize != half {
            continue;
        }
        let x_parts: Vec<usize> = (0..k).filter(|&p| t >> p & 1 == 1).collect();
        let y_parts: Vec<usize> = (0..k).filter(|&p| t >> p & 1 == 0).collect();
        let xset = g.vertex_set(x_parts.iter().flat_map(|&p| parts[p].iter().copied()));
        if xset.iter().any(|x| !g.neighbors(x).is_disjoint(&xset)) {
            continue;
        }
        let ys: Vec<usize> = y_parts.iter().flat_map(|&p| parts[p].iter().copied()).collect();
        for &yp in &ys {
            let xn: Vec<usize> = g.neighbors(yp).iter().filter(|&u| xset.contains(u)).collect();
            if xn.len() != 1 {
                continue;
            }
            let xp = xn[0];
            if !ys.iter().all(|&y| g.part_of(y) == g.part_of(yp) || g.has_edge(y, yp)) {
                continue;
            }
            let mut missing = Vec::new();
            for &y in ys.iter().filter(|&&y| y != yp) {
                for x in xset.iter() {
                    if !g.has_edge(x, y) {
                        missing.push((x, y));
                    }
                }
            }
            let ypp = match missing.as_slice() {
                [] => *ys.iter().find(|&&y| y != yp).expect("Y has at least two vertices"),
                [(x, y)] if *x == xp => *y,
                _ => continue,
            };
            if let Some(member) = f3_member_for(g, &x_parts, &y_parts, yp, ypp, xp)? {
                if are_isomorphic(g, &member, PartMode::Respect)? {
                    return Ok(true);
                }
            }
        }
    }
    debug_assert!(n == 2 * k);
    Ok(false)
}

/// Relabels `g` into the standard `F3` layout and builds the member with the
/// same optional edges.
fn f3_member_for(
    g: &KPartiteGraph,
    x_parts: &[usize],
    y_parts: &[usize],
    yp: usize,
    ypp: usize,
    xp: usize,
) -> Result<Option<KPartiteGraph>> {
    let k = g.k();
    let parts = g.parts();
    let yp_part = g.part_of(yp);
    let order: Vec<usize> = x_parts
        .iter()
        .copied()
        .chain(y_parts.iter().copied().filter(|&p| p != yp_part))
        .chain([yp_part])
        .collect();
    let mut perm = vec![0; 2 * k];
    for (newp, &p) in order.iter().enumerate() {
        let mut vs = parts[p].clone();
        if p == yp_part {
            vs.sort_by_key(|&v| v != yp);
        }
        for (slot, v) in vs.into_iter().enumerate() {
            perm[v] = 2 * newp + slot;
        }
    }
    let yset: VertexSet = g.vertex_set(y_parts.iter().flat_map(|&p| parts[p].iter().copied()));
    let extra_edges = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| yset.contains(u) && yset.contains(v) && u != yp && v != yp)
        .map(|(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))
        .collect();
    let options = F3Options {
        y_prime: Some(perm[yp]),
        y_second: Some(perm[ypp]),
        x_prime: Some(perm[xp]),
        extra_edges,
        x_prime_y_second: g.has_edge(xp, ypp),
    };
    Ok(build_family_f3(k, &options).ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::f3_all_optional_edges;

    #[test]
    fn self_recognition() {
        assert_eq!(recognize(&build_f2()).unwrap(), FamilyMatch::IsoF2);
        assert_eq!(recognize(&build_family_f1(4, None).unwrap()).unwrap(), FamilyMatch::InF1);
        assert_eq!(recognize(&build_family_f3(4, &F3Options::default()).unwrap()).unwrap(), FamilyMatch::InF3);
        let full = F3Options { extra_edges: f3_all_optional_edges(4, 6), x_prime_y_second: true, ..Default::default() };
        assert_eq!(recognize(&build_family_f3(4, &full).unwrap()).unwrap(), FamilyMatch::InF3);
    }

    #[test]
    fn complete_graph_is_in_no_family() {
        let g = KPartiteGraph::complete_multipartite(8, 4).unwrap();
        assert_eq!(recognize(&g).unwrap(), FamilyMatch::None);
    }

    #[test]
    fn relabelled_members_are_recognized() {
        let perm = [5, 4, 0, 1, 7, 6, 3, 2];
        let f1 = build_family_f1(4, None).unwrap().relabel(&perm).unwrap();
        assert_eq!(recognize(&f1).unwrap(), FamilyMatch::InF1);
        let f3 = build_family_f3(4, &F3Options::default()).unwrap().relabel(&perm).unwrap();
        assert_eq!(recognize(&f3).unwrap(), FamilyMatch::InF3);
        let f2 = build_f2().relabel(&perm).unwrap();
        assert_eq!(recognize(&f2).unwrap(), FamilyMatch::IsoF2);
    }

    #[test]
    fn outside_regime() {
        let g = KPartiteGraph::complete_multipartite(6, 3).unwrap();
        assert!(matches!(recognize(&g), Err(Error::InvalidParameters(_))));
        let big = KPartiteGraph::complete_multipartite(20, 10).unwrap();
        assert!(matches!(recognize(&big), Err(Error::GuardExceeded { .. })));
    }
}
