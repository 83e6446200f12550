//! Isomorphism search and canonical forms for small graphs (n ≤ 64).
//!
//! Both are backtracking searches over packed adjacency; they are meant for
//! the desk-scale sizes the harness works with, not for general use.

use super::{bits, KPartiteGraph};
use crate::error::{Error, Result};

/// Whether an isomorphism must map parts onto parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartMode {
    /// Any vertex bijection preserving adjacency.
    Ignore,
    /// The bijection must also send every part of one graph onto a part of
    /// the other.
    Respect,
}

fn words(g: &KPartiteGraph, what: &'static str) -> Result<Vec<u64>> {
    g.adjacency_words().ok_or(Error::GuardExceeded { what, n: g.n(), limit: 64 })
}

/// Invariant vertex labels: degree, then sorted neighbour degrees.
fn vertex_invariants(adj: &[u64]) -> Vec<(u32, Vec<u32>)> {
    adj.iter()
        .map(|&row| {
            let mut nd: Vec<u32> = bits(row).map(|u| adj[u].count_ones()).collect();
            nd.sort_unstable();
            (row.count_ones(), nd)
        })
        .collect()
}

/// An isomorphism `g → h` as a vector `map[v_g] = v_h`, if one exists.
pub fn find_isomorphism(g: &KPartiteGraph, h: &KPartiteGraph, mode: PartMode) -> Result<Option<Vec<usize>>> {
    let (ag, ah) = (words(g, "isomorphism search")?, words(h, "isomorphism search")?);
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    if mode == PartMode::Respect && g.k() != h.k() {
        return Ok(None);
    }
    let (ig, ih) = (vertex_invariants(&ag), vertex_invariants(&ah));
    let mut sg = ig.clone();
    let mut sh = ih.clone();
    sg.sort();
    sh.sort();
    if sg != sh {
        return Ok(None);
    }
    // Order g's vertices so each one after the first tends to have an
    // already-placed neighbour.
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((ag[v] & placed).count_ones(), ag[v].count_ones(), std::cmp::Reverse(v)))
            .unwrap();
        placed |= 1 << next;
        order.push(next);
    }
    let mut st = IsoState {
        ag: &ag,
        ah: &ah,
        g,
        h,
        ig: &ig,
        ih: &ih,
        mode,
        order: &order,
        map: vec![usize::MAX; n],
        used: 0,
        part_map: vec![usize::MAX; g.k()],
        part_used: vec![false; h.k()],
    };
    Ok(if st.extend(0) { Some(st.map) } else { None })
}

struct IsoState<'a> {
    ag: &'a [u64],
    ah: &'a [u64],
    g: &'a KPartiteGraph,
    h: &'a KPartiteGraph,
    ig: &'a [(u32, Vec<u32>)],
    ih: &'a [(u32, Vec<u32>)],
    mode: PartMode,
    order: &'a [usize],
    map: Vec<usize>,
    used: u64,
    part_map: Vec<usize>,
    part_used: Vec<bool>,
}

impl IsoState<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let pg = self.g.part_of(v);
        for w in 0..self.h.n() {
            if self.used >> w & 1 == 1 || self.ig[v] != self.ih[w] {
                continue;
            }
            let ph = self.h.part_of(w);
            let fresh_part = if self.mode == PartMode::Respect {
                match self.part_map[pg] {
                    usize::MAX if self.part_used[ph] => continue,
                    usize::MAX => true,
                    p if p != ph => continue,
                    _ => false,
                }
            } else {
                false
            };
            let consistent = self.order[..depth].iter().all(|&u| {
                let img = self.map[u];
                (self.ag[v] >> u & 1) == (self.ah[w] >> img & 1)
            });
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used |= 1 << w;
            if fresh_part {
                self.part_map[pg] = ph;
                self.part_used[ph] = true;
            }
            if self.extend(depth + 1) {
                return true;
            }
            if fresh_part {
                self.part_map[pg] = usize::MAX;
                self.part_used[ph] = false;
            }
            self.used &= !(1 << w);
            self.map[v] = usize::MAX;
        }
        false
    }
}

pub fn are_isomorphic(g: &KPartiteGraph, h: &KPartiteGraph, mode: PartMode) -> Result<bool> {
    Ok(find_isomorphism(g, h, mode)?.is_some())
}

/// Size guard for [`canonical_form`].
pub const CANONICAL_LIMIT: usize = 16;

/// A certificate equal for two graphs exactly when they are isomorphic by a
/// map sending parts onto parts.
///
/// Computed as the lexicographically least (adjacency, same-part) matrix
/// over the leaves of an individualize-and-refine tree.
pub fn canonical_form(g: &KPartiteGraph) -> Result<Vec<u8>> {
    let n = g.n();
    if n > CANONICAL_LIMIT {
        return Err(Error::GuardExceeded { what: "canonical form", n, limit: CANONICAL_LIMIT });
    }
    let adj = words(g, "canonical form")?;
    let same: Vec<u64> = (0..n)
        .map(|v| g.parts()[g.part_of(v)].iter().filter(|&&u| u != v).fold(0u64, |acc, &u| acc | 1 << u))
        .collect();
    let colours = refine(&adj, &same, vec![0; n]);
    let mut best: Option<Vec<u8>> = None;
    canon_search(&adj, &same, colours, &mut best);
    Ok(best.expect("at least one leaf"))
}

fn refine(adj: &[u64], same: &[u64], mut colour: Vec<usize>) -> Vec<usize> {
    let n = colour.len();
    loop {
        let sigs: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut a: Vec<usize> = bits(adj[v]).map(|u| colour[u]).collect();
                let mut s: Vec<usize> = bits(same[v]).map(|u| colour[u]).collect();
                a.sort_unstable();
                s.sort_unstable();
                (colour[v], a, s)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let mut old = colour.clone();
        old.sort_unstable();
        old.dedup();
        let before = old.len();
        colour = next;
        if distinct.len() == before {
            return colour;
        }
    }
}

fn canon_search(adj: &[u64], same: &[u64], colour: Vec<usize>, best: &mut Option<Vec<u8>>) {
    let n = colour.len();
    let cells = colour.iter().copied().max().map_or(0, |c| c + 1);
    if cells == n {
        // colour[v] is v's new label.
        let mut inv = vec![0; n];
        for (v, &c) in colour.iter().enumerate() {
            inv[c] = v;
        }
        let mut cert = Vec::with_capacity(n * (n - 1) / 2);
        for j in 1..n {
            for i in 0..j {
                let (a, b) = (inv[i], inv[j]);
                cert.push(if adj[a] >> b & 1 == 1 { 2 } else if same[a] >> b & 1 == 1 { 1 } else { 0 });
            }
        }
        if best.as_ref().is_none_or(|b| cert < *b) {
            *best = Some(cert);
        }
        return;
    }
    // First smallest non-singleton cell.
    let mut sizes = vec![0usize; cells];
    for &c in &colour {
        sizes[c] += 1;
    }
    let target = (0..cells).filter(|&c| sizes[c] > 1).min_by_key(|&c| (sizes[c], c)).unwrap();
    for v in 0..n {
        if colour[v] != target {
            continue;
        }
        // Individualize v: it gets a colour just below the rest of its cell.
        let indiv: Vec<usize> = colour
            .iter()
            .enumerate()
            .map(|(u, &c)| if u == v || c < target { 2 * c } else { 2 * c + 1 })
            .collect();
        canon_search(adj, same, refine(adj, same, indiv), best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c6_as_3_partite() -> KPartiteGraph {
        KPartiteGraph::from_parts(&[vec![0, 3], vec![1, 4], vec![2, 5]], &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
            .unwrap()
    }

    #[test]
    fn isomorphic_relabelling_found() {
        let g = c6_as_3_partite();
        let perm = [3, 5, 0, 2, 1, 4];
        let h = g.relabel(&perm).unwrap();
        let map = find_isomorphism(&g, &h, PartMode::Respect).unwrap().unwrap();
        for (u, v) in g.edges() {
            assert!(h.has_edge(map[u], map[v]));
        }
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn partition_matters_in_respect_mode() {
        let g = c6_as_3_partite();
        // Same cycle, different 3-partition.
        let h = KPartiteGraph::from_parts(
            &[vec![0, 2], vec![1, 4], vec![3, 5]],
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)],
        )
        .unwrap();
        assert!(are_isomorphic(&g, &h, PartMode::Ignore).unwrap());
        assert!(!are_isomorphic(&g, &h, PartMode::Respect).unwrap());
        assert_ne!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn non_isomorphic_same_degrees() {
        // C6 versus two triangles, both 2-regular on 6 vertices.
        let c6 = KPartiteGraph::general(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let tt = KPartiteGraph::general(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(!are_isomorphic(&c6, &tt, PartMode::Ignore).unwrap());
        assert_ne!(canonical_form(&c6).unwrap(), canonical_form(&tt).unwrap());
    }

    #[test]
    fn canonical_form_is_label_invariant_on_random_graphs() {
        use rand::seq::SliceRandom;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let n = 8;
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| u / 2 != v / 2)
                .filter(|_| rng.random_bool(0.6))
                .collect();
            let g = KPartiteGraph::with_block_parts(n, 4, &edges).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm).unwrap();
            assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
            assert!(are_isomorphic(&g, &h, PartMode::Respect).unwrap());
        }
    }
}
