//! Naive reference implementations used as oracles.

#![allow(dead_code)]

use kpham::KPartiteGraph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn next_permutation(a: &mut [usize]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else { return false };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Tries every ordering of the vertices with vertex 0 fixed first.
pub fn ham_by_permutation(g: &KPartiteGraph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    let mut rest: Vec<usize> = (1..n).collect();
    loop {
        let closed = g.has_edge(0, rest[0]) && g.has_edge(rest[n - 2], 0);
        if closed && rest.windows(2).all(|w| g.has_edge(w[0], w[1])) {
            return true;
        }
        if !next_permutation(&mut rest) {
            return false;
        }
    }
}

/// Largest independent set size over all subsets.
pub fn alpha_by_subsets(g: &KPartiteGraph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|&s| {
            (0..n).all(|u| s >> u & 1 == 0 || (u + 1..n).all(|v| s >> v & 1 == 0 || !g.has_edge(u, v)))
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn connected_after_removing(g: &KPartiteGraph, removed: u32) -> bool {
    let n = g.n();
    let alive: Vec<usize> = (0..n).filter(|&v| removed >> v & 1 == 0).collect();
    let Some(&s) = alive.first() else { return true };
    let mut seen = 1u32 << s;
    let mut stack = vec![s];
    while let Some(u) = stack.pop() {
        for &v in &alive {
            if seen >> v & 1 == 0 && g.has_edge(u, v) {
                seen |= 1 << v;
                stack.push(v);
            }
        }
    }
    alive.iter().all(|&v| seen >> v & 1 == 1)
}

/// Smallest vertex set whose removal disconnects the graph; `n − 1` for
/// complete graphs.
pub fn kappa_by_subsets(g: &KPartiteGraph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|&s| (s.count_ones() as usize) + 2 <= n && !connected_after_removing(g, s))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap_or(n.saturating_sub(1))
}

/// Random edges among the allowed pairs of the block partition.
pub fn random_kpartite(rng: &mut ChaCha8Rng, n: usize, k: usize, p: f64) -> KPartiteGraph {
    let m = n / k;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if u / m != v / m && rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    KPartiteGraph::with_block_parts(n, k, &edges).unwrap()
}

pub fn random_general(rng: &mut ChaCha8Rng, n: usize, p: f64) -> KPartiteGraph {
    random_kpartite(rng, n, n, p)
}
