//! Components and exact vertex connectivity.

use std::collections::VecDeque;

use super::{KPartiteGraph, VertexSet};

/// Connected components of `g − removed`, each sorted, in order of their
/// smallest vertex.
pub fn components_without(g: &KPartiteGraph, removed: &VertexSet) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = removed.clone();
    let mut comps = Vec::new();
    for s in 0..n {
        if seen.contains(s) {
            continue;
        }
        seen.insert(s);
        let mut comp = vec![s];
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in g.neighbors(u).iter() {
                if seen.insert(v) {
                    comp.push(v);
                    stack.push(v);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

pub fn is_connected(g: &KPartiteGraph) -> bool {
    components_without(g, &VertexSet::new(g.n())).len() <= 1
}

/// Unit-capacity max flow on the vertex-split digraph; vertex `v` becomes
/// `2v` (in) and `2v + 1` (out).
struct SplitFlow<'g> {
    g: &'g KPartiteGraph,
    n: usize,
    // cap[a * 2n + b]
    cap: Vec<i32>,
}

impl<'g> SplitFlow<'g> {
    fn new(g: &'g KPartiteGraph) -> Self {
        let n = g.n();
        Self { g, n, cap: vec![0; 4 * n * n] }
    }

    fn reset(&mut self, s: usize, t: usize) {
        let big = self.n as i32;
        self.cap.iter_mut().for_each(|c| *c = 0);
        let w = 2 * self.n;
        for v in 0..self.n {
            let c = if v == s || v == t { big } else { 1 };
            self.cap[(2 * v) * w + 2 * v + 1] = c;
            for u in self.g.neighbors(v).iter() {
                self.cap[(2 * v + 1) * w + 2 * u] = big;
            }
        }
    }

    fn arcs(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        // Arcs (forward or residual) out of split node `a`.
        let v = a / 2;
        let own = std::iter::once(a ^ 1);
        let nbrs = self.g.neighbors(v).iter().map(move |u| if a % 2 == 1 { 2 * u } else { 2 * u + 1 });
        own.chain(nbrs)
    }

    /// Max flow from `s_out` to `t_in`, capped at `limit`. Returns the flow
    /// and the set of split nodes reachable in the final residual graph.
    fn run(&mut self, s: usize, t: usize, limit: usize) -> (usize, Vec<bool>) {
        self.reset(s, t);
        let w = 2 * self.n;
        let (src, dst) = (2 * s + 1, 2 * t);
        let mut flow = 0;
        loop {
            let mut prev = vec![usize::MAX; w];
            prev[src] = src;
            let mut q = VecDeque::from([src]);
            while let Some(a) = q.pop_front() {
                if a == dst {
                    break;
                }
                for b in self.arcs(a) {
                    if prev[b] == usize::MAX && self.cap[a * w + b] > 0 {
                        prev[b] = a;
                        q.push_back(b);
                    }
                }
            }
            if prev[dst] == usize::MAX || flow >= limit {
                let reach = prev.iter().map(|&p| p != usize::MAX).collect();
                return (flow, reach);
            }
            let mut b = dst;
            while b != src {
                let a = prev[b];
                self.cap[a * w + b] -= 1;
                self.cap[b * w + a] += 1;
                b = a;
            }
            flow += 1;
        }
    }
}

/// A minimum vertex cut, or `None` for complete graphs (which have no cut).
/// Disconnected graphs return the empty cut.
pub fn min_vertex_cut(g: &KPartiteGraph) -> Option<VertexSet> {
    let n = g.n();
    let comps = components_without(g, &VertexSet::new(n));
    if comps.len() > 1 {
        return Some(VertexSet::new(n));
    }
    let mut best: Option<(usize, VertexSet)> = None;
    let mut flow = SplitFlow::new(g);
    let mut i = 0;
    while i < n && best.as_ref().is_none_or(|(b, _)| i <= *b) {
        for j in 0..n {
            if j == i || g.has_edge(i, j) {
                continue;
            }
            let limit = best.as_ref().map_or(n, |(b, _)| *b);
            let (f, reach) = flow.run(i, j, limit);
            if best.as_ref().is_none_or(|(b, _)| f < *b) {
                let cut = g.vertex_set((0..n).filter(|&v| reach[2 * v] && !reach[2 * v + 1]));
                debug_assert_eq!(cut.len(), f);
                best = Some((f, cut));
            }
        }
        i += 1;
    }
    best.map(|(_, cut)| cut)
}

/// Exact `κ(g)`: size of a minimum vertex cut, `n − 1` for complete graphs.
pub fn vertex_connectivity(g: &KPartiteGraph) -> usize {
    min_vertex_cut(g).map_or(g.n().saturating_sub(1), |c| c.len())
}

/// Some vertex whose removal disconnects a connected graph, smallest id
/// first. `None` if the graph is disconnected or 2-connected.
pub fn cut_vertex(g: &KPartiteGraph) -> Option<usize> {
    let n = g.n();
    if n < 3 || !is_connected(g) {
        return None;
    }
    // Iterative lowpoint DFS from vertex 0.
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut parent = vec![usize::MAX; n];
    let mut cuts = vec![false; n];
    let mut root_children = 0;
    let mut time = 0;
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let mut stack = vec![(0usize, 0usize)];
    disc[0] = 0;
    low[0] = 0;
    while let Some(top) = stack.last_mut() {
        let v = top.0;
        if top.1 < nbrs[v].len() {
            let u = nbrs[v][top.1];
            top.1 += 1;
            if disc[u] == usize::MAX {
                time += 1;
                disc[u] = time;
                low[u] = time;
                parent[u] = v;
                if v == 0 {
                    root_children += 1;
                }
                stack.push((u, 0));
            } else if u != parent[v] {
                low[v] = low[v].min(disc[u]);
            }
        } else {
            stack.pop();
            let p = parent[v];
            if p != usize::MAX {
                low[p] = low[p].min(low[v]);
                if p != 0 && low[v] >= disc[p] {
                    cuts[p] = true;
                }
            }
        }
    }
    cuts[0] = root_children > 1;
    cuts.iter().position(|&c| c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_kappa(g: &KPartiteGraph) -> usize {
        let n = g.n();
        let mut best = n - 1;
        for mask in 0u32..(1 << n) {
            let s = mask.count_ones() as usize;
            if s >= best || s > n - 2 {
                continue;
            }
            let removed = g.vertex_set((0..n).filter(|&v| mask >> v & 1 == 1));
            if components_without(g, &removed).len() > 1 {
                best = s;
            }
        }
        best
    }

    #[test]
    fn complete_bipartite_connectivity_is_m() {
        for m in 1..5 {
            let g = KPartiteGraph::complete_multipartite(2 * m, 2).unwrap();
            assert_eq!(vertex_connectivity(&g), m);
        }
    }

    #[test]
    fn complete_graph() {
        let g = KPartiteGraph::complete_multipartite(5, 5).unwrap();
        assert!(min_vertex_cut(&g).is_none());
        assert_eq!(vertex_connectivity(&g), 4);
    }

    #[test]
    fn path_and_disconnected() {
        let p = KPartiteGraph::general(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&p), 1);
        let cut = min_vertex_cut(&p).unwrap();
        assert_eq!(cut.len(), 1);
        assert!(components_without(&p, &cut).len() > 1);
        let d = KPartiteGraph::general(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&d), 0);
        assert!(!is_connected(&d));
    }

    #[test]
    fn agrees_with_brute_force_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..400 {
            let n = rng.random_range(2..=8);
            let p: f64 = rng.random_range(0.2..0.9);
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.random_bool(p))
                .collect();
            let g = KPartiteGraph::general(n, &edges).unwrap();
            assert_eq!(vertex_connectivity(&g), brute_kappa(&g), "{g:?}");
            if let Some(cut) = min_vertex_cut(&g) {
                assert!(components_without(&g, &cut).len() > 1);
            }
            let kappa = vertex_connectivity(&g);
            match cut_vertex(&g) {
                Some(v) => {
                    assert_eq!(kappa, 1);
                    assert!(components_without(&g, &g.vertex_set([v])).len() >= 2);
                }
                None => assert!(kappa != 1 || n == 2, "{g:?}"),
            }
        }
    }
}
