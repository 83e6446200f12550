//! Balanced k-partite graphs with packed adjacency.

mod bitset;
pub mod connectivity;
pub mod format;
pub mod independence;
pub mod iso;

pub use bitset::VertexSet;
pub(crate) use bitset::{bits, low_mask};
pub use connectivity::{components_without, cut_vertex, is_connected, min_vertex_cut, vertex_connectivity};
pub use format::{decode, encode, export_dot, from_graph6, to_graph6};
pub use independence::{independence_number, is_independent, maximum_independent_set};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A balanced k-partite graph: `k | n`, every part has `n/k` vertices, no
/// edge inside a part, no loops.
///
/// Values are immutable; the `with_*` methods return modified copies.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KPartiteGraph {
    n: usize,
    k: usize,
    part_of: Vec<usize>,
    parts: Vec<Vec<usize>>,
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for KPartiteGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("KPartiteGraph")
            .field("n", &self.n)
            .field("k", &self.k)
            .field("parts", &self.parts)
            .field("edges", &self.edges())
            .finish()
    }
}

impl KPartiteGraph {
    /// Validates and builds a graph from an explicit partition map.
    pub fn build(n: usize, k: usize, part_of: Vec<usize>, edges: &[(usize, usize)]) -> Result<Self> {
        if k < 2 || k > n {
            return Err(Error::InvalidParameters(format!(
                "part count must satisfy 2 <= k <= n, got n = {n}, k = {k}"
            )));
        }
        if !n.is_multiple_of(k) {
            return Err(Error::PartCountNotDivisor { n, k });
        }
        if part_of.len() != n {
            return Err(Error::InvalidParameters(format!(
                "partition map has {} entries for {n} vertices",
                part_of.len()
            )));
        }
        let m = n / k;
        let mut parts = vec![Vec::with_capacity(m); k];
        for (v, &p) in part_of.iter().enumerate() {
            if p >= k {
                return Err(Error::InvalidParameters(format!(
                    "vertex {v} assigned to part {p}, but only {k} parts exist"
                )));
            }
            parts[p].push(v);
        }
        if let Some((part, vs)) = parts.iter().enumerate().find(|(_, vs)| vs.len() != m) {
            return Err(Error::UnbalancedPartition { part, size: vs.len(), expected: m });
        }
        let mut adj = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if part_of[u] == part_of[v] {
                return Err(Error::IntraPartEdge { u: u.min(v), v: u.max(v), part: part_of[u] });
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self { n, k, part_of, parts, adj })
    }

    /// Builds from a list of parts (each a list of vertex ids).
    pub fn from_parts(parts: &[Vec<usize>], edges: &[(usize, usize)]) -> Result<Self> {
        let n: usize = parts.iter().map(Vec::len).sum();
        let mut part_of = vec![usize::MAX; n];
        for (p, vs) in parts.iter().enumerate() {
            for &v in vs {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if part_of[v] != usize::MAX {
                    return Err(Error::InvalidParameters(format!("vertex {v} listed in two parts")));
                }
                part_of[v] = p;
            }
        }
        Self::build(n, parts.len(), part_of, edges)
    }

    /// Parts are consecutive blocks: part `i` is `{i·m, …, i·m + m − 1}`.
    pub fn with_block_parts(n: usize, k: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if k == 0 || !n.is_multiple_of(k) {
            return Err(Error::PartCountNotDivisor { n, k });
        }
        let m = n / k;
        Self::build(n, k, (0..n).map(|v| v / m).collect(), edges)
    }

    /// An ordinary graph viewed as `n`-partite (every part a singleton).
    pub fn general(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::build(n, n, (0..n).collect(), edges)
    }

    /// The complete balanced k-partite graph with block parts.
    pub fn complete_multipartite(n: usize, k: usize) -> Result<Self> {
        if k == 0 || !n.is_multiple_of(k) {
            return Err(Error::PartCountNotDivisor { n, k });
        }
        let m = n / k;
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| u / m != v / m)
            .collect();
        Self::with_block_parts(n, k, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Part size `n/k`.
    pub fn m(&self) -> usize {
        self.n / self.k
    }

    pub fn part_of(&self, v: usize) -> usize {
        self.part_of[v]
    }

    pub fn partition(&self) -> &[usize] {
        &self.part_of
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    /// `min { |N(v) ∩ B| : v ∈ A }`.
    pub fn degree_between(&self, a: &VertexSet, b: &VertexSet) -> Result<usize> {
        if !a.is_disjoint(b) {
            return Err(Error::InvalidVertexSets("A and B must be disjoint".into()));
        }
        a.iter()
            .map(|v| self.adj[v].intersection_len(b))
            .min()
            .ok_or_else(|| Error::InvalidVertexSets("A is empty".into()))
    }

    /// Adjacency rows as single words, available when `n <= 64`.
    pub fn adjacency_words(&self) -> Option<Vec<u64>> {
        self.adj.iter().map(VertexSet::as_word).collect()
    }

    pub fn vertex_set<I: IntoIterator<Item = usize>>(&self, vs: I) -> VertexSet {
        VertexSet::from_iter_with_capacity(self.n, vs)
    }

    pub fn part_set(&self, p: usize) -> VertexSet {
        self.vertex_set(self.parts[p].iter().copied())
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut edges = self.edges();
        edges.push((u, v));
        Self::build(self.n, self.k, self.part_of.clone(), &edges)
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        if u < self.n && v < self.n {
            g.adj[u].remove(v);
            g.adj[v].remove(u);
        }
        g
    }

    /// The same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameters("permutation length differs from n".into()));
        }
        let mut part_of = vec![usize::MAX; self.n];
        for (v, &p) in perm.iter().enumerate() {
            if p >= self.n || part_of[p] != usize::MAX {
                return Err(Error::InvalidParameters("not a permutation".into()));
            }
            part_of[p] = self.part_of[v];
        }
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Self::build(self.n, self.k, part_of, &edges)
    }

    /// Keeps exactly the edges between `a` and `b`, which must partition the
    /// vertex set into two nonempty sides.
    pub fn induced_bipartite(&self, a: &VertexSet, b: &VertexSet) -> Result<BipartiteGraph> {
        if !a.is_disjoint(b) {
            return Err(Error::InvalidVertexSets("sides overlap".into()));
        }
        if a.len() + b.len() != self.n {
            return Err(Error::InvalidVertexSets("sides do not cover the vertex set".into()));
        }
        if a.is_empty() || b.is_empty() {
            return Err(Error::InvalidVertexSets("both sides must be nonempty".into()));
        }
        let adj = (0..self.n)
            .map(|v| {
                let mut row = self.adj[v].clone();
                row.intersect_with(if a.contains(v) { b } else { a });
                row
            })
            .collect();
        Ok(BipartiteGraph { sides: [a.clone(), b.clone()], adj })
    }
}

/// A bipartite graph on the vertex ids of its host, with sides `A` (0) and
/// `B` (1). Sides need not be balanced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    sides: [VertexSet; 2],
    adj: Vec<VertexSet>,
}

impl BipartiteGraph {
    pub fn from_sides(a: &[usize], b: &[usize], edges: &[(usize, usize)]) -> Result<Self> {
        let n = a.len() + b.len();
        let sa = VertexSet::from_iter_with_capacity(n, a.iter().copied().filter(|&v| v < n));
        let sb = VertexSet::from_iter_with_capacity(n, b.iter().copied().filter(|&v| v < n));
        if sa.len() != a.len() || sb.len() != b.len() || !sa.is_disjoint(&sb) {
            return Err(Error::InvalidVertexSets("sides must partition 0..n".into()));
        }
        let mut adj = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if sa.contains(u) == sa.contains(v) {
                return Err(Error::InvalidVertexSets(format!("edge {u}-{v} inside one side")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self { sides: [sa, sb], adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn side(&self, s: usize) -> &VertexSet {
        &self.sides[s]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn is_balanced(&self) -> bool {
        self.sides[0].len() == self.sides[1].len()
    }

    pub fn edge_count(&self) -> usize {
        self.sides[0].iter().map(|v| self.degree(v)).sum()
    }

    /// The same graph as a balanced 2-partite graph (part 0 = side A).
    pub fn to_kpartite(&self) -> Result<KPartiteGraph> {
        if !self.is_balanced() {
            return Err(Error::UnbalancedPartition {
                part: 1,
                size: self.sides[1].len(),
                expected: self.sides[0].len(),
            });
        }
        let part_of = (0..self.n()).map(|v| usize::from(!self.sides[0].contains(v))).collect();
        let edges: Vec<_> = self.sides[0]
            .iter()
            .flat_map(|u| self.adj[u].iter().map(move |v| (u, v)))
            .collect();
        KPartiteGraph::build(self.n(), 2, part_of, &edges)
    }
}

/// A cycle given as its cyclic vertex order (`v_0 v_1 … v_{L−1} v_0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycleCertificate {
    pub vertices: Vec<usize>,
}

impl CycleCertificate {
    pub fn new(vertices: Vec<usize>) -> Self {
        Self { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Rotation/reflection representative: starts at the smallest vertex and
    /// walks toward its smaller cycle-neighbour.
    pub fn canonical(&self) -> Self {
        let len = self.vertices.len();
        if len < 3 {
            return self.clone();
        }
        let start = (0..len).min_by_key(|&i| self.vertices[i]).unwrap();
        let next = self.vertices[(start + 1) % len];
        let prev = self.vertices[(start + len - 1) % len];
        let vertices = if next <= prev {
            (0..len).map(|i| self.vertices[(start + i) % len]).collect()
        } else {
            (0..len).map(|i| self.vertices[(start + len - i) % len]).collect()
        };
        Self { vertices }
    }

    /// Successor of position `i` on the cycle.
    pub fn successor(&self, i: usize) -> usize {
        self.vertices[(i + 1) % self.vertices.len()]
    }

    pub fn predecessor(&self, i: usize) -> usize {
        let len = self.vertices.len();
        self.vertices[(i + len - 1) % len]
    }
}
