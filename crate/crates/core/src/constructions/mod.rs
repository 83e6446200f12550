//! Extremal families: graphs just below the degree threshold that have no
//! Hamiltonian cycle.
//!
//! Vertex layouts:
//!
//! * `F`: block parts, part `i` is `{i·m, …, i·m + m − 1}`; the designated
//!   set `X_i` is the first `sizes[i]` vertices of part `i`.
//! * `F1`, `F3`: `n = 2k`, part `p` is `{2p, 2p + 1}`.
//! * `F2`: fixed 8-vertex graph, see [`build_f2`].

mod recognize;

pub use recognize::{recognize, FamilyMatch, RECOGNIZE_LIMIT};

use serde::{Deserialize, Serialize};

use crate::arithmetic::half_parts;
use crate::error::{Error, Result};
use crate::graph::KPartiteGraph;

/// Parameters of one family member. Serializes to a flat TOML table with a
/// `family` key (`"F"`, `"F1"`, `"F2"` or `"F3"`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum FamilySpec {
    F {
        k: usize,
        m: usize,
        /// `|X_1| ≥ … ≥ |X_L|` with `L = ⌈(k+1)/2⌉`; default assignment if absent.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        sizes: Option<Vec<usize>>,
    },
    F1 {
        k: usize,
        /// `choices[i]` lists the chosen neighbours of `y_i` (vertex ids) for
        /// `i < k − 1`; every choice set is maximal if absent.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        choices: Option<Vec<Vec<usize>>>,
    },
    F2,
    F3 {
        k: usize,
        #[serde(flatten)]
        options: F3Options,
    },
}

/// Free choices in an `F3` member. Unset vertices take their defaults:
/// `y′ = 2k − 2`, `y″ = k` (first vertex of the first Y part), `x′ = 0`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct F3Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y_prime: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y_second: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x_prime: Option<usize>,
    /// Extra edges between distinct Y parts, not touching `y′`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub extra_edges: Vec<(usize, usize)>,
    #[serde(default)]
    pub x_prime_y_second: bool,
}

impl FamilySpec {
    pub fn build(&self) -> Result<KPartiteGraph> {
        match self {
            Self::F { k, m, sizes } => build_family_f(*k, *m, sizes.as_deref()),
            Self::F1 { k, choices } => build_family_f1(*k, choices.as_deref()),
            Self::F2 => Ok(build_f2()),
            Self::F3 { k, options } => build_family_f3(*k, options),
        }
    }

    /// An independent set certifying non-Hamiltonicity by size, when the
    /// family has one (`F` only).
    pub fn designated_independent_set(&self) -> Result<Option<Vec<usize>>> {
        match self {
            Self::F { k, m, sizes } => {
                let sizes = match sizes {
                    Some(s) => s.clone(),
                    None => default_f_sizes(*k, *m)?,
                };
                Ok(Some(f_designated_set(*m, &sizes)))
            }
            _ => Ok(None),
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("family specs always serialize")
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn f_target(k: usize, m: usize) -> usize {
    f_independent_size(m * k)
}

/// Default `F` sizes: `q = ⌊⌈(n+1)/2⌉ / L⌋`, the first `r` entries `q + 1`
/// and the rest `q`, where `r` is the remainder.
pub fn default_f_sizes(k: usize, m: usize) -> Result<Vec<usize>> {
    check_f_params(k, m)?;
    let l = half_parts(k);
    let t = f_target(k, m);
    let (q, r) = (t / l, t % l);
    let sizes: Vec<usize> = (0..l).map(|i| if i < r { q + 1 } else { q }).collect();
    validate_f_sizes(k, m, &sizes)?;
    Ok(sizes)
}

fn check_f_params(k: usize, m: usize) -> Result<()> {
    if k < 2 || m == 0 || m * k < 3 {
        return Err(Error::InvalidParameters(format!("family F needs k >= 2 and n = mk >= 3, got k = {k}, m = {m}")));
    }
    Ok(())
}

fn validate_f_sizes(k: usize, m: usize, sizes: &[usize]) -> Result<()> {
    let l = half_parts(k);
    let t = f_target(k, m);
    let bad = |what: String| Err(Error::InfeasibleFamily(what));
    if sizes.len() != l {
        return bad(format!("expected {l} sizes, got {}", sizes.len()));
    }
    if sizes.windows(2).any(|w| w[0] < w[1]) {
        return bad(format!("sizes {sizes:?} are not nonincreasing"));
    }
    if let Some(&s) = sizes.iter().find(|&&s| s > m) {
        return bad(format!("size {s} exceeds the part size {m}"));
    }
    if sizes[l - 1] != t / l {
        return bad(format!("last size must be {}, got {}", t / l, sizes[l - 1]));
    }
    let sum: usize = sizes.iter().sum();
    if sum != t {
        return bad(format!("sizes sum to {sum}, expected {t}"));
    }
    Ok(())
}

fn f_designated_set(m: usize, sizes: &[usize]) -> Vec<usize> {
    sizes.iter().enumerate().flat_map(|(i, &s)| i * m..i * m + s).collect()
}

/// Complete k-partite graph minus the edges between `X_i` and `X_j`
/// (`i ≠ j`). `X` is independent with `⌈(n+1)/2⌉` vertices.
pub fn build_family_f(k: usize, m: usize, sizes: Option<&[usize]>) -> Result<KPartiteGraph> {
    check_f_params(k, m)?;
    let sizes = match sizes {
        Some(s) => {
            validate_f_sizes(k, m, s)?;
            s.to_vec()
        }
        None => default_f_sizes(k, m)?,
    };
    let n = m * k;
    let mut in_x = vec![false; n];
    for v in f_designated_set(m, &sizes) {
        in_x[v] = true;
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u / m != v / m && !(in_x[u] && in_x[v]))
        .collect();
    KPartiteGraph::with_block_parts(n, k, &edges)
}

fn pair_parts(k: usize) -> Vec<usize> {
    (0..2 * k).map(|v| v / 2).collect()
}

/// Allowed neighbours of `y_i` (`i < k − 1`) beyond the mandatory `y_{k−1}`:
/// the other `y_j` with `j < k − 1`, and `x_{k−1}`.
fn f1_pool(k: usize, i: usize) -> Vec<usize> {
    (0..k - 1).filter(|&j| j != i).map(|j| 2 * j + 1).chain([2 * (k - 1)]).collect()
}

/// `x_i = 2i`, `y_i = 2i + 1`. The `x` vertices form a clique, `y_{k−1}` is
/// joined to every other `y`, and `y_i` (`i < k − 1`) to its chosen subset of
/// `{y_j : j < k − 1, j ≠ i} ∪ {x_{k−1}}`. Every `y` must end with degree at
/// least `k − 1`.
pub fn build_family_f1(k: usize, choices: Option<&[Vec<usize>]>) -> Result<KPartiteGraph> {
    if k < 3 {
        return Err(Error::InvalidParameters(format!("family F1 needs k >= 3, got {k}")));
    }
    let n = 2 * k;
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            edges.push((2 * i, 2 * j));
        }
    }
    let yk = 2 * k - 1;
    for i in 0..k - 1 {
        edges.push((2 * i + 1, yk));
    }
    match choices {
        None => {
            for i in 0..k - 1 {
                edges.extend(f1_pool(k, i).into_iter().map(|v| (2 * i + 1, v)));
            }
        }
        Some(ch) => {
            if ch.len() != k - 1 {
                return Err(Error::InfeasibleFamily(format!("expected {} choice sets, got {}", k - 1, ch.len())));
            }
            for (i, set) in ch.iter().enumerate() {
                let pool = f1_pool(k, i);
                for &v in set {
                    if !pool.contains(&v) {
                        return Err(Error::InfeasibleFamily(format!(
                            "vertex {v} is not an allowed neighbour of y_{i} (vertex {})",
                            2 * i + 1
                        )));
                    }
                    edges.push((2 * i + 1, v));
                }
            }
        }
    }
    edges.iter_mut().for_each(|e| *e = (e.0.min(e.1), e.0.max(e.1)));
    edges.sort_unstable();
    edges.dedup();
    let g = KPartiteGraph::build(n, k, pair_parts(k), &edges)?;
    if let Some(y) = (0..k).map(|i| 2 * i + 1).find(|&y| g.degree(y) < k - 1) {
        return Err(Error::InfeasibleFamily(format!(
            "vertex {y} has degree {}, below k - 1 = {}",
            g.degree(y),
            k - 1
        )));
    }
    Ok(g)
}

/// Vertex ids in [`build_f2`]: `x1..x6` are 0..5, `x′` is 6, `x″` is 7.
pub mod f2 {
    pub const X1: usize = 0;
    pub const X2: usize = 1;
    pub const X3: usize = 2;
    pub const X4: usize = 3;
    pub const X5: usize = 4;
    pub const X6: usize = 5;
    pub const XP: usize = 6;
    pub const XPP: usize = 7;
}

/// The 8-vertex graph with a 6-cycle `x1…x6`, the edge `x′x″`, both joined to
/// `x1` and `x4`, and chords `x6x4, x5x1, x2x4, x3x1`. Parts:
/// `{x1,x4}, {x2,x′}, {x5,x″}, {x3,x6}`.
pub fn build_f2() -> KPartiteGraph {
    use f2::*;
    let edges = [
        (X1, X2),
        (X2, X3),
        (X3, X4),
        (X4, X5),
        (X5, X6),
        (X6, X1),
        (XP, XPP),
        (XP, X1),
        (XP, X4),
        (XPP, X1),
        (XPP, X4),
        (X6, X4),
        (X5, X1),
        (X2, X4),
        (X3, X1),
    ];
    let parts = [vec![X1, X4], vec![X2, XP], vec![X5, XPP], vec![X3, X6]];
    KPartiteGraph::from_parts(&parts, &edges).expect("fixed construction is valid")
}

/// The resolved vertex choices of an `F3` member.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct F3Roles {
    pub y_prime: usize,
    pub y_second: usize,
    pub x_prime: usize,
}

pub(crate) fn f3_roles(k: usize, o: &F3Options) -> Result<F3Roles> {
    if k < 4 || !k.is_multiple_of(2) {
        return Err(Error::InvalidParameters(format!("family F3 needs n = 2k with 4 | n and n >= 8, got k = {k}")));
    }
    let n = 2 * k;
    let half = k / 2;
    let in_x = |v: usize| v < n && v / 2 < half;
    let in_y = |v: usize| v < n && v / 2 >= half;
    let r = F3Roles {
        y_prime: o.y_prime.unwrap_or(n - 2),
        y_second: o.y_second.unwrap_or(k),
        x_prime: o.x_prime.unwrap_or(0),
    };
    if r.y_prime / 2 != k - 1 || r.y_prime >= n {
        return Err(Error::InfeasibleFamily(format!("y' = {} must lie in the last part {{{}, {}}}", r.y_prime, n - 2, n - 1)));
    }
    if !in_y(r.y_second) || r.y_second == r.y_prime {
        return Err(Error::InfeasibleFamily(format!("y'' = {} must be a Y vertex other than y'", r.y_second)));
    }
    if !in_x(r.x_prime) {
        return Err(Error::InfeasibleFamily(format!("x' = {} must be an X vertex", r.x_prime)));
    }
    Ok(r)
}

/// Parts `0..k/2` form `X`, the rest `Y`; `y′` lies in the last part.
/// Mandatory edges: `X` to `Y ∖ {y′, y″}`, `y″` to `X ∖ {x′}`, `y′x′`, and
/// `y′` to every `Y` vertex outside its part. Optional: extra Y–Y edges and
/// `x′y″`.
pub fn build_family_f3(k: usize, o: &F3Options) -> Result<KPartiteGraph> {
    let r = f3_roles(k, o)?;
    let n = 2 * k;
    let half = k / 2;
    let xs: Vec<usize> = (0..k).collect();
    let ys: Vec<usize> = (k..n).collect();
    let mut edges = Vec::new();
    for &y in &ys {
        if y == r.y_prime {
            continue;
        }
        for &x in &xs {
            if y != r.y_second || x != r.x_prime || o.x_prime_y_second {
                edges.push((x, y));
            }
        }
    }
    edges.push((r.x_prime, r.y_prime));
    for &y in &ys {
        if y / 2 != r.y_prime / 2 {
            edges.push((y, r.y_prime));
        }
    }
    for &(u, v) in &o.extra_edges {
        if u >= n || v >= n || u / 2 < half || v / 2 < half {
            return Err(Error::InfeasibleFamily(format!("extra edge {u}-{v} is not between Y vertices")));
        }
        if u == r.y_prime || v == r.y_prime {
            return Err(Error::InfeasibleFamily(format!("extra edge {u}-{v} touches y'")));
        }
        if u / 2 == v / 2 {
            return Err(Error::IntraPartEdge { u, v, part: u / 2 });
        }
        edges.push((u.min(v), u.max(v)));
    }
    edges.iter_mut().for_each(|e| *e = (e.0.min(e.1), e.0.max(e.1)));
    edges.sort_unstable();
    edges.dedup();
    KPartiteGraph::build(n, k, pair_parts(k), &edges)
}

/// The X side (first `k/2` parts) of an `F3` member.
pub fn f3_x_side(k: usize) -> Vec<usize> {
    (0..k).collect()
}

/// All Y–Y edges between distinct parts avoiding `y′`.
pub fn f3_all_optional_edges(k: usize, y_prime: usize) -> Vec<(usize, usize)> {
    let n = 2 * k;
    (k..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u / 2 != v / 2 && u != y_prime && v != y_prime)
        .collect()
}

/// `⌈(n+1)/2⌉`, the size of `F`'s designated independent set.
pub fn f_independent_size(n: usize) -> usize {
    (n + 2) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::theorem_threshold;
    use crate::graph::{components_without, independence_number, is_independent, vertex_connectivity};
    use crate::solver::find_hamiltonian_cycle;

    #[test]
    fn f_at_2_4() {
        assert_eq!(default_f_sizes(2, 4).unwrap(), vec![3, 2]);
        let g = build_family_f(2, 4, None).unwrap();
        assert_eq!(g.n(), 8);
        assert_eq!(g.min_degree(), 1);
        assert_eq!(theorem_threshold(8, 2).unwrap() - 1, 1);
        assert_eq!(independence_number(&g, 64).unwrap(), 5);
        assert!(find_hamiltonian_cycle(&g).unwrap().is_none());
    }

    #[test]
    fn f_at_4_3() {
        let g = build_family_f(4, 3, None).unwrap();
        assert_eq!(g.min_degree(), 4);
        assert_eq!(theorem_threshold(12, 4).unwrap(), 5);
        let spec = FamilySpec::F { k: 4, m: 3, sizes: None };
        let x = spec.designated_independent_set().unwrap().unwrap();
        assert_eq!(x.len(), 7);
        assert!(is_independent(&g, &g.vertex_set(x)));
    }

    #[test]
    fn f_with_singleton_parts() {
        for n in 3..12 {
            let g = build_family_f(n, 1, None).unwrap();
            let x = FamilySpec::F { k: n, m: 1, sizes: None }.designated_independent_set().unwrap().unwrap();
            assert_eq!(x.len(), f_independent_size(n));
            assert!(2 * x.len() > n);
            assert!(is_independent(&g, &g.vertex_set(x)));
        }
    }

    #[test]
    fn f_rejects_bad_sizes() {
        for sizes in [vec![2, 3], vec![5, 0], vec![3, 3], vec![4, 1]] {
            assert!(matches!(build_family_f(2, 4, Some(&sizes)), Err(Error::InfeasibleFamily(_))), "{sizes:?}");
        }
        assert!(build_family_f(2, 4, Some(&[3, 2])).is_ok());
        assert!(build_family_f(1, 4, None).is_err());
    }

    #[test]
    fn f1_maximal() {
        let g = build_family_f1(4, None).unwrap();
        assert_eq!(g.min_degree(), 3);
        assert_eq!(vertex_connectivity(&g), 1);
        assert_eq!(components_without(&g, &g.vertex_set([6])).len(), 2);
        assert!(find_hamiltonian_cycle(&g).unwrap().is_none());
        let g6 = build_family_f1(6, None).unwrap();
        assert!(vertex_connectivity(&g6) <= 1);
    }

    #[test]
    fn f1_degree_too_low() {
        // y_0 keeps only y_3 and y_1: degree 2 = k - 2 once y_1 and y_2 skip it.
        let choices = vec![vec![3], vec![5, 6], vec![3, 6]];
        assert!(matches!(build_family_f1(4, Some(&choices)), Err(Error::InfeasibleFamily(_))));
        let bad_pool = vec![vec![0], vec![5, 6], vec![3, 6]];
        assert!(matches!(build_family_f1(4, Some(&bad_pool)), Err(Error::InfeasibleFamily(_))));
    }

    #[test]
    fn f2_properties() {
        use f2::*;
        let g = build_f2();
        assert_eq!(g.edge_count(), 15);
        assert_eq!(g.min_degree(), 3);
        assert_eq!(independence_number(&g, 64).unwrap(), 3);
        assert_eq!(vertex_connectivity(&g), 2);
        assert_eq!(components_without(&g, &g.vertex_set([X1, X4])).len(), 3);
        assert!(find_hamiltonian_cycle(&g).unwrap().is_none());
    }

    #[test]
    fn f3_members() {
        let g = build_family_f3(4, &F3Options::default()).unwrap();
        assert_eq!(independence_number(&g, 64).unwrap(), 4);
        assert!(g.min_degree() >= 3);
        assert!(vertex_connectivity(&g) >= 2);
        assert!(find_hamiltonian_cycle(&g).unwrap().is_none());
        let x = g.vertex_set(f3_x_side(4));
        let y = g.vertex_set(4..8);
        let h = g.induced_bipartite(&x, &y).unwrap();
        assert_eq!(h.degree(6), 1);

        let full = F3Options { extra_edges: f3_all_optional_edges(4, 6), x_prime_y_second: true, ..Default::default() };
        let g = build_family_f3(4, &full).unwrap();
        assert!(find_hamiltonian_cycle(&g).unwrap().is_none());
    }

    #[test]
    fn f3_rejects_illegal_options() {
        let touch = F3Options { extra_edges: vec![(4, 6)], ..Default::default() };
        assert!(build_family_f3(4, &touch).is_err());
        let intra = F3Options { extra_edges: vec![(4, 5)], ..Default::default() };
        assert!(matches!(build_family_f3(4, &intra), Err(Error::IntraPartEdge { .. })));
        let bad_y = F3Options { y_prime: Some(4), ..Default::default() };
        assert!(build_family_f3(4, &bad_y).is_err());
        assert!(build_family_f3(3, &F3Options::default()).is_err());
    }

    #[test]
    fn spec_toml_round_trip() {
        let specs = [
            FamilySpec::F { k: 4, m: 3, sizes: Some(vec![3, 2, 2]) },
            FamilySpec::F1 { k: 4, choices: None },
            FamilySpec::F2,
            FamilySpec::F3 {
                k: 4,
                options: F3Options { y_second: Some(5), extra_edges: vec![(4, 7)], ..Default::default() },
            },
        ];
        for s in specs {
            let text = s.to_toml();
            assert_eq!(FamilySpec::from_toml(&text).unwrap(), s, "{text}");
            assert_eq!(s.build().unwrap(), FamilySpec::from_toml(&text).unwrap().build().unwrap());
        }
        assert!(FamilySpec::to_toml(&FamilySpec::F2).contains("family = \"F2\""));
    }
}
