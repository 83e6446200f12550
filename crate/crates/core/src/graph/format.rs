//! Text formats: graph6, the partition header, and DOT.
//!
//! A graph file is an optional header line followed by one graph6 line:
//!
//! ```text
//! kpart 4: 0 3, 1 6, 4 7, 2 5
//! GCrb`o
//! ```
//!
//! The header lists the parts separated by commas, each part as
//! space-separated vertex ids. Without a header the graph is read as
//! `n`-partite (every vertex its own part). Blank lines and lines starting
//! with `#` are ignored.

use std::fmt::Write as _;

use super::KPartiteGraph;
use crate::error::{Error, Result};

const MAX_SMALL: usize = 62;
const MAX_MEDIUM: usize = 258_047;

fn push_size(out: &mut String, n: usize) {
    if n <= MAX_SMALL {
        out.push((n as u8 + 63) as char);
    } else if n <= MAX_MEDIUM {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
}

/// Standard graph6 encoding of the adjacency (partition not included).
pub fn to_graph6(g: &KPartiteGraph) -> String {
    let n = g.n();
    let mut out = String::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    out
}

/// Decodes a graph6 line into `(n, edges)`.
pub fn from_graph6(line: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.first() == Some(&b':') || bytes.first() == Some(&b'&') {
        return Err(Error::Parse("sparse6/digraph6 input is not supported".into()));
    }
    let val = |i: usize| -> Result<usize> {
        match bytes.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
            Some(&b) => Err(Error::Parse(format!("invalid graph6 byte {b:#04x} at offset {i}"))),
            None => Err(Error::Parse("truncated graph6 string".into())),
        }
    };
    let (n, mut pos) = match bytes {
        [] => return Err(Error::Parse("empty graph6 string".into())),
        [b'~', b'~', ..] => {
            let mut n = 0;
            for i in 2..8 {
                n = (n << 6) | val(i)?;
            }
            (n, 8)
        }
        [b'~', ..] => {
            let mut n = 0;
            for i in 1..4 {
                n = (n << 6) | val(i)?;
            }
            (n, 4)
        }
        _ => (val(0)?, 1),
    };
    let total_bits = n * n.saturating_sub(1) / 2;
    let need = total_bits.div_ceil(6);
    if bytes.len() != pos + need {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {need} for n = {n}",
            bytes.len().saturating_sub(pos)
        )));
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    let mut cur = 0;
    let mut left = 0;
    for j in 1..n {
        for i in 0..j {
            if left == 0 {
                cur = val(pos)?;
                pos += 1;
                left = 6;
            }
            left -= 1;
            if (cur >> left) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    debug_assert_eq!(bit, total_bits);
    if left > 0 && cur & ((1 << left) - 1) != 0 {
        return Err(Error::Parse("nonzero padding bits in graph6 string".into()));
    }
    Ok((n, edges))
}

/// The `kpart` header line for `g`'s partition.
pub fn partition_header(g: &KPartiteGraph) -> String {
    let mut s = format!("kpart {}:", g.k());
    for (i, part) in g.parts().iter().enumerate() {
        s.push_str(if i == 0 { " " } else { ", " });
        let ids: Vec<String> = part.iter().map(ToString::to_string).collect();
        s.push_str(&ids.join(" "));
    }
    s
}

fn parse_header(line: &str) -> Result<Vec<Vec<usize>>> {
    let rest = line
        .strip_prefix("kpart")
        .ok_or_else(|| Error::Parse("header must start with 'kpart'".into()))?;
    let (k, body) = rest
        .split_once(':')
        .ok_or_else(|| Error::Parse("header missing ':'".into()))?;
    let k: usize = k
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad part count {:?}", k.trim())))?;
    let parts = body
        .split(',')
        .map(|p| {
            p.split_whitespace()
                .map(|v| v.parse::<usize>().map_err(|_| Error::Parse(format!("bad vertex id {v:?}"))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    if parts.len() != k {
        return Err(Error::Parse(format!("header declares {k} parts but lists {}", parts.len())));
    }
    Ok(parts)
}

/// Header line plus graph6 line.
pub fn encode(g: &KPartiteGraph) -> String {
    format!("{}\n{}", partition_header(g), to_graph6(g))
}

/// Inverse of [`encode`]; also accepts a bare graph6 line.
pub fn decode(text: &str) -> Result<KPartiteGraph> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let (header, body) = match lines.as_slice() {
        [h, b] if h.starts_with("kpart") => (Some(*h), *b),
        [b] => (None, *b),
        [] => return Err(Error::Parse("no graph found".into())),
        _ => return Err(Error::Parse("expected an optional header line and one graph6 line".into())),
    };
    let (n, edges) = from_graph6(body)?;
    match header {
        Some(h) => {
            let parts = parse_header(h)?;
            let listed: usize = parts.iter().map(Vec::len).sum();
            if listed != n {
                return Err(Error::Parse(format!("header lists {listed} vertices, graph has {n}")));
            }
            KPartiteGraph::from_parts(&parts, &edges)
        }
        None => KPartiteGraph::general(n, &edges),
    }
}

/// Graphviz rendering with one fill colour per part.
pub fn export_dot(g: &KPartiteGraph) -> String {
    let mut s = String::from("graph G {\n  node [style=filled];\n");
    let k = g.k();
    for v in 0..g.n() {
        let p = g.part_of(v);
        let hue = p as f64 / k as f64;
        let _ = writeln!(s, "  {v} [label=\"{v}\", part={p}, fillcolor=\"{hue:.3} 0.45 0.95\"];");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_reference_vector() {
        let g = KPartiteGraph::general(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        let (n, edges) = from_graph6("DQc").unwrap();
        assert_eq!(n, 5);
        assert_eq!(edges, vec![(0, 2), (1, 3), (0, 4), (3, 4)]);
    }

    #[test]
    fn graph6_small_cases() {
        assert_eq!(from_graph6("?").unwrap(), (0, vec![]));
        assert_eq!(from_graph6("A_").unwrap(), (2, vec![(0, 1)]));
        assert_eq!(from_graph6(">>graph6<<A_").unwrap(), (2, vec![(0, 1)]));
        assert!(from_graph6("A").is_err());
        assert!(from_graph6("A`").is_err()); // padding bit set
        assert!(from_graph6(":Fa@x^").is_err());
    }

    #[test]
    fn graph6_medium_size_header() {
        let n = 70;
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        let g = KPartiteGraph::general(n, &edges).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        let (m, e) = from_graph6(&s).unwrap();
        assert_eq!(m, n);
        assert_eq!(e.len(), n - 1);
    }

    #[test]
    fn encode_decode_with_partition() {
        let parts = vec![vec![0, 3], vec![1, 6], vec![4, 7], vec![2, 5]];
        let g = KPartiteGraph::from_parts(&parts, &[(0, 1), (3, 4), (6, 7), (2, 3)]).unwrap();
        let text = encode(&g);
        assert!(text.starts_with("kpart 4: 0 3, 1 6, 4 7, 2 5\n"));
        assert_eq!(decode(&text).unwrap(), g);
    }

    #[test]
    fn decode_rejects_intra_part_edge() {
        // Edge 0-1 with 0 and 1 in the same part.
        let text = "kpart 2: 0 1, 2 3\nC_";
        assert!(matches!(decode(text), Err(Error::IntraPartEdge { .. })));
    }

    #[test]
    fn decode_rejects_malformed() {
        assert!(decode("").is_err());
        assert!(decode("kpart 2: 0 1\nC?").is_err());
        assert!(decode("kpart x: 0 1, 2 3\nC?").is_err());
        assert!(decode("kpart 2: 0 1, 2 3\nC?\nC?").is_err());
    }

    #[test]
    fn bare_graph6_is_n_partite() {
        let g = decode("DQc").unwrap();
        assert_eq!(g.k(), 5);
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn dot_colours_by_part() {
        let g = KPartiteGraph::complete_multipartite(4, 2).unwrap();
        let dot = export_dot(&g);
        assert_eq!(dot.matches(" -- ").count(), 4);
        assert_eq!(dot.matches("label=").count(), 4);
        let colours: std::collections::BTreeSet<_> = dot
            .lines()
            .filter_map(|l| l.split("fillcolor=\"").nth(1))
            .collect();
        assert_eq!(colours.len(), 2);
    }
}
