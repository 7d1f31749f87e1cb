//! Edge-list text and graph6.

use std::path::Path;

use crate::graph::natural_cmp;
use crate::{Graph, GraphError};

/// Parses the edge-list format: one `u v` per line, `#` comment lines, and
/// lone tokens for isolated vertices. Vertex indices follow natural order of
/// the ids.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut names: Vec<String> = Vec::new();
    let mut pairs: Vec<(usize, String, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            [a] => names.push(a.to_string()),
            [a, b] => {
                if a == b {
                    return Err(GraphError::Parse { line: i + 1, msg: format!("self-loop at {a}") });
                }
                names.push(a.to_string());
                names.push(b.to_string());
                pairs.push((i + 1, a.to_string(), b.to_string()));
            }
            _ => {
                return Err(GraphError::Parse {
                    line: i + 1,
                    msg: format!("expected `u v`, got {} tokens", toks.len()),
                })
            }
        }
    }
    names.sort_by(|a, b| natural_cmp(a, b));
    names.dedup();
    let mut g = Graph::with_vertices(names)?;
    for (line, a, b) in pairs {
        if !g.add_named_edge(&a, &b)? {
            return Err(GraphError::Parse { line, msg: format!("duplicate edge {a} {b}") });
        }
    }
    Ok(g)
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph, GraphError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| GraphError::Io(format!("{}: {e}", path.display())))?;
    parse_edge_list(&text)
}

/// Writes isolated vertices first, then edges in index order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for v in 0..g.n() {
        if g.degree(v) == 0 {
            out.push_str(g.name(v));
            out.push('\n');
        }
    }
    for (u, v) in g.edges() {
        out.push_str(g.name(u));
        out.push(' ');
        out.push_str(g.name(v));
        out.push('\n');
    }
    out
}

/// Decodes one graph6 line; vertices are named `0..n-1`.
pub fn parse_graph6(line: &str) -> Result<Graph, GraphError> {
    let bytes = line.trim_end().as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    if bytes.iter().any(|&c| !(63..=126).contains(&c)) {
        return Err(GraphError::Graph6("byte outside 63..=126".into()));
    }
    let (n, rest) = match bytes {
        [] => return Err(GraphError::Graph6("empty".into())),
        [126, 126, ..] => return Err(GraphError::Graph6("graphs above 258047 vertices".into())),
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, rest)
        }
        [126, ..] => return Err(GraphError::Graph6("truncated size".into())),
        [a, rest @ ..] => (*a as usize - 63, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    if rest.len() != bits.div_ceil(6) {
        return Err(GraphError::Graph6(format!(
            "expected {} data bytes for {n} vertices, got {}",
            bits.div_ceil(6),
            rest.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        assert!(n <= 258_047, "graph6 supports at most 258047 vertices");
        out.push(126);
        for s in [12, 6, 0] {
            out.push(((n >> s) & 63) as u8 + 63);
        }
    }
    let (mut acc, mut k) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("ascii")
}
