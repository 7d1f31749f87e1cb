use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::GraphError;

/// An undirected edge as a pair of vertex indices with `0 <= u < v`.
pub type Edge = (usize, usize);

/// Normalizes an unordered pair of vertex indices.
#[inline]
pub fn edge_key(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Orders vertex ids so that embedded digit runs compare numerically
/// ("v2" < "v10").
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    let (mut x, mut y) = (a.as_bytes(), b.as_bytes());
    loop {
        match (x.first(), y.first()) {
            (None, None) => return a.cmp(b),
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(p), Some(q)) if p.is_ascii_digit() && q.is_ascii_digit() => {
                let i = x.iter().take_while(|c| c.is_ascii_digit()).count();
                let j = y.iter().take_while(|c| c.is_ascii_digit()).count();
                let (dx, dy) = (trim_zeros(&x[..i]), trim_zeros(&y[..j]));
                let ord = dx.len().cmp(&dy.len()).then_with(|| dx.cmp(dy));
                if ord != Ordering::Equal {
                    return ord;
                }
                x = &x[i..];
                y = &y[j..];
            }
            (Some(p), Some(q)) => {
                if p != q {
                    return p.cmp(q);
                }
                x = &x[1..];
                y = &y[1..];
            }
        }
    }
}

fn trim_zeros(s: &[u8]) -> &[u8] {
    let k = s.iter().take_while(|&&c| c == b'0').count();
    &s[k.min(s.len().saturating_sub(1))..]
}

/// A simple undirected graph over named vertices.
///
/// Vertices are addressed by dense indices `0..n`; every vertex also carries
/// an opaque string id. Adjacency lists are kept sorted, so iteration order
/// depends only on the index order, which makes every algorithm built on top
/// deterministic.
#[derive(Clone, Default)]
pub struct Graph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.adj == other.adj
    }
}
impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|&(u, v)| format!("{}-{}", self.names[u], self.names[v]))
            .collect();
        f.debug_struct("Graph")
            .field("vertices", &self.names)
            .field("edges", &edges)
            .finish()
    }
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph with the given vertices (in the given order) and no edges.
    pub fn with_vertices<I, S>(names: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut g = Graph::new();
        for s in names {
            g.add_vertex(s)?;
        }
        Ok(g)
    }

    /// Builds a graph from named edges. Vertex indices follow natural order
    /// of the ids.
    pub fn from_named_edges<I, S>(edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (S, S)>,
        S: AsRef<str>,
    {
        let edges: Vec<(String, String)> = edges
            .into_iter()
            .map(|(a, b)| (a.as_ref().to_string(), b.as_ref().to_string()))
            .collect();
        let mut names: Vec<String> = edges
            .iter()
            .flat_map(|(a, b)| [a.clone(), b.clone()])
            .collect();
        names.sort_by(|a, b| natural_cmp(a, b));
        names.dedup();
        let mut g = Graph::with_vertices(names)?;
        for (a, b) in &edges {
            let (u, v) = (g.index[a], g.index[b]);
            if !g.add_edge(u, v)? {
                return Err(GraphError::DuplicateEdge(a.clone(), b.clone()));
            }
        }
        Ok(g)
    }

    /// Graph on vertices "0".."n-1" with the given index edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::with_vertices((0..n).map(|i| i.to_string()))?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::UnknownVertex(u.max(v).to_string()));
            }
            if !g.add_edge(u, v)? {
                return Err(GraphError::DuplicateEdge(u.to_string(), v.to_string()));
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges).expect("valid complete graph")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("valid cycle")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    /// K_{a,b} with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges: Vec<_> = (0..a)
            .flat_map(|u| (a..a + b).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(a + b, &edges).expect("valid complete bipartite graph")
    }

    pub fn add_vertex(&mut self, name: impl Into<String>) -> Result<usize, GraphError> {
        let name = name.into();
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            return Err(GraphError::BadVertexId(name));
        }
        if self.index.contains_key(&name) {
            return Err(GraphError::DuplicateVertex(name));
        }
        let id = self.names.len();
        self.index.insert(name.clone(), id);
        self.names.push(name);
        self.adj.push(Vec::new());
        Ok(id)
    }

    /// Adds a vertex whose id starts with `base` and is not yet taken.
    pub fn add_fresh_vertex(&mut self, base: &str) -> usize {
        let name = self.fresh_name(base);
        self.add_vertex(name).expect("fresh id")
    }

    /// Returns `base`, or `base` with primes appended, whichever is unused.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        while self.index.contains_key(&name) {
            name.push('\'');
        }
        name
    }

    /// Inserts edge `uv`; returns `false` if it was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(self.names[u].clone()));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(p) => {
                self.adj[u].insert(p, v);
                let q = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(q, u);
                self.m += 1;
                Ok(true)
            }
        }
    }

    pub fn add_named_edge(&mut self, a: &str, b: &str) -> Result<bool, GraphError> {
        let u = self.index_of(a).ok_or_else(|| GraphError::UnknownVertex(a.into()))?;
        let v = self.index_of(b).ok_or_else(|| GraphError::UnknownVertex(b.into()))?;
        self.add_edge(u, v)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        match self.adj[u].binary_search(&v) {
            Ok(p) => {
                self.adj[u].remove(p);
                let q = self.adj[v].binary_search(&u).expect("symmetric adjacency");
                self.adj[v].remove(q);
                self.m -= 1;
                true
            }
            Err(_) => false,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m);
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn edge_names(&self, e: Edge) -> (&str, &str) {
        (self.name(e.0), self.name(e.1))
    }

    /// Subgraph induced by `vs`, with vertices in the order given. The second
    /// component maps new indices back to indices of `self`.
    pub fn induced(&self, vs: &[usize]) -> (Graph, Vec<usize>) {
        let mut g = Graph::new();
        let mut local = HashMap::with_capacity(vs.len());
        for &v in vs {
            let id = g.add_vertex(self.names[v].clone()).expect("distinct ids");
            local.insert(v, id);
        }
        for &v in vs {
            for &w in &self.adj[v] {
                if v < w {
                    if let Some(&lw) = local.get(&w) {
                        g.add_edge(local[&v], lw).expect("simple");
                    }
                }
            }
        }
        (g, vs.to_vec())
    }

    /// Subgraph with the given edges and all of their endpoints (kept in
    /// index order).
    pub fn edge_subgraph(&self, edges: &[Edge]) -> (Graph, Vec<usize>) {
        let mut vs: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs.dedup();
        let mut g = Graph::with_vertices(vs.iter().map(|&v| self.names[v].clone()))
            .expect("distinct ids");
        for &(u, v) in edges {
            let a = vs.binary_search(&u).expect("endpoint");
            let b = vs.binary_search(&v).expect("endpoint");
            g.add_edge(a, b).expect("simple");
        }
        (g, vs)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components_of(&self.adj)
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }
}

/// Connected components of an adjacency structure.
pub fn components_of(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Biconnected components and cutvertices of an adjacency structure.
///
/// Each block is returned as its sorted edge list; bridges are blocks with a
/// single edge. Isolated vertices belong to no block.
pub fn biconnected_components(adj: &[Vec<usize>]) -> (Vec<Vec<Edge>>, Vec<usize>) {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut blocks = Vec::new();
    let mut estack: Vec<Edge> = Vec::new();
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX || adj[root].is_empty() {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour position)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent, ref mut pos)) = stack.last_mut() {
            if *pos < adj[v].len() {
                let w = adj[v][*pos];
                *pos += 1;
                if disc[w] == usize::MAX {
                    estack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    estack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        if p != root {
                            is_cut[p] = true;
                        }
                        let mut block = Vec::new();
                        while let Some(e) = estack.pop() {
                            block.push(edge_key(e.0, e.1));
                            if e == (p, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    blocks.sort();
    let cuts = (0..n).filter(|&v| is_cut[v]).collect();
    (blocks, cuts)
}

/// True iff the adjacency structure is connected, has at least three
/// vertices, and has no cutvertex.
pub fn is_biconnected(adj: &[Vec<usize>]) -> bool {
    if adj.len() < 3 {
        return false;
    }
    let (blocks, _) = biconnected_components(adj);
    blocks.len() == 1 && {
        let mut vs: Vec<usize> = blocks[0].iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs.len() == adj.len()
    }
}
