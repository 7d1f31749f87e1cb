use xing_graph::{is_biconnected, Edge, Graph};

use crate::spr::{spr_tree, NodeKind, SprTree};
use crate::DecompError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeTag {
    /// A real edge of the skeleton.
    Real,
    /// One of the two halves of a subdivided virtual edge.
    VirtualSubdivided,
    /// The host edge `uv` kept next to a subdivided virtual edge `uv`.
    VirtualRetained,
}

impl EdgeTag {
    pub fn as_str(self) -> &'static str {
        match self {
            EdgeTag::Real => "real",
            EdgeTag::VirtualSubdivided => "virtual-subdivided",
            EdgeTag::VirtualRetained => "virtual-retained",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonPlus {
    pub graph: Graph,
    /// Tag of every edge of `graph`, in `graph.edges()` order.
    pub provenance: Vec<(Edge, EdgeTag)>,
    pub subdivision_vertices: Vec<usize>,
    /// Host index of each vertex of `graph` (`None` for subdivision vertices).
    pub host_vertex: Vec<Option<usize>>,
}

impl SkeletonPlus {
    pub fn tag(&self, e: Edge) -> Option<EdgeTag> {
        self.provenance.binary_search_by_key(&e, |p| p.0).ok().map(|i| self.provenance[i].1)
    }
}

/// Skeleton of `node` with every virtual edge `uv` subdivided once, plus the
/// edge `uv` itself whenever the host has it. A host edge gets one copy even
/// if several virtual edges of the skeleton join the same pair.
pub fn skeleton_plus(t: &SprTree, node: usize, host: &Graph) -> SkeletonPlus {
    let sk = &t.nodes[node];
    let mut g = Graph::with_vertices(sk.vertices.iter().map(|&v| host.name(v).to_string()))
        .expect("host ids are distinct");
    let local = |x: usize| sk.vertices.binary_search(&x).unwrap();
    let mut host_vertex: Vec<Option<usize>> = sk.vertices.iter().map(|&v| Some(v)).collect();
    let mut tags: Vec<(Edge, EdgeTag)> = Vec::new();
    let mut subdivision_vertices = Vec::new();
    for e in sk.edges.iter().filter(|e| e.virt.is_none()) {
        let (a, b) = (local(e.u), local(e.v));
        g.add_edge(a, b).expect("simple");
        tags.push(((a, b), EdgeTag::Real));
    }
    for e in sk.virtual_edges() {
        let (a, b) = (local(e.u), local(e.v));
        let base = format!("sub:{}:{}", host.name(e.u), host.name(e.v));
        let t = g.add_fresh_vertex(&base);
        // fresh names must also avoid host ids
        debug_assert!(host.index_of(g.name(t)).is_none());
        host_vertex.push(None);
        subdivision_vertices.push(t);
        g.add_edge(a, t).unwrap();
        g.add_edge(b, t).unwrap();
        tags.push(((a, t), EdgeTag::VirtualSubdivided));
        tags.push(((b, t), EdgeTag::VirtualSubdivided));
        if host.has_edge(e.u, e.v) && g.add_edge(a, b).unwrap() {
            tags.push(((a, b), EdgeTag::VirtualRetained));
        }
    }
    tags.sort_unstable();
    SkeletonPlus { graph: g, provenance: tags, subdivision_vertices, host_vertex }
}

/// Vertex 3-connectivity by deleting every pair of vertices.
pub fn is_3connected(g: &Graph) -> bool {
    let n = g.n();
    if n < 4 || !is_biconnected(g.adjacency()) {
        return false;
    }
    for a in 0..n {
        let rest: Vec<usize> = (0..n).filter(|&v| v != a).collect();
        let (h, _) = g.induced(&rest);
        if !is_biconnected(h.adjacency()) {
            return false;
        }
    }
    true
}

/// Shape test on the SPR-tree: one R-node, and every other node is a
/// triangle S-node hanging off the R-node or off a P-node, or a P-node next
/// to the R-node whose other neighbours are all such triangles.
pub fn is_internally_3connected(g: &Graph) -> bool {
    if g.n() < 4 {
        return false;
    }
    let Ok(t) = spr_tree(g) else {
        return false;
    };
    let rs: Vec<usize> = (0..t.nodes.len()).filter(|&i| t.nodes[i].kind == NodeKind::R).collect();
    let [r] = rs[..] else {
        return false;
    };
    let leaf_triangle = |x: usize| {
        let n = &t.nodes[x];
        n.kind == NodeKind::S && n.edges.len() == 3 && n.virtual_edges().count() == 1
    };
    (0..t.nodes.len()).filter(|&x| x != r).all(|x| match t.nodes[x].kind {
        NodeKind::S => leaf_triangle(x),
        NodeKind::P => {
            let nb = t.neighbors(x);
            nb.contains(&r) && nb.iter().all(|&y| y == r || leaf_triangle(y))
        }
        NodeKind::R => unreachable!(),
    })
}

/// The definition: degree-two vertices are pairwise non-adjacent, all other
/// vertices have degree at least three, and suppressing the degree-two
/// vertices leaves a graph whose underlying simple graph is 3-connected.
pub fn is_internally_3connected_by_definition(g: &Graph) -> bool {
    let n = g.n();
    if (0..n).any(|v| g.degree(v) < 2) {
        return false;
    }
    let d: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 2).collect();
    if d.iter().any(|&t| g.neighbors(t).iter().any(|&w| g.degree(w) == 2)) {
        return false;
    }
    let keep: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 2).collect();
    let (mut base, _) = g.induced(&keep);
    for &t in &d {
        let (s, s2) = (g.neighbors(t)[0], g.neighbors(t)[1]);
        let a = keep.binary_search(&s).unwrap();
        let b = keep.binary_search(&s2).unwrap();
        base.add_edge(a, b).unwrap();
    }
    base.n() >= 4 && is_3connected(&base)
}

/// Splits a biconnected graph at the separation pair `{s, s2}` into
/// `G[X1]` and `G[X2]`, each completed by a fresh vertex adjacent to `s`
/// and `s2`. `side` is `X1`; `X2` is the rest together with `s, s2`.
pub fn split_at_2separator(
    g: &Graph,
    s: usize,
    s2: usize,
    side: &[usize],
) -> Result<(Graph, Graph), DecompError> {
    if !is_biconnected(g.adjacency()) {
        return Err(DecompError::NotBiconnected);
    }
    let bad = |m: &str| Err(DecompError::BadSeparation(m.to_string()));
    if s == s2 || s >= g.n() || s2 >= g.n() {
        return bad("separator needs two distinct vertices");
    }
    let mut x1: Vec<usize> = side.to_vec();
    x1.sort_unstable();
    x1.dedup();
    if x1.iter().any(|&v| v >= g.n()) {
        return bad("side names a vertex outside the graph");
    }
    if x1.binary_search(&s).is_err() || x1.binary_search(&s2).is_err() {
        return bad("side must contain both separator vertices");
    }
    let x2: Vec<usize> = (0..g.n())
        .filter(|&v| v == s || v == s2 || x1.binary_search(&v).is_err())
        .collect();
    if x1.len() < 3 || x2.len() < 3 {
        return bad("both sides need a vertex besides the separator");
    }
    for (u, v) in g.edges() {
        let a = x1.binary_search(&u).is_ok() && u != s && u != s2;
        let b = x1.binary_search(&v).is_ok() && v != s && v != s2;
        let c = x2.binary_search(&u).is_ok() && u != s && u != s2;
        let d = x2.binary_search(&v).is_ok() && v != s && v != s2;
        if (a && d) || (b && c) {
            return bad(&format!("edge {} {} crosses the separation", g.name(u), g.name(v)));
        }
    }
    let build = |xs: &[usize], base: &str| {
        let (mut h, map) = g.induced(xs);
        let name = fresh_for(g, &h, base);
        let t = h.add_vertex(name).unwrap();
        let ls = map.iter().position(|&v| v == s).unwrap();
        let ls2 = map.iter().position(|&v| v == s2).unwrap();
        h.add_edge(ls, t).unwrap();
        h.add_edge(ls2, t).unwrap();
        h
    };
    Ok((build(&x1, "t1"), build(&x2, "t2")))
}

fn fresh_for(host: &Graph, h: &Graph, base: &str) -> String {
    let mut name = host.fresh_name(base);
    while h.index_of(&name).is_some() {
        name.push('\'');
    }
    name
}

/// `G'(T, mu, nu)`: the host subgraph induced by the skeleton vertices on
/// `mu`'s side of the tree edge `mu nu`, plus a fresh vertex joined to both
/// vertices of the separation pair of that tree edge.
pub fn spr_side_graph(t: &SprTree, mu: usize, nu: usize, host: &Graph) -> Result<Graph, DecompError> {
    let te = t.tree_edge(mu, nu).ok_or(DecompError::NotTreeEdge(mu, nu))?;
    let (s, s2) = t.tree_edges[te].pair;
    let mut vs: Vec<usize> = t.side(mu, nu).iter().flat_map(|&x| t.nodes[x].vertices.clone()).collect();
    vs.sort_unstable();
    vs.dedup();
    let (mut h, map) = host.induced(&vs);
    let name = fresh_for(host, &h, "t");
    let x = h.add_vertex(name).unwrap();
    h.add_edge(map.binary_search(&s).unwrap(), x).unwrap();
    h.add_edge(map.binary_search(&s2).unwrap(), x).unwrap();
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_minus(e: Edge) -> Graph {
        let mut g = Graph::complete(4);
        g.remove_edge(e.0, e.1);
        g
    }

    #[test]
    fn skeleton_plus_of_plain_r_node() {
        let g = Graph::complete(4);
        let t = spr_tree(&g).unwrap();
        let sp = skeleton_plus(&t, 0, &g);
        assert_eq!(sp.graph.edges(), g.edges());
        assert!(sp.provenance.iter().all(|p| p.1 == EdgeTag::Real));
    }

    #[test]
    fn skeleton_plus_without_and_with_retained_edge() {
        // K4 on 0..3 whose edge 0-1 is replaced by the path 0-4-1: the R-node
        // has virtual edge 01 and 01 is not a host edge
        let g = Graph::from_edges(5, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)]).unwrap();
        let t = spr_tree(&g).unwrap();
        let r = t.nodes.iter().position(|n| n.kind == NodeKind::R).unwrap();
        let sp = skeleton_plus(&t, r, &g);
        assert_eq!(sp.graph.n(), 5);
        assert_eq!(sp.graph.m(), 7);
        assert!(!sp.graph.has_edge(0, 1));
        let (h, _) = sp.graph.induced(&[0, 1, 2, 3]);
        assert_eq!(h.edges(), k4_minus((0, 1)).edges());
        assert_eq!(sp.subdivision_vertices, vec![4]);

        // adding the host edge 0-1 retains a copy next to the subdivided path
        let mut g2 = g.clone();
        g2.add_edge(0, 1).unwrap();
        let t2 = spr_tree(&g2).unwrap();
        let r2 = t2.nodes.iter().position(|n| n.kind == NodeKind::R).unwrap();
        let sp2 = skeleton_plus(&t2, r2, &g2);
        assert_eq!(sp2.graph.m(), 8);
        assert_eq!(sp2.tag((0, 1)), Some(EdgeTag::VirtualRetained));
        assert!(is_internally_3connected(&sp2.graph));
    }

    #[test]
    fn internally_3connected_examples() {
        assert!(is_internally_3connected(&Graph::complete(4)));
        let mut e = Vec::new();
        for (i, (u, v)) in Graph::complete(4).edges().into_iter().enumerate() {
            e.push((u, 4 + i));
            e.push((v, 4 + i));
        }
        let sub = Graph::from_edges(10, &e).unwrap();
        assert!(is_internally_3connected(&sub));
        assert!(is_internally_3connected_by_definition(&sub));
        assert!(!is_internally_3connected(&Graph::path(4)));
        assert!(!is_internally_3connected(&Graph::cycle(5)));
    }

    #[test]
    fn split_c4() {
        let g = Graph::cycle(4); // 0 1 2 3: s=0, a=1, s'=2, b=3
        let (g1, g2) = split_at_2separator(&g, 0, 2, &[0, 1, 2]).unwrap();
        assert_eq!(g1.names(), ["0", "1", "2", "t1"]);
        assert_eq!(g1.edges(), vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(g2.names(), ["0", "2", "3", "t2"]);
        assert_eq!(g2.edges(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert!(split_at_2separator(&g, 0, 1, &[0, 1, 2]).is_err());
    }

    #[test]
    fn split_k4_minus_edge() {
        // separator {2, 3}; the two degree-2 vertices 0 and 1 on either side
        let g = k4_minus((0, 1));
        let (g1, g2) = split_at_2separator(&g, 2, 3, &[0, 2, 3]).unwrap();
        for h in [&g1, &g2] {
            assert_eq!(h.n(), 4);
            assert_eq!(h.m(), 5);
            assert!(h.has_edge(0, 1) || h.has_edge(1, 2), "separator edge kept");
        }
        assert!(g1.has_edge(1, 2));
    }
}
