//! Chord descriptions: every crossing pair is tied to a chord of a 4-cycle
//! through it in a chordal completion, with a flag separating the (at most
//! two) crossing pairs that share a chord.

use std::collections::{BTreeMap, BTreeSet};

use xing_crossings::{pair_admissible, planarize, CombinatorialDrawing, CrossingPairing, TypeSet};
use xing_graph::{edge_key, is_planar, Edge, Graph};

use crate::topo::drawing_for;
use crate::SolverError;

/// Chordal completion by greedy min-fill elimination (ties to the smallest
/// vertex). Returns the completion, the elimination order and the width of
/// the induced tree decomposition.
pub fn min_fill_completion(g: &Graph) -> (Graph, Vec<usize>, usize) {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut h = g.clone();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    let mut width = 0;
    let fill = |adj: &[BTreeSet<usize>], v: usize| {
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        let mut c = 0;
        for (i, &a) in nb.iter().enumerate() {
            c += nb[i + 1..].iter().filter(|&&b| !adj[a].contains(&b)).count();
        }
        c
    };
    for _ in 0..n {
        let v = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (fill(&adj, v), v)).unwrap();
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        width = width.max(nb.len());
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if adj[a].insert(b) {
                    adj[b].insert(a);
                    h.add_edge(a, b).expect("fill edge between distinct vertices");
                }
            }
        }
        for &a in &nb {
            adj[a].remove(&v);
        }
        adj[v].clear();
        alive[v] = false;
        order.push(v);
    }
    (h, order, width)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChordEntry {
    pub crossing: Edge,
    pub chord: Edge,
    pub flag: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ChordDescription {
    pub entries: BTreeSet<ChordEntry>,
}

impl ChordDescription {
    /// Crossing pairs: crossing edges of two entries with equal chord and
    /// flag. Groups of any other size are skipped.
    pub fn crossing_pairs(&self) -> Vec<(Edge, Edge)> {
        self.groups()
            .into_values()
            .filter(|es| es.len() == 2)
            .map(|es| (es[0].min(es[1]), es[0].max(es[1])))
            .collect()
    }

    /// Crossing pairs per chord edge.
    pub fn chord_load(&self) -> BTreeMap<Edge, usize> {
        let mut load = BTreeMap::new();
        for ((chord, _), es) in self.groups() {
            *load.entry(chord).or_default() += es.len() / 2;
        }
        load
    }

    fn groups(&self) -> BTreeMap<(Edge, u8), Vec<Edge>> {
        let mut g: BTreeMap<(Edge, u8), Vec<Edge>> = BTreeMap::new();
        for e in &self.entries {
            g.entry((e.chord, e.flag)).or_default().push(e.crossing);
        }
        g
    }

    /// Drawing of `g` in which exactly the crossing pairs may cross.
    pub fn induced_drawing(&self, g: &Graph) -> Result<CombinatorialDrawing, SolverError> {
        drawing_for(g, &self.crossing_pairs())
    }
}

/// Ties every pair of `m` to a chord of the min-fill completion of `g`.
pub fn chord_description_of(g: &Graph, m: &CrossingPairing) -> Result<ChordDescription, SolverError> {
    let (h, _, _) = min_fill_completion(g);
    let mut load: BTreeMap<Edge, u8> = BTreeMap::new();
    let mut entries = BTreeSet::new();
    for &(e, f) in m.pairs() {
        let (a, b) = e;
        let (c, d) = f;
        // 4-cycles with e and f opposite: a-b-c-d-a or a-b-d-c-a
        let mut chords = Vec::new();
        if g.has_edge(b, c) && g.has_edge(d, a) {
            chords.extend([edge_key(a, c), edge_key(b, d)]);
        }
        if g.has_edge(b, d) && g.has_edge(c, a) {
            chords.extend([edge_key(a, d), edge_key(b, c)]);
        }
        if chords.is_empty() {
            return Err(SolverError::Chord(format!(
                "pair {}-{} x {}-{} lies on no 4-cycle",
                g.name(a),
                g.name(b),
                g.name(c),
                g.name(d)
            )));
        }
        let chord = chords
            .into_iter()
            .filter(|&(x, y)| h.has_edge(x, y))
            .map(|k| (load.get(&k).copied().unwrap_or(0), k))
            .min()
            .filter(|&(l, _)| l < 2);
        let Some((flag, chord)) = chord else {
            return Err(SolverError::Chord(format!(
                "no chord with a free flag for {}-{} x {}-{}",
                g.name(a),
                g.name(b),
                g.name(c),
                g.name(d)
            )));
        };
        load.insert(chord, flag + 1);
        entries.insert(ChordEntry { crossing: e, chord, flag });
        entries.insert(ChordEntry { crossing: f, chord, flag });
    }
    Ok(ChordDescription { entries })
}

/// Checks the four requirements: partners, edge uniqueness, planarity with
/// claws in place of crossing pairs, and admissibility of every pair.
pub fn validate_chord_description(g: &Graph, psi: &ChordDescription, s: TypeSet) -> bool {
    let mut seen = BTreeSet::new();
    for e in &psi.entries {
        if !g.has_edge(e.crossing.0, e.crossing.1) || e.crossing.0 > e.crossing.1 || !seen.insert(e.crossing) {
            return false;
        }
    }
    if psi.groups().values().any(|es| es.len() != 2) {
        return false;
    }
    let pairs = psi.crossing_pairs();
    if !pairs.iter().all(|&(e, f)| pair_admissible(g, e, f, s).unwrap_or(false)) {
        return false;
    }
    let Ok(m) = CrossingPairing::new(g, &pairs) else {
        return false;
    };
    planarize(g, &m).is_ok_and(|p| is_planar(&p.graph))
}
