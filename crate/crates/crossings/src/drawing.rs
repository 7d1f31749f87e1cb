use serde::Serialize;
use xing_graph::{Edge, Graph, PlanarEmbedding};

use crate::pairing::{planarize_unchecked, CrossingPairing, Planarization};
use crate::{classify_unchecked, CrossingError, CrossingType, TypeSet};

/// A 1-planar drawing up to equivalence: a planar embedding of the
/// planarization with a designated outer face.
///
/// A pair whose crossing vertex sees the endpoints of its two edges in
/// non-alternating order only touches; it stays in the pairing but is
/// flagged unrealized and is not a crossing of the drawing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombinatorialDrawing {
    pub host: Graph,
    pub pairing: CrossingPairing,
    pub planarization: Planarization,
    pub realized: Vec<bool>,
    /// Embedding of `planarization.graph`; `embedding.outer` indexes
    /// `embedding.faces()`.
    pub embedding: PlanarEmbedding,
}

/// Builds a drawing from an embedding of `planarize(g, m)` and the index of
/// its outer face.
pub fn extract_drawing(
    g: &Graph,
    m: &CrossingPairing,
    emb: &PlanarEmbedding,
    outer: usize,
) -> Result<CombinatorialDrawing, CrossingError> {
    let m = CrossingPairing::new(g, m.pairs())?;
    let planarization = planarize_unchecked(g, &m);
    let mut embedding = emb.clone();
    embedding.outer = outer;
    check_embedding(&planarization, &embedding)?;
    let realized = alternation(&m, &planarization, &embedding);
    Ok(CombinatorialDrawing { host: g.clone(), pairing: m, planarization, realized, embedding })
}

fn check_embedding(p: &Planarization, emb: &PlanarEmbedding) -> Result<(), CrossingError> {
    if !emb.is_consistent_with(&p.graph) {
        return Err(CrossingError::Malformed("rotation does not match the planarization".into()));
    }
    if !emb.is_planar() {
        return Err(CrossingError::Malformed("rotation system is not planar".into()));
    }
    if emb.outer >= emb.face_count() {
        return Err(CrossingError::Malformed(format!("no face with index {}", emb.outer)));
    }
    Ok(())
}

fn alternation(m: &CrossingPairing, p: &Planarization, emb: &PlanarEmbedding) -> Vec<bool> {
    m.pairs()
        .iter()
        .zip(&p.cross)
        .map(|(&(e, _), &x)| {
            let r = emb.rotation(x);
            let a = r.iter().position(|&w| w == e.0).unwrap();
            let b = r.iter().position(|&w| w == e.1).unwrap();
            a.abs_diff(b) == 2
        })
        .collect()
}

impl CombinatorialDrawing {
    pub fn n_host(&self) -> usize {
        self.host.n()
    }

    pub fn cross_vertex(&self, pair: usize) -> usize {
        self.planarization.cross[pair]
    }

    pub fn outer_face(&self) -> Vec<usize> {
        self.embedding.faces().swap_remove(self.embedding.outer)
    }

    /// A dart of the outer face whose tail is a host vertex, if the outer
    /// face has any dart.
    pub fn outer_dart(&self) -> Option<(usize, usize)> {
        let f = self.outer_face();
        if f.len() == 1 && self.embedding.rotation(f[0]).is_empty() {
            return None;
        }
        let k = f.len();
        (0..k)
            .find(|&i| f[i] < self.host.n())
            .map(|i| (f[i], f[(i + 1) % k]))
    }

    /// Endpoint on the other side of the crossing vertex: `a` and the
    /// returned vertex are the two ends of one paired edge.
    pub fn through(&self, pair: usize, a: usize) -> usize {
        let (e, f) = self.pairing.pairs()[pair];
        for x in [e, f] {
            if x.0 == a {
                return x.1;
            }
            if x.1 == a {
                return x.0;
            }
        }
        panic!("{a} is not an endpoint of pair {pair}")
    }

    /// Same drawing with every unrealized pair replaced by its two uncrossed
    /// edges. The second component maps new pair indices to old ones.
    pub fn realized_only(&self) -> (CombinatorialDrawing, Vec<usize>) {
        if self.realized.iter().all(|&r| r) {
            return (self.clone(), (0..self.pairing.len()).collect());
        }
        let n = self.host.n();
        let keep: Vec<usize> = (0..self.pairing.len()).filter(|&i| self.realized[i]).collect();
        let pairing = CrossingPairing::from_sorted_unchecked(keep.iter().map(|&i| self.pairing.pairs()[i]).collect());
        let planarization = planarize_unchecked(&self.host, &pairing);
        let old_to_new = |v: usize| -> usize {
            if v < n {
                v
            } else {
                let old = self.planarization.pair_of(v).unwrap();
                planarization.cross[keep.binary_search(&old).unwrap()]
            }
        };
        let mut rot = vec![Vec::new(); planarization.graph.n()];
        for v in 0..self.planarization.graph.n() {
            let pair = self.planarization.pair_of(v);
            if pair.is_some_and(|p| !self.realized[p]) {
                continue;
            }
            rot[old_to_new(v)] = self
                .embedding
                .rotation(v)
                .iter()
                .map(|&w| match self.planarization.pair_of(w) {
                    Some(p) if !self.realized[p] => self.through(p, v),
                    _ => old_to_new(w),
                })
                .collect();
        }
        let mut embedding = PlanarEmbedding::new(rot);
        if let Some((a, b)) = self.outer_dart() {
            let b = match self.planarization.pair_of(b) {
                Some(p) if !self.realized[p] => self.through(p, a),
                _ => old_to_new(b),
            };
            let faces = embedding.dart_faces();
            let i = embedding.rotation(a).iter().position(|&w| w == b).unwrap();
            embedding.outer = faces[a][i];
        }
        let realized = vec![true; keep.len()];
        (CombinatorialDrawing { host: self.host.clone(), pairing, planarization, realized, embedding }, keep)
    }

    fn check(&self) -> Result<(), CrossingError> {
        let m = CrossingPairing::new(&self.host, self.pairing.pairs())?;
        if m != self.pairing {
            return Err(CrossingError::Malformed("pairing is not normalized".into()));
        }
        if planarize_unchecked(&self.host, &m) != self.planarization {
            return Err(CrossingError::Malformed("planarization does not match the pairing".into()));
        }
        check_embedding(&self.planarization, &self.embedding)?;
        if alternation(&m, &self.planarization, &self.embedding) != self.realized {
            return Err(CrossingError::Malformed("realized flags disagree with the rotation".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingReport {
    pub e: [String; 2],
    pub f: [String; 2],
    #[serde(rename = "type")]
    pub kind: CrossingType,
    pub realized: bool,
    pub allowed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub types: String,
    pub one_planar: bool,
    pub crossings: Vec<CrossingReport>,
    pub violations: Vec<String>,
    pub pass: bool,
}

/// Re-checks the drawing's invariants and types every realized crossing.
pub fn verify_drawing(d: &CombinatorialDrawing, s: TypeSet) -> Result<VerifyReport, CrossingError> {
    d.check()?;
    let names = |e: Edge| [d.host.name(e.0).to_string(), d.host.name(e.1).to_string()];
    let mut crossings = Vec::new();
    let mut violations = Vec::new();
    for (i, &(e, f)) in d.pairing.pairs().iter().enumerate() {
        let kind = classify_unchecked(&d.host, e, f);
        let allowed = !d.realized[i] || s.contains(kind);
        if !allowed {
            violations.push(format!(
                "{}-{} x {}-{} is {kind}",
                d.host.name(e.0),
                d.host.name(e.1),
                d.host.name(f.0),
                d.host.name(f.1)
            ));
        }
        crossings.push(CrossingReport { e: names(e), f: names(f), kind, realized: d.realized[i], allowed });
    }
    Ok(VerifyReport {
        types: s.to_string(),
        one_planar: true,
        pass: violations.is_empty(),
        crossings,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use xing_graph::planar_embedding;

    pub(crate) fn k5_drawing() -> CombinatorialDrawing {
        let g = Graph::complete(5);
        let m = CrossingPairing::new(&g, &[((0, 2), (1, 3))]).unwrap();
        let p = planarize_unchecked(&g, &m);
        let emb = planar_embedding(&p.graph).unwrap();
        extract_drawing(&g, &m, &emb, 0).unwrap()
    }

    #[test]
    fn k5_single_full_crossing() {
        let d = k5_drawing();
        assert_eq!(d.realized, vec![true]);
        let full = verify_drawing(&d, TypeSet::single(CrossingType::Full)).unwrap();
        assert!(full.pass);
        assert_eq!(full.crossings[0].kind, CrossingType::Full);
        let x = verify_drawing(&d, TypeSet::single(CrossingType::X)).unwrap();
        assert!(!x.pass);
        assert_eq!(x.violations, vec!["0-2 x 1-3 is full"]);
    }

    #[test]
    fn touching_bowtie_is_unrealized() {
        // 4-cycle 0-1-2-3 with pair 01 x 23; place the crossing vertex so
        // its rotation reads 0,1,2,3 (non-alternating)
        let g = Graph::from_edges(4, &[(0, 1), (2, 3), (1, 2), (0, 3)]).unwrap();
        let m = CrossingPairing::new(&g, &[((0, 1), (2, 3))]).unwrap();
        // planarization: edges 0-4,1-4,2-4,3-4,1-2,0-3
        let rot = vec![vec![4, 3], vec![2, 4], vec![4, 1], vec![0, 4], vec![0, 1, 2, 3]];
        let emb = PlanarEmbedding::new(rot);
        let d = extract_drawing(&g, &m, &emb, 0).unwrap();
        assert_eq!(d.realized, vec![false]);
        let r = verify_drawing(&d, TypeSet::single(CrossingType::Full)).unwrap();
        assert!(r.pass);
        assert_eq!(r.crossings[0].kind, CrossingType::Bowtie);
        let (real, map) = d.realized_only();
        assert!(map.is_empty());
        assert_eq!(real.planarization.graph, g);
        assert!(real.embedding.is_planar());
    }

    #[test]
    fn malformed_flags_are_rejected() {
        let mut d = k5_drawing();
        d.realized[0] = false;
        assert!(matches!(verify_drawing(&d, TypeSet::all()), Err(CrossingError::Malformed(_))));
    }
}
