//! Drawing interchange format.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use xing_graph::{Graph, PlanarEmbedding};

use crate::drawing::CombinatorialDrawing;
use crate::pairing::{planarize_unchecked, CrossingPairing};
use crate::{extract_drawing, CrossingError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairJson {
    pub e: [String; 2],
    pub f: [String; 2],
    pub cross_id: String,
    pub realized: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DrawingJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
    pub pairs: Vec<PairJson>,
    /// Incident planarization edges `[v, w]` of every vertex `v`, in cyclic
    /// order.
    pub rotation: BTreeMap<String, Vec<[String; 2]>>,
    pub outer_face: Vec<String>,
}

fn malformed(msg: impl Into<String>) -> CrossingError {
    CrossingError::Malformed(msg.into())
}

impl CombinatorialDrawing {
    pub fn to_json(&self) -> DrawingJson {
        let p = &self.planarization.graph;
        let name = |v: usize| p.name(v).to_string();
        DrawingJson {
            vertices: self.host.names().to_vec(),
            edges: self.host.edges().iter().map(|&(u, v)| [name(u), name(v)]).collect(),
            pairs: self
                .pairing
                .pairs()
                .iter()
                .enumerate()
                .map(|(i, &(e, f))| PairJson {
                    e: [name(e.0), name(e.1)],
                    f: [name(f.0), name(f.1)],
                    cross_id: name(self.planarization.cross[i]),
                    realized: self.realized[i],
                })
                .collect(),
            rotation: (0..p.n())
                .map(|v| (name(v), self.embedding.rotation(v).iter().map(|&w| [name(v), name(w)]).collect()))
                .collect(),
            outer_face: self.outer_face().into_iter().map(name).collect(),
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("serializable")
    }

    pub fn from_json_str(s: &str) -> Result<Self, CrossingError> {
        let j: DrawingJson = serde_json::from_str(s).map_err(|e| malformed(e.to_string()))?;
        Self::from_json(&j)
    }

    pub fn from_json(j: &DrawingJson) -> Result<Self, CrossingError> {
        let mut host = Graph::with_vertices(j.vertices.iter().cloned()).map_err(|e| malformed(e.to_string()))?;
        let idx = |g: &Graph, s: &str| g.index_of(s).ok_or_else(|| malformed(format!("unknown vertex {s}")));
        for [a, b] in &j.edges {
            let (u, v) = (idx(&host, a)?, idx(&host, b)?);
            if !host.add_edge(u, v).map_err(|e| malformed(e.to_string()))? {
                return Err(malformed(format!("duplicate edge {a} {b}")));
            }
        }
        let mut raw = Vec::new();
        for p in &j.pairs {
            let e = (idx(&host, &p.e[0])?, idx(&host, &p.e[1])?);
            let f = (idx(&host, &p.f[0])?, idx(&host, &p.f[1])?);
            raw.push((e, f));
        }
        let m = CrossingPairing::new(&host, &raw)?;
        let planar = planarize_unchecked(&host, &m);
        // crossing ids from the file, matched to pairs by their edges
        let mut ids: BTreeMap<&str, usize> = BTreeMap::new();
        for (p, &(e, f)) in j.pairs.iter().zip(&raw) {
            let key = CrossingPairing::new(&host, &[(e, f)])?.pairs()[0];
            let i = m.pairs().binary_search(&key).unwrap();
            if host.index_of(&p.cross_id).is_some() || ids.insert(&p.cross_id, planar.cross[i]).is_some() {
                return Err(malformed(format!("crossing id {} is not unique", p.cross_id)));
            }
        }
        let lookup = |s: &str| -> Result<usize, CrossingError> {
            host.index_of(s).or_else(|| ids.get(s).copied()).ok_or_else(|| malformed(format!("unknown id {s}")))
        };
        let mut rot = vec![Vec::new(); planar.graph.n()];
        let mut seen = vec![false; planar.graph.n()];
        for (v, list) in &j.rotation {
            let vi = lookup(v)?;
            seen[vi] = true;
            for [a, b] in list {
                if a != v {
                    return Err(malformed(format!("rotation of {v} lists edge {a}-{b}")));
                }
                rot[vi].push(lookup(b)?);
            }
        }
        if let Some(v) = (0..rot.len()).find(|&v| !seen[v] && planar.graph.degree(v) > 0) {
            return Err(malformed(format!("no rotation for {}", planar.graph.name(v))));
        }
        let emb = PlanarEmbedding::new(rot);
        if !emb.is_consistent_with(&planar.graph) {
            return Err(malformed("rotation does not match the planarization"));
        }
        let walk: Vec<usize> = j.outer_face.iter().map(|s| lookup(s)).collect::<Result<_, _>>()?;
        let faces = emb.faces();
        let outer = faces
            .iter()
            .position(|f| same_cycle(f, &walk))
            .ok_or_else(|| malformed("outer_face is not a face of the embedding"))?;
        let d = extract_drawing(&host, &m, &emb, outer)?;
        for (p, &(e, f)) in j.pairs.iter().zip(&raw) {
            let key = CrossingPairing::new(&host, &[(e, f)])?.pairs()[0];
            let i = m.pairs().binary_search(&key).unwrap();
            if d.realized[i] != p.realized {
                return Err(malformed(format!("pair {} flagged realized={} but rotation says otherwise", p.cross_id, p.realized)));
            }
        }
        Ok(d)
    }
}

fn same_cycle(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && (0..a.len()).any(|k| a.iter().cycle().skip(k).take(a.len()).eq(b.iter()))
}
