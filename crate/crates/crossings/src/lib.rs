//! Crossing types, crossing pairings and their planarizations, purely
//! combinatorial drawings, and detection of the B- and W-configurations that
//! obstruct straight-line realizations.

mod config;
mod drawing;
mod json;
mod pairing;

pub use config::{
    b_outer_face_condition, characterization_report, detect_b_configs, detect_w_configs, w_outer_face_condition, BConfig,
    CharacterizationReport, WConfig,
};
pub use drawing::{extract_drawing, verify_drawing, CombinatorialDrawing, CrossingReport, VerifyReport};
pub use json::DrawingJson;
pub use pairing::{is_crossing_confined, planarize, side_edges, CrossingPairing, Planarization};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;
use xing_graph::{Edge, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrossingError {
    #[error("{0}-{1} is not an edge of the host")]
    MissingEdge(String, String),
    #[error("edges {0} and {1} share an endpoint and cannot cross")]
    Adjacent(String, String),
    #[error("edge {0} occurs in more than one crossing pair")]
    Reused(String),
    #[error("unknown crossing type {0:?}")]
    UnknownType(String),
    #[error("type set must be nonempty")]
    EmptyTypeSet,
    #[error("malformed drawing: {0}")]
    Malformed(String),
}

/// The six crossing types, by the subgraph induced on the four endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CrossingType {
    Full,
    AlmostFull,
    Bowtie,
    Arrow,
    Chair,
    X,
}

impl CrossingType {
    pub const ALL: [CrossingType; 6] = [
        CrossingType::Full,
        CrossingType::AlmostFull,
        CrossingType::Bowtie,
        CrossingType::Arrow,
        CrossingType::Chair,
        CrossingType::X,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CrossingType::Full => "full",
            CrossingType::AlmostFull => "almostfull",
            CrossingType::Bowtie => "bowtie",
            CrossingType::Arrow => "arrow",
            CrossingType::Chair => "chair",
            CrossingType::X => "x",
        }
    }

    fn bit(self) -> u8 {
        1 << self as u8
    }
}

impl fmt::Display for CrossingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CrossingType {
    type Err = CrossingError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CrossingType::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| CrossingError::UnknownType(s.to_string()))
    }
}

/// A nonempty set of crossing types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeSet(u8);

impl TypeSet {
    pub fn new(types: &[CrossingType]) -> Result<Self, CrossingError> {
        let bits = types.iter().fold(0, |b, t| b | t.bit());
        if bits == 0 {
            return Err(CrossingError::EmptyTypeSet);
        }
        Ok(TypeSet(bits))
    }

    pub fn single(t: CrossingType) -> Self {
        TypeSet(t.bit())
    }

    pub fn all() -> Self {
        TypeSet(0b11_1111)
    }

    /// The 63 nonempty subsets.
    pub fn every() -> impl Iterator<Item = TypeSet> {
        (1u8..64).map(TypeSet)
    }

    pub fn contains(self, t: CrossingType) -> bool {
        self.0 & t.bit() != 0
    }

    pub fn is_subset(self, other: TypeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn types(self) -> impl Iterator<Item = CrossingType> {
        CrossingType::ALL.into_iter().filter(move |&t| self.contains(t))
    }

    /// Contained in {full, almostfull, bowtie}, the sets for which the
    /// decomposition into 3-connected pieces is sound.
    pub fn is_decomposable(self) -> bool {
        self.is_subset(TypeSet::new(&[CrossingType::Full, CrossingType::AlmostFull, CrossingType::Bowtie]).unwrap())
    }
}

impl fmt::Display for TypeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.types().map(CrossingType::name).collect();
        f.write_str(&names.join(","))
    }
}

impl FromStr for TypeSet {
    type Err = CrossingError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "all" {
            return Ok(TypeSet::all());
        }
        let types = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(CrossingType::from_str)
            .collect::<Result<Vec<_>, _>>()?;
        TypeSet::new(&types)
    }
}

fn edge_label(g: &Graph, e: Edge) -> String {
    format!("{}-{}", g.name(e.0), g.name(e.1))
}

/// Type of a crossing between the independent edges `e` and `f`, from the
/// side pairs present among their endpoints.
pub fn classify_crossing(g: &Graph, e: Edge, f: Edge) -> Result<CrossingType, CrossingError> {
    for x in [e, f] {
        if !g.has_edge(x.0, x.1) {
            return Err(CrossingError::MissingEdge(g.name(x.0).into(), g.name(x.1).into()));
        }
    }
    if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
        return Err(CrossingError::Adjacent(edge_label(g, e), edge_label(g, f)));
    }
    Ok(classify_unchecked(g, e, f))
}

pub(crate) fn classify_unchecked(g: &Graph, (u, v): Edge, (a, b): Edge) -> CrossingType {
    let ua = g.has_edge(u, a);
    let ub = g.has_edge(u, b);
    let va = g.has_edge(v, a);
    let vb = g.has_edge(v, b);
    match ua as u8 + ub as u8 + va as u8 + vb as u8 {
        4 => CrossingType::Full,
        3 => CrossingType::AlmostFull,
        2 if (ua && vb) || (ub && va) => CrossingType::Bowtie,
        2 => CrossingType::Arrow,
        1 => CrossingType::Chair,
        _ => CrossingType::X,
    }
}

pub fn pair_admissible(g: &Graph, e: Edge, f: Edge, s: TypeSet) -> Result<bool, CrossingError> {
    Ok(s.contains(classify_crossing(g, e, f)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spellings_round_trip() {
        for t in CrossingType::ALL {
            assert_eq!(t.name().parse::<CrossingType>().unwrap(), t);
        }
        let s: TypeSet = "full, bowtie".parse().unwrap();
        assert_eq!(s.to_string(), "full,bowtie");
        assert!(s.is_decomposable());
        assert!(!TypeSet::all().is_decomposable());
        assert_eq!("".parse::<TypeSet>(), Err(CrossingError::EmptyTypeSet));
        assert!(matches!("full,y".parse::<TypeSet>(), Err(CrossingError::UnknownType(_))));
        assert_eq!(TypeSet::every().count(), 63);
    }

    #[test]
    fn classify_examples() {
        let k4 = Graph::complete(4);
        assert_eq!(classify_crossing(&k4, (0, 1), (2, 3)).unwrap(), CrossingType::Full);
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(classify_crossing(&two, (0, 1), (2, 3)).unwrap(), CrossingType::X);
        // u=0 v=1 u'=2 v'=3 with vu' and uv': cycle 0-1-2-3-0
        let c = Graph::from_edges(4, &[(0, 1), (2, 3), (1, 2), (0, 3)]).unwrap();
        assert_eq!(classify_crossing(&c, (0, 1), (2, 3)).unwrap(), CrossingType::Bowtie);
        assert!(matches!(classify_crossing(&k4, (0, 1), (1, 2)), Err(CrossingError::Adjacent(..))));
        assert!(pair_admissible(&k4, (0, 1), (2, 3), TypeSet::single(CrossingType::Full)).unwrap());
        assert!(!pair_admissible(&k4, (0, 1), (2, 3), TypeSet::single(CrossingType::X)).unwrap());
        let cx = TypeSet::new(&[CrossingType::Chair, CrossingType::X]).unwrap();
        assert!(pair_admissible(&two, (0, 1), (2, 3), cx).unwrap());
    }
}
