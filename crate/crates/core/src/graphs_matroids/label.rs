use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::canon::Certificate;
use crate::error::{Error, Result};
use crate::exact_linalg::RationalVector;

use super::{cographic_k33_vectors, Graph, Matroid};

/// Names of the graphs, and of the cographic system, that occur in the classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConwayLabel {
    K5,
    K5Minus1,
    K5Minus2,
    K5Minus3,
    K5Minus2x1,
    K5Minus1Minus2,
    K4Plus1,
    C2221,
    C222,
    C321,
    C221Plus1,
    C3PlusC3,
    C4Plus1,
    C5,
    C3Plus2x1,
    Forest4,
    K33Dual,
    K4,
    C221,
    C3Plus1,
    C4,
    Forest3,
    C3,
    Forest2,
    Forest1,
    Cell24,
}

use ConwayLabel::*;

impl ConwayLabel {
    pub const ALL: [ConwayLabel; 26] = [
        K5, K5Minus1, K5Minus2, K5Minus3, K5Minus2x1, K5Minus1Minus2, K4Plus1, C2221, C222, C321, C221Plus1,
        C3PlusC3, C4Plus1, C5, C3Plus2x1, Forest4, K33Dual, K4, C221, C3Plus1, C4, Forest3, C3, Forest2, Forest1,
        Cell24,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            K5 => "K5",
            K5Minus1 => "K5-1",
            K5Minus2 => "K5-2",
            K5Minus3 => "K5-3",
            K5Minus2x1 => "K5-2x1",
            K5Minus1Minus2 => "K5-1-2",
            K4Plus1 => "K4+1",
            C2221 => "C2221",
            C222 => "C222",
            C321 => "C321",
            C221Plus1 => "C221+1",
            C3PlusC3 => "C3+C3",
            C4Plus1 => "C4+1",
            C5 => "C5",
            C3Plus2x1 => "C3+2x1",
            Forest4 => "4x1",
            K33Dual => "K33*",
            K4 => "K4",
            C221 => "C221",
            C3Plus1 => "C3+1",
            C4 => "C4",
            Forest3 => "3x1",
            C3 => "C3",
            Forest2 => "2x1",
            Forest1 => "1",
            Cell24 => "24-cell",
        }
    }

    /// A graph on at most five vertices with this cycle matroid, if the label is graphic.
    pub fn reference_graph(self) -> Option<Graph> {
        let e: &[(usize, usize)] = match self {
            K5 => &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)],
            K5Minus1 => &[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)],
            K5Minus2 => &[(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)],
            K5Minus3 => &[(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5), (4, 5)],
            K5Minus2x1 => &[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 5), (4, 5)],
            K5Minus1Minus2 => &[(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 5)],
            K4Plus1 => &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (4, 5)],
            C2221 => &[(1, 3), (3, 2), (1, 4), (4, 2), (1, 5), (5, 2), (1, 2)],
            C222 => &[(1, 3), (3, 2), (1, 4), (4, 2), (1, 5), (5, 2)],
            C321 => &[(1, 3), (3, 4), (4, 2), (1, 5), (5, 2), (1, 2)],
            C221Plus1 => &[(1, 3), (3, 2), (1, 4), (4, 2), (1, 2), (2, 5)],
            C3PlusC3 => &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)],
            C4Plus1 => &[(1, 2), (2, 3), (3, 4), (1, 4), (4, 5)],
            C5 => &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)],
            C3Plus2x1 => &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5)],
            Forest4 => &[(1, 2), (2, 3), (3, 4), (4, 5)],
            K4 => &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)],
            C221 => &[(1, 3), (3, 2), (1, 4), (4, 2), (1, 2)],
            C3Plus1 => &[(1, 2), (2, 3), (1, 3), (3, 4)],
            C4 => &[(1, 2), (2, 3), (3, 4), (1, 4)],
            Forest3 => &[(1, 2), (2, 3), (3, 4)],
            C3 => &[(1, 2), (2, 3), (1, 3)],
            Forest2 => &[(1, 2), (2, 3)],
            Forest1 => &[(1, 2)],
            K33Dual | Cell24 => return None,
        };
        Some(Graph::new(5, e.iter().copied()).expect("reference graphs are valid"))
    }

    /// Matroid of the label's reference system.
    pub fn matroid(self) -> Option<Matroid> {
        match self {
            K33Dual => Some(cographic_k33_vectors().matroid()),
            Cell24 => None,
            l => l.reference_graph().map(|g| Matroid::of_graph(&g)),
        }
    }
}

impl fmt::Display for ConwayLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConwayLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown label {s:?}")))
    }
}

impl Serialize for ConwayLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for ConwayLabel {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn label_table() -> &'static BTreeMap<Certificate, ConwayLabel> {
    static TABLE: OnceLock<BTreeMap<Certificate, ConwayLabel>> = OnceLock::new();
    TABLE.get_or_init(|| {
        ConwayLabel::ALL
            .into_iter()
            .filter_map(|l| l.matroid().map(|m| (m.certificate(), l)))
            .collect()
    })
}

/// Label of a matroid, if it is one of the named ones.
pub fn label_of_matroid(m: &Matroid) -> Result<ConwayLabel> {
    label_table().get(&m.certificate()).copied().ok_or(Error::Unlabelable)
}

/// Label by cycle matroid, so the way forest edges or blocks are attached does not matter.
pub fn conway_label(g: &Graph) -> Result<ConwayLabel> {
    label_of_matroid(&Matroid::of_graph(g))
}

/// Label of the matroid represented by a vector system.
pub fn label_of_vectors(vectors: &[RationalVector]) -> Result<ConwayLabel> {
    label_of_matroid(&Matroid::of_vectors(vectors))
}

/// The rank-4 subgraphs of K5 up to cycle-matroid isomorphism, each represented by the
/// first edge subset of its class.
pub fn enumerate_rank4_subgraphs_k5() -> Vec<(Graph, ConwayLabel)> {
    let k5 = K5.reference_graph().expect("K5 is graphic");
    let mut seen: BTreeMap<Certificate, ()> = BTreeMap::new();
    let mut out = Vec::new();
    for mask in 1u32..(1 << k5.n_edges()) {
        if k5.rank_of_edges(mask) != 4 {
            continue;
        }
        let edges = k5.edges().iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, &e)| e);
        let g = Graph::new(5, edges).expect("subgraph of K5");
        let m = Matroid::of_graph(&g);
        if seen.insert(m.certificate(), ()).is_none() {
            let label = label_of_matroid(&m).expect("every rank-4 subgraph of K5 is named");
            out.push((g, label));
        }
    }
    out.sort_by(|a, b| b.0.n_edges().cmp(&a.0.n_edges()).then(a.1.cmp(&b.1)));
    out
}
