//! JSON view of a polytope.

use serde::{Deserialize, Serialize};

use super::{venkov_parallelotope, Polytope};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetJson {
    pub normal: Vec<String>,
    pub rhs: String,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BeltCounts {
    pub b2: usize,
    pub b3: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub dim: usize,
    pub vertices: Vec<Vec<String>>,
    pub facets: Vec<FacetJson>,
    pub fvector: Vec<usize>,
    pub belts: BeltCounts,
}

impl From<&Polytope> for PolytopeJson {
    fn from(p: &Polytope) -> Self {
        let v = venkov_parallelotope(p);
        Self {
            dim: p.dim(),
            vertices: p.vertices().iter().map(|x| x.to_strings()).collect(),
            facets: p
                .facets()
                .iter()
                .enumerate()
                .map(|(i, f)| FacetJson {
                    normal: f.normal.to_strings(),
                    rhs: f.rhs.to_string(),
                    vertices: p.facet_vertices(i).ones().collect(),
                })
                .collect(),
            fvector: p.f_vector(),
            belts: BeltCounts { b2: v.b2(), b3: v.b3() },
        }
    }
}

impl Polytope {
    pub fn to_json(&self) -> PolytopeJson {
        PolytopeJson::from(self)
    }
}
