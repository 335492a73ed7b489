use serde::{Deserialize, Serialize};

use crate::canon::{Bipartite, Certificate};
use crate::error::{Error, Result};

/// Undirected multigraph on vertices `1..=n`, loops excluded.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<RawGraph> for Graph {
    type Error = Error;
    fn try_from(raw: RawGraph) -> Result<Self> {
        Graph::new(raw.n, raw.edges.iter().map(|e| (e[0], e[1])))
    }
}

impl From<Graph> for RawGraph {
    fn from(g: Graph) -> Self {
        RawGraph { n: g.n, edges: g.edges.iter().map(|&(a, b)| [a, b]).collect() }
    }
}

impl Graph {
    /// Endpoints are 1-based; each edge is stored with the smaller endpoint first.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            out.push((a.min(b), a.max(b)));
        }
        Ok(Self { n, edges: out })
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn n_components(&self) -> usize {
        self.n - self.rank()
    }

    /// `n_vertices - n_components`, the rank of the cycle matroid.
    pub fn rank(&self) -> usize {
        self.rank_of_edges(u32::MAX)
    }

    /// Rank of the sub-forest spanned by the edges selected in `mask`.
    pub(crate) fn rank_of_edges(&self, mask: u32) -> usize {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut r = 0;
        for (k, &(a, b)) in self.edges.iter().enumerate() {
            if k < 32 && mask & (1 << k) == 0 {
                continue;
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                r += 1;
            }
        }
        r
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(a, b) in &self.edges {
            d[a - 1] += 1;
            d[b - 1] += 1;
        }
        d
    }

    /// Canonical form of the vertex-edge incidence structure.
    pub fn certificate(&self) -> Certificate {
        let rows: Vec<Vec<usize>> = self.edges.iter().map(|&(a, b)| vec![a - 1, b - 1]).collect();
        Bipartite::new(self.n, &rows).certificate()
    }
}

pub fn graph_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n == b.n && a.edges.len() == b.edges.len() && a.certificate() == b.certificate()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(Graph::new(3, [(1, 1)]), Err(Error::Loop(1))));
        assert!(matches!(Graph::new(3, [(1, 4)]), Err(Error::VertexOutOfRange { vertex: 4, n: 3 })));
        assert!(Graph::new(3, [(2, 1), (1, 2)]).is_ok());
    }

    #[test]
    fn rank_counts_components() {
        let k5 = g(5, &[(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]);
        assert_eq!(k5.rank(), 4);
        let two = g(5, &[(1, 2), (3, 4)]);
        assert_eq!(two.rank(), 2);
        assert_eq!(two.n_components(), 3);
    }

    #[test]
    fn isomorphism_examples() {
        let c5 = g(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]);
        let c5b = g(5, &[(1, 3), (3, 5), (5, 2), (2, 4), (4, 1)]);
        let c4_1 = g(5, &[(1, 2), (2, 3), (3, 4), (4, 1), (4, 5)]);
        assert!(graph_isomorphic(&c5, &c5b));
        assert!(!graph_isomorphic(&c5, &c4_1));
        let path = g(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]);
        let star = g(5, &[(1, 2), (1, 3), (1, 4), (1, 5)]);
        assert!(!graph_isomorphic(&path, &star));
        assert_eq!(path.degrees(), vec![1, 2, 2, 2, 1]);
    }

    #[test]
    fn json_shape() {
        let t = g(3, &[(1, 2), (2, 3)]);
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"n":3,"edges":[[1,2],[2,3]]}"#);
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[1,1]]}"#).is_err());
    }
}
