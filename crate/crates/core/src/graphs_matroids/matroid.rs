use crate::canon::{Bipartite, Certificate};
use crate::exact_linalg::{rank_of, RationalVector};

use super::Graph;

/// A matroid on elements `0..n` given by its circuits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matroid {
    n: usize,
    rank: usize,
    circuits: Vec<Vec<usize>>,
}

impl Matroid {
    /// Circuits are found as the minimal dependent sets under `rank`, which takes a
    /// bitmask of elements. At most 16 elements.
    pub fn from_rank_oracle(n: usize, rank: impl Fn(u32) -> usize) -> Self {
        assert!(n <= 16, "matroid too large for subset enumeration");
        let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
        let r = rank(full);
        let mut masks: Vec<u32> = (1..=full).filter(|m| m.count_ones() as usize <= r + 1).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        let mut found: Vec<u32> = Vec::new();
        for m in masks {
            if found.iter().any(|&c| c & m == c) {
                continue;
            }
            if rank(m) < m.count_ones() as usize {
                found.push(m);
            }
        }
        let circuits = found.iter().map(|&c| (0..n).filter(|&i| c & (1 << i) != 0).collect()).collect();
        Self { n, rank: r, circuits }
    }

    pub fn of_vectors(vectors: &[RationalVector]) -> Self {
        Self::from_rank_oracle(vectors.len(), |mask| {
            let sel: Vec<RationalVector> =
                vectors.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, v)| v.clone()).collect();
            rank_of(&sel)
        })
    }

    /// Cycle matroid on the edges of `g`.
    pub fn of_graph(g: &Graph) -> Self {
        Self::from_rank_oracle(g.n_edges(), |mask| g.rank_of_edges(mask))
    }

    pub fn n_elements(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn circuits(&self) -> &[Vec<usize>] {
        &self.circuits
    }

    /// Canonical form of the element-circuit incidence; equal iff the matroids are isomorphic.
    pub fn certificate(&self) -> Certificate {
        Bipartite::new(self.n, &self.circuits).certificate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_has_one_circuit() {
        let g = Graph::new(3, [(1, 2), (2, 3), (1, 3)]).unwrap();
        let m = Matroid::of_graph(&g);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.circuits(), &[vec![0, 1, 2]]);
    }

    #[test]
    fn k4_has_seven_circuits() {
        // 4 triangles and 3 four-cycles
        let g = Graph::new(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        let m = Matroid::of_graph(&g);
        assert_eq!(m.circuits().len(), 7);
        assert_eq!(m.circuits().iter().filter(|c| c.len() == 3).count(), 4);
    }

    #[test]
    fn vectors_and_graph_agree() {
        let g = Graph::new(4, [(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let v: Vec<RationalVector> = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                let mut x = vec![0i64; 4];
                x[a - 1] = 1;
                x[b - 1] = -1;
                RationalVector::from_ints(&x)
            })
            .collect();
        assert_eq!(Matroid::of_vectors(&v), Matroid::of_graph(&g));
    }

    #[test]
    fn attachment_is_invisible() {
        let shared = Graph::new(5, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        let disjoint = Graph::new(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        assert_eq!(Matroid::of_graph(&shared).certificate(), Matroid::of_graph(&disjoint).certificate());
    }
}
