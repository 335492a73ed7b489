//! Face lattice from facet vertex sets.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Faces by dimension as vertex sets. `faces(k)` for the affine dimension `k`
/// is the polytope itself; the empty face is not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLattice {
    dim: usize,
    n_vertices: usize,
    faces: Vec<Vec<FixedBitSet>>,
    /// `children[j][i]`: indices into `faces[j-1]` of the facets of face `i` of dimension `j`.
    children: Vec<Vec<Vec<usize>>>,
}

fn maximal_sets(mut sets: Vec<FixedBitSet>) -> Vec<FixedBitSet> {
    sets.sort_by_key(|s| std::cmp::Reverse(s.count_ones(..)));
    sets.dedup();
    let mut kept: Vec<FixedBitSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(k)) {
            kept.push(s);
        }
    }
    kept
}

impl FaceLattice {
    /// Builds all faces as maximal proper intersections, level by level.
    /// `facets[i]` is the vertex set of facet `i`; their order is kept.
    pub fn build(dim: usize, n_vertices: usize, facets: Vec<FixedBitSet>) -> Result<Self> {
        let mut top = FixedBitSet::with_capacity(n_vertices);
        top.insert_range(..);
        if dim == 0 {
            if n_vertices != 1 || !facets.is_empty() {
                return Err(Error::Coverage("a point has one vertex and no facets".into()));
            }
            return Ok(Self { dim, n_vertices, faces: vec![vec![top]], children: vec![Vec::new()] });
        }
        let mut faces: Vec<Vec<FixedBitSet>> = vec![Vec::new(); dim + 1];
        let mut children: Vec<Vec<Vec<usize>>> = vec![Vec::new(); dim + 1];
        faces[dim] = vec![top];
        children[dim] = vec![(0..facets.len()).collect()];
        faces[dim - 1] = facets.clone();
        for j in (1..dim).rev() {
            let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
            let mut level: Vec<FixedBitSet> = Vec::new();
            let mut level_children = Vec::with_capacity(faces[j].len());
            for face in &faces[j] {
                let cands: Vec<FixedBitSet> = facets
                    .iter()
                    .map(|f| {
                        let mut x = face.clone();
                        x.intersect_with(f);
                        x
                    })
                    .filter(|x| x.count_ones(..) > 0 && x != face)
                    .collect();
                let mut kids: Vec<usize> = maximal_sets(cands)
                    .into_iter()
                    .map(|s| {
                        *index.entry(s.clone()).or_insert_with(|| {
                            level.push(s);
                            level.len() - 1
                        })
                    })
                    .collect();
                kids.sort_unstable();
                level_children.push(kids);
            }
            faces[j - 1] = level;
            children[j] = level_children;
        }
        let lattice = Self { dim, n_vertices, faces, children };
        lattice.check()?;
        Ok(lattice)
    }

    fn check(&self) -> Result<()> {
        let k = self.dim;
        if self.faces[0].len() != self.n_vertices || self.faces[0].iter().any(|f| f.count_ones(..) != 1) {
            return Err(Error::Coverage(format!(
                "{} minimal faces for {} vertices",
                self.faces[0].len(),
                self.n_vertices
            )));
        }
        for v in 0..self.n_vertices {
            let on = self.faces[k - 1].iter().filter(|f| f.contains(v)).count();
            if on < k {
                return Err(Error::Coverage(format!("vertex {v} lies on {on} facets")));
            }
        }
        if k >= 2 {
            let mut parents = vec![0usize; self.faces[k - 2].len()];
            for kids in &self.children[k - 1] {
                for &r in kids {
                    parents[r] += 1;
                }
            }
            if let Some(r) = parents.iter().position(|&c| c != 2) {
                return Err(Error::Coverage(format!("ridge {r} lies in {} facets", parents[r])));
            }
        }
        for e in self.faces.get(1).into_iter().flatten() {
            if k >= 1 && e.count_ones(..) != 2 {
                return Err(Error::Coverage("an edge without two vertices".into()));
            }
        }
        let euler: i64 = self
            .f_vector()
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum();
        let expected = if k % 2 == 0 { 0 } else { 2 };
        if euler != expected {
            return Err(Error::Coverage(format!("Euler characteristic {euler}, expected {expected}")));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    /// Number of faces of each dimension `0..dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces[..self.dim].iter().map(Vec::len).collect()
    }

    pub fn faces(&self, j: usize) -> &[FixedBitSet] {
        &self.faces[j]
    }

    /// Facets of the `i`-th face of dimension `j` (indices into `faces(j - 1)`).
    pub fn children(&self, j: usize, i: usize) -> &[usize] {
        &self.children[j][i]
    }

    pub fn facets(&self) -> &[FixedBitSet] {
        if self.dim == 0 {
            &[]
        } else {
            &self.faces[self.dim - 1]
        }
    }

    /// Edges as vertex index pairs, in face order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        if self.dim < 1 {
            return Vec::new();
        }
        self.faces[1]
            .iter()
            .map(|e| {
                let mut it = e.ones();
                (it.next().expect("edge"), it.next().expect("edge"))
            })
            .collect()
    }

    /// Vertex-by-facet incidence rows.
    pub fn incidence(&self) -> Vec<Vec<bool>> {
        (0..self.n_vertices)
            .map(|v| self.facets().iter().map(|f| f.contains(v)).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, items: &[usize]) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(n);
        for &i in items {
            s.insert(i);
        }
        s
    }

    #[test]
    fn square_and_cube() {
        let sq = FaceLattice::build(2, 4, vec![set(4, &[0, 1]), set(4, &[1, 2]), set(4, &[2, 3]), set(4, &[0, 3])]).unwrap();
        assert_eq!(sq.f_vector(), vec![4, 4]);
        // Vertices indexed by bits (x, y, z).
        let facets: Vec<FixedBitSet> = (0..3)
            .flat_map(|axis| {
                [0, 1].map(|bit| set(8, &(0..8).filter(|v| (v >> axis) & 1 == bit).collect::<Vec<_>>()))
            })
            .collect();
        let cube = FaceLattice::build(3, 8, facets).unwrap();
        assert_eq!(cube.f_vector(), vec![8, 12, 6]);
        assert_eq!(cube.edges().len(), 12);
    }

    #[test]
    fn missing_facet_is_reported() {
        let r = FaceLattice::build(2, 4, vec![set(4, &[0, 1]), set(4, &[1, 2]), set(4, &[2, 3])]);
        assert!(matches!(r, Err(Error::Coverage(_))));
    }
}
