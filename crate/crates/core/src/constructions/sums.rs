//! Sums of the 24-cell with zonotopes of D4 roots.

use std::collections::{BTreeSet, HashSet};
use std::sync::OnceLock;

use itertools::Itertools;

use super::builders::{cell24, root_vectors, zonotope};
use crate::error::{Error, Result};
use crate::exact_linalg::{orthogonal_complement, rank_of, Rational, RationalVector};
use crate::polytope_core::{Hyperplane, Polytope};

/// What the zonotope is added to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Base {
    Point,
    Cell24,
}

/// `base + Σ λ_i [-u_i, u_i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SumSpec {
    pub base: Base,
    pub generators: Vec<RationalVector>,
    pub lengths: Vec<Rational>,
}

impl SumSpec {
    /// Generators with the default length `λ = 1/2`.
    pub fn new(base: Base, generators: Vec<RationalVector>) -> Self {
        let lengths = vec![Rational::new(1, 2); generators.len()];
        Self { base, generators, lengths }
    }

    pub fn cell24_mask(mask: u16) -> Self {
        let gens = (0..12).filter(|i| mask >> i & 1 == 1).map(|i| root_vectors()[i].clone()).collect();
        Self::new(Base::Cell24, gens)
    }

    /// Builds the sum from its point set; every edge must be a root or a generator.
    pub fn build(&self) -> Result<Polytope> {
        if self.lengths.len() != self.generators.len() {
            return Err(Error::DimensionMismatch { expected: self.generators.len(), got: self.lengths.len() });
        }
        match self.base {
            Base::Point => zonotope(&self.generators, Some(&self.lengths)),
            Base::Cell24 => {
                let mut points: Vec<RationalVector> = cell24().vertices().to_vec();
                for (g, l) in self.generators.iter().zip(&self.lengths) {
                    if !l.is_positive() {
                        return Err(Error::NonPositiveLength(l.to_string()));
                    }
                    let s = g.scale(l);
                    points = points.iter().flat_map(|p| [p + &s, p - &s]).collect::<BTreeSet<_>>().into_iter().collect();
                }
                let mut dirs = root_vectors().to_vec();
                dirs.extend(self.generators.iter().cloned());
                Polytope::from_points(&points, &dirs)
            }
        }
    }
}

/// A candidate facet normal of any 24-cell + root zonotope sum.
struct Normal {
    n: [i64; 4],
    /// Twice the support value on the 24-cell.
    h2: i64,
    dots: [i64; 12],
    orth: u16,
    /// Indexed by `mask & orth`: whether the face in this direction is a facet.
    facet: Vec<bool>,
}

struct Frame {
    cell: Vec<[i64; 4]>,
    roots: [[i64; 4]; 12],
    normals: Vec<Normal>,
}

fn ivec(v: &RationalVector) -> [i64; 4] {
    let x = v.to_i64().expect("integral");
    [x[0], x[1], x[2], x[3]]
}

fn dot(a: &[i64; 4], b: &[i64; 4]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn frame() -> &'static Frame {
    static F: OnceLock<Frame> = OnceLock::new();
    F.get_or_init(|| {
        let rv = root_vectors();
        let roots: [[i64; 4]; 12] = std::array::from_fn(|i| ivec(&rv[i]));
        let cell: Vec<[i64; 4]> = cell24().vertices().iter().map(ivec).collect();
        let mut dirs = BTreeSet::new();
        for t in rv.iter().combinations(3) {
            let c = orthogonal_complement(&t.into_iter().cloned().collect::<Vec<_>>(), 4);
            if c.len() == 1 {
                let n = c[0].canonical_direction();
                dirs.insert(n.clone());
                dirs.insert(-n);
            }
        }
        let normals = dirs
            .into_iter()
            .map(|nv| {
                let n = ivec(&nv);
                let h = cell.iter().map(|v| dot(&n, v)).max().expect("nonempty");
                let face: Vec<RationalVector> = cell
                    .iter()
                    .filter(|v| dot(&n, v) == h)
                    .map(|v| RationalVector::from_ints(v))
                    .collect();
                let face_dirs: Vec<RationalVector> = face.iter().map(|p| p - &face[0]).collect();
                let dots: [i64; 12] = std::array::from_fn(|i| dot(&n, &roots[i]));
                let orth = (0..12).filter(|&i| dots[i] == 0).fold(0u16, |m, i| m | 1 << i);
                let mut facet = vec![false; 1 << 12];
                let mut sub = orth;
                loop {
                    let mut rows = face_dirs.clone();
                    rows.extend((0..12).filter(|i| sub >> i & 1 == 1).map(|i| rv[i].clone()));
                    facet[sub as usize] = rank_of(&rows) == 3;
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & orth;
                }
                Normal { n, h2: 2 * h, dots, orth, facet }
            })
            .collect();
        Frame { cell, roots, normals }
    })
}

fn rank_int(rows: &[[i64; 4]]) -> usize {
    let mut m: Vec<[i128; 4]> = rows.iter().map(|r| r.map(i128::from)).collect();
    let mut rank = 0;
    for col in 0..4 {
        let Some(p) = (rank..m.len()).find(|&r| m[r][col] != 0) else { continue };
        m.swap(rank, p);
        let pivot = m[rank];
        for r in rank + 1..m.len() {
            let f = m[r][col];
            if f != 0 {
                for c in 0..4 {
                    m[r][c] = m[r][c] * pivot[col] - f * pivot[c];
                }
                let g = m[r].iter().fold(0i128, |g, &x| num_integer::gcd(g, x));
                if g > 1 {
                    for c in 0..4 {
                        m[r][c] /= g;
                    }
                }
            }
        }
        rank += 1;
        if rank == 4 {
            break;
        }
    }
    rank
}

/// Facets of the sum for `mask` in doubled coordinates: `(normal index, 2·rhs)`.
fn facets_doubled(mask: u16) -> Vec<(usize, i64)> {
    let f = frame();
    f.normals
        .iter()
        .enumerate()
        .filter(|(_, n)| n.facet[(mask & n.orth) as usize])
        .map(|(i, n)| {
            let extra: i64 = (0..12).filter(|&k| mask >> k & 1 == 1).map(|k| n.dots[k].abs()).sum();
            (i, n.h2 + extra)
        })
        .collect()
}

fn is_vertex(x: &[i64; 4], facets: &[(usize, i64)]) -> bool {
    let f = frame();
    let tight: Vec<[i64; 4]> = facets
        .iter()
        .filter(|(i, rhs)| dot(&f.normals[*i].n, x) == *rhs)
        .map(|(i, _)| f.normals[*i].n)
        .collect();
    tight.len() >= 4 && rank_int(&tight) == 4
}

/// The 24-cell plus the segments `[-r/2, r/2]` for the roots in `mask`, from
/// precomputed support data. Vertices are grown one root at a time: every
/// vertex of `P + S` is a vertex of `P` moved by an endpoint of `S`.
pub fn sum_cell24(mask: u16) -> Result<Polytope> {
    if mask >= 1 << 12 {
        return Err(Error::OutOfRange(format!("root mask {mask:#x}")));
    }
    let f = frame();
    let mut verts: Vec<[i64; 4]> = f.cell.iter().map(|v| v.map(|x| 2 * x)).collect();
    let mut current = 0u16;
    for k in 0..12 {
        if mask >> k & 1 == 0 {
            continue;
        }
        current |= 1 << k;
        let facets = facets_doubled(current);
        let r = f.roots[k];
        let mut next: HashSet<[i64; 4]> = HashSet::new();
        for v in &verts {
            for s in [1, -1] {
                let x: [i64; 4] = std::array::from_fn(|c| v[c] + s * r[c]);
                if !next.contains(&x) && is_vertex(&x, &facets) {
                    next.insert(x);
                }
            }
        }
        verts = next.into_iter().collect();
    }
    let half = Rational::new(1, 2);
    let mut vertices: Vec<RationalVector> = verts
        .iter()
        .map(|v| RationalVector::new(v.iter().map(|&x| Rational::from_int(x) * &half).collect()))
        .collect();
    vertices.sort();
    let mut facets: Vec<Hyperplane> = facets_doubled(mask)
        .into_iter()
        .map(|(i, rhs2)| Hyperplane::new(RationalVector::from_ints(&f.normals[i].n), Rational::new(rhs2, 2)))
        .collect();
    facets.sort();
    Polytope::from_parts(4, 4, vertices, facets, Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope_core::venkov_parallelotope;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn empty_mask_is_cell24() {
        assert_eq!(&sum_cell24(0).unwrap(), cell24());
    }

    #[test]
    fn fast_path_matches_point_hull() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut masks: Vec<u16> = vec![1, 0b11, 0xfff, 0b1000_0000_0011];
        masks.extend((0..12).map(|_| rng.random_range(0..4096u16)));
        for m in masks {
            let fast = sum_cell24(m).unwrap();
            let slow = SumSpec::cell24_mask(m).build().unwrap();
            assert_eq!(fast, slow, "mask {m:#x}");
        }
    }

    #[test]
    fn lengths_do_not_change_the_type() {
        let mask = 0b0000_1001_0110;
        let unit = sum_cell24(mask).unwrap().certificate();
        let mut spec = SumSpec::cell24_mask(mask);
        for (i, l) in [Rational::new(1, 3), Rational::one(), Rational::new(7, 2), Rational::new(5, 4)].into_iter().enumerate() {
            spec.lengths[i] = l;
        }
        assert_eq!(spec.build().unwrap().certificate(), unit);
    }

    #[test]
    fn single_segment_keeps_24_facets() {
        let fourteen_plus = 1 << 5;
        let p = sum_cell24(fourteen_plus).unwrap();
        assert_eq!(p.facets().len(), 24);
        assert!(venkov_parallelotope(&p).is_parallelotope());
    }
}
