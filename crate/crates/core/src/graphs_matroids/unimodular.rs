use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::exact_linalg::{maximal_minor_values, rank_of, solve_linear, Rational, RationalMatrix, RationalVector};

use super::{Graph, Matroid};

/// Where a vector system came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Graphic(Graph),
    CographicK33,
    RootSubset,
    Vectors,
}

/// A finite system of pairwise non-parallel integer vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniSystem {
    vectors: Vec<RationalVector>,
    source: Source,
    rank: usize,
}

impl UniSystem {
    /// Stores the primitive representative of each vector. Zero and parallel vectors
    /// are rejected.
    pub fn new(vectors: Vec<RationalVector>, source: Source) -> Result<Self> {
        if let Some(first) = vectors.first() {
            if let Some(bad) = vectors.iter().find(|v| v.dim() != first.dim()) {
                return Err(Error::DimensionMismatch { expected: first.dim(), got: bad.dim() });
            }
        }
        if vectors.iter().any(RationalVector::is_zero) {
            return Err(Error::ZeroDirection);
        }
        let vectors: Vec<RationalVector> = vectors.iter().map(RationalVector::primitive).collect();
        for i in 0..vectors.len() {
            for j in (i + 1)..vectors.len() {
                if vectors[i].is_parallel_to(&vectors[j]) {
                    return Err(Error::ParallelVectors(i, j));
                }
            }
        }
        let rank = rank_of(&vectors);
        Ok(Self { vectors, source, rank })
    }

    pub fn vectors(&self) -> &[RationalVector] {
        &self.vectors
    }

    pub fn source(&self) -> &Source {
        &self.source
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.vectors.first().map_or(0, RationalVector::dim)
    }

    pub fn matroid(&self) -> Matroid {
        Matroid::of_vectors(&self.vectors)
    }
}

/// Edge `(i,5)` maps to `e_i`, edge `(i,j)` with `i < j <= 4` to `e_i - e_j`.
pub fn graphic_vectors(g: &Graph) -> Result<UniSystem> {
    if g.n_vertices() > 5 {
        return Err(Error::OutOfRange(format!("graph on {} vertices, at most 5 supported", g.n_vertices())));
    }
    let vectors = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            let mut x = [0i64; 4];
            x[a - 1] = 1;
            if b <= 4 {
                x[b - 1] = -1;
            }
            RationalVector::from_ints(&x)
        })
        .collect();
    UniSystem::new(vectors, Source::Graphic(g.clone()))
}

fn root(i: usize, j: usize, plus: bool) -> RationalVector {
    let mut x = [0i64; 4];
    x[i - 1] = 1;
    x[j - 1] = if plus { 1 } else { -1 };
    RationalVector::from_ints(&x)
}

/// The nine roots `(12-,12+,34-), (13-,13+,24+), (14-,14+,23-)` representing the
/// cographic matroid of K3,3.
pub fn cographic_k33_vectors() -> UniSystem {
    let vectors = vec![
        root(1, 2, false),
        root(1, 2, true),
        root(3, 4, false),
        root(1, 3, false),
        root(1, 3, true),
        root(2, 4, true),
        root(1, 4, false),
        root(1, 4, true),
        root(2, 3, false),
    ];
    UniSystem::new(vectors, Source::CographicK33).expect("fixed system is valid")
}

/// Indices of the lexicographically first basic subset.
fn first_basis(vectors: &[RationalVector]) -> Vec<usize> {
    let mut basis: Vec<usize> = Vec::new();
    let mut chosen: Vec<RationalVector> = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        chosen.push(v.clone());
        if rank_of(&chosen) == chosen.len() {
            basis.push(i);
        } else {
            chosen.pop();
        }
    }
    basis
}

/// Coordinates of every vector relative to the basis `basis` (one row per vector).
fn coordinates(vectors: &[RationalVector], basis: &[usize]) -> RationalMatrix {
    let dim = vectors[0].dim();
    let b = RationalMatrix::from_rows(basis.iter().map(|&i| vectors[i].clone()).collect(), dim).transpose();
    let rows = vectors
        .iter()
        .map(|v| solve_linear(&b, v).expect("dimensions agree").expect("vector lies in the span of a basis"))
        .collect();
    RationalMatrix::from_rows(rows, basis.len())
}

/// True iff every vector has integer coordinates in every basic subset. Tested in the
/// coordinates of the first lexicographic basis, where this means every maximal minor
/// of the coordinate matrix is 0 or ±1.
pub fn is_unimodular(s: &UniSystem) -> bool {
    is_unimodular_vectors(s.vectors())
}

pub fn is_unimodular_vectors(vectors: &[RationalVector]) -> bool {
    if vectors.is_empty() {
        return true;
    }
    let basis = first_basis(vectors);
    if basis.is_empty() {
        return true;
    }
    let c = coordinates(vectors, &basis);
    minors_are_unit(&c)
}

fn minors_are_unit(c: &RationalMatrix) -> bool {
    let one = Rational::one();
    c.rows().iter().flat_map(|r| r.iter()).all(|x| x.is_zero() || x.abs() == one)
        && maximal_minor_values(c).iter().all(|x| x.is_zero() || x.abs() == one)
}

/// True iff some positive rescaling of the vectors is unimodular, i.e. the system
/// spans the same set of lines as a unimodular system.
pub fn spans_unimodular(s: &UniSystem) -> bool {
    spans_unimodular_vectors(s.vectors())
}

pub fn spans_unimodular_vectors(vectors: &[RationalVector]) -> bool {
    if vectors.is_empty() {
        return true;
    }
    let basis = first_basis(vectors);
    let r = basis.len();
    if r == 0 {
        return true;
    }
    let c = coordinates(vectors, &basis);
    let m = vectors.len();
    // Bipartite support graph: basis positions 0..r, vectors r..r+m. Scale so that a
    // spanning forest carries entries of absolute value 1; the rest is then forced.
    let mut scale: Vec<Option<Rational>> = vec![None; r + m];
    for start in 0..(r + m) {
        if scale[start].is_some() {
            continue;
        }
        scale[start] = Some(Rational::one());
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let su = scale[u].clone().expect("scaled before queued");
            let neighbors: Vec<(usize, Rational)> = if u < r {
                (0..m).filter(|&j| !c.get(j, u).is_zero()).map(|j| (r + j, c.get(j, u).abs())).collect()
            } else {
                (0..r).filter(|&i| !c.get(u - r, i).is_zero()).map(|i| (i, c.get(u - r, i).abs())).collect()
            };
            for (w, a) in neighbors {
                if scale[w].is_none() {
                    // entry a * beta / alpha must have absolute value 1
                    scale[w] = Some(if u < r { &su / &a } else { &su * &a });
                    queue.push_back(w);
                }
            }
        }
    }
    let scaled: Vec<RationalVector> = (0..m)
        .map(|j| {
            let beta = scale[r + j].as_ref().expect("all nodes scaled");
            RationalVector::new(
                (0..r).map(|i| &(c.get(j, i) * beta) / scale[i].as_ref().expect("all nodes scaled")).collect(),
            )
        })
        .collect();
    minors_are_unit(&RationalMatrix::from_rows(scaled, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sys(v: &[&[i64]]) -> UniSystem {
        UniSystem::new(v.iter().map(|x| RationalVector::from_ints(x)).collect(), Source::Vectors).unwrap()
    }

    fn k5() -> Graph {
        Graph::new(5, [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]).unwrap()
    }

    #[test]
    fn k5_maps_to_a4() {
        let s = graphic_vectors(&k5()).unwrap();
        assert_eq!(s.len(), 10);
        assert_eq!(s.rank(), 4);
        let units = s.vectors().iter().filter(|v| v.norm_squared() == Rational::one()).count();
        assert_eq!(units, 4);
        assert!(is_unimodular(&s));
    }

    #[test]
    fn forest_maps_to_basis() {
        let path = Graph::new(5, [(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert_eq!(graphic_vectors(&path).unwrap().rank(), 4);
    }

    #[test]
    fn cycle_sums_vanish() {
        let tri = Graph::new(5, [(1, 2), (2, 5), (1, 5)]).unwrap();
        let v = graphic_vectors(&tri).unwrap();
        // orient the cycle 1 -> 2 -> 5 -> 1
        let sum = &(&v.vectors()[0] + &v.vectors()[1]) - &v.vectors()[2];
        assert!(sum.is_zero());
    }

    #[test]
    fn rejects_parallel_and_zero() {
        assert!(matches!(
            UniSystem::new(vec![RationalVector::from_ints(&[1, 1]), RationalVector::from_ints(&[-2, -2])], Source::Vectors),
            Err(Error::ParallelVectors(0, 1))
        ));
        assert!(matches!(
            UniSystem::new(vec![RationalVector::from_ints(&[0, 0])], Source::Vectors),
            Err(Error::ZeroDirection)
        ));
        let multi = Graph::new(3, [(1, 2), (1, 2)]).unwrap();
        assert!(graphic_vectors(&multi).is_err());
    }

    #[test]
    fn k33_system() {
        let s = cographic_k33_vectors();
        assert_eq!((s.len(), s.rank()), (9, 4));
        assert!(is_unimodular(&s));
        // dropping 24+ leaves the system of K5 minus two disjoint edges
        let rest: Vec<RationalVector> =
            s.vectors().iter().filter(|v| **v != RationalVector::from_ints(&[0, 1, 0, 1])).cloned().collect();
        let g = Graph::new(5, [(1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 5), (4, 5)]).unwrap();
        assert_eq!(Matroid::of_vectors(&rest).certificate(), graphic_vectors(&g).unwrap().matroid().certificate());
    }

    #[test]
    fn quadruple_examples() {
        let q: &[&[i64]] = &[&[1, -1, 0, 0], &[1, 1, 0, 0], &[0, 0, 1, -1], &[0, 0, 1, 1]];
        assert!(is_unimodular(&sys(q)));
        let others: &[&[i64]] = &[
            &[1, 0, -1, 0],
            &[1, 0, 1, 0],
            &[1, 0, 0, -1],
            &[1, 0, 0, 1],
            &[0, 1, -1, 0],
            &[0, 1, 1, 0],
            &[0, 1, 0, -1],
            &[0, 1, 0, 1],
        ];
        for r in others {
            let mut v = q.to_vec();
            v.push(r);
            let s = sys(&v);
            assert!(!is_unimodular(&s), "{r:?}");
            assert!(spans_unimodular(&s), "{r:?}");
        }
    }

    #[test]
    fn half_coordinate_system() {
        let s = sys(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 2]]);
        assert!(!is_unimodular(&s));
        // rescaling e3 by 2 gives a unimodular system
        assert!(spans_unimodular(&s));
        let fano_like = sys(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1]]);
        assert!(!spans_unimodular(&fano_like));
        assert!(is_unimodular(&sys(&[])));
    }

    fn unimodular_change_of_basis() -> impl Strategy<Value = Vec<Vec<i64>>> {
        // product of elementary operations keeps determinant ±1
        prop::collection::vec((0usize..4, 0usize..4, -2i64..3), 0..6).prop_map(|ops| {
            let mut m: Vec<Vec<i64>> = (0..4).map(|i| (0..4).map(|j| i64::from(i == j)).collect()).collect();
            for (a, b, k) in ops {
                if a != b {
                    for c in 0..4 {
                        m[a][c] += k * m[b][c];
                    }
                }
            }
            m
        })
    }

    proptest! {
        #[test]
        fn unimodularity_is_invariant(
            pick in prop::sample::subsequence((0..10usize).collect::<Vec<_>>(), 1..10),
            flips in prop::collection::vec(any::<bool>(), 10),
            basis in unimodular_change_of_basis(),
            extra in prop::sample::select(vec![None, Some([1i64, 1, 2, 0]), Some([1, 1, 1, 1])]),
        ) {
            let a4 = graphic_vectors(&k5()).unwrap();
            let mut v: Vec<RationalVector> = pick.iter().map(|&i| a4.vectors()[i].clone()).collect();
            if let Some(x) = extra {
                let x = RationalVector::from_ints(&x);
                if v.iter().all(|y| !y.is_parallel_to(&x)) {
                    v.push(x);
                }
            }
            let expected = is_unimodular_vectors(&v);
            let rows: Vec<&[i64]> = basis.iter().map(|r| r.as_slice()).collect();
            let t = RationalMatrix::from_int_rows(&rows);
            let mut w: Vec<RationalVector> = v
                .iter()
                .zip(&flips)
                .map(|(x, &f)| if f { -t.mul_vec(x) } else { t.mul_vec(x) })
                .collect();
            w.reverse();
            prop_assert_eq!(is_unimodular_vectors(&w), expected);
            prop_assert_eq!(spans_unimodular_vectors(&w), spans_unimodular_vectors(&v));
        }
    }
}
