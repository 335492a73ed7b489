//! Conversions between inequality and vertex descriptions.

use std::collections::BTreeSet;

use itertools::Itertools;

use super::{HPolytope, Hyperplane};
use crate::error::{Error, Result};
use crate::exact_linalg::{
    affine_rank, orthogonal_complement, rank_of, rref, Added, IncrementalSystem, Rational, RationalVector,
};

/// Affine hull of a finite point set: a base point, the linear directions and
/// the normals cutting it out.
#[derive(Clone, Debug)]
pub(crate) struct AffineHull {
    pub base: RationalVector,
    pub dim: usize,
    pub equalities: Vec<Hyperplane>,
}

impl AffineHull {
    pub fn of(points: &[RationalVector]) -> Result<Self> {
        let base = points.first().ok_or(Error::Empty)?.clone();
        let d = base.dim();
        let diffs: Vec<RationalVector> = points.iter().map(|p| p - &base).collect();
        let (basis, _) = rref(&diffs);
        let equalities = orthogonal_complement(&basis, d)
            .into_iter()
            .map(|n| {
                let rhs = n.dot(&base);
                Hyperplane::new(n, rhs)
            })
            .collect();
        Ok(Self { base, dim: basis.len(), equalities })
    }

    pub fn contains_direction(&self, z: &RationalVector) -> bool {
        self.equalities.iter().all(|e| e.normal.dot(z).is_zero())
    }
}

fn all_constraints(h: &HPolytope) -> impl Iterator<Item = &Hyperplane> {
    h.equalities().iter().chain(h.inequalities())
}

/// Enumerates the intersection points of `dim` independent hyperplanes, with
/// the equalities always included, that satisfy every inequality.
fn intersection_points(dim: usize, ineqs: &[Hyperplane], eqs: &[Hyperplane]) -> BTreeSet<RationalVector> {
    let mut sys = IncrementalSystem::new(dim);
    let mut out = BTreeSet::new();
    for e in eqs {
        if let Added::Inconsistent = sys.add(&e.normal, &e.rhs) {
            return out;
        }
    }
    fn dfs(sys: &IncrementalSystem, start: usize, dim: usize, ineqs: &[Hyperplane], out: &mut BTreeSet<RationalVector>) {
        if sys.rank() == dim {
            let x = sys.solution().expect("full rank");
            if ineqs.iter().all(|h| h.contains(&x)) {
                out.insert(x);
            }
            return;
        }
        let need = dim - sys.rank();
        for i in start..ineqs.len() {
            if ineqs.len() - i < need {
                break;
            }
            let mut next = sys.clone();
            if let Added::Independent = next.add(&ineqs[i].normal, &ineqs[i].rhs) {
                dfs(&next, i + 1, dim, ineqs, out);
            }
        }
    }
    dfs(&sys, 0, dim, ineqs, &mut out);
    out
}

/// True when the recession cone `{x : Ax <= 0, Ex = 0}` is trivial.
fn cone_is_trivial(h: &HPolytope) -> bool {
    let d = h.dim();
    let normals: Vec<RationalVector> = all_constraints(h).map(|c| c.normal.clone()).collect();
    if rank_of(&normals) < d {
        return false;
    }
    let eq_normals: Vec<RationalVector> = h.equalities().iter().map(|e| e.normal.clone()).collect();
    let eq_rank = rank_of(&eq_normals);
    if eq_rank == d {
        return true;
    }
    let need = d - 1 - eq_rank;
    let ineqs = h.inequalities();
    for subset in (0..ineqs.len()).combinations(need) {
        let mut rows = eq_normals.clone();
        rows.extend(subset.iter().map(|&i| ineqs[i].normal.clone()));
        let ray = orthogonal_complement(&rows, d);
        if ray.len() != 1 {
            continue;
        }
        for r in [ray[0].clone(), -&ray[0]] {
            if ineqs.iter().all(|c| !c.normal.dot(&r).is_positive()) {
                return false;
            }
        }
    }
    true
}

pub fn is_bounded(h: &HPolytope) -> bool {
    cone_is_trivial(h)
}

/// Exact vertex set, sorted lexicographically.
pub fn vertices_of(h: &HPolytope) -> Result<Vec<RationalVector>> {
    let d = h.dim();
    let normals: Vec<RationalVector> = all_constraints(h).map(|c| c.normal.clone()).collect();
    let mut eqs: Vec<Hyperplane> = h.equalities().to_vec();
    let full = rank_of(&normals) == d;
    if !full {
        // Slice across the lineality space so that a nonempty set still shows a point.
        for w in orthogonal_complement(&normals, d) {
            eqs.push(Hyperplane::new(w, Rational::zero()));
        }
    }
    let points = intersection_points(d, h.inequalities(), &eqs);
    if points.is_empty() {
        return Err(Error::Empty);
    }
    if !full || !cone_is_trivial(h) {
        return Err(Error::Unbounded);
    }
    Ok(points.into_iter().collect())
}

/// Facets of `conv(points)`, searched among hyperplanes spanned by the
/// candidate directions. Returns the facets and the equalities of the affine
/// hull. Facet normals are primitive integer and outward.
pub fn hull_facets(
    points: &[RationalVector],
    candidate_directions: &[RationalVector],
) -> Result<(Vec<Hyperplane>, Vec<Hyperplane>)> {
    let hull = AffineHull::of(points)?;
    let d = hull.base.dim();
    for c in candidate_directions {
        if c.dim() != d {
            return Err(Error::DimensionMismatch { expected: d, got: c.dim() });
        }
    }
    if hull.dim == 0 {
        return Ok((Vec::new(), hull.equalities));
    }
    let dirs: BTreeSet<RationalVector> = candidate_directions
        .iter()
        .filter(|c| !c.is_zero() && hull.contains_direction(c))
        .map(|c| c.canonical_direction())
        .collect();
    let dirs: Vec<RationalVector> = dirs.into_iter().collect();
    let eq_normals: Vec<RationalVector> = hull.equalities.iter().map(|e| e.normal.clone()).collect();
    let mut normals = BTreeSet::new();
    for subset in dirs.iter().combinations(hull.dim - 1) {
        let mut rows = eq_normals.clone();
        rows.extend(subset.into_iter().cloned());
        let n = orthogonal_complement(&rows, d);
        if n.len() == 1 {
            normals.insert(n[0].canonical_direction());
        }
    }
    let mut facets = Vec::new();
    for n in normals {
        let values: Vec<Rational> = points.iter().map(|p| n.dot(p)).collect();
        for outward in [true, false] {
            let best = if outward { values.iter().max() } else { values.iter().min() }.expect("nonempty").clone();
            let face: Vec<&RationalVector> =
                points.iter().zip(&values).filter(|(_, v)| **v == best).map(|(p, _)| p).collect();
            if affine_rank(&face) == Some(hull.dim - 1) {
                if outward {
                    facets.push(Hyperplane::new(n.clone(), best));
                } else {
                    facets.push(Hyperplane::new(-&n, -best));
                }
            }
        }
    }
    facets.sort();
    Ok((facets, hull.equalities))
}

/// Optimization direction for [`lp_extremum`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Min,
    Max,
}

/// Optimum of a linear objective by evaluation at every vertex; ties go to the
/// lexicographically smallest optimal vertex.
pub fn lp_extremum(h: &HPolytope, objective: &RationalVector, sense: Sense) -> Result<(Rational, RationalVector)> {
    if objective.dim() != h.dim() {
        return Err(Error::DimensionMismatch { expected: h.dim(), got: objective.dim() });
    }
    let vertices = vertices_of(h)?;
    let mut best: Option<(Rational, RationalVector)> = None;
    for v in vertices {
        let val = objective.dot(&v);
        let better = match &best {
            None => true,
            Some((b, _)) => match sense {
                Sense::Max => val > *b,
                Sense::Min => val < *b,
            },
        };
        if better {
            best = Some((val, v));
        }
    }
    best.ok_or(Error::Empty)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube(d: usize) -> HPolytope {
        let mut f = Vec::new();
        for i in 0..d {
            f.push(Hyperplane::new(RationalVector::unit(d, i), Rational::one()));
            f.push(Hyperplane::new(-RationalVector::unit(d, i), Rational::one()));
        }
        HPolytope::new(d, f).unwrap()
    }

    fn dn_voronoi() -> HPolytope {
        let mut f = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                for s in [1, -1] {
                    let mut n = vec![0i64; 4];
                    n[i] = 1;
                    n[j] = s;
                    let v = RationalVector::from_ints(&n);
                    f.push(Hyperplane::new(v.clone(), Rational::one()));
                    f.push(Hyperplane::new(-v, Rational::one()));
                }
            }
        }
        HPolytope::new(4, f).unwrap()
    }

    #[test]
    fn cube_vertices() {
        assert_eq!(vertices_of(&cube(4)).unwrap().len(), 16);
    }

    #[test]
    fn dn_vertices_have_both_forms() {
        let v = vertices_of(&dn_voronoi()).unwrap();
        assert_eq!(v.len(), 24);
        let units = v.iter().filter(|p| p.iter().filter(|x| !x.is_zero()).count() == 1).count();
        assert_eq!(units, 8);
        let halves = v.iter().filter(|p| p.iter().all(|x| x.abs() == Rational::new(1, 2))).count();
        assert_eq!(halves, 16);
    }

    #[test]
    fn unbounded_and_empty() {
        let half = HPolytope::new(2, vec![Hyperplane::new(RationalVector::from_ints(&[1, 0]), Rational::one())]).unwrap();
        assert_eq!(vertices_of(&half), Err(Error::Unbounded));
        let wedge = HPolytope::new(
            2,
            vec![
                Hyperplane::new(RationalVector::from_ints(&[1, 1]), Rational::zero()),
                Hyperplane::new(RationalVector::from_ints(&[1, -1]), Rational::zero()),
            ],
        )
        .unwrap();
        assert!(!is_bounded(&wedge));
        assert_eq!(vertices_of(&wedge), Err(Error::Unbounded));
        let empty = HPolytope::new(
            1,
            vec![
                Hyperplane::new(RationalVector::from_ints(&[1]), Rational::from_int(-1)),
                Hyperplane::new(RationalVector::from_ints(&[-1]), Rational::from_int(-1)),
            ],
        )
        .unwrap();
        assert_eq!(vertices_of(&empty), Err(Error::Empty));
        assert!(is_bounded(&cube(3)));
    }

    #[test]
    fn duality_round_trip() {
        for h in [cube(4), dn_voronoi()] {
            let v = vertices_of(&h).unwrap();
            let dirs: Vec<RationalVector> = (0..v.len())
                .flat_map(|i| (0..v.len()).map(move |j| (i, j)))
                .filter(|(i, j)| i < j)
                .map(|(i, j)| &v[i] - &v[j])
                .collect();
            let (facets, eqs) = hull_facets(&v, &dirs).unwrap();
            assert!(eqs.is_empty());
            let mut expected: Vec<Hyperplane> = h.inequalities().to_vec();
            expected.sort();
            assert_eq!(facets, expected);
        }
    }

    #[test]
    fn lp_examples() {
        let e1 = RationalVector::unit(4, 0);
        assert_eq!(lp_extremum(&cube(4), &e1, Sense::Max).unwrap().0, Rational::one());
        let c = RationalVector::from_ints(&[1, 1, 0, 0]);
        let (val, point) = lp_extremum(&dn_voronoi(), &c, Sense::Max).unwrap();
        assert_eq!(val, Rational::one());
        assert_eq!(point, RationalVector::new(vec![Rational::zero(), Rational::one(), Rational::zero(), Rational::zero()]));
        let (lo, _) = lp_extremum(&dn_voronoi(), &-&c, Sense::Min).unwrap();
        assert_eq!(lo, -val);
    }

    #[test]
    fn lower_dimensional_hull() {
        let pts: Vec<RationalVector> =
            [[0, 0, 1], [1, 0, 1], [0, 1, 1], [1, 1, 1]].iter().map(|p| RationalVector::from_ints(p)).collect();
        let dirs = [RationalVector::from_ints(&[1, 0, 0]), RationalVector::from_ints(&[0, 1, 0])];
        let (facets, eqs) = hull_facets(&pts, &dirs).unwrap();
        assert_eq!(facets.len(), 4);
        assert_eq!(eqs.len(), 1);
        assert_eq!(eqs[0].normal, RationalVector::from_ints(&[0, 0, 1]));
    }
}
