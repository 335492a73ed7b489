//! Minkowski addition and removal of segments `S(z) = λ[-z, z]`.

use std::collections::BTreeSet;

use super::{HPolytope, Hyperplane, Polytope};
use crate::error::{Error, Result};
use crate::exact_linalg::{Rational, RationalVector};

fn check_segment(dim: usize, z: &RationalVector, lambda: &Rational) -> Result<()> {
    if z.dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, got: z.dim() });
    }
    if z.is_zero() {
        return Err(Error::ZeroDirection);
    }
    if !lambda.is_positive() {
        return Err(Error::NonPositiveLength(lambda.to_string()));
    }
    Ok(())
}

/// `P + λ[-z, z]`.
pub fn add_segment(p: &Polytope, z: &RationalVector, lambda: &Rational) -> Result<Polytope> {
    check_segment(p.dim(), z, lambda)?;
    let s = z.scale(lambda);
    let points: Vec<RationalVector> = p.vertices().iter().flat_map(|v| [v + &s, v - &s]).collect();
    let mut dirs = p.edge_directions();
    dirs.push(z.clone());
    Polytope::from_points(&points, &dirs)
}

fn eroded(facets: &[Hyperplane], z: &RationalVector, lambda: &Rational) -> Vec<Hyperplane> {
    facets
        .iter()
        .map(|f| Hyperplane::new(f.normal.clone(), &f.rhs - &(lambda * &f.normal.dot(z).abs())))
        .collect()
}

/// Lowers every right-hand side by `λ|p·z|` and drops the inequalities that no
/// longer support facets.
pub fn erode_segment(h: &HPolytope, z: &RationalVector, lambda: &Rational) -> Result<HPolytope> {
    check_segment(h.dim(), z, lambda)?;
    let shrunk = HPolytope::with_equalities(h.dim(), eroded(h.inequalities(), z, lambda), h.equalities().to_vec())?;
    Ok(Polytope::from_hrep(&shrunk)?.to_hpolytope())
}

/// `P'` with `P = P' + λ[-z, z]`, or `None` when no such summand exists.
///
/// Every vertex of a sum `P' + S` is `w ± λz` for a vertex `w` of `P'`, so
/// the candidates `v ± λz` that satisfy the eroded inequalities contain all
/// vertices of the erosion whenever the split exists; the split exists iff
/// each vertex of `P` is recovered from one of them.
pub fn split_off_segment(p: &Polytope, z: &RationalVector, lambda: &Rational) -> Result<Option<Polytope>> {
    check_segment(p.dim(), z, lambda)?;
    if p.equalities().iter().any(|e| !e.normal.dot(z).is_zero()) {
        return Ok(None);
    }
    let shrunk = HPolytope::with_equalities(p.dim(), eroded(p.facets(), z, lambda), p.equalities().to_vec())?;
    let s = z.scale(lambda);
    let inside: BTreeSet<RationalVector> =
        p.vertices().iter().flat_map(|v| [v + &s, v - &s]).filter(|w| shrunk.contains(w)).collect();
    let recovered = p.vertices().iter().all(|v| inside.contains(&(v - &s)) || inside.contains(&(v + &s)));
    if !recovered {
        return Ok(None);
    }
    let points: Vec<RationalVector> = inside.into_iter().collect();
    Polytope::from_points(&points, &p.edge_directions()).map(Some)
}

#[cfg(test)]
mod tests {
    use super::super::test_shapes::*;
    use super::super::{edge_zones, venkov_parallelotope, width_positive};
    use super::*;

    fn v(x: &[i64]) -> RationalVector {
        RationalVector::from_ints(x)
    }

    #[test]
    fn box_erosion() {
        let b = box_polytope(&[2, 1, 1, 1]);
        let h = erode_segment(&b.to_hpolytope(), &v(&[1, 0, 0, 0]), &Rational::one()).unwrap();
        assert_eq!(h, box_polytope(&[1, 1, 1, 1]).to_hpolytope());
        let longer = add_segment(&box_polytope(&[1, 1, 1, 1]), &v(&[1, 0, 0, 0]), &Rational::one()).unwrap();
        assert_eq!(longer, b);
        assert!(erode_segment(&b.to_hpolytope(), &v(&[0, 1, 0, 0]), &Rational::from_int(2)).is_err());
    }

    #[test]
    fn cell24_plus_segment() {
        let c = cell24();
        let z = v(&[1, 0, 0, 1]);
        let half = Rational::new(1, 2);
        let s = add_segment(&c, &z, &half).unwrap();
        assert_eq!(s.facets().len(), 24);
        assert!(venkov_parallelotope(&s).is_parallelotope());
        assert!(width_positive(&s, &z));
        let zones = edge_zones(&s);
        for zone in &zones {
            assert_eq!(zone.closed, zone.characteristic == z, "{:?}", zone.characteristic);
        }
        let back = erode_segment(&s.to_hpolytope(), &z, &half).unwrap();
        assert_eq!(back, c.to_hpolytope());
        assert_eq!(split_off_segment(&s, &z, &half).unwrap(), Some(c.clone()));
        assert_eq!(split_off_segment(&c, &z, &half).unwrap(), None);
    }

    #[test]
    fn zonotope_erosion_matches_smaller_zonotope() {
        let mut a4: Vec<RationalVector> = roots4().into_iter().skip(1).step_by(2).collect();
        for i in 0..4 {
            a4.push(RationalVector::unit(4, i));
        }
        let z = zonotope(&a4);
        let e1 = RationalVector::unit(4, 0);
        let smaller = split_off_segment(&z, &e1, &Rational::new(1, 2)).unwrap().unwrap();
        let direct = zonotope(&a4.iter().filter(|g| **g != e1).cloned().collect::<Vec<_>>());
        assert_eq!(smaller.certificate(), direct.certificate());
        let h = erode_segment(&z.to_hpolytope(), &e1, &Rational::new(1, 2)).unwrap();
        assert_eq!(Polytope::from_hrep(&h).unwrap().certificate(), direct.certificate());
    }

    #[test]
    fn rejects_bad_lengths() {
        let c = cell24();
        assert!(matches!(add_segment(&c, &v(&[1, 1, 0, 0]), &Rational::zero()), Err(Error::NonPositiveLength(_))));
        assert!(matches!(add_segment(&c, &v(&[0, 0, 0, 0]), &Rational::one()), Err(Error::ZeroDirection)));
    }
}
