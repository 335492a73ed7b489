//! Voronoi cells of D_n, the 24-cell and zonotopes.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exact_linalg::{Rational, RationalVector};
use crate::polytope_core::{HPolytope, Hyperplane, Polytope};
use crate::root_d4::{d4_roots, positive_roots};

/// `{x : -1 <= x_i ± x_j <= 1}`, the Voronoi cell of D_n, for n = 3 or 4.
pub fn voronoi_dn(n: usize) -> Result<HPolytope> {
    if !(3..=4).contains(&n) {
        return Err(Error::OutOfRange(format!("D_{n} Voronoi cell, n must be 3 or 4")));
    }
    let mut facets = Vec::new();
    for r in positive_roots(n)? {
        let v = r.vector_in(n);
        facets.push(Hyperplane::new(v.clone(), Rational::one()));
        facets.push(Hyperplane::new(-v, Rational::one()));
    }
    facets.sort();
    HPolytope::new(n, facets)
}

/// Edge directions of the D_n Voronoi cell: the `e_i` and `(±1, ..., ±1)` up to sign.
pub fn dn_edge_directions(n: usize) -> Vec<RationalVector> {
    let mut out: Vec<RationalVector> = (0..n).map(|i| RationalVector::unit(n, i)).collect();
    for signs in 0..1u32 << (n - 1) {
        let v: Vec<i64> = (0..n).map(|i| if i > 0 && signs >> (i - 1) & 1 == 1 { -1 } else { 1 }).collect();
        out.push(RationalVector::from_ints(&v));
    }
    out
}

pub fn voronoi_dn_polytope(n: usize) -> Result<Polytope> {
    Polytope::from_hrep(&voronoi_dn(n)?)
}

/// Positive root vectors of D4 in mask-bit order.
pub fn root_vectors() -> &'static [RationalVector] {
    static V: OnceLock<Vec<RationalVector>> = OnceLock::new();
    V.get_or_init(|| d4_roots().iter().map(|r| r.vector()).collect())
}

/// The 24-cell as the convex hull of the 24 roots `±e_i ± e_j`.
pub fn cell24() -> &'static Polytope {
    static C: OnceLock<Polytope> = OnceLock::new();
    C.get_or_init(|| {
        let points: Vec<RationalVector> = root_vectors().iter().flat_map(|r| [r.clone(), -r]).collect();
        Polytope::from_points(&points, root_vectors()).expect("24-cell hull")
    })
}

/// `Σ λ_i [-u_i, u_i]`; with no lengths each segment has the length of its
/// generator (`λ_i = 1/2`).
pub fn zonotope(generators: &[RationalVector], lengths: Option<&[Rational]>) -> Result<Polytope> {
    if generators.len() > 12 {
        return Err(Error::TooManyGenerators(generators.len()));
    }
    let dim = generators.first().ok_or(Error::Empty)?.dim();
    let lengths: Vec<Rational> = match lengths {
        Some(l) if l.len() != generators.len() => {
            return Err(Error::DimensionMismatch { expected: generators.len(), got: l.len() })
        }
        Some(l) => l.to_vec(),
        None => vec![Rational::new(1, 2); generators.len()],
    };
    if let Some(bad) = lengths.iter().find(|l| !l.is_positive()) {
        return Err(Error::NonPositiveLength(bad.to_string()));
    }
    let mut points = vec![RationalVector::zeros(dim)];
    for (g, l) in generators.iter().zip(&lengths) {
        if g.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, got: g.dim() });
        }
        if g.is_zero() {
            return Err(Error::ZeroDirection);
        }
        let s = g.scale(l);
        points = points.iter().flat_map(|p| [p + &s, p - &s]).collect();
        points.sort();
        points.dedup();
    }
    Polytope::from_points(&points, generators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::RationalMatrix;
    use crate::polytope_core::{belts, can_add_segment, edge_zones};
    use crate::root_d4::frame_map;

    #[test]
    fn dn_counts() {
        let p4 = voronoi_dn_polytope(4).unwrap();
        assert_eq!((p4.facets().len(), p4.vertices().len()), (24, 24));
        assert_eq!(p4.edge_directions().len(), 12);
        let mut dirs = dn_edge_directions(4);
        dirs.sort();
        assert_eq!(p4.edge_directions(), dirs);
        let p3 = voronoi_dn_polytope(3).unwrap();
        assert_eq!((p3.facets().len(), p3.vertices().len()), (12, 14));
        // The rhombic dodecahedron has only the four diagonal edge directions.
        assert_eq!(p3.edge_directions().len(), 4);
        assert!(voronoi_dn(5).is_err());
    }

    #[test]
    fn cell24_is_frame_image() {
        let a: RationalMatrix = frame_map();
        let p4 = voronoi_dn_polytope(4).unwrap();
        let mut image: Vec<RationalVector> = p4.vertices().iter().map(|v| a.mul_vec(v)).collect();
        image.sort();
        assert_eq!(image, cell24().vertices());
    }

    #[test]
    fn cell24_facet_root_sets() {
        let c = cell24();
        let e4 = RationalVector::unit(4, 3);
        let f = c.facets().iter().position(|h| h.normal == e4).unwrap();
        let dirs: Vec<String> = d4_roots()
            .iter()
            .filter(|r| {
                let pts: Vec<&RationalVector> = c.facet_vertices(f).ones().map(|i| &c.vertices()[i]).collect();
                pts.iter().any(|p| pts.iter().any(|q| &(*p - *q) == &r.vector()))
            })
            .map(|r| r.to_string())
            .collect();
        assert_eq!(dirs, ["12-", "12+", "13-", "13+", "23-", "23+"]);
        // Every orthogonal pair of roots lies in the root set of some facet.
        for a in d4_roots() {
            for b in d4_roots() {
                if a < b && a.is_orthogonal(*b) {
                    assert!(c.facets().iter().any(|h| h.normal.dot(&a.vector()).is_zero() && h.normal.dot(&b.vector()).is_zero()));
                }
            }
        }
        assert_eq!(belts(c).unwrap().len(), 16);
        assert_eq!(edge_zones(c).len(), 12);
    }

    #[test]
    fn zonotope_examples() {
        let r = root_vectors();
        let quad = zonotope(&[r[0].clone(), r[1].clone(), r[10].clone(), r[11].clone()], None).unwrap();
        assert_eq!(quad.facets().len(), 8);
        assert!(zonotope(&vec![r[0].clone(); 13], None).is_err());
        assert!(matches!(
            zonotope(&[r[0].clone()], Some(&[Rational::zero()])),
            Err(Error::NonPositiveLength(_))
        ));
    }

    #[test]
    fn e1_is_not_addable_to_cell24() {
        assert!(!can_add_segment(cell24(), &RationalVector::unit(4, 0)).unwrap());
    }
}
