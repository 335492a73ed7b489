//! Exact polytopes: dual descriptions, face lattices, belts, zones and segments.

mod hull;
mod json;
mod lattice;
mod segment;
mod structure;

use std::collections::{BTreeSet, HashMap};

use fixedbitset::FixedBitSet;

use crate::canon::{Bipartite, Certificate};
use crate::error::{Error, Result};
use crate::exact_linalg::{rank_of, Rational, RationalVector};

pub(crate) use hull::AffineHull;
pub use hull::{hull_facets, is_bounded, lp_extremum, vertices_of, Sense};
pub use json::{BeltCounts, FacetJson, PolytopeJson};
pub use lattice::FaceLattice;
pub use segment::{add_segment, erode_segment, split_off_segment};
pub use structure::{
    belts, can_add_segment, centrally_symmetric, edge_zones, facet_translations, venkov_parallelotope, width_positive,
    Belt, EdgeZone, VenkovReport,
};

/// The half-space `normal · x <= rhs`, or the hyperplane when used as an equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperplane {
    pub normal: RationalVector,
    pub rhs: Rational,
}

impl Hyperplane {
    pub fn new(normal: RationalVector, rhs: Rational) -> Self {
        Self { normal, rhs }
    }

    pub fn contains(&self, x: &RationalVector) -> bool {
        self.normal.dot(x) <= self.rhs
    }

    pub fn is_tight(&self, x: &RationalVector) -> bool {
        self.normal.dot(x) == self.rhs
    }

    /// Same half-space with a primitive integer normal.
    pub fn normalized(&self) -> Self {
        let p = self.normal.primitive();
        let k = p.ratio_to(&self.normal).expect("parallel");
        Self { normal: p, rhs: &self.rhs * &k }
    }
}

/// A polyhedron `{x : Ax <= b, Ex = f}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolytope {
    dim: usize,
    facets: Vec<Hyperplane>,
    equalities: Vec<Hyperplane>,
}

impl HPolytope {
    pub fn new(dim: usize, facets: Vec<Hyperplane>) -> Result<Self> {
        Self::with_equalities(dim, facets, Vec::new())
    }

    pub fn with_equalities(dim: usize, facets: Vec<Hyperplane>, equalities: Vec<Hyperplane>) -> Result<Self> {
        for h in facets.iter().chain(&equalities) {
            if h.normal.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: h.normal.dim() });
            }
            if h.normal.is_zero() {
                return Err(Error::ZeroDirection);
            }
        }
        Ok(Self { dim, facets, equalities })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn inequalities(&self) -> &[Hyperplane] {
        &self.facets
    }

    pub fn equalities(&self) -> &[Hyperplane] {
        &self.equalities
    }

    pub fn contains(&self, x: &RationalVector) -> bool {
        self.facets.iter().all(|h| h.contains(x)) && self.equalities.iter().all(|h| h.is_tight(x))
    }
}

/// A finite point set listing exactly the vertices of its hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPolytope {
    vertices: Vec<RationalVector>,
}

impl VPolytope {
    /// Keeps only the extreme points of `points`.
    pub fn from_points(points: &[RationalVector]) -> Result<Self> {
        let dirs: Vec<RationalVector> = points
            .iter()
            .enumerate()
            .flat_map(|(i, p)| points[i + 1..].iter().map(move |q| q - p))
            .filter(|d| !d.is_zero())
            .collect();
        Ok(Self { vertices: Polytope::from_points(points, &dirs)?.vertices })
    }

    pub fn vertices(&self) -> &[RationalVector] {
        &self.vertices
    }
}

/// A bounded polytope with both descriptions and its face lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<RationalVector>,
    facets: Vec<Hyperplane>,
    equalities: Vec<Hyperplane>,
    lattice: FaceLattice,
}

fn tight_set(h: &Hyperplane, vertices: &[RationalVector]) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(vertices.len());
    for (i, v) in vertices.iter().enumerate() {
        if h.is_tight(v) {
            s.insert(i);
        }
    }
    s
}

impl Polytope {
    /// Convex hull of `points`; every edge of the hull must be parallel to one
    /// of `directions`, or the hull construction reports a coverage error.
    pub fn from_points(points: &[RationalVector], directions: &[RationalVector]) -> Result<Self> {
        let points: Vec<RationalVector> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let (facets, equalities) = hull_facets(&points, directions)?;
        let hull = AffineHull::of(&points)?;
        let vertices: Vec<RationalVector> = points
            .into_iter()
            .filter(|p| {
                let tight: Vec<RationalVector> =
                    facets.iter().filter(|f| f.is_tight(p)).map(|f| f.normal.clone()).collect();
                rank_of(&tight) == hull.dim
            })
            .collect();
        Self::from_parts(hull.base.dim(), hull.dim, vertices, facets, equalities)
    }

    /// Polytope of a bounded inequality system; redundant inequalities are dropped.
    pub fn from_hrep(h: &HPolytope) -> Result<Self> {
        let vertices = vertices_of(h)?;
        let hull = AffineHull::of(&vertices)?;
        let mut seen = BTreeSet::new();
        let mut facets = Vec::new();
        for f in h.inequalities() {
            let f = f.normalized();
            let tight = tight_set(&f, &vertices);
            let n = tight.count_ones(..);
            if n == vertices.len() || n == 0 {
                continue;
            }
            let pts: Vec<&RationalVector> = tight.ones().map(|i| &vertices[i]).collect();
            if crate::exact_linalg::affine_rank(&pts) == Some(hull.dim - 1) && seen.insert(tight.ones().collect::<Vec<_>>()) {
                facets.push(f);
            }
        }
        facets.sort();
        Self::from_parts(h.dim(), hull.dim, vertices, facets, hull.equalities)
    }

    pub(crate) fn from_parts(
        dim: usize,
        affine_dim: usize,
        vertices: Vec<RationalVector>,
        facets: Vec<Hyperplane>,
        equalities: Vec<Hyperplane>,
    ) -> Result<Self> {
        let sets: Vec<FixedBitSet> = facets.iter().map(|f| tight_set(f, &vertices)).collect();
        let lattice = FaceLattice::build(affine_dim, vertices.len(), sets)?;
        Ok(Self { dim, vertices, facets, equalities, lattice })
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn affine_dim(&self) -> usize {
        self.lattice.dim()
    }

    pub fn vertices(&self) -> &[RationalVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Hyperplane] {
        &self.facets
    }

    pub fn equalities(&self) -> &[Hyperplane] {
        &self.equalities
    }

    pub fn lattice(&self) -> &FaceLattice {
        &self.lattice
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.lattice.f_vector()
    }

    pub fn facet_vertices(&self, i: usize) -> &FixedBitSet {
        &self.lattice.facets()[i]
    }

    pub fn to_hpolytope(&self) -> HPolytope {
        HPolytope { dim: self.dim, facets: self.facets.clone(), equalities: self.equalities.clone() }
    }

    pub fn to_vpolytope(&self) -> VPolytope {
        VPolytope { vertices: self.vertices.clone() }
    }

    /// Canonical directions of all edges, deduplicated and sorted.
    pub fn edge_directions(&self) -> Vec<RationalVector> {
        let dirs: BTreeSet<RationalVector> = self
            .lattice
            .edges()
            .into_iter()
            .map(|(a, b)| (&self.vertices[b] - &self.vertices[a]).canonical_direction())
            .collect();
        dirs.into_iter().collect()
    }

    /// Support value `max n·x`.
    pub fn support(&self, n: &RationalVector) -> Rational {
        self.vertices.iter().map(|v| n.dot(v)).max().expect("nonempty")
    }

    pub fn contains(&self, x: &RationalVector) -> bool {
        self.facets.iter().all(|h| h.contains(x)) && self.equalities.iter().all(|h| h.is_tight(x))
    }

    pub fn center(&self) -> Option<RationalVector> {
        centrally_symmetric(&self.vertices)
    }

    /// Canonical form of the vertex-facet incidence.
    pub fn certificate(&self) -> Certificate {
        canonical_certificate(&self.lattice)
    }

    pub(crate) fn vertex_index(&self) -> HashMap<&RationalVector, usize> {
        self.vertices.iter().enumerate().map(|(i, v)| (v, i)).collect()
    }

    /// True when the two polytopes have the same vertex set.
    pub fn same_geometry(&self, other: &Self) -> bool {
        self.vertices == other.vertices
    }
}

/// Canonical certificate of a face lattice, from its vertex-facet incidence.
pub fn canonical_certificate(lattice: &FaceLattice) -> Certificate {
    let rows: Vec<Vec<usize>> = lattice.facets().iter().map(|f| f.ones().collect()).collect();
    Bipartite::new(lattice.n_vertices(), &rows).certificate()
}

#[cfg(test)]
pub(crate) mod test_shapes {
    use super::*;

    pub fn box_polytope(half_widths: &[i64]) -> Polytope {
        let d = half_widths.len();
        let points: Vec<RationalVector> = (0..1u32 << d)
            .map(|m| {
                RationalVector::from_ints(
                    &(0..d).map(|i| if m >> i & 1 == 1 { half_widths[i] } else { -half_widths[i] }).collect::<Vec<_>>(),
                )
            })
            .collect();
        let dirs: Vec<RationalVector> = (0..d).map(|i| RationalVector::unit(d, i)).collect();
        Polytope::from_points(&points, &dirs).unwrap()
    }

    pub fn roots4() -> Vec<RationalVector> {
        let mut out = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                for s in [1, -1] {
                    let mut v = vec![0i64; 4];
                    v[i] = 1;
                    v[j] = s;
                    out.push(RationalVector::from_ints(&v));
                }
            }
        }
        out
    }

    pub fn cell24() -> Polytope {
        let dirs = roots4();
        let points: Vec<RationalVector> = dirs.iter().flat_map(|r| [r.clone(), -r]).collect();
        Polytope::from_points(&points, &dirs).unwrap()
    }

    pub fn zonotope(gens: &[RationalVector]) -> Polytope {
        let d = gens[0].dim();
        let half = Rational::new(1, 2);
        let mut points = vec![RationalVector::zeros(d)];
        for g in gens {
            let s = g.scale(&half);
            points = points.iter().flat_map(|p| [p + &s, p - &s]).collect();
        }
        Polytope::from_points(&points, gens).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::test_shapes::*;
    use super::*;

    #[test]
    fn cube_f_vector() {
        assert_eq!(box_polytope(&[1, 1, 1, 1]).f_vector(), vec![16, 32, 24, 8]);
    }

    #[test]
    fn cell24_structure() {
        let c = cell24();
        assert_eq!(c.f_vector(), vec![24, 96, 96, 24]);
        for i in 0..24 {
            let f = c.facet_vertices(i);
            assert_eq!(f.count_ones(..), 6);
        }
        let mut normals: Vec<RationalVector> = c.facets().iter().map(|f| f.normal.clone()).collect();
        normals.sort();
        assert!(normals.contains(&RationalVector::from_ints(&[0, 0, 0, 1])));
        assert!(normals.contains(&RationalVector::from_ints(&[1, -1, 1, -1])));
        // Each facet is an octahedron: 12 edges and 8 triangles.
        let l = c.lattice();
        for i in 0..24 {
            let tri = l.children(3, i);
            assert_eq!(tri.len(), 8);
            assert!(tri.iter().all(|&t| l.faces(2)[t].count_ones(..) == 3));
            let edges: BTreeSet<usize> = tri.iter().flat_map(|&t| l.children(2, t).iter().copied()).collect();
            assert_eq!(edges.len(), 12);
        }
    }

    #[test]
    fn permutohedron() {
        // e_i - e_j for the six pairs plus the four e_i: the graphic system of K5.
        let mut a4: Vec<RationalVector> = roots4().into_iter().skip(1).step_by(2).collect();
        for i in 0..4 {
            a4.push(RationalVector::unit(4, i));
        }
        let z = zonotope(&a4);
        assert_eq!(z.f_vector(), vec![120, 240, 150, 30]);
    }

    #[test]
    fn hrep_round_trip() {
        let c = cell24();
        let back = Polytope::from_hrep(&c.to_hpolytope()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn certificate_invariance() {
        let a = box_polytope(&[1, 1, 1, 1]);
        let b = box_polytope(&[3, 1, 2, 5]);
        assert_eq!(a.certificate(), b.certificate());
        assert_ne!(a.certificate(), cell24().certificate());
    }
}
