//! Central symmetry, belts, edge zones, widths and the Venkov test.

use std::collections::{BTreeMap, HashMap, HashSet};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use super::{Polytope, AffineHull};
use crate::error::{Error, Result};
use crate::exact_linalg::{Rational, RationalVector};

/// The center of the point set if it is invariant under `x -> 2c - x`.
pub fn centrally_symmetric(points: &[RationalVector]) -> Option<RationalVector> {
    let first = points.first()?;
    let n = Rational::from_int(points.len() as i64);
    let mut sum = RationalVector::zeros(first.dim());
    for p in points {
        sum = &sum + p;
    }
    let c = sum.scale(&n.recip());
    let set: HashSet<&RationalVector> = points.iter().collect();
    points.iter().all(|p| set.contains(&p.reflect_through(&c))).then_some(c)
}

/// A cycle of facets around one translation class of ridges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Belt {
    /// Facets in cyclic order.
    pub facet_ids: Vec<usize>,
    /// Ridges shared by consecutive facets; `ridges[i]` lies in `facet_ids[i]`
    /// and the previous facet.
    pub ridges: Vec<usize>,
}

impl Belt {
    pub fn size(&self) -> usize {
        self.facet_ids.len()
    }

    /// 2 for four facets, 3 for six; other sizes have no order.
    pub fn order(&self) -> Option<usize> {
        match self.size() {
            4 => Some(2),
            6 => Some(3),
            _ => None,
        }
    }
}

fn facet_points(p: &Polytope, set: &FixedBitSet) -> Vec<RationalVector> {
    set.ones().map(|i| p.vertices[i].clone()).collect()
}

/// Belts by walking around each ridge class: reflecting a ridge through the
/// center of a facet containing it gives the opposite ridge of that facet.
pub fn belts(p: &Polytope) -> Result<Vec<Belt>> {
    let k = p.affine_dim();
    if k < 2 {
        return Ok(Vec::new());
    }
    let l = p.lattice();
    let centers: Vec<RationalVector> = l
        .facets()
        .iter()
        .map(|f| centrally_symmetric(&facet_points(p, f)).ok_or(Error::NotParallelotope))
        .collect::<Result<_>>()?;
    let ridges = l.faces(k - 2);
    let mut parents = vec![Vec::with_capacity(2); ridges.len()];
    for f in 0..l.facets().len() {
        for &r in l.children(k - 1, f) {
            parents[r].push(f);
        }
    }
    let ridge_index: HashMap<&FixedBitSet, usize> = ridges.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let vertex_index = p.vertex_index();
    let reflect = |r: usize, f: usize| -> Result<usize> {
        let mut image = FixedBitSet::with_capacity(p.vertices.len());
        for v in ridges[r].ones() {
            let w = p.vertices[v].reflect_through(&centers[f]);
            image.insert(*vertex_index.get(&w).ok_or(Error::NotParallelotope)?);
        }
        ridge_index.get(&image).copied().ok_or(Error::NotParallelotope)
    };
    let mut seen = vec![false; ridges.len()];
    let mut out = Vec::new();
    for r0 in 0..ridges.len() {
        if seen[r0] {
            continue;
        }
        let mut belt = Belt { facet_ids: Vec::new(), ridges: Vec::new() };
        let (mut r, mut f) = (r0, parents[r0][0]);
        loop {
            seen[r] = true;
            belt.ridges.push(r);
            belt.facet_ids.push(f);
            let next = reflect(r, f)?;
            let other = parents[next].iter().copied().find(|&g| g != f).ok_or(Error::NotParallelotope)?;
            r = next;
            f = other;
            if r == r0 || belt.ridges.len() > ridges.len() {
                break;
            }
        }
        out.push(belt);
    }
    Ok(out)
}

/// Outcome of the Venkov conditions on a polytope.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VenkovReport {
    pub centrally_symmetric: bool,
    pub facets_centrally_symmetric: bool,
    /// Sizes of all belts, empty when the facets are not centrally symmetric.
    pub belt_sizes: Vec<usize>,
}

impl VenkovReport {
    pub fn is_parallelotope(&self) -> bool {
        self.centrally_symmetric
            && self.facets_centrally_symmetric
            && self.belt_sizes.iter().all(|&s| s == 4 || s == 6)
    }

    pub fn b2(&self) -> usize {
        self.belt_sizes.iter().filter(|&&s| s == 4).count()
    }

    pub fn b3(&self) -> usize {
        self.belt_sizes.iter().filter(|&&s| s == 6).count()
    }

    /// Belt sizes other than 4 and 6.
    pub fn flagged(&self) -> Vec<usize> {
        self.belt_sizes.iter().copied().filter(|&s| s != 4 && s != 6).collect()
    }
}

pub fn venkov_parallelotope(p: &Polytope) -> VenkovReport {
    let cs = p.center().is_some();
    let fs = p.lattice().facets().iter().all(|f| centrally_symmetric(&facet_points(p, f)).is_some());
    let belt_sizes = if fs {
        belts(p).map(|b| b.iter().map(Belt::size).collect()).unwrap_or_default()
    } else {
        Vec::new()
    };
    let fs = fs && (p.affine_dim() < 2 || !belt_sizes.is_empty());
    VenkovReport { centrally_symmetric: cs, facets_centrally_symmetric: fs, belt_sizes }
}

/// Edges parallel to one direction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeZone {
    /// Primitive integer direction, first nonzero entry positive.
    pub characteristic: RationalVector,
    /// Indices into the lattice's edge list.
    pub edges: Vec<usize>,
    /// `|e| / |characteristic|` for each edge.
    pub regulators: Vec<Rational>,
    /// Every 2-face meets the zone in zero or two edges.
    pub closed: bool,
}

impl EdgeZone {
    pub fn shortest(&self) -> &Rational {
        self.regulators.iter().min().expect("zone has an edge")
    }
}

pub fn edge_zones(p: &Polytope) -> Vec<EdgeZone> {
    let l = p.lattice();
    let mut groups: BTreeMap<RationalVector, Vec<(usize, Rational)>> = BTreeMap::new();
    for (i, (a, b)) in l.edges().into_iter().enumerate() {
        let e = &p.vertices[b] - &p.vertices[a];
        let z = e.canonical_direction();
        let rho = e.ratio_to(&z).expect("parallel").abs();
        groups.entry(z).or_default().push((i, rho));
    }
    let mut zone_of = vec![0usize; l.edges().len()];
    let groups: Vec<(RationalVector, Vec<(usize, Rational)>)> = groups.into_iter().collect();
    for (zi, (_, edges)) in groups.iter().enumerate() {
        for (e, _) in edges {
            zone_of[*e] = zi;
        }
    }
    let mut closed = vec![true; groups.len()];
    if p.affine_dim() >= 2 {
        for t in 0..l.faces(2).len() {
            let mut counts: HashMap<usize, usize> = HashMap::new();
            for &e in l.children(2, t) {
                *counts.entry(zone_of[e]).or_default() += 1;
            }
            for (z, c) in counts {
                if c != 2 {
                    closed[z] = false;
                }
            }
        }
    }
    groups
        .into_iter()
        .zip(closed)
        .map(|((characteristic, edges), closed)| EdgeZone {
            characteristic,
            edges: edges.iter().map(|(e, _)| *e).collect(),
            regulators: edges.into_iter().map(|(_, r)| r).collect(),
            closed,
        })
        .collect()
}

/// True when every line parallel to `z` through the polytope meets it in a
/// segment of positive length. The minimum fiber length is attained over a
/// vertex, and the fiber at a vertex is nondegenerate iff `z` or `-z` is a
/// feasible direction there.
pub fn width_positive(p: &Polytope, z: &RationalVector) -> bool {
    if z.is_zero() || z.dim() != p.dim() || p.equalities().iter().any(|e| !e.normal.dot(z).is_zero()) {
        return false;
    }
    if p.affine_dim() == 0 {
        return false;
    }
    p.vertices().iter().all(|v| {
        let slopes: Vec<i32> =
            p.facets().iter().filter(|f| f.is_tight(v)).map(|f| f.normal.dot(z).signum()).collect();
        slopes.iter().all(|&s| s <= 0) || slopes.iter().all(|&s| s >= 0)
    })
}

/// True when every 3-belt has a facet normal orthogonal to `z`.
pub fn can_add_segment(p: &Polytope, z: &RationalVector) -> Result<bool> {
    if z.is_zero() {
        return Err(Error::ZeroDirection);
    }
    if !venkov_parallelotope(p).is_parallelotope() {
        return Err(Error::NotParallelotope);
    }
    let hull = AffineHull { base: RationalVector::zeros(p.dim()), dim: p.affine_dim(), equalities: p.equalities().to_vec() };
    if !hull.contains_direction(z) {
        return Ok(false);
    }
    Ok(belts(p)?
        .iter()
        .filter(|b| b.size() == 6)
        .all(|b| b.facet_ids.iter().any(|&f| p.facets()[f].normal.dot(z).is_zero())))
}

/// Translation vectors `t_i = 2 (c_i - c)` carrying the opposite facet onto
/// facet `i`, if the polytope and its facets are centrally symmetric and the
/// tiling is face-to-face across every facet.
pub fn facet_translations(p: &Polytope) -> Option<Vec<RationalVector>> {
    let c = p.center()?;
    let facets = p.lattice().facets();
    let mut out = Vec::with_capacity(facets.len());
    for (i, f) in facets.iter().enumerate() {
        let pts = facet_points(p, f);
        let ci = centrally_symmetric(&pts)?;
        let t = (&ci - &c).scale(&Rational::from_int(2));
        let opposite = p.facets().iter().position(|h| h.normal == -&p.facets()[i].normal)?;
        let mut shifted: Vec<RationalVector> = facet_points(p, &facets[opposite]).iter().map(|v| v + &t).collect();
        shifted.sort();
        let mut mine = pts;
        mine.sort();
        if shifted != mine {
            return None;
        }
        out.push(t);
    }
    Some(out)
}
