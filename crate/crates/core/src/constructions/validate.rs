//! Checks of the segment-addition rules for the D_n cells and 24-cell sums.

use serde::Serialize;

use super::builders::{dn_edge_directions, voronoi_dn_polytope};
use super::sums::sum_cell24;
use crate::error::Result;
use crate::exact_linalg::RationalVector;
use crate::polytope_core::{belts, can_add_segment, venkov_parallelotope};
use crate::root_d4::{contains_quadruple, d4_roots, pi_mask, tau_mask, Root};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootCheck {
    pub root: String,
    /// `can_add_segment` on the sum.
    pub accepted: bool,
    /// The root is not the completion of a triple of the set.
    pub predicted: bool,
    /// Venkov verdict on the sum with the root added to the set.
    pub extended_is_parallelotope: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PvzReport {
    pub mask: u16,
    pub is_parallelotope: bool,
    pub facets: usize,
    pub expected_facets: usize,
    pub b2: usize,
    pub expected_b2: usize,
    pub b3: usize,
    pub expected_b3: usize,
    pub roots: Vec<RootCheck>,
    pub mismatches: Vec<String>,
}

impl PvzReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares a 24-cell sum with the facet and belt counts predicted from its
/// triples and isolated orthogonal pairs, and every root addition with the
/// rule that only completions of triples are blocked.
pub fn pvz_validate(mask: u16) -> Result<PvzReport> {
    let p = sum_cell24(mask)?;
    let v = venkov_parallelotope(&p);
    let triples = tau_mask(mask);
    let pairs = pi_mask(mask).len();
    let blocked: Vec<Root> = triples.iter().map(|t| t.completion).collect();
    let mut report = PvzReport {
        mask,
        is_parallelotope: v.is_parallelotope(),
        facets: p.facets().len(),
        expected_facets: 24 + 2 * triples.len(),
        b2: v.b2(),
        expected_b2: pairs,
        b3: v.b3(),
        expected_b3: 16 + 3 * triples.len(),
        roots: Vec::new(),
        mismatches: Vec::new(),
    };
    if !report.is_parallelotope {
        report.mismatches.push("sum is not a parallelotope".into());
        return Ok(report);
    }
    for (what, got, want) in [
        ("facets", report.facets, report.expected_facets),
        ("2-belts", report.b2, report.expected_b2),
        ("3-belts", report.b3, report.expected_b3),
    ] {
        if got != want {
            report.mismatches.push(format!("{what}: measured {got}, predicted {want}"));
        }
    }
    for r in d4_roots() {
        let accepted = can_add_segment(&p, &r.vector())?;
        let predicted = !blocked.contains(r);
        let extended = venkov_parallelotope(&sum_cell24(mask | r.bit())?).is_parallelotope();
        if accepted != predicted || extended != predicted {
            report.mismatches.push(format!("root {r}: accepted {accepted}, extended {extended}, predicted {predicted}"));
        }
        report.roots.push(RootCheck { root: r.to_string(), accepted, predicted, extended_is_parallelotope: extended });
    }
    if contains_quadruple(mask) {
        report.mismatches.push("set contains a quadruple".into());
    }
    Ok(report)
}

/// Shape of the normals of a 3-belt of the D_n cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BeltPattern {
    /// `e_i - e_j, e_j - e_k, e_i - e_k`.
    AllMinus,
    /// `e_i + e_j, e_j + e_k, e_i - e_k`.
    TwoPlus,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SdnReport {
    pub n: usize,
    pub directions_tested: usize,
    pub accepted: Vec<Vec<i64>>,
    pub predicted: Vec<Vec<i64>>,
    /// Distinct edge directions of the cell itself.
    pub edge_directions: usize,
    pub three_belts: usize,
    pub all_minus_belts: usize,
    pub two_plus_belts: usize,
    pub other_belts: usize,
}

impl SdnReport {
    pub fn ok(&self) -> bool {
        self.accepted == self.predicted && self.other_belts == 0
    }
}

fn belt_pattern(normals: &[RationalVector]) -> BeltPattern {
    let lines: std::collections::BTreeSet<RationalVector> = normals.iter().map(|n| n.canonical_direction()).collect();
    if lines.len() != 3 {
        return BeltPattern::Other;
    }
    let mut support = std::collections::BTreeSet::new();
    let mut plus = 0;
    for n in &lines {
        let nz: Vec<usize> = (0..n.dim()).filter(|&i| !n[i].is_zero()).collect();
        if nz.len() != 2 || n[nz[0]].abs() != n[nz[1]].abs() {
            return BeltPattern::Other;
        }
        support.extend(nz.iter().copied());
        if n[nz[0]] == n[nz[1]] {
            plus += 1;
        }
    }
    match (support.len(), plus) {
        (3, 0) => BeltPattern::AllMinus,
        (3, 2) => BeltPattern::TwoPlus,
        _ => BeltPattern::Other,
    }
}

/// Tests every primitive direction with entries in `[-2, 2]` for addability to
/// the D_n cell, against the list `e_i, (±1, ..., ±1)`, and classifies the 3-belts.
pub fn sdn_validate(n: usize) -> Result<SdnReport> {
    let p = voronoi_dn_polytope(n)?;
    let formula: Vec<RationalVector> = dn_edge_directions(n);
    let mut accepted = Vec::new();
    let mut predicted = Vec::new();
    let mut tested = 0;
    let total = 5usize.pow(n as u32);
    for code in 0..total {
        let z: Vec<i64> = (0..n).map(|i| (code / 5usize.pow(i as u32) % 5) as i64 - 2).collect();
        let zv = RationalVector::from_ints(&z);
        if zv.is_zero() || zv.canonical_direction() != zv {
            continue;
        }
        tested += 1;
        if can_add_segment(&p, &zv)? {
            accepted.push(z.clone());
        }
        if formula.iter().any(|f| f.is_parallel_to(&zv)) {
            predicted.push(z);
        }
    }
    let mut counts = [0usize; 3];
    let all = belts(&p)?;
    let three: Vec<_> = all.iter().filter(|b| b.size() == 6).collect();
    for b in &three {
        let normals: Vec<RationalVector> = b.facet_ids.iter().map(|&f| p.facets()[f].normal.clone()).collect();
        counts[belt_pattern(&normals) as usize] += 1;
    }
    Ok(SdnReport {
        n,
        directions_tested: tested,
        accepted,
        predicted,
        edge_directions: p.edge_directions().len(),
        three_belts: three.len(),
        all_minus_belts: counts[0],
        two_plus_belts: counts[1],
        other_belts: counts[2],
    })
}
