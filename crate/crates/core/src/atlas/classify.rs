//! Merging the two enumerations and the per-record checks.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::data::TABLE2;
use super::records::{enumerate_sums, enumerate_zonotopal, Atlas, CatalogRecord, Kind, ScanSummary};
use crate::constructions::{cell24, decompose, root_vectors, zonotope};
use crate::error::{Error, Result};
use crate::exact_linalg::{Rational, RationalVector};
use crate::exec;
use crate::graphs_matroids::ConwayLabel;
use crate::polytope_core::{add_segment, edge_zones, split_off_segment, width_positive, Polytope};

/// The shape label of `Z(U)` for a sum record: a zonotope number when `U`
/// spans the space, otherwise one of the lower-dimensional names.
pub fn derive_nd0(record: &CatalogRecord, zonotopal: &[CatalogRecord]) -> Result<Option<String>> {
    if record.kind == Kind::Zonotopal || record.m == 0 {
        return Ok(None);
    }
    let u = record.generator_vectors()?;
    let orthogonal_pairs =
        (0..u.len()).flat_map(|i| (i + 1..u.len()).map(move |j| (i, j))).filter(|&(i, j)| u[i].dot(&u[j]).is_zero()).count();
    let name = match (record.dim_u, record.graph_label) {
        (4, _) => {
            let cert = zonotope(&u, None)?.certificate();
            let hit = zonotopal.iter().find(|z| z.certificate == cert);
            return Ok(hit.map(|z| z.id.clone()));
        }
        (3, ConwayLabel::K4) => "a1",
        (3, ConwayLabel::C221) => "a2",
        (3, ConwayLabel::C3Plus1) => "a3",
        (3, ConwayLabel::C4) => "a4",
        (3, ConwayLabel::Forest3) => match orthogonal_pairs {
            3 => "a5",
            1 => "a5'",
            0 => "a5''",
            _ => return Ok(None),
        },
        (2, ConwayLabel::C3) => "alpha",
        (2, ConwayLabel::Forest2) if orthogonal_pairs == 1 => "beta1",
        (2, ConwayLabel::Forest2) => "beta2",
        _ => return Ok(None),
    };
    Ok(Some(name.to_string()))
}

/// Both enumerations merged into one atlas, with `N_D⁰` filled in and the
/// certificates checked pairwise distinct.
pub fn build_atlas() -> Result<(Atlas, ScanSummary)> {
    let zonotopal = enumerate_zonotopal()?;
    let (mut sums, summary) = enumerate_sums()?;
    for r in &mut sums {
        r.nd0 = derive_nd0(r, &zonotopal)?;
    }
    let mut records = zonotopal;
    records.extend(sums);
    let mut seen: BTreeMap<_, &str> = BTreeMap::new();
    for r in &records {
        if let Some(other) = seen.insert(&r.certificate, &r.id) {
            return Err(Error::Enumeration(format!("records {other} and {} share a certificate", r.id)));
        }
    }
    Ok((Atlas::new(records), summary))
}

/// Which part of the atlas to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Selection {
    Zonotopal,
    Sums,
    All,
}

impl std::str::FromStr for Selection {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zonotopal" => Ok(Self::Zonotopal),
            "sums" => Ok(Self::Sums),
            "all" => Ok(Self::All),
            _ => Err(Error::Parse(format!("unknown selection {s:?}"))),
        }
    }
}

pub fn atlas_of(selection: Selection) -> Result<Atlas> {
    if selection == Selection::Zonotopal {
        return Ok(Atlas::new(enumerate_zonotopal()?));
    }
    let (mut atlas, _) = build_atlas()?;
    if selection == Selection::Sums {
        atlas.records.retain(|r| r.kind != Kind::Zonotopal);
    }
    Ok(atlas)
}

/// Outcome of the segment tests on one record along one direction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirectionCheck {
    pub direction: Vec<String>,
    pub closed_zone: bool,
    pub width_positive: bool,
    pub round_trip: bool,
}

impl DirectionCheck {
    pub fn consistent(&self) -> bool {
        self.closed_zone == self.width_positive && self.width_positive == self.round_trip
    }
}

/// Splits `z` off `p` using the shortest edge of its zone, then adds it back.
fn round_trip(p: &Polytope, z: &RationalVector) -> Result<bool> {
    let Some(zone) = edge_zones(p).into_iter().find(|e| e.characteristic.is_parallel_to(z)) else {
        // No edge along z: any split must fail.
        return Ok(split_off_segment(p, z, &Rational::new(1, 2))?.is_some());
    };
    let lambda = zone.shortest() * &Rational::new(1, 2);
    let z = &zone.characteristic;
    match split_off_segment(p, z, &lambda)? {
        Some(core) => Ok(&add_segment(&core, z, &lambda)? == p),
        None => Ok(false),
    }
}

/// The three equivalent segment tests along the 12 roots and along every edge
/// direction of the record.
pub fn direction_checks(p: &Polytope) -> Result<Vec<DirectionCheck>> {
    let mut dirs: BTreeSet<RationalVector> = root_vectors().iter().map(|r| r.canonical_direction()).collect();
    dirs.extend(p.edge_directions());
    dirs.into_iter()
        .map(|z| {
            let closed_zone = edge_zones(p).iter().any(|e| e.closed && e.characteristic.is_parallel_to(&z));
            Ok(DirectionCheck {
                direction: z.to_strings(),
                closed_zone,
                width_positive: width_positive(p, &z),
                round_trip: round_trip(p, &z)?,
            })
        })
        .collect()
}

/// Per-record result of the classification checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecordCheck {
    pub id: String,
    pub rebuilt_matches: bool,
    pub directions: usize,
    pub inconsistent_directions: Vec<Vec<String>>,
    /// `point` or `cell24` or `other`.
    pub core: String,
    pub segments_match_generators: bool,
}

impl RecordCheck {
    pub fn ok(&self) -> bool {
        self.rebuilt_matches && self.inconsistent_directions.is_empty() && self.segments_match_generators && {
            self.core == "point" || self.core == "cell24"
        }
    }
}

fn check_record(r: &CatalogRecord) -> Result<RecordCheck> {
    let p = r.polytope()?;
    let dirs = direction_checks(&p)?;
    let d = decompose(&p)?;
    let core = if d.core.vertices().len() == 1 {
        "point"
    } else if d.core.certificate() == cell24().certificate() {
        "cell24"
    } else {
        "other"
    };
    let expected_core = if r.kind == Kind::Zonotopal { "point" } else { "cell24" };
    let mut got: Vec<RationalVector> = d.zone_directions.iter().map(|z| z.canonical_direction()).collect();
    got.sort();
    let mut want: Vec<RationalVector> = r.generator_vectors()?.iter().map(|z| z.canonical_direction()).collect();
    want.sort();
    Ok(RecordCheck {
        id: r.id.clone(),
        rebuilt_matches: p.certificate() == r.certificate,
        directions: dirs.len(),
        inconsistent_directions: dirs.iter().filter(|c| !c.consistent()).map(|c| c.direction.clone()).collect(),
        core: if core == expected_core { core.to_string() } else { format!("{core} (expected {expected_core})") },
        segments_match_generators: got == want,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifySummary {
    pub total: usize,
    pub zonotopal: usize,
    pub sums: usize,
    pub distinct_certificates: usize,
    pub zonotopal_sum_overlap: usize,
    /// Sum records whose derived shape label differs from the table.
    pub nd0_mismatches: Vec<String>,
    pub records: Vec<RecordCheck>,
}

impl ClassifySummary {
    pub fn ok(&self) -> bool {
        self.total == 52
            && self.distinct_certificates == 52
            && self.zonotopal_sum_overlap == 0
            && self.nd0_mismatches.is_empty()
            && self.records.iter().all(RecordCheck::ok)
    }
}

/// Counts, certificate distinctness and the per-record segment and
/// decomposition checks.
pub fn classify_all(atlas: &Atlas) -> Result<ClassifySummary> {
    let certs: BTreeSet<_> = atlas.records.iter().map(|r| &r.certificate).collect();
    let zono: BTreeSet<_> = atlas.records.iter().filter(|r| r.kind == Kind::Zonotopal).map(|r| &r.certificate).collect();
    let sum: BTreeSet<_> = atlas.records.iter().filter(|r| r.kind != Kind::Zonotopal).map(|r| &r.certificate).collect();
    let nd0_mismatches = atlas
        .records
        .iter()
        .filter(|r| r.kind != Kind::Zonotopal)
        .filter_map(|r| {
            let row = TABLE2.iter().find(|t| Some(t.nd) == r.nd.as_deref())?;
            let want = (!row.nd0.is_empty()).then(|| row.nd0.to_string());
            (want != r.nd0).then(|| format!("{}: derived {:?}, table {:?}", r.id, r.nd0, want))
        })
        .collect();
    let records = exec::map_slice(&atlas.records, check_record).into_iter().collect::<Result<Vec<_>>>()?;
    Ok(ClassifySummary {
        total: atlas.records.len(),
        zonotopal: zono.len(),
        sums: sum.len(),
        distinct_certificates: certs.len(),
        zonotopal_sum_overlap: zono.intersection(&sum).count(),
        nd0_mismatches,
        records,
    })
}
