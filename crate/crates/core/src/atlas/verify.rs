//! Machine checks of the classification statements, one named check per claim.

use std::str::FromStr;

use serde::Serialize;

use super::classify::{build_atlas, classify_all, ClassifySummary};
use super::data::{TABLE1, TABLE2};
use super::records::{table_mask, Atlas, Kind, ScanSummary};
use super::tables::group_roots;
use crate::constructions::{pvz_validate, sdn_validate, sum_cell24, zonotope};
use crate::error::{Error, Result};
use crate::exact_linalg::{rank_of, RationalVector};
use crate::exec;
use crate::graphs_matroids::{is_unimodular_vectors, spans_unimodular_vectors};
use crate::polytope_core::{add_segment, can_add_segment, venkov_parallelotope};
use crate::root_d4::{d4_roots, roots_of_mask, unextendible_unimodular_subsystems, unimodular_table, Root};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Prop {
    Pnz,
    Pzs,
    Sum,
    Sdn,
    Unext,
    Pvz,
    Mcmullen,
}

impl Prop {
    pub const ALL: [Prop; 7] = [Prop::Pnz, Prop::Pzs, Prop::Sum, Prop::Sdn, Prop::Unext, Prop::Pvz, Prop::Mcmullen];

    pub fn as_str(self) -> &'static str {
        match self {
            Prop::Pnz => "pnz",
            Prop::Pzs => "pzs",
            Prop::Sum => "sum",
            Prop::Sdn => "sdn",
            Prop::Unext => "unext",
            Prop::Pvz => "pvz",
            Prop::Mcmullen => "mcmullen",
        }
    }
}

impl FromStr for Prop {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|p| p.as_str() == s).ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub prop: Prop,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, prop: Prop, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { prop, name: name.to_string(), passed, detail: detail.into() });
    }

    /// One `PASS`/`FAIL` line per check.
    pub fn to_text(&self) -> String {
        self.checks
            .iter()
            .map(|c| {
                format!("{} {}/{}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.prop.as_str(), c.name, c.detail)
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

/// Lazily built inputs shared between the checks.
pub struct Context {
    atlas: Option<(Atlas, ScanSummary)>,
    classify: Option<ClassifySummary>,
}

impl Context {
    pub fn new() -> Self {
        Self { atlas: None, classify: None }
    }

    /// Starts from an atlas read from disk; the scan summary is still computed.
    pub fn with_atlas(atlas: Atlas) -> Result<Self> {
        let (_, summary) = super::records::enumerate_sums()?;
        Ok(Self { atlas: Some((atlas, summary)), classify: None })
    }

    fn atlas(&mut self) -> Result<&(Atlas, ScanSummary)> {
        if self.atlas.is_none() {
            self.atlas = Some(build_atlas()?);
        }
        Ok(self.atlas.as_ref().expect("just built"))
    }

    fn classify(&mut self) -> Result<&ClassifySummary> {
        if self.classify.is_none() {
            let summary = classify_all(&self.atlas()?.0)?;
            self.classify = Some(summary);
        }
        Ok(self.classify.as_ref().expect("just built"))
    }
}

impl Default for Context {
    fn default() -> Self {
        Self::new()
    }
}

pub fn verify(props: &[Prop]) -> Result<VerifyReport> {
    verify_with(&mut Context::new(), props)
}

pub fn verify_with(ctx: &mut Context, props: &[Prop]) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    for &p in props {
        match p {
            Prop::Pnz => pnz(ctx, &mut report)?,
            Prop::Pzs => pzs(ctx, &mut report)?,
            Prop::Sum => sum(ctx, &mut report)?,
            Prop::Sdn => sdn(&mut report)?,
            Prop::Unext => unext(&mut report),
            Prop::Pvz => pvz(&mut report)?,
            Prop::Mcmullen => mcmullen(&mut report)?,
        }
    }
    Ok(report)
}

fn pnz(ctx: &mut Context, report: &mut VerifyReport) -> Result<()> {
    let c = ctx.classify()?;
    let bad: Vec<String> = c
        .records
        .iter()
        .filter(|r| !r.inconsistent_directions.is_empty())
        .map(|r| format!("{} {:?}", r.id, r.inconsistent_directions))
        .collect();
    let directions: usize = c.records.iter().map(|r| r.directions).sum();
    report.push(
        Prop::Pnz,
        "closed-zone-width-split",
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} records, {directions} record-direction pairs agree", c.records.len())
        } else {
            format!("disagreements: {}", bad.join("; "))
        },
    );
    Ok(())
}

fn pzs(ctx: &mut Context, report: &mut VerifyReport) -> Result<()> {
    let c = ctx.classify()?.clone();
    report.push(
        Prop::Pzs,
        "52-types",
        c.total == 52 && c.distinct_certificates == 52,
        format!("{} records, {} distinct certificates", c.total, c.distinct_certificates),
    );
    report.push(
        Prop::Pzs,
        "zonotopes-and-sums-disjoint",
        c.zonotopal_sum_overlap == 0,
        format!("{} zonotopal, {} with the 24-cell, {} shared", c.zonotopal, c.sums, c.zonotopal_sum_overlap),
    );
    let bad_core: Vec<&str> = c.records.iter().filter(|r| r.core != "point" && r.core != "cell24").map(|r| r.id.as_str()).collect();
    report.push(
        Prop::Pzs,
        "decomposition-core",
        bad_core.is_empty(),
        if bad_core.is_empty() { "point core for zonotopes, 24-cell core for sums".to_string() } else { format!("wrong core: {bad_core:?}") },
    );
    let bad_segments: Vec<&str> =
        c.records.iter().filter(|r| !r.segments_match_generators || !r.rebuilt_matches).map(|r| r.id.as_str()).collect();
    report.push(
        Prop::Pzs,
        "decomposition-segments",
        bad_segments.is_empty(),
        if bad_segments.is_empty() { "split directions equal the generators".to_string() } else { format!("mismatch: {bad_segments:?}") },
    );
    report.push(
        Prop::Pzs,
        "shape-labels",
        c.nd0_mismatches.is_empty(),
        if c.nd0_mismatches.is_empty() { "derived N_D0 equals the table".to_string() } else { c.nd0_mismatches.join("; ") },
    );

    let (atlas, _) = ctx.atlas()?;
    let cert = |mask: u16| sum_cell24(mask).map(|p| p.certificate());
    let target = atlas.get("21").map(|r| r.certificate.clone());
    let mut contracted = Vec::new();
    for (row, drop) in [("2", "24-"), ("3", "24+")] {
        let entry = TABLE2.iter().find(|t| t.nd == row).expect("row present");
        let root: Root = drop.parse()?;
        let mask = table_mask(entry.roots)? & !root.bit();
        contracted.push((row, drop, mask, cert(mask)?));
    }
    let same = contracted.iter().all(|(_, _, _, c)| Some(c) == target.as_ref()) && contracted[0].2 == contracted[1].2;
    report.push(
        Prop::Pzs,
        "contraction-to-21",
        same,
        format!("rows 2 and 3 without {} and {} give {}", contracted[0].1, contracted[1].1, if same { "type 21" } else { "different types" }),
    );

    let max_unimodular = (0..4096usize).filter(|&m| unimodular_table()[m]).map(|m| (m as u16).count_ones()).max().unwrap_or(0);
    report.push(
        Prop::Pzs,
        "a4-not-in-d4",
        max_unimodular < 10,
        format!("largest unimodular root subset has {max_unimodular} roots, A4 needs 10"),
    );

    let cell = atlas.get("51").is_some_and(|r| r.certificate == crate::constructions::cell24().certificate());
    report.push(
        Prop::Pzs,
        "closed-under-decomposition",
        cell && bad_core.is_empty(),
        "every sum core is record 51, every zonotope core is a point",
    );
    Ok(())
}

fn sum(ctx: &mut Context, report: &mut VerifyReport) -> Result<()> {
    let (atlas, scan) = ctx.atlas()?;
    report.push(
        Prop::Sum,
        "scan-equivalence",
        scan.disagreements.is_empty(),
        format!(
            "{} subsets, {} parallelotopes, {} unimodular and quadruple-free, {} disagreements",
            scan.subsets,
            scan.parallelotopes,
            scan.predicted,
            scan.disagreements.len()
        ),
    );
    report.push(
        Prop::Sum,
        "scan-classes",
        scan.classes == 35 && scan.mixed_signatures == 0,
        format!("{} certificate classes, {} with mixed signatures", scan.classes, scan.mixed_signatures),
    );
    let masks: Vec<u16> = atlas.records.iter().filter(|r| r.kind != Kind::Zonotopal).map(|r| r.mask()).collect::<Result<_>>()?;
    let results = exec::map_slice(&masks, |&m| -> Result<Vec<String>> {
        let p = sum_cell24(m)?;
        let mut bad = Vec::new();
        for r in d4_roots() {
            let z = r.vector();
            let belt_test = can_add_segment(&p, &z)?;
            let venkov = venkov_parallelotope(&add_segment(&p, &z, &crate::exact_linalg::Rational::new(1, 2))?).is_parallelotope();
            if belt_test != venkov {
                bad.push(format!("{}+{r}", group_roots(&roots_of_mask(m))));
            }
        }
        Ok(bad)
    });
    let bad: Vec<String> = results.into_iter().collect::<Result<Vec<_>>>()?.concat();
    report.push(
        Prop::Sum,
        "belt-test-matches-venkov",
        bad.is_empty(),
        if bad.is_empty() { format!("{} sums x 12 roots agree", masks.len()) } else { bad.join("; ") },
    );
    Ok(())
}

fn sdn(report: &mut VerifyReport) -> Result<()> {
    for n in [4, 3] {
        let r = sdn_validate(n)?;
        let expected = (1 << (n - 1)) + n;
        report.push(
            Prop::Sdn,
            &format!("d{n}-directions"),
            r.accepted == r.predicted && r.accepted.len() == expected,
            format!("{} of {} directions accepted, {expected} predicted", r.accepted.len(), r.directions_tested),
        );
        if n == 4 {
            report.push(
                Prop::Sdn,
                "d4-belt-patterns",
                r.other_belts == 0 && r.three_belts == 16,
                format!(
                    "{} 3-belts: {} of type e_i-e_j, {} with two e_i+e_j, {} other",
                    r.three_belts, r.all_minus_belts, r.two_plus_belts, r.other_belts
                ),
            );
        } else {
            report.push(
                Prop::Sdn,
                "d3-edge-directions",
                true,
                format!("the D3 cell has {} edge directions; the other accepted directions are not edges", r.edge_directions),
            );
        }
    }
    Ok(())
}

fn unext(report: &mut VerifyReport) {
    let r = unextendible_unimodular_subsystems();
    let quad = r.classes.iter().find(|c| c.label == "quadruple").map_or(0, |c| c.instances);
    let labels: Vec<String> = r.classes.iter().map(|c| format!("{} x{} ({} roots)", c.label, c.instances, c.size)).collect();
    report.push(
        Prop::Unext,
        "three-classes",
        r.classes.len() == 3 && quad == 3 && r.classes.iter().all(|c| c.label != "unnamed"),
        format!("{} unextendible subsets in classes {}", r.unextendible, labels.join(", ")),
    );
    report.push(
        Prop::Unext,
        "three-triple-sets",
        r.three_triple_sets == 64 && r.even_triads == 32 && r.odd_triads == 32,
        format!("{} sets, triad parity {} even / {} odd", r.three_triple_sets, r.even_triads, r.odd_triads),
    );
    report.push(
        Prop::Unext,
        "parity-determines-class",
        r.parity_mismatches == 0,
        format!(
            "{} A4-e sets and {} K33* sets; {} sets in the class opposite to their parity ({} with star triads)",
            r.a4_minus_e_sets, r.k33_dual_sets, r.parity_mismatches, r.star_shaped_mismatches
        ),
    );
}

fn pvz(report: &mut VerifyReport) -> Result<()> {
    let masks: Vec<(&str, u16)> = TABLE2.iter().map(|t| Ok((t.nd, table_mask(t.roots)?))).collect::<Result<_>>()?;
    let results = exec::map_slice(&masks, |&(nd, m)| pvz_validate(m).map(|r| (nd, r)));
    let mut bad = Vec::new();
    for res in results {
        let (nd, r) = res?;
        if !r.ok() {
            bad.push(format!("{nd}: {}", r.mismatches.join(", ")));
        }
    }
    report.push(
        Prop::Pvz,
        "facet-and-belt-formulas",
        bad.is_empty(),
        if bad.is_empty() { format!("{} rows, no mismatches", masks.len()) } else { bad.join("; ") },
    );
    Ok(())
}

/// Rank-4 root subsets that do not form a unimodular system in any basis of
/// their span, the first ten by mask.
pub fn non_unimodular_samples() -> Vec<u16> {
    (0..4096u16)
        .filter(|&m| {
            let v: Vec<RationalVector> = roots_of_mask(m).iter().map(|r| r.vector()).collect();
            rank_of(&v) == 4 && !spans_unimodular_vectors(&v)
        })
        .take(10)
        .collect()
}

fn mcmullen(report: &mut VerifyReport) -> Result<()> {
    let zonotopal = super::records::enumerate_zonotopal()?;
    let mut bad = Vec::new();
    for r in &zonotopal {
        let v = r.generator_vectors()?;
        let tiles = venkov_parallelotope(&zonotope(&v, None)?).is_parallelotope();
        if tiles != is_unimodular_vectors(&v) {
            bad.push(r.id.clone());
        }
    }
    report.push(
        Prop::Mcmullen,
        "unimodular-systems-tile",
        bad.is_empty(),
        if bad.is_empty() { format!("all {} zonotopes pass", TABLE1.len()) } else { format!("failed: {bad:?}") },
    );
    let samples = non_unimodular_samples();
    let results = exec::map_slice(&samples, |&m| -> Result<bool> {
        let v: Vec<RationalVector> = roots_of_mask(m).iter().map(|r| r.vector()).collect();
        let tiles = venkov_parallelotope(&zonotope(&v, None)?).is_parallelotope();
        Ok(tiles == is_unimodular_vectors(&v))
    });
    let mut bad = Vec::new();
    for (m, ok) in samples.iter().zip(results) {
        if !ok? {
            bad.push(group_roots(&roots_of_mask(*m)));
        }
    }
    report.push(
        Prop::Mcmullen,
        "non-unimodular-systems-fail",
        bad.is_empty() && samples.len() >= 10,
        if bad.is_empty() {
            format!("{} non-unimodular rank-4 root systems, none tiles", samples.len())
        } else {
            format!("tiling anyway: {}", bad.join("; "))
        },
    );
    Ok(())
}
