//! Enumeration of the zonotopal types and the 24-cell sums.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::data::{root_names, TABLE1, TABLE2};
use crate::canon::Certificate;
use crate::constructions::{sum_cell24, zonotope};
use crate::error::{Error, Result};
use crate::exact_linalg::{rank_of, RationalVector};
use crate::exec;
use crate::graphs_matroids::{
    cographic_k33_vectors, enumerate_rank4_subgraphs_k5, graphic_vectors, label_of_vectors, ConwayLabel,
};
use crate::polytope_core::{venkov_parallelotope, BeltCounts, Polytope};
use crate::root_d4::{contains_quadruple, format_roots, mask_of_roots, pi_mask, roots_of_mask, tau_mask, unimodular_table, Root};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Zonotopal,
    Cell24Sum,
    Cell24,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Zonotopal => "zonotopal",
            Kind::Cell24Sum => "cell24-sum",
            Kind::Cell24 => "cell24",
        }
    }
}

/// One combinatorial type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub id: String,
    pub kind: Kind,
    pub nd: Option<String>,
    pub nd0: Option<String>,
    pub graph_label: ConwayLabel,
    pub m: usize,
    pub dim_u: usize,
    pub tau_count: Option<usize>,
    pub pi_count: Option<usize>,
    pub f_vector: Vec<usize>,
    pub belt_profile: BeltCounts,
    pub certificate: Certificate,
    /// Root names for sums, integer vectors for zonotopes.
    pub generators: Vec<String>,
}

impl CatalogRecord {
    /// The generating vectors.
    pub fn generator_vectors(&self) -> Result<Vec<RationalVector>> {
        self.generators
            .iter()
            .map(|g| match self.kind {
                Kind::Zonotopal => {
                    let ints: Vec<i64> = serde_json::from_str(g).map_err(|e| Error::Parse(e.to_string()))?;
                    Ok(RationalVector::from_ints(&ints))
                }
                _ => Ok(g.parse::<Root>()?.vector()),
            })
            .collect()
    }

    /// Root mask of a sum record.
    pub fn mask(&self) -> Result<u16> {
        let roots: Vec<Root> = self.generators.iter().map(|g| g.parse()).collect::<Result<_>>()?;
        Ok(mask_of_roots(&roots))
    }

    /// Rebuilds the polytope.
    pub fn polytope(&self) -> Result<Polytope> {
        match self.kind {
            Kind::Zonotopal => zonotope(&self.generator_vectors()?, None),
            _ => sum_cell24(self.mask()?),
        }
    }

    fn nd_key(&self) -> (u32, String) {
        match &self.nd {
            Some(n) => (n.parse().unwrap_or(u32::MAX), n.clone()),
            None => (u32::MAX, self.id.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub tool: String,
    pub subsets_scanned: usize,
    pub segment_length: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Atlas {
    pub version: String,
    pub provenance: Provenance,
    pub records: Vec<CatalogRecord>,
}

impl Atlas {
    pub fn new(mut records: Vec<CatalogRecord>) -> Self {
        records.sort_by(|a, b| (a.kind, a.nd_key()).cmp(&(b.kind, b.nd_key())));
        Self {
            version: env!("CARGO_PKG_VERSION").to_string(),
            provenance: Provenance {
                tool: format!("parallelotope {}", env!("CARGO_PKG_VERSION")),
                subsets_scanned: 1 << 12,
                segment_length: "1/2".into(),
            },
            records,
        }
    }

    pub fn get(&self, id: &str) -> Option<&CatalogRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("atlas serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn vector_string(v: &RationalVector) -> String {
    serde_json::to_string(&v.to_i64().expect("integral generator")).expect("serializes")
}

fn record_from(p: &Polytope) -> (Vec<usize>, BeltCounts, Certificate, bool) {
    let v = venkov_parallelotope(p);
    (p.f_vector(), BeltCounts { b2: v.b2(), b3: v.b3() }, p.certificate(), v.is_parallelotope())
}

/// The 16 graphic types of rank-4 subgraphs of K5 and the cographic K33 type,
/// in the column order of the zonotope table.
pub fn enumerate_zonotopal() -> Result<Vec<CatalogRecord>> {
    let mut systems: Vec<(ConwayLabel, Vec<RationalVector>)> = enumerate_rank4_subgraphs_k5()
        .into_iter()
        .map(|(g, l)| Ok((l, graphic_vectors(&g)?.vectors().to_vec())))
        .collect::<Result<_>>()?;
    systems.push((ConwayLabel::K33Dual, cographic_k33_vectors().vectors().to_vec()));
    let built: Vec<Result<CatalogRecord>> = exec::map_slice(&systems, |(label, vectors)| {
        let p = zonotope(vectors, None)?;
        let (f_vector, belt_profile, certificate, ok) = record_from(&p);
        if !ok {
            return Err(Error::Enumeration(format!("zonotope of {label} fails the Venkov test")));
        }
        let row = TABLE1
            .iter()
            .find(|r| r.graph == *label && r.m == vectors.len())
            .ok_or_else(|| Error::Enumeration(format!("no zonotope table row for {label}, m = {}", vectors.len())))?;
        Ok(CatalogRecord {
            id: row.nd.to_string(),
            kind: Kind::Zonotopal,
            nd: Some(row.nd.to_string()),
            nd0: None,
            graph_label: *label,
            m: vectors.len(),
            dim_u: rank_of(vectors),
            tau_count: None,
            pi_count: None,
            f_vector,
            belt_profile,
            certificate,
            generators: vectors.iter().map(vector_string).collect(),
        })
    });
    let records: Vec<CatalogRecord> = built.into_iter().collect::<Result<_>>()?;
    if records.len() != 17 {
        return Err(Error::Enumeration(format!("{} zonotopal types, expected 17", records.len())));
    }
    let ids: BTreeSet<&str> = records.iter().map(|r| r.id.as_str()).collect();
    if ids.len() != 17 {
        return Err(Error::Enumeration("two zonotopes matched the same table row".into()));
    }
    Ok(records)
}

/// Outcome for one root subset of the exhaustive scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanEntry {
    pub mask: u16,
    pub is_parallelotope: bool,
    /// Present for parallelotopes.
    pub certificate: Option<Certificate>,
    pub f_vector: Vec<usize>,
    pub belts: BeltCounts,
}

/// Sum of the 24-cell with every subset of the positive roots.
pub fn scan_sums() -> Result<Vec<ScanEntry>> {
    exec::map_range(0..1 << 12, |m| {
        let mask = m as u16;
        let p = sum_cell24(mask)?;
        let v = venkov_parallelotope(&p);
        let ok = v.is_parallelotope();
        Ok(ScanEntry {
            mask,
            is_parallelotope: ok,
            certificate: ok.then(|| p.certificate()),
            f_vector: p.f_vector(),
            belts: BeltCounts { b2: v.b2(), b3: v.b3() },
        })
    })
    .into_iter()
    .collect()
}

/// Structural key used to find the table row of a sum.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Signature {
    pub label: ConwayLabel,
    pub m: usize,
    pub dim: usize,
    pub tau: usize,
    pub pi: usize,
}

pub fn signature(mask: u16) -> Result<Signature> {
    let vectors: Vec<RationalVector> = roots_of_mask(mask).iter().map(|r| r.vector()).collect();
    let label = if vectors.is_empty() { ConwayLabel::Cell24 } else { label_of_vectors(&vectors)? };
    Ok(Signature {
        label,
        m: vectors.len(),
        dim: rank_of(&vectors),
        tau: tau_mask(mask).len(),
        pi: pi_mask(mask).len(),
    })
}

/// Mask of a table entry such as `(12-,12+),14+`.
pub fn table_mask(roots: &str) -> Result<u16> {
    let r: Vec<Root> = root_names(roots).into_iter().map(str::parse).collect::<Result<_>>()?;
    Ok(mask_of_roots(&r))
}

/// Summary of the exhaustive scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub subsets: usize,
    pub parallelotopes: usize,
    pub predicted: usize,
    /// Masks where the Venkov verdict differs from "unimodular and quadruple-free".
    pub disagreements: Vec<u16>,
    pub classes: usize,
    /// Classes whose members do not share one signature.
    pub mixed_signatures: usize,
}

/// The sum types, one record per certificate class, each matched to a table
/// row by signature and confirmed by the row's own root set.
pub fn enumerate_sums() -> Result<(Vec<CatalogRecord>, ScanSummary)> {
    let scan = scan_sums()?;
    let uni = unimodular_table();
    let predicted = |m: u16| uni[m as usize] && !contains_quadruple(m);
    let disagreements: Vec<u16> =
        scan.iter().filter(|e| e.is_parallelotope != predicted(e.mask)).map(|e| e.mask).collect();
    let mut classes: BTreeMap<&Certificate, Vec<&ScanEntry>> = BTreeMap::new();
    for e in &scan {
        if let Some(c) = &e.certificate {
            classes.entry(c).or_default().push(e);
        }
    }
    let mut mixed = 0;
    let mut by_row: BTreeMap<&str, CatalogRecord> = BTreeMap::new();
    for (cert, members) in &classes {
        let sigs: BTreeSet<Signature> = members.iter().map(|e| signature(e.mask)).collect::<Result<_>>()?;
        if sigs.len() > 1 {
            mixed += 1;
        }
        let sig = signature(members[0].mask)?;
        let rows: Vec<_> = TABLE2
            .iter()
            .filter(|r| r.graph == sig.label && r.m == sig.m && r.dim == sig.dim)
            .filter(|r| {
                table_mask(r.roots).map(|m| tau_mask(m).len() == sig.tau && pi_mask(m).len() == sig.pi).unwrap_or(false)
            })
            .collect();
        let [row] = rows.as_slice() else {
            return Err(Error::Enumeration(format!("signature {sig:?} matches {} table rows", rows.len())));
        };
        let mask = table_mask(row.roots)?;
        let entry = &scan[mask as usize];
        if entry.certificate.as_ref() != Some(*cert) {
            return Err(Error::Enumeration(format!("roots of row {} do not give the matched type", row.nd)));
        }
        let kind = if mask == 0 { Kind::Cell24 } else { Kind::Cell24Sum };
        let record = CatalogRecord {
            id: row.nd.to_string(),
            kind,
            nd: Some(row.nd.to_string()),
            nd0: None,
            graph_label: sig.label,
            m: sig.m,
            dim_u: sig.dim,
            tau_count: Some(sig.tau),
            pi_count: Some(sig.pi),
            f_vector: entry.f_vector.clone(),
            belt_profile: entry.belts,
            certificate: (*cert).clone(),
            generators: format_roots(&roots_of_mask(mask)).split(',').filter(|s| !s.is_empty()).map(String::from).collect(),
        };
        if by_row.insert(row.nd, record).is_some() {
            return Err(Error::Enumeration(format!("two types matched row {}", row.nd)));
        }
    }
    let summary = ScanSummary {
        subsets: scan.len(),
        parallelotopes: scan.iter().filter(|e| e.is_parallelotope).count(),
        predicted: scan.iter().filter(|e| predicted(e.mask)).count(),
        disagreements,
        classes: classes.len(),
        mixed_signatures: mixed,
    };
    if summary.classes != 35 {
        return Err(Error::Enumeration(format!("{} sum types, expected 35", summary.classes)));
    }
    Ok((by_row.into_values().collect(), summary))
}
