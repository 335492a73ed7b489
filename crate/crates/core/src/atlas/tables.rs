//! The two classification tables as TSV or JSON.

use std::str::FromStr;

use serde::Serialize;

use super::data::TABLE1;
use super::records::{Atlas, CatalogRecord, Kind};
use crate::error::{Error, Result};
use crate::graphs_matroids::ConwayLabel;
use crate::root_d4::{quadruples, Root};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Tsv,
    Json,
}

impl FromStr for TableFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tsv" => Ok(Self::Tsv),
            "json" => Ok(Self::Json),
            _ => Err(Error::Parse(format!("unknown table format {s:?}"))),
        }
    }
}

/// Roots grouped by the quadruple of mutually orthogonal roots they lie in;
/// groups of two or more are parenthesised.
pub fn group_roots(roots: &[Root]) -> String {
    let mut parts = Vec::new();
    for q in quadruples() {
        let mut group: Vec<Root> = roots.iter().copied().filter(|r| q.mask() & r.bit() != 0).collect();
        group.sort_by_key(|r| r.index());
        let names: Vec<String> = group.iter().map(Root::to_string).collect();
        match names.len() {
            0 => {}
            1 => parts.push(names[0].clone()),
            _ => parts.push(format!("({})", names.join(","))),
        }
    }
    parts.join(",")
}

fn graph_cell(label: ConwayLabel) -> String {
    match label {
        ConwayLabel::Forest4 => "4x1=H4".into(),
        ConwayLabel::Forest3 => "3x1=H3".into(),
        ConwayLabel::Forest2 => "2x1=H2".into(),
        ConwayLabel::Forest1 => "1=H1".into(),
        l => l.to_string(),
    }
}

#[derive(Serialize)]
struct Row1<'a> {
    nd: &'a str,
    m: usize,
    graph: String,
}

#[derive(Serialize)]
struct Row2 {
    nd: String,
    m: usize,
    roots: String,
    graph: String,
    dim: usize,
    nd0: String,
}

fn row2(r: &CatalogRecord) -> Result<Row2> {
    let roots: Vec<Root> = r.generators.iter().map(|g| g.parse()).collect::<Result<_>>()?;
    Ok(Row2 {
        nd: r.id.clone(),
        m: r.m,
        roots: group_roots(&roots),
        graph: graph_cell(r.graph_label),
        dim: r.dim_u,
        nd0: r.nd0.clone().unwrap_or_default(),
    })
}

/// Table 1 in column order of the zonotope table, Table 2 by increasing
/// number of roots, as in the printed tables.
pub fn emit_table(atlas: &Atlas, which: u8, format: TableFormat) -> Result<String> {
    let text = match which {
        1 => {
            let rows: Vec<Row1> = TABLE1
                .iter()
                .map(|t| {
                    let r = atlas
                        .get(t.nd)
                        .filter(|r| r.kind == Kind::Zonotopal)
                        .ok_or_else(|| Error::Enumeration(format!("atlas has no zonotope {}", t.nd)))?;
                    Ok(Row1 { nd: t.nd, m: r.m, graph: r.graph_label.to_string() })
                })
                .collect::<Result<_>>()?;
            match format {
                TableFormat::Tsv => {
                    let mut s = String::from("N_D\tm\tG\n");
                    for r in &rows {
                        s.push_str(&format!("{}\t{}\t{}\n", r.nd, r.m, r.graph));
                    }
                    s
                }
                TableFormat::Json => serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n",
            }
        }
        2 => {
            let mut records: Vec<&CatalogRecord> = atlas.records.iter().filter(|r| r.kind != Kind::Zonotopal).collect();
            records.sort_by_key(|r| (std::cmp::Reverse(r.m), r.id == "St", r.id.parse::<u32>().unwrap_or(0)));
            // The Shtogrin type sits after the other three-root sums.
            let rows: Vec<Row2> = records.into_iter().map(row2).collect::<Result<_>>()?;
            match format {
                TableFormat::Tsv => {
                    let mut s = String::from("N_D\tm\troots\tgraph\tdimU\tN_D0\n");
                    for r in &rows {
                        s.push_str(&format!("{}\t{}\t{}\t{}\t{}\t{}\n", r.nd, r.m, r.roots, r.graph, r.dim, r.nd0));
                    }
                    s
                }
                TableFormat::Json => serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n",
            }
        }
        _ => return Err(Error::OutOfRange(format!("table {which}"))),
    };
    Ok(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::data::{root_names, TABLE2};

    #[test]
    fn grouping_reproduces_the_table_entries() {
        for row in TABLE2 {
            let roots: Vec<Root> = root_names(row.roots).into_iter().map(|s| s.parse().unwrap()).collect();
            assert_eq!(group_roots(&roots), row.roots, "row {}", row.nd);
        }
    }
}
