//! The catalogue of combinatorial types: enumeration, tables and verification.

mod classify;
mod data;
mod records;
mod tables;
mod verify;

pub use classify::{atlas_of, build_atlas, Selection, classify_all, derive_nd0, direction_checks, ClassifySummary, DirectionCheck, RecordCheck};
pub use data::{root_names, Table1Row, Table2Row, TABLE1, TABLE2, TABLE2_A4};
pub use records::{
    enumerate_sums, enumerate_zonotopal, scan_sums, signature, table_mask, Atlas, CatalogRecord, Kind, Provenance,
    ScanEntry, ScanSummary, Signature,
};
pub use tables::{emit_table, group_roots, TableFormat};
pub use verify::{non_unimodular_samples, verify, verify_with, Check, Context, Prop, VerifyReport};

#[cfg(test)]
mod tests {
    use std::sync::OnceLock;

    use super::*;
    use crate::constructions::cell24;
    use crate::graphs_matroids::ConwayLabel;

    fn atlas() -> &'static Atlas {
        static ATLAS: OnceLock<Atlas> = OnceLock::new();
        ATLAS.get_or_init(|| build_atlas().unwrap().0)
    }

    #[test]
    fn zonotope_numbers() {
        let a = atlas();
        for (id, label, m) in [("1", ConwayLabel::K5, 10), ("19", ConwayLabel::K33Dual, 9), ("18", ConwayLabel::Forest4, 4)] {
            let r = a.get(id).unwrap();
            assert_eq!((r.kind, r.graph_label, r.m), (Kind::Zonotopal, label, m));
        }
        assert_eq!(a.records.iter().filter(|r| r.kind == Kind::Zonotopal).count(), 17);
    }

    #[test]
    fn sum_records() {
        let a = atlas();
        let st = a.get("St").unwrap();
        assert_eq!(st.generators, ["13+", "14+", "34-"]);
        assert_eq!((st.graph_label, st.dim_u, st.nd0.as_deref()), (ConwayLabel::C3, 2, Some("alpha")));
        let r33 = a.get("33").unwrap();
        assert_eq!((r33.graph_label, r33.dim_u, r33.nd0.as_deref()), (ConwayLabel::K4, 3, Some("a1")));
        let forests: Vec<_> = ["40", "41", "43"].iter().map(|id| &a.get(id).unwrap().certificate).collect();
        assert!(forests[0] != forests[1] && forests[1] != forests[2] && forests[0] != forests[2]);
        for id in ["40", "41", "43"] {
            assert_eq!(a.get(id).unwrap().graph_label, ConwayLabel::Forest4);
        }
        let cell = a.get("51").unwrap();
        assert_eq!((cell.kind, &cell.certificate), (Kind::Cell24, &cell24().certificate()));
        assert_eq!(cell.f_vector, [24, 96, 96, 24]);
    }

    #[test]
    fn order_and_json() {
        let a = atlas();
        assert_eq!(a.records.len(), 52);
        assert_eq!(a.records[0].id, "1");
        assert_eq!(a.records[17].id, "2");
        assert_eq!(a.records[50].id, "St");
        assert_eq!(a.records[51].id, "51");
        let text = a.to_json();
        let back = Atlas::from_json(&text).unwrap();
        assert_eq!(&back, a);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn table_rows() {
        let a = atlas();
        let t1 = emit_table(a, 1, TableFormat::Tsv).unwrap();
        assert!(t1.starts_with("N_D\tm\tG\n1\t10\tK5\n"));
        assert!(t1.contains("\n16\t6\tC3+C3\n"));
        assert_eq!(t1.lines().count(), 18);
        let t2 = emit_table(a, 2, TableFormat::Tsv).unwrap();
        assert!(t2.contains("\n44\t4\t(13-,13+),(14-,14+)\tC4\t3\ta4\n"));
        assert!(t2.contains("\n47\t3\t12+,13+,14+\t3x1=H3\t3\ta5''\n"));
        assert_eq!(t2.lines().count(), 36);
        let json: serde_json::Value = serde_json::from_str(&emit_table(a, 2, TableFormat::Json).unwrap()).unwrap();
        assert_eq!(json.as_array().unwrap().len(), 35);
        assert!(emit_table(a, 3, TableFormat::Tsv).is_err());
    }

    #[test]
    fn cell24_has_no_closed_zone() {
        let checks = direction_checks(cell24()).unwrap();
        assert_eq!(checks.len(), 12);
        assert!(checks.iter().all(|c| c.consistent() && !c.closed_zone));
    }

    #[test]
    fn selections() {
        let z = atlas_of(Selection::Zonotopal).unwrap();
        assert_eq!(z.records.len(), 17);
        assert!("sums".parse::<Selection>().is_ok() && "x".parse::<Selection>().is_err());
        assert_eq!("mcmullen".parse::<Prop>().unwrap(), Prop::Mcmullen);
    }
}
