//! Reference rows of the two classification tables.

use crate::graphs_matroids::ConwayLabel::{self, *};

/// A zonotopal type: Delaunay number, number of generators, graph.
pub struct Table1Row {
    pub nd: &'static str,
    pub m: usize,
    pub graph: ConwayLabel,
}

/// A sum of the 24-cell with a root zonotope. `roots` uses parentheses for
/// maximal orthogonal pairs and triples.
pub struct Table2Row {
    pub nd: &'static str,
    pub m: usize,
    pub roots: &'static str,
    pub graph: ConwayLabel,
    pub dim: usize,
    pub nd0: &'static str,
}

pub const TABLE1: [Table1Row; 17] = [
    Table1Row { nd: "1", m: 10, graph: K5 },
    Table1Row { nd: "4", m: 9, graph: K5Minus1 },
    Table1Row { nd: "19", m: 9, graph: K33Dual },
    Table1Row { nd: "5", m: 8, graph: K5Minus2x1 },
    Table1Row { nd: "6", m: 8, graph: K5Minus2 },
    Table1Row { nd: "7", m: 7, graph: K5Minus1Minus2 },
    Table1Row { nd: "8", m: 7, graph: K4Plus1 },
    Table1Row { nd: "9", m: 7, graph: C2221 },
    Table1Row { nd: "10", m: 7, graph: K5Minus3 },
    Table1Row { nd: "11", m: 6, graph: C222 },
    Table1Row { nd: "12", m: 6, graph: C321 },
    Table1Row { nd: "13", m: 6, graph: C221Plus1 },
    Table1Row { nd: "16", m: 6, graph: C3PlusC3 },
    Table1Row { nd: "14", m: 5, graph: C4Plus1 },
    Table1Row { nd: "15", m: 5, graph: C5 },
    Table1Row { nd: "17", m: 5, graph: C3Plus2x1 },
    Table1Row { nd: "18", m: 4, graph: Forest4 },
];

/// The row for A4 itself, which is not a set of D4 roots.
pub const TABLE2_A4: Table2Row = Table2Row { nd: "-", m: 10, roots: "A4", graph: K5, dim: 4, nd0: "1" };

pub const TABLE2: [Table2Row; 35] = [
    Table2Row { nd: "2", m: 9, roots: "(12-,12+,34-),(13-,13+,24-),(14-,14+,23-)", graph: K5Minus1, dim: 4, nd0: "4" },
    Table2Row { nd: "3", m: 9, roots: "(12-,12+,34-),(13-,13+,24+),(14-,14+,23-)", graph: K33Dual, dim: 4, nd0: "19" },
    Table2Row { nd: "20", m: 8, roots: "(12-,12+,34-),(13-,13+,24-),(14+,23-)", graph: K5Minus2, dim: 4, nd0: "6" },
    Table2Row { nd: "21", m: 8, roots: "(12-,12+,34-),(13-,13+,24-),(14-,14+)", graph: K5Minus2x1, dim: 4, nd0: "5" },
    Table2Row { nd: "22", m: 7, roots: "(12+,34-),(13-,13+,24-),(14-,14+)", graph: K5Minus3, dim: 4, nd0: "10" },
    Table2Row { nd: "23", m: 7, roots: "34-,(13-,13+,24-),(14-,14+,23-)", graph: C2221, dim: 4, nd0: "9" },
    Table2Row { nd: "24", m: 7, roots: "(12-,12+,34-),(13-,13+,24-),14+", graph: K5Minus1Minus2, dim: 4, nd0: "7" },
    Table2Row { nd: "25", m: 7, roots: "(12+,34-),(13-,13+,24-),(14+,23-)", graph: K4Plus1, dim: 4, nd0: "8" },
    Table2Row { nd: "26", m: 7, roots: "(12-,12+,34-),(13-,13+),(14-,14+)", graph: K5Minus1Minus2, dim: 4, nd0: "7" },
    Table2Row { nd: "27", m: 6, roots: "(12-,12+,34-),(13-,13+),14+", graph: C321, dim: 4, nd0: "12" },
    Table2Row { nd: "28", m: 6, roots: "(12+,34-),(13-,13+,24-),14+", graph: C221Plus1, dim: 4, nd0: "13" },
    Table2Row { nd: "29", m: 6, roots: "(13-,13+,24-),(14-,14+,23-)", graph: C222, dim: 4, nd0: "11" },
    Table2Row { nd: "30", m: 6, roots: "(12+,34-),(13+,24-),(14-,14+)", graph: C221Plus1, dim: 4, nd0: "13" },
    Table2Row { nd: "31", m: 6, roots: "(12-,12+),(13-,13+),(14-,14+)", graph: C222, dim: 4, nd0: "11" },
    Table2Row { nd: "32", m: 6, roots: "(12+,34-),(13-,24-),(14-,14+)", graph: C3PlusC3, dim: 4, nd0: "16" },
    Table2Row { nd: "33", m: 6, roots: "(12+,34-),(13+,24-),(14+,23-)", graph: K4, dim: 3, nd0: "a1" },
    Table2Row { nd: "34", m: 5, roots: "12+,(13-,13+,24-),14+", graph: C3Plus2x1, dim: 4, nd0: "17" },
    Table2Row { nd: "35", m: 5, roots: "(12-,12+,34-),13-,14+", graph: C5, dim: 4, nd0: "15" },
    Table2Row { nd: "36", m: 5, roots: "(13-,13+,24-),(14-,14+)", graph: C4Plus1, dim: 4, nd0: "14" },
    Table2Row { nd: "37", m: 5, roots: "(12-,12+),(13-,13+),14+", graph: C4Plus1, dim: 4, nd0: "14" },
    Table2Row { nd: "38", m: 5, roots: "(12+,34-),(13-,13+),14+", graph: C3Plus2x1, dim: 4, nd0: "17" },
    Table2Row { nd: "39", m: 5, roots: "(12+,34-),(13+,24-),14+", graph: C221, dim: 3, nd0: "a2" },
    Table2Row { nd: "40", m: 4, roots: "(13-,13+,24-),14+", graph: Forest4, dim: 4, nd0: "18" },
    Table2Row { nd: "41", m: 4, roots: "12+,(13-,13+),14+", graph: Forest4, dim: 4, nd0: "18" },
    Table2Row { nd: "42", m: 4, roots: "(12+,34-),13+,14+", graph: C3Plus1, dim: 3, nd0: "a3" },
    Table2Row { nd: "43", m: 4, roots: "(13+,24-),(14-,14+)", graph: Forest4, dim: 4, nd0: "18" },
    Table2Row { nd: "44", m: 4, roots: "(13-,13+),(14-,14+)", graph: C4, dim: 3, nd0: "a4" },
    Table2Row { nd: "45", m: 3, roots: "(14-,14+,23-)", graph: Forest3, dim: 3, nd0: "a5" },
    Table2Row { nd: "46", m: 3, roots: "(13-,13+),14-", graph: Forest3, dim: 3, nd0: "a5'" },
    Table2Row { nd: "47", m: 3, roots: "12+,13+,14+", graph: Forest3, dim: 3, nd0: "a5''" },
    Table2Row { nd: "St", m: 3, roots: "34-,13+,14+", graph: C3, dim: 2, nd0: "alpha" },
    Table2Row { nd: "48", m: 2, roots: "(14-,14+)", graph: Forest2, dim: 2, nd0: "beta1" },
    Table2Row { nd: "49", m: 2, roots: "13+,14+", graph: Forest2, dim: 2, nd0: "beta2" },
    Table2Row { nd: "50", m: 1, roots: "14+", graph: Forest1, dim: 1, nd0: "" },
    Table2Row { nd: "51", m: 0, roots: "", graph: Cell24, dim: 0, nd0: "" },
];

/// Root names in a table entry, with the grouping parentheses dropped.
pub fn root_names(roots: &str) -> Vec<&str> {
    roots.split(|c| c == ',' || c == '(' || c == ')').filter(|s| !s.is_empty()).collect()
}
