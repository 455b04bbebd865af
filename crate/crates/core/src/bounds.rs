//! Closed-form bounds on (ordered) Ramsey numbers and the table of best known
//! upper bounds for the 1-orderings of connected 4-vertex graphs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::catalog::GraphName;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Search,
    Certificate,
    Formula,
    Literature,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Search => "search",
            Provenance::Certificate => "certificate",
            Provenance::Formula => "formula",
            Provenance::Literature => "literature",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundValue {
    pub value: usize,
    pub provenance: Provenance,
}

impl BoundValue {
    pub fn new(value: usize, provenance: Provenance) -> Self {
        Self { value, provenance }
    }
}

/// A bounded ordered Ramsey quantity for one 1-ordering.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundRecord {
    pub graph: GraphName,
    /// Canonical vertex name carrying the label, e.g. `d1`.
    pub vertex: String,
    pub label: usize,
    pub lower: Option<BoundValue>,
    pub upper: Option<BoundValue>,
    pub citation: String,
}

impl BoundRecord {
    /// Human-readable subject, e.g. `(d1,1)-ordering of diamond`.
    pub fn subject(&self) -> String {
        format!("{}-ordering of {}", self.ordering(), self.graph)
    }

    pub fn ordering(&self) -> String {
        format!("({},{})", self.vertex, self.label)
    }

    /// The row in the `{"graph", "ordering", "upper", "source"}` shape.
    pub fn table_row(&self) -> TableRow {
        TableRow {
            graph: self.graph.to_string(),
            ordering: self.ordering(),
            upper: self.upper.map(|b| b.value).unwrap_or_default(),
            source: self.citation.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub graph: String,
    pub ordering: String,
    pub upper: usize,
    pub source: String,
}

const CHHA72: &str = "Page 391 of [ChHa72ii]";
const BCKK13: &str = "Theorem 12 of [BCKK13]";

/// Classical two-color Ramsey number of each catalog graph.
pub fn classical_ramsey(graph: GraphName) -> BoundValue {
    let value = match graph {
        GraphName::Path4 => 5,
        GraphName::Pan3 => 7,
        GraphName::Star4 => 6,
        GraphName::Cycle4 => 6,
        GraphName::Diamond => 10,
        GraphName::Complete4 => 18,
    };
    BoundValue::new(value, Provenance::Literature)
}

pub fn classical_ramsey_citation() -> &'static str {
    CHHA72
}

/// Upper bounds for every 1-ordering class of the six connected 4-vertex
/// graphs, 22 rows. Lower bounds are the classical Ramsey numbers, which
/// ordered Ramsey numbers can never undercut.
pub fn figure3_table() -> Vec<BoundRecord> {
    use GraphName::*;
    let rows: [(GraphName, &str, usize, usize, &str); 22] = [
        (Diamond, "d1", 1, 14, "Theorem 3.7"),
        (Diamond, "d1", 2, 16, "Theorem 3.8"),
        (Diamond, "d2", 1, 13, "Theorem 3.9"),
        (Diamond, "d2", 2, 17, "Theorem 3.10"),
        (Path4, "p1", 1, 5, "Theorem 3.1"),
        (Path4, "p1", 2, 5, "Theorem 3.1"),
        (Path4, "p2", 1, 5, "Theorem 3.1"),
        (Path4, "p2", 2, 5, "Theorem 3.1"),
        (Pan3, "e1", 1, 10, "Theorem 3.5"),
        (Pan3, "e1", 2, 10, "Theorem 3.11"),
        (Pan3, "e2", 1, 7, "Theorem 3.12"),
        (Pan3, "e2", 2, 10, "Theorem 3.13"),
        (Pan3, "e3", 1, 10, "Theorem 3.2"),
        (Pan3, "e3", 2, 9, "Theorem 3.6"),
        (Star4, "s1", 1, 6, "Theorem 3.4"),
        (Star4, "s1", 2, 6, "Theorem 3.3"),
        (Star4, "s2", 1, 6, BCKK13),
        (Star4, "s2", 2, 9, BCKK13),
        (Cycle4, "c1", 1, 6, CHHA72),
        (Cycle4, "c1", 2, 6, CHHA72),
        (Complete4, "k1", 1, 18, CHHA72),
        (Complete4, "k1", 2, 18, CHHA72),
    ];
    rows.into_iter()
        .map(|(graph, vertex, label, upper, citation)| BoundRecord {
            graph,
            vertex: vertex.to_string(),
            label,
            lower: Some(classical_ramsey(graph)),
            upper: Some(BoundValue::new(upper, Provenance::Literature)),
            citation: citation.to_string(),
        })
        .collect()
}

/// Table rows as pretty JSON, the format of `fixtures/figure3_table.json`.
pub fn figure3_table_json() -> String {
    let rows: Vec<TableRow> = figure3_table().iter().map(BoundRecord::table_row).collect();
    serde_json::to_string_pretty(&rows).expect("serialisable")
}

/// Aligned plain-text rendering of the table.
pub fn figure3_table_text() -> String {
    let rows: Vec<TableRow> = figure3_table().iter().map(BoundRecord::table_row).collect();
    let mut out = format!("{:<10} {:<9} {:>5}  {}\n", "graph", "ordering", "upper", "source");
    for r in rows {
        out.push_str(&format!(
            "{:<10} {:<9} {:>5}  {}\n",
            r.graph, r.ordering, r.upper, r.source
        ));
    }
    out
}

/// R(C_n): `2n - 1` for odd `n`, `3n/2 - 1` for even `n`; `n >= 5`.
pub fn cycle_ramsey(n: usize) -> Result<usize> {
    if n < 5 {
        return Err(Error::OutOfDomain(format!(
            "cycle Ramsey formula needs n >= 5, got {n}"
        )));
    }
    Ok(if n % 2 == 1 { 2 * n - 1 } else { 3 * n / 2 - 1 })
}

/// Upper bound for every 1-ordering of the path on `n` vertices.
pub fn path_one_ordering_bound(n: usize) -> Result<usize> {
    cycle_ramsey(n)
}

/// `sum(r_values) - n + 1` with `n = r_values.len()`, the published bound on
/// `R_<(K_n, H+)` from `r_values[i-1] >= R_<(K_i, H)`.
///
/// The anchoring induction behind it bounds the size of an *avoiding*
/// coloring by this quantity, so the bound it actually proves on `R_<` is one
/// larger. The gap is real: `R_<(K_3, P_3+) = 8` while this returns 7 (see
/// `examples/bounds_formulas.rs`).
pub fn h_plus_recursion_bound(r_values: &[usize]) -> Result<usize> {
    if r_values.is_empty() {
        return Err(Error::OutOfDomain("r_values must be nonempty".into()));
    }
    if r_values.iter().any(|&r| r < 1) {
        return Err(Error::OutOfDomain("r_values entries must be >= 1".into()));
    }
    if r_values.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::OutOfDomain("r_values must be nondecreasing".into()));
    }
    let n = r_values.len();
    Ok(r_values.iter().sum::<usize>() + 1 - n)
}

/// `(n - 1) m (m - 1) / 2 + 1`: [`h_plus_recursion_bound`] fed with the tree
/// Ramsey numbers `R(K_i, P_n)`; `m, n >= 2`. Inherits the off-by-one of that
/// bound.
pub fn complete_vs_path_plus_bound(m: usize, n: usize) -> Result<usize> {
    if m < 2 || n < 2 {
        return Err(Error::OutOfDomain(format!(
            "complete-vs-path-plus bound needs m, n >= 2, got m = {m}, n = {n}"
        )));
    }
    Ok((n - 1) * m * (m - 1) / 2 + 1)
}

/// R(K_m, T) for any tree `T` on `n` vertices.
pub fn chvatal_tree_ramsey(m: usize, n: usize) -> Result<usize> {
    if m < 1 || n < 1 {
        return Err(Error::OutOfDomain(format!(
            "tree Ramsey formula needs m, n >= 1, got m = {m}, n = {n}"
        )));
    }
    Ok((m - 1) * (n - 1) + 1)
}

/// Ordered Ramsey number of the monotone path on `n` vertices.
pub fn erdos_szekeres_path(n: usize) -> Result<usize> {
    if n < 1 {
        return Err(Error::OutOfDomain("path needs at least one vertex".into()));
    }
    Ok((n - 1) * (n - 1) + 1)
}
