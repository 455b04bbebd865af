//! The six connected graphs on four vertices, with their canonical vertex
//! names (`d1..d4`, `p1..p4`, `e1..e4`, `s1..s4`, `c1..c4`, `k1..k4`).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{KOrdering, UnorderedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphName {
    Diamond,
    Path4,
    Pan3,
    Star4,
    Cycle4,
    Complete4,
}

impl GraphName {
    pub const ALL: [GraphName; 6] = [
        GraphName::Diamond,
        GraphName::Path4,
        GraphName::Pan3,
        GraphName::Star4,
        GraphName::Cycle4,
        GraphName::Complete4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            GraphName::Diamond => "diamond",
            GraphName::Path4 => "path4",
            GraphName::Pan3 => "pan3",
            GraphName::Star4 => "star4",
            GraphName::Cycle4 => "cycle4",
            GraphName::Complete4 => "complete4",
        }
    }

    /// Letter used in the canonical vertex names.
    pub fn vertex_prefix(self) -> char {
        match self {
            GraphName::Diamond => 'd',
            GraphName::Path4 => 'p',
            GraphName::Pan3 => 'e',
            GraphName::Star4 => 's',
            GraphName::Cycle4 => 'c',
            GraphName::Complete4 => 'k',
        }
    }

    fn edges(self) -> &'static [(usize, usize)] {
        match self {
            GraphName::Diamond => &[(1, 2), (2, 3), (2, 4), (1, 3), (3, 4)],
            GraphName::Path4 => &[(1, 2), (2, 3), (3, 4)],
            GraphName::Pan3 => &[(1, 2), (2, 3), (2, 4), (3, 4)],
            GraphName::Star4 => &[(1, 2), (2, 3), (2, 4)],
            GraphName::Cycle4 => &[(1, 2), (2, 3), (1, 4), (3, 4)],
            GraphName::Complete4 => &[(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)],
        }
    }
}

impl fmt::Display for GraphName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for GraphName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        GraphName::ALL
            .into_iter()
            .find(|g| g.as_str() == lower)
            .ok_or_else(|| Error::UnknownGraph(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: GraphName,
    pub graph: UnorderedGraph,
    /// `vertex_names[i - 1]` is the canonical name of vertex `i`.
    pub vertex_names: Vec<String>,
}

impl CatalogEntry {
    /// Index of a canonical vertex name such as `e3` (case-insensitive).
    pub fn vertex(&self, name: &str) -> Result<usize> {
        let lower = name.to_ascii_lowercase();
        self.vertex_names
            .iter()
            .position(|v| *v == lower)
            .map(|i| i + 1)
            .ok_or_else(|| Error::UnknownVertex {
                graph: self.name.to_string(),
                vertex: name.to_string(),
            })
    }

    pub fn vertex_name(&self, index: usize) -> &str {
        &self.vertex_names[index - 1]
    }

    pub fn unordered(&self) -> KOrdering {
        KOrdering::unordered(self.graph.clone())
    }

    /// The 1-ordering assigning label `label` to the named vertex.
    pub fn v_l_ordering(&self, vertex_name: &str, label: usize) -> Result<KOrdering> {
        let v = self.vertex(vertex_name)?;
        self.v_l_ordering_at(v, label)
    }

    pub fn v_l_ordering_at(&self, vertex: usize, label: usize) -> Result<KOrdering> {
        KOrdering::new(self.graph.clone(), [(vertex, label)])
    }

    /// Fully ordered copy with `labels[i - 1]` on vertex `i`.
    pub fn fully_ordered(&self, labels: &[usize]) -> Result<KOrdering> {
        KOrdering::fully_ordered(self.graph.clone(), labels)
    }
}

pub fn catalog_entry(name: GraphName) -> CatalogEntry {
    let graph = UnorderedGraph::new(4, name.edges().iter().copied())
        .expect("catalog edge lists are valid");
    let vertex_names = (1..=4)
        .map(|i| format!("{}{}", name.vertex_prefix(), i))
        .collect();
    CatalogEntry {
        name,
        graph,
        vertex_names,
    }
}

/// All six connected 4-vertex graphs.
pub fn catalog() -> Vec<CatalogEntry> {
    GraphName::ALL.into_iter().map(catalog_entry).collect()
}

/// `(v, l)`-ordering of a catalog graph.
pub fn make_v_l_ordering(entry: &CatalogEntry, vertex_name: &str, label: usize) -> Result<KOrdering> {
    entry.v_l_ordering(vertex_name, label)
}

/// The diamond with labels 1, 2, 3, 4 on `d1..d4`.
pub fn diamond_fully_ordered() -> KOrdering {
    catalog_entry(GraphName::Diamond)
        .fully_ordered(&[1, 2, 3, 4])
        .expect("identity labels are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn edge_names(entry: &CatalogEntry) -> BTreeSet<String> {
        entry
            .graph
            .edges()
            .map(|(i, j)| format!("{}{}", entry.vertex_name(i), entry.vertex_name(j)))
            .collect()
    }

    fn set(names: &[&str]) -> BTreeSet<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn drawings_match() {
        let expected: [(GraphName, &[&str]); 6] = [
            (GraphName::Diamond, &["d1d2", "d2d3", "d2d4", "d1d3", "d3d4"]),
            (GraphName::Path4, &["p1p2", "p2p3", "p3p4"]),
            (GraphName::Pan3, &["e1e2", "e2e3", "e2e4", "e3e4"]),
            (GraphName::Star4, &["s1s2", "s2s3", "s2s4"]),
            (GraphName::Cycle4, &["c1c2", "c2c3", "c1c4", "c3c4"]),
            (
                GraphName::Complete4,
                &["k1k2", "k1k3", "k2k3", "k1k4", "k2k4", "k3k4"],
            ),
        ];
        for (name, edges) in expected {
            assert_eq!(edge_names(&catalog_entry(name)), set(edges), "{name}");
        }
        assert_eq!(catalog().len(), 6);
    }

    #[test]
    fn names_are_case_insensitive() {
        assert_eq!("PAN3".parse::<GraphName>().unwrap(), GraphName::Pan3);
        assert!("nosuch".parse::<GraphName>().is_err());
        let pan = catalog_entry(GraphName::Pan3);
        assert_eq!(pan.vertex("E3").unwrap(), 3);
    }

    #[test]
    fn v_l_orderings() {
        let path = catalog_entry(GraphName::Path4);
        let h = make_v_l_ordering(&path, "p1", 1).unwrap();
        assert_eq!(h.k(), 1);
        assert_eq!(h.label(1), Some(1));

        let star = catalog_entry(GraphName::Star4);
        assert!(matches!(
            make_v_l_ordering(&star, "s2", 5),
            Err(Error::LabelOutOfRange { label: 5, .. })
        ));
        assert!(matches!(
            make_v_l_ordering(&star, "x9", 1),
            Err(Error::UnknownVertex { .. })
        ));
    }

    #[test]
    fn pan_e3_2_reverses_to_e3_3() {
        let pan = catalog_entry(GraphName::Pan3);
        let h = pan.v_l_ordering("e3", 2).unwrap();
        assert_eq!(h.reverse(), pan.v_l_ordering("e3", 3).unwrap());
        assert_eq!(h.reverse().reverse(), h);
    }
}
