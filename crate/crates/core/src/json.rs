//! JSON forms of k-orderings and ordered colorings.
//!
//! ```json
//! {"n": 4, "edges": [[1,2],[2,3]], "labels": {"3": 2}}
//! {"n": 3, "blue": [[1,2]], "red": [[1,3],[2,3]]}
//! ```
//!
//! A pair absent from both `blue` and `red` is uncolored.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Color, KOrdering, OrderedColoring, UnorderedGraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KOrderingJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default)]
    pub labels: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringJson {
    pub n: usize,
    #[serde(default)]
    pub blue: Vec<[usize; 2]>,
    #[serde(default)]
    pub red: Vec<[usize; 2]>,
}

impl From<&KOrdering> for KOrderingJson {
    fn from(h: &KOrdering) -> Self {
        Self {
            n: h.n(),
            edges: h.graph().edges().map(|(i, j)| [i, j]).collect(),
            labels: h
                .labels()
                .iter()
                .map(|(v, l)| (v.to_string(), *l))
                .collect(),
        }
    }
}

impl TryFrom<KOrderingJson> for KOrdering {
    type Error = Error;

    fn try_from(j: KOrderingJson) -> Result<Self> {
        let graph = UnorderedGraph::new(j.n, j.edges.iter().map(|e| (e[0], e[1])))?;
        let labels = j
            .labels
            .iter()
            .map(|(v, l)| {
                v.trim()
                    .parse::<usize>()
                    .map(|v| (v, *l))
                    .map_err(|_| Error::BadOrderingSpec(format!("label key `{v}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        KOrdering::new(graph, labels)
    }
}

impl From<&OrderedColoring> for ColoringJson {
    fn from(g: &OrderedColoring) -> Self {
        let list = |c| g.pairs_of(c).into_iter().map(|(i, j)| [i, j]).collect();
        Self {
            n: g.n(),
            blue: list(Color::Blue),
            red: list(Color::Red),
        }
    }
}

impl TryFrom<ColoringJson> for OrderedColoring {
    type Error = Error;

    fn try_from(j: ColoringJson) -> Result<Self> {
        if j.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut g = OrderedColoring::unknown(j.n);
        for (list, color) in [(&j.blue, Color::Blue), (&j.red, Color::Red)] {
            for &[a, b] in list {
                let (i, k) = (a.min(b), a.max(b));
                if a == b || i < 1 || k > j.n {
                    g.set(a, b, Some(color))?;
                }
                match g.get(i, k) {
                    Some(prev) if prev == color => return Err(Error::DuplicateEdge(i, k)),
                    Some(_) => return Err(Error::ConflictingColor(i, k)),
                    None => g.set(i, k, Some(color))?,
                }
            }
        }
        Ok(g)
    }
}

pub fn ordering_from_str(s: &str) -> Result<KOrdering> {
    serde_json::from_str::<KOrderingJson>(s)?.try_into()
}

pub fn ordering_to_string(h: &KOrdering) -> String {
    serde_json::to_string(&KOrderingJson::from(h)).expect("serialisable")
}

pub fn coloring_from_str(s: &str) -> Result<OrderedColoring> {
    serde_json::from_str::<ColoringJson>(s)?.try_into()
}

pub fn coloring_to_string(g: &OrderedColoring) -> String {
    serde_json::to_string(&ColoringJson::from(g)).expect("serialisable")
}

pub fn read_coloring(path: impl AsRef<Path>) -> Result<OrderedColoring> {
    coloring_from_str(&std::fs::read_to_string(path)?)
}

pub fn read_ordering(path: impl AsRef<Path>) -> Result<KOrdering> {
    ordering_from_str(&std::fs::read_to_string(path)?)
}
