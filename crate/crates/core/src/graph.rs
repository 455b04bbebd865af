//! Core graph types. Vertices are 1-indexed throughout; an edge `(i, j)` is
//! always stored with `i < j`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

/// A simple graph on vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnorderedGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl UnorderedGraph {
    /// Builds a graph, normalising each pair to `(min, max)`.
    ///
    /// Rejects self-loops, out-of-range endpoints and repeated pairs.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::SelfLoop(a, b));
            }
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            if i < 1 || j > n {
                return Err(Error::EdgeOutOfRange { i, j, n });
            }
            if !set.insert((i, j)) {
                return Err(Error::DuplicateEdge(i, j));
            }
        }
        Ok(Self { n, edges: set })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let edges = (1..=n).flat_map(|j| (1..j).map(move |i| (i, j)));
        Self::new(n, edges)
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.contains(&key)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(i, j)| i == v || j == v).count()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (1..=self.n).filter(|&u| u != v && self.has_edge(u, v)).collect()
    }
}

/// A graph with order-labels on some of its vertices.
///
/// `k = labels.len()`; `k == 0` is an unordered graph and `k == n` a fully
/// ordered one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KOrdering {
    graph: UnorderedGraph,
    labels: BTreeMap<usize, usize>,
}

impl KOrdering {
    pub fn new(
        graph: UnorderedGraph,
        labels: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let n = graph.n();
        let mut map = BTreeMap::new();
        let mut used = BTreeSet::new();
        for (vertex, label) in labels {
            if vertex < 1 || vertex > n {
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if label < 1 || label > n {
                return Err(Error::LabelOutOfRange { label, n });
            }
            if !used.insert(label) || map.insert(vertex, label).is_some() {
                return Err(Error::DuplicateLabel(label));
            }
        }
        Ok(Self { graph, labels: map })
    }

    pub fn unordered(graph: UnorderedGraph) -> Self {
        Self {
            graph,
            labels: BTreeMap::new(),
        }
    }

    /// Fully ordered graph where vertex `i` carries label `labels[i - 1]`.
    pub fn fully_ordered(graph: UnorderedGraph, labels: &[usize]) -> Result<Self> {
        if labels.len() != graph.n() {
            return Err(Error::OutOfDomain(format!(
                "full ordering needs {} labels, got {}",
                graph.n(),
                labels.len()
            )));
        }
        Self::new(graph, labels.iter().enumerate().map(|(i, &l)| (i + 1, l)))
    }

    pub fn graph(&self) -> &UnorderedGraph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn k(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, vertex: usize) -> Option<usize> {
        self.labels.get(&vertex).copied()
    }

    pub fn labels(&self) -> &BTreeMap<usize, usize> {
        &self.labels
    }

    /// Same graph with label `l` replaced by `n + 1 - l`.
    pub fn reverse(&self) -> KOrdering {
        let n = self.n();
        KOrdering {
            graph: self.graph.clone(),
            labels: self.labels.iter().map(|(&v, &l)| (v, n + 1 - l)).collect(),
        }
    }

    /// Adds a universal vertex `n + 1` carrying label 1 and shifts every
    /// existing label up by one.
    pub fn h_plus(&self) -> KOrdering {
        let n = self.n();
        let new = n + 1;
        let edges = self
            .graph
            .edges()
            .chain((1..=n).map(|u| (u, new)))
            .collect::<BTreeSet<_>>();
        let mut labels: BTreeMap<usize, usize> =
            self.labels.iter().map(|(&v, &l)| (v, l + 1)).collect();
        labels.insert(new, 1);
        KOrdering {
            graph: UnorderedGraph { n: new, edges },
            labels,
        }
    }

    /// Drops the label of `vertex`, if any.
    pub fn without_label(&self, vertex: usize) -> KOrdering {
        let mut labels = self.labels.clone();
        labels.remove(&vertex);
        KOrdering {
            graph: self.graph.clone(),
            labels,
        }
    }
}

/// Flat index of pair `(i, j)`, `i < j`, in the order
/// `(1,2), (1,3), (2,3), (1,4), (2,4), (3,4), ...`.
#[inline]
pub fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j);
    (j - 1) * (j - 2) / 2 + (i - 1)
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// All pairs of `1..=n` in flat-index order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (2..=n).flat_map(|j| (1..j).map(move |i| (i, j)))
}

/// Red/blue coloring of the pairs of `1..=n`. `None` marks an uncolored pair,
/// so the same type serves complete certificates and partial skeletons.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderedColoring {
    n: usize,
    colors: Vec<Option<Color>>,
}

impl OrderedColoring {
    pub fn unknown(n: usize) -> Self {
        Self {
            n,
            colors: vec![None; pair_count(n)],
        }
    }

    pub fn monochromatic(n: usize, color: Color) -> Self {
        Self {
            n,
            colors: vec![Some(color); pair_count(n)],
        }
    }

    /// Complete coloring with the given blue pairs and everything else red.
    pub fn from_blue(n: usize, blue: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::monochromatic(n, Color::Red);
        for (a, b) in blue {
            g.set(a, b, Some(Color::Blue))?;
        }
        Ok(g)
    }

    /// Builds a coloring from a per-pair closure, in flat-index order.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Option<Color>) -> Self {
        Self {
            n,
            colors: pairs(n).map(|(i, j)| f(i, j)).collect(),
        }
    }

    pub(crate) fn from_flat(n: usize, colors: Vec<Option<Color>>) -> Self {
        debug_assert_eq!(colors.len(), pair_count(n));
        Self { n, colors }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> Option<Color> {
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        self.colors[pair_index(i, j)]
    }

    pub fn set(&mut self, a: usize, b: usize, color: Option<Color>) -> Result<()> {
        if a == b {
            return Err(Error::SelfLoop(a, b));
        }
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        if i < 1 || j > self.n {
            return Err(Error::EdgeOutOfRange { i, j, n: self.n });
        }
        self.colors[pair_index(i, j)] = color;
        Ok(())
    }

    pub(crate) fn flat(&self) -> &[Option<Color>] {
        &self.colors
    }

    pub fn unknown_count(&self) -> usize {
        self.colors.iter().filter(|c| c.is_none()).count()
    }

    pub fn is_complete(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn require_complete(&self) -> Result<()> {
        match self.unknown_count() {
            0 => Ok(()),
            unknown => Err(Error::IncompleteColoring { unknown }),
        }
    }

    /// Pairs of the given color, in flat-index order.
    pub fn pairs_of(&self, color: Color) -> Vec<(usize, usize)> {
        pairs(self.n)
            .zip(&self.colors)
            .filter(|(_, c)| **c == Some(color))
            .map(|(p, _)| p)
            .collect()
    }

    /// Vertex `i` becomes `n + 1 - i`.
    pub fn reverse(&self) -> OrderedColoring {
        let n = self.n;
        Self::from_fn(n, |i, j| self.get(n + 1 - j, n + 1 - i))
    }

    /// Red and blue exchanged; uncolored pairs stay uncolored.
    pub fn swap_colors(&self) -> OrderedColoring {
        Self {
            n: self.n,
            colors: self.colors.iter().map(|c| c.map(Color::other)).collect(),
        }
    }

    /// Restriction to the vertices `1..=m`.
    pub fn prefix(&self, m: usize) -> OrderedColoring {
        assert!(m <= self.n);
        Self {
            n: m,
            colors: self.colors[..pair_count(m)].to_vec(),
        }
    }

    /// Adds vertex `n + 1`; `edge_to_new(i)` gives the color of `(i, n + 1)`.
    pub fn extend(&self, mut edge_to_new: impl FnMut(usize) -> Option<Color>) -> OrderedColoring {
        let mut colors = self.colors.clone();
        colors.extend((1..=self.n).map(&mut edge_to_new));
        Self {
            n: self.n + 1,
            colors,
        }
    }

    /// True when every colored pair of `self` has the same color in `other`.
    pub fn is_extended_by(&self, other: &OrderedColoring) -> bool {
        self.n == other.n
            && self
                .colors
                .iter()
                .zip(&other.colors)
                .all(|(a, b)| a.is_none() || a == b)
    }
}

/// Reverses the order-labels of a k-ordering.
pub fn reverse(h: &KOrdering) -> KOrdering {
    h.reverse()
}

pub fn reverse_coloring(g: &OrderedColoring) -> OrderedColoring {
    g.reverse()
}

pub fn swap_colors(g: &OrderedColoring) -> OrderedColoring {
    g.swap_colors()
}

pub fn h_plus(h: &KOrdering) -> KOrdering {
    h.h_plus()
}
