//! Automorphisms of small graphs and the equivalence classes of 1-orderings
//! under (automorphism) x (label reversal).

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::Serialize;

use crate::catalog::CatalogEntry;
use crate::graph::{KOrdering, UnorderedGraph};

/// Every vertex permutation preserving the edge set, brute force.
///
/// `perm[i - 1]` is the image of vertex `i`. Meant for graphs with a handful
/// of vertices.
pub fn automorphisms(graph: &UnorderedGraph) -> Vec<Vec<usize>> {
    let n = graph.n();
    (1..=n)
        .permutations(n)
        .filter(|perm| {
            graph
                .edges()
                .all(|(i, j)| graph.has_edge(perm[i - 1], perm[j - 1]))
        })
        .collect()
}

/// True when some vertex bijection carries `a`'s edges onto `b`'s edges and
/// `a`'s labels onto `b`'s labels.
pub fn isomorphic(a: &KOrdering, b: &KOrdering) -> bool {
    let n = a.n();
    if n != b.n() || a.k() != b.k() || a.graph().edge_count() != b.graph().edge_count() {
        return false;
    }
    (1..=n).permutations(n).any(|perm| {
        a.graph()
            .edges()
            .all(|(i, j)| b.graph().has_edge(perm[i - 1], perm[j - 1]))
            && (1..=n).all(|v| a.label(v) == b.label(perm[v - 1]))
    })
}

/// One class of 1-orderings, identified by `(vertex, label)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OneOrderingClass {
    /// Lexicographically least `(vertex, label)` in the class.
    pub representative: (usize, usize),
    pub members: Vec<(usize, usize)>,
}

/// Partitions the `n * n` 1-orderings of `graph` into orbits.
pub fn one_ordering_classes_of(graph: &UnorderedGraph) -> Vec<OneOrderingClass> {
    let n = graph.n();
    let autos = automorphisms(graph);
    let mut seen = BTreeSet::new();
    let mut classes = Vec::new();
    for v in 1..=n {
        for l in 1..=n {
            if seen.contains(&(v, l)) {
                continue;
            }
            let orbit: BTreeSet<(usize, usize)> = autos
                .iter()
                .flat_map(|perm| {
                    let w = perm[v - 1];
                    [(w, l), (w, n + 1 - l)]
                })
                .collect();
            seen.extend(orbit.iter().copied());
            let members: Vec<_> = orbit.into_iter().collect();
            classes.push(OneOrderingClass {
                representative: members[0],
                members,
            });
        }
    }
    classes.sort_by_key(|c| c.representative);
    classes
}

pub fn one_ordering_classes(entry: &CatalogEntry) -> Vec<OneOrderingClass> {
    one_ordering_classes_of(&entry.graph)
}
