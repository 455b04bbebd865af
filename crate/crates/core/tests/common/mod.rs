//! Brute-force oracles shared by the integration tests. Nothing here uses the
//! crate's containment or search code.
#![allow(dead_code)]

use itertools::Itertools;
use ordered_ramsey::graph::pairs;
use ordered_ramsey::symmetry::one_ordering_classes;
use ordered_ramsey::{catalog, Color, KOrdering, OrderedColoring};
use rand::Rng;

/// Every injective map from V(h) into 1..=n, checked edge by edge and label by
/// label.
pub fn oracle_has_copy(g: &OrderedColoring, h: &KOrdering, color: Color) -> bool {
    oracle_copies(g, h, color).next().is_some()
}

pub fn oracle_copies<'a>(
    g: &'a OrderedColoring,
    h: &'a KOrdering,
    color: Color,
) -> impl Iterator<Item = Vec<usize>> + 'a {
    let m = h.n();
    (1..=g.n()).permutations(m).filter(move |map| {
        let mut image = map.clone();
        image.sort_unstable();
        h.graph().edges().all(|(a, b)| g.get(map[a - 1], map[b - 1]) == Some(color))
            && h.labels().iter().all(|(&v, &l)| image[l - 1] == map[v - 1])
    })
}

pub fn oracle_contains(g: &OrderedColoring, h: &KOrdering) -> bool {
    oracle_has_copy(g, h, Color::Red) || oracle_has_copy(g, h, Color::Blue)
}

pub fn oracle_avoids(g: &OrderedColoring, h1: &KOrdering, h2: &KOrdering) -> bool {
    !oracle_has_copy(g, h1, Color::Red) && !oracle_has_copy(g, h2, Color::Blue)
}

/// Copies using vertex `last` as their greatest image vertex.
fn oracle_copy_ending_at(g: &OrderedColoring, h: &KOrdering, color: Color, last: usize) -> bool {
    let m = h.n();
    if m == 0 || last < m {
        return false;
    }
    (1..last).combinations(m - 1).any(|mut image| {
        image.push(last);
        image.iter().copied().permutations(m).any(|map| {
            h.graph().edges().all(|(a, b)| g.get(map[a - 1], map[b - 1]) == Some(color))
                && h.labels().iter().all(|(&v, &l)| image[l - 1] == map[v - 1])
        })
    })
}

/// Avoiding colorings on `n` vertices, by plain backtracking in pair order.
/// A prefix is cut once a vertex is complete and closes a forbidden copy.
/// Stops after `limit` hits.
pub fn oracle_avoiders(n: usize, h1: &KOrdering, h2: &KOrdering, limit: usize) -> Vec<OrderedColoring> {
    let order: Vec<(usize, usize)> = pairs(n).collect();
    let mut out = Vec::new();
    let mut g = OrderedColoring::unknown(n);
    fn rec(
        idx: usize,
        order: &[(usize, usize)],
        g: &mut OrderedColoring,
        h1: &KOrdering,
        h2: &KOrdering,
        out: &mut Vec<OrderedColoring>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if idx == order.len() {
            if oracle_avoids(g, h1, h2) {
                out.push(g.clone());
            }
            return;
        }
        let (i, j) = order[idx];
        for c in [Color::Red, Color::Blue] {
            g.set(i, j, Some(c)).unwrap();
            // pair (j-1, j) is the last pair touching vertex j in this order
            let vertex_done = i + 1 == j;
            let bad = vertex_done
                && (oracle_copy_ending_at(g, h1, Color::Red, j) || oracle_copy_ending_at(g, h2, Color::Blue, j));
            if !bad {
                rec(idx + 1, order, g, h1, h2, out, limit);
            }
            g.set(i, j, None).unwrap();
        }
    }
    // vertex 1 alone can already host a one-vertex target
    let single = |h: &KOrdering| h.n() == 1;
    if single(h1) || single(h2) {
        return out;
    }
    rec(0, &order, &mut g, h1, h2, &mut out, limit);
    out
}

pub fn oracle_exists_avoider(n: usize, h1: &KOrdering, h2: &KOrdering) -> bool {
    !oracle_avoiders(n, h1, h2, 1).is_empty()
}

pub fn random_coloring(n: usize, rng: &mut impl Rng) -> OrderedColoring {
    OrderedColoring::from_fn(n, |_, _| Some(if rng.gen::<bool>() { Color::Red } else { Color::Blue }))
}

/// One representative per 1-ordering class of every catalog graph, with a
/// display name such as `pan3 (e2,1)`.
pub fn class_representatives() -> Vec<(String, KOrdering)> {
    let mut out = Vec::new();
    for entry in catalog() {
        for class in one_ordering_classes(&entry) {
            let (v, l) = class.representative;
            let h = entry.v_l_ordering_at(v, l).unwrap();
            out.push((format!("{} ({},{})", entry.name, entry.vertex_name(v), l), h));
        }
    }
    out
}
