//! Monochromatic order-preserving containment of a k-ordering in a complete
//! ordered 2-coloring.
//!
//! Containment is not induced: pairs of image vertices that are not edges of
//! the k-ordering may have any color.

use itertools::Itertools;
use serde::Serialize;

use crate::error::Result;
use crate::graph::{Color, KOrdering, OrderedColoring};

/// Witness of containment. `map[v - 1]` is the coloring vertex hosting vertex
/// `v` of the k-ordering.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Embedding {
    pub map: Vec<usize>,
    pub color: Color,
}

impl Embedding {
    /// Image vertices in ascending order.
    pub fn image(&self) -> Vec<usize> {
        let mut img = self.map.clone();
        img.sort_unstable();
        img
    }

    /// Checks injectivity, edge colors and label positions directly.
    pub fn is_valid(&self, g: &OrderedColoring, h: &KOrdering) -> bool {
        if self.map.len() != h.n() || self.map.iter().any(|&w| w < 1 || w > g.n()) {
            return false;
        }
        let image = self.image();
        if image.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        let colored = h
            .graph()
            .edges()
            .all(|(a, b)| g.get(self.map[a - 1], self.map[b - 1]) == Some(self.color));
        let ordered = h
            .labels()
            .iter()
            .all(|(&v, &l)| image[l - 1] == self.map[v - 1]);
        colored && ordered
    }
}

/// Visits valid embeddings in lexicographic order of image set, then of map.
/// The visitor returns `false` to stop.
fn for_each_embedding(
    g: &OrderedColoring,
    h: &KOrdering,
    color: Color,
    mut visit: impl FnMut(&[usize]) -> bool,
) {
    let m = h.n();
    let n = g.n();
    if m > n {
        return;
    }
    let edges: Vec<(usize, usize)> = h.graph().edges().collect();
    let unlabeled: Vec<usize> = (1..=m).filter(|&v| h.label(v).is_none()).collect();
    let mut map = vec![0usize; m];
    for image in (1..=n).combinations(m) {
        // labeled vertices are pinned to their rank in the image
        let mut free_slots = vec![true; m];
        for (&v, &l) in h.labels() {
            map[v - 1] = image[l - 1];
            free_slots[l - 1] = false;
        }
        let free: Vec<usize> = (0..m).filter(|&p| free_slots[p]).map(|p| image[p]).collect();
        for perm in free.iter().copied().permutations(free.len()) {
            for (&v, w) in unlabeled.iter().zip(perm) {
                map[v - 1] = w;
            }
            if edges
                .iter()
                .all(|&(a, b)| g.get(map[a - 1], map[b - 1]) == Some(color))
                && !visit(&map)
            {
                return;
            }
        }
    }
}

/// First embedding of `h` in color `color`, by least image set and then least
/// map.
pub fn find_embedding(g: &OrderedColoring, h: &KOrdering, color: Color) -> Result<Option<Embedding>> {
    g.require_complete()?;
    let mut found = None;
    for_each_embedding(g, h, color, |map| {
        found = Some(Embedding {
            map: map.to_vec(),
            color,
        });
        false
    });
    Ok(found)
}

/// Every valid embedding of `h` in color `color`, one per vertex map.
pub fn all_embeddings(g: &OrderedColoring, h: &KOrdering, color: Color) -> Result<Vec<Embedding>> {
    g.require_complete()?;
    let mut out = Vec::new();
    for_each_embedding(g, h, color, |map| {
        out.push(Embedding {
            map: map.to_vec(),
            color,
        });
        true
    });
    Ok(out)
}

/// Number of distinct copies of `h` in color `color`.
///
/// Vertex maps that differ only by a label-preserving automorphism of `h` land
/// on the same image vertices and image edges and count once.
pub fn count_embeddings(g: &OrderedColoring, h: &KOrdering, color: Color) -> Result<usize> {
    g.require_complete()?;
    let edges: Vec<(usize, usize)> = h.graph().edges().collect();
    let mut copies = std::collections::HashSet::new();
    for_each_embedding(g, h, color, |map| {
        let mut img_edges: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (map[a - 1], map[b - 1]);
                (x.min(y), x.max(y))
            })
            .collect();
        img_edges.sort_unstable();
        let mut img = map.to_vec();
        img.sort_unstable();
        copies.insert((img, img_edges));
        true
    });
    Ok(copies.len())
}

pub fn contains(g: &OrderedColoring, h: &KOrdering) -> Result<bool> {
    Ok(find_embedding(g, h, Color::Red)?.is_some() || find_embedding(g, h, Color::Blue)?.is_some())
}

/// No red copy of `h1` and no blue copy of `h2`.
pub fn avoids(g: &OrderedColoring, h1: &KOrdering, h2: &KOrdering) -> Result<bool> {
    Ok(find_embedding(g, h1, Color::Red)?.is_none() && find_embedding(g, h2, Color::Blue)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog_entry, GraphName};
    use crate::error::Error;
    use crate::graph::UnorderedGraph;

    fn figure2() -> OrderedColoring {
        OrderedColoring::from_blue(5, [(1, 2), (1, 3), (1, 4), (1, 5), (2, 4)]).unwrap()
    }

    #[test]
    fn figure2_contains_pan_e3_2_in_blue() {
        let h = catalog_entry(GraphName::Pan3).v_l_ordering("e3", 2).unwrap();
        let g = figure2();
        assert!(contains(&g, &h).unwrap());
        let all = all_embeddings(&g, &h, Color::Blue).unwrap();
        let drawn = Embedding {
            map: vec![5, 1, 2, 4],
            color: Color::Blue,
        };
        assert!(drawn.is_valid(&g, &h));
        assert!(all.contains(&drawn));
        // least image set wins: {1,2,3,4} with e1 on 3
        let first = find_embedding(&g, &h, Color::Blue).unwrap().unwrap();
        assert_eq!(first.map, vec![3, 1, 2, 4]);
        // the red triangle 3-4-5 with pendant 2-5 is a red copy as well
        let red = find_embedding(&g, &h, Color::Red).unwrap().unwrap();
        assert_eq!(red.map, vec![2, 5, 3, 4]);
    }

    #[test]
    fn incomplete_coloring_rejected() {
        let h = KOrdering::unordered(UnorderedGraph::complete(2).unwrap());
        let g = OrderedColoring::unknown(3);
        assert!(matches!(
            contains(&g, &h),
            Err(Error::IncompleteColoring { unknown: 3 })
        ));
        assert!(count_embeddings(&g, &h, Color::Red).is_err());
    }

    #[test]
    fn single_edge() {
        let k2 = KOrdering::unordered(UnorderedGraph::complete(2).unwrap());
        let g = OrderedColoring::from_blue(2, [(1, 2)]).unwrap();
        assert!(find_embedding(&g, &k2, Color::Blue).unwrap().is_some());
        assert!(find_embedding(&g, &k2, Color::Red).unwrap().is_none());
    }

    #[test]
    fn all_red_has_no_blue_path() {
        let h = catalog_entry(GraphName::Path4).v_l_ordering("p1", 1).unwrap();
        let g = OrderedColoring::monochromatic(5, Color::Red);
        assert_eq!(find_embedding(&g, &h, Color::Blue).unwrap(), None);
        assert!(contains(&g, &h).unwrap());
    }

    #[test]
    fn too_few_vertices() {
        let h = catalog_entry(GraphName::Star4).unordered();
        let g = OrderedColoring::monochromatic(3, Color::Red);
        assert!(!contains(&g, &h).unwrap());
        let one = OrderedColoring::monochromatic(1, Color::Red);
        assert!(avoids(&one, &h, &h).unwrap());
    }

    #[test]
    fn star_copies_in_red_k4() {
        let star = catalog_entry(GraphName::Star4).unordered();
        let g = OrderedColoring::monochromatic(4, Color::Red);
        assert_eq!(all_embeddings(&g, &star, Color::Red).unwrap().len(), 24);
        assert_eq!(count_embeddings(&g, &star, Color::Red).unwrap(), 4);
        assert_eq!(count_embeddings(&g, &star, Color::Blue).unwrap(), 0);
    }

    #[test]
    fn k2_count_is_red_edge_count() {
        let k2 = KOrdering::unordered(UnorderedGraph::complete(2).unwrap());
        let g = OrderedColoring::from_blue(6, [(1, 2), (3, 5), (2, 6)]).unwrap();
        assert_eq!(count_embeddings(&g, &k2, Color::Red).unwrap(), 15 - 3);
        assert_eq!(count_embeddings(&g, &k2, Color::Blue).unwrap(), 3);
    }

    #[test]
    fn red_k11_contains_dg() {
        let dg = crate::catalog::diamond_fully_ordered();
        let g = OrderedColoring::monochromatic(11, Color::Red);
        assert!(!avoids(&g, &dg, &dg).unwrap());
    }
}
