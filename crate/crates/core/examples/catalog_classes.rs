// The six connected 4-vertex graphs and their 1-ordering classes.

use ordered_ramsey::catalog;
use ordered_ramsey::graph::UnorderedGraph;
use ordered_ramsey::symmetry::{isomorphic, one_ordering_classes};
use ordered_ramsey::KOrdering;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut total = 0;
    for entry in catalog() {
        let classes = one_ordering_classes(&entry);
        let reps: Vec<String> = classes
            .iter()
            .map(|c| {
                let (v, l) = c.representative;
                format!("({},{})x{}", entry.vertex_name(v), l, c.members.len())
            })
            .collect();
        println!("{:<10} {} edges  {}", entry.name, entry.graph.edge_count(), reps.join(" "));
        assert_eq!(classes.iter().map(|c| c.members.len()).sum::<usize>(), 16);
        total += classes.len();
    }
    assert_eq!(total, 22);

    // the path on three vertices plus a universal first vertex is a diamond
    // whose degree-3 vertex comes first
    let p3 = KOrdering::unordered(UnorderedGraph::new(3, [(1, 2), (2, 3)])?);
    let d21 = ordered_ramsey::catalog_entry(ordered_ramsey::GraphName::Diamond).v_l_ordering("d2", 1)?;
    assert!(isomorphic(&p3.h_plus(), &d21));
    println!("P3+ is the (d2,1)-diamond");
    Ok(())
}

fn main() {
    run_example().unwrap();
}
