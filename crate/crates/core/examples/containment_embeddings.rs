// Finding and counting monochromatic order-preserving copies.

use ordered_ramsey::containment::all_embeddings;
use ordered_ramsey::{catalog_entry, count_embeddings, find_embedding, Color, GraphName, OrderedColoring};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // 5 vertices, blue star at 1 plus the pair 2-4, everything else red
    let g = OrderedColoring::from_blue(5, [(1, 2), (1, 3), (1, 4), (1, 5), (2, 4)])?;
    // the 3-pan whose vertex e3 must be the 2nd smallest of any copy
    let pan = catalog_entry(GraphName::Pan3).v_l_ordering("e3", 2)?;

    for color in [Color::Blue, Color::Red] {
        let first = find_embedding(&g, &pan, color)?;
        let maps = all_embeddings(&g, &pan, color)?;
        println!(
            "{color:?}: first {:?}, {} vertex maps, {} distinct copies",
            first.as_ref().map(|e| &e.map),
            maps.len(),
            count_embeddings(&g, &pan, color)?
        );
    }
    // e1 -> 5, e2 -> 1, e3 -> 2, e4 -> 4
    let drawn = all_embeddings(&g, &pan, Color::Blue)?
        .into_iter()
        .find(|e| e.map == [5, 1, 2, 4])
        .expect("the drawn copy");
    assert!(drawn.is_valid(&g, &pan));
    Ok(())
}

fn main() {
    run_example().unwrap();
}
