// Fixing part of a coloring by hand and letting search fill in the rest.

use ordered_ramsey::catalog::diamond_fully_ordered;
use ordered_ramsey::{avoids, find_avoiding, Color, OrderedColoring, SearchBudget};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dg = diamond_fully_ordered();
    let n = 11;
    // vertex 1 sees 2..=6 in red and 7..=11 in blue; all other pairs open
    let mut skeleton = OrderedColoring::unknown(n);
    for j in 2..=n {
        skeleton.set(1, j, Some(if j <= 6 { Color::Red } else { Color::Blue }))?;
    }
    println!("{} of {} pairs open", skeleton.unknown_count(), n * (n - 1) / 2);

    let out = find_avoiding(n, &dg, &dg, Some(&skeleton), SearchBudget::nodes(100_000_000))?;
    println!("{} after {} nodes", out.status.name(), out.stats.nodes);
    if let Some(g) = out.coloring() {
        assert!(skeleton.is_extended_by(g));
        assert!(avoids(g, &dg, &dg)?);
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
