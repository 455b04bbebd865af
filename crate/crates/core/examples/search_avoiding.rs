// Searching for an avoiding coloring and printing it as a certificate.

use ordered_ramsey::catalog::diamond_fully_ordered;
use ordered_ramsey::json::coloring_to_string;
use ordered_ramsey::search::{find_avoiding_with, SearchOptions};
use ordered_ramsey::{avoids, SearchBudget};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dg = diamond_fully_ordered();
    let opts = SearchOptions {
        threads: 2,
        ..SearchOptions::with_budget(SearchBudget::nodes(100_000_000))
    };
    let out = find_avoiding_with(11, &dg, &dg, None, &opts)?;
    println!("{} after {} nodes ({} prunes)", out.status.name(), out.stats.nodes, out.stats.prunes);
    let g = out.coloring().expect("an 11-vertex DG avoider exists");
    assert!(avoids(g, &dg, &dg)?);
    println!("{}", coloring_to_string(g));
    Ok(())
}

fn main() {
    run_example().unwrap();
}
