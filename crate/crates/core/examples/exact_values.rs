// Exact ordered Ramsey numbers of small 1-orderings, level by level.

use ordered_ramsey::bounds::{classical_ramsey, figure3_table};
use ordered_ramsey::{catalog_entry, ordered_ramsey, SearchBudget};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for row in figure3_table() {
        let upper = row.upper.expect("table rows carry an upper bound").value;
        if upper > 9 {
            continue;
        }
        let h = catalog_entry(row.graph).v_l_ordering(&row.vertex, row.label)?;
        let res = ordered_ramsey(&h, &h, upper, SearchBudget::nodes(100_000_000))?;
        let value = res.value.expect("pinned within the table bound");
        let nodes: u64 = res.levels.iter().map(|l| l.nodes).sum();
        println!(
            "{:<28} R_< = {value}  (classical {}, table {upper}, {nodes} nodes)",
            row.subject(),
            classical_ramsey(row.graph).value
        );
        assert!(classical_ramsey(row.graph).value <= value && value <= upper);
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
