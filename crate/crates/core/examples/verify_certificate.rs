// Checking lower-bound certificates for the fully ordered diamond DG.
//
// `fixtures/dg_avoider_11.json` avoids DG and certifies `R_<(DG) >= 12`.
// `fixtures/figure5.json` is the published 11-vertex coloring; as printed it
// contains monochromatic copies of DG, and the verifier lists them.

use std::path::PathBuf;

use ordered_ramsey::catalog::diamond_fully_ordered;
use ordered_ramsey::json::read_coloring;
use ordered_ramsey::verify_certificate;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dg = diamond_fully_ordered();

    let good = read_coloring(fixture("dg_avoider_11.json"))?;
    let report = verify_certificate(&good, &dg, &dg)?;
    println!("dg_avoider_11: avoiding = {}, R_< >= {:?}", report.avoiding, report.implied_lower_bound);
    assert_eq!(report.implied_lower_bound, Some(12));

    let printed = read_coloring(fixture("figure5.json"))?;
    let report = verify_certificate(&printed, &dg, &dg)?;
    println!("figure5: avoiding = {}, {} copies", report.avoiding, report.violations.len());
    for v in report.violations.iter().take(3) {
        println!("  {:?} copy on {:?}", v.color, v.map);
    }
    Ok(())
}

fn main() {
    run_example().unwrap();
}
