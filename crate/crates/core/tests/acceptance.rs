//! One test per acceptance criterion; each prints a single PASS/FAIL line.

mod common;

use std::time::{Duration, Instant};

use common::*;
use ordered_ramsey::bounds::{
    chvatal_tree_ramsey, classical_ramsey, complete_vs_path_plus_bound, cycle_ramsey, erdos_szekeres_path,
    figure3_table, figure3_table_json, h_plus_recursion_bound,
};
use ordered_ramsey::catalog::diamond_fully_ordered;
use ordered_ramsey::cli::run;
use ordered_ramsey::graph::{reverse_coloring, swap_colors};
use ordered_ramsey::search::{find_avoiding_with, SearchOptions};
use ordered_ramsey::{
    catalog, catalog_entry, contains, find_avoiding, find_embedding, ordered_ramsey, Color, GraphName, KOrdering,
    SearchBudget, UnorderedGraph,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const NODE_BUDGET: u64 = 100_000_000;

fn report(id: u32, what: &str, ok: bool, detail: String) {
    println!("ACCEPTANCE {id:>2} {} {what}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {id} failed: {detail}");
}

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn exact(graph: GraphName, v: &str, l: usize) -> (Option<usize>, Duration) {
    let h = catalog_entry(graph).v_l_ordering(v, l).unwrap();
    let t = Instant::now();
    let res = ordered_ramsey(&h, &h, 12, SearchBudget::nodes(NODE_BUDGET)).unwrap();
    (res.value, t.elapsed())
}

fn exact_rows(id: u32, what: &str, graph: GraphName, rows: &[(&str, usize)], want: usize, limit: Duration) {
    let mut ok = true;
    let mut detail = Vec::new();
    for &(v, l) in rows {
        let (value, took) = exact(graph, v, l);
        ok &= value == Some(want) && took < limit;
        detail.push(format!("({v},{l})={value:?} in {took:.2?}"));
    }
    report(id, what, ok, format!("{} [want {want}, each < {limit:?}]", detail.join(", ")));
}

#[test]
fn criterion_01_published_dg_certificate() {
    let t = Instant::now();
    let res = run(["ordram", "verify", &fixture("figure5.json"), "--h", "diamond:full:1,2,3,4"]);
    let took = t.elapsed();
    let payload = res.payload.unwrap_or_default();
    let copies = payload["violations"].as_array().map_or(0, Vec::len);
    let ok = res.exit_code == 0 && payload["implied_lower_bound"] == 12 && took < Duration::from_secs(1);
    report(
        1,
        "published 11-vertex coloring certifies R_<(DG) >= 12",
        ok,
        format!(
            "exit {}, {copies} monochromatic DG copies, {took:.2?} [want exit 0, bound 12, < 1s]",
            res.exit_code
        ),
    );
}

#[test]
fn criterion_02_path4_values() {
    exact_rows(
        2,
        "every 1-ordering class of P4 has R_< = 5",
        GraphName::Path4,
        &[("p1", 1), ("p1", 2), ("p2", 1), ("p2", 2)],
        5,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_03_star_values() {
    exact_rows(
        3,
        "star (s1,1), (s1,2), (s2,1) have R_< = 6",
        GraphName::Star4,
        &[("s1", 1), ("s1", 2), ("s2", 1)],
        6,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_04_pan_e2_1_value() {
    exact_rows(4, "pan (e2,1) has R_< = 7", GraphName::Pan3, &[("e2", 1)], 7, Duration::from_secs(60));
}

#[test]
fn criterion_05_cycle_values() {
    exact_rows(
        5,
        "cycle (c1,1), (c1,2) have R_< = 6",
        GraphName::Cycle4,
        &[("c1", 1), ("c1", 2)],
        6,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_06_upper_bounds_at_nine() {
    let mut ok = true;
    let mut detail = Vec::new();
    for (graph, v, l) in [(GraphName::Pan3, "e3", 2), (GraphName::Star4, "s2", 2)] {
        let h = catalog_entry(graph).v_l_ordering(v, l).unwrap();
        let at9 = find_avoiding(9, &h, &h, None, SearchBudget::nodes(NODE_BUDGET)).unwrap();
        let at6 = find_avoiding(6, &h, &h, None, SearchBudget::nodes(NODE_BUDGET)).unwrap();
        ok &= at9.is_exhausted() && at6.is_found();
        detail.push(format!(
            "{graph} ({v},{l}): n=9 {} ({} nodes), n=6 {}",
            at9.status.name(),
            at9.stats.nodes,
            at6.status.name()
        ));
    }
    report(
        6,
        "no avoider at n = 9, avoiders at n = 6",
        ok,
        format!("{} [budget 1e8 nodes]", detail.join("; ")),
    );
}

#[test]
fn criterion_07_dg_avoider_and_large_rows() {
    let dg = diamond_fully_ordered();
    let out = find_avoiding(11, &dg, &dg, None, SearchBudget::nodes(NODE_BUDGET)).unwrap();
    let avoider_ok = out.coloring().is_some_and(|g| oracle_avoids(g, &dg, &dg));
    let table = figure3_table();
    let large: Vec<_> = table.iter().filter(|r| r.upper.unwrap().value >= 13).collect();
    let rows_ok = large.len() == 6
        && large
            .iter()
            .all(|r| matches!(r.graph, GraphName::Diamond | GraphName::Complete4) && r.lower.unwrap().value <= r.upper.unwrap().value);
    report(
        7,
        "search finds an 11-vertex DG avoider; large rows carried as table bounds",
        avoider_ok && rows_ok,
        format!(
            "{} after {} nodes, oracle-verified {avoider_ok}; {} rows with upper >= 13",
            out.status.name(),
            out.stats.nodes,
            large.len()
        ),
    );
}

#[test]
fn criterion_08_oracle_equivalence() {
    let reps = class_representatives();
    let mut rng = StdRng::seed_from_u64(2024);
    let (mut agree, mut total) = (0, 0);
    for _ in 0..500 {
        let n = rng.gen_range(4..=6);
        let g = random_coloring(n, &mut rng);
        for (_, h) in &reps {
            total += 1;
            agree += usize::from(contains(&g, h).unwrap() == oracle_contains(&g, h));
        }
    }
    report(
        8,
        "contains() agrees with the injective-map oracle",
        agree == total,
        format!("{agree}/{total} agree over 500 colorings x {} orderings [want 100%]", reps.len()),
    );
}

#[test]
fn criterion_09_formula_suite() {
    let t = Instant::now();
    let fixture_text = std::fs::read_to_string(fixture("figure3_table.json")).unwrap();
    let table_ok = fixture_text.trim_end() == figure3_table_json() && figure3_table().len() == 22;
    let expected_uppers = [
        14, 16, 13, 17, 5, 5, 5, 5, 10, 10, 7, 10, 10, 9, 6, 6, 6, 9, 6, 6, 18, 18,
    ];
    let uppers: Vec<usize> = figure3_table().iter().map(|r| r.upper.unwrap().value).collect();
    let dominates = figure3_table()
        .iter()
        .all(|r| r.upper.unwrap().value >= classical_ramsey(r.graph).value);
    let cycles_ok = (5..=20).all(|n| cycle_ramsey(n).unwrap() == if n % 2 == 1 { 2 * n - 1 } else { 3 * n / 2 - 1 });
    let recursion_ok = (2..=20).all(|m| {
        (2..=20).all(|n| {
            let r: Vec<usize> = (1..=m).map(|i| (i - 1) * (n - 1) + 1).collect();
            let lib: Vec<usize> = (1..=m).map(|i| chvatal_tree_ramsey(i, n).unwrap()).collect();
            r == lib && h_plus_recursion_bound(&r).unwrap() == complete_vs_path_plus_bound(m, n).unwrap()
        })
    });
    let mono = KOrdering::fully_ordered(UnorderedGraph::new(3, [(1, 2), (2, 3)]).unwrap(), &[1, 2, 3]).unwrap();
    let searched = ordered_ramsey(&mono, &mono, 8, SearchBudget::nodes(NODE_BUDGET)).unwrap().value;
    let es_ok = erdos_szekeres_path(3).unwrap() == 5 && searched == Some(5);
    let took = t.elapsed();
    let ok = table_ok
        && uppers == expected_uppers
        && dominates
        && cycles_ok
        && recursion_ok
        && es_ok
        && took < Duration::from_secs(1);
    report(
        9,
        "table, cycle, H+ recursion and Erdos-Szekeres formulas",
        ok,
        format!(
            "table {table_ok}, uppers {}, >= classical {dominates}, cycles {cycles_ok}, recursion {recursion_ok}, \
             monotone P3 search {searched:?}, {took:.2?} [< 1s]",
            uppers == expected_uppers
        ),
    );
}

#[test]
fn criterion_10_symmetry_properties() {
    let reps = class_representatives();
    let mut rng = StdRng::seed_from_u64(99);
    let mut equivariant = 0;
    for _ in 0..500 {
        let n = rng.gen_range(4..=7);
        let g = random_coloring(n, &mut rng);
        let h = &reps[rng.gen_range(0..reps.len())].1;
        let has = |g, h, c| find_embedding(g, h, c).unwrap().is_some();
        let (rg, rh, sg) = (reverse_coloring(&g), h.reverse(), swap_colors(&g));
        let rev_ok = [Color::Red, Color::Blue]
            .iter()
            .all(|&c| has(&g, h, c) == has(&rg, &rh, c));
        let swap_ok = has(&g, h, Color::Red) == has(&sg, h, Color::Blue)
            && has(&g, h, Color::Blue) == has(&sg, h, Color::Red);
        equivariant += usize::from(rev_ok && swap_ok);
    }
    let (mut agree, mut total) = (0, 0);
    for entry in catalog() {
        for v in 1..=4 {
            for l in 1..=4 {
                let h = entry.v_l_ordering_at(v, l).unwrap();
                for n in 1..=5 {
                    let verdict = |swap| {
                        let opts = SearchOptions {
                            color_swap_breaking: swap,
                            ..SearchOptions::with_budget(SearchBudget::nodes(NODE_BUDGET))
                        };
                        find_avoiding_with(n, &h, &h, None, &opts).unwrap().is_found()
                    };
                    total += 1;
                    agree += usize::from(verdict(true) == verdict(false));
                }
            }
        }
    }
    report(
        10,
        "reversal/color-swap equivariance; symmetry breaking preserves verdicts",
        equivariant == 500 && agree == total,
        format!("{equivariant}/500 equivariant, {agree}/{total} verdicts agree"),
    );
}
