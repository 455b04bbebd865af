// Closed-form bounds next to what search can confirm.

use ordered_ramsey::bounds::{
    chvatal_tree_ramsey, complete_vs_path_plus_bound, cycle_ramsey, erdos_szekeres_path, figure3_table_text,
    h_plus_recursion_bound, path_one_ordering_bound,
};
use ordered_ramsey::{ordered_ramsey, KOrdering, SearchBudget, UnorderedGraph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    print!("{}", figure3_table_text());

    for n in [5, 6, 7, 8] {
        println!("R(C_{n}) = {}, 1-ordered P_{n} <= {}", cycle_ramsey(n)?, path_one_ordering_bound(n)?);
    }

    // monotone path: labels follow the path
    let mono = KOrdering::fully_ordered(UnorderedGraph::new(3, [(1, 2), (2, 3)])?, &[1, 2, 3])?;
    let found = ordered_ramsey(&mono, &mono, 8, SearchBudget::nodes(1_000_000))?;
    println!("monotone P3: formula {}, search {:?}", erdos_szekeres_path(3)?, found.value);
    assert_eq!(found.value, Some(erdos_szekeres_path(3)?));

    // K_m vs P_n+ through the H+ recursion
    let (m, n) = (3, 3);
    let r: Vec<usize> = (1..=m).map(|i| chvatal_tree_ramsey(i, n)).collect::<Result<_, _>>()?;
    let stated = h_plus_recursion_bound(&r)?;
    assert_eq!(stated, complete_vs_path_plus_bound(m, n)?);
    let k3 = KOrdering::unordered(UnorderedGraph::complete(3)?);
    let p3_plus = KOrdering::unordered(UnorderedGraph::new(3, [(1, 2), (2, 3)])?).h_plus();
    let exact = ordered_ramsey(&k3, &p3_plus, 10, SearchBudget::nodes(10_000_000))?;
    println!("R_<(K3, P3+): stated bound {stated}, search {:?}", exact.value);
    // the avoider-size argument gives stated + 1, which is tight here
    assert_eq!(exact.value, Some(stated + 1));
    Ok(())
}

fn main() {
    run_example().unwrap();
}
