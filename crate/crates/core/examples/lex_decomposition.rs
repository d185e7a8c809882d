//! Path decompositions of Johnson graphs F_k(K_n) indexed by (k-1)-subsets.

use token_treewidth::decompositions::{
    bag_size_formula, bound_branches, fkkn_lex_decomposition, lex_path_nodes, max_bag,
    upper_bound_tw_kn,
};
use token_treewidth::graph::{generate, Family};
use token_treewidth::token::token_graph;

fn main() -> token_treewidth::Result<()> {
    let (n, k) = (6, 3);
    for x in lex_path_nodes(n, k)? {
        println!(
            "X = {:?}: {} vertices",
            x.as_slice(),
            bag_size_formula(&x, n, k)?
        );
    }
    let (x, size) = max_bag(n, k)?;
    println!("largest bag at {:?} with {size} vertices", x.as_slice());
    for branch in bound_branches(n, k)? {
        println!("{branch:?}");
    }

    let tg = token_graph(&generate(Family::Complete, n)?, k)?;
    let td = fkkn_lex_decomposition(n, k)?;
    println!(
        "F_{k}(K_{n}): width {} (bound {}), valid {}",
        td.width()?,
        upper_bound_tw_kn(n, k)?,
        td.validate(tg.graph())?.is_valid()
    );

    for k in 2..=4 {
        let row: Vec<String> = (k + 2..=12)
            .map(|n| upper_bound_tw_kn(n, k).unwrap().to_string())
            .collect();
        println!("k={k}: {}", row.join(" "));
    }
    Ok(())
}
