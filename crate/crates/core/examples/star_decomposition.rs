//! The explicit decomposition of F_k(S_n) and its check against the exact oracle.

use token_treewidth::decompositions::star_decomposition;
use token_treewidth::graph::{generate, Family};
use token_treewidth::oracles::exact_treewidth;
use token_treewidth::token::token_graph;

fn main() -> token_treewidth::Result<()> {
    let td = star_decomposition(4, 2)?;
    let tg = token_graph(&generate(Family::Star, 4)?, 2)?;
    println!("F_2(S_4): {} nodes, width {}", td.n_nodes(), td.width()?);
    for (node, bag) in td.bags().iter().enumerate() {
        let members: Vec<_> = bag.iter().map(|&v| tg.members(v)).collect();
        println!("  bag {node}: {members:?}");
    }
    println!("  valid: {}", td.validate(tg.graph())?.is_valid());

    for n in 3..=6 {
        let tg = token_graph(&generate(Family::Star, n)?, 2)?;
        let td = star_decomposition(n, 2)?;
        let exact = exact_treewidth(tg.graph())?;
        println!(
            "n={n}: constructed {} exact {}",
            td.width()?,
            exact.treewidth
        );
    }
    Ok(())
}
