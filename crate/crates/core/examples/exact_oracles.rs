//! Exact treewidth, minimax border and the F_2(P_n) orderings.

use token_treewidth::graph::{generate, Family};
use token_treewidth::oracles::{
    elimination_width, exact_treewidth, f2pn_balanced_ordering, f2pn_ordering, max_border,
    mmb_exhaustive,
};
use token_treewidth::token::token_graph;

fn main() -> token_treewidth::Result<()> {
    for n in 4..=7 {
        let tg = token_graph(&generate(Family::Path, n)?, 2)?;
        let tw = exact_treewidth(tg.graph())?;
        println!(
            "F_2(P_{n}): treewidth {} (ordering width {})",
            tw.treewidth,
            elimination_width(tg.graph(), &tw.ordering)?
        );
    }

    let tg = token_graph(&generate(Family::Star, 3)?, 2)?;
    let mmb = mmb_exhaustive(tg.graph())?;
    let tw = exact_treewidth(tg.graph())?;
    println!("F_2(S_3): mmb {} treewidth {}", mmb.value, tw.treewidth);

    // The diagonal ordering overshoots for odd n; the balanced walk does not.
    for n in 4..=10 {
        let tg = token_graph(&generate(Family::Path, n)?, 2)?;
        let diagonal = max_border(tg.graph(), &f2pn_ordering(n)?)?;
        let balanced = max_border(tg.graph(), &f2pn_balanced_ordering(n)?)?;
        println!(
            "n={n}: diagonal {diagonal} balanced {balanced} floor(n/2) {}",
            n / 2
        );
    }
    Ok(())
}
