//! Brambles on F_2(S_n) and F_2(K_n), validated and with exact order.

use token_treewidth::bramble::{kn_bramble, star_bramble};
use token_treewidth::graph::{generate, Family};
use token_treewidth::token::token_graph;

fn main() -> token_treewidth::Result<()> {
    for n in 3..=6 {
        let tg = token_graph(&generate(Family::Star, n)?, 2)?;
        let b = star_bramble(n)?;
        let report = b.validate(tg.graph())?;
        let order = b.min_hitting_set()?;
        println!(
            "star n={n}: {} sets, valid {}, order {}",
            b.len(),
            report.is_valid(),
            order.size
        );
    }
    for n in 4..=5 {
        let tg = token_graph(&generate(Family::Complete, n)?, 2)?;
        let b = kn_bramble(n)?;
        let report = b.validate(tg.graph())?;
        let order = b.min_hitting_set()?;
        let witness: Vec<_> = order.witness.iter().map(|&v| tg.members(v)).collect();
        println!(
            "complete n={n}: {} sets, valid {}, order {}, hitting set {witness:?}",
            b.len(),
            report.is_valid(),
            order.size
        );
    }
    Ok(())
}
