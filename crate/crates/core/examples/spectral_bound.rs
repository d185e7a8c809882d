//! Algebraic connectivity of token graphs and the resulting treewidth lower bound.

use token_treewidth::graph::{generate, Family};
use token_treewidth::oracles::{lambda2, spectral_lower_bound};
use token_treewidth::token::token_graph;

fn main() -> token_treewidth::Result<()> {
    for family in [Family::Path, Family::Star, Family::Complete] {
        let base = generate(family, 6)?;
        let l = lambda2(&base)?;
        for k in 2..=3 {
            let tg = token_graph(&base, k)?;
            let report = spectral_lower_bound(&tg)?;
            println!(
                "{family} n=6 k={k}: lambda2(G) {:.9} lambda2(F_k) {:.9} bound {:.4}",
                l.value,
                report.token_lambda2.unwrap_or(f64::NAN),
                report.chandran_lower_bound
            );
        }
    }
    Ok(())
}
