//! Build token graphs of small families and inspect their structure.

use token_treewidth::graph::{generate, Family};
use token_treewidth::token::{complement_isomorphism, token_graph};

fn main() -> token_treewidth::Result<()> {
    for (family, n, k) in [
        (Family::Path, 4, 2),
        (Family::Star, 4, 2),
        (Family::Complete, 5, 2),
        (Family::Complete, 6, 3),
    ] {
        let base = generate(family, n)?;
        let tg = token_graph(&base, k)?;
        println!(
            "F_{k}({family} n={n}): {} vertices, {} edges, max degree {}",
            tg.n_vertices(),
            tg.graph().edge_count(),
            tg.graph().max_degree()
        );
    }

    let tg = token_graph(&generate(Family::Path, 4)?, 2)?;
    for (a, b) in tg.graph().edges() {
        println!("  {:?} -- {:?}", tg.members(*a), tg.members(*b));
    }

    // F_k(G) and F_{n-k}(G) are isomorphic by complementing each subset.
    let map = complement_isomorphism(5, 2)?;
    println!("complement map F_2 -> F_3 on 5 vertices: {map:?}");
    Ok(())
}
