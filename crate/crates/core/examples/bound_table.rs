//! Closed-form bounds per family, next to exact and constructed widths.

use token_treewidth::formulas::bounds;
use token_treewidth::graph::Family;
use token_treewidth::verify::{growth_rows, Caps};

fn main() -> token_treewidth::Result<()> {
    for (family, k) in [
        (Family::Star, 2),
        (Family::Path, 2),
        (Family::Complete, 2),
        (Family::Complete, 3),
    ] {
        println!("{family} k={k}");
        for n in k + 2..=k + 7 {
            let b = bounds(family, n, k)?;
            let best = b
                .upper_candidates
                .iter()
                .min_by_key(|c| c.value)
                .map(|c| c.name.as_str())
                .unwrap_or("-");
            println!(
                "  n={n:2} lower {:>8} upper {:>4} exact {:>4} via {best}",
                b.lower.map(|l| format!("{l:.3}")).unwrap_or_default(),
                b.upper,
                b.exact.map(|e| e.to_string()).unwrap_or_default()
            );
        }
    }
    let caps = Caps::default();
    println!("family k n oracle constructed upper");
    for (family, k) in [(Family::Star, 2), (Family::Path, 2), (Family::Complete, 2)] {
        for row in growth_rows(family, k, 3..=8, &caps) {
            let show = |v: Option<usize>| v.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
            println!(
                "{} {} {} {} {} {}",
                row.family,
                row.k,
                row.n,
                show(row.oracle),
                show(row.constructed),
                row.upper
            );
        }
    }
    Ok(())
}
