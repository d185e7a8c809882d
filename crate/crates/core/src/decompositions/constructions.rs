//! The explicit decompositions. Bags hold token-vertex indices in the lexicographic
//! numbering used by [`crate::token::token_graph`], so they validate directly against
//! `token_graph(generate(family, n), k)`.

use std::cmp::Ordering;

use super::lex::{lex_path_nodes, token_rank};
use super::TreeDecomposition;
use crate::error::{Error, Result};
use crate::subsets::{binomial, combinations, lex_cmp, rank};
use crate::token::DEFAULT_MAX_TOKEN_VERTICES;

fn check_size(base_n: usize, k: usize) -> Result<()> {
    let size = binomial(base_n as i64, k as i64);
    if size > DEFAULT_MAX_TOKEN_VERTICES as u128 {
        return Err(Error::limit(
            "token graph vertices",
            size,
            DEFAULT_MAX_TOKEN_VERTICES as u128,
        ));
    }
    Ok(())
}

/// Star-shaped decomposition of `F_k(S_n)` (labels `0..=n`, centre `0`).
///
/// Node 0 is the centre with bag `{A ∪ {0} : A ∈ C([n], k-1)}`; nodes `1..` are the
/// k-subsets `A` of `[n]` in lexicographic order, with bag `{A} ∪ {(A \ a) ∪ {0} : a ∈ A}`.
/// Width is `C(n, k-1) - 1` for k >= 2 and 1 for k = 1.
pub fn star_decomposition(n: usize, k: usize) -> Result<TreeDecomposition> {
    if n < 2 || k == 0 || k >= n {
        return Err(Error::invalid(format!(
            "star decomposition needs 1 <= k <= n-1, got n={n}, k={k}"
        )));
    }
    let total = n + 1;
    check_size(total, k)?;
    // base indices coincide with labels 0..=n
    let centre: Vec<usize> = combinations(n, k - 1)
        .map(|a| {
            let mut with_zero = vec![0];
            with_zero.extend(a.iter().map(|x| x + 1));
            rank(&with_zero, total)
        })
        .collect();
    let mut bags = vec![centre];
    for a in combinations(n, k) {
        let a: Vec<usize> = a.iter().map(|x| x + 1).collect();
        let mut bag = vec![rank(&a, total)];
        for skip in 0..k {
            let mut swapped = vec![0];
            swapped.extend(
                a.iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &x)| x),
            );
            bag.push(rank(&swapped, total));
        }
        bags.push(bag);
    }
    let edges = (1..bags.len()).map(|leaf| (0, leaf)).collect();
    TreeDecomposition::new(edges, bags, false)
}

/// Path decomposition of `F_2(K_n)` with bags `V_l = {{i, j} : i <= l <= j}`, l = 1..=n.
/// The last bag is contained in its predecessor and is kept anyway.
pub fn f2kn_path_decomposition(n: usize) -> Result<TreeDecomposition> {
    if n < 2 {
        return Err(Error::invalid(format!(
            "F_2(K_n) decomposition needs n >= 2, got {n}"
        )));
    }
    check_size(n, 2)?;
    let bags = (1..=n)
        .map(|l| {
            let mut bag = Vec::new();
            for i in 1..=l {
                for j in l.max(i + 1)..=n {
                    bag.push(token_rank(&[i, j], n));
                }
            }
            bag
        })
        .collect();
    TreeDecomposition::path(bags)
}

/// The lexicographic path decomposition of `F_k(K_n)`, one node per (k-1)-subset of `[n]`
/// avoiding `n`. Each token vertex `A` is placed in every node `X` with `A_s <= X <= A_t`,
/// where `A_s`, `A_t` drop the last and first element of `A`.
pub fn fkkn_lex_decomposition(n: usize, k: usize) -> Result<TreeDecomposition> {
    check_size(n, k)?;
    let nodes = lex_path_nodes(n, k)?;
    let mut bags = vec![Vec::new(); nodes.len()];
    for (r, a) in combinations(n, k).enumerate() {
        let a: Vec<usize> = a.iter().map(|x| x + 1).collect();
        let (head, tail) = (&a[..k - 1], &a[1..]);
        let lo = nodes.partition_point(|x| lex_cmp(x.as_slice(), head) == Ordering::Less);
        let hi = nodes.partition_point(|x| lex_cmp(x.as_slice(), tail) != Ordering::Greater);
        for bag in &mut bags[lo..hi] {
            bag.push(r);
        }
    }
    TreeDecomposition::path(bags)
}
