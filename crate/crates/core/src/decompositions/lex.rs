//! Bags of the lexicographic path decomposition of `F_k(K_n)`.
//!
//! Path nodes are the (k-1)-subsets `X` of `[n]` with `n ∉ X`, in lexicographic order.
//! The bag of `X` holds every k-subset `A = {a_1 < ... < a_k}` with
//! `(a_1..a_{k-1}) <= X <= (a_2..a_k)`. All sets here are 1-based, as subsets of `[n]`.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subsets::{binomial, combinations, lex_cmp, rank};

/// A path node: strictly increasing (k-1)-tuple over `[n]` that avoids `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BagIndex(Vec<usize>);

impl BagIndex {
    pub fn new(xs: Vec<usize>, n: usize, k: usize) -> Result<Self> {
        check_nk(n, k)?;
        if xs.len() != k - 1 {
            return Err(Error::invalid(format!(
                "bag index needs {} entries, got {}",
                k - 1,
                xs.len()
            )));
        }
        if xs.first().is_some_and(|&x| x < 1) || xs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid(format!(
                "bag index {xs:?} is not strictly increasing over [n]"
            )));
        }
        if xs.last().is_some_and(|&x| x >= n) {
            return Err(Error::invalid(format!("bag index {xs:?} must avoid n={n}")));
        }
        Ok(BagIndex(xs))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if k < 2 || k >= n {
        return Err(Error::invalid(format!(
            "need 2 <= k <= n-1, got n={n}, k={k}"
        )));
    }
    Ok(())
}

/// All path nodes in lexicographic order.
pub fn lex_path_nodes(n: usize, k: usize) -> Result<Vec<BagIndex>> {
    check_nk(n, k)?;
    Ok(combinations(n - 1, k - 1)
        .map(|c| BagIndex(c.into_iter().map(|x| x + 1).collect()))
        .collect())
}

/// Token indices (lexicographic ranks in `F_k(K_n)`) of the bag of any (k-1)-subset `x`
/// of `[n]`, including those containing `n`. Straight from the definition.
pub fn lex_bag(x: &[usize], n: usize, k: usize) -> Vec<usize> {
    combinations(n, k)
        .enumerate()
        .filter(|(_, a)| {
            let a1: Vec<usize> = a.iter().map(|v| v + 1).collect();
            lex_cmp(&a1[..k - 1], x) != Ordering::Greater
                && lex_cmp(x, &a1[1..]) != Ordering::Greater
        })
        .map(|(r, _)| r)
        .collect()
}

/// Token index of the 1-based k-subset `a` of `[n]`.
pub(crate) fn token_rank(a: &[usize], n: usize) -> usize {
    let zero: Vec<usize> = a.iter().map(|v| v - 1).collect();
    rank(&zero, n)
}

/// Closed-form bag size with the convention `x_k = n`.
pub fn bag_size_formula(x: &BagIndex, n: usize, k: usize) -> Result<u128> {
    check_nk(n, k)?;
    if x.0.len() != k - 1 || x.0.last().is_some_and(|&v| v >= n) {
        return Err(Error::invalid(format!(
            "{:?} is not a bag index for n={n}, k={k}",
            x.0
        )));
    }
    Ok(formula_unchecked(&x.0, n, k) as u128)
}

fn formula_unchecked(x: &[usize], n: usize, k: usize) -> i128 {
    let (n, k) = (n as i64, k as i64);
    let at = |i: i64| -> i64 {
        if i == k {
            n
        } else {
            x[(i - 1) as usize] as i64
        }
    };
    let x1 = at(1) as i128;
    let first: i128 = (1..=k).map(|i| binomial(n - at(i), k - i) as i128).sum();
    let second: i128 = (1..k)
        .map(|i| binomial(n - at(i + 1) + 1, k - i) as i128)
        .sum();
    x1 * first - second
}

/// Admissible values of `x_i` (2 <= i <= k-1) in a largest bag with first entry `x1`:
/// `{n-(k-i)x1, n-(k-i)x1+1}` when `n-(k-i)x1+1 >= x1+i-1`, otherwise `{x1+i-1}`.
pub fn tail_entry_options(x1: usize, i: usize, n: usize, k: usize) -> Vec<usize> {
    let low = n as i64 - (k - i) as i64 * x1 as i64;
    let floor = (x1 + i - 1) as i64;
    if low + 1 >= floor {
        [low, low + 1]
            .into_iter()
            .filter(|&v| v >= 1)
            .map(|v| v as usize)
            .collect()
    } else {
        vec![floor as usize]
    }
}

/// The two admissible first entries of a largest bag: `⌊(n+1)/k⌋` and `⌈n/k⌉`.
pub fn first_entry_candidates(n: usize, k: usize) -> Vec<usize> {
    let mut c = vec![(n + 1) / k, n.div_ceil(k)];
    c.dedup();
    c
}

/// A largest bag, found by evaluating the size formula over the candidate first entries
/// and the admissible tails. Ties go to the lexicographically smallest index.
pub fn max_bag(n: usize, k: usize) -> Result<(BagIndex, u128)> {
    check_nk(n, k)?;
    let mut best: Option<(BagIndex, u128)> = None;
    for x1 in first_entry_candidates(n, k) {
        let mut tuples = vec![vec![x1]];
        for i in 2..k {
            let options = tail_entry_options(x1, i, n, k);
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    options.iter().map(move |&o| {
                        let mut t = t.clone();
                        t.push(o);
                        t
                    })
                })
                .collect();
        }
        for xs in tuples {
            let Ok(x) = BagIndex::new(xs, n, k) else {
                continue;
            };
            let size = formula_unchecked(&x.0, n, k) as u128;
            let better = match &best {
                None => true,
                Some((bx, bs)) => size > *bs || (size == *bs && x < *bx),
            };
            if better {
                best = Some((x, size));
            }
        }
    }
    best.ok_or_else(|| Error::invalid(format!("no admissible bag index for n={n}, k={k}")))
}

/// One of the two branches of the closed-form upper bound, keyed by its first entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundBranch {
    pub x1: usize,
    /// `x_i = n - (k-i) x1` for i >= 2, unrepaired; may fail to be increasing.
    pub literal_tuple: Vec<i64>,
    /// The closed-form bag size evaluated at the unrepaired tuple.
    pub literal_size: i128,
    /// The tuple repaired with `x_i = max(n-(k-i)x1, x1+i-1)`; always a valid index.
    pub tuple: BagIndex,
    pub size: u128,
}

impl BoundBranch {
    pub fn literal_is_valid(&self) -> bool {
        self.literal_tuple.windows(2).all(|w| w[0] < w[1])
    }
}

/// Branch `x1 = ⌊(n+1)/k⌋` and branch `x1 = ⌈n/k⌉`, in that order.
pub fn bound_branches(n: usize, k: usize) -> Result<[BoundBranch; 2]> {
    check_nk(n, k)?;
    let branch = |x1: usize| -> Result<BoundBranch> {
        let (ni, ki, x) = (n as i64, k as i64, x1 as i64);
        let mut literal_tuple = vec![x];
        literal_tuple.extend((2..ki).map(|i| ni - (ki - i) * x));
        let literal_size = x as i128 * binomial(ni - x, ki - 1) as i128
            + x as i128
                * (2..=ki)
                    .map(|i| binomial((ki - i) * x, ki - i) as i128)
                    .sum::<i128>()
            - (1..ki)
                .map(|i| binomial((ki - i - 1) * x + 1, ki - i) as i128)
                .sum::<i128>();
        let mut xs = vec![x1];
        xs.extend(
            (2..k).map(|i| (n as i64 - (k - i) as i64 * x).max((x1 + i - 1) as i64) as usize),
        );
        let tuple = BagIndex::new(xs, n, k)?;
        let size = formula_unchecked(&tuple.0, n, k) as u128;
        Ok(BoundBranch {
            x1,
            literal_tuple,
            literal_size,
            tuple,
            size,
        })
    };
    Ok([branch((n + 1) / k)?, branch(n.div_ceil(k))?])
}

/// Upper bound on `tw(F_k(K_n))`: the larger branch bag minus one. This is exactly the
/// width of the lexicographic path decomposition.
pub fn upper_bound_tw_kn(n: usize, k: usize) -> Result<u128> {
    let [a, b] = bound_branches(n, k)?;
    Ok(a.size.max(b.size) - 1)
}

/// The two-branch closed form evaluated at the unrepaired tuples. Equal to
/// [`upper_bound_tw_kn`] whenever both tuples are increasing; otherwise it can overshoot,
/// e.g. 5 instead of 4 at `(n, k) = (5, 4)`.
pub fn literal_closed_form_bound(n: usize, k: usize) -> Result<i128> {
    let [a, b] = bound_branches(n, k)?;
    Ok(a.literal_size.max(b.literal_size) - 1)
}

/// `⌈n/3⌉ C(n-⌈n/3⌉, 2) + ⌈n/3⌉(⌈n/3⌉+1)/2 - 2`, the k = 3 specialisation.
pub fn f3kn_closed_form(n: usize) -> Result<u128> {
    check_nk(n, 3)?;
    let c = n.div_ceil(3) as u128;
    Ok(c * binomial((n as u128 - c) as i64, 2) + c * (c + 1) / 2 - 2)
}

/// `tw(F_2(K_n))` for `n >= 4`: `n/2 (n/2 - 1) + n - 2` (even), `((n-1)/2)^2 + n - 2` (odd).
pub fn f2kn_exact_treewidth(n: usize) -> Result<u128> {
    if n < 4 {
        return Err(Error::invalid(format!(
            "the exact F_2(K_n) value needs n >= 4, got {n}"
        )));
    }
    let n = n as u128;
    Ok(if n.is_multiple_of(2) {
        (n / 2) * (n / 2 - 1) + n - 2
    } else {
        ((n - 1) / 2).pow(2) + n - 2
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bx(xs: &[usize], n: usize, k: usize) -> BagIndex {
        BagIndex::new(xs.to_vec(), n, k).unwrap()
    }

    #[test]
    fn bag_index_validation() {
        assert!(BagIndex::new(vec![2, 4], 6, 3).is_ok());
        assert!(BagIndex::new(vec![4, 2], 6, 3).is_err());
        assert!(BagIndex::new(vec![2, 6], 6, 3).is_err());
        assert!(BagIndex::new(vec![0, 2], 6, 3).is_err());
        assert!(BagIndex::new(vec![2], 6, 3).is_err());
        assert!(BagIndex::new(vec![1], 3, 3).is_err());
    }

    #[test]
    fn formula_spot_values() {
        for n in 3..12 {
            // only {1, j} qualifies when X = {1}
            assert_eq!(
                bag_size_formula(&bx(&[1], n, 2), n, 2).unwrap(),
                (n - 1) as u128
            );
            for l in 1..n {
                let v = bag_size_formula(&bx(&[l], n, 2), n, 2).unwrap();
                assert_eq!(v, (l * (n - l + 1) - 1) as u128);
                assert_eq!(v, ((l - 1) * (n - l) + n - 1) as u128);
            }
        }
        assert_eq!(bag_size_formula(&bx(&[2, 4], 6, 3), 6, 3).unwrap(), 14);
        assert_eq!(lex_bag(&[2, 4], 6, 3).len(), 14);
    }

    #[test]
    fn max_bag_examples() {
        for n in 3..15 {
            let (x, _) = max_bag(n, 2).unwrap();
            assert_eq!(x.as_slice(), &[n.div_ceil(2)]);
        }
        assert_eq!(max_bag(7, 3).unwrap().0.as_slice()[0], 3);
        assert_eq!(first_entry_candidates(6, 3), vec![2]);
        assert_eq!(max_bag(6, 3).unwrap().0.as_slice()[0], 2);
        assert!(max_bag(4, 4).is_err());
    }

    #[test]
    fn max_bag_agrees_with_exhaustive_search() {
        for k in 2..=6 {
            for n in k + 1..=15 {
                let exhaustive = lex_path_nodes(n, k)
                    .unwrap()
                    .into_iter()
                    .map(|x| (formula_unchecked(x.as_slice(), n, k) as u128, x))
                    .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
                    .unwrap();
                let (x, size) = max_bag(n, k).unwrap();
                assert_eq!((size, x), exhaustive, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn upper_bound_examples() {
        assert_eq!(upper_bound_tw_kn(6, 3).unwrap(), 13);
        assert_eq!(upper_bound_tw_kn(5, 2).unwrap(), 7);
        assert_eq!(upper_bound_tw_kn(7, 3).unwrap(), 22);
        assert_eq!(f3kn_closed_form(7).unwrap(), 22);
        assert_eq!(f3kn_closed_form(6).unwrap(), 13);
        assert_eq!(f2kn_exact_treewidth(4).unwrap(), 4);
        assert_eq!(f2kn_exact_treewidth(5).unwrap(), 7);
        assert!(f2kn_exact_treewidth(3).is_err());
    }

    #[test]
    fn literal_expression_matches_when_tuples_are_increasing() {
        for k in 2..=7 {
            for n in k + 1..=30 {
                let branches = bound_branches(n, k).unwrap();
                for b in &branches {
                    if b.literal_is_valid() {
                        assert_eq!(b.literal_size, b.size as i128, "n={n} k={k} x1={}", b.x1);
                    }
                }
                let literal = literal_closed_form_bound(n, k).unwrap();
                let ub = upper_bound_tw_kn(n, k).unwrap() as i128;
                assert!(literal >= ub);
                if branches.iter().all(BoundBranch::literal_is_valid) {
                    assert_eq!(literal, ub);
                }
            }
        }
        // smallest case where the unrepaired closed form overshoots
        assert_eq!(literal_closed_form_bound(5, 4).unwrap(), 5);
        assert_eq!(upper_bound_tw_kn(5, 4).unwrap(), 4);
    }

    #[test]
    fn k2_branch_matches_even_odd_formula() {
        for n in 4..=40 {
            assert_eq!(
                upper_bound_tw_kn(n, 2).unwrap(),
                f2kn_exact_treewidth(n).unwrap()
            );
        }
    }

    #[test]
    fn k3_closed_form_matches_general_bound() {
        for n in 4..=60 {
            assert_eq!(
                f3kn_closed_form(n).unwrap(),
                upper_bound_tw_kn(n, 3).unwrap(),
                "n={n}"
            );
        }
    }
}
