//! k-subsets in lexicographic order: enumeration, ranking and binomials.
//!
//! Subsets are strictly increasing slices. Ranks count k-subsets of `0..n` in
//! lexicographic order; the same numbering indexes the vertices of every token graph.

use std::cmp::Ordering;

/// `C(n, k)` over exact integers, zero when `k < 0`, `n < 0` or `n < k`.
pub fn binomial(n: i64, k: i64) -> u128 {
    if k < 0 || n < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The single lexicographic comparator used for subsets and bag indices.
pub fn lex_cmp<T: Ord>(a: &[T], b: &[T]) -> Ordering {
    a.iter().cmp(b.iter())
}

/// Iterator over the k-subsets of `0..n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

pub fn combinations(n: usize, k: usize) -> Combinations {
    Combinations {
        n,
        current: (k <= n).then(|| (0..k).collect()),
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let k = out.len();
        let mut next = out.clone();
        // rightmost position that can still be incremented
        let mut i = k;
        while i > 0 {
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                return Some(out);
            }
        }
        Some(out)
    }
}

/// Lexicographic rank of a strictly increasing subset of `0..n`.
pub fn rank(subset: &[usize], n: usize) -> usize {
    let k = subset.len() as i64;
    let n = n as i64;
    let mut r: u128 = 0;
    let mut prev: i64 = -1;
    for (i, &c) in subset.iter().enumerate() {
        let c = c as i64;
        let rest = k - i as i64;
        // subsets whose i-th element lies strictly between prev and c (hockey stick)
        r += binomial(n - 1 - prev, rest) - binomial(n - c, rest);
        prev = c;
    }
    r as usize
}

/// Inverse of [`rank`].
pub fn unrank(mut r: usize, n: usize, k: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut v = 0usize;
    for i in 0..k {
        loop {
            let block = binomial((n - 1 - v) as i64, (k - 1 - i) as i64) as usize;
            if r < block {
                break;
            }
            r -= block;
            v += 1;
        }
        out.push(v);
        v += 1;
    }
    out
}
