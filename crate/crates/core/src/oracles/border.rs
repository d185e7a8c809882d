use serde::{Deserialize, Serialize};

use super::VertexOrdering;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subsets::rank;

pub const DEFAULT_MMB_CAP: usize = 9;

/// `|N(S) \ S|` for connected `G[S]`; for disconnected `S`, the maximum over the
/// components of `G[S]`.
pub fn border(g: &Graph, s: &[usize]) -> Result<usize> {
    if s.is_empty() {
        return Err(Error::invalid("border of the empty set is not defined"));
    }
    if let Some(v) = s.iter().find(|&&v| v >= g.n()) {
        return Err(Error::invalid(format!("vertex {v} is not in the graph")));
    }
    let mut mark = vec![false; g.n()];
    let comps = g.component_indices(s);
    let mut best = 0;
    for c in &comps {
        let mut outside = Vec::new();
        for &v in c {
            for &w in g.neighbors(v) {
                // no neighbour of a component lies elsewhere in S
                if !mark[w] && c.binary_search(&w).is_err() {
                    mark[w] = true;
                    outside.push(w);
                }
            }
        }
        best = best.max(outside.len());
        for w in outside {
            mark[w] = false;
        }
    }
    Ok(best)
}

/// Largest border over the prefixes `{π(1), …, π(i)}`, i = 1..n.
pub fn max_border(g: &Graph, pi: &VertexOrdering) -> Result<usize> {
    let order = VertexOrdering::new(pi.as_slice().to_vec(), g.n())?;
    let mut best = 0;
    for i in 1..=order.len() {
        best = best.max(border(g, &order.as_slice()[..i])?);
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mmb {
    pub value: usize,
    pub ordering: VertexOrdering,
}

pub fn mmb_exhaustive(g: &Graph) -> Result<Mmb> {
    mmb_exhaustive_capped(g, DEFAULT_MMB_CAP)
}

/// Minimum of [`max_border`] over all orderings, by depth-first search over prefixes.
/// A prefix is abandoned once its running maximum reaches the best complete ordering.
pub fn mmb_exhaustive_capped(g: &Graph, cap: usize) -> Result<Mmb> {
    let n = g.n();
    if n == 0 {
        return Err(Error::invalid(
            "minimax border of the empty graph is not defined",
        ));
    }
    if n > cap.min(16) {
        return Err(Error::limit(
            "minimax border vertices",
            n as u128,
            cap.min(16) as u128,
        ));
    }
    let adj = g.adjacency_masks().expect("n <= 16");
    let mut search = Search {
        adj,
        n,
        best: usize::MAX,
        best_order: Vec::new(),
        prefix: Vec::with_capacity(n),
    };
    search.extend(0, 0);
    Ok(Mmb {
        value: search.best,
        ordering: VertexOrdering::new(search.best_order, n)?,
    })
}

struct Search {
    adj: Vec<u64>,
    n: usize,
    best: usize,
    best_order: Vec<usize>,
    prefix: Vec<usize>,
}

impl Search {
    fn mask_border(&self, s: u64) -> usize {
        let mut rest = s;
        let mut best = 0;
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            loop {
                let mut grow = comp;
                let mut c = comp;
                while c != 0 {
                    grow |= self.adj[c.trailing_zeros() as usize] & s;
                    c &= c - 1;
                }
                if grow == comp {
                    break;
                }
                comp = grow;
            }
            rest &= !comp;
            let mut nb = 0u64;
            let mut c = comp;
            while c != 0 {
                nb |= self.adj[c.trailing_zeros() as usize];
                c &= c - 1;
            }
            best = best.max((nb & !s).count_ones() as usize);
        }
        best
    }

    fn extend(&mut self, mask: u64, running: usize) {
        if self.prefix.len() == self.n {
            if running < self.best {
                self.best = running;
                self.best_order = self.prefix.clone();
            }
            return;
        }
        for v in 0..self.n {
            if mask >> v & 1 == 1 {
                continue;
            }
            let next = mask | 1 << v;
            let value = running.max(self.mask_border(next));
            if value >= self.best {
                continue;
            }
            self.prefix.push(v);
            self.extend(next, value);
            self.prefix.pop();
        }
    }
}

/// Ordering of `F_2(P_n)` by increasing `x_1 + x_2`, ties broken by smaller `x_1`.
///
/// Its max border is `⌊n/2⌋` for even n and n = 3, but `(n+1)/2` for odd n >= 5; the prefix
/// `{1,2}, {1,3}, {1,4}` of `F_2(P_5)` already has border `{2,3}, {1,5}, {2,4}`.
/// [`f2pn_balanced_ordering`] reaches `⌊n/2⌋` for every n.
pub fn f2pn_ordering(n: usize) -> Result<VertexOrdering> {
    let mut pairs = f2pn_pairs(n)?;
    pairs.sort_by_key(|&(a, b)| (a + b, a));
    pairs_to_ordering(&pairs, n)
}

/// Same diagonals as [`f2pn_ordering`], but diagonals with odd `x_1 + x_2` are walked
/// from the middle outwards (larger `x_1` first). Max border is `⌊n/2⌋`.
pub fn f2pn_balanced_ordering(n: usize) -> Result<VertexOrdering> {
    let mut pairs = f2pn_pairs(n)?;
    pairs.sort_by_key(|&(a, b)| {
        let s = a + b;
        (s, if s % 2 == 1 { n - a } else { a })
    });
    pairs_to_ordering(&pairs, n)
}

fn pairs_to_ordering(pairs: &[(usize, usize)], n: usize) -> Result<VertexOrdering> {
    let order = pairs
        .iter()
        .map(|&(a, b)| rank(&[a - 1, b - 1], n))
        .collect();
    VertexOrdering::new(order, n * (n - 1) / 2)
}

/// The vertices of `F_2(P_n)` grouped by `x_1 + x_2`, as `(sum, token indices)` for
/// sums `3..=2n-1`.
pub fn f2pn_diagonals(n: usize) -> Result<Vec<(usize, Vec<usize>)>> {
    let pairs = f2pn_pairs(n)?;
    Ok((3..2 * n)
        .map(|i| {
            let members = pairs
                .iter()
                .filter(|&&(a, b)| a + b == i)
                .map(|&(a, b)| rank(&[a - 1, b - 1], n))
                .collect();
            (i, members)
        })
        .collect())
}

fn f2pn_pairs(n: usize) -> Result<Vec<(usize, usize)>> {
    if n < 2 {
        return Err(Error::invalid(format!("F_2(P_n) needs n >= 2, got {n}")));
    }
    Ok((1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::oracles::exact_treewidth;
    use crate::token::token_graph;
    use rand::{Rng, SeedableRng};

    fn f2p(n: usize) -> crate::token::TokenGraph {
        token_graph(&generate(Family::Path, n).unwrap(), 2).unwrap()
    }

    #[test]
    fn border_examples() {
        let p5 = generate(Family::Path, 5).unwrap();
        let ix = |ls: &[i64]| p5.indices_of(ls).unwrap();
        assert_eq!(border(&p5, &ix(&[3])).unwrap(), 2);
        assert_eq!(border(&p5, &ix(&[1, 3])).unwrap(), 2);
        assert_eq!(border(&p5, &ix(&[1, 2, 3, 4, 5])).unwrap(), 0);
        assert!(border(&p5, &[]).is_err());
        assert!(border(&p5, &[7]).is_err());
        let k4 = generate(Family::Complete, 4).unwrap();
        assert_eq!(border(&k4, &[0, 1]).unwrap(), 2);
    }

    #[test]
    fn max_border_examples() {
        let p3 = generate(Family::Path, 3).unwrap();
        assert_eq!(
            max_border(&p3, &VertexOrdering::new(vec![0, 1, 2], 3).unwrap()).unwrap(),
            1
        );
        let k4 = generate(Family::Complete, 4).unwrap();
        assert_eq!(border(&k4, &[2]).unwrap(), 3);
        assert_eq!(
            max_border(&k4, &VertexOrdering::new(vec![2, 0, 3, 1], 4).unwrap()).unwrap(),
            3
        );
    }

    #[test]
    fn f2pn_ordering_shape() {
        let tg = f2p(4);
        let order = f2pn_ordering(4).unwrap();
        let members: Vec<Vec<i64>> = order.as_slice().iter().map(|&v| tg.members(v)).collect();
        assert_eq!(
            members,
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4]
            ]
        );
        let diag = f2pn_diagonals(6).unwrap();
        assert_eq!(diag.iter().find(|d| d.0 == 7).unwrap().1.len(), 3);
        assert!(f2pn_ordering(1).is_err());
    }

    #[test]
    fn f2pn_ordering_borders() {
        for n in 3..=16 {
            let g = f2p(n);
            let literal = max_border(g.graph(), &f2pn_ordering(n).unwrap()).unwrap();
            let expected = if n % 2 == 1 && n >= 5 {
                n / 2 + 1
            } else {
                n / 2
            };
            assert_eq!(literal, expected, "n={n}");
            let balanced = max_border(g.graph(), &f2pn_balanced_ordering(n).unwrap()).unwrap();
            assert_eq!(balanced, n / 2, "n={n}");
        }
        let g = f2p(5);
        let prefix: Vec<usize> = [[1, 2], [1, 3], [1, 4]]
            .iter()
            .map(|p| g.index_of(p).unwrap())
            .collect();
        assert_eq!(border(g.graph(), &prefix).unwrap(), 3);
    }

    #[test]
    fn mmb_examples() {
        assert_eq!(
            mmb_exhaustive(&generate(Family::Path, 4).unwrap())
                .unwrap()
                .value,
            1
        );
        assert_eq!(mmb_exhaustive(f2p(4).graph()).unwrap().value, 2);
        let f2k4 = token_graph(&generate(Family::Complete, 4).unwrap(), 2).unwrap();
        assert_eq!(mmb_exhaustive(f2k4.graph()).unwrap().value, 4);
        let big = generate(Family::Path, 10).unwrap();
        assert!(matches!(
            mmb_exhaustive(&big),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn mmb_witness_and_treewidth_agree() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..40 {
            let n = rng.gen_range(1..=7);
            let edges = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .filter(|_| rng.gen_bool(0.45))
                .collect();
            let g = Graph::indexed(n, edges);
            let m = mmb_exhaustive(&g).unwrap();
            assert_eq!(max_border(&g, &m.ordering).unwrap(), m.value);
            assert_eq!(m.value, exact_treewidth(&g).unwrap().treewidth);
            let shuffled = {
                let mut o: Vec<usize> = (0..n).collect();
                o.reverse();
                VertexOrdering::new(o, n).unwrap()
            };
            assert!(max_border(&g, &shuffled).unwrap() >= m.value);
        }
    }
}
