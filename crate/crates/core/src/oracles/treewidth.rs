use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::VertexOrdering;
use crate::decompositions::TreeDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_TREEWIDTH_CAP: usize = 21;
/// Memory bound for the subset table regardless of the requested cap.
const HARD_CAP: usize = 28;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactTreewidth {
    pub treewidth: usize,
    /// An elimination ordering whose width equals `treewidth`.
    pub ordering: VertexOrdering,
}

pub fn exact_treewidth(g: &Graph) -> Result<ExactTreewidth> {
    exact_treewidth_capped(g, DEFAULT_TREEWIDTH_CAP)
}

/// Exact treewidth by dynamic programming over vertex subsets.
///
/// `TW(S ∪ {v}) = min over v of max(TW(S), |Q(S, v)|)`, where `Q(S, v)` is the set of
/// vertices outside `S ∪ {v}` reachable from `v` through `S`. States whose value already
/// reaches the width of a greedy ordering are not expanded.
pub fn exact_treewidth_capped(g: &Graph, cap: usize) -> Result<ExactTreewidth> {
    let n = g.n();
    if n == 0 {
        return Err(Error::invalid(
            "treewidth of the empty graph is not defined",
        ));
    }
    if n > cap.min(HARD_CAP) {
        return Err(Error::limit(
            "treewidth oracle vertices",
            n as u128,
            cap.min(HARD_CAP) as u128,
        ));
    }
    let adj = g.adjacency_masks().expect("n <= 64");
    let greedy = min_degree_ordering(g);
    let upper = elimination_width(g, &greedy)?;

    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut tw = vec![u8::MAX; 1usize << n];
    let mut last = vec![0u8; 1usize << n];
    tw[0] = 0;
    let mut comps: Vec<(u64, u64)> = Vec::with_capacity(n);
    for s in 0..full {
        let base = tw[s as usize];
        if base as usize >= upper {
            continue;
        }
        let s64 = s as u64;
        // components of G[S] with their outside neighbourhoods
        comps.clear();
        let mut rest = s64;
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let mut grow = 0u64;
                let mut f = frontier;
                while f != 0 {
                    grow |= adj[f.trailing_zeros() as usize];
                    f &= f - 1;
                }
                frontier = grow & s64 & !comp;
                comp |= frontier;
            }
            rest &= !comp;
            let mut nb = 0u64;
            let mut c = comp;
            while c != 0 {
                nb |= adj[c.trailing_zeros() as usize];
                c &= c - 1;
            }
            comps.push((comp, nb & !s64));
        }
        let mut outside = (full as u64) & !s64;
        while outside != 0 {
            let v = outside.trailing_zeros() as usize;
            outside &= outside - 1;
            let bit = 1u64 << v;
            let mut reach = adj[v];
            for &(_, nb) in &comps {
                if nb & bit != 0 {
                    reach |= nb;
                }
            }
            let q = (reach & !s64 & !bit).count_ones() as u8;
            let value = base.max(q);
            let next = (s64 | bit) as usize;
            if value < tw[next] {
                tw[next] = value;
                last[next] = v as u8;
            }
        }
    }

    let best = tw[full as usize] as usize;
    let ordering = if best < upper {
        let mut order = Vec::with_capacity(n);
        let mut s = full as usize;
        while s != 0 {
            let v = last[s] as usize;
            order.push(v);
            s &= !(1 << v);
        }
        order.reverse();
        VertexOrdering::new(order, n)?
    } else {
        greedy
    };
    Ok(ExactTreewidth {
        treewidth: best.min(upper),
        ordering,
    })
}

fn min_degree_ordering(g: &Graph) -> VertexOrdering {
    let mut nb: Vec<BTreeSet<usize>> = (0..g.n())
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut alive = vec![true; g.n()];
    let mut order = Vec::with_capacity(g.n());
    for _ in 0..g.n() {
        let v = (0..g.n())
            .filter(|&v| alive[v])
            .min_by_key(|&v| (nb[v].len(), v))
            .unwrap();
        eliminate(&mut nb, v);
        alive[v] = false;
        order.push(v);
    }
    VertexOrdering(order)
}

/// Removes `v`, turning its remaining neighbourhood into a clique. Returns that neighbourhood.
fn eliminate(nb: &mut [BTreeSet<usize>], v: usize) -> Vec<usize> {
    let later: Vec<usize> = std::mem::take(&mut nb[v]).into_iter().collect();
    for &a in &later {
        nb[a].remove(&v);
        for &b in &later {
            if a != b {
                nb[a].insert(b);
            }
        }
    }
    later
}

fn check_ordering(g: &Graph, ordering: &VertexOrdering) -> Result<()> {
    VertexOrdering::new(ordering.as_slice().to_vec(), g.n()).map(|_| ())
}

/// Width of an elimination ordering: the largest number of not-yet-eliminated neighbours
/// a vertex has in the filled graph when it is eliminated.
pub fn elimination_width(g: &Graph, ordering: &VertexOrdering) -> Result<usize> {
    check_ordering(g, ordering)?;
    let mut nb: Vec<BTreeSet<usize>> = (0..g.n())
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    Ok(ordering
        .as_slice()
        .iter()
        .map(|&v| eliminate(&mut nb, v).len())
        .max()
        .unwrap_or(0))
}

/// Tree decomposition whose node `i` holds the `i`-th eliminated vertex and its later
/// neighbours in the filled graph. Its width equals the ordering's elimination width.
pub fn decomposition_from_ordering(
    g: &Graph,
    ordering: &VertexOrdering,
) -> Result<TreeDecomposition> {
    check_ordering(g, ordering)?;
    let pos = ordering.positions();
    let mut nb: Vec<BTreeSet<usize>> = (0..g.n())
        .map(|v| g.neighbors(v).iter().copied().collect())
        .collect();
    let mut bags = Vec::with_capacity(g.n());
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    for (i, &v) in ordering.as_slice().iter().enumerate() {
        let later = eliminate(&mut nb, v);
        match later.iter().map(|&w| pos[w]).min() {
            Some(parent) => edges.push((i, parent)),
            None => roots.push(i),
        }
        let mut bag = later;
        bag.push(v);
        bags.push(bag);
    }
    // one root per component; chain them into a single tree
    edges.extend(roots.windows(2).map(|w| (w[0], w[1])));
    TreeDecomposition::new(edges, bags, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_product, generate, Family};
    use crate::token::token_graph;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn brute_force(g: &Graph) -> usize {
        fn permute(g: &Graph, order: &mut Vec<usize>, k: usize, best: &mut usize) {
            if k == order.len() {
                let w = elimination_width(g, &VertexOrdering(order.clone())).unwrap();
                *best = (*best).min(w);
                return;
            }
            for i in k..order.len() {
                order.swap(k, i);
                permute(g, order, k + 1, best);
                order.swap(k, i);
            }
        }
        let mut best = usize::MAX;
        permute(g, &mut (0..g.n()).collect(), 0, &mut best);
        best
    }

    fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
        let edges = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        Graph::indexed(n, edges)
    }

    fn check_certificate(g: &Graph) -> usize {
        let tw = exact_treewidth(g).unwrap();
        assert_eq!(elimination_width(g, &tw.ordering).unwrap(), tw.treewidth);
        let td = decomposition_from_ordering(g, &tw.ordering).unwrap();
        assert!(td.validate(g).unwrap().is_valid());
        assert_eq!(td.width().unwrap(), tw.treewidth);
        tw.treewidth
    }

    #[test]
    fn small_families() {
        for n in 2..=10 {
            assert_eq!(check_certificate(&generate(Family::Path, n).unwrap()), 1);
            assert_eq!(check_certificate(&generate(Family::Star, n).unwrap()), 1);
            assert_eq!(
                check_certificate(&generate(Family::Complete, n).unwrap()),
                n - 1
            );
        }
        assert_eq!(
            check_certificate(&generate(Family::Complete, 1).unwrap()),
            0
        );
        let cycle = Graph::indexed(6, (0..6).map(|i| (i, (i + 1) % 6)).collect());
        assert_eq!(check_certificate(&cycle), 2);
        let p3 = generate(Family::Path, 3).unwrap();
        let grid = cartesian_product(&p3, &p3).unwrap().graph;
        assert_eq!(check_certificate(&grid), 3);
    }

    #[test]
    fn petersen_has_treewidth_four() {
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (i, i + 5)));
        edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        assert_eq!(check_certificate(&Graph::indexed(10, edges)), 4);
    }

    #[test]
    fn johnson_graph_j52() {
        let tg = token_graph(&generate(Family::Complete, 5).unwrap(), 2).unwrap();
        assert_eq!(check_certificate(tg.graph()), 7);
    }

    #[test]
    fn matches_permutation_brute_force() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let n = rng.gen_range(1..=7);
            let p = rng.gen_range(0.2..0.8);
            let g = random_graph(&mut rng, n, p);
            assert_eq!(check_certificate(&g), brute_force(&g));
        }
    }

    #[test]
    fn cap_and_empty() {
        let g = generate(Family::Path, 8).unwrap();
        assert!(matches!(
            exact_treewidth_capped(&g, 7),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(Graph::new(vec![], vec![])
            .map(|g| exact_treewidth(&g).is_err())
            .unwrap());
        assert!(elimination_width(&g, &VertexOrdering(vec![0, 1])).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn subgraph_monotone(seed in any::<u64>()) {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(2..=9);
            let g = random_graph(&mut rng, n, 0.5);
            let kept: Vec<(usize, usize)> = g.edges().iter().copied().filter(|_| rng.gen_bool(0.6)).collect();
            let h = Graph::indexed(n, kept);
            prop_assert!(exact_treewidth(&h).unwrap().treewidth <= exact_treewidth(&g).unwrap().treewidth);
        }

        #[test]
        fn any_ordering_gives_valid_decomposition(seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(1..=12);
            let g = random_graph(&mut rng, n, 0.4);
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut rng);
            let pi = VertexOrdering(order);
            let td = decomposition_from_ordering(&g, &pi).unwrap();
            prop_assert!(td.validate(&g).unwrap().is_valid());
            prop_assert_eq!(td.width().unwrap(), elimination_width(&g, &pi).unwrap());
            prop_assert_eq!(crate::oracles::max_border(&g, &pi).unwrap(), elimination_width(&g, &pi).unwrap());
        }
    }
}
