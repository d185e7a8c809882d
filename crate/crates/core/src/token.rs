//! k-token graphs `F_k(G)` and the maps into and out of them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{self, Family, Graph, GraphJson, Label};
use crate::subsets::{binomial, combinations, rank};

/// Default cap on the number of token-graph vertices.
pub const DEFAULT_MAX_TOKEN_VERTICES: usize = 200_000;

/// `F_k(G)`. Vertex `v` of [`TokenGraph::graph`] is the k-subset of base indices with
/// lexicographic rank `v`; since base labels are sorted this is also the lexicographic
/// order over labels.
#[derive(Debug, Clone)]
pub struct TokenGraph {
    base: Graph,
    k: usize,
    graph: Graph,
    table: Vec<Vec<usize>>,
}

/// Token graph JSON: the graph schema plus `vertex_table` (index to k-subset of labels).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TokenGraphJson {
    pub labels: Vec<Label>,
    pub edges: Vec<[Label; 2]>,
    pub vertex_table: Vec<Vec<Label>>,
}

/// Reference to the graph a decomposition or bramble lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HostRef {
    pub family: Family,
    pub n: usize,
    pub k: usize,
}

impl HostRef {
    pub fn build(&self, max_vertices: usize) -> Result<TokenGraph> {
        let base = graph::generate(self.family, self.n)?;
        token_graph_capped(&base, self.k, max_vertices)
    }
}

pub fn token_graph(base: &Graph, k: usize) -> Result<TokenGraph> {
    token_graph_capped(base, k, DEFAULT_MAX_TOKEN_VERTICES)
}

fn check_k(n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::invalid(format!(
            "token count k={k} must satisfy 1 <= k <= n-1 (n={n})"
        )));
    }
    Ok(())
}

/// Builds `F_k(G)`, refusing if `C(n, k)` exceeds `max_vertices`.
pub fn token_graph_capped(base: &Graph, k: usize, max_vertices: usize) -> Result<TokenGraph> {
    let n = base.n();
    check_k(n, k)?;
    let size = binomial(n as i64, k as i64);
    if size > max_vertices as u128 {
        return Err(Error::limit(
            "token graph vertices",
            size,
            max_vertices as u128,
        ));
    }
    let table: Vec<Vec<usize>> = combinations(n, k).collect();
    let mut edges = Vec::new();
    let mut occupied = vec![false; n];
    let mut moved = Vec::with_capacity(k);
    for (v, members) in table.iter().enumerate() {
        for &m in members {
            occupied[m] = true;
        }
        // slide one token along a base edge to an unoccupied vertex
        for (pos, &a) in members.iter().enumerate() {
            for &b in base.neighbors(a) {
                if occupied[b] || b < a {
                    continue;
                }
                moved.clear();
                moved.extend(
                    members
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != pos)
                        .map(|(_, &x)| x),
                );
                let at = moved.partition_point(|&x| x < b);
                moved.insert(at, b);
                edges.push((v, rank(&moved, n)));
            }
        }
        for &m in members {
            occupied[m] = false;
        }
    }
    Ok(TokenGraph {
        base: base.clone(),
        k,
        graph: Graph::indexed(table.len(), edges),
        table,
    })
}

impl TokenGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n_vertices(&self) -> usize {
        self.table.len()
    }

    /// Members of token vertex `v` as base indices.
    pub fn member_indices(&self, v: usize) -> &[usize] {
        &self.table[v]
    }

    /// Members of token vertex `v` as base labels.
    pub fn members(&self, v: usize) -> Vec<Label> {
        self.table[v].iter().map(|&i| self.base.label(i)).collect()
    }

    /// Index of the token vertex with the given members (labels, any order).
    pub fn index_of(&self, members: &[Label]) -> Result<usize> {
        if members.len() != self.k {
            return Err(Error::invalid(format!(
                "token vertex needs {} members, got {}",
                self.k,
                members.len()
            )));
        }
        let mut idx = self.base.indices_of(members)?;
        idx.sort_unstable();
        if idx.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("token vertex members must be distinct"));
        }
        Ok(rank(&idx, self.base.n()))
    }

    pub fn to_json(&self) -> TokenGraphJson {
        let GraphJson { labels, edges } = self.graph.to_json();
        TokenGraphJson {
            labels,
            edges,
            vertex_table: (0..self.n_vertices()).map(|v| self.members(v)).collect(),
        }
    }
}

/// `A -> V(G) \ A`, as a map from indices of `F_k(G)` to indices of `F_{n-k}(G)`.
pub fn complement_isomorphism(n: usize, k: usize) -> Result<Vec<usize>> {
    check_k(n, k)?;
    Ok(combinations(n, k)
        .map(|a| {
            let rest: Vec<usize> = (0..n).filter(|x| a.binary_search(x).is_err()).collect();
            rank(&rest, n)
        })
        .collect())
}

/// Set complement of a label set within the base graph.
pub fn complement_members(base: &Graph, members: &[Label]) -> Vec<Label> {
    base.labels()
        .iter()
        .copied()
        .filter(|l| !members.contains(l))
        .collect()
}

/// The grid map `{x_1 < ... < x_k} -> (x_i - (i - 1))_i` for `F_k(P_n)`.
/// `out[v]` is the image of token vertex `v`, a point of `P_{n-k+1}^{□k}`.
pub fn grid_embedding(base: &Graph, k: usize) -> Result<Vec<Vec<Label>>> {
    let n = base.n();
    if *base != graph::generate(Family::Path, n.max(1))? {
        return Err(Error::invalid(
            "grid embedding needs the path P_n on labels 1..n",
        ));
    }
    check_k(n, k)?;
    Ok(combinations(n, k)
        .map(|a| {
            a.iter()
                .enumerate()
                .map(|(i, &x)| (x + 1 - i) as Label)
                .collect()
        })
        .collect())
}

/// The subgraph of `F_k(G)` induced by configurations with exactly one token in each part.
#[derive(Debug, Clone)]
pub struct ConfigSubgraph {
    pub graph: Graph,
    /// Sorted token members (labels) of each vertex.
    pub members: Vec<Vec<Label>>,
    /// `choice[v][i]` is the label picked from `parts[i]`; the natural map to
    /// `G[part_1] □ ... □ G[part_k]`.
    pub choice: Vec<Vec<Label>>,
}

pub fn token_config_subgraph(base: &Graph, parts: &[Vec<Label>]) -> Result<ConfigSubgraph> {
    if parts.is_empty() || parts.iter().any(Vec::is_empty) {
        return Err(Error::invalid("token configuration parts must be nonempty"));
    }
    let mut owner = vec![usize::MAX; base.n()];
    let mut idx_parts = Vec::with_capacity(parts.len());
    for (p, part) in parts.iter().enumerate() {
        let mut idx = base.indices_of(part)?;
        idx.sort_unstable();
        for &v in &idx {
            if owner[v] != usize::MAX {
                return Err(Error::invalid(format!(
                    "parts overlap at vertex {}",
                    base.label(v)
                )));
            }
            owner[v] = p;
        }
        idx_parts.push(idx);
    }
    // mixed-radix enumeration over one choice per part
    let total: usize = idx_parts.iter().map(Vec::len).product();
    let mut choices: Vec<Vec<usize>> = Vec::with_capacity(total);
    let mut cur = vec![0usize; parts.len()];
    for _ in 0..total {
        choices.push(
            cur.iter()
                .enumerate()
                .map(|(p, &i)| idx_parts[p][i])
                .collect(),
        );
        for p in (0..parts.len()).rev() {
            cur[p] += 1;
            if cur[p] < idx_parts[p].len() {
                break;
            }
            cur[p] = 0;
        }
    }
    let sorted: Vec<Vec<usize>> = choices
        .iter()
        .map(|c| {
            let mut s = c.clone();
            s.sort_unstable();
            s
        })
        .collect();
    let mut edges = Vec::new();
    for a in 0..total {
        for b in a + 1..total {
            if let Some((x, y)) = single_swap(&sorted[a], &sorted[b]) {
                if base.has_edge(x, y) {
                    edges.push((a, b));
                }
            }
        }
    }
    let to_labels = |v: &Vec<usize>| v.iter().map(|&i| base.label(i)).collect::<Vec<_>>();
    Ok(ConfigSubgraph {
        graph: Graph::indexed(total, edges),
        members: sorted.iter().map(to_labels).collect(),
        choice: choices.iter().map(to_labels).collect(),
    })
}

/// For sorted equal-length sets with `|A △ B| = 2`, returns `(A \ B, B \ A)`.
fn single_swap(a: &[usize], b: &[usize]) -> Option<(usize, usize)> {
    let only_a: Vec<usize> = a
        .iter()
        .copied()
        .filter(|x| b.binary_search(x).is_err())
        .collect();
    let only_b: Vec<usize> = b
        .iter()
        .copied()
        .filter(|x| a.binary_search(x).is_err())
        .collect();
    match (only_a.as_slice(), only_b.as_slice()) {
        ([x], [y]) => Some((*x, *y)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_product_of, find_isomorphism, generate, is_isomorphism};

    fn f(family: Family, n: usize, k: usize) -> TokenGraph {
        token_graph(&generate(family, n).unwrap(), k).unwrap()
    }

    /// Symmetric-difference rule applied to every pair of k-subsets.
    fn brute_force_edges(base: &Graph, k: usize) -> Vec<(usize, usize)> {
        let all: Vec<_> = combinations(base.n(), k).collect();
        let mut out = Vec::new();
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                if let Some((x, y)) = single_swap(&all[i], &all[j]) {
                    if base.has_edge(x, y) {
                        out.push((i, j));
                    }
                }
            }
        }
        out
    }

    #[test]
    fn f2_of_p3_is_a_path() {
        let tg = f(Family::Path, 3, 2);
        assert_eq!(
            tg.to_json().vertex_table,
            vec![vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(tg.graph().edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn f2_of_k4_is_4_regular() {
        let tg = f(Family::Complete, 4, 2);
        assert_eq!(tg.n_vertices(), 6);
        assert!((0..6).all(|v| tg.graph().degree(v) == 4));
    }

    #[test]
    fn one_token_reproduces_base() {
        for fam in [Family::Path, Family::Star, Family::Complete] {
            let base = generate(fam, 5).unwrap();
            let tg = token_graph(&base, 1).unwrap();
            let map: Vec<usize> = (0..base.n()).collect();
            assert!(is_isomorphism(&base, tg.graph(), &map));
        }
    }

    #[test]
    fn k_out_of_range_and_cap() {
        let base = generate(Family::Complete, 4).unwrap();
        assert!(matches!(
            token_graph(&base, 0),
            Err(Error::InvalidParameter(_))
        ));
        assert!(matches!(
            token_graph(&base, 4),
            Err(Error::InvalidParameter(_))
        ));
        let big = generate(Family::Complete, 30).unwrap();
        assert!(matches!(
            token_graph(&big, 8),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(matches!(
            token_graph_capped(&base, 2, 5),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn construction_matches_pairwise_rule() {
        for fam in [Family::Path, Family::Star, Family::Complete] {
            for n in 2..8 {
                let base = generate(fam, n).unwrap();
                for k in 1..base.n() {
                    let tg = token_graph(&base, k).unwrap();
                    assert_eq!(tg.n_vertices() as u128, binomial(base.n() as i64, k as i64));
                    assert_eq!(tg.graph().edges(), brute_force_edges(&base, k).as_slice());
                }
            }
        }
    }

    #[test]
    fn johnson_characterization() {
        for n in 2..=8 {
            for k in 1..n.min(5) {
                let tg = f(Family::Complete, n, k);
                for a in 0..tg.n_vertices() {
                    for b in a + 1..tg.n_vertices() {
                        let common = tg
                            .member_indices(a)
                            .iter()
                            .filter(|x| tg.member_indices(b).contains(x))
                            .count();
                        assert_eq!(tg.graph().has_edge(a, b), common == k - 1);
                    }
                }
            }
        }
    }

    #[test]
    fn complement_map_preserves_adjacency() {
        assert_eq!(
            complement_members(&generate(Family::Complete, 4).unwrap(), &[1, 3]),
            vec![2, 4]
        );
        for fam in [Family::Path, Family::Star, Family::Complete] {
            for n in 2..=7 {
                let base = generate(fam, n).unwrap();
                let nn = base.n();
                for k in 1..nn {
                    let a = token_graph(&base, k).unwrap();
                    let b = token_graph(&base, nn - k).unwrap();
                    let map = complement_isomorphism(nn, k).unwrap();
                    assert!(
                        is_isomorphism(a.graph(), b.graph(), &map),
                        "{fam} n={n} k={k}"
                    );
                }
            }
        }
        let p4 = generate(Family::Path, 4).unwrap();
        assert_eq!(
            token_graph(&p4, 1).unwrap().graph().edge_count(),
            token_graph(&p4, 3).unwrap().graph().edge_count()
        );
    }

    #[test]
    fn grid_embedding_is_induced_isomorphism() {
        let p4 = generate(Family::Path, 4).unwrap();
        let img = grid_embedding(&p4, 2).unwrap();
        let tg = token_graph(&p4, 2).unwrap();
        assert_eq!(img[tg.index_of(&[2, 4]).unwrap()], vec![2, 3]);
        assert_eq!(
            grid_embedding(&p4, 1).unwrap(),
            vec![vec![1], vec![2], vec![3], vec![4]]
        );
        assert!(grid_embedding(&generate(Family::Star, 3).unwrap(), 2).is_err());

        for n in 2..=8 {
            let base = generate(Family::Path, n).unwrap();
            for k in 1..n.min(4) {
                let tg = token_graph(&base, k).unwrap();
                let img = grid_embedding(&base, k).unwrap();
                let side = generate(Family::Path, n - k + 1).unwrap();
                let factors = vec![&side; k];
                let grid = cartesian_product_of(&factors).unwrap();
                let pos: std::collections::HashMap<&Vec<Label>, usize> = grid
                    .coords
                    .iter()
                    .enumerate()
                    .map(|(i, c)| (c, i))
                    .collect();
                let map: Vec<usize> = img.iter().map(|p| pos[p]).collect();
                let induced = grid.graph.induced_subgraph(&map);
                // induced_subgraph keeps labels = grid indices, sorted
                let relabel: Vec<usize> = map
                    .iter()
                    .map(|m| induced.index_of(*m as Label).unwrap())
                    .collect();
                assert!(
                    is_isomorphism(tg.graph(), &induced, &relabel),
                    "n={n} k={k}"
                );
                if k == 2 {
                    assert!(img.iter().all(|p| p[0] <= p[1]));
                }
            }
        }
    }

    #[test]
    fn config_subgraphs_are_products() {
        let p5 = generate(Family::Path, 5).unwrap();
        let sq = token_config_subgraph(&p5, &[vec![1, 2], vec![4, 5]]).unwrap();
        assert_eq!((sq.graph.n(), sq.graph.edge_count()), (4, 4));

        let single = token_config_subgraph(&p5, &[vec![1], vec![3], vec![5]]).unwrap();
        assert_eq!(single.graph.n(), 1);

        assert!(token_config_subgraph(&p5, &[vec![1, 2], vec![2, 3]]).is_err());

        let p7 = generate(Family::Path, 7).unwrap();
        let parts = [vec![1, 2, 3], vec![5, 6, 7]];
        let grid = token_config_subgraph(&p7, &parts).unwrap();
        assert_eq!((grid.graph.n(), grid.graph.edge_count()), (9, 12));

        let k7 = generate(Family::Complete, 7).unwrap();
        for (base, parts) in [
            (&p7, vec![vec![1, 2, 3], vec![5, 6, 7]]),
            (&p7, vec![vec![1, 2], vec![4, 5], vec![7]]),
            (&k7, vec![vec![1, 2, 3], vec![4, 5]]),
        ] {
            let cs = token_config_subgraph(base, &parts).unwrap();
            let induced: Vec<Graph> = parts
                .iter()
                .map(|p| base.induced_subgraph(&base.indices_of(p).unwrap()))
                .collect();
            let refs: Vec<&Graph> = induced.iter().collect();
            let prod = cartesian_product_of(&refs).unwrap();
            // the natural map is the choice tuple itself
            let pos: std::collections::HashMap<&Vec<Label>, usize> = prod
                .coords
                .iter()
                .enumerate()
                .map(|(i, c)| (c, i))
                .collect();
            let map: Vec<usize> = cs.choice.iter().map(|c| pos[c]).collect();
            assert!(is_isomorphism(&cs.graph, &prod.graph, &map));
            assert!(find_isomorphism(&cs.graph, &prod.graph).is_some());
            // and every configuration really is an F_k(G) edge set
            let tg = token_graph(base, parts.len()).unwrap();
            let idx: Vec<usize> = cs.members.iter().map(|m| tg.index_of(m).unwrap()).collect();
            let sub = tg.graph().induced_subgraph(&idx);
            assert_eq!(sub.edge_count(), cs.graph.edge_count());
        }
    }
}
