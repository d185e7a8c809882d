//! Undirected simple graphs over explicit integer labels.
//!
//! Vertices are stored in ascending label order and addressed internally by their
//! position in that order (the vertex *index*). Every other module works with indices;
//! labels only matter at the boundaries (generators, JSON, user-facing sets).

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Label = i64;

/// The three base families: `P_n` on `1..=n`, `S_n` on `0..=n` with center `0`,
/// and `K_n` on `1..=n`.
#[derive(
    Debug,
    Clone,
    Copy,
    PartialEq,
    Eq,
    Hash,
    PartialOrd,
    Ord,
    Serialize,
    Deserialize,
    clap::ValueEnum,
)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Path,
    Star,
    Complete,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Path => "path",
            Family::Star => "star",
            Family::Complete => "complete",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

/// Exchange format: `{"labels":[..],"edges":[[a,b],..]}` with `a < b`, edges sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub labels: Vec<Label>,
    pub edges: Vec<[Label; 2]>,
}

impl Graph {
    /// Builds a graph from labels and labelled edges. Rejects duplicate labels,
    /// self-loops, duplicate edges and edges naming undeclared labels.
    pub fn new(
        labels: Vec<Label>,
        edges: impl IntoIterator<Item = (Label, Label)>,
    ) -> Result<Self> {
        let mut sorted = labels;
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("duplicate vertex label {}", w[0])));
        }
        let index: HashMap<Label, usize> =
            sorted.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let mut pairs = Vec::new();
        for (a, b) in edges {
            let ia = *index
                .get(&a)
                .ok_or_else(|| Error::invalid(format!("edge endpoint {a} is not a vertex")))?;
            let ib = *index
                .get(&b)
                .ok_or_else(|| Error::invalid(format!("edge endpoint {b} is not a vertex")))?;
            if ia == ib {
                return Err(Error::invalid(format!("self-loop at {a}")));
            }
            pairs.push((ia.min(ib), ia.max(ib)));
        }
        pairs.sort_unstable();
        if let Some(w) = pairs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!(
                "duplicate edge {{{}, {}}}",
                sorted[w[0].0], sorted[w[0].1]
            )));
        }
        Ok(Self::assemble(sorted, index, pairs))
    }

    /// Internal constructor over index pairs; sorts and deduplicates.
    /// Labels must already be strictly increasing.
    pub(crate) fn from_index_edges(labels: Vec<Label>, mut edges: Vec<(usize, usize)>) -> Self {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        for e in edges.iter_mut() {
            debug_assert!(e.0 != e.1);
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        let index = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        Self::assemble(labels, index, edges)
    }

    /// Graph on labels `0..n`.
    pub(crate) fn indexed(n: usize, edges: Vec<(usize, usize)>) -> Self {
        Self::from_index_edges((0..n as Label).collect(), edges)
    }

    fn assemble(
        labels: Vec<Label>,
        index: HashMap<Label, usize>,
        edges: Vec<(usize, usize)>,
    ) -> Self {
        let mut adjacency = vec![Vec::new(); labels.len()];
        for &(a, b) in &edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for nb in adjacency.iter_mut() {
            nb.sort_unstable();
        }
        Graph {
            labels,
            index,
            adjacency,
            edges,
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Label {
        self.labels[v]
    }

    pub fn index_of(&self, label: Label) -> Option<usize> {
        self.index.get(&label).copied()
    }

    /// Maps labels to indices, failing on the first unknown label.
    pub fn indices_of(&self, labels: &[Label]) -> Result<Vec<usize>> {
        labels
            .iter()
            .map(|&l| {
                self.index_of(l)
                    .ok_or_else(|| Error::invalid(format!("unknown vertex label {l}")))
            })
            .collect()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as index pairs `(a, b)` with `a < b`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Neighbourhoods as bitmasks; `None` when the graph has more than 64 vertices.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        if self.n() > 64 {
            return None;
        }
        Some(
            self.adjacency
                .iter()
                .map(|nb| nb.iter().fold(0u64, |m, &w| m | (1 << w)))
                .collect(),
        )
    }

    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let all: Vec<usize> = (0..self.n()).collect();
        self.component_indices(&all).len() == 1
    }

    /// Connected components of the induced subgraph on `vertices` (indices).
    /// Components are sorted internally and ordered by their smallest vertex.
    pub fn component_indices(&self, vertices: &[usize]) -> Vec<Vec<usize>> {
        let mut inside = vec![false; self.n()];
        for &v in vertices {
            inside[v] = true;
        }
        let mut seen = vec![false; self.n()];
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        let mut out = Vec::new();
        for &s in &sorted {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if inside[w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Connected components of `G[S]` for a set of labels.
    pub fn components(&self, labels: &[Label]) -> Result<Vec<Vec<Label>>> {
        let idx = self.indices_of(labels)?;
        Ok(self
            .component_indices(&idx)
            .into_iter()
            .map(|c| c.into_iter().map(|v| self.labels[v]).collect())
            .collect())
    }

    /// Induced subgraph on the given indices; labels are kept.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let pos: HashMap<usize, usize> = vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges = Vec::new();
        for (i, &v) in vs.iter().enumerate() {
            for w in &self.adjacency[v] {
                if let Some(&j) = pos.get(w) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        Graph::from_index_edges(vs.iter().map(|&v| self.labels[v]).collect(), edges)
    }

    /// Dense Laplacian `D - A` in label order.
    pub fn laplacian(&self) -> Vec<Vec<f64>> {
        let n = self.n();
        let mut l = vec![vec![0.0; n]; n];
        for (v, row) in l.iter_mut().enumerate() {
            row[v] = self.degree(v) as f64;
        }
        for &(a, b) in &self.edges {
            l[a][b] = -1.0;
            l[b][a] = -1.0;
        }
        l
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            labels: self.labels.clone(),
            edges: self
                .edges
                .iter()
                .map(|&(a, b)| [self.labels[a], self.labels[b]])
                .collect(),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Self> {
        Graph::new(json.labels.clone(), json.edges.iter().map(|e| (e[0], e[1])))
    }
}

/// Generates `P_n`, `S_n` (n leaves) or `K_n`.
pub fn generate(family: Family, n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid(format!("{family} needs n >= 1")));
    }
    let g = match family {
        Family::Path => Graph::from_index_edges(
            (1..=n as Label).collect(),
            (1..n).map(|i| (i - 1, i)).collect(),
        ),
        Family::Star => Graph::from_index_edges(
            (0..=n as Label).collect(),
            (1..=n).map(|i| (0, i)).collect(),
        ),
        Family::Complete => {
            let mut edges = Vec::with_capacity(n * (n - 1) / 2);
            for a in 0..n {
                for b in a + 1..n {
                    edges.push((a, b));
                }
            }
            Graph::from_index_edges((1..=n as Label).collect(), edges)
        }
    };
    Ok(g)
}

/// A Cartesian product with its vertices flattened to labels `0..N`.
/// `coords[v]` holds the factor labels of product vertex `v`; vertices are numbered
/// in lexicographic order of their factor index tuples.
#[derive(Debug, Clone)]
pub struct Product {
    pub graph: Graph,
    pub coords: Vec<Vec<Label>>,
}

pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Product> {
    cartesian_product_of(&[g, h])
}

/// `G_1 □ G_2 □ ... □ G_d`.
pub fn cartesian_product_of(factors: &[&Graph]) -> Result<Product> {
    if factors.is_empty() {
        return Err(Error::invalid(
            "cartesian product needs at least one factor",
        ));
    }
    if let Some(i) = factors.iter().position(|f| f.is_empty()) {
        return Err(Error::invalid(format!(
            "cartesian product factor {i} is empty"
        )));
    }
    let sizes: Vec<usize> = factors.iter().map(|f| f.n()).collect();
    let total: usize = sizes.iter().product();
    // stride[i] = product of sizes after position i (row-major numbering)
    let mut stride = vec![1usize; sizes.len()];
    for i in (0..sizes.len() - 1).rev() {
        stride[i] = stride[i + 1] * sizes[i + 1];
    }
    let mut coords = Vec::with_capacity(total);
    let mut edges = Vec::new();
    for v in 0..total {
        let tuple: Vec<usize> = (0..sizes.len())
            .map(|i| (v / stride[i]) % sizes[i])
            .collect();
        for (i, f) in factors.iter().enumerate() {
            for &w in f.neighbors(tuple[i]) {
                if w > tuple[i] {
                    edges.push((v, v + (w - tuple[i]) * stride[i]));
                }
            }
        }
        coords.push(
            tuple
                .iter()
                .enumerate()
                .map(|(i, &t)| factors[i].label(t))
                .collect(),
        );
    }
    Ok(Product {
        graph: Graph::indexed(total, edges),
        coords,
    })
}

/// Checks that `map` (indices of `g` to indices of `h`) is an isomorphism.
pub fn is_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() || map.len() != g.n() {
        return false;
    }
    let mut hit = vec![false; h.n()];
    for &m in map {
        if m >= h.n() || hit[m] {
            return false;
        }
        hit[m] = true;
    }
    g.edges().iter().all(|&(a, b)| h.has_edge(map[a], map[b]))
}

/// Backtracking isomorphism search for small graphs. Returns a map from the
/// indices of `g` to the indices of `h`.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let mut gd: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut hd: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    gd.sort_unstable();
    hd.sort_unstable();
    if gd != hd {
        return None;
    }
    // visit g's vertices in BFS order so each new vertex has mapped neighbours
    let mut order = Vec::with_capacity(g.n());
    let mut seen = vec![false; g.n()];
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; g.n()];
    let mut used = vec![false; h.n()];
    fn extend(
        g: &Graph,
        h: &Graph,
        order: &[usize],
        depth: usize,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for c in 0..h.n() {
            if used[c] || h.degree(c) != g.degree(v) {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], c));
            if !consistent {
                continue;
            }
            map[v] = c;
            used[c] = true;
            if extend(g, h, order, depth + 1, map, used) {
                return true;
            }
            used[c] = false;
            map[v] = usize::MAX;
        }
        false
    }
    if extend(g, h, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label_edges(g: &Graph) -> Vec<[Label; 2]> {
        g.to_json().edges
    }

    #[test]
    fn generators_match_definitions() {
        let p3 = generate(Family::Path, 3).unwrap();
        assert_eq!(label_edges(&p3), vec![[1, 2], [2, 3]]);
        let s3 = generate(Family::Star, 3).unwrap();
        assert_eq!(label_edges(&s3), vec![[0, 1], [0, 2], [0, 3]]);
        assert_eq!(generate(Family::Complete, 4).unwrap().edge_count(), 6);
        assert!(generate(Family::Path, 0).is_err());
        assert!(generate(Family::Star, 0).is_err());
    }

    #[test]
    fn edge_counts_follow_closed_forms() {
        for n in 1..12 {
            assert_eq!(generate(Family::Path, n).unwrap().edge_count(), n - 1);
            assert_eq!(generate(Family::Star, n).unwrap().edge_count(), n);
            assert_eq!(
                generate(Family::Complete, n).unwrap().edge_count(),
                n * (n - 1) / 2
            );
        }
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert!(Graph::new(vec![1, 1], []).is_err());
        assert!(Graph::new(vec![1, 2], [(1, 1)]).is_err());
        assert!(Graph::new(vec![1, 2], [(1, 3)]).is_err());
        assert!(Graph::new(vec![1, 2], [(1, 2), (2, 1)]).is_err());
        let g = Graph::new(vec![5, -2, 7], [(7, -2)]).unwrap();
        assert_eq!(g.labels(), &[-2, 5, 7]);
        assert_eq!(label_edges(&g), vec![[-2, 7]]);
    }

    #[test]
    fn small_products() {
        let p2 = generate(Family::Path, 2).unwrap();
        let sq = cartesian_product(&p2, &p2).unwrap();
        assert_eq!(sq.graph.n(), 4);
        assert_eq!(sq.graph.edge_count(), 4);
        assert!((0..4).all(|v| sq.graph.degree(v) == 2));

        let p3 = generate(Family::Path, 3).unwrap();
        let grid = cartesian_product(&p3, &p3).unwrap();
        assert_eq!((grid.graph.n(), grid.graph.edge_count()), (9, 12));
        assert_eq!(grid.coords[4], vec![2, 2]);

        let k1 = generate(Family::Complete, 1).unwrap();
        let s4 = generate(Family::Star, 4).unwrap();
        let same = cartesian_product(&s4, &k1).unwrap();
        assert!(find_isomorphism(&same.graph, &s4).is_some());
    }

    #[test]
    fn product_counts() {
        let fams = [Family::Path, Family::Star, Family::Complete];
        for &f in &fams {
            for &h in &fams {
                for a in 1..5 {
                    for b in 1..5 {
                        let g1 = generate(f, a).unwrap();
                        let g2 = generate(h, b).unwrap();
                        let p = cartesian_product(&g1, &g2).unwrap().graph;
                        assert_eq!(p.n(), g1.n() * g2.n());
                        assert_eq!(
                            p.edge_count(),
                            g1.n() * g2.edge_count() + g2.n() * g1.edge_count()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn components_of_induced_sets() {
        let p5 = generate(Family::Path, 5).unwrap();
        assert_eq!(p5.components(&[1, 3]).unwrap(), vec![vec![1], vec![3]]);
        assert_eq!(p5.components(&[3, 1, 2]).unwrap(), vec![vec![1, 2, 3]]);
        assert!(p5.components(&[]).unwrap().is_empty());
        assert!(p5.components(&[9]).is_err());
    }

    #[test]
    fn laplacians() {
        let p2 = generate(Family::Path, 2).unwrap();
        assert_eq!(p2.laplacian(), vec![vec![1.0, -1.0], vec![-1.0, 1.0]]);
        let k3 = generate(Family::Complete, 3).unwrap().laplacian();
        assert_eq!((0..3).map(|i| k3[i][i]).collect::<Vec<_>>(), vec![2.0; 3]);
        let s2 = generate(Family::Star, 2).unwrap().laplacian();
        assert_eq!(
            (0..3).map(|i| s2[i][i]).collect::<Vec<_>>(),
            vec![2.0, 1.0, 1.0]
        );
        for f in [Family::Path, Family::Star, Family::Complete] {
            let l = generate(f, 6).unwrap().laplacian();
            for (i, row) in l.iter().enumerate() {
                assert_eq!(row.iter().sum::<f64>(), 0.0);
                for (j, v) in row.iter().enumerate() {
                    assert_eq!(*v, l[j][i]);
                }
            }
        }
    }

    #[test]
    fn json_round_trip_is_sorted() {
        let g = Graph::new(vec![3, 1, 2], [(3, 1), (2, 1)]).unwrap();
        let json = serde_json::to_string(&g.to_json()).unwrap();
        assert_eq!(json, r#"{"labels":[1,2,3],"edges":[[1,2],[1,3]]}"#);
        let back: GraphJson = serde_json::from_str(&json).unwrap();
        assert_eq!(Graph::from_json(&back).unwrap(), g);
    }

    #[test]
    fn isomorphism_search() {
        let c4 = Graph::new(vec![1, 2, 3, 4], [(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let p4 = generate(Family::Path, 4).unwrap();
        let s3 = generate(Family::Star, 3).unwrap();
        assert!(find_isomorphism(&p4, &s3).is_none());
        let p2 = generate(Family::Path, 2).unwrap();
        let sq = cartesian_product(&p2, &p2).unwrap().graph;
        let m = find_isomorphism(&c4, &sq).unwrap();
        assert!(is_isomorphism(&c4, &sq, &m));
        assert!(find_isomorphism(&c4, &p4).is_none());
    }
}
