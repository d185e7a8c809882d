//! Tree and path decompositions: the data type, the three-condition validator, and the
//! explicit constructions for token graphs of stars and complete graphs.

mod constructions;
mod lex;

pub use constructions::{f2kn_path_decomposition, fkkn_lex_decomposition, star_decomposition};
pub use lex::{
    bag_size_formula, bound_branches, f2kn_exact_treewidth, f3kn_closed_form,
    first_entry_candidates, lex_bag, lex_path_nodes, literal_closed_form_bound, max_bag,
    tail_entry_options, upper_bound_tw_kn, BagIndex, BoundBranch,
};

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::token::HostRef;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    tree: Graph,
    bags: Vec<Vec<usize>>,
    is_path: bool,
}

impl TreeDecomposition {
    /// Tree nodes are `0..bags.len()`. The tree must be connected and acyclic, and a
    /// path when `is_path` is set. Bags are sorted and deduplicated.
    pub fn new(
        tree_edges: Vec<(usize, usize)>,
        bags: Vec<Vec<usize>>,
        is_path: bool,
    ) -> Result<Self> {
        let m = bags.len();
        if let Some(&(a, b)) = tree_edges
            .iter()
            .find(|&&(a, b)| a >= m || b >= m || a == b)
        {
            return Err(Error::invalid(format!(
                "tree edge ({a}, {b}) is not between two distinct nodes"
            )));
        }
        let tree = Graph::indexed(m, tree_edges.clone());
        if tree.edge_count() != tree_edges.len() {
            return Err(Error::invalid("tree has a repeated edge"));
        }
        if m > 0 && (tree.edge_count() != m - 1 || !tree.is_connected()) {
            return Err(Error::invalid(format!(
                "decomposition tree with {m} nodes and {} edges is not a tree",
                tree.edge_count()
            )));
        }
        if is_path && tree.max_degree() > 2 {
            return Err(Error::invalid(
                "path decomposition tree has a node of degree > 2",
            ));
        }
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        Ok(TreeDecomposition {
            tree,
            bags,
            is_path,
        })
    }

    /// A path decomposition over `bags` in the given order.
    pub fn path(bags: Vec<Vec<usize>>) -> Result<Self> {
        let edges = (1..bags.len()).map(|i| (i - 1, i)).collect();
        Self::new(edges, bags, true)
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        self.tree.edges()
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn bag(&self, node: usize) -> &[usize] {
        &self.bags[node]
    }

    pub fn is_path(&self) -> bool {
        self.is_path
    }

    pub fn n_nodes(&self) -> usize {
        self.bags.len()
    }

    /// Largest bag size minus one.
    pub fn width(&self) -> Result<usize> {
        let max = self
            .bags
            .iter()
            .map(Vec::len)
            .max()
            .ok_or_else(|| Error::invalid("width of an empty decomposition"))?;
        Ok(max.saturating_sub(1))
    }

    /// Checks the three decomposition conditions against `host`.
    pub fn validate(&self, host: &Graph) -> Result<ValidationReport> {
        let n = host.n();
        if let Some((node, &v)) = self
            .bags
            .iter()
            .enumerate()
            .find_map(|(t, b)| b.iter().find(|&&v| v >= n).map(|v| (t, v)))
        {
            return Err(Error::invalid(format!(
                "bag {node} references vertex {v}, host has {n} vertices"
            )));
        }
        // trace[v] = sorted tree nodes whose bag holds v
        let mut trace = vec![Vec::new(); n];
        for (t, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                trace[v].push(t);
            }
        }

        let coverage = match (0..n).find(|&v| trace[v].is_empty()) {
            Some(v) => Condition::failed(Witness::UncoveredVertex { vertex: v }),
            None => Condition::passed(),
        };

        let edges = match host
            .edges()
            .iter()
            .find(|&&(a, b)| !sorted_intersect(&trace[a], &trace[b]))
        {
            Some(&(a, b)) => Condition::failed(Witness::UncoveredEdge { from: a, to: b }),
            None => Condition::passed(),
        };

        let mut connectivity = Condition::passed();
        let mut in_trace = vec![false; self.n_nodes()];
        for (v, nodes) in trace.iter().enumerate() {
            if nodes.len() <= 1 {
                continue;
            }
            for &t in nodes {
                in_trace[t] = true;
            }
            let reached = bfs_within(&self.tree, nodes[0], &in_trace);
            for &t in nodes {
                in_trace[t] = false;
            }
            if reached < nodes.len() {
                connectivity = Condition::failed(Witness::DisconnectedTrace {
                    vertex: v,
                    nodes: nodes.clone(),
                });
                break;
            }
        }

        Ok(ValidationReport {
            coverage,
            edges,
            connectivity,
        })
    }

    pub fn to_json(&self, host: Option<HostRef>) -> DecompositionJson {
        DecompositionJson {
            is_path: self.is_path,
            tree_edges: self.tree.edges().iter().map(|&(a, b)| [a, b]).collect(),
            bags: self.bags.iter().cloned().enumerate().collect(),
            host,
        }
    }

    pub fn from_json(json: &DecompositionJson) -> Result<Self> {
        let m = json.bags.len();
        if json.bags.keys().enumerate().any(|(i, &id)| i != id) {
            return Err(Error::invalid(format!("bag ids must be exactly 0..{m}")));
        }
        Self::new(
            json.tree_edges.iter().map(|e| (e[0], e[1])).collect(),
            json.bags.values().cloned().collect(),
            json.is_path,
        )
    }
}

fn sorted_intersect(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Number of nodes reachable from `start` without leaving `allowed`.
fn bfs_within(tree: &Graph, start: usize, allowed: &[bool]) -> usize {
    let mut seen = vec![false; tree.n()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut count = 0;
    while let Some(u) = queue.pop_front() {
        count += 1;
        for &w in tree.neighbors(u) {
            if allowed[w] && !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    count
}

/// `{"is_path":bool,"tree_edges":[[id,id]..],"bags":{"id":[token_index..]}}` plus the host.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub is_path: bool,
    pub tree_edges: Vec<[usize; 2]>,
    pub bags: BTreeMap<usize, Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub host: Option<HostRef>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    UncoveredVertex { vertex: usize },
    UncoveredEdge { from: usize, to: usize },
    DisconnectedTrace { vertex: usize, nodes: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Condition {
    fn passed() -> Self {
        Condition {
            passed: true,
            witness: None,
        }
    }

    fn failed(w: Witness) -> Self {
        Condition {
            passed: false,
            witness: Some(w),
        }
    }
}

/// Outcome of the three checks: vertex coverage, edge coverage, connected traces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub coverage: Condition,
    pub edges: Condition,
    pub connectivity: Condition,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.coverage.passed && self.edges.passed && self.connectivity.passed
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::token::token_graph;

    #[test]
    fn tree_shape_is_enforced() {
        assert!(
            TreeDecomposition::new(vec![(0, 1), (1, 2), (2, 0)], vec![vec![]; 3], false).is_err()
        );
        assert!(TreeDecomposition::new(vec![(0, 1)], vec![vec![]; 3], false).is_err());
        assert!(
            TreeDecomposition::new(vec![(0, 1), (0, 2), (0, 3)], vec![vec![]; 4], true).is_err()
        );
        assert!(TreeDecomposition::new(vec![(0, 5)], vec![vec![]; 2], false).is_err());
        assert!(
            TreeDecomposition::new(vec![(0, 1), (0, 2), (0, 3)], vec![vec![]; 4], false).is_ok()
        );
    }

    #[test]
    fn width_of_singletons_and_empty() {
        let d = TreeDecomposition::path(vec![vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(d.width().unwrap(), 0);
        let empty = TreeDecomposition::new(vec![], vec![], false).unwrap();
        assert!(matches!(empty.width(), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn validator_witnesses() {
        let p4 = generate(Family::Path, 4).unwrap();
        let good = TreeDecomposition::path(vec![vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap();
        assert!(good.validate(&p4).unwrap().is_valid());

        let missing = TreeDecomposition::path(vec![vec![0, 1], vec![1, 2]]).unwrap();
        let r = missing.validate(&p4).unwrap();
        assert_eq!(
            r.coverage.witness,
            Some(Witness::UncoveredVertex { vertex: 3 })
        );
        assert!(!r.edges.passed);

        let no_edge = TreeDecomposition::path(vec![vec![0, 1], vec![2], vec![3]]).unwrap();
        let r = no_edge.validate(&p4).unwrap();
        assert!(r.coverage.passed);
        assert_eq!(
            r.edges.witness,
            Some(Witness::UncoveredEdge { from: 1, to: 2 })
        );

        let broken =
            TreeDecomposition::path(vec![vec![0, 1], vec![1, 2, 3], vec![2], vec![3]]).unwrap();
        let r = broken.validate(&p4).unwrap();
        assert!(r.coverage.passed && r.edges.passed);
        assert_eq!(
            r.connectivity.witness,
            Some(Witness::DisconnectedTrace {
                vertex: 3,
                nodes: vec![1, 3]
            })
        );

        let bad = TreeDecomposition::path(vec![vec![0, 9]]).unwrap();
        assert!(matches!(bad.validate(&p4), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn star_fig_perturbations() {
        let tg = token_graph(&generate(Family::Star, 4).unwrap(), 2).unwrap();
        let d = star_decomposition(4, 2).unwrap();
        assert!(d.validate(tg.graph()).unwrap().is_valid());

        // drop a leaf bag: its private vertex {a,b} disappears
        let mut bags = d.bags().to_vec();
        let leaf = bags.len() - 1;
        bags[leaf].clear();
        let dropped = TreeDecomposition::new(d.tree_edges().to_vec(), bags, false).unwrap();
        let r = dropped.validate(tg.graph()).unwrap();
        assert!(!r.coverage.passed || !r.edges.passed);

        // put a token vertex into two leaves only: leaves meet only through the centre
        let mut bags = d.bags().to_vec();
        let v = tg.index_of(&[1, 2]).unwrap();
        bags[5].push(v);
        let split = TreeDecomposition::new(d.tree_edges().to_vec(), bags, false).unwrap();
        let r = split.validate(tg.graph()).unwrap();
        assert!(r.coverage.passed && r.edges.passed);
        assert!(!r.connectivity.passed);
    }

    #[test]
    fn json_round_trip() {
        let d = star_decomposition(4, 2).unwrap();
        let host = HostRef {
            family: Family::Star,
            n: 4,
            k: 2,
        };
        let text = serde_json::to_string(&d.to_json(Some(host))).unwrap();
        assert!(text.starts_with(r#"{"is_path":false,"tree_edges":[[0,1],"#));
        assert!(text.contains(r#""bags":{"0":["#));
        let back: DecompositionJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.host, Some(host));
        assert_eq!(TreeDecomposition::from_json(&back).unwrap(), d);

        let mut gap = back.clone();
        let last = gap.bags.pop_last().unwrap();
        gap.bags.insert(99, last.1);
        assert!(TreeDecomposition::from_json(&gap).is_err());
    }
}
