//! Brambles: families of connected, pairwise touching vertex sets.
//!
//! The order of a bramble (the smallest hitting set) minus one is a lower bound on
//! treewidth. [`Bramble::min_hitting_set`] computes the order exactly, and the two
//! constructions below produce the brambles for `F_2(S_n)` and `F_2(K_n)`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subsets::{combinations, rank};
use crate::token::HostRef;

pub const DEFAULT_MAX_BRAMBLE_SETS: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bramble {
    sets: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrambleJson {
    pub sets: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub host: Option<HostRef>,
}

/// How two bramble sets touch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Touch {
    Shared { vertex: usize },
    Edge { from: usize, to: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisconnectedSet {
    pub set: usize,
    pub components: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BrambleReport {
    /// Per set: does it induce a connected subgraph.
    pub connected: Vec<bool>,
    pub disconnected: Vec<DisconnectedSet>,
    pub pairs_checked: usize,
    /// Pairs `(i, j)`, `i < j`, that neither share a vertex nor are joined by an edge.
    pub non_touching: Vec<(usize, usize)>,
}

impl BrambleReport {
    pub fn is_valid(&self) -> bool {
        self.disconnected.is_empty() && self.non_touching.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HittingSet {
    pub size: usize,
    pub witness: Vec<usize>,
}

#[derive(Debug, Clone, Copy)]
pub struct HittingSetCaps {
    pub max_universe: usize,
    pub max_sets: usize,
    /// Search-tree nodes before giving up.
    pub max_nodes: u64,
}

impl Default for HittingSetCaps {
    fn default() -> Self {
        HittingSetCaps {
            max_universe: 4096,
            max_sets: 200_000,
            max_nodes: 500_000_000,
        }
    }
}

impl Bramble {
    /// Sorts each set and drops repeated sets, keeping first occurrences in order.
    pub fn new(sets: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(sets.len());
        for mut s in sets {
            s.sort_unstable();
            s.dedup();
            if s.is_empty() {
                return Err(Error::invalid("bramble sets must be nonempty"));
            }
            if seen.insert(s.clone()) {
                out.push(s);
            }
        }
        Ok(Bramble { sets: out })
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn validate(&self, host: &Graph) -> Result<BrambleReport> {
        self.check_indices(host)?;
        let mut connected = Vec::with_capacity(self.len());
        let mut disconnected = Vec::new();
        for (i, s) in self.sets.iter().enumerate() {
            let comps = host.component_indices(s);
            connected.push(comps.len() == 1);
            if comps.len() != 1 {
                disconnected.push(DisconnectedSet {
                    set: i,
                    components: comps,
                });
            }
        }
        let mut non_touching = Vec::new();
        let mut near = vec![false; host.n()];
        for i in 0..self.len() {
            for &v in &self.sets[i] {
                near[v] = true;
                for &w in host.neighbors(v) {
                    near[w] = true;
                }
            }
            for j in i + 1..self.len() {
                if !self.sets[j].iter().any(|&v| near[v]) {
                    non_touching.push((i, j));
                }
            }
            for &v in &self.sets[i] {
                near[v] = false;
                for &w in host.neighbors(v) {
                    near[w] = false;
                }
            }
        }
        let m = self.len();
        Ok(BrambleReport {
            connected,
            disconnected,
            pairs_checked: m * m.saturating_sub(1) / 2,
            non_touching,
        })
    }

    /// A concrete reason why sets `i` and `j` touch, if they do.
    pub fn touch_witness(&self, host: &Graph, i: usize, j: usize) -> Option<Touch> {
        let (a, b) = (&self.sets[i], &self.sets[j]);
        if let Some(&v) = a.iter().find(|v| b.binary_search(v).is_ok()) {
            return Some(Touch::Shared { vertex: v });
        }
        a.iter().find_map(|&u| {
            host.neighbors(u)
                .iter()
                .find(|w| b.binary_search(w).is_ok())
                .map(|&w| Touch::Edge { from: u, to: w })
        })
    }

    fn check_indices(&self, host: &Graph) -> Result<()> {
        match self.sets.iter().flatten().find(|&&v| v >= host.n()) {
            Some(v) => Err(Error::invalid(format!(
                "bramble references vertex {v}, host has {} vertices",
                host.n()
            ))),
            None => Ok(()),
        }
    }

    pub fn min_hitting_set(&self) -> Result<HittingSet> {
        self.min_hitting_set_capped(HittingSetCaps::default())
    }

    /// Exact minimum hitting set by branch and bound.
    pub fn min_hitting_set_capped(&self, caps: HittingSetCaps) -> Result<HittingSet> {
        hitting::solve(&self.sets, caps)
    }

    pub fn to_json(&self, host: Option<HostRef>) -> BrambleJson {
        BrambleJson {
            sets: self.sets.clone(),
            host,
        }
    }

    pub fn from_json(json: &BrambleJson) -> Result<Self> {
        Bramble::new(json.sets.clone())
    }
}

/// `B_i = {{s, i} : 0 <= s < i}` for i = 1..=n, on `F_2(S_n)`. Pairwise disjoint, so the
/// order is exactly n.
pub fn star_bramble(n: usize) -> Result<Bramble> {
    if n < 2 {
        return Err(Error::invalid(format!(
            "star bramble needs n >= 2, got {n}"
        )));
    }
    Bramble::new(
        (1..=n)
            .map(|i| (0..i).map(|s| rank(&[s, i], n + 1)).collect())
            .collect(),
    )
}

/// Lower bound the `F_2(K_n)` bramble is built to reach: `n/2 (n/2 - 1) + n - 1` for
/// even n, `((n-1)/2)^2 + n - 1` for odd n.
pub fn kn_bramble_order_bound(n: usize) -> usize {
    if n.is_multiple_of(2) {
        (n / 2) * (n / 2 - 1) + n - 1
    } else {
        ((n - 1) / 2).pow(2) + n - 1
    }
}

/// Bramble on `F_2(K_n)`, whose vertices are the edges of `K_n`.
///
/// Odd n: the edge sets of all paths of `K_n` with `(n+1)/2` vertices.
/// Even n: the same construction inside `K_{n-1}` (pairs avoiding n), together with every
/// `n/2`-subset of the pairs `{a, n}`.
pub fn kn_bramble(n: usize) -> Result<Bramble> {
    kn_bramble_capped(n, DEFAULT_MAX_BRAMBLE_SETS)
}

pub fn kn_bramble_capped(n: usize, max_sets: usize) -> Result<Bramble> {
    if n < 4 {
        return Err(Error::invalid(format!(
            "F_2(K_n) bramble needs n >= 4, got {n}"
        )));
    }
    let pair = |a: usize, b: usize| rank(&[a.min(b), a.max(b)], n);
    let mut sets = if n % 2 == 1 {
        path_edge_sets(n, n.div_ceil(2), max_sets, &pair)?
    } else {
        path_edge_sets(n - 1, n / 2, max_sets, &pair)?
    };
    if n.is_multiple_of(2) {
        let star: Vec<usize> = (0..n - 1).map(|a| pair(a, n - 1)).collect();
        let extra = crate::subsets::binomial((n - 1) as i64, (n / 2) as i64);
        if sets.len() as u128 + extra > max_sets as u128 {
            return Err(Error::limit(
                "bramble sets",
                sets.len() as u128 + extra,
                max_sets as u128,
            ));
        }
        sets.extend(combinations(n - 1, n / 2).map(|c| c.iter().map(|&i| star[i]).collect()));
    }
    Bramble::new(sets)
}

/// Edge sets (as token indices) of all paths with `m` vertices in the complete graph on
/// `0..n`, one per path up to reversal.
fn path_edge_sets(
    n: usize,
    m: usize,
    max_sets: usize,
    pair: &dyn Fn(usize, usize) -> usize,
) -> Result<Vec<Vec<usize>>> {
    let ordered: u128 = (0..m).map(|i| (n - i) as u128).product();
    let count = if m >= 2 { ordered / 2 } else { ordered };
    if count > max_sets as u128 {
        return Err(Error::limit("bramble sets", count, max_sets as u128));
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut path = Vec::with_capacity(m);
    let mut used = vec![false; n];
    fn walk(
        n: usize,
        m: usize,
        path: &mut Vec<usize>,
        used: &mut [bool],
        pair: &dyn Fn(usize, usize) -> usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if path.len() == m {
            // keep one orientation of each path
            if path[0] < path[m - 1] {
                out.push(path.windows(2).map(|w| pair(w[0], w[1])).collect());
            }
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                path.push(v);
                walk(n, m, path, used, pair, out);
                path.pop();
                used[v] = false;
            }
        }
    }
    walk(n, m, &mut path, &mut used, pair, &mut out);
    Ok(out)
}

mod hitting {
    //! Branch and bound for minimum hitting set over bitsets.
    //!
    //! Branching is on the elements of the unhit set with the fewest available elements;
    //! elements tried in earlier sibling branches are forbidden in later ones. The lower
    //! bound is a greedy maximal family of pairwise disjoint unhit sets.

    use super::{HittingSet, HittingSetCaps};
    use crate::error::{Error, Result};

    type Bits = Vec<u64>;

    fn has(b: &Bits, i: usize) -> bool {
        b[i / 64] >> (i % 64) & 1 == 1
    }

    fn set(b: &mut Bits, i: usize) {
        b[i / 64] |= 1 << (i % 64);
    }

    fn clear(b: &mut Bits, i: usize) {
        b[i / 64] &= !(1 << (i % 64));
    }

    fn count_available(s: &Bits, forbidden: &Bits) -> u32 {
        s.iter()
            .zip(forbidden)
            .map(|(a, f)| (a & !f).count_ones())
            .sum()
    }

    struct Search {
        sets: Vec<Bits>,
        universe: usize,
        best: Vec<usize>,
        nodes: u64,
        max_nodes: u64,
    }

    pub(super) fn solve(raw: &[Vec<usize>], caps: HittingSetCaps) -> Result<HittingSet> {
        if raw.is_empty() {
            return Ok(HittingSet {
                size: 0,
                witness: vec![],
            });
        }
        if raw.len() > caps.max_sets {
            return Err(Error::limit(
                "hitting-set sets",
                raw.len() as u128,
                caps.max_sets as u128,
            ));
        }
        let mut elements: Vec<usize> = raw.iter().flatten().copied().collect();
        elements.sort_unstable();
        elements.dedup();
        if elements.len() > caps.max_universe {
            return Err(Error::limit(
                "hitting-set universe",
                elements.len() as u128,
                caps.max_universe as u128,
            ));
        }
        let u = elements.len();
        let words = u.div_ceil(64);
        let mut sets: Vec<Bits> = raw
            .iter()
            .map(|s| {
                let mut b = vec![0u64; words];
                for v in s {
                    set(&mut b, elements.binary_search(v).unwrap());
                }
                b
            })
            .collect();
        // a superset is hit whenever its subset is
        sets.sort_by_key(|b| b.iter().map(|w| w.count_ones()).sum::<u32>());
        let mut minimal: Vec<Bits> = Vec::new();
        for s in sets {
            let dominated = minimal
                .iter()
                .any(|m| m.iter().zip(&s).all(|(a, b)| a & !b == 0));
            if !dominated {
                minimal.push(s);
            }
        }

        let mut search = Search {
            best: greedy(&minimal, u),
            sets: minimal,
            universe: u,
            nodes: 0,
            max_nodes: caps.max_nodes,
        };
        let unhit: Vec<usize> = (0..search.sets.len()).collect();
        let mut chosen = Vec::new();
        let mut forbidden = vec![0u64; words];
        search.branch(&unhit, &mut chosen, &mut forbidden)?;
        let mut witness: Vec<usize> = search.best.iter().map(|&e| elements[e]).collect();
        witness.sort_unstable();
        Ok(HittingSet {
            size: witness.len(),
            witness,
        })
    }

    fn greedy(sets: &[Bits], u: usize) -> Vec<usize> {
        let mut unhit: Vec<usize> = (0..sets.len()).collect();
        let mut picked = Vec::new();
        while !unhit.is_empty() {
            let mut freq = vec![0usize; u];
            for &s in &unhit {
                for (e, f) in freq.iter_mut().enumerate() {
                    if has(&sets[s], e) {
                        *f += 1;
                    }
                }
            }
            let e = (0..u)
                .max_by_key(|&e| (freq[e], std::cmp::Reverse(e)))
                .unwrap();
            picked.push(e);
            unhit.retain(|&s| !has(&sets[s], e));
        }
        picked
    }

    impl Search {
        fn lower_bound(&self, unhit: &[usize], forbidden: &Bits) -> usize {
            let mut order: Vec<(u32, usize)> = unhit
                .iter()
                .map(|&s| (count_available(&self.sets[s], forbidden), s))
                .collect();
            order.sort_unstable();
            let mut used = vec![0u64; forbidden.len()];
            let mut packed = 0;
            for (_, s) in order {
                let avail = self.sets[s].iter().zip(forbidden).map(|(a, f)| a & !f);
                if avail.clone().zip(&used).all(|(a, u)| a & u == 0) {
                    for (u, a) in used.iter_mut().zip(avail) {
                        *u |= a;
                    }
                    packed += 1;
                }
            }
            packed
        }

        fn branch(
            &mut self,
            unhit: &[usize],
            chosen: &mut Vec<usize>,
            forbidden: &mut Bits,
        ) -> Result<()> {
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                return Err(Error::limit(
                    "hitting-set search nodes",
                    self.nodes as u128,
                    self.max_nodes as u128,
                ));
            }
            if unhit.is_empty() {
                if chosen.len() < self.best.len() {
                    self.best = chosen.clone();
                }
                return Ok(());
            }
            if chosen.len() + self.lower_bound(unhit, forbidden) >= self.best.len() {
                return Ok(());
            }
            let &target = unhit
                .iter()
                .min_by_key(|&&s| count_available(&self.sets[s], forbidden))
                .unwrap();
            let mut candidates: Vec<(usize, usize)> = (0..self.universe)
                .filter(|&e| has(&self.sets[target], e) && !has(forbidden, e))
                .map(|e| (unhit.iter().filter(|&&s| has(&self.sets[s], e)).count(), e))
                .collect();
            candidates.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
            let mut newly_forbidden = Vec::new();
            for (_, e) in candidates {
                chosen.push(e);
                let rest: Vec<usize> = unhit
                    .iter()
                    .copied()
                    .filter(|&s| !has(&self.sets[s], e))
                    .collect();
                let outcome = self.branch(&rest, chosen, forbidden);
                chosen.pop();
                if outcome.is_err() {
                    for &f in &newly_forbidden {
                        clear(forbidden, f);
                    }
                    return outcome;
                }
                set(forbidden, e);
                newly_forbidden.push(e);
                if chosen.len() + 1 >= self.best.len() {
                    break;
                }
            }
            for f in newly_forbidden {
                clear(forbidden, f);
            }
            Ok(())
        }
    }
}
