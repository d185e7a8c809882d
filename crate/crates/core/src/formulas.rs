//! Closed-form treewidth bounds for token graphs of stars, paths and complete graphs.
//!
//! Every value here is a pure function of `(n, k)`. Finite bounds that hold for every n
//! go into `lower`, `upper` and `exact`; growth-order statements are carried separately as
//! [`AsymptoticTerm`]s and are never compared against anything.

use serde::{Deserialize, Serialize};

use crate::decompositions::{
    f2kn_exact_treewidth, f3kn_closed_form, literal_closed_form_bound, upper_bound_tw_kn,
};
use crate::error::{Error, Result};
use crate::graph::Family;
use crate::subsets::binomial;

/// A leading term `constant · n^exponent`, evaluated at the report's n.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticTerm {
    pub name: String,
    /// `None` when only the order of growth is known.
    pub constant: Option<f64>,
    pub base: f64,
    pub exponent: u32,
    pub value: Option<f64>,
}

impl AsymptoticTerm {
    fn new(name: &str, constant: Option<f64>, base: f64, exponent: u32) -> Self {
        AsymptoticTerm {
            name: name.to_string(),
            constant,
            base,
            exponent,
            value: constant.map(|c| c * base.powi(exponent as i32)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedValue {
    /// Short snake_case key, usable as a table column.
    pub name: String,
    pub value: i128,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub lower: Option<f64>,
    pub upper: u128,
    pub exact: Option<u128>,
    /// Every upper-bound expression that applies, evaluated.
    pub upper_candidates: Vec<NamedValue>,
    pub asymptotic: Vec<AsymptoticTerm>,
    pub sources: Vec<String>,
    pub notes: Vec<String>,
    /// Treewidth from an exact oracle run, when attached.
    pub oracle: Option<u128>,
}

impl BoundReport {
    fn new(family: Family, n: usize, k: usize, upper: u128) -> Self {
        BoundReport {
            family,
            n,
            k,
            lower: None,
            upper,
            exact: None,
            upper_candidates: Vec::new(),
            asymptotic: Vec::new(),
            sources: Vec::new(),
            notes: Vec::new(),
            oracle: None,
        }
    }

    fn candidate(&mut self, name: &str, value: i128) {
        self.upper_candidates.push(NamedValue {
            name: name.to_string(),
            value,
        });
    }

    pub fn with_oracle(mut self, treewidth: u128) -> Self {
        self.oracle = Some(treewidth);
        self
    }

    /// `lower <= exact <= upper`, with the oracle value standing in for or checked against
    /// `exact`.
    pub fn is_consistent(&self) -> bool {
        let values: Vec<u128> = self
            .exact
            .iter()
            .chain(self.oracle.iter())
            .copied()
            .collect();
        let agree = values.windows(2).all(|w| w[0] == w[1]);
        let lower_ok = |v: u128| self.lower.is_none_or(|l| l <= v as f64 + 1e-9);
        agree && values.iter().all(|&v| lower_ok(v) && v <= self.upper) && lower_ok(self.upper)
    }

    /// Best known value: exact if known, else the oracle, else the upper bound.
    pub fn best(&self) -> u128 {
        self.exact.or(self.oracle).unwrap_or(self.upper)
    }
}

fn check(n: usize, k: usize, min_k: usize) -> Result<()> {
    if k < min_k || k + 1 > n {
        return Err(Error::invalid(format!(
            "need {min_k} <= k <= n-1, got n={n}, k={k}"
        )));
    }
    Ok(())
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

/// Maximum degree of `F_k(G)` for the three families: the largest number of base edges
/// with exactly one endpoint in a k-set.
pub fn token_max_degree(family: Family, n: usize, k: usize) -> usize {
    match family {
        Family::Star => k.max(n + 1 - k),
        Family::Complete => k * (n - k),
        Family::Path => (2 * k.min(n - k)).min(n - 1),
    }
}

/// Algebraic connectivity of the base graph.
pub fn base_lambda2(family: Family, n: usize) -> f64 {
    match family {
        Family::Star => {
            if n == 1 {
                2.0
            } else {
                1.0
            }
        }
        Family::Complete => n as f64,
        Family::Path => 2.0 - 2.0 * (std::f64::consts::PI / n as f64).cos(),
    }
}

/// The spectral lower bound `|V|/(12Δ) λ₂ − 1` from closed forms.
pub fn spectral_bound(family: Family, n: usize, k: usize) -> f64 {
    let base_n = if family == Family::Star { n + 1 } else { n };
    let vertices = binomial(base_n as i64, k as i64) as f64;
    vertices / (12.0 * token_max_degree(family, n, k) as f64) * base_lambda2(family, n) - 1.0
}

pub fn star_bounds(n: usize, k: usize) -> Result<BoundReport> {
    check(n, k, 1)?;
    let formula = binomial(n as i64, k as i64 - 1) as i128 - 1;
    let mut r = BoundReport::new(Family::Star, n, k, formula.max(1) as u128);
    r.candidate("star_decomposition", formula);
    r.sources
        .push("star-shaped tree decomposition with centre bag {A+0 : |A| = k-1}".into());
    r.lower = Some(spectral_bound(Family::Star, n, k));
    r.sources
        .push("spectral bound with lambda2(S_n) = 1".into());
    if k == 1 {
        r.exact = Some(1);
        r.notes.push(
            "k = 1: F_1(S_n) is S_n with treewidth 1; the closed form C(n,0)-1 = 0 is below it"
                .into(),
        );
    }
    if k == 2 {
        r.exact = Some(n as u128 - 1);
        r.lower = Some(n as f64 - 1.0);
        r.sources
            .push("bramble of n pairwise disjoint stars".into());
    }
    r.asymptotic.push(AsymptoticTerm::new(
        "lower n^(k-1)/(12 k!)",
        Some(1.0 / (12.0 * factorial(k))),
        n as f64,
        k as u32 - 1,
    ));
    r.asymptotic.push(AsymptoticTerm::new(
        "upper n^(k-1)/(k-1)!",
        Some(1.0 / factorial(k - 1)),
        n as f64,
        k as u32 - 1,
    ));
    Ok(r)
}

pub fn path_bounds(n: usize, k: usize) -> Result<BoundReport> {
    check(n, k, 1)?;
    // rows of the grid P_{n-k+1}^k in row-major order have bandwidth (n-k+1)^(k-1)
    let grid = ((n - k + 1) as u128).pow(k as u32 - 1);
    let mut r = BoundReport::new(Family::Path, n, k, grid);
    r.candidate("grid_bandwidth", grid as i128);
    r.sources
        .push("embedding into the grid P_(n-k+1)^k; row-major bandwidth".into());
    if k >= 2 && n >= 3 {
        let kn = upper_bound_tw_kn(n, k)?;
        r.candidate("complete_subgraph", kn as i128);
        r.upper = r.upper.min(kn);
    }
    r.lower = Some(spectral_bound(Family::Path, n, k));
    r.sources
        .push("spectral bound with lambda2(P_n) = 2 - 2cos(pi/n)".into());
    match k {
        1 => {
            r.exact = Some(1);
            r.notes.push("F_1(P_n) is P_n".into());
        }
        2 => {
            r.exact = Some(n as u128 / 2);
            r.upper = r.upper.min(n as u128 / 2);
            r.lower = Some((n / 2) as f64);
            r.candidate("balanced_diagonal_ordering", (n / 2) as i128);
            r.sources
                .push("diagonal ordering by x1 + x2 (minimax border)".into());
            r.sources
                .push("two-part token configurations give a grid minor".into());
        }
        _ => {}
    }
    r.asymptotic.push(AsymptoticTerm::new(
        "lower order floor(n/k)^(k-1)",
        None,
        (n / k) as f64,
        k as u32 - 1,
    ));
    r.asymptotic.push(AsymptoticTerm::new(
        "upper order (n-k+1)^(k-1)",
        None,
        (n - k + 1) as f64,
        k as u32 - 1,
    ));
    Ok(r)
}

pub fn complete_bounds(n: usize, k: usize) -> Result<BoundReport> {
    check(n, k, 2)?;
    let upper = upper_bound_tw_kn(n, k)?;
    let mut r = BoundReport::new(Family::Complete, n, k, upper);
    r.candidate("lex_decomposition", upper as i128);
    r.sources.push(
        "lexicographic path decomposition, largest bag from the two first-entry branches".into(),
    );
    let literal = literal_closed_form_bound(n, k)?;
    r.candidate("closed_form_unrepaired", literal);
    if literal != upper as i128 {
        r.notes.push(format!(
            "the unrepaired closed form gives {literal}; its tuple is not increasing here, so it does not count a bag"
        ));
    }
    r.lower = Some(spectral_bound(Family::Complete, n, k));
    r.sources
        .push("spectral bound with lambda2(K_n) = n, max degree k(n-k)".into());
    if k == 2 && n >= 4 {
        let exact = f2kn_exact_treewidth(n)?;
        r.exact = Some(exact);
        r.lower = Some(exact as f64);
        r.candidate("f2kn_closed_form", exact as i128);
        r.sources
            .push("F_2(K_n) path decomposition and matching bramble".into());
    }
    if k == 3 {
        let c = f3kn_closed_form(n)?;
        r.candidate("k3_closed_form", c as i128);
        if c != upper {
            r.notes.push(format!(
                "k = 3 closed form gives {c}, general bound {upper}"
            ));
        }
    }
    r.asymptotic.push(AsymptoticTerm::new(
        "lower n^k/(12 k k!)",
        Some(1.0 / (12.0 * k as f64 * factorial(k))),
        n as f64,
        k as u32,
    ));
    Ok(r)
}

pub fn bounds(family: Family, n: usize, k: usize) -> Result<BoundReport> {
    match family {
        Family::Star => star_bounds(n, k),
        Family::Path => path_bounds(n, k),
        Family::Complete => complete_bounds(n, k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decompositions::fkkn_lex_decomposition;
    use crate::graph::generate;
    use crate::oracles::{exact_treewidth, lambda2};
    use crate::token::token_graph;

    #[test]
    fn star_examples() {
        let r = star_bounds(4, 2).unwrap();
        assert_eq!((r.upper, r.exact), (3, Some(3)));
        assert_eq!(star_bounds(6, 3).unwrap().upper, 14);
        let one = star_bounds(5, 1).unwrap();
        assert_eq!(one.exact, Some(1));
        assert_eq!(one.upper_candidates[0].value, 0);
        assert!(!one.notes.is_empty());
        assert!(star_bounds(3, 0).is_err());
    }

    #[test]
    fn path_examples() {
        assert_eq!(path_bounds(6, 2).unwrap().exact, Some(3));
        assert_eq!(path_bounds(7, 2).unwrap().exact, Some(3));
        assert_eq!(path_bounds(5, 1).unwrap().exact, Some(1));
        assert!(path_bounds(3, 3).is_err());
    }

    #[test]
    fn complete_examples() {
        assert_eq!(complete_bounds(6, 2).unwrap().exact, Some(10));
        assert_eq!(complete_bounds(7, 2).unwrap().exact, Some(14));
        let r = complete_bounds(6, 3).unwrap();
        assert_eq!(r.upper, 13);
        assert!(r.upper_candidates.iter().all(|c| c.value == 13));
        assert!(complete_bounds(5, 1).is_err());
        let odd = complete_bounds(5, 4).unwrap();
        assert_eq!(odd.upper, 4);
        assert!(!odd.notes.is_empty());
    }

    #[test]
    fn k2_general_bound_matches_exact() {
        for n in 4..=12 {
            assert_eq!(
                upper_bound_tw_kn(n, 2).unwrap(),
                f2kn_exact_treewidth(n).unwrap()
            );
        }
    }

    #[test]
    fn k3_three_ways() {
        for n in 6..=15 {
            let width = fkkn_lex_decomposition(n, 3).unwrap().width().unwrap() as u128;
            assert_eq!(f3kn_closed_form(n).unwrap(), width);
            assert_eq!(upper_bound_tw_kn(n, 3).unwrap(), width);
        }
    }

    #[test]
    fn degree_and_lambda_closed_forms() {
        for family in [Family::Star, Family::Path, Family::Complete] {
            for n in 2..=8 {
                let base = generate(family, n).unwrap();
                let l = lambda2(&base).unwrap().value;
                assert!((l - base_lambda2(family, n)).abs() < 1e-9, "{family} {n}");
                for k in 1..base.n() {
                    if family != Family::Star && k >= n {
                        continue;
                    }
                    let tg = token_graph(&base, k).unwrap();
                    assert_eq!(
                        tg.graph().max_degree(),
                        token_max_degree(family, n, k),
                        "{family} n={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn reports_agree_with_oracle() {
        for family in [Family::Star, Family::Path, Family::Complete] {
            for n in 3..=6 {
                for k in 1..n {
                    let Ok(r) = bounds(family, n, k) else {
                        continue;
                    };
                    let base = generate(family, n).unwrap();
                    let tg = token_graph(&base, k).unwrap();
                    if tg.n_vertices() > 21 {
                        continue;
                    }
                    let tw = exact_treewidth(tg.graph()).unwrap().treewidth as u128;
                    let r = r.with_oracle(tw);
                    assert!(r.is_consistent(), "{family} n={n} k={k}: {r:?}");
                }
            }
        }
    }
}
