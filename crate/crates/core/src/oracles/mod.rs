//! Exact ground-truth oracles: treewidth by subset dynamic programming, borders and the
//! minimax border, and algebraic connectivity.

mod border;
mod spectral;
mod treewidth;

pub use border::{
    border, f2pn_balanced_ordering, f2pn_diagonals, f2pn_ordering, max_border, mmb_exhaustive,
    mmb_exhaustive_capped, Mmb, DEFAULT_MMB_CAP,
};
pub use spectral::{
    lambda2, lambda2_capped, spectral_lower_bound, spectral_lower_bound_capped,
    symmetric_eigenvalues, Lambda2, SpectralReport, DEFAULT_EIGEN_CAP,
};
pub use treewidth::{
    decomposition_from_ordering, elimination_width, exact_treewidth, exact_treewidth_capped,
    ExactTreewidth, DEFAULT_TREEWIDTH_CAP,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of a graph's vertex indices; position 0 comes first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexOrdering(Vec<usize>);

impl VertexOrdering {
    pub fn new(order: Vec<usize>, n: usize) -> Result<Self> {
        if order.len() != n {
            return Err(Error::invalid(format!(
                "ordering has {} entries for {n} vertices",
                order.len()
            )));
        }
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::invalid(format!(
                    "ordering is not a permutation (entry {v})"
                )));
            }
        }
        Ok(VertexOrdering(order))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// `position[v]` = index of `v` in the ordering.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_must_be_permutation() {
        assert!(VertexOrdering::new(vec![2, 0, 1], 3).is_ok());
        assert!(VertexOrdering::new(vec![0, 0, 1], 3).is_err());
        assert!(VertexOrdering::new(vec![0, 1], 3).is_err());
        assert!(VertexOrdering::new(vec![0, 1, 3], 3).is_err());
        assert_eq!(
            VertexOrdering::new(vec![2, 0, 1], 3).unwrap().positions(),
            vec![1, 2, 0]
        );
    }
}
