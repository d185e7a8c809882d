use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::token::TokenGraph;

/// Largest matrix handed to the dense eigensolver.
pub const DEFAULT_EIGEN_CAP: usize = 400;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a symmetric matrix in ascending order, by cyclic Jacobi rotations.
/// The input is symmetrised by averaging first.
pub fn symmetric_eigenvalues(m: &[Vec<f64>]) -> Result<Vec<f64>> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::invalid("matrix is not square"));
    }
    let mut a = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            a[i * n + j] = 0.5 * (m[i][j] + m[j][i]);
        }
    }
    let scale: f64 = a
        .iter()
        .map(|x| x * x)
        .sum::<f64>()
        .sqrt()
        .max(f64::MIN_POSITIVE);
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|p| (p + 1..n).map(move |q| (p, q)))
            .map(|(p, q)| a[p * n + q] * a[p * n + q])
            .sum();
        if off.sqrt() <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let (app, aqq) = (a[p * n + p], a[q * n + q]);
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let (akp, akq) = (a[k * n + p], a[k * n + q]);
                    let new_p = c * akp - s * akq;
                    let new_q = s * akp + c * akq;
                    a[k * n + p] = new_p;
                    a[p * n + k] = new_p;
                    a[k * n + q] = new_q;
                    a[q * n + k] = new_q;
                }
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Lambda2 {
    pub value: f64,
    /// False when the graph is disconnected; `value` is then 0 by definition.
    pub connected: bool,
}

pub fn lambda2(g: &Graph) -> Result<Lambda2> {
    lambda2_capped(g, DEFAULT_EIGEN_CAP)
}

/// Second smallest eigenvalue of the Laplacian.
pub fn lambda2_capped(g: &Graph, cap: usize) -> Result<Lambda2> {
    if g.n() < 2 {
        return Err(Error::invalid(
            "algebraic connectivity needs at least two vertices",
        ));
    }
    if !g.is_connected() {
        return Ok(Lambda2 {
            value: 0.0,
            connected: false,
        });
    }
    if g.n() > cap {
        return Err(Error::limit(
            "eigensolver vertices",
            g.n() as u128,
            cap as u128,
        ));
    }
    let eig = symmetric_eigenvalues(&g.laplacian())?;
    Ok(Lambda2 {
        value: eig[1].max(0.0),
        connected: true,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralReport {
    /// λ₂ of the base graph, which equals λ₂ of the token graph.
    pub lambda2: f64,
    /// λ₂ computed directly on the token graph, when it fits the eigensolver cap.
    pub token_lambda2: Option<f64>,
    pub connected: bool,
    /// Maximum degree of the token graph.
    pub max_degree: usize,
    pub n_vertices: usize,
    /// `|V| / (12 Δ) · λ₂ − 1`.
    pub chandran_lower_bound: f64,
}

pub fn spectral_lower_bound(tg: &TokenGraph) -> Result<SpectralReport> {
    spectral_lower_bound_capped(tg, DEFAULT_EIGEN_CAP)
}

/// Spectral treewidth lower bound for a token graph.
pub fn spectral_lower_bound_capped(tg: &TokenGraph, cap: usize) -> Result<SpectralReport> {
    let base = lambda2_capped(tg.base(), cap)?;
    let token_lambda2 = if tg.n_vertices() <= cap {
        Some(lambda2_capped(tg.graph(), cap)?.value)
    } else {
        None
    };
    let n_vertices = tg.n_vertices();
    let max_degree = tg.graph().max_degree();
    let chandran_lower_bound = if max_degree == 0 {
        -1.0
    } else {
        n_vertices as f64 / (12.0 * max_degree as f64) * base.value - 1.0
    };
    Ok(SpectralReport {
        lambda2: base.value,
        token_lambda2,
        connected: base.connected,
        max_degree,
        n_vertices,
        chandran_lower_bound,
    })
}
