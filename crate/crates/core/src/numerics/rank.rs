use serde::Serialize;

use super::DenseMatrix;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DampingParams {
    pub damping: f64,
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for DampingParams {
    fn default() -> Self {
        Self {
            damping: 0.85,
            tol: 1e-8,
            max_iter: 200,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Convergence {
    Converged,
    MaxIterReached,
}

/// Per-node scores from [`damped_score_iteration`].
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreVector {
    pub values: Vec<f64>,
    pub status: Convergence,
    pub iterations: usize,
}

/// Column-normalized transition shares: `share[j][i] = w_ji / Σ_k w_jk`.
/// Rows of nodes with no out-weight stay zero.
struct Transition {
    n: usize,
    share: Vec<f64>,
}

impl Transition {
    fn new(adjacency: &DenseMatrix) -> Result<Self> {
        let n = adjacency.rows();
        if n == 0 || adjacency.cols() != n {
            return Err(Error::Shape {
                expected: "non-empty square",
                rows: adjacency.rows(),
                cols: adjacency.cols(),
            });
        }
        let mut share = vec![0.0; n * n];
        for j in 0..n {
            let row = adjacency.row(j);
            for (i, &w) in row.iter().enumerate() {
                if !w.is_finite() || w < 0.0 {
                    return Err(Error::NonFiniteWeight { row: j, col: i });
                }
            }
            let out: f64 = row.iter().sum();
            if out > 0.0 {
                for (i, &w) in row.iter().enumerate() {
                    share[j * n + i] = w / out;
                }
            }
        }
        Ok(Self { n, share })
    }

    /// `next_i = (1 - d) + d Σ_j share[j][i] x_j`
    fn apply(&self, damping: f64, x: &[f64], next: &mut [f64]) {
        next.fill(0.0);
        for (j, &xj) in x.iter().enumerate() {
            if xj == 0.0 {
                continue;
            }
            let row = &self.share[j * self.n..(j + 1) * self.n];
            for (acc, &s) in next.iter_mut().zip(row) {
                *acc += s * xj;
            }
        }
        for v in next.iter_mut() {
            *v = (1.0 - damping) + damping * *v;
        }
    }
}

fn check_params(params: &DampingParams) -> Result<()> {
    if !(params.damping > 0.0 && params.damping < 1.0) {
        return Err(Error::InvalidParameter(format!(
            "damping must lie in (0, 1), got {}",
            params.damping
        )));
    }
    if !params.tol.is_finite() || params.tol < 0.0 {
        return Err(Error::InvalidParameter(format!("tolerance {}", params.tol)));
    }
    Ok(())
}

/// Weighted PageRank-style fixed point
/// `X_i = (1 - d) + d Σ_j (w_ji / Σ_k w_jk) X_j`, where `adjacency[(j, i)]`
/// is the weight of edge `j → i`.
///
/// Iterates from all-ones until the max-abs change of one update is at most
/// `tol`. The returned scores are the iterate at which that change was
/// measured, so `Converged` certifies a fixed-point residual ≤ `tol`. Nodes
/// with zero out-weight distribute nothing.
pub fn damped_score_iteration(
    adjacency: &DenseMatrix,
    params: &DampingParams,
) -> Result<ScoreVector> {
    check_params(params)?;
    let transition = Transition::new(adjacency)?;
    let n = transition.n;
    let mut x = vec![1.0; n];
    let mut next = vec![0.0; n];

    for iteration in 0..=params.max_iter {
        transition.apply(params.damping, &x, &mut next);
        let change = x
            .iter()
            .zip(&next)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        if change <= params.tol {
            return Ok(ScoreVector {
                values: x,
                status: Convergence::Converged,
                iterations: iteration,
            });
        }
        if iteration == params.max_iter {
            break;
        }
        std::mem::swap(&mut x, &mut next);
    }
    Ok(ScoreVector {
        values: x,
        status: Convergence::MaxIterReached,
        iterations: params.max_iter,
    })
}

/// Max-abs difference between `scores` and one damped update of them.
pub fn fixed_point_residual(adjacency: &DenseMatrix, damping: f64, scores: &[f64]) -> Result<f64> {
    let transition = Transition::new(adjacency)?;
    if scores.len() != transition.n {
        return Err(Error::InvalidParameter(format!(
            "{} scores for {} nodes",
            scores.len(),
            transition.n
        )));
    }
    let mut next = vec![0.0; scores.len()];
    transition.apply(damping, scores, &mut next);
    Ok(scores
        .iter()
        .zip(&next)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max))
}
