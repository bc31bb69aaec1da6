//! Small dense numerics used by the summarizers.

pub(crate) mod kl;
mod matrix;
mod rank;
mod svd;

pub use kl::{kl_divergence, ProbabilityDistribution};
pub use matrix::DenseMatrix;
pub use rank::{
    damped_score_iteration, fixed_point_residual, Convergence, DampingParams, ScoreVector,
};
pub use svd::{svd_decompose, SvdResult, MAX_SVD_DIM, MAX_SWEEPS};
