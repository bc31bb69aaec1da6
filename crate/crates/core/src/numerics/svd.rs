use super::DenseMatrix;
use crate::error::{Error, Result};

/// Largest accepted dimension. Term × sentence matrices of single abstracts
/// are far below this.
pub const MAX_SVD_DIM: usize = 4096;

/// Sweep cap for the Jacobi iteration.
pub const MAX_SWEEPS: usize = 100;

/// Thin SVD `A = U diag(σ) Vt` with `k = min(rows, cols)`.
#[derive(Debug, Clone)]
pub struct SvdResult {
    /// `rows × k`, orthonormal columns.
    pub u: DenseMatrix,
    /// Non-increasing, non-negative.
    pub singular_values: Vec<f64>,
    /// `k × cols`, orthonormal rows.
    pub vt: DenseMatrix,
}

impl SvdResult {
    /// Singular values above `σ_max · rel_tol`.
    pub fn rank(&self, rel_tol: f64) -> usize {
        let top = self.singular_values.first().copied().unwrap_or(0.0);
        self.singular_values
            .iter()
            .filter(|&&s| s > top * rel_tol && s > 0.0)
            .count()
    }

    pub fn reconstruct(&self) -> DenseMatrix {
        let mut us = self.u.clone();
        for i in 0..us.rows() {
            for (j, s) in self.singular_values.iter().enumerate() {
                us[(i, j)] *= s;
            }
        }
        us.matmul(&self.vt).expect("thin factors are conformable")
    }
}

/// One-sided (Hestenes) Jacobi SVD.
///
/// Pairs of columns are rotated until every pair is orthogonal to working
/// precision; column norms are then the singular values. Wide matrices are
/// handled through their transpose.
pub fn svd_decompose(a: &DenseMatrix) -> Result<SvdResult> {
    let (m, n) = (a.rows(), a.cols());
    if m == 0 || n == 0 {
        return Err(Error::DimensionZero);
    }
    if m > MAX_SVD_DIM || n > MAX_SVD_DIM {
        return Err(Error::Shape {
            expected: "matrix within MAX_SVD_DIM",
            rows: m,
            cols: n,
        });
    }
    if m >= n {
        Ok(tall_svd(a))
    } else {
        // A = Bᵀ with B = U_b Σ V_bᵀ, so A = V_b Σ U_bᵀ.
        let b = tall_svd(&a.transpose());
        Ok(SvdResult {
            u: b.vt.transpose(),
            singular_values: b.singular_values,
            vt: b.u.transpose(),
        })
    }
}

/// Requires `rows >= cols`.
fn tall_svd(a: &DenseMatrix) -> SvdResult {
    let (m, n) = (a.rows(), a.cols());
    // Column-major working copies: cols[j] is column j.
    let mut cols: Vec<Vec<f64>> = (0..n)
        .map(|j| (0..m).map(|i| a[(i, j)]).collect())
        .collect();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|j| (0..n).map(|i| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha = dot(&cols[p], &cols[p]);
                let beta = dot(&cols[q], &cols[q]);
                let gamma = dot(&cols[p], &cols[q]);
                if gamma == 0.0 || gamma.abs() <= f64::EPSILON * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                rotate(&mut cols, p, q, c, s);
                rotate(&mut v, p, q, c, s);
            }
        }
        if !rotated {
            break;
        }
    }

    let norms: Vec<f64> = cols.iter().map(|c| dot(c, c).sqrt()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| norms[y].total_cmp(&norms[x]).then(x.cmp(&y)));

    let top = norms[order[0]];
    let negligible = top * f64::EPSILON * m.max(n) as f64;
    let mut u_cols: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut deficient = Vec::new();
    for (slot, &j) in order.iter().enumerate() {
        if norms[j] > negligible && norms[j] > 0.0 {
            u_cols.push(cols[j].iter().map(|x| x / norms[j]).collect());
        } else {
            u_cols.push(vec![0.0; m]);
            deficient.push(slot);
        }
    }
    complete_basis(&mut u_cols, &deficient);

    let mut u = DenseMatrix::zeros(m, n);
    let mut vt = DenseMatrix::zeros(n, n);
    for (slot, &j) in order.iter().enumerate() {
        for i in 0..m {
            u[(i, slot)] = u_cols[slot][i];
        }
        for i in 0..n {
            vt[(slot, i)] = v[j][i];
        }
    }
    SvdResult {
        u,
        singular_values: order.iter().map(|&j| norms[j]).collect(),
        vt,
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn rotate(vectors: &mut [Vec<f64>], p: usize, q: usize, c: f64, s: f64) {
    let (left, right) = vectors.split_at_mut(q);
    let (vp, vq) = (&mut left[p], &mut right[0]);
    for (x, y) in vp.iter_mut().zip(vq.iter_mut()) {
        let (xp, xq) = (*x, *y);
        *x = c * xp - s * xq;
        *y = s * xp + c * xq;
    }
}

/// Replaces the columns at `slots` with unit vectors orthogonal to every
/// other column, via Gram-Schmidt over the standard basis.
fn complete_basis(cols: &mut [Vec<f64>], slots: &[usize]) {
    let m = cols.first().map_or(0, Vec::len);
    let mut candidate = 0;
    for &slot in slots {
        while candidate < m {
            let mut e = vec![0.0; m];
            e[candidate] = 1.0;
            candidate += 1;
            // Two passes of modified Gram-Schmidt for stability.
            for _ in 0..2 {
                for (k, other) in cols.iter().enumerate() {
                    if k == slot || other.iter().all(|&x| x == 0.0) {
                        continue;
                    }
                    let proj = dot(&e, other);
                    for (ei, oi) in e.iter_mut().zip(other) {
                        *ei -= proj * oi;
                    }
                }
            }
            let norm = dot(&e, &e).sqrt();
            if norm > 1e-6 {
                cols[slot] = e.into_iter().map(|x| x / norm).collect();
                break;
            }
        }
    }
}
