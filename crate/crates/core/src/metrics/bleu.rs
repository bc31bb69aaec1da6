use serde::Serialize;

use super::clipped_overlap;
use crate::error::{Error, Result};
use crate::textpipe::Token;

const WEIGHT_SUM_TOLERANCE: f64 = 1e-9;

/// Clipped n-gram precision of `candidate` against `reference`. Zero when
/// the candidate is shorter than `n`.
pub fn modified_ngram_precision(candidate: &[Token], reference: &[Token], n: usize) -> Result<f64> {
    let (overlap, cand_total, _) = clipped_overlap(candidate, reference, n)?;
    if cand_total == 0 {
        return Ok(0.0);
    }
    Ok(overlap as f64 / cand_total as f64)
}

/// `exp(Σ w_n ln p_n)`, taken as 0 when any `p_n` is 0.
pub fn geometric_average_precision(precisions: &[f64], weights: &[f64]) -> Result<f64> {
    if precisions.len() != weights.len() {
        return Err(Error::LengthMismatch {
            precisions: precisions.len(),
            weights: weights.len(),
        });
    }
    check_weights(weights)?;
    if precisions.iter().any(|&p| p <= 0.0) {
        return Ok(0.0);
    }
    let log_sum: f64 = precisions
        .iter()
        .zip(weights)
        .map(|(p, w)| w * p.ln())
        .sum();
    Ok(log_sum.exp())
}

fn check_weights(weights: &[f64]) -> Result<()> {
    let sum: f64 = weights.iter().sum();
    if weights.is_empty()
        || weights.iter().any(|w| !(w.is_finite() && *w > 0.0))
        || (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE
    {
        return Err(Error::InvalidWeights);
    }
    Ok(())
}

/// 1 if `c > r`, `e^(1 - r/c)` if `0 < c ≤ r`, 0 if `c = 0`.
pub fn brevity_penalty(candidate_len: usize, reference_len: usize) -> Result<f64> {
    if reference_len < 1 {
        return Err(Error::InvalidReferenceLength(reference_len));
    }
    Ok(match candidate_len {
        0 => 0.0,
        c if c > reference_len => 1.0,
        c => (1.0 - reference_len as f64 / c as f64).exp(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BleuOptions {
    pub max_n: usize,
    /// Uniform `1/max_n` when `None`.
    pub weights: Option<Vec<f64>>,
    /// Floor applied to zero precisions. Off by default.
    pub smoothing: Option<f64>,
}

impl Default for BleuOptions {
    fn default() -> Self {
        Self::order(4)
    }
}

impl BleuOptions {
    /// Uniform weights up to `max_n`, no smoothing.
    pub fn order(max_n: usize) -> Self {
        Self {
            max_n,
            weights: None,
            smoothing: None,
        }
    }

    fn resolved_weights(&self) -> Vec<f64> {
        match &self.weights {
            Some(w) => w.clone(),
            None => vec![1.0 / self.max_n as f64; self.max_n],
        }
    }
}

/// Every intermediate of one BLEU computation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BleuBreakdown {
    pub precisions: Vec<f64>,
    pub weights: Vec<f64>,
    pub geo_avg: f64,
    pub candidate_len: usize,
    pub reference_len: usize,
    pub brevity_penalty: f64,
    pub score: f64,
}

/// Sentence-level BLEU against a single reference.
pub fn bleu_score(
    candidate: &[Token],
    reference: &[Token],
    options: &BleuOptions,
) -> Result<BleuBreakdown> {
    if options.max_n < 1 {
        return Err(Error::InvalidN(options.max_n));
    }
    let weights = options.resolved_weights();
    if weights.len() != options.max_n {
        return Err(Error::LengthMismatch {
            precisions: options.max_n,
            weights: weights.len(),
        });
    }
    let mut precisions = (1..=options.max_n)
        .map(|n| modified_ngram_precision(candidate, reference, n))
        .collect::<Result<Vec<_>>>()?;
    if let Some(floor) = options.smoothing {
        for p in precisions.iter_mut().filter(|p| **p == 0.0) {
            *p = floor;
        }
    }
    let geo_avg = geometric_average_precision(&precisions, &weights)?;
    let bp = brevity_penalty(candidate.len(), reference.len())?;
    Ok(BleuBreakdown {
        precisions,
        weights,
        geo_avg,
        candidate_len: candidate.len(),
        reference_len: reference.len(),
        brevity_penalty: bp,
        score: bp * geo_avg,
    })
}
