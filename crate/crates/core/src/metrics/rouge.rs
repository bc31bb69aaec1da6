use serde::Serialize;

use super::clipped_overlap;
use crate::error::{Error, Result};
use crate::textpipe::Token;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RougeScore {
    pub n: usize,
    pub recall: f64,
    pub precision: f64,
    pub f1: f64,
}

/// ROUGE-N with clipped overlap. A zero denominator zeroes its component.
pub fn rouge_n(model: &[Token], reference: &[Token], n: usize) -> Result<RougeScore> {
    let (overlap, model_total, ref_total) = clipped_overlap(model, reference, n)?;
    let ratio = |total: usize| {
        if total == 0 {
            0.0
        } else {
            overlap as f64 / total as f64
        }
    };
    let recall = ratio(ref_total);
    let precision = ratio(model_total);
    Ok(RougeScore {
        n,
        recall,
        precision,
        f1: f1_from(precision, recall)?,
    })
}

/// Harmonic mean of precision and recall; 0 when both are 0.
pub fn f1_from(precision: f64, recall: f64) -> Result<f64> {
    for (name, value) in [("precision", precision), ("recall", recall)] {
        if !(0.0..=1.0).contains(&value) {
            return Err(Error::OutOfRange { name, value });
        }
    }
    if precision + recall == 0.0 {
        return Ok(0.0);
    }
    Ok(2.0 * precision * recall / (precision + recall))
}
