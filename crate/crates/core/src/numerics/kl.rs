use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::textpipe::Token;

const SUM_TOLERANCE: f64 = 1e-6;

/// A discrete distribution over tokens.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityDistribution {
    probs: BTreeMap<Token, f64>,
}

impl ProbabilityDistribution {
    /// Validates non-negativity and unit mass (within 1e-6).
    pub fn new(probs: BTreeMap<Token, f64>) -> Result<Self> {
        if let Some((t, p)) = probs.iter().find(|(_, p)| !p.is_finite() || **p < 0.0) {
            return Err(Error::InvalidDistribution(format!("P({t}) = {p}")));
        }
        let sum: f64 = probs.values().sum();
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::InvalidDistribution(format!("mass sums to {sum}")));
        }
        Ok(Self { probs })
    }

    /// Normalized counts. `None` when no tokens are given.
    pub fn from_tokens<'a>(tokens: impl IntoIterator<Item = &'a Token>) -> Option<Self> {
        let mut counts: BTreeMap<Token, f64> = BTreeMap::new();
        let mut total = 0.0;
        for t in tokens {
            *counts.entry(t.clone()).or_insert(0.0) += 1.0;
            total += 1.0;
        }
        if total == 0.0 {
            return None;
        }
        for v in counts.values_mut() {
            *v /= total;
        }
        Some(Self { probs: counts })
    }

    pub fn get(&self, token: &str) -> f64 {
        self.probs.get(token).copied().unwrap_or(0.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Token, f64)> {
        self.probs.iter().map(|(t, &p)| (t, p))
    }

    pub fn support_len(&self) -> usize {
        self.probs.len()
    }
}

/// `Σ_w P(w) ln(P(w) / max(Q(w), ε))`, skipping `P(w) = 0`.
pub fn kl_divergence(
    p: &ProbabilityDistribution,
    q: &ProbabilityDistribution,
    epsilon: f64,
) -> Result<f64> {
    if epsilon.is_nan() || epsilon <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "epsilon must be positive, got {epsilon}"
        )));
    }
    Ok(floored_kl(p, |t| q.get(t), epsilon))
}

/// KL against an arbitrary (possibly empty) lookup, used when the second
/// distribution has no support at all.
pub(crate) fn floored_kl(
    p: &ProbabilityDistribution,
    q: impl Fn(&str) -> f64,
    epsilon: f64,
) -> f64 {
    p.iter()
        .filter(|(_, pw)| *pw > 0.0)
        .map(|(t, pw)| pw * (pw / q(t.as_str()).max(epsilon)).ln())
        .sum()
}
