use std::collections::BTreeMap;

use super::{check_input, Algorithm, Summary};
use crate::error::{Error, Result};
use crate::numerics::kl::floored_kl;
use crate::numerics::ProbabilityDistribution;
use crate::textpipe::{StopwordList, Token, TokenizedSentence};

/// Divergences closer than this are ties, resolved by sentence index.
pub const TIE_TOLERANCE: f64 = 1e-12;

/// Greedy KL-Sum: repeatedly add the sentence whose inclusion brings the
/// summary's unigram distribution closest (in KL divergence from the
/// document distribution) to the document. Ties go to the lower index.
pub fn summarize_klsum(
    sentences: &[TokenizedSentence],
    k: usize,
    stops: &StopwordList,
    epsilon: f64,
) -> Result<Summary> {
    check_input(sentences, k)?;
    if epsilon.is_nan() || epsilon <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "epsilon must be positive, got {epsilon}"
        )));
    }
    let n = sentences.len();
    let want = k.min(n);
    let content: Vec<Vec<&Token>> = sentences
        .iter()
        .map(|s| s.content_tokens(stops).collect())
        .collect();

    let Some(document) = ProbabilityDistribution::from_tokens(content.iter().flatten().copied())
    else {
        let mut summary = Summary::new(
            Algorithm::KlSum,
            sentences,
            (0..want).collect(),
            BTreeMap::new(),
        );
        summary
            .warnings
            .push("empty content vocabulary; kept the leading sentences".to_owned());
        return Ok(summary);
    };

    let mut counts: BTreeMap<&str, f64> = BTreeMap::new();
    let mut total = 0.0;
    let mut taken = vec![false; n];
    let mut selected = Vec::with_capacity(want);
    let mut scores = BTreeMap::new();

    while selected.len() < want {
        let mut best: Option<(usize, f64)> = None;
        for j in (0..n).filter(|&j| !taken[j]) {
            let divergence = divergence_with(&document, &counts, total, &content[j], epsilon);
            if best.is_none_or(|(_, b)| divergence < b - TIE_TOLERANCE) {
                best = Some((j, divergence));
            }
        }
        let (j, divergence) = best.expect("want <= n leaves a candidate");
        taken[j] = true;
        selected.push(j);
        scores.insert(j, divergence);
        for t in &content[j] {
            *counts.entry(t.as_str()).or_insert(0.0) += 1.0;
        }
        total += content[j].len() as f64;
    }

    Ok(Summary::new(Algorithm::KlSum, sentences, selected, scores))
}

/// `KL(P ‖ Q)` where `Q` is the unigram distribution of the current summary
/// counts plus `extra`.
fn divergence_with(
    document: &ProbabilityDistribution,
    counts: &BTreeMap<&str, f64>,
    total: f64,
    extra: &[&Token],
    epsilon: f64,
) -> f64 {
    let grand = total + extra.len() as f64;
    if grand == 0.0 {
        return floored_kl(document, |_| 0.0, epsilon);
    }
    floored_kl(
        document,
        |w| {
            let base = counts.get(w).copied().unwrap_or(0.0);
            let added = extra.iter().filter(|t| t.as_str() == w).count() as f64;
            (base + added) / grand
        },
        epsilon,
    )
}
