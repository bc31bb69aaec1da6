use std::collections::{BTreeMap, HashSet};

use super::{check_input, top_k, Algorithm, Summary};
use crate::error::Result;
use crate::numerics::{damped_score_iteration, DampingParams, DenseMatrix};
use crate::textpipe::{StopwordList, Token, TokenizedSentence};

/// Sentence similarity graph with
/// `w_ij = |shared distinct content words| / (ln|S_i| + ln|S_j|)`,
/// where `|S|` counts content tokens. Sentences with fewer than two content
/// tokens get no edges; the diagonal is zero.
pub fn textrank_graph(sentences: &[TokenizedSentence], stops: &StopwordList) -> DenseMatrix {
    let n = sentences.len();
    let content: Vec<Vec<&Token>> = sentences
        .iter()
        .map(|s| s.content_tokens(stops).collect())
        .collect();
    let distinct: Vec<HashSet<&Token>> = content
        .iter()
        .map(|c| c.iter().copied().collect())
        .collect();

    let mut graph = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let (li, lj) = (content[i].len(), content[j].len());
            if li < 2 || lj < 2 {
                continue;
            }
            let shared = distinct[i].intersection(&distinct[j]).count();
            let denom = (li as f64).ln() + (lj as f64).ln();
            if shared == 0 || denom <= 0.0 {
                continue;
            }
            let w = shared as f64 / denom;
            graph[(i, j)] = w;
            graph[(j, i)] = w;
        }
    }
    graph
}

pub fn summarize_textrank(
    sentences: &[TokenizedSentence],
    k: usize,
    stops: &StopwordList,
    damping: &DampingParams,
) -> Result<Summary> {
    check_input(sentences, k)?;
    let graph = textrank_graph(sentences, stops);
    let ranked = damped_score_iteration(&graph, damping)?;
    let selected = top_k(&ranked.values, k);
    let scores: BTreeMap<usize, f64> = ranked.values.iter().copied().enumerate().collect();
    let mut summary = Summary::new(Algorithm::TextRank, sentences, selected, scores);
    if ranked.status != crate::numerics::Convergence::Converged {
        summary.warnings.push(format!(
            "score iteration stopped after {} iterations",
            ranked.iterations
        ));
    }
    Ok(summary)
}
