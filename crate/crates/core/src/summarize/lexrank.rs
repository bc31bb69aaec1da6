use std::collections::BTreeMap;

use super::{
    check_input, idf_modified_cosine, top_k, Algorithm, LexRankMode, SentenceVector, Summary,
};
use crate::error::Result;
use crate::numerics::{damped_score_iteration, Convergence, DampingParams, DenseMatrix};
use crate::textpipe::{compute_idf, StopwordList, Token, TokenizedSentence};

/// Pairwise IDF-modified cosine graph over one document, with idf computed
/// across its sentences. The diagonal is zero.
pub fn lexrank_graph(
    sentences: &[TokenizedSentence],
    stops: &StopwordList,
    mode: LexRankMode,
) -> DenseMatrix {
    let n = sentences.len();
    let units: Vec<Vec<Token>> = sentences
        .iter()
        .map(|s| s.content_tokens(stops).cloned().collect())
        .collect();
    let mut graph = DenseMatrix::zeros(n, n);
    let Ok(idf) = compute_idf(&units) else {
        return graph;
    };
    let vectors: Vec<SentenceVector> = units.iter().map(|u| SentenceVector::new(u, &idf)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let sim = idf_modified_cosine(&vectors[i], &vectors[j]);
            let w = match mode {
                LexRankMode::Continuous => sim,
                LexRankMode::Threshold { threshold } => {
                    if sim >= threshold && sim > 0.0 {
                        1.0
                    } else {
                        0.0
                    }
                }
            };
            graph[(i, j)] = w;
            graph[(j, i)] = w;
        }
    }
    graph
}

pub fn summarize_lexrank(
    sentences: &[TokenizedSentence],
    k: usize,
    stops: &StopwordList,
    mode: LexRankMode,
    damping: &DampingParams,
) -> Result<Summary> {
    check_input(sentences, k)?;
    let graph = lexrank_graph(sentences, stops, mode);
    let ranked = damped_score_iteration(&graph, damping)?;
    let selected = top_k(&ranked.values, k);
    let scores: BTreeMap<usize, f64> = ranked.values.iter().copied().enumerate().collect();
    let mut summary = Summary::new(Algorithm::LexRank, sentences, selected, scores);
    if ranked.status != Convergence::Converged {
        summary.warnings.push(format!(
            "score iteration stopped after {} iterations",
            ranked.iterations
        ));
    }
    Ok(summary)
}
