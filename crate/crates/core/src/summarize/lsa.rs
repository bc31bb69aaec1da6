use std::collections::{BTreeMap, BTreeSet};

use super::{check_input, Algorithm, Summary};
use crate::error::Result;
use crate::numerics::{svd_decompose, DenseMatrix};
use crate::textpipe::{StopwordList, Token, TokenizedSentence};

/// Singular values below `σ_max` times this are treated as zero.
const RANK_TOL: f64 = 1e-10;

/// Raw term-frequency matrix: rows are distinct content words in
/// lexicographic order, columns are sentences.
pub fn term_sentence_matrix(
    sentences: &[TokenizedSentence],
    stops: &StopwordList,
) -> (Vec<Token>, DenseMatrix) {
    let vocab: Vec<Token> = sentences
        .iter()
        .flat_map(|s| s.content_tokens(stops).cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let row_of: BTreeMap<&Token, usize> = vocab.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut matrix = DenseMatrix::zeros(vocab.len(), sentences.len());
    for (j, s) in sentences.iter().enumerate() {
        for t in s.content_tokens(stops) {
            matrix[(row_of[t], j)] += 1.0;
        }
    }
    (vocab, matrix)
}

/// Topic-wise selection over the right singular vectors: topic `i` takes the
/// unselected sentence with the largest `|Vt[i][j]|`. Slots left over when
/// topics run out are filled by the dominant topic's loadings.
pub fn summarize_lsa(
    sentences: &[TokenizedSentence],
    k: usize,
    stops: &StopwordList,
) -> Result<Summary> {
    check_input(sentences, k)?;
    let n = sentences.len();
    let want = k.min(n);
    let (vocab, matrix) = term_sentence_matrix(sentences, stops);

    if vocab.is_empty() {
        let mut summary = Summary::new(
            Algorithm::Lsa,
            sentences,
            (0..want).collect(),
            BTreeMap::new(),
        );
        summary
            .warnings
            .push("empty content vocabulary; kept the leading sentences".to_owned());
        return Ok(summary);
    }

    let svd = svd_decompose(&matrix)?;
    let rank = svd.rank(RANK_TOL);
    let vt = &svd.vt;

    let mut taken = vec![false; n];
    let mut selected = Vec::with_capacity(want);
    for topic in 0..rank.min(want) {
        if let Some(j) = best_unselected(|j| vt[(topic, j)].abs(), &taken) {
            taken[j] = true;
            selected.push(j);
        }
    }
    while selected.len() < want {
        let Some(j) = best_unselected(|j| vt[(0, j)].abs(), &taken) else {
            break;
        };
        taken[j] = true;
        selected.push(j);
    }

    // Informational per-sentence weight over the topics in use.
    let topics = rank.max(1);
    let scores = (0..n)
        .map(|j| {
            let w: f64 = (0..topics)
                .map(|i| (svd.singular_values[i] * vt[(i, j)]).powi(2))
                .sum();
            (j, w.sqrt())
        })
        .collect();
    Ok(Summary::new(Algorithm::Lsa, sentences, selected, scores))
}

fn best_unselected(loading: impl Fn(usize) -> f64, taken: &[bool]) -> Option<usize> {
    let mut best: Option<(usize, f64)> = None;
    for (j, _) in taken.iter().enumerate().filter(|(_, &t)| !t) {
        let v = loading(j);
        if best.is_none_or(|(_, b)| v > b) {
            best = Some((j, v));
        }
    }
    best.map(|(j, _)| j)
}
