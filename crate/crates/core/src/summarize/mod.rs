//! The five extractive summarizers.
//!
//! Each one ranks the sentences of a single document and keeps the best
//! `k`, reported in original document order.

mod cosine;
mod klsum;
mod lexrank;
mod lsa;
mod luhn;
mod textrank;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::DampingParams;
use crate::textpipe::{StopwordList, TokenizedSentence};

pub use cosine::{idf_modified_cosine, SentenceVector};
pub use klsum::{summarize_klsum, TIE_TOLERANCE as KL_TIE_TOLERANCE};
pub use lexrank::{lexrank_graph, summarize_lexrank};
pub use lsa::{summarize_lsa, term_sentence_matrix};
pub use luhn::{
    luhn_sentence_score, luhn_window_score, significant_words, summarize_luhn, LuhnWindow,
};
pub use textrank::{summarize_textrank, textrank_graph};

/// Summary length used when none is given.
pub const DEFAULT_K: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    TextRank,
    LexRank,
    Luhn,
    Lsa,
    KlSum,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::TextRank,
        Algorithm::LexRank,
        Algorithm::Luhn,
        Algorithm::Lsa,
        Algorithm::KlSum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::TextRank => "textrank",
            Algorithm::LexRank => "lexrank",
            Algorithm::Luhn => "luhn",
            Algorithm::Lsa => "lsa",
            Algorithm::KlSum => "klsum",
        }
    }

    /// Row label in the ranking table.
    pub fn display_name(self) -> &'static str {
        match self {
            Algorithm::TextRank => "Text Rank",
            Algorithm::LexRank => "Lex Rank",
            Algorithm::Luhn => "LUHN",
            Algorithm::Lsa => "Latent Semantic Analysis",
            Algorithm::KlSum => "KL Algorithm",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| c.is_alphanumeric())
            .flat_map(char::to_lowercase)
            .collect();
        Ok(match key.as_str() {
            "textrank" => Algorithm::TextRank,
            "lexrank" => Algorithm::LexRank,
            "luhn" => Algorithm::Luhn,
            "lsa" => Algorithm::Lsa,
            "klsum" | "kl" => Algorithm::KlSum,
            _ => return Err(Error::UnknownAlgorithm(s.to_owned())),
        })
    }
}

/// LexRank edge weighting.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum LexRankMode {
    /// Cosine similarities are the edge weights.
    #[default]
    Continuous,
    /// Edges of weight 1 where cosine ≥ threshold.
    Threshold { threshold: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummarizerParams {
    pub damping: DampingParams,
    pub lexrank_mode: LexRankMode,
    /// Fraction of the content vocabulary treated as significant by Luhn.
    pub luhn_ratio: f64,
    /// Max run of non-significant tokens inside one Luhn window.
    pub luhn_gap: usize,
    pub kl_epsilon: f64,
}

impl Default for SummarizerParams {
    fn default() -> Self {
        Self {
            damping: DampingParams::default(),
            lexrank_mode: LexRankMode::Continuous,
            luhn_ratio: 0.1,
            luhn_gap: 4,
            kl_epsilon: 1e-12,
        }
    }
}

/// Selected sentences of one document.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub algorithm: Algorithm,
    /// Strictly increasing sentence indices.
    pub selected: Vec<usize>,
    /// Sentence scores. Every sentence for the ranking methods; only selected
    /// sentences (the divergence reached when each was added) for KL-Sum.
    pub scores: BTreeMap<usize, f64>,
    /// Selected raw sentences joined by single spaces.
    pub text: String,
    pub warnings: Vec<String>,
}

impl Summary {
    pub(crate) fn new(
        algorithm: Algorithm,
        sentences: &[TokenizedSentence],
        mut selected: Vec<usize>,
        scores: BTreeMap<usize, f64>,
    ) -> Self {
        selected.sort_unstable();
        selected.dedup();
        let text = selected
            .iter()
            .map(|&i| sentences[i].raw.as_str())
            .collect::<Vec<_>>()
            .join(" ");
        Self {
            algorithm,
            selected,
            scores,
            text,
            warnings: Vec::new(),
        }
    }

    /// Raw text of each selected sentence.
    pub fn sentences<'a>(&self, source: &'a [TokenizedSentence]) -> Vec<&'a str> {
        self.selected
            .iter()
            .map(|&i| source[i].raw.as_str())
            .collect()
    }

    /// Tokens of the selected sentences, in order.
    pub fn tokens(&self, source: &[TokenizedSentence]) -> Vec<crate::textpipe::Token> {
        self.selected
            .iter()
            .flat_map(|&i| source[i].tokens.iter().cloned())
            .collect()
    }
}

pub(crate) fn check_input(sentences: &[TokenizedSentence], k: usize) -> Result<()> {
    if k < 1 {
        return Err(Error::InvalidK);
    }
    if sentences.is_empty() {
        return Err(Error::EmptyDocument);
    }
    Ok(())
}

/// Indices of the `k` highest scores; ties go to the lower index.
pub(crate) fn top_k(scores: &[f64], k: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]).then(a.cmp(&b)));
    order.truncate(k);
    order.sort_unstable();
    order
}

/// Runs `algorithm` on a prepared document.
pub fn summarize(
    algorithm: Algorithm,
    sentences: &[TokenizedSentence],
    k: usize,
    stops: &StopwordList,
    params: &SummarizerParams,
) -> Result<Summary> {
    match algorithm {
        Algorithm::TextRank => summarize_textrank(sentences, k, stops, &params.damping),
        Algorithm::LexRank => {
            summarize_lexrank(sentences, k, stops, params.lexrank_mode, &params.damping)
        }
        Algorithm::Luhn => summarize_luhn(sentences, k, stops, params.luhn_ratio, params.luhn_gap),
        Algorithm::Lsa => summarize_lsa(sentences, k, stops),
        Algorithm::KlSum => summarize_klsum(sentences, k, stops, params.kl_epsilon),
    }
}
