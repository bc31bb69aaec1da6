//! Deterministic text preprocessing shared by every summarizer and metric.

mod freq;
mod idf;
mod sentences;
mod stopwords;
mod tokenize;

use std::borrow::Borrow;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use freq::{build_frequency_table, extract_ngrams, FrequencyTable, NGram, NGramCounts};
pub use idf::{compute_idf, IdfTable};
pub use sentences::{split_sentences, SentenceSpan, ABBREVIATIONS};
pub use stopwords::{remove_stopwords, StopwordList};
pub use tokenize::{is_numeral, tokenize};

/// A normalized word: lowercased, with no leading or trailing punctuation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Token(String);

impl Token {
    /// Normalizes `raw` into a token, or `None` if nothing survives.
    pub fn normalize(raw: &str) -> Option<Token> {
        let lowered = raw.to_lowercase();
        let trimmed = lowered.trim_matches(|c: char| !c.is_alphanumeric());
        if trimmed.is_empty() {
            None
        } else {
            Some(Token(trimmed.to_owned()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Number of Unicode scalar values.
    pub fn char_len(&self) -> usize {
        self.0.chars().count()
    }
}

impl Borrow<str> for Token {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for Token {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// One sentence of a document: its verbatim text and its normalized tokens.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TokenizedSentence {
    pub index: usize,
    pub tokens: Vec<Token>,
    pub raw: String,
}

impl TokenizedSentence {
    pub fn new(index: usize, raw: impl Into<String>) -> Self {
        let raw = raw.into();
        let tokens = tokenize(&raw);
        Self { index, tokens, raw }
    }

    /// Tokens that are not in `stops`, in order.
    pub fn content_tokens<'a>(
        &'a self,
        stops: &'a StopwordList,
    ) -> impl Iterator<Item = &'a Token> + 'a {
        self.tokens.iter().filter(move |t| !stops.contains(t))
    }
}

/// Splits and tokenizes a whole document.
pub fn prepare_document(text: &str) -> Vec<TokenizedSentence> {
    split_sentences(text)
        .into_iter()
        .enumerate()
        .map(|(i, span)| TokenizedSentence::new(i, span.raw))
        .collect()
}

/// Tokens of every sentence of `text`, concatenated.
pub fn document_tokens(text: &str) -> Vec<Token> {
    prepare_document(text)
        .into_iter()
        .flat_map(|s| s.tokens)
        .collect()
}
