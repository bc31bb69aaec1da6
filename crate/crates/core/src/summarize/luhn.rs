use std::collections::{BTreeMap, HashSet};

use super::{check_input, top_k, Algorithm, Summary};
use crate::error::{Error, Result};
use crate::textpipe::{build_frequency_table, StopwordList, Token, TokenizedSentence};

/// A run of tokens that starts and ends on significant words.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LuhnWindow {
    pub start: usize,
    pub end: usize,
    pub significant_count: usize,
    pub span: usize,
}

impl LuhnWindow {
    /// `significant_count² / span`
    pub fn score(&self) -> f64 {
        (self.significant_count * self.significant_count) as f64 / self.span as f64
    }
}

/// Maximal windows over a significance mask. A window closes when more than
/// `gap_limit` non-significant tokens separate two significant ones.
pub fn luhn_windows(significant: &[bool], gap_limit: usize) -> Vec<LuhnWindow> {
    let mut windows = Vec::new();
    let mut current: Option<LuhnWindow> = None;
    for (i, _) in significant.iter().enumerate().filter(|(_, &s)| s) {
        current = match current {
            Some(mut w) if i - w.end - 1 <= gap_limit => {
                w.end = i;
                w.significant_count += 1;
                w.span = w.end - w.start + 1;
                Some(w)
            }
            other => {
                windows.extend(other);
                Some(LuhnWindow {
                    start: i,
                    end: i,
                    significant_count: 1,
                    span: 1,
                })
            }
        };
    }
    windows.extend(current);
    windows
}

/// Best window score over a significance mask; 0 if nothing is significant.
pub fn luhn_window_score(significant: &[bool], gap_limit: usize) -> f64 {
    luhn_windows(significant, gap_limit)
        .iter()
        .map(LuhnWindow::score)
        .fold(0.0, f64::max)
}

pub fn luhn_sentence_score(
    sentence: &TokenizedSentence,
    significant: &HashSet<Token>,
    gap_limit: usize,
) -> f64 {
    let mask: Vec<bool> = sentence
        .tokens
        .iter()
        .map(|t| significant.contains(t))
        .collect();
    luhn_window_score(&mask, gap_limit)
}

/// The `⌈ratio × |content vocabulary|⌉` most frequent content words (at
/// least one), count ties broken lexicographically.
pub fn significant_words(
    sentences: &[TokenizedSentence],
    stops: &StopwordList,
    ratio: f64,
) -> HashSet<Token> {
    let content: Vec<Token> = sentences
        .iter()
        .flat_map(|s| s.content_tokens(stops).cloned())
        .collect();
    let table = build_frequency_table(&content);
    if table.is_empty() {
        return HashSet::new();
    }
    let keep = ((ratio * table.len() as f64).ceil() as usize).max(1);
    table
        .top(keep)
        .into_iter()
        .map(|(t, _)| t.clone())
        .collect()
}

pub fn summarize_luhn(
    sentences: &[TokenizedSentence],
    k: usize,
    stops: &StopwordList,
    ratio: f64,
    gap_limit: usize,
) -> Result<Summary> {
    check_input(sentences, k)?;
    if !(ratio > 0.0 && ratio <= 1.0) {
        return Err(Error::InvalidParameter(format!(
            "luhn significance ratio {ratio}"
        )));
    }
    let significant = significant_words(sentences, stops, ratio);
    let scores: Vec<f64> = sentences
        .iter()
        .map(|s| luhn_sentence_score(s, &significant, gap_limit))
        .collect();
    let selected = top_k(&scores, k);
    let score_map: BTreeMap<usize, f64> = scores.into_iter().enumerate().collect();
    Ok(Summary::new(
        Algorithm::Luhn,
        sentences,
        selected,
        score_map,
    ))
}
