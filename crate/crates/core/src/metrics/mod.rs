//! BLEU and ROUGE-N over normalized token sequences.
//!
//! Both metrics use clipped n-gram matching: a candidate n-gram counts at
//! most as many times as it appears in the reference.

mod bleu;
mod rouge;

pub use bleu::{
    bleu_score, brevity_penalty, geometric_average_precision, modified_ngram_precision,
    BleuBreakdown, BleuOptions,
};
pub use rouge::{f1_from, rouge_n, RougeScore};

use crate::error::Result;
use crate::textpipe::{extract_ngrams, Token};

/// Clipped overlap `Σ_g min(count_a(g), count_b(g))` plus the n-gram totals
/// of each side.
pub(crate) fn clipped_overlap(a: &[Token], b: &[Token], n: usize) -> Result<(usize, usize, usize)> {
    let grams_a = extract_ngrams(a, n)?;
    let grams_b = extract_ngrams(b, n)?;
    let overlap = grams_a
        .iter()
        .map(|(g, &ca)| ca.min(grams_b.get(g).copied().unwrap_or(0)))
        .sum();
    Ok((overlap, grams_a.values().sum(), grams_b.values().sum()))
}
