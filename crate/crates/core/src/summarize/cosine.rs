use std::collections::BTreeMap;

use crate::textpipe::{IdfTable, Token};

/// Bag-of-words vector with `weight(w) = occurrences(w) × idf(w)`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SentenceVector {
    weights: BTreeMap<Token, f64>,
}

impl SentenceVector {
    /// Words missing from `idf` get idf 1.
    pub fn new<'a>(tokens: impl IntoIterator<Item = &'a Token>, idf: &IdfTable) -> Self {
        let mut tf: BTreeMap<Token, f64> = BTreeMap::new();
        for t in tokens {
            *tf.entry(t.clone()).or_insert(0.0) += 1.0;
        }
        let weights = tf
            .into_iter()
            .map(|(t, count)| {
                let w = count * idf.get(t.as_str()).unwrap_or(1.0);
                (t, w)
            })
            .collect();
        Self { weights }
    }

    pub fn weight(&self, token: &str) -> f64 {
        self.weights.get(token).copied().unwrap_or(0.0)
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    fn norm(&self) -> f64 {
        self.weights.values().map(|w| w * w).sum::<f64>().sqrt()
    }
}

/// IDF-modified cosine similarity:
/// `Σ tf_x tf_y idf² / (‖tf·idf‖_x ‖tf·idf‖_y)`, 0 for empty vectors.
pub fn idf_modified_cosine(x: &SentenceVector, y: &SentenceVector) -> f64 {
    if x.is_empty() || y.is_empty() {
        return 0.0;
    }
    let (small, large) = if x.weights.len() <= y.weights.len() {
        (x, y)
    } else {
        (y, x)
    };
    let dot: f64 = small
        .weights
        .iter()
        .map(|(t, w)| w * large.weight(t.as_str()))
        .sum();
    let denom = x.norm() * y.norm();
    if denom == 0.0 {
        return 0.0;
    }
    (dot / denom).clamp(0.0, 1.0)
}
