use std::collections::{BTreeMap, HashMap};

use super::Token;
use crate::error::{Error, Result};

/// Exact token counts.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FrequencyTable {
    counts: BTreeMap<Token, usize>,
    total: usize,
}

impl FrequencyTable {
    pub fn count(&self, token: &str) -> usize {
        self.counts.get(token).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.total
    }

    /// Number of distinct tokens.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// All entries by descending count, ties broken lexicographically.
    pub fn ranked(&self) -> Vec<(&Token, usize)> {
        let mut entries: Vec<_> = self.counts.iter().map(|(t, &c)| (t, c)).collect();
        // BTreeMap order is already lexicographic; a stable sort keeps it for ties.
        entries.sort_by_key(|e| std::cmp::Reverse(e.1));
        entries
    }

    pub fn top(&self, k: usize) -> Vec<(&Token, usize)> {
        let mut ranked = self.ranked();
        ranked.truncate(k);
        ranked
    }

    /// `token,count` CSV in ranked order, optionally truncated.
    pub fn to_csv(&self, top: Option<usize>) -> String {
        let rows = match top {
            Some(k) => self.top(k),
            None => self.ranked(),
        };
        let mut out = String::from("token,count\n");
        for (token, count) in rows {
            out.push_str(&csv_field(token.as_str()));
            out.push(',');
            out.push_str(&count.to_string());
            out.push('\n');
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

pub fn build_frequency_table(tokens: &[Token]) -> FrequencyTable {
    let mut counts = BTreeMap::new();
    for t in tokens {
        *counts.entry(t.clone()).or_insert(0) += 1;
    }
    FrequencyTable {
        counts,
        total: tokens.len(),
    }
}

/// A contiguous run of tokens, borrowed from the sequence it was cut from.
pub type NGram<'a> = &'a [Token];

/// N-gram multiset.
pub type NGramCounts<'a> = HashMap<NGram<'a>, usize>;

/// All contiguous windows of length `n`, with multiplicity.
pub fn extract_ngrams(tokens: &[Token], n: usize) -> Result<NGramCounts<'_>> {
    if n < 1 {
        return Err(Error::InvalidN(n));
    }
    let mut counts = HashMap::new();
    for window in tokens.windows(n) {
        *counts.entry(window).or_insert(0) += 1;
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::textpipe::tokenize;
    use proptest::prelude::*;

    #[test]
    fn counts_tokens() {
        let table = build_frequency_table(&tokenize("a b a"));
        assert_eq!(table.count("a"), 2);
        assert_eq!(table.count("b"), 1);
        assert_eq!(table.total(), 3);
        let empty = build_frequency_table(&[]);
        assert!(empty.is_empty());
        assert_eq!(empty.total(), 0);
    }

    #[test]
    fn top_breaks_ties_lexicographically() {
        let table = build_frequency_table(&tokenize("c b a b a"));
        let top: Vec<_> = table
            .top(2)
            .into_iter()
            .map(|(t, c)| (t.as_str(), c))
            .collect();
        assert_eq!(top, [("a", 2), ("b", 2)]);
        assert_eq!(table.to_csv(None), "token,count\na,2\nb,2\nc,1\n");
        assert_eq!(table.to_csv(Some(1)), "token,count\na,2\n");
    }

    #[test]
    fn csv_quotes_commas() {
        let table = build_frequency_table(&tokenize("1,000 1,000"));
        assert_eq!(table.to_csv(None), "token,count\n\"1,000\",2\n");
    }

    #[test]
    fn ngram_windows() {
        let toks = tokenize("a b c");
        let bigrams = extract_ngrams(&toks, 2).unwrap();
        assert_eq!(bigrams.len(), 2);
        assert_eq!(bigrams[&toks[0..2]], 1);
        assert_eq!(bigrams[&toks[1..3]], 1);
        assert!(extract_ngrams(&toks[..2], 3).unwrap().is_empty());
        let aaa = tokenize("a a a");
        let counts = extract_ngrams(&aaa, 2).unwrap();
        assert_eq!(counts.len(), 1);
        assert_eq!(counts[&aaa[0..2]], 2);
        assert!(matches!(extract_ngrams(&aaa, 0), Err(Error::InvalidN(0))));
    }

    proptest! {
        #[test]
        fn counts_sum_to_lengths(s in "[a-d ]{0,60}", n in 1usize..5) {
            let toks = tokenize(&s);
            let table = build_frequency_table(&toks);
            prop_assert_eq!(table.ranked().iter().map(|e| e.1).sum::<usize>(), toks.len());
            prop_assert_eq!(table.total(), toks.len());
            let grams: usize = extract_ngrams(&toks, n).unwrap().values().sum();
            prop_assert_eq!(grams, (toks.len() + 1).saturating_sub(n));
        }
    }
}
