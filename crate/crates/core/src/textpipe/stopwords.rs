use std::collections::HashSet;

use super::Token;

const ENGLISH: &str = include_str!("stopwords_en.txt");

/// A set of normalized tokens to drop before analysis.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StopwordList {
    words: HashSet<Token>,
}

impl StopwordList {
    /// The bundled English list.
    pub fn english() -> Self {
        Self::parse(ENGLISH)
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Parses a stopword file: one word per line, `#` starts a comment.
    /// Entries are normalized like any other token.
    pub fn parse(contents: &str) -> Self {
        let words = contents
            .lines()
            .map(|line| line.split('#').next().unwrap_or(""))
            .filter_map(|line| Token::normalize(line.trim()))
            .collect();
        Self { words }
    }

    pub fn from_words<I, S>(words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        Self {
            words: words
                .into_iter()
                .filter_map(|w| Token::normalize(w.as_ref()))
                .collect(),
        }
    }

    pub fn contains(&self, token: &Token) -> bool {
        self.words.contains(token)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Order-preserving filter that drops every token in `stops`.
pub fn remove_stopwords(tokens: &[Token], stops: &StopwordList) -> Vec<Token> {
    tokens
        .iter()
        .filter(|t| !stops.contains(t))
        .cloned()
        .collect()
}
