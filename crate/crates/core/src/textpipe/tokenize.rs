use super::Token;

/// Whitespace split, lowercase, strip punctuation at both ends, drop empties.
///
/// Internal punctuation survives, so `high-entropy` and `3.5` stay whole.
pub fn tokenize(raw_sentence: &str) -> Vec<Token> {
    raw_sentence
        .split_whitespace()
        .filter_map(Token::normalize)
        .collect()
}

/// True for tokens made only of digits and numeric punctuation (`42`, `3.5`, `1,000`).
pub fn is_numeral(token: &Token) -> bool {
    let s = token.as_str();
    s.chars().any(|c| c.is_numeric())
        && s.chars()
            .all(|c| c.is_numeric() || matches!(c, '.' | ',' | '-' | '/'))
}
