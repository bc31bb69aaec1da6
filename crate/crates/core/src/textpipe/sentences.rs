/// Words whose trailing period never ends a sentence. Compared lowercased,
/// without the final period.
pub const ABBREVIATIONS: &[&str] = &[
    "al", "approx", "ca", "cf", "dr", "e.g", "eq", "eqs", "fig", "figs", "i.e", "jr", "mr", "mrs",
    "ms", "no", "prof", "ref", "refs", "sec", "sr", "st", "vol", "vs",
];

const CLOSERS: &[char] = &['"', '\'', ')', ']', '}', '\u{201d}', '\u{2019}'];

/// A sentence located in its source text by byte offsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SentenceSpan<'a> {
    pub start: usize,
    pub end: usize,
    pub raw: &'a str,
}

/// Rule-based sentence segmentation.
///
/// A sentence ends after `.`, `!` or `?` (plus any closing quotes or
/// brackets) when whitespace follows and the next visible character is an
/// uppercase letter or a digit. A period ending a known abbreviation or a
/// single-letter initial does not end a sentence. Trailing text without a
/// terminator forms the last sentence.
pub fn split_sentences(text: &str) -> Vec<SentenceSpan<'_>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut spans = Vec::new();
    let mut start: Option<usize> = None;
    let mut i = 0;

    while i < chars.len() {
        let (pos, c) = chars[i];
        if start.is_none() {
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            start = Some(pos);
        }
        if matches!(c, '.' | '!' | '?') {
            let mut j = i + 1;
            while j < chars.len() && CLOSERS.contains(&chars[j].1) {
                j += 1;
            }
            if j < chars.len() && chars[j].1.is_whitespace() {
                let mut k = j;
                while k < chars.len() && chars[k].1.is_whitespace() {
                    k += 1;
                }
                let next_opens =
                    k < chars.len() && (chars[k].1.is_uppercase() || chars[k].1.is_numeric());
                let s = start.expect("sentence start set above");
                if next_opens && !(c == '.' && ends_with_abbreviation(&text[s..pos])) {
                    let end = chars[j].0;
                    spans.push(SentenceSpan {
                        start: s,
                        end,
                        raw: &text[s..end],
                    });
                    start = None;
                    i = k;
                    continue;
                }
            }
        }
        i += 1;
    }

    if let Some(s) = start {
        let raw = text[s..].trim_end();
        if !raw.is_empty() {
            spans.push(SentenceSpan {
                start: s,
                end: s + raw.len(),
                raw,
            });
        }
    }
    spans
}

fn ends_with_abbreviation(before_period: &str) -> bool {
    let word = before_period
        .rsplit(char::is_whitespace)
        .next()
        .unwrap_or("")
        .trim_start_matches(|c: char| !c.is_alphanumeric());
    let mut letters = word.chars();
    if let (Some(only), None) = (letters.next(), letters.next()) {
        if only.is_uppercase() {
            return true;
        }
    }
    let lowered = word.to_lowercase();
    ABBREVIATIONS.contains(&lowered.as_str())
}
