//! Tokenization and stop-word filtering.

use std::collections::HashSet;
use std::io::BufRead;
use std::sync::OnceLock;

use regex::Regex;

/// The bundled English stop-word list.
pub const DEFAULT_STOPWORDS: &str = include_str!("stopwords_en.txt");

fn url_or_mention() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| {
        Regex::new(r"(?i)(?:https?://|www\.)\S+|@[\p{L}\p{N}_]+").expect("static pattern")
    })
}

fn word() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"[\p{L}\p{N}']+").expect("static pattern"))
}

/// Split text into lowercase word tokens.
///
/// URLs and `@mentions` are dropped whole. Anything other than letters,
/// digits and apostrophes separates tokens, so `#fear` yields `fear`.
/// Apostrophes are kept inside words (`don't`) but trimmed from the ends.
pub fn tokenize(text: &str) -> Vec<String> {
    let lowered = text.to_lowercase().replace('\u{2019}', "'");
    let cleaned = url_or_mention().replace_all(&lowered, " ");
    word()
        .find_iter(&cleaned)
        .map(|m| m.as_str().trim_matches('\''))
        .filter(|t| !t.is_empty())
        .map(str::to_string)
        .collect()
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StopWords {
    words: HashSet<String>,
}

impl StopWords {
    /// One word per line; blank lines and `#` comments are skipped. Words are
    /// lowercased.
    pub fn parse<R: BufRead>(input: R) -> std::io::Result<Self> {
        let mut words = HashSet::new();
        for line in input.lines() {
            let line = line?;
            let w = line.trim();
            if w.is_empty() || w.starts_with('#') {
                continue;
            }
            words.insert(w.to_lowercase());
        }
        Ok(Self { words })
    }

    pub fn bundled() -> Self {
        Self::parse(DEFAULT_STOPWORDS.as_bytes()).expect("in-memory read")
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

impl FromIterator<String> for StopWords {
    fn from_iter<I: IntoIterator<Item = String>>(iter: I) -> Self {
        Self {
            words: iter.into_iter().map(|w| w.to_lowercase()).collect(),
        }
    }
}

pub fn remove_stopwords(tokens: Vec<String>, stop: &StopWords) -> Vec<String> {
    tokens.into_iter().filter(|t| !stop.contains(t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<String> {
        tokenize(s)
    }

    #[test]
    fn example_sentence() {
        assert_eq!(toks("This is BIZARRE, lunatic!"), ["this", "is", "bizarre", "lunatic"]);
    }

    #[test]
    fn urls_mentions_hashtags() {
        assert_eq!(toks("see https://x.co @bob #fear"), ["see", "fear"]);
        assert_eq!(toks("(www.example.org/path) ok"), ["ok"]);
        assert_eq!(toks("@Bob_99: HTTP://A.B/c?d=1 #Covid19"), ["covid19"]);
    }

    #[test]
    fn empty_and_punctuation_only() {
        assert!(toks("").is_empty());
        assert!(toks("  ... !!! ''").is_empty());
    }

    #[test]
    fn apostrophes() {
        assert_eq!(toks("Don\u{2019}t 'panic'"), ["don't", "panic"]);
    }

    #[test]
    fn unicode_letters_survive() {
        assert_eq!(toks("Über café"), ["über", "café"]);
    }

    #[test]
    fn tokens_contain_no_whitespace() {
        for t in toks("a\tb\nc  d\u{00a0}e") {
            assert!(!t.chars().any(char::is_whitespace));
        }
    }

    #[test]
    fn stopword_removal() {
        let stop = StopWords::bundled();
        assert!(stop.contains("this") && stop.contains("is"));
        assert_eq!(
            remove_stopwords(toks("This is BIZARRE, lunatic!"), &stop),
            ["bizarre", "lunatic"]
        );
        assert!(remove_stopwords(toks("this is it"), &stop).is_empty());
        assert!(remove_stopwords(Vec::new(), &stop).is_empty());
    }

    #[test]
    fn bundled_list_size() {
        assert_eq!(StopWords::bundled().len(), 179);
        let custom = StopWords::parse(&b"# c\nFoo\n\nbar\n"[..]).unwrap();
        assert_eq!(custom.len(), 2);
        assert!(custom.contains("foo"));
    }
}
