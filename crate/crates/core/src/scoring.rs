//! Bag-of-words emotion scoring.
//!
//! A text is tokenized, stop words are dropped and each remaining token is
//! resolved against the lexicon: an exact hit, else the closest word above
//! the fuzzy threshold, else nothing. Hits contribute their four-emotion
//! vector with zero neutral mass; misses and neutral-degenerate entries
//! contribute pure neutral. The text's score is the mean contribution.

use crate::emotion::{EmotionVector4, EmotionVector5};
use crate::fuzzy::{FuzzyIndex, DEFAULT_THRESHOLD};
use crate::lexicon::UnifiedLexicon;
use crate::parallel::{self, Parallelism};
use crate::text::{remove_stopwords, tokenize, StopWords};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScoreResult {
    pub vector: EmotionVector5,
    /// Tokens found verbatim in the lexicon.
    pub matched: usize,
    /// Tokens resolved through the closest-word search.
    pub fuzzy: usize,
    /// Tokens with no lexicon entry, scored as pure neutral.
    pub neutral_tokens: usize,
    /// Tokens scored after stop-word removal.
    pub k: usize,
}

/// How a token was resolved.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Resolution<'a> {
    Exact(&'a EmotionVector4),
    Fuzzy {
        word: &'a str,
        vector: &'a EmotionVector4,
        similarity: f64,
    },
    NotFound,
}

impl Resolution<'_> {
    /// Five-dimensional contribution of the token.
    pub fn contribution(&self) -> EmotionVector5 {
        match self {
            Resolution::Exact(v) | Resolution::Fuzzy { vector: v, .. } => v.to_vector5(),
            Resolution::NotFound => EmotionVector5::PURE_NEUTRAL,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScoringConfig {
    /// Similarity a fuzzy match must exceed; `None` disables fuzzy matching.
    pub fuzzy_threshold: Option<f64>,
}

impl Default for ScoringConfig {
    fn default() -> Self {
        Self {
            fuzzy_threshold: Some(DEFAULT_THRESHOLD),
        }
    }
}

/// A lexicon prepared for scoring: the word map, the fuzzy index and the
/// stop-word list. Immutable and shareable across threads.
#[derive(Debug, Clone)]
pub struct Scorer {
    lexicon: UnifiedLexicon,
    vectors: Vec<EmotionVector4>,
    index: Option<FuzzyIndex>,
    stopwords: StopWords,
}

impl Scorer {
    pub fn new(lexicon: UnifiedLexicon, stopwords: StopWords, config: ScoringConfig) -> Self {
        let vectors = lexicon.iter().map(|(_, e)| e.vector).collect();
        let index = config
            .fuzzy_threshold
            .map(|t| FuzzyIndex::new(lexicon.words(), t));
        Self {
            lexicon,
            vectors,
            index,
            stopwords,
        }
    }

    pub fn lexicon(&self) -> &UnifiedLexicon {
        &self.lexicon
    }

    pub fn stopwords(&self) -> &StopWords {
        &self.stopwords
    }

    pub fn fuzzy_index(&self) -> Option<&FuzzyIndex> {
        self.index.as_ref()
    }

    pub fn resolve(&self, token: &str) -> Resolution<'_> {
        if let Some(entry) = self.lexicon.get(token) {
            return Resolution::Exact(&entry.vector);
        }
        match self.index.as_ref().and_then(|ix| ix.lookup(token).map(|h| (ix, h))) {
            Some((ix, hit)) => Resolution::Fuzzy {
                word: ix.word(hit.index),
                vector: &self.vectors[hit.index],
                similarity: hit.similarity,
            },
            None => Resolution::NotFound,
        }
    }

    /// Tokens that survive stop-word removal.
    pub fn tokens(&self, text: &str) -> Vec<String> {
        remove_stopwords(tokenize(text), &self.stopwords)
    }

    pub fn score_text(&self, text: &str) -> ScoreResult {
        self.score_tokens(&self.tokens(text))
    }

    pub fn score_tokens<S: AsRef<str>>(&self, tokens: &[S]) -> ScoreResult {
        let mut sum = [0.0; 5];
        let (mut matched, mut fuzzy, mut neutral_tokens) = (0, 0, 0);
        for t in tokens {
            let r = self.resolve(t.as_ref());
            match r {
                Resolution::Exact(_) => matched += 1,
                Resolution::Fuzzy { .. } => fuzzy += 1,
                Resolution::NotFound => neutral_tokens += 1,
            }
            for (s, x) in sum.iter_mut().zip(r.contribution().as_array()) {
                *s += x;
            }
        }
        let k = tokens.len();
        let vector = if k == 0 {
            EmotionVector5::PURE_NEUTRAL
        } else {
            let mean = sum.map(|s| s / k as f64);
            EmotionVector5::from_weights(mean).expect("contributions are nonnegative")
        };
        ScoreResult {
            vector,
            matched,
            fuzzy,
            neutral_tokens,
            k,
        }
    }

    /// Score many texts; output order matches input order.
    pub fn score_batch<S: AsRef<str> + Sync>(
        &self,
        texts: &[S],
        parallelism: Parallelism,
    ) -> Vec<ScoreResult> {
        parallel::map(texts, parallelism, |t| self.score_text(t.as_ref()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::emotion::EmotionLabel;
    use crate::lexicon::Source;

    fn deadly_scorer() -> Scorer {
        let mut lex = UnifiedLexicon::new();
        let v = EmotionVector4::from_weights(0.76, 0.90, 0.88, 0.0).unwrap();
        lex.insert_if_absent("deadly", v, Source::Affect).unwrap();
        lex.insert_if_absent("blank", EmotionVector4::NEUTRAL_DEGENERATE, Source::DepecheMood)
            .unwrap();
        Scorer::new(lex, StopWords::bundled(), ScoringConfig::default())
    }

    fn close(a: [f64; 5], b: [f64; 5], tol: f64) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn only_stop_words_is_pure_neutral() {
        let s = deadly_scorer();
        let r = s.score_text("this is it");
        assert_eq!(r.vector, EmotionVector5::PURE_NEUTRAL);
        assert_eq!(r.k, 0);
        assert_eq!(s.score_text("").vector, EmotionVector5::PURE_NEUTRAL);
    }

    #[test]
    fn repetition_does_not_change_the_score() {
        let s = deadly_scorer();
        let once = s.score_text("deadly");
        let twice = s.score_text("deadly deadly");
        assert!(close(once.vector.as_array(), twice.vector.as_array(), 1e-15));
        assert!(close(
            twice.vector.as_array(),
            [0.2992, 0.3543, 0.3465, 0.0, 0.0],
            1e-4
        ));
        assert_eq!(twice.matched, 2);
    }

    #[test]
    fn one_hit_and_one_miss() {
        let s = deadly_scorer();
        let r = s.score_text("deadly qqqq");
        assert!(close(
            r.vector.as_array(),
            [0.1496, 0.1772, 0.1732, 0.0, 0.5],
            1e-4
        ));
        assert_eq!((r.matched, r.fuzzy, r.neutral_tokens, r.k), (1, 0, 1, 2));
    }

    #[test]
    fn fuzzy_hits_are_counted() {
        let s = deadly_scorer();
        let r = s.score_text("DEADLYY!");
        assert_eq!((r.matched, r.fuzzy, r.neutral_tokens), (0, 1, 0));
        assert_eq!(r.vector.dominant(), EmotionLabel::Fear);
        match s.resolve("deadlyy") {
            Resolution::Fuzzy { word, .. } => assert_eq!(word, "deadly"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn fuzzy_can_be_disabled() {
        let s = deadly_scorer();
        let strict = Scorer::new(
            s.lexicon().clone(),
            StopWords::empty(),
            ScoringConfig {
                fuzzy_threshold: None,
            },
        );
        assert_eq!(strict.resolve("deadlyy"), Resolution::NotFound);
    }

    #[test]
    fn degenerate_entries_count_as_hits_but_score_neutral() {
        let s = deadly_scorer();
        let r = s.score_text("blank");
        assert_eq!(r.vector, EmotionVector5::PURE_NEUTRAL);
        assert_eq!(r.matched, 1);
    }

    #[test]
    fn batch_matches_single() {
        let s = deadly_scorer();
        let texts = ["deadly", "nothing here", "deadly qqqq", ""];
        let single: Vec<_> = texts.iter().map(|t| s.score_text(t)).collect();
        for p in [Parallelism::Sequential, Parallelism::Threads(2)] {
            assert_eq!(s.score_batch(&texts, p), single);
        }
    }
}
