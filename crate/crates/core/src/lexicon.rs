use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::str::FromStr;

use crate::emotion::EmotionVector4;
use crate::error::LexiconError;

/// Which merge stage inserted a word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Source {
    Affect,
    DepecheMood,
    Vad,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::Affect => "AFFECT",
            Source::DepecheMood => "DM",
            Source::Vad => "VAD",
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Source {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "AFFECT" => Ok(Source::Affect),
            "DM" => Ok(Source::DepecheMood),
            "VAD" => Ok(Source::Vad),
            other => Err(format!("unknown source `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LexiconEntry {
    pub vector: EmotionVector4,
    pub source: Source,
}

/// Word to four-emotion vector map, iterated in lexicographic word order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct UnifiedLexicon {
    entries: BTreeMap<String, LexiconEntry>,
}

/// Lexicon words are stored lowercase and must survive a TSV round trip.
pub(crate) fn check_word(word: &str) -> Result<(), LexiconError> {
    let bad = word.is_empty()
        || word.chars().any(|c| c == '\t' || c == '\n' || c == '\r')
        || word.to_lowercase() != word;
    if bad {
        Err(LexiconError::InvalidWord(word.to_string()))
    } else {
        Ok(())
    }
}

impl UnifiedLexicon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Insert a word unless it is already present. Returns whether it was
    /// inserted.
    pub fn insert_if_absent(
        &mut self,
        word: &str,
        vector: EmotionVector4,
        source: Source,
    ) -> Result<bool, LexiconError> {
        check_word(word)?;
        match self.entries.entry(word.to_string()) {
            btree_map::Entry::Occupied(_) => Ok(false),
            btree_map::Entry::Vacant(slot) => {
                slot.insert(LexiconEntry { vector, source });
                Ok(true)
            }
        }
    }

    pub fn get(&self, word: &str) -> Option<&LexiconEntry> {
        self.entries.get(word)
    }

    pub fn contains(&self, word: &str) -> bool {
        self.entries.contains_key(word)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &LexiconEntry)> {
        self.entries.iter().map(|(w, e)| (w.as_str(), e))
    }

    pub fn words(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn count_by_source(&self, source: Source) -> usize {
        self.entries.values().filter(|e| e.source == source).count()
    }
}
