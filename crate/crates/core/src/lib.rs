//! Emotion lexicon fusion and bag-of-words emotion scoring.
//!
//! The pipeline has three parts:
//!
//! 1. [`lexicon_io`] reads NRC-Affect, DepecheMood++ and NRC-VAD dumps, and
//!    [`merge`] folds them into one [`UnifiedLexicon`] over anger, fear,
//!    sadness and happiness ([`vad`] maps VAD triples onto those four).
//! 2. [`scoring`] turns a text into proportions over the four emotions plus
//!    neutral, with a Ratcliff/Obershelp closest-word fallback ([`fuzzy`]).
//! 3. [`corpus`], [`analytics`] and [`report`] score claim/reply corpora and
//!    write per-credibility summaries.
//!
//! Batch operations take a [`Parallelism`]; results are identical at every
//! setting.

pub mod analytics;
pub mod corpus;
pub mod emotion;
pub mod error;
pub mod fuzzy;
pub mod gestalt;
pub mod lexicon;
pub mod lexicon_io;
pub mod merge;
pub mod parallel;
pub mod report;
pub mod scoring;
pub mod stats;
pub mod text;
pub mod vad;

pub use emotion::{dominant_emotion, normalize_sum1, EmotionLabel, EmotionVector4, EmotionVector5};
pub use lexicon::{LexiconEntry, Source, UnifiedLexicon};
pub use parallel::Parallelism;
pub use scoring::{ScoreResult, Scorer, ScoringConfig};
