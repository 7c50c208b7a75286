use std::io;

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum EmotionError {
    #[error("component {index} is {value}, expected a finite nonnegative value")]
    InvalidComponent { index: usize, value: f64 },
    #[error("components sum to {0}, expected 1")]
    NotNormalized(f64),
    #[error("unknown emotion label `{0}`")]
    UnknownLabel(String),
}

#[derive(Debug, Error, PartialEq)]
pub enum VadError {
    #[error("{component} = {value} is outside the {scale} range")]
    OutOfRange {
        component: &'static str,
        value: f64,
        scale: &'static str,
    },
    #[error("vector is already on the signed scale")]
    AlreadySigned,
}

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: duplicate word `{word}`")]
    DuplicateWord { line: usize, word: String },
    #[error("invalid lexicon word {0:?}")]
    InvalidWord(String),
    #[error(transparent)]
    Emotion(#[from] EmotionError),
    #[error("word `{word}`: {source}")]
    Vad { word: String, source: VadError },
}

impl LexiconError {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        LexiconError::Parse {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("{source_name} line {line}: {message}")]
    Schema {
        source_name: &'static str,
        line: usize,
        message: String,
    },
    #[error("claims line {line}: duplicate claim id `{id}`")]
    DuplicateClaimId { line: usize, id: String },
}

#[derive(Debug, Error, PartialEq)]
pub enum StatsError {
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("empty group")]
    EmptyGroup,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("similarity is undefined for an empty string")]
pub struct EmptyInput;
