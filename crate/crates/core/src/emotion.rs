//! Emotion value types shared by every stage of the pipeline.
//!
//! Two vector shapes exist: the four-emotion vector stored in lexicons and
//! the five-dimensional proportion vector produced when text is scored (the
//! four emotions plus a neutral axis). Both are kept normalized to unit sum;
//! the four-emotion vector additionally admits the all-zero value, meaning
//! the word carries no emotional signal.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::EmotionError;

/// Tolerance used for every unit-sum check.
pub const SUM_TOLERANCE: f64 = 1e-9;

/// Emotion labels in canonical order. The declaration order is the order
/// used for serialization, tie-breaking and report rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EmotionLabel {
    Anger,
    Fear,
    Sadness,
    Happiness,
    Neutral,
}

impl EmotionLabel {
    pub const ALL: [EmotionLabel; 5] = [
        EmotionLabel::Anger,
        EmotionLabel::Fear,
        EmotionLabel::Sadness,
        EmotionLabel::Happiness,
        EmotionLabel::Neutral,
    ];

    /// The four labels carried by lexicon entries.
    pub const EMOTIONS: [EmotionLabel; 4] = [
        EmotionLabel::Anger,
        EmotionLabel::Fear,
        EmotionLabel::Sadness,
        EmotionLabel::Happiness,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            EmotionLabel::Anger => "anger",
            EmotionLabel::Fear => "fear",
            EmotionLabel::Sadness => "sadness",
            EmotionLabel::Happiness => "happiness",
            EmotionLabel::Neutral => "neutral",
        }
    }

    /// Position in canonical order.
    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for EmotionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EmotionLabel {
    type Err = EmotionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        EmotionLabel::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| EmotionError::UnknownLabel(s.to_string()))
    }
}

/// Result of [`normalize_sum1`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Normalized<const N: usize> {
    pub values: [f64; N],
    /// Set when the input summed to zero; `values` is then all zeros.
    pub degenerate: bool,
}

/// Rescale a nonnegative vector to unit sum.
///
/// A zero-sum input is returned as all zeros with the `degenerate` flag set.
pub fn normalize_sum1<const N: usize>(v: [f64; N]) -> Result<Normalized<N>, EmotionError> {
    for (i, &x) in v.iter().enumerate() {
        if !x.is_finite() || x < 0.0 {
            return Err(EmotionError::InvalidComponent { index: i, value: x });
        }
    }
    let sum: f64 = v.iter().sum();
    if sum == 0.0 {
        return Ok(Normalized {
            values: [0.0; N],
            degenerate: true,
        });
    }
    Ok(Normalized {
        values: v.map(|x| x / sum),
        degenerate: false,
    })
}

/// Intensities over anger, fear, sadness and happiness.
///
/// Either sums to one or is all zeros (neutral-degenerate).
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EmotionVector4([f64; 4]);

impl EmotionVector4 {
    pub const NEUTRAL_DEGENERATE: EmotionVector4 = EmotionVector4([0.0; 4]);

    /// Normalize arbitrary nonnegative weights into a vector.
    pub fn from_weights(
        anger: f64,
        fear: f64,
        sadness: f64,
        happiness: f64,
    ) -> Result<Self, EmotionError> {
        Ok(Self(normalize_sum1([anger, fear, sadness, happiness])?.values))
    }

    /// Accept already-normalized components, checking the invariant.
    pub fn from_normalized(values: [f64; 4]) -> Result<Self, EmotionError> {
        for (i, &x) in values.iter().enumerate() {
            if !(0.0..=1.0).contains(&x) {
                return Err(EmotionError::InvalidComponent { index: i, value: x });
            }
        }
        let sum: f64 = values.iter().sum();
        if sum != 0.0 && (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(EmotionError::NotNormalized(sum));
        }
        Ok(Self(values))
    }

    pub fn anger(&self) -> f64 {
        self.0[0]
    }
    pub fn fear(&self) -> f64 {
        self.0[1]
    }
    pub fn sadness(&self) -> f64 {
        self.0[2]
    }
    pub fn happiness(&self) -> f64 {
        self.0[3]
    }

    pub fn as_array(&self) -> [f64; 4] {
        self.0
    }

    pub fn get(&self, label: EmotionLabel) -> f64 {
        match label {
            EmotionLabel::Neutral => 0.0,
            other => self.0[other.index()],
        }
    }

    pub fn is_neutral_degenerate(&self) -> bool {
        self.0 == [0.0; 4]
    }

    /// Append the neutral axis. The degenerate vector becomes pure neutral.
    pub fn to_vector5(&self) -> EmotionVector5 {
        if self.is_neutral_degenerate() {
            EmotionVector5::PURE_NEUTRAL
        } else {
            let [a, f, s, h] = self.0;
            EmotionVector5([a, f, s, h, 0.0])
        }
    }
}

/// Proportions over the four emotions plus neutral; always sums to one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmotionVector5([f64; 5]);

impl EmotionVector5 {
    pub const PURE_NEUTRAL: EmotionVector5 = EmotionVector5([0.0, 0.0, 0.0, 0.0, 1.0]);

    pub fn new(values: [f64; 5]) -> Result<Self, EmotionError> {
        for (i, &x) in values.iter().enumerate() {
            if !x.is_finite() || x < 0.0 {
                return Err(EmotionError::InvalidComponent { index: i, value: x });
            }
        }
        let sum: f64 = values.iter().sum();
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(EmotionError::NotNormalized(sum));
        }
        Ok(Self(values))
    }

    /// Normalize nonnegative weights; a zero-sum input yields pure neutral.
    pub fn from_weights(weights: [f64; 5]) -> Result<Self, EmotionError> {
        let n = normalize_sum1(weights)?;
        if n.degenerate {
            Ok(Self::PURE_NEUTRAL)
        } else {
            Ok(Self(n.values))
        }
    }

    /// Componentwise arithmetic mean. `None` for an empty input.
    ///
    /// The result is not renormalized; unit sum holds by linearity.
    pub fn mean<'a, I>(vectors: I) -> Option<Self>
    where
        I: IntoIterator<Item = &'a EmotionVector5>,
    {
        let mut acc = [0.0; 5];
        let mut n = 0usize;
        for v in vectors {
            for (a, x) in acc.iter_mut().zip(v.0) {
                *a += x;
            }
            n += 1;
        }
        if n == 0 {
            return None;
        }
        Some(Self(acc.map(|a| a / n as f64)))
    }

    pub fn get(&self, label: EmotionLabel) -> f64 {
        self.0[label.index()]
    }

    pub fn as_array(&self) -> [f64; 5] {
        self.0
    }

    /// Label of the largest component; the first maximum in canonical order
    /// wins ties.
    pub fn dominant(&self) -> EmotionLabel {
        let mut best = 0;
        for i in 1..5 {
            if self.0[i] > self.0[best] {
                best = i;
            }
        }
        EmotionLabel::ALL[best]
    }
}

/// Free-function form of [`EmotionVector5::dominant`].
pub fn dominant_emotion(v: &EmotionVector5) -> EmotionLabel {
    v.dominant()
}
