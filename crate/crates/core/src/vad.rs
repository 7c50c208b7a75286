//! Valence/arousal/dominance to four-emotion mapping.
//!
//! A VAD triple is compared by cosine similarity against one reference point
//! per emotion. Negative similarities are clamped to zero and the profile is
//! rescaled to unit sum.
//!
//! Lexicon VAD scores live on `[0, 1]` while the reference points are signed,
//! so by default inputs are recentered with `x -> 2x - 1` first.
//! [`VadScaling::Literal`] skips that step; it is kept for comparison only
//! and scores a clearly negative word like "deadly" as mostly happy.

use crate::emotion::{EmotionLabel, EmotionVector4};
use crate::error::VadError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VadScale {
    /// Components in `[0, 1]`, as distributed in VAD lexicons.
    Raw01,
    /// Components in `[-1, 1]`.
    Signed,
}

impl VadScale {
    fn name(self) -> &'static str {
        match self {
            VadScale::Raw01 => "[0, 1]",
            VadScale::Signed => "[-1, 1]",
        }
    }

    fn range(self) -> std::ops::RangeInclusive<f64> {
        match self {
            VadScale::Raw01 => 0.0..=1.0,
            VadScale::Signed => -1.0..=1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VadVector {
    pub valence: f64,
    pub arousal: f64,
    pub dominance: f64,
    scale: VadScale,
}

impl VadVector {
    pub fn raw01(valence: f64, arousal: f64, dominance: f64) -> Result<Self, VadError> {
        Self::with_scale(valence, arousal, dominance, VadScale::Raw01)
    }

    pub fn signed(valence: f64, arousal: f64, dominance: f64) -> Result<Self, VadError> {
        Self::with_scale(valence, arousal, dominance, VadScale::Signed)
    }

    fn with_scale(v: f64, a: f64, d: f64, scale: VadScale) -> Result<Self, VadError> {
        for (component, value) in [("valence", v), ("arousal", a), ("dominance", d)] {
            if !scale.range().contains(&value) {
                return Err(VadError::OutOfRange {
                    component,
                    value,
                    scale: scale.name(),
                });
            }
        }
        Ok(Self {
            valence: v,
            arousal: a,
            dominance: d,
            scale,
        })
    }

    pub fn scale(&self) -> VadScale {
        self.scale
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.valence, self.arousal, self.dominance]
    }
}

/// Reference VAD coordinates (signed scale) for the four emotions.
#[derive(Debug, Clone, Copy)]
pub struct EmotionAnchor {
    pub emotion: EmotionLabel,
    pub vad: [f64; 3],
}

pub const ANCHORS: [EmotionAnchor; 4] = [
    EmotionAnchor {
        emotion: EmotionLabel::Happiness,
        vad: [0.76, 0.48, 0.35],
    },
    EmotionAnchor {
        emotion: EmotionLabel::Anger,
        vad: [-0.51, 0.59, 0.25],
    },
    EmotionAnchor {
        emotion: EmotionLabel::Fear,
        vad: [-0.64, 0.60, -0.43],
    },
    EmotionAnchor {
        emotion: EmotionLabel::Sadness,
        vad: [-0.63, -0.27, -0.33],
    },
];

/// Anchor coordinates for one of the four emotions.
pub fn anchor(emotion: EmotionLabel) -> Option<[f64; 3]> {
    ANCHORS.iter().find(|a| a.emotion == emotion).map(|a| a.vad)
}

/// How raw lexicon VAD scores are brought onto the anchors' scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VadScaling {
    #[default]
    Recenter,
    /// Use raw `[0, 1]` scores as if they were signed.
    Literal,
}

/// Map `[0, 1]` components onto `[-1, 1]`.
pub fn recenter_vad(v: &VadVector) -> Result<VadVector, VadError> {
    if v.scale == VadScale::Signed {
        return Err(VadError::AlreadySigned);
    }
    VadVector::signed(
        2.0 * v.valence - 1.0,
        2.0 * v.arousal - 1.0,
        2.0 * v.dominance - 1.0,
    )
}

/// Cosine of the angle between two vectors, `None` if either is zero.
pub fn cosine_similarity(a: &[f64; 3], b: &[f64; 3]) -> Option<f64> {
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    let na = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nb = b.iter().map(|x| x * x).sum::<f64>().sqrt();
    if na == 0.0 || nb == 0.0 {
        return None;
    }
    Some((dot / (na * nb)).clamp(-1.0, 1.0))
}

/// Cosine profile of a signed-scale triple against the anchors, in canonical
/// label order (anger, fear, sadness, happiness).
pub fn anchor_similarities(signed: &[f64; 3]) -> Option<[f64; 4]> {
    let mut out = [0.0; 4];
    for a in &ANCHORS {
        out[a.emotion.index()] = cosine_similarity(signed, &a.vad)?;
    }
    Some(out)
}

/// Map a raw lexicon VAD triple to a four-emotion vector.
///
/// Returns the neutral-degenerate vector when the (recentered) triple is zero
/// or no anchor has a positive similarity.
pub fn map_vad_to_emotions(
    v: &VadVector,
    scaling: VadScaling,
) -> Result<EmotionVector4, VadError> {
    let raw = VadVector::raw01(v.valence, v.arousal, v.dominance)?;
    let point = match scaling {
        VadScaling::Recenter => recenter_vad(&raw)?.as_array(),
        VadScaling::Literal => raw.as_array(),
    };
    let Some(cosines) = anchor_similarities(&point) else {
        return Ok(EmotionVector4::NEUTRAL_DEGENERATE);
    };
    let [a, f, s, h] = cosines.map(|c| c.max(0.0));
    // clamped values are finite and nonnegative, so this cannot fail
    Ok(EmotionVector4::from_weights(a, f, s, h).expect("clamped cosines are nonnegative"))
}
