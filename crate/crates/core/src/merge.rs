//! Three-stage lexicon merge.
//!
//! NRC-Affect words go in first, then DepecheMood++ words not yet present
//! (reduced to the four shared emotions), then NRC-VAD words not yet present
//! (mapped through the VAD anchors). A word keeps the vector of the first
//! stage that inserted it; nothing is averaged across lexicons.

use crate::emotion::EmotionVector4;
use crate::error::LexiconError;
use crate::lexicon::{Source, UnifiedLexicon};
use crate::lexicon_io::{RawAffectEntry, RawDmEntry, RawVadEntry};
use crate::parallel::{self, Parallelism};
use crate::vad::{map_vad_to_emotions, VadScaling};

// positions of anger, fear, sadness and joy in the DepecheMood++ column order
const DM_KEEP: [usize; 4] = [0, 3, 5, 4];

/// Keep anger, fear, sadness and joy (as happiness) and rescale to unit sum.
/// Anticipation, disgust, surprise and trust are dropped.
pub fn project_depechemood(e: &RawDmEntry) -> EmotionVector4 {
    let [a, f, s, j] = DM_KEEP.map(|i| e.scores[i]);
    EmotionVector4::from_weights(a, f, s, j).expect("parsed scores lie in [0, 1]")
}

pub fn normalize_affect(e: &RawAffectEntry) -> EmotionVector4 {
    let [a, f, s, j] = e.intensities;
    EmotionVector4::from_weights(a, f, s, j).expect("parsed intensities lie in [0, 1]")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MergeOptions {
    pub scaling: VadScaling,
    pub parallelism: Parallelism,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MergeSummary {
    pub affect: usize,
    pub depechemood: usize,
    pub vad: usize,
}

impl MergeSummary {
    pub fn total(&self) -> usize {
        self.affect + self.depechemood + self.vad
    }
}

pub fn merge(
    affect: &[RawAffectEntry],
    dm: &[RawDmEntry],
    vad: &[RawVadEntry],
    options: MergeOptions,
) -> Result<(UnifiedLexicon, MergeSummary), LexiconError> {
    let mut lexicon = UnifiedLexicon::new();
    let mut summary = MergeSummary::default();
    let p = options.parallelism;

    let vectors = parallel::map(affect, p, normalize_affect);
    for (e, v) in affect.iter().zip(vectors) {
        summary.affect += lexicon.insert_if_absent(&e.word, v, Source::Affect)? as usize;
    }

    let pending: Vec<&RawDmEntry> = dm.iter().filter(|e| !lexicon.contains(&e.word)).collect();
    let vectors = parallel::map(&pending, p, |e| project_depechemood(e));
    for (e, v) in pending.iter().zip(vectors) {
        summary.depechemood += lexicon.insert_if_absent(&e.word, v, Source::DepecheMood)? as usize;
    }

    let pending: Vec<&RawVadEntry> = vad.iter().filter(|e| !lexicon.contains(&e.word)).collect();
    let vectors = parallel::map(&pending, p, |e| map_vad_to_emotions(&e.vad, options.scaling));
    for (e, v) in pending.iter().zip(vectors) {
        let v = v.map_err(|source| LexiconError::Vad {
            word: e.word.clone(),
            source,
        })?;
        summary.vad += lexicon.insert_if_absent(&e.word, v, Source::Vad)? as usize;
    }

    Ok((lexicon, summary))
}
