//! Readers for the three source lexicon formats and the unified lexicon TSV.
//!
//! All inputs are tab-separated UTF-8. Words are lowercased on read; a word
//! seen twice keeps its first occurrence and produces a [`ParseWarning`].
//!
//! | format        | columns                                                        | header   |
//! |---------------|----------------------------------------------------------------|----------|
//! | DepecheMood++ | `word anger anticipation disgust fear joy sadness surprise trust` | optional |
//! | NRC-Affect    | `word emotion score` (long format, one emotion per row)        | optional |
//! | NRC-VAD       | `word valence arousal dominance`                               | optional |
//! | unified       | `word anger fear sadness happiness source`                     | required |

use std::collections::hash_map::{Entry, HashMap};
use std::io::{BufRead, Write};

use crate::emotion::EmotionVector4;
use crate::error::LexiconError;
use crate::lexicon::{check_word, Source, UnifiedLexicon};
use crate::vad::VadVector;

pub const DM_COLUMNS: [&str; 8] = [
    "anger",
    "anticipation",
    "disgust",
    "fear",
    "joy",
    "sadness",
    "surprise",
    "trust",
];

pub const AFFECT_EMOTIONS: [&str; 4] = ["anger", "fear", "sadness", "joy"];

pub const UNIFIED_HEADER: &str = "word\tanger\tfear\tsadness\thappiness\tsource";

#[derive(Debug, Clone, PartialEq)]
pub struct RawDmEntry {
    pub word: String,
    /// Scores in [`DM_COLUMNS`] order.
    pub scores: [f64; 8],
}

impl RawDmEntry {
    pub fn score(&self, column: &str) -> Option<f64> {
        DM_COLUMNS
            .iter()
            .position(|c| *c == column)
            .map(|i| self.scores[i])
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RawAffectEntry {
    pub word: String,
    /// Intensities in [`AFFECT_EMOTIONS`] order; absent emotions are 0.
    pub intensities: [f64; 4],
}

#[derive(Debug, Clone, PartialEq)]
pub struct RawVadEntry {
    pub word: String,
    pub vad: VadVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseWarning {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Parsed<T> {
    pub entries: Vec<T>,
    pub warnings: Vec<ParseWarning>,
}

/// Yields `(line_number, line)` for nonblank lines, trailing CR stripped.
fn numbered_lines<R: BufRead>(
    input: R,
) -> impl Iterator<Item = Result<(usize, String), LexiconError>> {
    input
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Ok(mut l) => {
                if l.ends_with('\r') {
                    l.pop();
                }
                if l.trim().is_empty() {
                    None
                } else {
                    Some(Ok((i + 1, l)))
                }
            }
            Err(e) => Some(Err(e.into())),
        })
}

/// Returns true if `fields` is the header line; errors if it looks like a
/// header but names different columns.
fn is_header(fields: &[&str], expected: &[&str], line: usize) -> Result<bool, LexiconError> {
    if !fields[0].eq_ignore_ascii_case(expected[0]) {
        return Ok(false);
    }
    let matches = fields.len() == expected.len()
        && fields
            .iter()
            .zip(expected)
            .all(|(f, e)| f.trim().eq_ignore_ascii_case(e));
    if matches {
        Ok(true)
    } else {
        Err(LexiconError::parse(
            line,
            format!("unexpected header, expected columns: {}", expected.join(" ")),
        ))
    }
}

fn parse_word(raw: &str, line: usize) -> Result<String, LexiconError> {
    let word = raw.trim().to_lowercase();
    if word.is_empty() {
        return Err(LexiconError::parse(line, "empty word"));
    }
    Ok(word)
}

fn parse_unit(raw: &str, what: &str, line: usize) -> Result<f64, LexiconError> {
    let x: f64 = raw
        .trim()
        .parse()
        .map_err(|_| LexiconError::parse(line, format!("{what}: `{raw}` is not a number")))?;
    if !(0.0..=1.0).contains(&x) {
        return Err(LexiconError::parse(
            line,
            format!("{what}: {x} is outside [0, 1]"),
        ));
    }
    Ok(x)
}

fn duplicate_warning(line: usize, what: &str) -> ParseWarning {
    ParseWarning {
        line,
        message: format!("duplicate {what}, keeping first occurrence"),
    }
}

pub fn parse_depechemood<R: BufRead>(input: R) -> Result<Parsed<RawDmEntry>, LexiconError> {
    let mut header = vec!["word"];
    header.extend(DM_COLUMNS);
    let mut seen = HashMap::new();
    let mut out = Parsed {
        entries: Vec::new(),
        warnings: Vec::new(),
    };
    for (n, item) in numbered_lines(input).enumerate() {
        let (line, text) = item?;
        let fields: Vec<&str> = text.split('\t').collect();
        if n == 0 && is_header(&fields, &header, line)? {
            continue;
        }
        if fields.len() != 9 {
            return Err(LexiconError::parse(
                line,
                format!("expected 9 columns, found {}", fields.len()),
            ));
        }
        let word = parse_word(fields[0], line)?;
        let mut scores = [0.0; 8];
        for (i, raw) in fields[1..].iter().enumerate() {
            scores[i] = parse_unit(raw, DM_COLUMNS[i], line)?;
        }
        match seen.entry(word.clone()) {
            Entry::Occupied(_) => out
                .warnings
                .push(duplicate_warning(line, &format!("word `{word}`"))),
            Entry::Vacant(slot) => {
                slot.insert(());
                out.entries.push(RawDmEntry { word, scores });
            }
        }
    }
    Ok(out)
}

pub fn parse_nrc_affect<R: BufRead>(input: R) -> Result<Parsed<RawAffectEntry>, LexiconError> {
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut filled: Vec<[bool; 4]> = Vec::new();
    let mut out = Parsed {
        entries: Vec::new(),
        warnings: Vec::new(),
    };
    for (n, item) in numbered_lines(input).enumerate() {
        let (line, text) = item?;
        let fields: Vec<&str> = text.split('\t').collect();
        if n == 0 && is_header(&fields, &["word", "emotion", "score"], line)? {
            continue;
        }
        if fields.len() != 3 {
            return Err(LexiconError::parse(
                line,
                format!("expected 3 columns, found {}", fields.len()),
            ));
        }
        let word = parse_word(fields[0], line)?;
        let emotion = fields[1].trim().to_lowercase();
        let slot = AFFECT_EMOTIONS
            .iter()
            .position(|e| *e == emotion)
            .ok_or_else(|| LexiconError::parse(line, format!("unknown emotion `{emotion}`")))?;
        let score = parse_unit(fields[2], &emotion, line)?;

        let i = *index.entry(word.clone()).or_insert_with(|| {
            out.entries.push(RawAffectEntry {
                word: word.clone(),
                intensities: [0.0; 4],
            });
            filled.push([false; 4]);
            out.entries.len() - 1
        });
        if filled[i][slot] {
            out.warnings
                .push(duplicate_warning(line, &format!("pair ({word}, {emotion})")));
        } else {
            filled[i][slot] = true;
            out.entries[i].intensities[slot] = score;
        }
    }
    Ok(out)
}

pub fn parse_nrc_vad<R: BufRead>(input: R) -> Result<Parsed<RawVadEntry>, LexiconError> {
    let mut seen = HashMap::new();
    let mut out = Parsed {
        entries: Vec::new(),
        warnings: Vec::new(),
    };
    for (n, item) in numbered_lines(input).enumerate() {
        let (line, text) = item?;
        let fields: Vec<&str> = text.split('\t').collect();
        if n == 0 && is_header(&fields, &["word", "valence", "arousal", "dominance"], line)? {
            continue;
        }
        if fields.len() != 4 {
            return Err(LexiconError::parse(
                line,
                format!("expected 4 columns, found {}", fields.len()),
            ));
        }
        let word = parse_word(fields[0], line)?;
        let v = parse_unit(fields[1], "valence", line)?;
        let a = parse_unit(fields[2], "arousal", line)?;
        let d = parse_unit(fields[3], "dominance", line)?;
        let vad = VadVector::raw01(v, a, d).map_err(|e| LexiconError::parse(line, e.to_string()))?;
        match seen.entry(word.clone()) {
            Entry::Occupied(_) => out
                .warnings
                .push(duplicate_warning(line, &format!("word `{word}`"))),
            Entry::Vacant(slot) => {
                slot.insert(());
                out.entries.push(RawVadEntry { word, vad });
            }
        }
    }
    Ok(out)
}

/// Round a unit-sum vector to whole millionths that still sum to exactly one
/// million (largest remainder; ties go to the earlier emotion).
pub(crate) fn quantize_micro(v: &EmotionVector4) -> [u32; 4] {
    if v.is_neutral_degenerate() {
        return [0; 4];
    }
    let scaled = v.as_array().map(|x| x * 1e6);
    // the epsilon keeps already-quantized values from flooring one unit low
    let mut units = scaled.map(|x| (x + 1e-6).floor() as i64);
    let deficit = 1_000_000 - units.iter().sum::<i64>();
    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&i, &j| {
        let ri = scaled[i] - units[i] as f64;
        let rj = scaled[j] - units[j] as f64;
        rj.total_cmp(&ri).then(i.cmp(&j))
    });
    for &i in order.iter().take(deficit.clamp(0, 4) as usize) {
        units[i] += 1;
    }
    units.map(|u| u.clamp(0, 1_000_000) as u32)
}

fn format_micro(units: u32) -> String {
    format!("{}.{:06}", units / 1_000_000, units % 1_000_000)
}

/// Write the lexicon as TSV, one row per word in lexicographic order.
///
/// Values are rounded to six decimals such that each row still sums to
/// exactly one, so reading the file back yields vectors that satisfy the
/// unit-sum invariant without renormalization.
pub fn write_unified<W: Write>(lexicon: &UnifiedLexicon, mut out: W) -> Result<(), LexiconError> {
    writeln!(out, "{UNIFIED_HEADER}")?;
    for (word, entry) in lexicon.iter() {
        let [a, f, s, h] = quantize_micro(&entry.vector).map(format_micro);
        writeln!(out, "{word}\t{a}\t{f}\t{s}\t{h}\t{}", entry.source)?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_unified<R: BufRead>(input: R) -> Result<UnifiedLexicon, LexiconError> {
    let mut lexicon = UnifiedLexicon::new();
    let mut saw_header = false;
    for item in numbered_lines(input) {
        let (line, text) = item?;
        if !saw_header {
            if text != UNIFIED_HEADER {
                return Err(LexiconError::parse(
                    line,
                    format!("expected header `{}`", UNIFIED_HEADER.replace('\t', " ")),
                ));
            }
            saw_header = true;
            continue;
        }
        let fields: Vec<&str> = text.split('\t').collect();
        if fields.len() != 6 {
            return Err(LexiconError::parse(
                line,
                format!("expected 6 columns, found {}", fields.len()),
            ));
        }
        let word = fields[0];
        check_word(word).map_err(|e| LexiconError::parse(line, e.to_string()))?;
        let mut values = [0.0; 4];
        for (i, name) in ["anger", "fear", "sadness", "happiness"].iter().enumerate() {
            values[i] = parse_unit(fields[i + 1], name, line)?;
        }
        let vector = EmotionVector4::from_normalized(values)
            .map_err(|e| LexiconError::parse(line, e.to_string()))?;
        let source: Source = fields[5]
            .parse()
            .map_err(|e: String| LexiconError::parse(line, e))?;
        if !lexicon.insert_if_absent(word, vector, source)? {
            return Err(LexiconError::DuplicateWord {
                line,
                word: word.to_string(),
            });
        }
    }
    if !saw_header {
        return Err(LexiconError::parse(0, "missing header"));
    }
    Ok(lexicon)
}
