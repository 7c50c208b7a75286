//! Closest-word search over a lexicon for out-of-vocabulary tokens.
//!
//! A lexicon word matches a token when its Ratcliff/Obershelp similarity is
//! strictly above the threshold. Among matches the highest similarity wins;
//! equal similarities go to the lexicographically smallest word. Results are
//! defined as if every lexicon word were compared; the index only skips
//! words that provably cannot pass.
//!
//! Candidate generation rests on two bounds. With `M` matched characters,
//! `M <= min(|a|, |b|)`, so lengths far apart are excluded outright. And `M`
//! never exceeds the longest common subsequence, so a ratio above `t`
//! implies the two words become equal after deleting fewer than
//! `(1 - t)(|a| + |b|)` characters in total. For the length pairs where that
//! budget is at most [`DELETE_DEPTH`] the deletion-neighbourhood index finds
//! every possible match; the remaining (long) lengths are scanned bucket by
//! bucket.

use crate::gestalt::{matching_characters_with, ratio};

/// Deletions per side covered by the neighbourhood index.
pub const DELETE_DEPTH: usize = 2;

pub const DEFAULT_THRESHOLD: f64 = 0.9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LookupStrategy {
    /// Deletion-neighbourhood index plus length-bucket scan.
    Indexed,
    /// Every word whose length could pass the threshold.
    LengthFiltered,
    /// Every word.
    Exhaustive,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FuzzyHit {
    /// Position of the word in the index (lexicographic order).
    pub index: usize,
    pub similarity: f64,
}

#[derive(Debug, Clone)]
pub struct FuzzyIndex {
    words: Vec<String>,
    chars: Vec<Box<[char]>>,
    by_len: Vec<Vec<u32>>,
    // (variant hash, word index), sorted
    variants: Vec<(u64, u32)>,
    threshold: f64,
}

fn hash_chars<I: IntoIterator<Item = char>>(chars: I) -> u64 {
    // FNV-1a over scalar values; collisions only widen the candidate set
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut n = 0u64;
    for c in chars {
        h ^= c as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
        n += 1;
    }
    h ^ n.wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

/// Hashes of every string reachable by deleting up to `depth` characters.
fn deletion_variants(word: &[char], depth: usize, out: &mut Vec<u64>) {
    out.clear();
    let n = word.len();
    out.push(hash_chars(word.iter().copied()));
    if depth >= 1 {
        for i in 0..n {
            out.push(hash_chars(
                word.iter().enumerate().filter(|&(p, _)| p != i).map(|(_, &c)| c),
            ));
        }
    }
    if depth >= 2 {
        for i in 0..n {
            for j in i + 1..n {
                out.push(hash_chars(
                    word.iter()
                        .enumerate()
                        .filter(|&(p, _)| p != i && p != j)
                        .map(|(_, &c)| c),
                ));
            }
        }
    }
    out.sort_unstable();
    out.dedup();
}

impl FuzzyIndex {
    /// Build over `words`, which must be sorted and distinct.
    pub fn new<I, S>(words: I, threshold: f64) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let words: Vec<String> = words.into_iter().map(Into::into).collect();
        debug_assert!(words.windows(2).all(|w| w[0] < w[1]), "words must be sorted");
        let chars: Vec<Box<[char]>> = words.iter().map(|w| w.chars().collect()).collect();
        let max_len = chars.iter().map(|c| c.len()).max().unwrap_or(0);
        let mut by_len = vec![Vec::new(); max_len + 1];
        let mut variants = Vec::new();
        let mut scratch = Vec::new();
        for (i, c) in chars.iter().enumerate() {
            by_len[c.len()].push(i as u32);
            deletion_variants(c, DELETE_DEPTH, &mut scratch);
            variants.extend(scratch.iter().map(|&h| (h, i as u32)));
        }
        variants.sort_unstable();
        Self {
            words,
            chars,
            by_len,
            variants,
            threshold,
        }
    }

    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word(&self, index: usize) -> &str {
        &self.words[index]
    }

    /// Upper bound on the similarity of any pair with these lengths.
    fn length_bound(&self, a: usize, b: usize) -> f64 {
        ratio(a.min(b), a, b)
    }

    fn length_admissible(&self, a: usize, b: usize) -> bool {
        self.length_bound(a, b) > self.threshold
    }

    /// Largest total deletion count compatible with passing the threshold;
    /// rounded up, so it never undercounts.
    fn deletion_budget(&self, a: usize, b: usize) -> usize {
        ((1.0 - self.threshold) * (a + b) as f64 + 1e-9).floor() as usize
    }

    pub fn lookup(&self, token: &str) -> Option<FuzzyHit> {
        self.lookup_with(token, LookupStrategy::Indexed)
    }

    pub fn lookup_with(&self, token: &str, strategy: LookupStrategy) -> Option<FuzzyHit> {
        let query: Vec<char> = token.chars().collect();
        if query.is_empty() {
            return None;
        }
        let candidates = match strategy {
            LookupStrategy::Exhaustive => (0..self.words.len() as u32).collect(),
            LookupStrategy::LengthFiltered => self.length_candidates(query.len(), |_| true),
            LookupStrategy::Indexed => self.indexed_candidates(&query),
        };
        self.best_of(&query, candidates)
    }

    fn length_candidates(&self, len: usize, mut keep_len: impl FnMut(usize) -> bool) -> Vec<u32> {
        let mut out = Vec::new();
        for (m, bucket) in self.by_len.iter().enumerate() {
            if m > 0 && self.length_admissible(len, m) && keep_len(m) {
                out.extend_from_slice(bucket);
            }
        }
        out
    }

    fn indexed_candidates(&self, query: &[char]) -> Vec<u32> {
        let len = query.len();
        let covered = |m: usize| self.deletion_budget(len, m) <= DELETE_DEPTH;
        // lengths whose deletion budget exceeds the index depth are scanned
        let mut out = self.length_candidates(len, |m| !covered(m));

        let mut hashes = Vec::new();
        deletion_variants(query, DELETE_DEPTH, &mut hashes);
        for h in hashes {
            let start = self.variants.partition_point(|&(v, _)| v < h);
            for &(v, i) in &self.variants[start..] {
                if v != h {
                    break;
                }
                let m = self.chars[i as usize].len();
                if self.length_admissible(len, m) && covered(m) {
                    out.push(i);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    fn best_of(&self, query: &[char], mut candidates: Vec<u32>) -> Option<FuzzyHit> {
        candidates.sort_unstable();
        let mut scratch = Vec::new();
        // best as (matched, combined length, index)
        let mut best: Option<(usize, usize, usize)> = None;
        for i in candidates {
            let i = i as usize;
            let word = &self.chars[i];
            let total = query.len() + word.len();
            if self.length_bound(query.len(), word.len()) <= self.threshold {
                continue;
            }
            // lexicon word first, mirroring difflib.get_close_matches
            let m = matching_characters_with(word, query, &mut scratch);
            if ratio(m, word.len(), query.len()) <= self.threshold {
                continue;
            }
            let better = match best {
                None => true,
                // compare m/total against bm/btotal exactly; ties keep the
                // earlier (lexicographically smaller) word
                Some((bm, btotal, _)) => m * btotal > bm * total,
            };
            if better {
                best = Some((m, total, i));
            }
        }
        best.map(|(m, total, index)| FuzzyHit {
            index,
            similarity: 2.0 * m as f64 / total as f64,
        })
    }
}
