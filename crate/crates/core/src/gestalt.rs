//! Ratcliff/Obershelp ("gestalt pattern matching") similarity.
//!
//! The matched-character count is found by taking the longest common
//! contiguous block, then recursing on the unmatched pieces to its left and
//! right. When several longest blocks exist the one starting earliest in the
//! first string wins, then the one starting earliest in the second. This is
//! the same choice Python's `difflib.SequenceMatcher` makes (without its
//! junk heuristics), so ratios agree with `SequenceMatcher.ratio()`.

use crate::error::EmptyInput;

/// Number of matched characters `M` between two character sequences.
pub fn matching_characters(a: &[char], b: &[char]) -> usize {
    let mut scratch = Vec::new();
    matching_characters_with(a, b, &mut scratch)
}

/// Same as [`matching_characters`], reusing `scratch` between calls.
pub fn matching_characters_with(a: &[char], b: &[char], scratch: &mut Vec<u32>) -> usize {
    let mut total = 0;
    let mut stack = vec![(0, a.len(), 0, b.len())];
    while let Some((alo, ahi, blo, bhi)) = stack.pop() {
        let (i, j, k) = longest_block(a, b, alo, ahi, blo, bhi, scratch);
        if k == 0 {
            continue;
        }
        total += k;
        if alo < i && blo < j {
            stack.push((alo, i, blo, j));
        }
        if i + k < ahi && j + k < bhi {
            stack.push((i + k, ahi, j + k, bhi));
        }
    }
    total
}

/// Longest common block of `a[alo..ahi]` and `b[blo..bhi]` as
/// `(start_a, start_b, len)`.
fn longest_block(
    a: &[char],
    b: &[char],
    alo: usize,
    ahi: usize,
    blo: usize,
    bhi: usize,
    scratch: &mut Vec<u32>,
) -> (usize, usize, usize) {
    let width = bhi - blo + 1;
    scratch.clear();
    scratch.resize(2 * width, 0);
    let (mut prev, mut cur) = scratch.split_at_mut(width);
    let (mut bi, mut bj, mut bk) = (alo, blo, 0usize);
    for (i, &ca) in a.iter().enumerate().take(ahi).skip(alo) {
        for (offset, &cb) in b[blo..bhi].iter().enumerate() {
            let col = offset + 1;
            if cb == ca {
                let k = prev[col - 1] + 1;
                cur[col] = k;
                if k as usize > bk {
                    bk = k as usize;
                    bi = i + 1 - bk;
                    bj = blo + col - bk;
                }
            } else {
                cur[col] = 0;
            }
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    (bi, bj, bk)
}

/// `2M / (|a| + |b|)` over Unicode scalar values.
pub fn gestalt_similarity(a: &str, b: &str) -> Result<f64, EmptyInput> {
    if a.is_empty() || b.is_empty() {
        return Err(EmptyInput);
    }
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    Ok(ratio(matching_characters(&a, &b), a.len(), b.len()))
}

pub(crate) fn ratio(matched: usize, len_a: usize, len_b: usize) -> f64 {
    2.0 * matched as f64 / (len_a + len_b) as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sim(a: &str, b: &str) -> f64 {
        gestalt_similarity(a, b).unwrap()
    }

    fn m(a: &str, b: &str) -> usize {
        let a: Vec<char> = a.chars().collect();
        let b: Vec<char> = b.chars().collect();
        matching_characters(&a, &b)
    }

    #[test]
    fn examples() {
        assert_eq!(sim("virus", "virus"), 1.0);
        assert!((sim("abc", "abd") - 2.0 / 3.0).abs() < 1e-12);
        assert_eq!(sim("abc", "xyz"), 0.0);
        assert!((sim("deadlyy", "deadly") - 12.0 / 13.0).abs() < 1e-12);
    }

    #[test]
    fn empty_is_an_error() {
        assert_eq!(gestalt_similarity("", "a"), Err(EmptyInput));
        assert_eq!(gestalt_similarity("a", ""), Err(EmptyInput));
    }

    // values below were produced with difflib.SequenceMatcher(None, a, b,
    // autojunk=False).get_matching_blocks()
    #[test]
    fn agrees_with_difflib() {
        assert_eq!(m("WIKIMEDIA", "WIKIMANIA"), 7);
        assert_eq!(m("GESTALT PATTERN MATCHING", "GESTALT PRACTICE"), 12);
        assert_eq!(m("abcd", "bcda"), 3);
        assert_eq!(m("ab", "ba"), 1);
        assert_eq!(m("aaab", "abaa"), 2);
        assert_eq!(m("xabcyabc", "abcxyz"), 4);
    }

    #[test]
    fn order_can_matter() {
        // the tie-break depends on which string is first
        assert_eq!(m("abbaa", "baccaab"), 2);
        assert_eq!(m("baccaab", "abbaa"), 3);
    }
}
