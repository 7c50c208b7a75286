//! Group-level summaries over scored claims.

use std::collections::BTreeMap;

use crate::corpus::{Credibility, ScoredClaim};
use crate::emotion::{EmotionLabel, EmotionVector5};
use crate::error::StatsError;
use crate::stats::pearson;

/// Macro-average of the claims' emotion vectors.
pub fn mean_emotions(claims: &[&ScoredClaim]) -> Result<EmotionVector5, StatsError> {
    EmotionVector5::mean(claims.iter().map(|c| c.vector())).ok_or(StatsError::EmptyGroup)
}

/// Bucket claims by dominant emotion. All five labels are present as keys.
pub fn partition_by_dominant(claims: &[ScoredClaim]) -> BTreeMap<EmotionLabel, Vec<&ScoredClaim>> {
    let mut buckets: BTreeMap<EmotionLabel, Vec<&ScoredClaim>> =
        EmotionLabel::ALL.iter().map(|&l| (l, Vec::new())).collect();
    for c in claims {
        buckets.entry(c.dominant).or_default().push(c);
    }
    buckets
}

#[derive(Debug, Clone, PartialEq)]
pub struct EngagementRow {
    pub emotion: EmotionLabel,
    pub credibility: Credibility,
    pub n_claims: usize,
    pub retweet_sum: u64,
    pub like_sum: u64,
    pub reply_sum: u64,
}

impl EngagementRow {
    pub fn avg_retweet(&self) -> f64 {
        self.retweet_sum as f64 / self.n_claims as f64
    }
    pub fn avg_like(&self) -> f64 {
        self.like_sum as f64 / self.n_claims as f64
    }
    pub fn avg_reply(&self) -> f64 {
        self.reply_sum as f64 / self.n_claims as f64
    }
}

/// Average engagement per (dominant emotion, credibility) cell. Empty cells
/// are omitted; rows follow canonical emotion order, false before true.
pub fn engagement_table(claims: &[ScoredClaim]) -> Vec<EngagementRow> {
    let mut cells: BTreeMap<(EmotionLabel, Credibility), EngagementRow> = BTreeMap::new();
    for c in claims {
        let row = cells
            .entry((c.dominant, c.claim.credibility))
            .or_insert_with(|| EngagementRow {
                emotion: c.dominant,
                credibility: c.claim.credibility,
                n_claims: 0,
                retweet_sum: 0,
                like_sum: 0,
                reply_sum: 0,
            });
        row.n_claims += 1;
        row.retweet_sum += c.claim.retweets;
        row.like_sum += c.claim.likes;
        row.reply_sum += c.reply_count as u64;
    }
    cells.into_values().collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReplyCorrelation {
    /// Claims with at least one reply.
    pub n: usize,
    /// Pearson r per dimension in canonical order; `None` where a column is
    /// constant.
    pub r: [Option<f64>; 5],
}

/// Per-dimension correlation between claim scores and reply means, over
/// claims that have replies.
pub fn claim_reply_correlation(claims: &[ScoredClaim]) -> Result<ReplyCorrelation, StatsError> {
    let usable: Vec<&ScoredClaim> = claims.iter().filter(|c| c.reply_count > 0).collect();
    if usable.len() < 2 {
        return Err(StatsError::InsufficientData(format!(
            "{} claim(s) with replies, need at least 2",
            usable.len()
        )));
    }
    let mut r = [None; 5];
    for label in EmotionLabel::ALL {
        let xs: Vec<f64> = usable.iter().map(|c| c.vector().get(label)).collect();
        let ys: Vec<f64> = usable.iter().map(|c| c.reply_mean.get(label)).collect();
        r[label.index()] = pearson(&xs, &ys)?;
    }
    Ok(ReplyCorrelation {
        n: usable.len(),
        r,
    })
}
