//! Claim and reply corpora in JSON Lines form.
//!
//! ```text
//! claims.jsonl   {"id": "c1", "text": "...", "topic": "covid", "credibility": "false", "retweets": 12, "likes": 40}
//! replies.jsonl  {"claim_id": "c1", "text": "..."}
//! ```
//!
//! Unknown fields are ignored. Replies pointing at an unknown claim are
//! skipped and counted.

use std::collections::HashMap;
use std::fmt;
use std::io::BufRead;

use serde::{Deserialize, Deserializer};

use crate::emotion::{EmotionLabel, EmotionVector5};
use crate::error::CorpusError;
use crate::parallel::Parallelism;
use crate::scoring::{ScoreResult, Scorer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Credibility {
    False,
    True,
}

impl Credibility {
    pub const ALL: [Credibility; 2] = [Credibility::False, Credibility::True];

    pub fn as_str(self) -> &'static str {
        match self {
            Credibility::False => "false",
            Credibility::True => "true",
        }
    }
}

impl fmt::Display for Credibility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for Credibility {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Bool(bool),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Bool(b) => Ok(if b { Credibility::True } else { Credibility::False }),
            Raw::Text(s) => match s.to_ascii_lowercase().as_str() {
                "true" => Ok(Credibility::True),
                "false" => Ok(Credibility::False),
                _ => Err(serde::de::Error::custom(format!(
                    "credibility must be \"true\" or \"false\", got {s:?}"
                ))),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct ClaimRecord {
    pub id: String,
    pub text: String,
    #[serde(default)]
    pub topic: String,
    pub credibility: Credibility,
    pub retweets: u64,
    pub likes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct ReplyRecord {
    pub claim_id: String,
    pub text: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Corpus {
    pub claims: Vec<ClaimRecord>,
    pub replies: Vec<ReplyRecord>,
    /// Replies dropped because their claim id is unknown.
    pub skipped_replies: usize,
}

fn read_jsonl<T, R>(input: R, source_name: &'static str) -> Result<Vec<(usize, T)>, CorpusError>
where
    T: for<'de> Deserialize<'de>,
    R: BufRead,
{
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let record = serde_json::from_str(&line).map_err(|e| CorpusError::Schema {
            source_name,
            line: i + 1,
            message: e.to_string(),
        })?;
        out.push((i + 1, record));
    }
    Ok(out)
}

pub fn load_corpus<C: BufRead, R: BufRead>(claims: C, replies: R) -> Result<Corpus, CorpusError> {
    let mut ids = HashMap::new();
    let mut corpus = Corpus::default();
    for (line, claim) in read_jsonl::<ClaimRecord, _>(claims, "claims")? {
        if ids.insert(claim.id.clone(), ()).is_some() {
            return Err(CorpusError::DuplicateClaimId { line, id: claim.id });
        }
        corpus.claims.push(claim);
    }
    for (_, reply) in read_jsonl::<ReplyRecord, _>(replies, "replies")? {
        if ids.contains_key(&reply.claim_id) {
            corpus.replies.push(reply);
        } else {
            corpus.skipped_replies += 1;
        }
    }
    Ok(corpus)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScoredClaim {
    pub claim: ClaimRecord,
    pub score: ScoreResult,
    pub dominant: EmotionLabel,
    pub reply_count: usize,
    /// Mean of the replies' vectors; pure neutral when there are none.
    pub reply_mean: EmotionVector5,
}

impl ScoredClaim {
    pub fn vector(&self) -> &EmotionVector5 {
        &self.score.vector
    }
}

/// Score every claim and reply, attaching each claim's reply mean.
pub fn score_corpus(corpus: &Corpus, scorer: &Scorer, parallelism: Parallelism) -> Vec<ScoredClaim> {
    let texts: Vec<&str> = corpus
        .claims
        .iter()
        .map(|c| c.text.as_str())
        .chain(corpus.replies.iter().map(|r| r.text.as_str()))
        .collect();
    let scores = scorer.score_batch(&texts, parallelism);
    let (claim_scores, reply_scores) = scores.split_at(corpus.claims.len());

    let position: HashMap<&str, usize> = corpus
        .claims
        .iter()
        .enumerate()
        .map(|(i, c)| (c.id.as_str(), i))
        .collect();
    let mut per_claim: Vec<Vec<&EmotionVector5>> = vec![Vec::new(); corpus.claims.len()];
    for (reply, score) in corpus.replies.iter().zip(reply_scores) {
        if let Some(&i) = position.get(reply.claim_id.as_str()) {
            per_claim[i].push(&score.vector);
        }
    }

    corpus
        .claims
        .iter()
        .zip(claim_scores)
        .zip(per_claim)
        .map(|((claim, score), replies)| ScoredClaim {
            claim: claim.clone(),
            score: *score,
            dominant: score.vector.dominant(),
            reply_count: replies.len(),
            reply_mean: EmotionVector5::mean(replies).unwrap_or(EmotionVector5::PURE_NEUTRAL),
        })
        .collect()
}
