//! Report directory: CSV tables produced by `analyze` and their markdown
//! rendering.
//!
//! | file                 | columns                                                              |
//! |----------------------|----------------------------------------------------------------------|
//! | emotion_means.csv    | group, credibility, anger, fear, sadness, happiness, neutral, n      |
//! | pattern.csv          | claim_id, credibility, anger, fear, sadness, happiness, neutral, dominant |
//! | engagement_table.csv | emotion, credibility, n_claims, avg_retweet, avg_like, avg_reply     |
//! | reply_means.csv      | group, credibility, anger, fear, sadness, happiness, neutral, n, n_replies |
//! | correlations.csv     | dimension, r, n, label                                               |
//! | ttests.csv           | metric, t, df, nA, nB, label                                         |
//!
//! `group` is `all` or `topic:<name>`. Numbers use six decimals; statistics
//! that cannot be computed are written as `undefined`. In t-tests group A is
//! the false claims and group B the true ones.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::fs;
use std::io;
use std::path::Path;

use thiserror::Error;

use crate::analytics::{claim_reply_correlation, engagement_table, mean_emotions};
use crate::corpus::{Credibility, ScoredClaim};
use crate::emotion::{EmotionLabel, EmotionVector5};
use crate::stats::welch_t;

pub const EMOTION_MEANS: &str = "emotion_means.csv";
pub const PATTERN: &str = "pattern.csv";
pub const ENGAGEMENT: &str = "engagement_table.csv";
pub const REPLY_MEANS: &str = "reply_means.csv";
pub const CORRELATIONS: &str = "correlations.csv";
pub const TTESTS: &str = "ttests.csv";

pub const REPORT_FILES: [&str; 6] = [
    EMOTION_MEANS,
    PATTERN,
    ENGAGEMENT,
    REPLY_MEANS,
    CORRELATIONS,
    TTESTS,
];

const UNDEFINED: &str = "undefined";
const DESCRIPTIVE: &str = "descriptive";

#[derive(Debug, Error)]
pub enum ReportError {
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("unsupported report format `{0}`")]
    Format(String),
}

/// Six-decimal fixed point, never printing a negative zero.
pub fn fmt6(x: f64) -> String {
    let s = format!("{:.6}", x);
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt6).unwrap_or_else(|| UNDEFINED.to_string())
}

/// CSV tables keyed by file name.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReportFiles {
    pub files: BTreeMap<&'static str, String>,
}

struct Table {
    writer: csv::Writer<Vec<u8>>,
}

impl Table {
    fn new(header: &[&str]) -> Self {
        let mut writer = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        writer.write_record(header).expect("in-memory write");
        Self { writer }
    }

    fn row<I, S>(&mut self, fields: I)
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[u8]>,
    {
        self.writer.write_record(fields).expect("in-memory write");
    }

    fn finish(self) -> String {
        let bytes = self.writer.into_inner().expect("in-memory flush");
        String::from_utf8(bytes).expect("fields are UTF-8")
    }
}

fn vector_fields(v: &EmotionVector5) -> impl Iterator<Item = String> {
    v.as_array().into_iter().map(fmt6)
}

/// Report groups: every claim, then each topic in sorted order.
fn groups(claims: &[ScoredClaim]) -> Vec<(String, Vec<&ScoredClaim>)> {
    let mut out = vec![("all".to_string(), claims.iter().collect::<Vec<_>>())];
    let topics: BTreeSet<&str> = claims
        .iter()
        .map(|c| c.claim.topic.as_str())
        .filter(|t| !t.is_empty())
        .collect();
    for t in topics {
        let members = claims.iter().filter(|c| c.claim.topic == t).collect();
        out.push((format!("topic:{t}"), members));
    }
    out
}

fn by_credibility<'a>(
    claims: &[&'a ScoredClaim],
    cred: Credibility,
) -> Vec<&'a ScoredClaim> {
    claims
        .iter()
        .copied()
        .filter(|c| c.claim.credibility == cred)
        .collect()
}

fn emotion_means(claims: &[ScoredClaim]) -> String {
    let mut t = Table::new(&[
        "group",
        "credibility",
        "anger",
        "fear",
        "sadness",
        "happiness",
        "neutral",
        "n",
    ]);
    for (group, members) in groups(claims) {
        for cred in Credibility::ALL {
            let subset = by_credibility(&members, cred);
            if let Ok(mean) = mean_emotions(&subset) {
                let mut fields = vec![group.clone(), cred.to_string()];
                fields.extend(vector_fields(&mean));
                fields.push(subset.len().to_string());
                t.row(fields);
            }
        }
    }
    t.finish()
}

fn pattern(claims: &[ScoredClaim]) -> String {
    let mut t = Table::new(&[
        "claim_id",
        "credibility",
        "anger",
        "fear",
        "sadness",
        "happiness",
        "neutral",
        "dominant",
    ]);
    let mut sorted: Vec<&ScoredClaim> = claims.iter().collect();
    sorted.sort_by(|a, b| a.claim.id.cmp(&b.claim.id));
    for c in sorted {
        let mut fields = vec![c.claim.id.clone(), c.claim.credibility.to_string()];
        fields.extend(vector_fields(c.vector()));
        fields.push(c.dominant.to_string());
        t.row(fields);
    }
    t.finish()
}

fn engagement(claims: &[ScoredClaim]) -> String {
    let mut t = Table::new(&[
        "emotion",
        "credibility",
        "n_claims",
        "avg_retweet",
        "avg_like",
        "avg_reply",
    ]);
    for row in engagement_table(claims) {
        t.row([
            row.emotion.to_string(),
            row.credibility.to_string(),
            row.n_claims.to_string(),
            fmt6(row.avg_retweet()),
            fmt6(row.avg_like()),
            fmt6(row.avg_reply()),
        ]);
    }
    t.finish()
}

fn reply_means(claims: &[ScoredClaim]) -> String {
    let mut t = Table::new(&[
        "group",
        "credibility",
        "anger",
        "fear",
        "sadness",
        "happiness",
        "neutral",
        "n",
        "n_replies",
    ]);
    for (group, members) in groups(claims) {
        for cred in Credibility::ALL {
            let subset = by_credibility(&members, cred);
            if subset.is_empty() {
                continue;
            }
            let with_replies: Vec<&ScoredClaim> =
                subset.iter().copied().filter(|c| c.reply_count > 0).collect();
            let n_replies: usize = subset.iter().map(|c| c.reply_count).sum();
            let mut fields = vec![group.clone(), cred.to_string()];
            match EmotionVector5::mean(with_replies.iter().map(|c| &c.reply_mean)) {
                Some(mean) => fields.extend(vector_fields(&mean)),
                None => fields.extend(std::iter::repeat_n(UNDEFINED.to_string(), 5)),
            }
            fields.push(with_replies.len().to_string());
            fields.push(n_replies.to_string());
            t.row(fields);
        }
    }
    t.finish()
}

fn correlations(claims: &[ScoredClaim]) -> String {
    let mut t = Table::new(&["dimension", "r", "n", "label"]);
    let n = claims.iter().filter(|c| c.reply_count > 0).count();
    let result = claim_reply_correlation(claims).ok();
    for label in EmotionLabel::ALL {
        let r = result.as_ref().and_then(|c| c.r[label.index()]);
        t.row([
            label.to_string(),
            fmt_opt(r),
            n.to_string(),
            DESCRIPTIVE.to_string(),
        ]);
    }
    t.finish()
}

fn ttests(claims: &[ScoredClaim]) -> String {
    let mut t = Table::new(&["metric", "t", "df", "nA", "nB", "label"]);
    let all: Vec<&ScoredClaim> = claims.iter().collect();
    let a = by_credibility(&all, Credibility::False);
    let b = by_credibility(&all, Credibility::True);

    type Metric = Box<dyn Fn(&ScoredClaim) -> Option<f64>>;
    let mut metrics: Vec<(String, Metric)> = Vec::new();
    for label in EmotionLabel::ALL {
        metrics.push((
            format!("claim_{label}"),
            Box::new(move |c| Some(c.vector().get(label))),
        ));
    }
    for label in EmotionLabel::ALL {
        metrics.push((
            format!("reply_{label}"),
            Box::new(move |c| (c.reply_count > 0).then(|| c.reply_mean.get(label))),
        ));
    }
    metrics.push(("retweets".into(), Box::new(|c| Some(c.claim.retweets as f64))));
    metrics.push(("likes".into(), Box::new(|c| Some(c.claim.likes as f64))));
    metrics.push(("replies".into(), Box::new(|c| Some(c.reply_count as f64))));

    for (name, value) in metrics {
        let xa: Vec<f64> = a.iter().filter_map(|c| value(c)).collect();
        let xb: Vec<f64> = b.iter().filter_map(|c| value(c)).collect();
        let w = welch_t(&xa, &xb).ok();
        t.row([
            name,
            fmt_opt(w.map(|w| w.t)),
            fmt_opt(w.map(|w| w.df)),
            xa.len().to_string(),
            xb.len().to_string(),
            DESCRIPTIVE.to_string(),
        ]);
    }
    t.finish()
}

pub fn build_report(claims: &[ScoredClaim]) -> ReportFiles {
    let mut files = BTreeMap::new();
    files.insert(EMOTION_MEANS, emotion_means(claims));
    files.insert(PATTERN, pattern(claims));
    files.insert(ENGAGEMENT, engagement(claims));
    files.insert(REPLY_MEANS, reply_means(claims));
    files.insert(CORRELATIONS, correlations(claims));
    files.insert(TTESTS, ttests(claims));
    ReportFiles { files }
}

pub fn write_report(dir: &Path, report: &ReportFiles) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    for (name, contents) in &report.files {
        fs::write(dir.join(name), contents)?;
    }
    Ok(())
}

fn markdown_table(out: &mut String, path: &Path) -> Result<(), ReportError> {
    let mut reader = csv::Reader::from_path(path)?;
    let header: Vec<String> = reader.headers()?.iter().map(str::to_string).collect();
    let _ = writeln!(out, "| {} |", header.join(" | "));
    let _ = writeln!(out, "|{}", "---|".repeat(header.len()));
    let mut rows = 0;
    for record in reader.records() {
        let record = record?;
        let cells: Vec<String> = record.iter().map(|c| c.replace('|', "\\|")).collect();
        let _ = writeln!(out, "| {} |", cells.join(" | "));
        rows += 1;
    }
    if rows == 0 {
        let _ = writeln!(out, "\n_no rows_");
    }
    Ok(())
}

/// Render every report CSV found in `dir` as markdown.
pub fn render_markdown(dir: &Path) -> Result<String, ReportError> {
    let titles = [
        (EMOTION_MEANS, "Mean emotion scores of claims"),
        (REPLY_MEANS, "Mean emotion scores of replies"),
        (ENGAGEMENT, "Average engagement by dominant emotion and credibility"),
        (PATTERN, "Emotional pattern per claim"),
        (CORRELATIONS, "Claim/reply correlation (descriptive)"),
        (TTESTS, "False vs. true claims, Welch t (descriptive)"),
    ];
    let mut out = String::from("# Emotion report\n");
    for (file, title) in titles {
        let path = dir.join(file);
        if !path.exists() {
            continue;
        }
        let _ = writeln!(out, "\n## {title}\n");
        markdown_table(&mut out, &path)?;
    }
    Ok(out)
}
