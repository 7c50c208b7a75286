//! `emofuse` command-line tool.
//!
//! Exit codes: 0 on success, 1 for invalid input or usage, 2 for internal
//! failures. Diagnostics go to stderr; data goes to stdout or the named
//! output files.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{error::ErrorKind, Args, CommandFactory, FromArgMatches, Parser, Subcommand};
use sha2::{Digest, Sha256};

use emofuse::text::DEFAULT_STOPWORDS;

#[derive(Debug, Parser)]
#[command(name = "emofuse", about = "Emotion lexicon fusion and claim/reply emotion analytics")]
pub struct Cli {
    /// Optional TOML config file; flags override its values.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Worker threads (default: all available cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Merge NRC-Affect, DepecheMood++ and NRC-VAD into a unified lexicon.
    BuildLexicon(BuildLexiconArgs),
    /// Map one valence/arousal/dominance triple to emotion intensities.
    MapVad(MapVadArgs),
    /// Score texts against a unified lexicon.
    Score(ScoreArgs),
    /// Score a claim/reply corpus and write the report CSVs.
    Analyze(AnalyzeArgs),
    /// Render a report directory.
    Report(ReportArgs),
}

#[derive(Debug, Args)]
pub struct LexiconSources {
    /// NRC-Affect TSV (word, emotion, score).
    #[arg(long, value_name = "FILE")]
    affect: Option<PathBuf>,
    /// DepecheMood++ TSV (word and eight emotion columns).
    #[arg(long, value_name = "FILE")]
    depechemood: Option<PathBuf>,
    /// NRC-VAD TSV (word, valence, arousal, dominance).
    #[arg(long, value_name = "FILE")]
    vad: Option<PathBuf>,
    /// Feed raw [0,1] VAD scores to the mapping without recentering.
    #[arg(long)]
    no_recenter: bool,
}

#[derive(Debug, Args)]
pub struct BuildLexiconArgs {
    #[command(flatten)]
    sources: LexiconSources,
    /// Output path for the unified lexicon TSV.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MapVadArgs {
    /// Valence in [0, 1].
    #[arg(long, allow_negative_numbers = true)]
    valence: f64,
    /// Arousal in [0, 1].
    #[arg(long, allow_negative_numbers = true)]
    arousal: f64,
    /// Dominance in [0, 1].
    #[arg(long, allow_negative_numbers = true)]
    dominance: f64,
    /// Treat the raw [0,1] scores as signed coordinates.
    #[arg(long)]
    no_recenter: bool,
}

#[derive(Debug, Args)]
pub struct ScoringArgs {
    /// Unified lexicon TSV.
    #[arg(long, value_name = "FILE")]
    lexicon: Option<PathBuf>,
    /// Stop-word list, one word per line (default: bundled English list).
    #[arg(long, value_name = "FILE")]
    stopwords: Option<PathBuf>,
    /// Similarity an out-of-vocabulary token must exceed to take a lexicon
    /// word's scores.
    #[arg(long, value_name = "T")]
    fuzzy_threshold: Option<f64>,
    /// Disable closest-word matching for out-of-vocabulary tokens.
    #[arg(long)]
    no_fuzzy: bool,
}

#[derive(Debug, Args)]
pub struct ScoreArgs {
    #[command(flatten)]
    scoring: ScoringArgs,
    /// Text to score.
    #[arg(long, conflicts_with = "input")]
    text: Option<String>,
    /// JSON Lines file of documents.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
    /// Field holding the text in each input document.
    #[arg(long, default_value = "text")]
    field: String,
    /// Field holding the document id.
    #[arg(long, default_value = "id")]
    id_field: String,
    /// Output JSON Lines file (default: stdout).
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    scoring: ScoringArgs,
    /// Build the lexicon from the three source files instead of --lexicon.
    #[command(flatten)]
    sources: LexiconSources,
    /// Claims JSON Lines file.
    #[arg(long, value_name = "FILE")]
    claims: PathBuf,
    /// Replies JSON Lines file.
    #[arg(long, value_name = "FILE")]
    replies: Option<PathBuf>,
    /// Report directory.
    #[arg(long, value_name = "DIR")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Report directory written by `analyze`.
    #[arg(long = "in", value_name = "DIR")]
    input: PathBuf,
    /// Output format; only `markdown` is supported.
    #[arg(long, default_value = "markdown")]
    format: String,
}

/// Error classes mapped onto exit codes.
#[derive(Debug)]
pub enum Failure {
    /// Bad input, configuration or usage (exit 1).
    Input(anyhow::Error),
    /// Anything else (exit 2).
    Internal(anyhow::Error),
}

impl Failure {
    fn report(&self) -> ExitCode {
        match self {
            Failure::Input(e) => {
                eprintln!("error: {e:#}");
                ExitCode::from(1)
            }
            Failure::Internal(e) => {
                eprintln!("internal error: {e:#}");
                ExitCode::from(2)
            }
        }
    }
}

fn version() -> &'static str {
    let digest = Sha256::digest(DEFAULT_STOPWORDS.as_bytes());
    let hash: String = digest.iter().take(6).map(|b| format!("{b:02x}")).collect();
    Box::leak(format!("{} (stopwords sha256:{hash})", env!("CARGO_PKG_VERSION")).into_boxed_str())
}

fn main() -> ExitCode {
    let matches = match Cli::command().version(version()).try_get_matches() {
        Ok(m) => m,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match std::panic::catch_unwind(|| commands::run(cli)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(failure)) => failure.report(),
        Err(_) => ExitCode::from(2),
    }
}
