use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use anyhow::{anyhow, Context};
use clap::CommandFactory;
use serde_json::Value;

use emofuse::corpus::{load_corpus, score_corpus};
use emofuse::lexicon_io::{
    parse_depechemood, parse_nrc_affect, parse_nrc_vad, read_unified, write_unified, Parsed,
};
use emofuse::merge::{merge, MergeOptions};
use emofuse::report::{build_report, fmt6, render_markdown, write_report};
use emofuse::text::StopWords;
use emofuse::vad::{map_vad_to_emotions, VadScaling, VadVector};
use emofuse::{EmotionLabel, Parallelism, ScoreResult, Scorer, ScoringConfig, UnifiedLexicon};

use crate::config::{require_file, ConfigFile, RunConfig};
use crate::{
    AnalyzeArgs, BuildLexiconArgs, Cli, Command, Failure, LexiconSources, MapVadArgs, ReportArgs,
    ScoreArgs, ScoringArgs,
};

const MAX_WARNINGS_SHOWN: usize = 20;

trait Classify<T> {
    fn input(self) -> Result<T, Failure>;
    fn internal(self) -> Result<T, Failure>;
}

impl<T, E: Into<anyhow::Error>> Classify<T> for Result<T, E> {
    fn input(self) -> Result<T, Failure> {
        self.map_err(|e| Failure::Input(e.into()))
    }
    fn internal(self) -> Result<T, Failure> {
        self.map_err(|e| Failure::Internal(e.into()))
    }
}

fn usage_error(subcommand: &str, message: &str) -> Failure {
    let mut cmd = Cli::command();
    cmd.build();
    let usage = cmd
        .find_subcommand_mut(subcommand)
        .map(|c| c.render_usage().to_string())
        .unwrap_or_default();
    Failure::Input(anyhow!("{message}\n\n{usage}"))
}

pub fn run(cli: Cli) -> Result<(), Failure> {
    let file = match &cli.config {
        Some(path) => ConfigFile::load(path).input()?,
        None => ConfigFile::default(),
    };
    let mut config = RunConfig::from_file(file);
    if cli.threads.is_some() {
        config.threads = cli.threads;
    }
    match cli.command {
        Command::BuildLexicon(args) => build_lexicon(args, config),
        Command::MapVad(args) => map_vad(args),
        Command::Score(args) => score(args, config),
        Command::Analyze(args) => analyze(args, config),
        Command::Report(args) => report(args),
    }
}

fn parallelism(config: &RunConfig) -> Parallelism {
    Parallelism::from_threads(config.threads)
}

fn open(path: &Path) -> Result<BufReader<File>, Failure> {
    File::open(path)
        .with_context(|| format!("opening {}", path.display()))
        .map(BufReader::new)
        .input()
}

fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    File::create(path)
        .with_context(|| format!("creating {}", path.display()))
        .map(BufWriter::new)
        .input()
}

fn print_warnings<T>(parsed: &Parsed<T>, path: &Path) {
    for w in parsed.warnings.iter().take(MAX_WARNINGS_SHOWN) {
        eprintln!("warning: {} line {}: {}", path.display(), w.line, w.message);
    }
    if parsed.warnings.len() > MAX_WARNINGS_SHOWN {
        eprintln!(
            "warning: {}: {} more warnings not shown",
            path.display(),
            parsed.warnings.len() - MAX_WARNINGS_SHOWN
        );
    }
}

fn apply_sources(sources: &LexiconSources, config: &mut RunConfig) {
    if sources.affect.is_some() {
        config.affect = sources.affect.clone();
    }
    if sources.depechemood.is_some() {
        config.depechemood = sources.depechemood.clone();
    }
    if sources.vad.is_some() {
        config.vad = sources.vad.clone();
    }
    if sources.no_recenter {
        config.recenter = false;
    }
}

fn has_sources(config: &RunConfig) -> bool {
    config.affect.is_some() || config.depechemood.is_some() || config.vad.is_some()
}

/// Parse the three source lexicons named in `config` and merge them.
fn merge_sources(config: &RunConfig, subcommand: &str) -> Result<UnifiedLexicon, Failure> {
    let (Some(affect), Some(dm), Some(vad)) = (&config.affect, &config.depechemood, &config.vad)
    else {
        return Err(usage_error(
            subcommand,
            "--affect, --depechemood and --vad are all required to build a lexicon",
        ));
    };
    for (p, what) in [(affect, "NRC-Affect"), (dm, "DepecheMood++"), (vad, "NRC-VAD")] {
        require_file(p, what).input()?;
    }
    let affect_entries = parse_nrc_affect(open(affect)?)
        .with_context(|| affect.display().to_string())
        .input()?;
    print_warnings(&affect_entries, affect);
    let dm_entries = parse_depechemood(open(dm)?)
        .with_context(|| dm.display().to_string())
        .input()?;
    print_warnings(&dm_entries, dm);
    let vad_entries = parse_nrc_vad(open(vad)?)
        .with_context(|| vad.display().to_string())
        .input()?;
    print_warnings(&vad_entries, vad);

    let options = MergeOptions {
        scaling: if config.recenter {
            VadScaling::Recenter
        } else {
            VadScaling::Literal
        },
        parallelism: parallelism(config),
    };
    let (lexicon, summary) = merge(
        &affect_entries.entries,
        &dm_entries.entries,
        &vad_entries.entries,
        options,
    )
    .input()?;
    eprintln!(
        "merged lexicon: entries={} affect={} dm={} vad={}",
        summary.total(),
        summary.affect,
        summary.depechemood,
        summary.vad
    );
    Ok(lexicon)
}

fn build_lexicon(args: BuildLexiconArgs, mut config: RunConfig) -> Result<(), Failure> {
    apply_sources(&args.sources, &mut config);
    if args.out.is_some() {
        config.out = args.out;
    }
    config.validate().input()?;
    let Some(out) = config.out.clone() else {
        return Err(usage_error("build-lexicon", "--out is required"));
    };
    let lexicon = merge_sources(&config, "build-lexicon")?;
    let mut w = create(&out)?;
    write_unified(&lexicon, &mut w)
        .with_context(|| format!("writing {}", out.display()))
        .input()?;
    println!(
        "entries={} affect={} dm={} vad={}",
        lexicon.len(),
        lexicon.count_by_source(emofuse::Source::Affect),
        lexicon.count_by_source(emofuse::Source::DepecheMood),
        lexicon.count_by_source(emofuse::Source::Vad)
    );
    Ok(())
}

fn map_vad(args: MapVadArgs) -> Result<(), Failure> {
    let v = VadVector::raw01(args.valence, args.arousal, args.dominance).input()?;
    let scaling = if args.no_recenter {
        VadScaling::Literal
    } else {
        VadScaling::Recenter
    };
    let e = map_vad_to_emotions(&v, scaling).input()?;
    let mut line = String::from("{");
    for label in EmotionLabel::EMOTIONS {
        line.push_str(&format!("\"{label}\":{},", fmt6(e.get(label))));
    }
    line.push_str(&format!(
        "\"dominant\":\"{}\",\"neutral_degenerate\":{}}}",
        e.to_vector5().dominant(),
        e.is_neutral_degenerate()
    ));
    println!("{line}");
    Ok(())
}

/// Apply scoring flags and build the scorer from either a unified lexicon
/// or the three source files.
fn build_scorer(
    args: &ScoringArgs,
    config: &mut RunConfig,
    subcommand: &str,
) -> Result<Scorer, Failure> {
    if args.lexicon.is_some() {
        config.lexicon = args.lexicon.clone();
    }
    if args.stopwords.is_some() {
        config.stopwords = args.stopwords.clone();
    }
    if let Some(t) = args.fuzzy_threshold {
        config.fuzzy_threshold = t;
    }
    config.validate().input()?;

    let lexicon = match &config.lexicon {
        Some(path) => {
            require_file(path, "lexicon").input()?;
            if has_sources(config) {
                eprintln!("warning: --lexicon given; ignoring source lexicon files");
            }
            read_unified(open(path)?)
                .with_context(|| path.display().to_string())
                .input()?
        }
        None if has_sources(config) => merge_sources(config, subcommand)?,
        None => return Err(usage_error(subcommand, "--lexicon is required")),
    };
    let stopwords = match &config.stopwords {
        Some(path) => {
            require_file(path, "stop-word").input()?;
            StopWords::parse(open(path)?)
                .with_context(|| path.display().to_string())
                .input()?
        }
        None => StopWords::bundled(),
    };
    let scoring = ScoringConfig {
        fuzzy_threshold: (!args.no_fuzzy).then_some(config.fuzzy_threshold),
    };
    Ok(Scorer::new(lexicon, stopwords, scoring))
}

fn score_json(id: Option<&str>, r: &ScoreResult) -> String {
    let mut line = String::from("{");
    if let Some(id) = id {
        line.push_str(&format!("\"id\":{},", Value::String(id.to_string())));
    }
    for label in EmotionLabel::ALL {
        line.push_str(&format!("\"{label}\":{},", fmt6(r.vector.get(label))));
    }
    line.push_str(&format!(
        "\"dominant\":\"{}\",\"k\":{},\"matched\":{},\"fuzzy\":{}}}",
        r.vector.dominant(),
        r.k,
        r.matched,
        r.fuzzy
    ));
    line
}

fn read_documents(
    path: &Path,
    field: &str,
    id_field: &str,
) -> Result<(Vec<Option<String>>, Vec<String>), Failure> {
    let mut ids = Vec::new();
    let mut texts = Vec::new();
    for (i, line) in open(path)?.lines().enumerate() {
        let line = line.input()?;
        if line.trim().is_empty() {
            continue;
        }
        let doc: Value = serde_json::from_str(&line)
            .with_context(|| format!("{} line {}", path.display(), i + 1))
            .input()?;
        let text = doc
            .get(field)
            .and_then(Value::as_str)
            .ok_or_else(|| {
                anyhow!(
                    "{} line {}: missing string field `{field}`",
                    path.display(),
                    i + 1
                )
            })
            .input()?;
        let id = match doc.get(id_field) {
            Some(Value::String(s)) => Some(s.clone()),
            Some(Value::Number(n)) => Some(n.to_string()),
            _ => None,
        };
        ids.push(id);
        texts.push(text.to_string());
    }
    Ok((ids, texts))
}

fn score(args: ScoreArgs, mut config: RunConfig) -> Result<(), Failure> {
    let (ids, texts) = match (&args.text, &args.input) {
        (Some(t), None) => (vec![None], vec![t.clone()]),
        (None, Some(path)) => {
            require_file(path, "input").input()?;
            read_documents(path, &args.field, &args.id_field)?
        }
        _ => return Err(usage_error("score", "one of --text or --input is required")),
    };
    let scorer = build_scorer(&args.scoring, &mut config, "score")?;
    let results = scorer.score_batch(&texts, parallelism(&config));

    let mut out: Box<dyn Write> = match &args.out {
        Some(path) => Box::new(create(path)?),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    for (id, r) in ids.iter().zip(&results) {
        writeln!(out, "{}", score_json(id.as_deref(), r)).internal()?;
    }
    out.flush().internal()?;
    Ok(())
}

fn analyze(args: AnalyzeArgs, mut config: RunConfig) -> Result<(), Failure> {
    apply_sources(&args.sources, &mut config);
    if args.out.is_some() {
        config.out = args.out.clone();
    }
    let Some(out_dir) = config.out.clone() else {
        return Err(usage_error("analyze", "--out is required"));
    };
    require_file(&args.claims, "claims").input()?;
    if let Some(r) = &args.replies {
        require_file(r, "replies").input()?;
    }
    let scorer = build_scorer(&args.scoring, &mut config, "analyze")?;

    let replies: Box<dyn BufRead> = match &args.replies {
        Some(path) => Box::new(open(path)?),
        None => Box::new(io::empty()),
    };
    let corpus = load_corpus(open(&args.claims)?, replies)
        .context("loading corpus")
        .input()?;
    if corpus.skipped_replies > 0 {
        eprintln!(
            "warning: skipped {} replies referencing unknown claims",
            corpus.skipped_replies
        );
    }
    let scored = score_corpus(&corpus, &scorer, parallelism(&config));
    let report = build_report(&scored);
    write_report(&out_dir, &report)
        .with_context(|| format!("writing report to {}", out_dir.display()))
        .input()?;
    eprintln!(
        "analyzed {} claims, {} replies -> {}",
        corpus.claims.len(),
        corpus.replies.len(),
        out_dir.display()
    );
    Ok(())
}

fn report(args: ReportArgs) -> Result<(), Failure> {
    if args.format != "markdown" {
        return Err(Failure::Input(anyhow!(
            "unsupported format `{}` (expected markdown)",
            args.format
        )));
    }
    if !args.input.is_dir() {
        return Err(Failure::Input(anyhow!(
            "report directory {} does not exist",
            args.input.display()
        )));
    }
    let md = render_markdown(&args.input).input()?;
    print!("{md}");
    Ok(())
}
