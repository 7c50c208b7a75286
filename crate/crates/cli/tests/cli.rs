mod common;

use std::fs;

use common::*;

#[test]
fn map_vad_deadly_is_anger() {
    let out = run(&["map-vad", "--valence", "0.14", "--arousal", "0.85", "--dominance", "0.55"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v = json(stdout(&out).trim());
    assert_eq!(v["dominant"], "anger");
    assert!((v["anger"].as_f64().unwrap() - 0.4583).abs() < 0.005);
    assert!((v["fear"].as_f64().unwrap() - 0.3998).abs() < 0.005);
    assert!((v["sadness"].as_f64().unwrap() - 0.1419).abs() < 0.005);
    assert_eq!(v["happiness"].as_f64().unwrap(), 0.0);
    assert_eq!(v["neutral_degenerate"], false);
}

#[test]
fn map_vad_without_recentering_is_happiness() {
    let out = run(&[
        "map-vad", "--valence", "0.14", "--arousal", "0.85", "--dominance", "0.55", "--no-recenter",
    ]);
    assert!(out.status.success());
    assert_eq!(json(stdout(&out).trim())["dominant"], "happiness");
}

#[test]
fn map_vad_rejects_out_of_range() {
    let out = run(&["map-vad", "--valence", "1.5", "--arousal", "0.5", "--dominance", "0.5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("error"));
}

#[test]
fn map_vad_midpoint_is_degenerate() {
    let out = run(&["map-vad", "--valence", "0.5", "--arousal", "0.5", "--dominance", "0.5"]);
    assert!(out.status.success());
    let v = json(stdout(&out).trim());
    assert_eq!(v["neutral_degenerate"], true);
    assert_eq!(v["dominant"], "neutral");
}

#[test]
fn empty_text_is_pure_neutral() {
    let dir = tempfile::tempdir().unwrap();
    let lex = write(dir.path(), "lex.tsv", LEXICON);
    let out = run(&["score", "--lexicon", s(&lex), "--text", ""]);
    assert!(out.status.success(), "{}", stderr(&out));
    let v = json(stdout(&out).trim());
    for e in ["anger", "fear", "sadness", "happiness"] {
        assert_eq!(v[e].as_f64(), Some(0.0));
    }
    assert_eq!(v["neutral"].as_f64(), Some(1.0));
    assert_eq!(v["dominant"], "neutral");
    assert_eq!(v["k"], 0);
}

#[test]
fn missing_lexicon_exits_one_with_usage() {
    let out = run(&["score", "--text", "hello"]);
    assert_eq!(out.status.code(), Some(1));
    let err = stderr(&out);
    assert!(err.contains("--lexicon"), "{err}");
    assert!(err.contains("Usage"), "{err}");
}

#[test]
fn nonexistent_lexicon_exits_one() {
    let out = run(&["score", "--lexicon", "/no/such/file.tsv", "--text", "x"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn unknown_flag_exits_one() {
    let out = run(&["score", "--bogus"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn version_and_help_exit_zero() {
    let out = run(&["--version"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("stopwords sha256:"));
    assert!(run(&["--help"]).status.success());
}

#[test]
fn build_lexicon_writes_unified_tsv() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    let (a, d, v) = (
        write(p, "a.tsv", AFFECT),
        write(p, "d.tsv", DEPECHEMOOD),
        write(p, "v.tsv", VAD),
    );
    let lex = p.join("lex.tsv");
    let out = run(&[
        "build-lexicon", "--affect", s(&a), "--depechemood", s(&d), "--vad", s(&v), "--out", s(&lex),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "entries=5 affect=2 dm=2 vad=1");
    assert_eq!(fs::read_to_string(&lex).unwrap(), LEXICON);
}

#[test]
fn build_lexicon_needs_all_sources() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.tsv", AFFECT);
    let out = run(&["build-lexicon", "--affect", s(&a), "--out", s(&dir.path().join("x"))]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn malformed_source_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    let a = write(p, "a.tsv", "hate\trage\t0.5\n");
    let d = write(p, "d.tsv", DEPECHEMOOD);
    let v = write(p, "v.tsv", VAD);
    let out = run(&[
        "build-lexicon", "--affect", s(&a), "--depechemood", s(&d), "--vad", s(&v), "--out",
        s(&p.join("lex.tsv")),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("rage"), "{}", stderr(&out));
}

#[test]
fn score_jsonl_input_keeps_ids_and_order() {
    let dir = tempfile::tempdir().unwrap();
    let lex = write(dir.path(), "lex.tsv", LEXICON);
    let claims = write(dir.path(), "claims.jsonl", CLAIMS);
    let out = run(&["score", "--lexicon", s(&lex), "--input", s(&claims)]);
    assert!(out.status.success(), "{}", stderr(&out));
    let lines: Vec<_> = stdout(&out).lines().map(json).collect();
    let ids: Vec<_> = lines.iter().map(|v| v["id"].as_str().unwrap().to_string()).collect();
    assert_eq!(ids, ["c1", "c2", "c3"]);
    // "I hate this deadly thing": k=3 (i, this are stop words), hate + deadly matched
    assert_eq!(lines[0]["k"], 3);
    assert_eq!(lines[0]["matched"], 2);
    assert_eq!(lines[0]["dominant"], "anger");
    assert_eq!(lines[2]["dominant"], "neutral");
}

#[test]
fn fuzzy_can_be_disabled() {
    let dir = tempfile::tempdir().unwrap();
    let lex = write(dir.path(), "lex.tsv", LEXICON);
    let fuzzy = run(&["score", "--lexicon", s(&lex), "--text", "deadlyy"]);
    assert_eq!(json(stdout(&fuzzy).trim())["fuzzy"], 1);
    let exact = run(&["score", "--lexicon", s(&lex), "--text", "deadlyy", "--no-fuzzy"]);
    let v = json(stdout(&exact).trim());
    assert_eq!(v["fuzzy"], 0);
    assert_eq!(v["neutral"].as_f64(), Some(1.0));
}

#[test]
fn config_file_supplies_lexicon_and_flags_override() {
    let dir = tempfile::tempdir().unwrap();
    let lex = write(dir.path(), "lex.tsv", LEXICON);
    let cfg = write(
        dir.path(),
        "cfg.toml",
        &format!("lexicon = {:?}\nfuzzy_threshold = 0.5\n", s(&lex)),
    );
    // "deadlx" vs "deadly" = 10/12 > 0.5 but < 0.9
    let out = run(&["--config", s(&cfg), "score", "--text", "deadlx"]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(json(stdout(&out).trim())["fuzzy"], 1);
    let out = run(&["--config", s(&cfg), "score", "--text", "deadlx", "--fuzzy-threshold", "0.9"]);
    assert_eq!(json(stdout(&out).trim())["fuzzy"], 0);
}

#[test]
fn bad_config_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "cfg.toml", "colour = 3\n");
    let out = run(&["--config", s(&cfg), "map-vad", "--valence", "0", "--arousal", "0", "--dominance", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let cfg = write(dir.path(), "cfg2.toml", "fuzzy_threshold = 1.5\n");
    let lex = write(dir.path(), "lex.tsv", LEXICON);
    let out = run(&["--config", s(&cfg), "score", "--lexicon", s(&lex), "--text", "x"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn analyze_then_report() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    let lex = write(p, "lex.tsv", LEXICON);
    let claims = write(p, "claims.jsonl", CLAIMS);
    let replies = write(p, "replies.jsonl", REPLIES);
    let rep = p.join("rep");
    let out = run(&[
        "analyze", "--lexicon", s(&lex), "--claims", s(&claims), "--replies", s(&replies), "--out",
        s(&rep),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stderr(&out).contains("skipped 1"));
    for f in [
        "emotion_means.csv",
        "pattern.csv",
        "engagement_table.csv",
        "reply_means.csv",
        "correlations.csv",
        "ttests.csv",
    ] {
        assert!(rep.join(f).is_file(), "{f}");
    }
    let pattern = fs::read_to_string(rep.join("pattern.csv")).unwrap();
    assert_eq!(
        pattern.lines().next().unwrap(),
        "claim_id,credibility,anger,fear,sadness,happiness,neutral,dominant"
    );
    assert!(pattern.contains("c2,true,0.000000,0.000000,0.000000,0.500000,0.500000,happiness"));

    let md = run(&["report", "--in", s(&rep)]);
    assert!(md.status.success());
    assert!(stdout(&md).contains("| c1 | false |"));
    let bad = run(&["report", "--in", s(&rep), "--format", "html"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn analyze_from_sources_matches_prebuilt_lexicon() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path();
    let lex = write(p, "lex.tsv", LEXICON);
    let (a, d, v) = (
        write(p, "a.tsv", AFFECT),
        write(p, "d.tsv", DEPECHEMOOD),
        write(p, "v.tsv", VAD),
    );
    let claims = write(p, "claims.jsonl", CLAIMS);
    let (r1, r2) = (p.join("r1"), p.join("r2"));
    let one = run(&["analyze", "--lexicon", s(&lex), "--claims", s(&claims), "--out", s(&r1)]);
    let two = run(&[
        "analyze", "--affect", s(&a), "--depechemood", s(&d), "--vad", s(&v), "--claims",
        s(&claims), "--out", s(&r2),
    ]);
    assert!(one.status.success() && two.status.success(), "{}", stderr(&two));
    // the TSV is rounded to 1e-6, so compare the rounded pattern file
    assert_eq!(
        fs::read_to_string(r1.join("pattern.csv")).unwrap(),
        fs::read_to_string(r2.join("pattern.csv")).unwrap()
    );
}

#[test]
fn malformed_claims_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let lex = write(dir.path(), "lex.tsv", LEXICON);
    let claims = write(dir.path(), "claims.jsonl", "{\"id\":\"c1\"}\n");
    let out = run(&[
        "analyze", "--lexicon", s(&lex), "--claims", s(&claims), "--out",
        s(&dir.path().join("r")),
    ]);
    assert_eq!(out.status.code(), Some(1));
}
