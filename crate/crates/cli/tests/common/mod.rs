#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn emofuse() -> Command {
    Command::new(env!("CARGO_BIN_EXE_emofuse"))
}

pub fn run(args: &[&str]) -> Output {
    emofuse().args(args).output().expect("spawn emofuse")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

pub fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

pub fn write(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

pub fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

pub const AFFECT: &str = "word\temotion\tscore\n\
hate\tanger\t0.8\n\
hate\tfear\t0.2\n\
love\tjoy\t0.9\n";

pub const DEPECHEMOOD: &str = "word\tanger\tanticipation\tdisgust\tfear\tjoy\tsadness\tsurprise\ttrust\n\
hate\t0.5\t0\t0\t0.5\t0\t0\t0\t0\n\
grief\t0\t0\t0\t0.1\t0\t0.9\t0\t0\n\
hope\t0\t0.5\t0\t0\t0\t0\t0\t0.5\n";

pub const VAD: &str = "word\tvalence\tarousal\tdominance\n\
deadly\t0.14\t0.85\t0.55\n\
love\t1\t0.5\t0.5\n";

pub const LEXICON: &str = "word\tanger\tfear\tsadness\thappiness\tsource\n\
deadly\t0.458328\t0.399750\t0.141922\t0.000000\tVAD\n\
grief\t0.000000\t0.100000\t0.900000\t0.000000\tDM\n\
hate\t0.800000\t0.200000\t0.000000\t0.000000\tAFFECT\n\
hope\t0.000000\t0.000000\t0.000000\t0.000000\tDM\n\
love\t0.000000\t0.000000\t0.000000\t1.000000\tAFFECT\n";

pub const CLAIMS: &str = r#"{"id":"c1","text":"I hate this deadly thing","topic":"health","credibility":"false","retweets":10,"likes":20}
{"id":"c2","text":"love and hope","topic":"health","credibility":"true","retweets":3,"likes":4}
{"id":"c3","text":"so much grief","topic":"politics","credibility":"false","retweets":5,"likes":1}
"#;

pub const REPLIES: &str = r#"{"claim_id":"c1","text":"hate"}
{"claim_id":"c2","text":"lovee"}
{"claim_id":"c3","text":"nothing here"}
{"claim_id":"zz","text":"orphan"}
"#;

/// Parse one JSON output line.
pub fn json(line: &str) -> serde_json::Value {
    serde_json::from_str(line).unwrap_or_else(|e| panic!("bad json {line:?}: {e}"))
}
