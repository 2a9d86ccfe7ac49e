//! Corpus runner: replays `.seq` cases and compares verdicts.
//!
//! A case file starts with two header lines,
//!
//! ```text
//! # expect: valid|invalid
//! # system: ck|ck+id|ck+mp|ck+mp+id
//! ```
//!
//! followed by the sequent (or a bare formula) on the remaining lines.
//! Malformed files are recorded as failing cases, never a crash.

use std::fmt;
use std::path::Path;
use std::time::{Duration, Instant};

use condlog::calculus::{BoundedSequent, System};
use condlog::search::{prove_bounded, prove_sequent, ProveResult, SearchConfig};
use condlog::sequent::{parse_sequent, Sequent};

#[derive(Debug, Clone)]
pub struct CaseRecord {
    pub name: String,
    pub expected: Option<bool>,
    pub actual: Option<bool>,
    pub wall: Duration,
    pub error: Option<String>,
}

impl CaseRecord {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.expected == self.actual && self.expected.is_some()
    }
}

impl fmt::Display for CaseRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn verdict(v: Option<bool>) -> &'static str {
            match v {
                Some(true) => "valid",
                Some(false) => "invalid",
                None => "?",
            }
        }
        write!(
            f,
            "case {}: expected {}, got {} [{:.2} ms] {}",
            self.name,
            verdict(self.expected),
            verdict(self.actual),
            self.wall.as_secs_f64() * 1e3,
            if self.passed() { "ok" } else { "FAIL" },
        )?;
        if let Some(e) = &self.error {
            write!(f, " ({e})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default)]
pub struct BenchReport {
    pub cases: Vec<CaseRecord>,
}

impl BenchReport {
    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.passed()).count()
    }

    pub fn failed(&self) -> usize {
        self.cases.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for case in &self.cases {
            writeln!(f, "{case}")?;
        }
        write!(
            f,
            "bench: {} passed, {} failed ({} cases)",
            self.passed(),
            self.failed(),
            self.cases.len()
        )
    }
}

fn header_value<'a>(line: &'a str, key: &str) -> Option<&'a str> {
    line.strip_prefix('#')
        .map(str::trim_start)?
        .strip_prefix(key)?
        .strip_prefix(':')
        .map(str::trim)
}

fn parse_case(text: &str) -> Result<(bool, System, Sequent), String> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let expect_line = lines.next().ok_or("empty case file")?;
    let expected = match header_value(expect_line, "expect") {
        Some("valid") => true,
        Some("invalid") => false,
        _ => return Err(format!("bad expect header: {expect_line:?}")),
    };
    let system_line = lines.next().ok_or("missing system header")?;
    let system: System = header_value(system_line, "system")
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| format!("bad system header: {system_line:?}"))?;
    let body = lines.collect::<Vec<_>>().join(" ");
    if body.trim().is_empty() {
        return Err("missing sequent".to_string());
    }
    // A bare formula (no turnstile) stands for `|- x0: <formula>`.
    let body = if body.contains("|-") {
        body
    } else {
        format!("|- {body}")
    };
    let sequent = parse_sequent(&body).map_err(|e| e.to_string())?;
    Ok((expected, system, sequent))
}

fn run_case(name: String, text: &str, depth_limit: usize) -> CaseRecord {
    let start = Instant::now();
    let (expected, actual, error) = match parse_case(text) {
        Err(e) => (None, None, Some(e)),
        Ok((expected, system, sequent)) => {
            if !sequent.is_regular() {
                (Some(expected), None, Some("sequent is not regular".to_string()))
            } else {
                let cfg = SearchConfig {
                    depth_limit,
                    ..SearchConfig::for_system(system)
                };
                let result = if system.has_mp() {
                    prove_bounded(&BoundedSequent::new(sequent), system, &cfg)
                } else {
                    prove_sequent(&sequent, system, &cfg)
                };
                match result {
                    ProveResult::Proved(_) => (Some(expected), Some(true), None),
                    ProveResult::NotProved => (Some(expected), Some(false), None),
                    ProveResult::ResourceExceeded(d) => (
                        Some(expected),
                        None,
                        Some(format!("depth limit {d} exceeded")),
                    ),
                }
            }
        }
    };
    CaseRecord {
        name,
        expected,
        actual,
        wall: start.elapsed(),
        error,
    }
}

/// Runs every `.seq` file under `dir` (sorted by name) and compares
/// verdicts against the expectation headers.
pub fn run_bench(dir: &Path, depth_limit: usize) -> std::io::Result<BenchReport> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|ext| ext == "seq"))
        .collect();
    paths.sort();
    let mut report = BenchReport::default();
    for path in paths {
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        let record = match std::fs::read_to_string(&path) {
            Ok(text) => run_case(name, &text, depth_limit),
            Err(e) => CaseRecord {
                name,
                expected: None,
                actual: None,
                wall: Duration::ZERO,
                error: Some(e.to_string()),
            },
        };
        report.cases.push(record);
    }
    Ok(report)
}
