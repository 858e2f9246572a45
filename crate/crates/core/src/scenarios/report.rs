use std::fmt;
use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    /// A recorded observation with no expected value.
    Info,
    /// The claim does not apply to this instance.
    Skip,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Info => "INFO",
            Verdict::Skip => "SKIP",
        })
    }
}

#[derive(Clone, Debug)]
pub struct ReportEntry {
    pub scenario: String,
    pub claim: String,
    pub verdict: Verdict,
    pub witness: String,
    pub elapsed: Duration,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub info: usize,
    pub skip: usize,
}

impl Summary {
    pub fn total(&self) -> usize {
        self.pass + self.fail + self.info + self.skip
    }
}

#[derive(Serialize)]
struct JsonEntry<'a> {
    scenario: &'a str,
    claim: &'a str,
    verdict: Verdict,
    witness: &'a str,
    ms: Option<f64>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    entries: Vec<JsonEntry<'a>>,
    summary: Summary,
}

/// Entries in a fixed order. Timings are left out of both renderings
/// unless asked for, so reports of the same run are byte-identical.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub entries: Vec<ReportEntry>,
}

impl Report {
    pub fn new(entries: Vec<ReportEntry>) -> Self {
        Report { entries }
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for e in &self.entries {
            match e.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::Info => s.info += 1,
                Verdict::Skip => s.skip += 1,
            }
        }
        s
    }

    /// No entry failed; INFO and SKIP do not count against a run.
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.verdict != Verdict::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| e.verdict == Verdict::Fail)
    }

    pub fn render_text(&self, timings: bool) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let ms = if timings {
                format!("{:.3}ms", e.elapsed.as_secs_f64() * 1e3)
            } else {
                "-".to_string()
            };
            let _ = writeln!(out, "{} {} {} {}", e.verdict, e.claim, e.scenario, ms);
            if !e.witness.is_empty() {
                for line in e.witness.lines() {
                    let _ = writeln!(out, "    {line}");
                }
            }
        }
        let s = self.summary();
        let _ = writeln!(
            out,
            "summary: {} checks, {} pass, {} fail, {} info, {} skip",
            s.total(),
            s.pass,
            s.fail,
            s.info,
            s.skip
        );
        out
    }

    pub fn render_json(&self, timings: bool) -> String {
        let report = JsonReport {
            entries: self
                .entries
                .iter()
                .map(|e| JsonEntry {
                    scenario: &e.scenario,
                    claim: &e.claim,
                    verdict: e.verdict,
                    witness: &e.witness,
                    ms: timings.then_some(e.elapsed.as_secs_f64() * 1e3),
                })
                .collect(),
            summary: self.summary(),
        };
        let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
        s.push('\n');
        s
    }
}
