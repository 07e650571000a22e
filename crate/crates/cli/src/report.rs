use std::fmt::Write as _;
use std::time::Duration;

use cremona::maps::CremonaPairJson;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct CheckLine {
    pub label: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

/// Everything a command prints. Field order is the print order, so two runs
/// with the same arguments produce the same bytes (timing is opt-in).
#[derive(Debug, Default, Serialize)]
pub struct Report {
    pub command: String,
    pub checks: Vec<CheckLine>,
    pub artifacts: Vec<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<CremonaPairJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(command: String) -> Self {
        Report {
            command,
            ..Default::default()
        }
    }

    pub fn check(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckLine {
            label: label.into(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn artifact(&mut self, label: impl Into<String>, value: impl ToString) {
        self.artifacts.push((label.into(), value.to_string()));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn set_timing(&mut self, elapsed: Duration) {
        self.timing_ms = Some(elapsed.as_millis());
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "$ cremona {}", self.command).unwrap();
        for (label, value) in &self.artifacts {
            if value.contains('\n') {
                writeln!(out, "{label}:").unwrap();
                for line in value.lines() {
                    writeln!(out, "  {line}").unwrap();
                }
            } else {
                writeln!(out, "{label}: {value}").unwrap();
            }
        }
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(out, "[{status}] {}", c.label).unwrap();
            } else {
                writeln!(out, "[{status}] {} ({})", c.label, c.detail).unwrap();
            }
        }
        if !self.checks.is_empty() {
            let n = self.checks.iter().filter(|c| c.passed).count();
            writeln!(out, "{n}/{} checks passed", self.checks.len()).unwrap();
        }
        if let Some(ms) = self.timing_ms {
            writeln!(out, "elapsed: {ms} ms").unwrap();
        }
        out
    }
}
