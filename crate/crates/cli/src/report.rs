//! Run reports: what a command did, its verdict, and every witness or
//! violation it produced, emitted as structured text with a stable field
//! order (`command`, `input`, `verdict`, details, `witness`, `violation`,
//! `timing-ms`).

use std::fmt;
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Unknown => "unknown",
        })
    }
}

/// The outcome of one command run. A `fail` verdict always carries at least
/// one violation entry with a concrete counterexample.
#[derive(Debug, Clone)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<String>,
    pub verdict: Verdict,
    /// Command-specific facts as `key: value` lines, in construction order.
    pub details: Vec<(String, String)>,
    pub witnesses: Vec<String>,
    pub violations: Vec<String>,
    pub timing_ms: u128,
}

impl RunReport {
    pub fn new(command: &str, inputs: &[String]) -> RunReport {
        RunReport {
            command: command.to_string(),
            inputs: inputs.to_vec(),
            verdict: Verdict::Pass,
            details: Vec::new(),
            witnesses: Vec::new(),
            violations: Vec::new(),
            timing_ms: 0,
        }
    }

    pub fn detail(&mut self, key: impl Into<String>, value: impl fmt::Display) {
        self.details.push((key.into(), value.to_string()));
    }

    pub fn witness(&mut self, value: impl fmt::Display) {
        self.witnesses.push(value.to_string());
    }

    pub fn violation(&mut self, value: impl fmt::Display) {
        self.violations.push(value.to_string());
    }

    pub fn emit(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        for input in &self.inputs {
            let _ = writeln!(out, "input: {input}");
        }
        let _ = writeln!(out, "verdict: {}", self.verdict);
        for (key, value) in &self.details {
            let _ = writeln!(out, "{key}: {value}");
        }
        for witness in &self.witnesses {
            let _ = writeln!(out, "witness: {witness}");
        }
        for violation in &self.violations {
            let _ = writeln!(out, "violation: {violation}");
        }
        let _ = writeln!(out, "timing-ms: {}", self.timing_ms);
        out
    }
}

/// Renders a list of indices as a space-separated string.
pub fn index_list(items: &[usize]) -> String {
    let parts: Vec<String> = items.iter().map(|v| v.to_string()).collect();
    parts.join(" ")
}
