//! Plain-text reports: a `#` header (command, input digests, seed), result
//! lines, then warnings.

use std::fmt;

use sha2::{Digest, Sha256};

use crate::input::Source;

pub struct Report {
    command: String,
    inputs: Vec<(String, String)>,
    seed: u64,
    lines: Vec<String>,
    warnings: Vec<String>,
}

/// First 16 hex digits of the SHA-256 of `text`.
pub fn digest(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .take(8)
        .map(|b| format!("{b:02x}"))
        .collect()
}

impl Report {
    pub fn new(command: impl Into<String>, seed: u64) -> Self {
        Report {
            command: command.into(),
            inputs: Vec::new(),
            seed,
            lines: Vec::new(),
            warnings: Vec::new(),
        }
    }

    pub fn input(&mut self, src: &Source) {
        self.inputs.push((src.path.clone(), digest(&src.text)));
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn warn(&mut self, s: impl Into<String>) {
        let s = s.into();
        log::warn!("{s}");
        self.warnings.push(s);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# command: {}", self.command)?;
        for (path, d) in &self.inputs {
            writeln!(f, "# input: {path} sha256:{d}")?;
        }
        writeln!(f, "# seed: {}", self.seed)?;
        for l in &self.lines {
            writeln!(f, "{l}")?;
        }
        for w in &self.warnings {
            writeln!(f, "# warning: {w}")?;
        }
        Ok(())
    }
}
