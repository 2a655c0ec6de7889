//! Verification transcripts shared by the theorem engine and the CLI.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Entry {
    /// A computed intermediate value.
    Step { name: String, value: String },
    /// An asserted postcondition.
    Check { name: String, passed: bool, detail: String },
    Note { text: String },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Transcript {
    pub entries: Vec<Entry>,
}

impl Transcript {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn step(&mut self, name: impl Into<String>, value: impl fmt::Display) {
        self.entries.push(Entry::Step { name: name.into(), value: value.to_string() });
    }

    /// Records a check and returns its outcome.
    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> bool {
        self.entries.push(Entry::Check { name: name.into(), passed, detail: detail.into() });
        passed
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.entries.push(Entry::Note { text: text.into() });
    }

    pub fn extend(&mut self, prefix: &str, other: Transcript) {
        for e in other.entries {
            self.entries.push(match e {
                Entry::Step { name, value } => Entry::Step { name: format!("{prefix}{name}"), value },
                Entry::Check { name, passed, detail } => Entry::Check { name: format!("{prefix}{name}"), passed, detail },
                n => n,
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| !matches!(e, Entry::Check { passed: false, .. }))
    }

    pub fn failures(&self) -> Vec<&str> {
        self.entries
            .iter()
            .filter_map(|e| match e {
                Entry::Check { name, passed: false, .. } => Some(name.as_str()),
                _ => None,
            })
            .collect()
    }

    pub fn checks(&self) -> usize {
        self.entries.iter().filter(|e| matches!(e, Entry::Check { .. })).count()
    }
}

impl fmt::Display for Transcript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            match e {
                Entry::Step { name, value } => writeln!(f, "  {name} = {value}")?,
                Entry::Check { name, passed, detail } => {
                    let tag = if *passed { "ok" } else { "FAIL" };
                    if detail.is_empty() {
                        writeln!(f, "  [{tag}] {name}")?
                    } else {
                        writeln!(f, "  [{tag}] {name}: {detail}")?
                    }
                }
                Entry::Note { text } => writeln!(f, "  note: {text}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transcript_tracks_failures() {
        let mut t = Transcript::new();
        t.step("n", 3);
        assert!(t.check("a", true, ""));
        assert!(!t.check("b", false, "why"));
        t.note("x");
        assert!(!t.passed());
        assert_eq!(t.failures(), vec!["b"]);
        let text = t.to_string();
        assert!(text.contains("[FAIL] b: why"));
        assert!(text.contains("n = 3"));
        let json = serde_json::to_string(&t).unwrap();
        assert!(json.contains("\"kind\":\"check\""));
    }
}
