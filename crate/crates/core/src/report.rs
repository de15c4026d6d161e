//! Check results and their JSON / text rendering.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub algebra: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degree: Option<usize>,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

impl Check {
    pub fn count(
        name: &str,
        algebra: &str,
        degree: Option<usize>,
        expected: usize,
        got: usize,
    ) -> Self {
        Self {
            name: name.to_string(),
            algebra: algebra.to_string(),
            degree,
            expected: expected.to_string(),
            got: got.to_string(),
            pass: expected == got,
        }
    }

    /// A property check: expected "true", got whether it held.
    pub fn holds(name: &str, algebra: &str, degree: Option<usize>, ok: bool) -> Self {
        Self {
            name: name.to_string(),
            algebra: algebra.to_string(),
            degree,
            expected: "true".to_string(),
            got: ok.to_string(),
            pass: ok,
        }
    }

    pub fn text(
        name: &str,
        algebra: &str,
        degree: Option<usize>,
        expected: String,
        got: String,
    ) -> Self {
        let pass = expected == got;
        Self {
            name: name.to_string(),
            algebra: algebra.to_string(),
            degree,
            expected,
            got,
            pass,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
    /// Free-form notes (for example "hypotheses not met"); never affect `pass`.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed: Some(seed),
            ..Self::default()
        }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
        if self.seed.is_none() {
            self.seed = other.seed;
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if let Some(seed) = self.seed {
            let _ = writeln!(s, "seed {seed}");
        }
        for c in &self.checks {
            let deg = c.degree.map(|d| format!(" n={d}")).unwrap_or_default();
            let _ = writeln!(
                s,
                "[{}] {} ({}{}): expected {}, got {}",
                if c.pass { "pass" } else { "FAIL" },
                c.name,
                c.algebra,
                deg,
                c.expected,
                c.got
            );
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        let fails = self.failures().count();
        let _ = writeln!(
            s,
            "{} checks, {} failed",
            self.checks.len(),
            fails
        );
        s
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
