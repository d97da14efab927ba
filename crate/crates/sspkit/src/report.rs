//! Verification reports: one case per checked identity, stable
//! serialization (sorted case ids), TSV and JSON emission.

use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Case {
    pub id: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    /// Where the expected value comes from: "table" for embedded data,
    /// "oracle" for independently computed values, "identity" for exact
    /// algebraic identities.
    pub source: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub cases: Vec<Case>,
    pub passed: usize,
    pub failed: usize,
}

impl VerificationReport {
    pub fn new(suite: &str) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            cases: vec![],
            passed: 0,
            failed: 0,
        }
    }

    pub fn push(&mut self, id: String, expected: String, actual: String, source: &str) {
        let pass = expected == actual;
        if pass {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        self.cases.push(Case {
            id,
            expected,
            actual,
            pass,
            source: source.to_string(),
        });
    }

    pub fn check(&mut self, id: &str, pass: bool, detail: &str, source: &str) {
        self.push(
            id.to_string(),
            "pass".to_string(),
            if pass { "pass".into() } else { format!("FAIL: {detail}") },
            source,
        );
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.passed += other.passed;
        self.failed += other.failed;
        self.cases.extend(other.cases);
    }

    /// Canonical form: cases sorted by id.
    pub fn sorted(mut self) -> Self {
        self.cases.sort_by(|a, b| a.id.cmp(&b.id));
        self
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.clone().sorted()).expect("report serializes")
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("id\texpected\tactual\tpass\tsource\n");
        for c in &self.clone().sorted().cases {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\n",
                c.id, c.expected, c.actual, c.pass, c.source
            ));
        }
        out
    }
}

/// Write `content` to `path` atomically (write-temp-then-rename), or to
/// stdout when `path` is `None`.
pub fn emit(content: &str, path: Option<&Path>) -> Result<()> {
    match path {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(p) => {
            let dir = p.parent().unwrap_or_else(|| Path::new("."));
            let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
            tmp.write_all(content.as_bytes())?;
            tmp.persist(p).map_err(|e| crate::Error::Io(e.to_string()))?;
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_round_trip() {
        let mut r = VerificationReport::new("demo");
        r.push("b".into(), "1".into(), "1".into(), "identity");
        r.push("a".into(), "2".into(), "3".into(), "oracle");
        assert_eq!(r.passed, 1);
        assert_eq!(r.failed, 1);
        assert!(!r.all_passed());
        let json = serde_json::to_string(&r.to_json()).unwrap();
        let back: VerificationReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r.sorted());
    }

    #[test]
    fn empty_report_tsv_is_header_only() {
        let r = VerificationReport::new("empty");
        assert_eq!(r.to_tsv(), "id\texpected\tactual\tpass\tsource\n");
    }
}
