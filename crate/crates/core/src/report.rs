//! Versioned suite report, rendered as JSON or text.

use std::fmt::Write as _;

use serde::Serialize;

use crate::invariants::{ClaimOutcome, Suite};
use crate::verdict::Status;

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct ClaimRecord {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub expected: Status,
    pub witness: String,
    pub ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub verified: usize,
    pub refuted: usize,
    pub skipped: usize,
    pub expected_refuted: usize,
    pub unexpected_refuted: usize,
    /// Expected to be refuted but verified.
    pub unexpected_verified: usize,
    pub errors: usize,
}

/// Wall-clock data, kept apart so the rest of the report is reproducible.
#[derive(Debug, Clone, Serialize)]
pub struct Header {
    pub total_ms: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub version: u32,
    pub tool: String,
    pub header: Header,
    pub suite: Suite,
    pub claims: Vec<ClaimRecord>,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: Suite, outcomes: Vec<ClaimOutcome>) -> Self {
        let mut summary = Summary { total: outcomes.len(), ..Summary::default() };
        for o in &outcomes {
            match o.status {
                Status::Verified => summary.verified += 1,
                Status::Refuted => summary.refuted += 1,
                Status::Skipped => summary.skipped += 1,
            }
            if o.error.is_some() {
                summary.errors += 1;
            } else if o.status == Status::Refuted {
                if o.expected == Status::Refuted {
                    summary.expected_refuted += 1;
                } else {
                    summary.unexpected_refuted += 1;
                }
            } else if o.status == Status::Verified && o.expected == Status::Refuted {
                summary.unexpected_verified += 1;
            }
        }
        let claims: Vec<ClaimRecord> = outcomes
            .into_iter()
            .map(|o| ClaimRecord {
                id: o.id,
                anchor: o.anchor,
                status: o.status,
                expected: o.expected,
                witness: o.witness,
                ms: o.ms,
                error: o.error,
            })
            .collect();
        let total_ms = claims.iter().map(|c| c.ms).sum();
        Report {
            version: REPORT_VERSION,
            tool: concat!("somos ", env!("CARGO_PKG_VERSION")).to_string(),
            header: Header { total_ms },
            suite,
            claims,
            summary,
        }
    }

    /// Drops all timing so two runs compare byte for byte.
    pub fn without_timing(mut self) -> Self {
        self.header.total_ms = 0;
        for c in &mut self.claims {
            c.ms = 0;
        }
        self
    }

    pub fn exit_ok(&self) -> bool {
        self.summary.unexpected_refuted == 0 && self.summary.errors == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} report v{}, suite {}", self.tool, self.version, self.suite);
        let width = self.claims.iter().map(|c| c.id.len()).max().unwrap_or(0);
        for c in &self.claims {
            let mark = if c.error.is_some() {
                "ERROR"
            } else if c.status == c.expected {
                "ok"
            } else if c.status == Status::Refuted {
                "FAIL"
            } else {
                "note"
            };
            let _ = writeln!(s, "{mark:<5} {:<8} {:<width$}  {}", c.status.to_string(), c.id, c.witness);
            if c.expected != Status::Verified {
                let _ = writeln!(s, "{:<14} {:<width$}  expected {}", "", "", c.expected);
            }
        }
        let m = &self.summary;
        let _ = writeln!(
            s,
            "{} claims: {} verified, {} refuted ({} expected, {} unexpected), {} skipped, {} errors",
            m.total, m.verified, m.refuted, m.expected_refuted, m.unexpected_refuted, m.skipped, m.errors
        );
        if m.unexpected_verified > 0 {
            let _ = writeln!(s, "{} claims expected to fail were verified", m.unexpected_verified);
        }
        let _ = writeln!(s, "total {} ms", self.header.total_ms);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn outcome(id: &str, status: Status, expected: Status, error: bool) -> ClaimOutcome {
        ClaimOutcome {
            id: id.into(),
            suite: Suite::Surface,
            anchor: "x = x".into(),
            status,
            expected,
            witness: "w".into(),
            ms: 3,
            error: error.then(|| "boom".to_string()),
        }
    }

    #[test]
    fn summary_counts() {
        let r = Report::new(
            Suite::Surface,
            vec![
                outcome("a", Status::Verified, Status::Verified, false),
                outcome("b", Status::Refuted, Status::Refuted, false),
                outcome("c", Status::Verified, Status::Refuted, false),
            ],
        );
        assert_eq!(r.summary.expected_refuted, 1);
        assert_eq!(r.summary.unexpected_verified, 1);
        assert!(r.exit_ok());
        assert_eq!(r.header.total_ms, 9);
        assert_eq!(r.without_timing().header.total_ms, 0);
    }

    #[test]
    fn refutation_or_error_fails_exit() {
        let bad = Report::new(Suite::Surface, vec![outcome("a", Status::Refuted, Status::Verified, false)]);
        assert!(!bad.exit_ok());
        let err = Report::new(Suite::Surface, vec![outcome("a", Status::Skipped, Status::Verified, true)]);
        assert_eq!(err.summary.errors, 1);
        assert!(!err.exit_ok());
    }

    #[test]
    fn json_has_schema_fields() {
        let r = Report::new(Suite::Surface, vec![outcome("a", Status::Verified, Status::Verified, false)]);
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        for key in ["version", "suite", "claims", "summary"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        let c = &v["claims"][0];
        for key in ["id", "anchor", "status", "witness", "ms"] {
            assert!(c.get(key).is_some(), "{key}");
        }
        assert_eq!(v["suite"], "surface");
        assert!(r.to_text().contains("1 claims: 1 verified"));
    }
}
