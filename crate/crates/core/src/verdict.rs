//! Tri-state outcome shared by every checker.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Refuted,
    Skipped,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub witness: String,
}

impl Verdict {
    pub fn verified(witness: impl Into<String>) -> Self {
        Verdict { status: Status::Verified, witness: witness.into() }
    }

    pub fn refuted(witness: impl Into<String>) -> Self {
        Verdict { status: Status::Refuted, witness: witness.into() }
    }

    pub fn skipped(witness: impl Into<String>) -> Self {
        Verdict { status: Status::Skipped, witness: witness.into() }
    }

    pub fn check(ok: bool, witness: impl Into<String>) -> Self {
        if ok {
            Self::verified(witness)
        } else {
            Self::refuted(witness)
        }
    }

    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }

    /// Conjunction: the first non-verified verdict wins.
    pub fn all(parts: impl IntoIterator<Item = Verdict>) -> Verdict {
        let mut notes = Vec::new();
        for v in parts {
            if v.status != Status::Verified {
                return v;
            }
            notes.push(v.witness);
        }
        Verdict::verified(notes.join("; "))
    }
}
