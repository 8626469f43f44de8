//! Structured, serializable verification records.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Not evaluated, typically a pole; never counts as a failure.
    Skipped,
    /// Two computation routes disagreed.
    Mismatch,
}

impl Status {
    pub fn is_failure(self) -> bool {
        matches!(self, Status::Fail | Status::Mismatch)
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::Mismatch => "mismatch",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The identity registry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    Theorem1,
    Condensation,
    ProofRatios,
    Theorem2,
    Narayana,
    Polynomiality,
    Conjecture3,
    Conjecture4U,
    Conjecture4BigU,
    S2ClosedForm,
}

impl CheckId {
    pub const ALL: [CheckId; 10] = [
        CheckId::Theorem1,
        CheckId::Condensation,
        CheckId::ProofRatios,
        CheckId::Theorem2,
        CheckId::Narayana,
        CheckId::Polynomiality,
        CheckId::Conjecture3,
        CheckId::Conjecture4U,
        CheckId::Conjecture4BigU,
        CheckId::S2ClosedForm,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::Theorem1 => "theorem1",
            CheckId::Condensation => "condensation",
            CheckId::ProofRatios => "proof-ratios",
            CheckId::Theorem2 => "theorem2",
            CheckId::Narayana => "narayana",
            CheckId::Polynomiality => "polynomiality",
            CheckId::Conjecture3 => "conjecture3",
            CheckId::Conjecture4U => "conjecture4-u",
            CheckId::Conjecture4BigU => "conjecture4-U",
            CheckId::S2ClosedForm => "s2-closed-form",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| {
                let known: Vec<_> = CheckId::ALL.iter().map(|c| c.as_str()).collect();
                format!("unknown check `{s}` (known: {})", known.join(", "))
            })
    }
}

impl Serialize for CheckId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PointParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
}

impl PointParams {
    pub fn smr(s: u64, m: u64, r: u64) -> Self {
        PointParams {
            s: Some(s),
            m: Some(m),
            r: Some(r),
            k: None,
        }
    }

    pub fn smrk(s: u64, m: u64, r: u64, k: i64) -> Self {
        PointParams {
            k: Some(k),
            ..Self::smr(s, m, r)
        }
    }
}

impl fmt::Display for PointParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if let Some(s) = self.s {
            parts.push(format!("s={s}"));
        }
        if let Some(m) = self.m {
            parts.push(format!("m={m}"));
        }
        if let Some(r) = self.r {
            parts.push(format!("r={r}"));
        }
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        f.write_str(&parts.join(" "))
    }
}

/// Outcome of one identity check at one parameter point.
///
/// `lhs` and `rhs` are exact renderings (decimal integers, `p/q`
/// rationals, or polynomials), never rounded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub id: CheckId,
    pub params: PointParams,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(
        id: CheckId,
        params: PointParams,
        status: Status,
        lhs: impl ToString,
        rhs: impl ToString,
    ) -> Self {
        VerificationReport {
            id,
            params,
            status,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            notes: Vec::new(),
        }
    }

    pub fn skipped(id: CheckId, params: PointParams, why: impl Into<String>) -> Self {
        let mut r = Self::new(id, params, Status::Skipped, "", "");
        r.notes.push(why.into());
        r
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {} {}", self.status, self.id, self.params)?;
        if !self.lhs.is_empty() || !self.rhs.is_empty() {
            write!(f, ": {} vs {}", self.lhs, self.rhs)?;
        }
        for n in &self.notes {
            write!(f, " ({n})")?;
        }
        Ok(())
    }
}
