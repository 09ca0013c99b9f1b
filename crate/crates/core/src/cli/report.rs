//! Machine-readable report documents.
//!
//! Reports are JSON with a fixed field order. Exact rationals are strings
//! `"num/den"`. Wall-clock timings are the only nondeterministic content and
//! can be stripped with [`ReportDocument::strip_timings`].

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::cover::{ArcCheckReport, CaseTag, CoverFamily};
use crate::regseq::RegularityVerdict;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

/// Reports over `F_p` say why a certificate there also holds over `Q`.
pub const SPECIALIZATION_NOTE: &str = "certificates over F_p bound the local dimension over Q from above: \
fibre dimension can only grow under reduction mod p, so regularity mod p implies regularity in characteristic 0";

/// Hex SHA-256 of the input bytes.
pub fn digest(input: &[u8]) -> String {
    Sha256::digest(input).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PointStatus {
    Certified,
    /// The regular-sequence test failed every cut.
    Refuted,
    /// A hard check failed: singular point or an arc order below the claim.
    Failed,
    Inconclusive,
    Unsupported,
    /// No `F_p`-point found within the sampling budget.
    NoPoint,
}

impl PointStatus {
    pub fn exit_code(self) -> i32 {
        match self {
            PointStatus::Certified => EXIT_OK,
            PointStatus::Refuted | PointStatus::Failed => EXIT_REFUTED,
            PointStatus::Inconclusive | PointStatus::Unsupported | PointStatus::NoPoint => EXIT_INCONCLUSIVE,
        }
    }
}

/// Everything checked at one point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointRecord {
    pub trial: u64,
    pub index: u64,
    /// `given`, `off-branch sample` or `on-branch sample`.
    pub source: String,
    /// Seed that reproduces the sampled point (absent for given points).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point_seed: Option<u64>,
    pub point: Option<String>,
    pub branch: Option<String>,
    pub smooth: Option<bool>,
    pub case: Option<CaseTag>,
    pub sequence: Vec<String>,
    pub regularity: Option<RegularityVerdict>,
    pub arc_checks: Vec<ArcCheckReport>,
    pub status: PointStatus,
    pub message: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SummaryVerdict {
    AllCertified,
    Refuted,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub checks: usize,
    pub certified: usize,
    pub refuted: usize,
    pub failed: usize,
    pub inconclusive: usize,
    pub unsupported: usize,
    pub no_point: usize,
    /// Points whose regular-sequence test was certified, over points tested.
    pub regularity_certified: String,
    /// `(trial, index, point seed)` of every refuted or failed check.
    pub reproduce: Vec<(u64, u64, Option<u64>)>,
    pub verdict: SummaryVerdict,
    pub exit_code: i32,
}

impl Summary {
    pub fn from_records(records: &[PointRecord]) -> Summary {
        let count = |s: PointStatus| records.iter().filter(|r| r.status == s).count();
        let tested = records.iter().filter(|r| r.regularity.is_some()).count();
        let regular = records.iter().filter(|r| r.regularity.as_ref().is_some_and(|v| v.is_certified())).count();
        let exit_code = records
            .iter()
            .map(|r| r.status.exit_code())
            .fold(EXIT_OK, |acc, c| match (acc, c) {
                (EXIT_REFUTED, _) | (_, EXIT_REFUTED) => EXIT_REFUTED,
                (EXIT_INCONCLUSIVE, _) | (_, EXIT_INCONCLUSIVE) => EXIT_INCONCLUSIVE,
                _ => EXIT_OK,
            });
        let verdict = match exit_code {
            EXIT_OK => SummaryVerdict::AllCertified,
            EXIT_REFUTED => SummaryVerdict::Refuted,
            _ => SummaryVerdict::Inconclusive,
        };
        Summary {
            checks: records.len(),
            certified: count(PointStatus::Certified),
            refuted: count(PointStatus::Refuted),
            failed: count(PointStatus::Failed),
            inconclusive: count(PointStatus::Inconclusive),
            unsupported: count(PointStatus::Unsupported),
            no_point: count(PointStatus::NoPoint),
            regularity_certified: format!("{regular}/{tested}"),
            reproduce: records
                .iter()
                .filter(|r| r.status.exit_code() == EXIT_REFUTED)
                .map(|r| (r.trial, r.index, r.point_seed))
                .collect(),
            verdict,
            exit_code,
        }
    }
}

/// Settings that influence the result, echoed into the report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Settings {
    pub prime: Option<u64>,
    pub seed: u64,
    pub cut_trials: usize,
    pub arcs_per_point: usize,
    pub arc_order: Option<usize>,
    pub gb_budget: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub command: String,
    pub input_digest: String,
    pub family: CoverFamily,
    pub field: String,
    pub settings: Settings,
    pub records: Vec<PointRecord>,
    pub summary: Summary,
    pub notes: Vec<String>,
}

impl ReportDocument {
    pub fn new(
        command: &str,
        input_digest: String,
        family: CoverFamily,
        field: String,
        settings: Settings,
        records: Vec<PointRecord>,
    ) -> Self {
        let summary = Summary::from_records(&records);
        let mut notes = Vec::new();
        if settings.prime.is_some() {
            notes.push(SPECIALIZATION_NOTE.to_string());
        }
        notes.push("a refutation means every random linear cut failed (Monte-Carlo, high confidence) \
unless it is marked Exact; certifications are proofs"
            .to_string());
        ReportDocument {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            input_digest,
            family,
            field,
            settings,
            records,
            summary,
            notes,
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.summary.exit_code
    }

    pub fn strip_timings(&mut self) {
        for r in &mut self.records {
            r.elapsed_ms = None;
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}
