//! The per-point pipeline: sample or take a point, localize, classify,
//! test the regular sequence and check the arc multiplicity claims.

use std::time::Instant;

use super::report::{PointRecord, PointStatus};
use crate::cover::{
    default_arc_order, formal_arcs, hypertangent_member, hypertangent_multiplicity_check, lemma2_check, localize,
    regularity_sequence, sample_point_on_branch, sample_point_on_q, smooth_at, ArcCheckReport, Branch, ChartLocalization,
    CoverError, CoverInstance, ProjectivePoint,
};
use crate::regseq::{regular_at_origin, GroebnerOptions, RefutationKind, RegularityOutcome, DEFAULT_TRIALS};
use crate::seed::{purpose, task_seed};

/// Arcs drawn per checked claim.
pub const DEFAULT_ARCS_PER_POINT: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub cut_trials: usize,
    pub arcs_per_point: usize,
    /// Truncation order of the arcs; by default `2·(largest level) + 2`.
    pub arc_order: Option<usize>,
    pub groebner: GroebnerOptions,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            cut_trials: DEFAULT_TRIALS,
            arcs_per_point: DEFAULT_ARCS_PER_POINT,
            arc_order: None,
            groebner: GroebnerOptions::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointSource {
    Given(ProjectivePoint),
    /// A point of Q off the ramification divisor over which V has `F_p`-points.
    SampleOffBranch,
    SampleOnBranch,
}

impl PointSource {
    fn label(&self) -> &'static str {
        match self {
            PointSource::Given(_) => "given",
            PointSource::SampleOffBranch => "off-branch sample",
            PointSource::SampleOnBranch => "on-branch sample",
        }
    }
}

/// Identifies a check inside a run; all seeds derive from it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TaskId {
    pub master_seed: u64,
    pub trial: u64,
    pub index: u64,
}

impl TaskId {
    pub fn seed(&self, purpose: u64) -> u64 {
        task_seed(self.master_seed, self.trial, self.index, purpose)
    }
}

fn empty_record(task: TaskId, source: &PointSource) -> PointRecord {
    PointRecord {
        trial: task.trial,
        index: task.index,
        source: source.label().to_string(),
        point_seed: None,
        point: None,
        branch: None,
        smooth: None,
        case: None,
        sequence: Vec::new(),
        regularity: None,
        arc_checks: Vec::new(),
        status: PointStatus::Inconclusive,
        message: None,
        elapsed_ms: None,
    }
}

fn error_status(e: &CoverError) -> PointStatus {
    match e {
        CoverError::NoPointFound(_) => PointStatus::NoPoint,
        CoverError::Unsupported(_) => PointStatus::Unsupported,
        CoverError::NotSmooth(_) => PointStatus::Failed,
        _ => PointStatus::Inconclusive,
    }
}

/// Runs the full pipeline at one point. Sampling requires `prime`; the
/// instance is reduced modulo it first.
pub fn check_point(
    instance: &CoverInstance,
    source: &PointSource,
    prime: Option<u64>,
    task: TaskId,
    opts: &CheckOptions,
) -> PointRecord {
    let start = Instant::now();
    let mut record = empty_record(task, source);
    if let Err(e) = run_checks(instance, source, prime, task, opts, &mut record) {
        record.status = error_status(&e);
        record.message = Some(e.to_string());
    }
    record.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    record
}

fn run_checks(
    instance: &CoverInstance,
    source: &PointSource,
    prime: Option<u64>,
    task: TaskId,
    opts: &CheckOptions,
    record: &mut PointRecord,
) -> Result<(), CoverError> {
    let (working, point) = match source {
        PointSource::Given(p) => {
            let working = match prime {
                Some(p) if instance.domain().modulus() != Some(p) => instance.reduce_mod(p)?,
                _ => instance.clone(),
            };
            (working, p.clone())
        }
        PointSource::SampleOffBranch | PointSource::SampleOnBranch => {
            let p = prime.ok_or(CoverError::NotPrimeField)?;
            let working = match instance.domain().modulus() {
                Some(q) if q == p => instance.clone(),
                _ => instance.reduce_mod(p)?,
            };
            let off = matches!(source, PointSource::SampleOffBranch);
            let purpose = if off { purpose::POINT_OFF_BRANCH } else { purpose::POINT_ON_BRANCH };
            let seed = task.seed(purpose);
            record.point_seed = Some(seed);
            let point = if off {
                sample_point_on_q(&working, seed, p, true)?
            } else {
                sample_point_on_branch(&working, seed, p)?
            };
            (working, point)
        }
    };
    record.point = Some(point.to_string());
    let chart = localize(&working, &point)?;
    record.branch = Some(chart.branch().to_string());
    let smooth = smooth_at(&chart);
    record.smooth = Some(smooth);
    let case = regularity_sequence(&chart)?;
    record.case = Some(case.tag);
    record.sequence = case.labels.clone();
    let n = chart.z_ring().nvars();
    let verdict =
        match regular_at_origin(&case.sequence, n, opts.cut_trials, task.seed(purpose::REGULARITY), &opts.groebner) {
            Ok(v) => v,
            Err(e) => {
                record.status = PointStatus::Inconclusive;
                record.message = Some(e.to_string());
                return Ok(());
            }
        };
    let regularity = verdict.outcome.clone();
    record.regularity = Some(verdict);
    record.arc_checks = arc_checks(&chart, task, opts)?;

    let arcs_fail = record.arc_checks.iter().any(|c| c.failures() > 0);
    let arcs_unresolved = record.arc_checks.iter().any(|c| c.unresolved() > 0);
    if let RegularityOutcome::RefutedAtPrefix(i) = regularity {
        let kind = match &record.regularity.as_ref().and_then(|v| v.refutation) {
            Some(RefutationKind::Exact) => "exact".to_string(),
            Some(RefutationKind::MonteCarlo { trials }) => format!("all {trials} random cuts"),
            None => "unknown".to_string(),
        };
        record.message = Some(format!("prefix {i} ({}) is not regular at the point: {kind}", case.labels[..i].join(", ")));
    } else if let Some(c) = record.arc_checks.iter().find(|c| c.failures() > 0) {
        record.message = Some(format!("{}: {} arc(s) below order {}", c.function, c.failures(), c.required));
    }
    record.status = match regularity {
        _ if arcs_fail => PointStatus::Failed,
        RegularityOutcome::RefutedAtPrefix(_) => PointStatus::Refuted,
        RegularityOutcome::Inconclusive(_) => PointStatus::Inconclusive,
        RegularityOutcome::CertifiedRegular if arcs_unresolved => PointStatus::Inconclusive,
        RegularityOutcome::CertifiedRegular => PointStatus::Certified,
    };
    Ok(())
}

/// Hypertangent members of every level off the branch divisor; the
/// truncated branch polynomials `h_k`, `k < K`, on it.
pub fn arc_checks(chart: &ChartLocalization, task: TaskId, opts: &CheckOptions) -> Result<Vec<ArcCheckReport>, CoverError> {
    let fam = chart.family();
    let top = match chart.branch() {
        Branch::Off => fam.max_hypertangent_level(),
        Branch::On => fam.sheets() - 1,
    };
    let order = opts.arc_order.unwrap_or_else(|| default_arc_order(top));
    let arcs = formal_arcs(chart, opts.arcs_per_point, order, task.seed(purpose::ARCS))?;
    (1..=top)
        .map(|level| match chart.branch() {
            Branch::Off => {
                let member = hypertangent_member(chart, level, task.seed(purpose::HYPERTANGENT))?;
                hypertangent_multiplicity_check(chart, &member, &arcs)
            }
            Branch::On => lemma2_check(chart, level, &arcs),
        })
        .collect()
}
