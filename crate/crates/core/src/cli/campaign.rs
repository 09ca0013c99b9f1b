//! Campaigns: many random instances of one family, several points each.

use rayon::prelude::*;
use serde::Serialize;

use super::certify::{check_point, CheckOptions, PointSource, TaskId};
use super::report::{digest, ReportDocument, Settings};
use crate::cover::{check_prime, field_label, CoverError, CoverFamily, CoverInstance};
use crate::poly::CoeffDomain;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CampaignConfig {
    pub family: CoverFamily,
    /// Number of random instances.
    pub trials: usize,
    pub points_off: usize,
    pub points_on: usize,
    pub prime: u64,
    pub seed: u64,
    /// Run (instance, point) tasks on a thread pool. Results do not depend
    /// on this.
    pub concurrent: bool,
    pub options: CheckOptions,
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum CampaignError {
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("at least one point per instance is required")]
    NoPoints,
    #[error(transparent)]
    Cover(#[from] CoverError),
}

#[derive(Serialize)]
struct DigestInput<'a> {
    family: &'a CoverFamily,
    trials: usize,
    points_off: usize,
    points_on: usize,
    prime: u64,
    seed: u64,
    cut_trials: usize,
    arcs_per_point: usize,
    arc_order: Option<usize>,
    gb_budget: usize,
}

impl CampaignConfig {
    pub fn validate(&self) -> Result<(), CampaignError> {
        if self.trials == 0 {
            return Err(CampaignError::NoTrials);
        }
        if self.points_off + self.points_on == 0 {
            return Err(CampaignError::NoPoints);
        }
        check_prime(self.prime, self.family.sheets())?;
        Ok(())
    }

    fn digest(&self) -> String {
        let input = DigestInput {
            family: &self.family,
            trials: self.trials,
            points_off: self.points_off,
            points_on: self.points_on,
            prime: self.prime,
            seed: self.seed,
            cut_trials: self.options.cut_trials,
            arcs_per_point: self.options.arcs_per_point,
            arc_order: self.options.arc_order,
            gb_budget: self.options.groebner.step_budget,
        };
        digest(serde_json::to_string(&input).expect("serializable").as_bytes())
    }
}

/// Samples `trials` random instances over `F_p` and checks the configured
/// points on each. Point `j` of trial `t` uses the task seeds of
/// `(seed, t, j)`; on-branch points are numbered after the off-branch ones.
pub fn run_campaign(config: &CampaignConfig) -> Result<ReportDocument, CampaignError> {
    config.validate()?;
    let domain = CoeffDomain::prime_field(config.prime).map_err(CoverError::from)?;
    let instances: Vec<CoverInstance> = (0..config.trials as u64)
        .map(|t| CoverInstance::random(config.family, domain, config.seed, t))
        .collect();
    let per = config.points_off + config.points_on;
    let tasks: Vec<(usize, usize)> = (0..config.trials).flat_map(|t| (0..per).map(move |j| (t, j))).collect();
    let run = |&(t, j): &(usize, usize)| {
        let source = if j < config.points_off { PointSource::SampleOffBranch } else { PointSource::SampleOnBranch };
        let task = TaskId { master_seed: config.seed, trial: t as u64, index: j as u64 };
        check_point(&instances[t], &source, Some(config.prime), task, &config.options)
    };
    let records = if config.concurrent {
        tasks.par_iter().map(run).collect()
    } else {
        tasks.iter().map(run).collect()
    };
    let settings = Settings {
        prime: Some(config.prime),
        seed: config.seed,
        cut_trials: config.options.cut_trials,
        arcs_per_point: config.options.arcs_per_point,
        arc_order: config.options.arc_order,
        gb_budget: config.options.groebner.step_budget,
    };
    Ok(ReportDocument::new("campaign", config.digest(), config.family, field_label(domain), settings, records))
}
