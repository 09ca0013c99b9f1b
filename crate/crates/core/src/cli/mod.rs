//! Command implementations behind the `fanocert` binary.
//!
//! Every command returns an [`Outcome`]: text for standard output, text for
//! standard error and an exit code (`0` all certified, `1` refuted or a
//! failed check, `2` input error, `3` inconclusive or unsupported).

pub mod campaign;
pub mod certify;
pub mod instance;
pub mod parser;
pub mod report;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::chain::{
    main_case_bound, ordering_table, ramified_case_bound, telescoping_product, BoundCertificate, BoundVerdict,
    OrderingTable, TelescopingProduct,
};
use crate::cover::{
    default_prime, localize, regularity_sequence, smooth_at, validate_family, CoverError, CoverFamily,
    ProjectivePoint,
};
use crate::poly::{CoeffDomain, PolyRing, Polynomial};
use crate::regseq::{GroebnerOptions, DEFAULT_STEP_BUDGET, DEFAULT_TRIALS};
use crate::series::{gamma_coefficients, truncated_kth_root};

use campaign::{run_campaign, CampaignConfig};
use certify::{check_point, CheckOptions, PointSource, TaskId, DEFAULT_ARCS_PER_POINT};
use instance::{parse_instance, render_instance, InstanceFile};
use report::{digest, ReportDocument, Settings, EXIT_INCONCLUSIVE, EXIT_OK, EXIT_PARSE, EXIT_REFUTED};

/// Campaign defaults.
pub const DEFAULT_CAMPAIGN_TRIALS: usize = 20;
pub const DEFAULT_POINTS_OFF: usize = 3;
pub const DEFAULT_POINTS_ON: usize = 2;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(stdout: String, exit_code: i32) -> Self {
        Outcome { stdout, stderr: String::new(), exit_code }
    }

    fn error(message: impl std::fmt::Display, exit_code: i32) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {message}\n"), exit_code }
    }
}

/// Flags shared by the commands. `None` means "use the default".
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunSettings {
    pub prime: Option<u64>,
    pub seed: Option<u64>,
    /// Random instances for `campaign`; linear-cut trials for `certify`.
    pub trials: Option<usize>,
    pub points_off: Option<usize>,
    pub points_on: Option<usize>,
    pub arc_order: Option<usize>,
    pub gb_budget: Option<usize>,
    pub no_timings: bool,
}

impl RunSettings {
    fn check_options(&self, cut_trials: usize) -> CheckOptions {
        CheckOptions {
            cut_trials,
            arcs_per_point: DEFAULT_ARCS_PER_POINT,
            arc_order: self.arc_order,
            groebner: GroebnerOptions { step_budget: self.gb_budget.unwrap_or(DEFAULT_STEP_BUDGET) },
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize)]
enum Certified<T> {
    Certificate(T),
    Unsupported(String),
}

#[derive(Serialize)]
struct FamilyReport {
    family: CoverFamily,
    degree: u32,
    ambient_weights: Vec<u32>,
    max_hypertangent_level: u32,
    main_case: Certified<BoundCertificate>,
    ramified_case: Certified<BoundCertificate>,
}

#[derive(Serialize)]
struct BoundReport {
    family: CoverFamily,
    ordering: Certified<OrderingTable>,
    blocks: Vec<TelescopingProduct>,
    main_case: Certified<BoundCertificate>,
    ramified_case: Certified<BoundCertificate>,
}

fn certified<T, E: std::fmt::Display>(r: Result<T, E>) -> Certified<T> {
    match r {
        Ok(v) => Certified::Certificate(v),
        Err(e) => Certified::Unsupported(e.to_string()),
    }
}

fn bound_exit(main: &Certified<BoundCertificate>, ramified: &Certified<BoundCertificate>) -> i32 {
    let expected = |c: &Certified<BoundCertificate>, want: BoundVerdict| match c {
        Certified::Certificate(c) if c.verdict == want => EXIT_OK,
        Certified::Certificate(_) => EXIT_REFUTED,
        Certified::Unsupported(_) => EXIT_INCONCLUSIVE,
    };
    let codes = [expected(main, BoundVerdict::StrictlyBelow), expected(ramified, BoundVerdict::Equal)];
    if codes.contains(&EXIT_REFUTED) {
        EXIT_REFUTED
    } else {
        codes.into_iter().max().unwrap_or(EXIT_OK)
    }
}

/// `family`: validation and both bound certificates.
pub fn family_command(dimension: u32, m: u32, l: u32, k: u32) -> Outcome {
    let family = match validate_family(dimension, m, l, k) {
        Ok(f) => f,
        Err(e) => return Outcome::error(e, EXIT_PARSE),
    };
    let main_case = certified(main_case_bound(&family));
    let ramified_case = certified(ramified_case_bound(&family));
    let exit = bound_exit(&main_case, &ramified_case);
    let report = FamilyReport {
        family,
        degree: family.degree(),
        ambient_weights: family.ambient_weights(),
        max_hypertangent_level: family.max_hypertangent_level(),
        main_case,
        ramified_case,
    };
    Outcome::ok(to_json(&report), exit)
}

/// `bound`: the ordering table, the telescoping blocks and the certificates.
pub fn bound_command(dimension: u32, m: u32, l: u32, k: u32) -> Outcome {
    let family = match validate_family(dimension, m, l, k) {
        Ok(f) => f,
        Err(e) => return Outcome::error(e, EXIT_PARSE),
    };
    let main_case = certified(main_case_bound(&family));
    let ramified_case = certified(ramified_case_bound(&family));
    let exit = bound_exit(&main_case, &ramified_case);
    let blocks = if m >= 3 { vec![telescoping_product(4, m), telescoping_product(l + 1, k * l - 1)] } else { Vec::new() };
    let report = BoundReport { family, ordering: certified(ordering_table(&family)), blocks, main_case, ramified_case };
    Outcome::ok(to_json(&report), exit)
}

#[derive(Serialize)]
struct SeriesReport {
    root_index: u32,
    gamma: Vec<String>,
    self_check: SeriesSelfCheck,
}

#[derive(Serialize)]
struct SeriesSelfCheck {
    variables: usize,
    collections: usize,
    truncation_orders: usize,
    failures: Vec<String>,
}

/// `series`: `γ_1 … γ_N` and a check that `([g^{1/K}]_k)^K − g` vanishes
/// to order `k + 1` for random `w`.
pub fn series_command(k: u32, order: usize, seed: u64) -> Outcome {
    let table = match gamma_coefficients(k, order) {
        Ok(t) => t,
        Err(e) => return Outcome::error(e, EXIT_PARSE),
    };
    let ring = PolyRing::numbered("z", 3, CoeffDomain::Rationals).expect("valid ring");
    let collections = 4;
    let mut failures = Vec::new();
    for c in 0..collections {
        let w: Vec<Polynomial> = (1..=order as u32)
            .map(|j| Polynomial::random_homogeneous(&ring, j, crate::seed::task_seed(seed, c, j as u64, 0)))
            .collect();
        let g = w.iter().fold(Polynomial::one(&ring), |acc, p| acc + p.clone());
        for kk in 1..=order {
            let root = match truncated_kth_root(&ring, &w, k, kk) {
                Ok(r) => r,
                Err(e) => return Outcome::error(e, EXIT_PARSE),
            };
            let low = root.pow_truncated(k, Some(kk as u32)) - g.truncate_above(kk as u32);
            if !low.is_zero() {
                failures.push(format!("collection {c}, k = {kk}"));
            }
        }
    }
    let report = SeriesReport {
        root_index: k,
        gamma: table.coefficients().iter().map(crate::poly::rational_string).collect(),
        self_check: SeriesSelfCheck { variables: 3, collections: collections as usize, truncation_orders: order, failures },
    };
    let exit = if report.self_check.failures.is_empty() { EXIT_OK } else { EXIT_REFUTED };
    Outcome::ok(to_json(&report), exit)
}

/// Parses `a:b:c` (rationals) into a point over `domain`.
pub fn parse_point(spec: &str, domain: CoeffDomain) -> Result<ProjectivePoint, String> {
    spec.split(':')
        .map(|part| {
            let part = part.trim();
            let (num, den) = part.split_once('/').unwrap_or((part, "1"));
            let num: BigInt = num.trim().parse().map_err(|_| format!("bad coordinate {part:?}"))?;
            let den: BigInt = den.trim().parse().map_err(|_| format!("bad coordinate {part:?}"))?;
            if den == BigInt::from(0) {
                return Err(format!("zero denominator in {part:?}"));
            }
            domain.from_rational(&BigRational::new(num, den)).map_err(|e| e.to_string())
        })
        .collect::<Result<Vec<_>, _>>()
        .map(ProjectivePoint)
}

fn load(text: &str, prime: Option<u64>) -> Result<InstanceFile, Outcome> {
    let mut file = parse_instance(text).map_err(|e| Outcome::error(e, EXIT_PARSE))?;
    if let Some(p) = prime.filter(|&p| Some(p) != file.instance.domain().modulus()) {
        file.instance = file.instance.reduce_mod(p).map_err(|e| Outcome::error(e, EXIT_PARSE))?;
        file.prime = Some(p);
    }
    Ok(file)
}

#[derive(Serialize)]
struct ChartReport {
    point: String,
    pivot: usize,
    branch: String,
    smooth: bool,
    q: Vec<String>,
    w: Vec<String>,
    g_scale: String,
    y_scale: Option<String>,
    case: Option<String>,
    sequence: Vec<String>,
}

/// `localize`: chart data at a given point.
pub fn localize_command(text: &str, point: &str, settings: &RunSettings) -> Outcome {
    let file = match load(text, settings.prime) {
        Ok(f) => f,
        Err(o) => return o,
    };
    let point = match parse_point(point, file.instance.domain()) {
        Ok(p) => p,
        Err(e) => return Outcome::error(e, EXIT_PARSE),
    };
    let chart = match localize(&file.instance, &point) {
        Ok(c) => c,
        Err(e @ CoverError::Unsupported(_)) => return Outcome::error(e, EXIT_INCONCLUSIVE),
        Err(e @ (CoverError::PointLength { .. } | CoverError::ZeroPoint)) => return Outcome::error(e, EXIT_PARSE),
        Err(e) => return Outcome::error(e, EXIT_REFUTED),
    };
    let smooth = smooth_at(&chart);
    let case = regularity_sequence(&chart).ok();
    let report = ChartReport {
        point: chart.point().to_string(),
        pivot: chart.pivot(),
        branch: chart.branch().to_string(),
        smooth,
        q: chart.q().iter().map(Polynomial::to_string).collect(),
        w: chart.w().iter().map(Polynomial::to_string).collect(),
        g_scale: chart.g_scale().to_string(),
        y_scale: chart.y_scale().map(|c| c.to_string()),
        case: case.as_ref().map(|c| c.tag.to_string()),
        sequence: case.map(|c| c.labels).unwrap_or_default(),
    };
    Outcome::ok(to_json(&report), if smooth { EXIT_OK } else { EXIT_REFUTED })
}

fn finish(mut report: ReportDocument, settings: &RunSettings) -> Outcome {
    if settings.no_timings {
        report.strip_timings();
    }
    let exit = report.exit_code();
    Outcome::ok(report.to_json(), exit)
}

/// `certify`: the full pipeline at a given point, or at sampled points.
pub fn certify_command(text: &str, point: Option<&str>, settings: &RunSettings) -> Outcome {
    let file = match load(text, settings.prime) {
        Ok(f) => f,
        Err(o) => return o,
    };
    let family = *file.instance.family();
    let seed = settings.seed.or(file.seed).unwrap_or(0);
    let options = settings.check_options(settings.trials.unwrap_or(DEFAULT_TRIALS));
    let mut input = text.as_bytes().to_vec();
    let (prime, sources) = match point {
        Some(spec) => {
            let p = match parse_point(spec, file.instance.domain()) {
                Ok(p) => p,
                Err(e) => return Outcome::error(e, EXIT_PARSE),
            };
            input.extend_from_slice(format!("\npoint = {spec}").as_bytes());
            (file.prime, vec![PointSource::Given(p)])
        }
        None => {
            let p = file.prime.unwrap_or_else(|| default_prime(family.sheets()));
            if let Err(e) = crate::cover::check_prime(p, family.sheets()) {
                return Outcome::error(e, EXIT_PARSE);
            }
            let off = settings.points_off.unwrap_or(1);
            let on = settings.points_on.unwrap_or(1);
            let mut sources = vec![PointSource::SampleOffBranch; off];
            sources.extend(vec![PointSource::SampleOnBranch; on]);
            (Some(p), sources)
        }
    };
    let records = sources
        .iter()
        .enumerate()
        .map(|(j, s)| {
            let task = TaskId { master_seed: seed, trial: 0, index: j as u64 };
            check_point(&file.instance, s, prime, task, &options)
        })
        .collect();
    let field = match prime {
        Some(p) => format!("F_{p}"),
        None => crate::cover::field_label(file.instance.domain()),
    };
    let settings_echo = Settings {
        prime,
        seed,
        cut_trials: options.cut_trials,
        arcs_per_point: options.arcs_per_point,
        arc_order: options.arc_order,
        gb_budget: options.groebner.step_budget,
    };
    let report = ReportDocument::new("certify", digest(&input), family, field, settings_echo, records);
    finish(report, settings)
}

/// `campaign`: random instances of a family.
pub fn campaign_command(dimension: u32, m: u32, l: u32, k: u32, settings: &RunSettings) -> Outcome {
    let family = match validate_family(dimension, m, l, k) {
        Ok(f) => f,
        Err(e) => return Outcome::error(e, EXIT_PARSE),
    };
    let config = CampaignConfig {
        family,
        trials: settings.trials.unwrap_or(DEFAULT_CAMPAIGN_TRIALS),
        points_off: settings.points_off.unwrap_or(DEFAULT_POINTS_OFF),
        points_on: settings.points_on.unwrap_or(DEFAULT_POINTS_ON),
        prime: settings.prime.unwrap_or_else(|| default_prime(k)),
        seed: settings.seed.unwrap_or(0),
        concurrent: true,
        options: settings.check_options(DEFAULT_TRIALS),
    };
    match run_campaign(&config) {
        Ok(report) => finish(report, settings),
        Err(e) => Outcome::error(e, EXIT_PARSE),
    }
}

/// `parse`: the canonical form of an instance file.
pub fn parse_command(text: &str) -> Outcome {
    match parse_instance(text) {
        Ok(file) => Outcome::ok(render_instance(&file), EXIT_OK),
        Err(e) => Outcome::error(e, EXIT_PARSE),
    }
}
