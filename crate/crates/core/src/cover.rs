//! Fano cyclic covers `V = {f = 0, u^K = g} ⊂ P(1,…,1,l)`.
//!
//! A [`CoverFamily`] fixes the integers `(M, m, l, K)`; a [`CoverInstance`]
//! adds concrete forms `f` (degree `m`) and `g` (degree `Kl`) in
//! `x_0, …, x_{M+1}`. At a point `o ∈ V` lying over `p ∈ Q = {f = 0}`,
//! [`localize`] produces the affine chart data `q_j`, `w_j`, from which the
//! regularity sequences, hypertangent divisors and the truncated branch
//! polynomials `h_k` are built. Formal arcs on `V` through `o` turn the multiplicity claims
//! into order computations on truncated power series.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::poly::modular::{is_kth_power, is_prime, kth_root_mod, next_prime_congruent_one};
use crate::poly::univariate::{sylvester_resultant, UniPoly};
use crate::poly::{Coeff, CoeffDomain, PolyError, PolyRing, Polynomial, RingRef};
use crate::seed::{self, purpose};
use crate::series::{
    arc_lift, compose, lift_system, phi_polynomials, series_kth_root, FormalArc, SeriesError,
    SeriesOrder, TruncatedSeries,
};

/// Lines tried by [`sample_point_on_q`] before giving up.
pub const LINE_BUDGET: usize = 64;
/// Planes tried by [`sample_point_on_branch`] before giving up.
pub const PLANE_BUDGET: usize = 32;
/// Starting point of the default prime search.
pub const DEFAULT_PRIME_START: u64 = 1_000_003;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("m + (K-1)l = {lhs} differs from M + 1 = {rhs}")]
    RelationViolated { lhs: u64, rhs: u64 },
    #[error("M = {0} is below 5")]
    DimensionTooSmall(u32),
    #[error("K = {0} is below 2")]
    TooFewSheets(u32),
    #[error("{0} must be positive")]
    NonPositive(&'static str),
    #[error("{name} must be a nonzero form of degree {expected}")]
    NotHomogeneous { name: String, expected: u32 },
    #[error("the forms must live in {expected} variables of weight 1, found {found}")]
    AmbientMismatch { expected: usize, found: usize },
    #[error("expected {expected} generalized coefficients g_1..g_K, found {found}")]
    GeneralizedLength { expected: usize, found: usize },
    #[error("point has {found} coordinates, expected {expected}")]
    PointLength { expected: usize, found: usize },
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("the point does not lie on Q (f = {0} there)")]
    NotOnQ(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("the chart is {found}, this operation needs {expected}")]
    WrongBranch { expected: Branch, found: Branch },
    #[error("the point is singular ({0})")]
    NotSmooth(String),
    #[error("level {level} outside 1..={max}")]
    LevelOutOfRange { level: u32, max: u32 },
    #[error("{name}_{index} must be homogeneous of degree {index}")]
    CoefficientDegree { name: &'static str, index: usize },
    #[error("p = {p} is not a prime congruent to 1 mod {k}")]
    BadPrime { p: u64, k: u32 },
    #[error("sampling needs coefficients in a prime field")]
    NotPrimeField,
    #[error("no point found within {0} attempts")]
    NoPointFound(usize),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Integer data `(M, m, l, K)` with `m + (K−1)l = M + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CoverFamily {
    /// `M`, the dimension of V.
    dimension: u32,
    /// `m = deg f`.
    base_degree: u32,
    /// `l`, the weight of `u`.
    root_weight: u32,
    /// `K`, the degree of the cover.
    sheets: u32,
}

pub fn validate_family(dimension: u32, m: u32, l: u32, k: u32) -> Result<CoverFamily, CoverError> {
    if m == 0 {
        return Err(CoverError::NonPositive("m"));
    }
    if l == 0 {
        return Err(CoverError::NonPositive("l"));
    }
    if dimension < 5 {
        return Err(CoverError::DimensionTooSmall(dimension));
    }
    if k < 2 {
        return Err(CoverError::TooFewSheets(k));
    }
    let lhs = m as u64 + (k as u64 - 1) * l as u64;
    let rhs = dimension as u64 + 1;
    if lhs != rhs {
        return Err(CoverError::RelationViolated { lhs, rhs });
    }
    Ok(CoverFamily { dimension, base_degree: m, root_weight: l, sheets: k })
}

impl CoverFamily {
    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn base_degree(&self) -> u32 {
        self.base_degree
    }

    pub fn root_weight(&self) -> u32 {
        self.root_weight
    }

    pub fn sheets(&self) -> u32 {
        self.sheets
    }

    /// `deg V = H^M = mK`.
    pub fn degree(&self) -> u32 {
        self.base_degree * self.sheets
    }

    /// `deg g = Kl`.
    pub fn branch_degree(&self) -> u32 {
        self.sheets * self.root_weight
    }

    /// Weights of `x_0, …, x_{M+1}, u`.
    pub fn ambient_weights(&self) -> Vec<u32> {
        let mut w = vec![1; self.dimension as usize + 2];
        w.push(self.root_weight);
        w
    }

    /// Number of affine chart variables, `M + 1`.
    pub fn chart_dimension(&self) -> usize {
        self.dimension as usize + 1
    }

    /// Largest admissible hypertangent level, `min(m−1, Kl−1)`.
    pub fn max_hypertangent_level(&self) -> u32 {
        (self.base_degree - 1).min(self.branch_degree() - 1)
    }

    /// The ring `x_0, …, x_{M+1}` over `domain`.
    pub fn ambient_ring(&self, domain: CoeffDomain) -> RingRef {
        PolyRing::new((0..self.dimension as usize + 2).map(|i| format!("x{i}")), domain)
            .expect("at least one variable")
    }
}

impl fmt::Display for CoverFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(M={}, m={}, l={}, K={})", self.dimension, self.base_degree, self.root_weight, self.sheets)
    }
}

/// The second equation of V.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BranchData {
    /// `u^K = g`.
    Cyclic(Polynomial),
    /// `u^K + g_1 u^{K−1} + … + g_K = 0`, carried as data only.
    Generalized(Vec<Polynomial>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverInstance {
    family: CoverFamily,
    f: Polynomial,
    branch: BranchData,
}

fn check_form(p: &Polynomial, name: &str, degree: u32) -> Result<(), CoverError> {
    if p.is_zero() || !p.is_homogeneous() || p.degree() != Some(degree) {
        return Err(CoverError::NotHomogeneous { name: name.to_string(), expected: degree });
    }
    Ok(())
}

fn check_ambient(family: &CoverFamily, ring: &RingRef) -> Result<(), CoverError> {
    let expected = family.dimension as usize + 2;
    if ring.nvars() != expected || ring.weights().iter().any(|&w| w != 1) {
        return Err(CoverError::AmbientMismatch { expected, found: ring.nvars() });
    }
    Ok(())
}

impl CoverInstance {
    pub fn new(family: CoverFamily, f: Polynomial, g: Polynomial) -> Result<Self, CoverError> {
        check_ambient(&family, f.ring())?;
        if g.ring() != f.ring() {
            return Err(PolyError::RingMismatch.into());
        }
        check_form(&f, "f", family.base_degree)?;
        check_form(&g, "g", family.branch_degree())?;
        Ok(CoverInstance { family, f, branch: BranchData::Cyclic(g) })
    }

    /// Cover `u^K + g_1 u^{K-1} + … + g_K = 0` with `deg g_i = i·l`.
    pub fn generalized(
        family: CoverFamily,
        f: Polynomial,
        coefficients: Vec<Polynomial>,
    ) -> Result<Self, CoverError> {
        check_ambient(&family, f.ring())?;
        check_form(&f, "f", family.base_degree)?;
        if coefficients.len() != family.sheets as usize {
            return Err(CoverError::GeneralizedLength {
                expected: family.sheets as usize,
                found: coefficients.len(),
            });
        }
        for (i, gi) in coefficients.iter().enumerate() {
            if gi.ring() != f.ring() {
                return Err(PolyError::RingMismatch.into());
            }
            let d = (i as u32 + 1) * family.root_weight;
            if !gi.is_zero() {
                check_form(gi, &format!("g{}", i + 1), d)?;
            }
        }
        Ok(CoverInstance { family, f, branch: BranchData::Generalized(coefficients) })
    }

    /// Random forms with every monomial present, pure in
    /// `(family, domain, master, trial)`: `f` uses the task seed with purpose
    /// [`purpose::INSTANCE_F`], `g` the one with [`purpose::INSTANCE_G`].
    pub fn random(family: CoverFamily, domain: CoeffDomain, master: u64, trial: u64) -> Self {
        let ring = family.ambient_ring(domain);
        let f_seed = seed::task_seed(master, trial, 0, purpose::INSTANCE_F);
        let g_seed = seed::task_seed(master, trial, 0, purpose::INSTANCE_G);
        let f = Polynomial::random_homogeneous(&ring, family.base_degree, f_seed);
        let g = Polynomial::random_homogeneous(&ring, family.branch_degree(), g_seed);
        CoverInstance { family, f, branch: BranchData::Cyclic(g) }
    }

    pub fn family(&self) -> &CoverFamily {
        &self.family
    }

    pub fn ring(&self) -> &RingRef {
        self.f.ring()
    }

    pub fn domain(&self) -> CoeffDomain {
        self.f.domain()
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn branch_data(&self) -> &BranchData {
        &self.branch
    }

    /// `g`, absent for generalized data.
    pub fn g(&self) -> Option<&Polynomial> {
        match &self.branch {
            BranchData::Cyclic(g) => Some(g),
            BranchData::Generalized(_) => None,
        }
    }

    pub fn is_generalized(&self) -> bool {
        matches!(self.branch, BranchData::Generalized(_))
    }

    fn cyclic_g(&self) -> Result<&Polynomial, CoverError> {
        self.g().ok_or_else(|| {
            CoverError::Unsupported(
                "generalized covers u^K + g_1 u^(K-1) + ... + g_K carry no regularity conditions".into(),
            )
        })
    }

    /// The same instance with coefficients reduced modulo `p`.
    pub fn reduce_mod(&self, p: u64) -> Result<Self, CoverError> {
        let domain = CoeffDomain::prime_field(p)?;
        let ring = self.ring().with_domain(domain);
        let f = self.f.change_ring(&ring)?;
        let branch = match &self.branch {
            BranchData::Cyclic(g) => BranchData::Cyclic(g.change_ring(&ring)?),
            BranchData::Generalized(gs) => BranchData::Generalized(
                gs.iter().map(|g| g.change_ring(&ring)).collect::<Result<_, _>>()?,
            ),
        };
        let out = CoverInstance { family: self.family, f, branch };
        // reduction may kill a form
        check_form(&out.f, "f", self.family.base_degree)?;
        if let Some(g) = out.g() {
            check_form(g, "g", self.family.branch_degree())?;
        }
        Ok(out)
    }
}

/// Whether the point lies on the ramification divisor `W ∩ Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Branch {
    Off,
    On,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Off => "off-branch",
            Branch::On => "on-branch",
        })
    }
}

/// Projective coordinates `(x_0 : … : x_{M+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectivePoint(pub Vec<Coeff>);

impl ProjectivePoint {
    pub fn coords(&self) -> &[Coeff] {
        &self.0
    }

    /// Scaled so that the first nonzero coordinate is 1.
    pub fn normalized(&self, domain: CoeffDomain) -> Result<Self, CoverError> {
        let lead = self.0.iter().find(|c| !c.is_zero()).ok_or(CoverError::ZeroPoint)?;
        let inv = domain.inv(lead).ok_or(CoverError::ZeroPoint)?;
        Ok(ProjectivePoint(self.0.iter().map(|c| domain.mul(c, &inv)).collect()))
    }

    pub fn from_residues(values: &[u64], p: u64) -> Self {
        ProjectivePoint(values.iter().map(|&v| Coeff::Modular(v % p)).collect())
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Coeff::to_string).collect();
        write!(f, "({})", parts.join(":"))
    }
}

/// Affine data of V at a point: `f ↦ Σ q_j`, `g ↦ Σ w_j` in chart
/// coordinates `z_1, …, z_{M+1}` centred at the point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartLocalization {
    family: CoverFamily,
    point: ProjectivePoint,
    pivot: usize,
    z_ring: RingRef,
    zy_ring: RingRef,
    f_local: Polynomial,
    g_local: Polynomial,
    q: Vec<Polynomial>,
    w: Vec<Polynomial>,
    branch: Branch,
    g_scale: Coeff,
    y_scale: Option<Coeff>,
}

/// Exact `K`-th root of a rational, when it exists.
fn rational_kth_root(q: &BigRational, k: u32) -> Option<BigRational> {
    let root = |n: &BigInt| -> Option<BigInt> {
        if n.is_negative() && k.is_multiple_of(2) {
            return None;
        }
        let r = n.nth_root(k);
        (num_traits::pow(r.clone(), k as usize) == *n).then_some(r)
    };
    Some(BigRational::new(root(q.numer())?, root(q.denom())?))
}

fn kth_root(domain: CoeffDomain, c: &Coeff, k: u32) -> Option<Coeff> {
    match c {
        Coeff::Modular(a) => kth_root_mod(*a, k as u64, domain.modulus()?).map(Coeff::Modular),
        Coeff::Rational(q) => rational_kth_root(q, k).map(Coeff::Rational),
    }
}

/// Pieces of a polynomial by degree, `0..=max`.
fn pieces(p: &Polynomial, max: u32) -> Vec<Polynomial> {
    (0..=max).map(|d| p.homogeneous_component(d)).collect()
}

/// Dehomogenizes at the first nonzero coordinate and moves the point to the
/// origin.
pub fn localize(instance: &CoverInstance, point: &ProjectivePoint) -> Result<ChartLocalization, CoverError> {
    let g = instance.cyclic_g()?;
    let family = *instance.family();
    let domain = instance.domain();
    let nx = family.dimension as usize + 2;
    if point.0.len() != nx {
        return Err(CoverError::PointLength { expected: nx, found: point.0.len() });
    }
    let coords: Vec<Coeff> = point.0.iter().map(|c| domain.convert(c)).collect::<Result<_, _>>()?;
    let normalized = ProjectivePoint(coords).normalized(domain)?;
    let pivot = normalized.0.iter().position(|c| !c.is_zero()).expect("normalized point");

    let n = family.chart_dimension();
    let z_ring = PolyRing::numbered("z", n, domain)?;
    let mut zy_names: Vec<String> = z_ring.variables().to_vec();
    zy_names.push("y".into());
    let zy_ring = PolyRing::new(zy_names, domain)?;

    let mut images = Vec::with_capacity(nx);
    let mut next = 0;
    for (j, c) in normalized.0.iter().enumerate() {
        if j == pivot {
            images.push(Polynomial::one(&z_ring));
        } else {
            images.push(Polynomial::var(&z_ring, next) + Polynomial::constant(&z_ring, c.clone()));
            next += 1;
        }
    }
    let f_local = instance.f().substitute(&images)?;
    let q0 = f_local.constant_term();
    if !q0.is_zero() {
        return Err(CoverError::NotOnQ(q0.to_string()));
    }
    let g_raw = g.substitute(&images)?;
    let w0 = g_raw.constant_term();
    let (branch, g_local, y_scale) = if w0.is_zero() {
        (Branch::On, g_raw, None)
    } else {
        let inv = domain.inv(&w0).expect("nonzero");
        (Branch::Off, g_raw.scale(&inv), kth_root(domain, &w0, family.sheets))
    };
    let q = pieces(&f_local, family.base_degree).into_iter().skip(1).collect();
    let w = pieces(&g_local, family.branch_degree());
    Ok(ChartLocalization {
        family,
        point: normalized,
        pivot,
        z_ring,
        zy_ring,
        f_local,
        g_local,
        q,
        w,
        branch,
        g_scale: w0,
        y_scale,
    })
}

impl ChartLocalization {
    pub fn family(&self) -> &CoverFamily {
        &self.family
    }

    /// The point with its pivot coordinate scaled to 1.
    pub fn point(&self) -> &ProjectivePoint {
        &self.point
    }

    pub fn pivot(&self) -> usize {
        self.pivot
    }

    /// Chart ring `z_1, …, z_{M+1}`.
    pub fn z_ring(&self) -> &RingRef {
        &self.z_ring
    }

    /// Chart ring with the fibre coordinate `y` appended last.
    pub fn zy_ring(&self) -> &RingRef {
        &self.zy_ring
    }

    pub fn f_local(&self) -> &Polynomial {
        &self.f_local
    }

    /// Localized `g`, divided by `w_0` off the branch divisor.
    pub fn g_local(&self) -> &Polynomial {
        &self.g_local
    }

    /// `q_1, …, q_m` (index `j − 1` holds `q_j`).
    pub fn q(&self) -> &[Polynomial] {
        &self.q
    }

    pub fn q_j(&self, j: usize) -> &Polynomial {
        &self.q[j - 1]
    }

    /// `w_0, …, w_{Kl}` (index `j` holds `w_j`).
    pub fn w(&self) -> &[Polynomial] {
        &self.w
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    /// Value of the dehomogenized `g` at the point before normalization.
    pub fn g_scale(&self) -> &Coeff {
        &self.g_scale
    }

    /// A `K`-th root `η` of [`Self::g_scale`] when it exists in the field;
    /// the chart coordinate is then `y = u / η`.
    pub fn y_scale(&self) -> Option<&Coeff> {
        self.y_scale.as_ref()
    }

    fn lift(&self, p: &Polynomial) -> Polynomial {
        p.extend_to(&self.zy_ring).expect("z ring embeds into zy ring")
    }

    fn y(&self) -> Polynomial {
        Polynomial::var(&self.zy_ring, self.z_ring.nvars())
    }

    fn require(&self, expected: Branch) -> Result<(), CoverError> {
        if self.branch != expected {
            return Err(CoverError::WrongBranch { expected, found: self.branch });
        }
        Ok(())
    }
}

fn linear_coefficients(p: &Polynomial) -> Vec<Coeff> {
    let n = p.ring().nvars();
    (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            p.coefficient(&e)
        })
        .collect()
}

/// First pair of columns on which two linear forms have a nonzero 2×2 minor.
fn independent_pair(a: &[Coeff], b: &[Coeff], domain: CoeffDomain) -> Option<(usize, usize)> {
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let det = domain.sub(&domain.mul(&a[i], &b[j]), &domain.mul(&a[j], &b[i]));
            if !det.is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

/// Pointwise smoothness: `Q` off the branch divisor, `W ∩ Q` on it.
pub fn smooth_at(chart: &ChartLocalization) -> bool {
    smoothness_defect(chart).is_none()
}

fn smoothness_defect(chart: &ChartLocalization) -> Option<String> {
    if chart.q[0].is_zero() {
        return Some("q_1 = 0, Q is singular".into());
    }
    if chart.branch == Branch::On {
        let a = linear_coefficients(&chart.q[0]);
        let b = linear_coefficients(&chart.w[1]);
        if independent_pair(&a, &b, chart.z_ring.domain()).is_none() {
            return Some("q_1 and w_1 are linearly dependent, W and Q are tangent".into());
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CaseTag {
    /// Off the branch divisor with `m ≤ Kl`.
    R1a,
    /// Off the branch divisor with `m ≥ Kl + 1`.
    R1b,
    /// On the branch divisor.
    R2,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The sequence that must be regular at the origin, with printable labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityCase {
    pub tag: CaseTag,
    pub sequence: Vec<Polynomial>,
    pub labels: Vec<String>,
}

/// `Φ_1, …, Φ_n` of the normalized `g` in the chart.
pub fn chart_phis(chart: &ChartLocalization, n: usize) -> Result<Vec<Polynomial>, CoverError> {
    chart.require(Branch::Off)?;
    Ok(phi_polynomials(&chart.z_ring, &chart.w[1..], chart.family.sheets, n)?)
}

pub fn regularity_sequence(chart: &ChartLocalization) -> Result<RegularityCase, CoverError> {
    if let Some(why) = smoothness_defect(chart) {
        return Err(CoverError::NotSmooth(why));
    }
    let fam = chart.family;
    let (m, l, kl) = (fam.base_degree as usize, fam.root_weight as usize, fam.branch_degree() as usize);
    let mut sequence = Vec::new();
    let mut labels = Vec::new();
    let tag = match chart.branch {
        Branch::On => {
            for j in 1..=m {
                sequence.push(chart.q[j - 1].clone());
                labels.push(format!("q_{j}"));
            }
            for j in 1..=fam.sheets as usize {
                sequence.push(chart.w[j].clone());
                labels.push(format!("w_{j}"));
            }
            CaseTag::R2
        }
        Branch::Off => {
            let (tag, q_count, phi_top) = if m <= kl { (CaseTag::R1a, m, kl - 1) } else { (CaseTag::R1b, m - 1, kl) };
            for j in 1..=q_count {
                sequence.push(chart.q[j - 1].clone());
                labels.push(format!("q_{j}"));
            }
            let phis = chart_phis(chart, phi_top)?;
            for i in l + 1..=phi_top {
                sequence.push(phis[i - 1].clone());
                labels.push(format!("Phi_{i}"));
            }
            tag
        }
    };
    let expected = match tag {
        CaseTag::R1a | CaseTag::R1b => fam.dimension as usize,
        CaseTag::R2 => m + fam.sheets as usize,
    };
    assert_eq!(sequence.len(), expected, "sequence length for {tag}");
    Ok(RegularityCase { tag, sequence, labels })
}

/// A divisor of the `i`-th hypertangent system, written in the chart as
/// `A(z) + B(z)·y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypertangentMember {
    pub level: u32,
    /// `s_0, …, s_{i−1}` with `deg s_a = a`.
    pub s: Vec<Polynomial>,
    /// `s*_0, …, s*_{i−K}`; empty when `i < K`.
    pub s_star: Vec<Polynomial>,
    /// `Σ_j s_{i−j} f_j − Σ_k s*_{i−k} [g^{1/K}]_k`.
    pub a_part: Polynomial,
    /// `Σ_k s*_{i−k}`.
    pub b_part: Polynomial,
    /// `A + B·y` in the ring with `y`.
    pub assembled: Polynomial,
}

impl HypertangentMember {
    /// Assembles the member from explicit coefficient forms.
    pub fn assemble(
        chart: &ChartLocalization,
        level: u32,
        s: Vec<Polynomial>,
        s_star: Vec<Polynomial>,
    ) -> Result<Self, CoverError> {
        chart.require(Branch::Off)?;
        let fam = chart.family;
        let max = fam.max_hypertangent_level();
        if level == 0 || level > max {
            return Err(CoverError::LevelOutOfRange { level, max });
        }
        let i = level as usize;
        let k = fam.sheets as usize;
        let star_len = (i + 1).saturating_sub(k);
        if s.len() != i {
            return Err(PolyError::LengthMismatch { expected: i, got: s.len() }.into());
        }
        if s_star.len() != star_len {
            return Err(PolyError::LengthMismatch { expected: star_len, got: s_star.len() }.into());
        }
        for (name, list) in [("s", &s), ("s*", &s_star)] {
            for (a, p) in list.iter().enumerate() {
                if p.ring() != &chart.z_ring {
                    return Err(PolyError::RingMismatch.into());
                }
                if !p.is_zero() && !(p.is_homogeneous() && p.degree() == Some(a as u32)) {
                    return Err(CoverError::CoefficientDegree { name, index: a });
                }
            }
        }
        let ring = &chart.z_ring;
        let mut a_part = Polynomial::zero(ring);
        let mut f_j = Polynomial::zero(ring);
        for j in 1..=i {
            f_j = f_j + chart.q[j - 1].clone();
            a_part = a_part + &s[i - j] * &f_j;
        }
        let mut b_part = Polynomial::zero(ring);
        if i >= k {
            let phis = chart_phis(chart, i)?;
            let mut root = Polynomial::one(ring);
            for (d, phi) in phis.iter().enumerate() {
                root = root + phi.clone();
                let kk = d + 1;
                if kk >= k {
                    let coeff = &s_star[i - kk];
                    a_part = a_part - coeff * &root;
                    b_part = b_part + coeff.clone();
                }
            }
        }
        let assembled = chart.lift(&a_part) + &chart.lift(&b_part) * &chart.y();
        Ok(HypertangentMember { level, s, s_star, a_part, b_part, assembled })
    }
}

/// A random member of `Λ_i`; the coefficient forms come from
/// [`Polynomial::random_homogeneous`] and are pure in `seed`.
pub fn hypertangent_member(chart: &ChartLocalization, level: u32, seed: u64) -> Result<HypertangentMember, CoverError> {
    let k = chart.family.sheets;
    let s = (0..level)
        .map(|a| {
            Polynomial::random_homogeneous(
                &chart.z_ring,
                a,
                seed::task_seed(seed, level as u64, a as u64, purpose::HYPERTANGENT),
            )
        })
        .collect();
    let s_star = (0..(level + 1).saturating_sub(k))
        .map(|a| {
            Polynomial::random_homogeneous(
                &chart.z_ring,
                a,
                seed::task_seed(seed, level as u64, 1_000 + a as u64, purpose::HYPERTANGENT),
            )
        })
        .collect();
    HypertangentMember::assemble(chart, level, s, s_star)
}

fn random_series(domain: CoeffDomain, order: usize, rng: &mut ChaCha8Rng, first_nonzero: bool) -> TruncatedSeries {
    let mut coeffs = vec![domain.zero(); order + 1];
    for (i, c) in coeffs.iter_mut().enumerate().skip(1) {
        *c = if i == 1 && first_nonzero { domain.random_nonzero(rng, 9) } else { domain.random(rng, 9) };
    }
    TruncatedSeries::from_coeffs(domain, coeffs, order)
}

fn arc_equations(chart: &ChartLocalization) -> Vec<(String, Polynomial)> {
    let k = chart.family.sheets;
    vec![
        ("f".to_string(), chart.lift(&chart.f_local)),
        ("y^K - g".to_string(), chart.y().pow(k) - chart.lift(&chart.g_local)),
    ]
}

/// A formal arc on V through the point, certified to `order`.
///
/// Off the branch divisor the free chart coordinates are random series, one
/// coordinate with a nonzero `q_1` coefficient is solved from `f = 0`, and
/// `y = (g / w_0)^{1/K}` with `y(0) = 1`. On the branch divisor `y` is a
/// random series of order one, and two coordinates are solved from `f = 0`
/// and `g = y^K` through the invertible minor of `(q_1, w_1)`.
pub fn formal_arc(chart: &ChartLocalization, order: usize, seed: u64) -> Result<FormalArc, CoverError> {
    if let Some(why) = smoothness_defect(chart) {
        return Err(CoverError::NotSmooth(why));
    }
    let domain = chart.z_ring.domain();
    let n = chart.z_ring.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q1 = linear_coefficients(&chart.q[0]);
    let mut components: Vec<TruncatedSeries>;
    match chart.branch {
        Branch::Off => {
            let solved = q1.iter().position(|c| !c.is_zero()).expect("smooth chart");
            let given: Vec<Option<TruncatedSeries>> = (0..n)
                .map(|i| (i != solved).then(|| random_series(domain, order, &mut rng, false)))
                .collect();
            let z_solved = arc_lift(&chart.f_local, solved, &given, order)?;
            components = given
                .into_iter()
                .enumerate()
                .map(|(i, s)| if i == solved { z_solved.clone() } else { s.expect("free") })
                .collect();
            let g_on_arc = compose(&chart.g_local, &components)?;
            components.push(series_kth_root(&g_on_arc, chart.family.sheets)?);
        }
        Branch::On => {
            let w1 = linear_coefficients(&chart.w[1]);
            let (a, b) = independent_pair(&q1, &w1, domain).expect("smooth chart");
            let mut given: Vec<Option<TruncatedSeries>> = (0..n)
                .map(|i| (i != a && i != b).then(|| random_series(domain, order, &mut rng, false)))
                .collect();
            given.push(Some(random_series(domain, order, &mut rng, true)));
            let equations: Vec<Polynomial> = arc_equations(chart).into_iter().map(|(_, e)| e).collect();
            let solved = lift_system(&equations, &[a, b], &given, order)?;
            components = given
                .into_iter()
                .enumerate()
                .map(|(i, s)| match i {
                    _ if i == a => solved[0].clone(),
                    _ if i == b => solved[1].clone(),
                    _ => s.expect("free"),
                })
                .collect();
        }
    }
    Ok(FormalArc::certify(components, true, &arc_equations(chart))?)
}

/// `count` arcs with seeds derived from `seed`.
pub fn formal_arcs(chart: &ChartLocalization, count: usize, order: usize, seed: u64) -> Result<Vec<FormalArc>, CoverError> {
    (0..count)
        .map(|i| formal_arc(chart, order, seed::task_seed(seed, 0, i as u64, purpose::ARCS)))
        .collect()
}

/// Default truncation order for checking claims up to level `max_level`.
pub fn default_arc_order(max_level: u32) -> usize {
    2 * max_level as usize + 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ArcStatus {
    Pass,
    Fail,
    /// The function vanished through the truncation order, which is below
    /// the required order.
    Unresolved,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArcOrder {
    pub arc: usize,
    pub order: SeriesOrder,
    pub status: ArcStatus,
}

/// Orders of one function along a family of arcs against a required bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArcCheckReport {
    pub function: String,
    pub required: u32,
    pub arcs: Vec<ArcOrder>,
}

impl ArcCheckReport {
    pub fn failures(&self) -> usize {
        self.arcs.iter().filter(|a| a.status == ArcStatus::Fail).count()
    }

    pub fn unresolved(&self) -> usize {
        self.arcs.iter().filter(|a| a.status == ArcStatus::Unresolved).count()
    }

    pub fn passes(&self) -> usize {
        self.arcs.iter().filter(|a| a.status == ArcStatus::Pass).count()
    }

    pub fn all_pass(&self) -> bool {
        self.passes() == self.arcs.len()
    }
}

fn check_orders(function: String, d: &Polynomial, required: u32, arcs: &[FormalArc]) -> Result<ArcCheckReport, CoverError> {
    let mut out = Vec::with_capacity(arcs.len());
    for (idx, arc) in arcs.iter().enumerate() {
        if arc.components().len() != d.ring().nvars() || arc.y().is_none() {
            return Err(PolyError::LengthMismatch { expected: d.ring().nvars(), got: arc.components().len() }.into());
        }
        let order = compose(d, arc.components()).map(|s| if d.is_zero() { SeriesOrder::Infinite } else { s.order() })?;
        let status = match order {
            SeriesOrder::Infinite => ArcStatus::Pass,
            SeriesOrder::Exact(o) => {
                if o >= required {
                    ArcStatus::Pass
                } else {
                    ArcStatus::Fail
                }
            }
            SeriesOrder::AtLeast(b) => {
                if b >= required {
                    ArcStatus::Pass
                } else {
                    ArcStatus::Unresolved
                }
            }
        };
        out.push(ArcOrder { arc: idx, order, status });
    }
    Ok(ArcCheckReport { function, required, arcs: out })
}

/// `mult_o D ≥ i + 1` tested along arcs: every arc must give order `≥ i + 1`.
pub fn hypertangent_multiplicity_check(
    chart: &ChartLocalization,
    member: &HypertangentMember,
    arcs: &[FormalArc],
) -> Result<ArcCheckReport, CoverError> {
    chart.require(Branch::Off)?;
    if member.assembled.ring() != &chart.zy_ring {
        return Err(PolyError::RingMismatch.into());
    }
    check_orders(format!("Lambda_{} member", member.level), &member.assembled, member.level + 1, arcs)
}

/// `y^K − (w_{k+1} + … + w_{Kl})`, which equals `h_k = w_1 + … + w_k` on V.
pub fn lemma2_function(chart: &ChartLocalization, k: u32) -> Result<Polynomial, CoverError> {
    chart.require(Branch::On)?;
    let max = chart.family.sheets - 1;
    if k == 0 || k > max {
        return Err(CoverError::LevelOutOfRange { level: k, max });
    }
    let tail: Polynomial = chart.w[k as usize + 1..].iter().cloned().sum::<Polynomial>();
    let tail = if tail.is_zero() { Polynomial::zero(&chart.z_ring) } else { tail };
    Ok(chart.y().pow(chart.family.sheets) - chart.lift(&tail))
}

/// Checks that the pulled-back `h_k` vanishes to order `≥ k + 1` at the point.
pub fn lemma2_check(chart: &ChartLocalization, k: u32, arcs: &[FormalArc]) -> Result<ArcCheckReport, CoverError> {
    let d = lemma2_function(chart, k)?;
    check_orders(format!("h_{k}"), &d, k + 1, arcs)
}

/// The default working prime for `K` sheets: the first prime `≥ 1 000 003`
/// that is `≡ 1 (mod K)`.
pub fn default_prime(k: u32) -> u64 {
    next_prime_congruent_one(DEFAULT_PRIME_START, k as u64)
}

pub fn check_prime(p: u64, k: u32) -> Result<(), CoverError> {
    if !is_prime(p) || p < 3 || p % k as u64 != 1 {
        return Err(CoverError::BadPrime { p, k });
    }
    Ok(())
}

fn residue(c: &Coeff) -> u64 {
    c.as_residue().expect("prime field value")
}

fn eval_mod(f: &Polynomial, x: &[u64]) -> u64 {
    let point: Vec<Coeff> = x.iter().map(|&v| Coeff::Modular(v)).collect();
    residue(&f.eval(&point).expect("matching length"))
}

fn affine_combination(coeffs: &[(u64, &[u64])], p: u64) -> Vec<u64> {
    let n = coeffs[0].1.len();
    (0..n)
        .map(|i| coeffs.iter().fold(0u64, |acc, (a, v)| ((acc as u128 + *a as u128 * v[i] as u128) % p as u128) as u64))
        .collect()
}

/// `F_p`-roots `t` of `f(base + t·dir)`, ascending. A line contained in the
/// hypersurface reports only `t = 0`.
pub fn line_roots(f: &Polynomial, base: &[u64], dir: &[u64], rng: &mut ChaCha8Rng) -> Result<Vec<u64>, CoverError> {
    let p = f.domain().modulus().ok_or(CoverError::NotPrimeField)?;
    let deg = f.degree().unwrap_or(0) as u64;
    let at = |t: u64| eval_mod(f, &affine_combination(&[(1, base), (t, dir)], p));
    if p <= deg + 1 || p < 64 {
        let roots: Vec<u64> = (0..p).filter(|&t| at(t) == 0).collect();
        return Ok(if roots.len() as u64 == p { vec![0] } else { roots });
    }
    let xs: Vec<u64> = (0..=deg).collect();
    let ys: Vec<u64> = xs.iter().map(|&t| at(t)).collect();
    let uni = UniPoly::interpolate(&xs, &ys, p);
    if uni.is_zero() {
        return Ok(vec![0]);
    }
    Ok(uni.roots(rng))
}

fn random_vector(n: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<u64> {
    use rand::Rng;
    (0..n).map(|_| rng.gen_range(0..p)).collect()
}

/// A point of `Q` over `F_p` found on random lines. With `off_branch`, the
/// point must also satisfy `g ≠ 0` with `g` a `K`-th power, so that V has an
/// `F_p`-point over it off the ramification divisor.
pub fn sample_point_on_q(instance: &CoverInstance, seed: u64, p: u64, off_branch: bool) -> Result<ProjectivePoint, CoverError> {
    let k = instance.family().sheets;
    check_prime(p, k)?;
    let inst = reduce_if_needed(instance, p)?;
    let g = inst.cyclic_g()?.clone();
    let f = inst.f();
    let nx = inst.ring().nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..LINE_BUDGET {
        let base = random_vector(nx, p, &mut rng);
        let dir = random_vector(nx, p, &mut rng);
        for t in line_roots(f, &base, &dir, &mut rng)? {
            let x = affine_combination(&[(1, &base), (t, &dir)], p);
            if x.iter().all(|&v| v == 0) {
                continue;
            }
            if off_branch {
                let gv = eval_mod(&g, &x);
                if gv == 0 || !is_kth_power(gv, k as u64, p) {
                    continue;
                }
            }
            return ProjectivePoint::from_residues(&x, p).normalized(inst.domain());
        }
    }
    Err(CoverError::NoPointFound(LINE_BUDGET))
}

fn reduce_if_needed(instance: &CoverInstance, p: u64) -> Result<CoverInstance, CoverError> {
    match instance.domain() {
        CoeffDomain::PrimeField(q) if q == p => Ok(instance.clone()),
        _ => instance.reduce_mod(p),
    }
}

/// Coefficients in `b` of `F(a0·A + b·B + C)`, formal degree `deg`.
fn fibre_poly(f: &Polynomial, deg: u64, a0: u64, plane: &[Vec<u64>; 3], p: u64) -> UniPoly {
    let xs: Vec<u64> = (0..=deg).collect();
    let ys: Vec<u64> = xs
        .iter()
        .map(|&b| eval_mod(f, &affine_combination(&[(a0, &plane[0]), (b, &plane[1]), (1, &plane[2])], p)))
        .collect();
    UniPoly::interpolate(&xs, &ys, p)
}

/// A point of `W ∩ Q = {f = g = 0}` over `F_p`, found on random affine
/// planes `a·A + b·B + C` by eliminating `b` with a resultant.
pub fn sample_point_on_branch(instance: &CoverInstance, seed: u64, p: u64) -> Result<ProjectivePoint, CoverError> {
    let k = instance.family().sheets;
    check_prime(p, k)?;
    let inst = reduce_if_needed(instance, p)?;
    let g = inst.cyclic_g()?.clone();
    let f = inst.f().clone();
    let (df, dg) = (inst.family().base_degree as u64, inst.family().branch_degree() as u64);
    let nx = inst.ring().nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let both_vanish = |x: &[u64]| x.iter().any(|&v| v != 0) && eval_mod(&f, x) == 0 && eval_mod(&g, x) == 0;
    for _ in 0..PLANE_BUDGET {
        let plane = [random_vector(nx, p, &mut rng), random_vector(nx, p, &mut rng), random_vector(nx, p, &mut rng)];
        let point_at = |a: u64, b: u64| affine_combination(&[(a, &plane[0]), (b, &plane[1]), (1, &plane[2])], p);
        if p <= 127 || p <= df * dg + 1 {
            for a in 0..p {
                for b in 0..p {
                    let x = point_at(a, b);
                    if both_vanish(&x) {
                        return ProjectivePoint::from_residues(&x, p).normalized(inst.domain());
                    }
                }
            }
            continue;
        }
        let nodes: Vec<u64> = (0..=df * dg).collect();
        let values: Vec<u64> = nodes
            .iter()
            .map(|&a| {
                let fa = fibre_poly(&f, df, a, &plane, p);
                let ga = fibre_poly(&g, dg, a, &plane, p);
                sylvester_resultant(&fa.coeffs, df as usize, &ga.coeffs, dg as usize, p)
            })
            .collect();
        let res = UniPoly::interpolate(&nodes, &values, p);
        if res.is_zero() {
            // the plane is not generic
            continue;
        }
        for a in res.roots(&mut rng) {
            let fa = fibre_poly(&f, df, a, &plane, p);
            let ga = fibre_poly(&g, dg, a, &plane, p);
            let common = fa.gcd(&ga);
            let candidates = if common.is_zero() { vec![0] } else { common.roots(&mut rng) };
            for b in candidates {
                let x = point_at(a, b);
                if both_vanish(&x) {
                    return ProjectivePoint::from_residues(&x, p).normalized(inst.domain());
                }
            }
        }
    }
    Err(CoverError::NoPointFound(PLANE_BUDGET))
}

/// `Q` or `F_p`, as printed in reports.
pub fn field_label(domain: CoeffDomain) -> String {
    match domain {
        CoeffDomain::Rationals => "Q".into(),
        CoeffDomain::PrimeField(p) => format!("F_{p}"),
    }
}
