//! Gröbner bases, ideal dimension, saturation at the origin, and the local
//! regular-sequence certifier.
//!
//! A sequence `f_1, …, f_r` of functions vanishing at the origin of `k^n` is
//! regular in the local ring there exactly when every prefix ideal `I_i`
//! has local dimension `n − i`. The certifier restricts `I_i` to a random
//! `i`-dimensional linear subspace through the origin and checks that the
//! origin is an isolated point of the restriction. Isolation proves local
//! dimension `≤ n − i`; Krull's bound gives `≥`. So a YES is a proof, and a NO
//! after `T` independent random subspaces is a Monte-Carlo refutation.
//!
//! Certificates computed over `F_p` transfer to the rational instance the
//! residues came from: fiber dimension can only jump up under
//! specialization, so local dimension `n − i` mod `p` bounds the
//! characteristic-zero local dimension from above.

mod groebner;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::poly::{CoeffDomain, PolyError, PolyRing, Polynomial, RingRef};
use crate::seed;

use groebner::{Engine, RawPoly, RawTerm};
pub use groebner::MonomialOrder;

pub const DEFAULT_STEP_BUDGET: usize = 200_000;
pub const DEFAULT_TRIALS: usize = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RegseqError {
    #[error("Gröbner step budget exceeded ({budget} pair reductions)")]
    BudgetExceeded { budget: usize },
    #[error("generators must share one ring")]
    RingMismatch,
    #[error("sequence entry {index} does not vanish at the origin")]
    NotVanishingAtOrigin { index: usize },
    #[error("sequence of length {len} is longer than the number of variables {nvars}")]
    SequenceTooLong { len: usize, nvars: usize },
    #[error("the sequence lives in {actual} variables, expected {expected}")]
    VariableCount { expected: usize, actual: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerOptions {
    /// Maximum number of S-pair reductions per basis computation.
    pub step_budget: usize,
}

impl Default for GroebnerOptions {
    fn default() -> Self {
        GroebnerOptions { step_budget: DEFAULT_STEP_BUDGET }
    }
}

/// An ideal given by generators in one ring. Zero generators are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation {
    ring: RingRef,
    generators: Vec<Polynomial>,
}

impl IdealPresentation {
    pub fn new(ring: &RingRef, generators: Vec<Polynomial>) -> Result<Self, RegseqError> {
        if generators.iter().any(|g| g.ring() != ring) {
            return Err(RegseqError::RingMismatch);
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(IdealPresentation { ring: ring.clone(), generators })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Whether some generator is nonzero at the origin, i.e. the ideal is
    /// not contained in the maximal ideal of the origin.
    pub fn has_generator_nonzero_at_origin(&self) -> bool {
        self.generators.iter().any(|g| !g.constant_term().is_zero())
    }
}

/// Reduced Gröbner basis under graded reverse lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: RingRef,
    basis: Vec<Polynomial>,
    order: MonomialOrder,
}

fn engine(domain: CoeffDomain, order: MonomialOrder, opts: &GroebnerOptions) -> Engine {
    Engine { domain, order, budget: opts.step_budget }
}

/// Converts to raw form, prepending `front` zero exponents.
fn to_raw(eng: &Engine, p: &Polynomial, front: usize) -> RawPoly {
    let terms: Vec<RawTerm> = p
        .terms()
        .iter()
        .map(|(e, c)| {
            let mut v = vec![0; front];
            v.extend_from_slice(e);
            (v, c.clone())
        })
        .collect();
    eng.sort(terms)
}

fn from_raw(ring: &RingRef, p: &RawPoly, front: usize) -> Polynomial {
    Polynomial::from_terms(ring, p.terms.iter().map(|(e, c)| (e[front..].to_vec(), c.clone())))
}

fn run(
    ring: &RingRef,
    input: Vec<RawPoly>,
    order: MonomialOrder,
    opts: &GroebnerOptions,
) -> Result<Vec<RawPoly>, RegseqError> {
    engine(ring.domain(), order, opts)
        .groebner(input)
        .map_err(|e| RegseqError::BudgetExceeded { budget: e.budget })
}

pub fn groebner_basis(
    ideal: &IdealPresentation,
    opts: &GroebnerOptions,
) -> Result<GroebnerBasis, RegseqError> {
    let order = MonomialOrder::GrevLex;
    let eng = engine(ideal.ring.domain(), order, opts);
    let input = ideal.generators.iter().map(|g| to_raw(&eng, g, 0)).collect();
    let raw = run(&ideal.ring, input, order, opts)?;
    let basis = raw.iter().map(|p| from_raw(&ideal.ring, p, 0)).collect();
    Ok(GroebnerBasis { ring: ideal.ring.clone(), basis, order })
}

impl GroebnerBasis {
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn is_unit(&self) -> bool {
        self.basis.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    fn raw(&self, eng: &Engine) -> Vec<RawPoly> {
        self.basis.iter().map(|g| to_raw(eng, g, 0)).collect()
    }

    /// Leading exponent vectors in the basis order.
    pub fn leading_monomials(&self) -> Vec<Vec<u32>> {
        let eng = engine(self.ring.domain(), self.order, &GroebnerOptions::default());
        self.raw(&eng).iter().map(|p| p.lm().to_vec()).collect()
    }

    /// Remainder of `p` on division by the basis.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial, RegseqError> {
        if p.ring() != &self.ring {
            return Err(RegseqError::RingMismatch);
        }
        let eng = engine(self.ring.domain(), self.order, &GroebnerOptions::default());
        let raw = self.raw(&eng);
        let refs: Vec<&RawPoly> = raw.iter().collect();
        Ok(from_raw(&self.ring, &eng.reduce(&to_raw(&eng, p, 0), &refs), 0))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool, RegseqError> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn verify(&self) -> bool {
        let eng = engine(self.ring.domain(), self.order, &GroebnerOptions::default());
        eng.is_groebner(&self.raw(&eng))
    }

    /// Krull dimension of the affine zero set; −1 for the unit ideal.
    pub fn dimension(&self) -> i64 {
        if self.is_unit() {
            return -1;
        }
        dimension_from_leading_monomials(&self.leading_monomials(), self.ring.nvars())
    }

    pub fn into_ideal(self) -> IdealPresentation {
        IdealPresentation { ring: self.ring, generators: self.basis }
    }
}

/// Largest set of variables containing the support of no leading monomial.
pub fn dimension_from_leading_monomials(lms: &[Vec<u32>], nvars: usize) -> i64 {
    assert!(nvars < 32, "subset enumeration limited to 31 variables");
    if lms.iter().any(|m| m.iter().all(|&e| e == 0)) {
        return -1;
    }
    let supports: Vec<u32> = lms
        .iter()
        .map(|m| m.iter().enumerate().filter(|(_, &e)| e > 0).fold(0u32, |acc, (i, _)| acc | 1 << i))
        .collect();
    (0u32..1 << nvars)
        .filter(|&s| supports.iter().all(|&sup| sup & !s != 0))
        .map(|s| s.count_ones() as i64)
        .max()
        .unwrap_or(0)
}

pub fn ideal_dimension(ideal: &IdealPresentation, opts: &GroebnerOptions) -> Result<i64, RegseqError> {
    Ok(groebner_basis(ideal, opts)?.dimension())
}

fn elimination_result(
    ideal_ring: &RingRef,
    input: Vec<RawPoly>,
    opts: &GroebnerOptions,
) -> Result<IdealPresentation, RegseqError> {
    let order = MonomialOrder::Elimination { block: 1 };
    let raw = run(ideal_ring, input, order, opts)?;
    let generators = raw
        .iter()
        .filter(|p| p.terms.iter().all(|(e, _)| e[0] == 0))
        .map(|p| from_raw(ideal_ring, p, 1))
        .collect();
    IdealPresentation::new(ideal_ring, generators)
}

/// `(I : z_var^∞)` by eliminating `t` from `I + (t·z_var − 1)`.
pub fn saturate_by_variable(
    ideal: &IdealPresentation,
    var: usize,
    opts: &GroebnerOptions,
) -> Result<IdealPresentation, RegseqError> {
    let domain = ideal.ring.domain();
    let eng = engine(domain, MonomialOrder::Elimination { block: 1 }, opts);
    let n = ideal.ring.nvars();
    let mut input: Vec<RawPoly> = ideal.generators.iter().map(|g| to_raw(&eng, g, 1)).collect();
    let mut tz = vec![0; n + 1];
    tz[0] = 1;
    tz[var + 1] = 1;
    input.push(eng.sort(vec![(tz, domain.one()), (vec![0; n + 1], domain.from_i64(-1))]));
    elimination_result(&ideal.ring, input, opts)
}

/// `I ∩ J` by eliminating `t` from `t·I + (1 − t)·J`.
pub fn intersect(
    a: &IdealPresentation,
    b: &IdealPresentation,
    opts: &GroebnerOptions,
) -> Result<IdealPresentation, RegseqError> {
    if a.ring != b.ring {
        return Err(RegseqError::RingMismatch);
    }
    let domain = a.ring.domain();
    let eng = engine(domain, MonomialOrder::Elimination { block: 1 }, opts);
    let mut input = Vec::new();
    for g in &a.generators {
        let terms = to_raw(&eng, g, 1).terms.into_iter().map(|(mut e, c)| {
            e[0] += 1;
            (e, c)
        });
        input.push(eng.sort(terms.collect()));
    }
    for g in &b.generators {
        let raw = to_raw(&eng, g, 1);
        let mut terms = raw.terms.clone();
        for (e, c) in raw.terms {
            let mut e = e;
            e[0] += 1;
            terms.push((e, domain.neg(&c)));
        }
        input.push(eng.sort(terms));
    }
    elimination_result(&a.ring, input, opts)
}

/// `(J : 𝔪^∞)` for the maximal ideal `𝔪` of the origin, computed as
/// `∩_j (J : z_j^∞)`.
pub fn saturate_at_origin(
    ideal: &IdealPresentation,
    opts: &GroebnerOptions,
) -> Result<IdealPresentation, RegseqError> {
    let mut acc: Option<IdealPresentation> = None;
    for var in 0..ideal.ring.nvars() {
        let s = saturate_by_variable(ideal, var, opts)?;
        acc = Some(match acc {
            None => s,
            Some(prev) => intersect(&prev, &s, opts)?,
        });
    }
    let sat = acc.expect("rings have at least one variable");
    Ok(groebner_basis(&sat, opts)?.into_ideal())
}

/// How isolation of the origin was decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IsolationMethod {
    /// The whole zero set is finite.
    ZeroDimensional,
    /// Every coordinate saturation contains a function nonzero at the origin.
    Saturation,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IsolationCheck {
    pub isolated: bool,
    /// Global dimension of the zero set.
    pub dimension: i64,
    pub method: IsolationMethod,
}

/// Decides whether the origin is an isolated point of `V(J)`; all
/// generators must vanish at the origin.
///
/// `(J : 𝔪^∞) ⊄ 𝔪` iff `(J : z_j^∞) ⊄ 𝔪` for every `j` (𝔪 is prime), so the
/// intersection is never formed here.
pub fn origin_isolated(
    ideal: &IdealPresentation,
    opts: &GroebnerOptions,
) -> Result<IsolationCheck, RegseqError> {
    if let Some(index) = ideal.generators.iter().position(|g| !g.constant_term().is_zero()) {
        return Err(RegseqError::NotVanishingAtOrigin { index });
    }
    let gb = groebner_basis(ideal, opts)?;
    let dimension = gb.dimension();
    if dimension <= 0 {
        return Ok(IsolationCheck { isolated: true, dimension, method: IsolationMethod::ZeroDimensional });
    }
    let reduced = gb.into_ideal();
    for var in 0..reduced.ring.nvars() {
        let sat = saturate_by_variable(&reduced, var, opts)?;
        if !sat.has_generator_nonzero_at_origin() {
            return Ok(IsolationCheck { isolated: false, dimension, method: IsolationMethod::Saturation });
        }
    }
    Ok(IsolationCheck { isolated: true, dimension, method: IsolationMethod::Saturation })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "detail")]
pub enum RegularityOutcome {
    CertifiedRegular,
    /// One-based index of the first prefix that failed every trial.
    RefutedAtPrefix(usize),
    Inconclusive(String),
}

/// Strength of a refutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RefutationKind {
    /// No linear cut was involved; the failed check is exact.
    Exact,
    /// Every one of `trials` random cuts failed (high confidence).
    MonteCarlo { trials: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialRecord {
    pub trial: usize,
    /// Seed of the random subspace, absent when no cut was needed.
    pub cut_seed: Option<u64>,
    /// Dimension of the subspace the prefix was restricted to.
    pub subspace_dimension: usize,
    pub isolation: IsolationCheck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrefixEvidence {
    pub prefix: usize,
    pub certified: bool,
    pub trials: Vec<TrialRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityVerdict {
    pub outcome: RegularityOutcome,
    pub refutation: Option<RefutationKind>,
    pub evidence: Vec<PrefixEvidence>,
    pub trial_count: usize,
}

impl RegularityVerdict {
    pub fn is_certified(&self) -> bool {
        self.outcome == RegularityOutcome::CertifiedRegular
    }
}

/// Pulls the polynomials back along a random linear map `k^dim → k^n`.
fn restrict_to_random_subspace(
    polys: &[Polynomial],
    dim: usize,
    cut_seed: u64,
) -> Result<Vec<Polynomial>, RegseqError> {
    let ring = polys[0].ring();
    let domain = ring.domain();
    let sub = PolyRing::numbered("s", dim, domain)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cut_seed);
    let images: Vec<Polynomial> = (0..ring.nvars())
        .map(|_| {
            (0..dim).fold(Polynomial::zero(&sub), |acc, j| {
                acc + Polynomial::var(&sub, j).scale(&domain.random(&mut rng, 9))
            })
        })
        .collect();
    polys.iter().map(|p| p.substitute(&images).map_err(Into::into)).collect()
}

/// Local regularity of `sequence` at the origin of `k^n`.
pub fn regular_at_origin(
    sequence: &[Polynomial],
    n: usize,
    trials: usize,
    seed: u64,
    opts: &GroebnerOptions,
) -> Result<RegularityVerdict, RegseqError> {
    let r = sequence.len();
    if r > n {
        return Err(RegseqError::SequenceTooLong { len: r, nvars: n });
    }
    if let Some(first) = sequence.first() {
        if first.ring().nvars() != n {
            return Err(RegseqError::VariableCount { expected: n, actual: first.ring().nvars() });
        }
        if sequence.iter().any(|p| p.ring() != first.ring()) {
            return Err(RegseqError::RingMismatch);
        }
    }
    if let Some(index) = sequence.iter().position(|p| !p.constant_term().is_zero()) {
        return Err(RegseqError::NotVanishingAtOrigin { index: index + 1 });
    }
    let trials = trials.max(1);
    let mut evidence = Vec::with_capacity(r);
    let mut trial_count = 0;
    for i in 1..=r {
        let prefix = &sequence[..i];
        let cuts = n - i;
        let attempts = if cuts == 0 { 1 } else { trials };
        let mut records = Vec::with_capacity(attempts);
        let mut certified = false;
        for trial in 0..attempts {
            trial_count += 1;
            let (polys, cut_seed) = if cuts == 0 {
                (prefix.to_vec(), None)
            } else {
                let s = seed::task_seed(seed, i as u64, trial as u64, seed::purpose::LINEAR_CUT);
                (restrict_to_random_subspace(prefix, i, s)?, Some(s))
            };
            let ring = polys[0].ring().clone();
            let ideal = IdealPresentation::new(&ring, polys)?;
            let isolation = match origin_isolated(&ideal, opts) {
                Ok(c) => c,
                Err(RegseqError::BudgetExceeded { budget }) => {
                    evidence.push(PrefixEvidence { prefix: i, certified: false, trials: records });
                    return Ok(RegularityVerdict {
                        outcome: RegularityOutcome::Inconclusive(format!(
                            "Gröbner step budget of {budget} exceeded at prefix {i}"
                        )),
                        refutation: None,
                        evidence,
                        trial_count,
                    });
                }
                Err(e) => return Err(e),
            };
            records.push(TrialRecord { trial, cut_seed, subspace_dimension: i, isolation });
            if isolation.isolated {
                certified = true;
                break;
            }
        }
        evidence.push(PrefixEvidence { prefix: i, certified, trials: records });
        if !certified {
            let refutation =
                if cuts == 0 { RefutationKind::Exact } else { RefutationKind::MonteCarlo { trials: attempts } };
            return Ok(RegularityVerdict {
                outcome: RegularityOutcome::RefutedAtPrefix(i),
                refutation: Some(refutation),
                evidence,
                trial_count,
            });
        }
    }
    Ok(RegularityVerdict { outcome: RegularityOutcome::CertifiedRegular, refutation: None, evidence, trial_count })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::CoeffDomain;

    fn ring(n: usize) -> RingRef {
        PolyRing::numbered("z", n, CoeffDomain::Rationals).unwrap()
    }

    fn z(r: &RingRef, i: usize) -> Polynomial {
        Polynomial::var(r, i - 1)
    }

    fn ideal(r: &RingRef, g: Vec<Polynomial>) -> IdealPresentation {
        IdealPresentation::new(r, g).unwrap()
    }

    #[test]
    fn basis_examples() {
        let r = ring(2);
        let opts = GroebnerOptions::default();
        let gb = groebner_basis(&ideal(&r, vec![z(&r, 1), z(&r, 2)]), &opts).unwrap();
        assert_eq!(gb.basis(), &[z(&r, 1), z(&r, 2)]);

        let gb = groebner_basis(&ideal(&r, vec![z(&r, 1) + z(&r, 2), z(&r, 2).pow(2)]), &opts).unwrap();
        assert_eq!(gb.basis(), &[z(&r, 2).pow(2), z(&r, 1) + z(&r, 2)]);
        assert!(gb.verify());

        let gens = vec![z(&r, 1) * z(&r, 2) - Polynomial::one(&r), z(&r, 1).pow(2)];
        let gb = groebner_basis(&ideal(&r, gens), &opts).unwrap();
        assert_eq!(gb.basis(), &[Polynomial::one(&r)]);
        assert_eq!(gb.dimension(), -1);
    }

    #[test]
    fn dimension_examples() {
        let r = ring(3);
        let opts = GroebnerOptions::default();
        assert_eq!(ideal_dimension(&ideal(&r, vec![z(&r, 1), z(&r, 2)]), &opts).unwrap(), 1);
        assert_eq!(ideal_dimension(&ideal(&r, vec![z(&r, 1) * z(&r, 2)]), &opts).unwrap(), 2);
        let g = vec![z(&r, 1) * z(&r, 2), z(&r, 1) * z(&r, 3)];
        assert_eq!(ideal_dimension(&ideal(&r, g), &opts).unwrap(), 2);
        assert_eq!(ideal_dimension(&ideal(&r, vec![]), &opts).unwrap(), 3);
    }

    #[test]
    fn saturation_examples() {
        let r = ring(2);
        let opts = GroebnerOptions::default();
        let (z1, z2) = (z(&r, 1), z(&r, 2));
        let primary = ideal(&r, vec![z1.pow(2), &z1 * &z2, z2.pow(2)]);
        let sat = saturate_at_origin(&primary, &opts).unwrap();
        assert_eq!(sat.generators(), &[Polynomial::one(&r)]);

        let sat = saturate_at_origin(&ideal(&r, vec![z1.clone()]), &opts).unwrap();
        assert_eq!(sat.generators(), std::slice::from_ref(&z1));

        // (z1 z2^2, z2^3) = (z2^2) ∩ (z1, z2^3); the embedded component goes away
        let sat = saturate_at_origin(&ideal(&r, vec![&z1 * &z2.pow(2), z2.pow(3)]), &opts).unwrap();
        assert_eq!(sat.generators(), &[z2.pow(2)]);
    }

    #[test]
    fn isolation_with_distant_components() {
        // V = {origin} ∪ {z1 = 1} in the plane
        let r = ring(2);
        let opts = GroebnerOptions::default();
        let (z1, z2) = (z(&r, 1), z(&r, 2));
        let one = Polynomial::one(&r);
        let j = ideal(&r, vec![&z1 * &(&z1 - &one), &z2 * &(&z1 - &one)]);
        let check = origin_isolated(&j, &opts).unwrap();
        assert_eq!(check, IsolationCheck { isolated: true, dimension: 1, method: IsolationMethod::Saturation });
        let j = ideal(&r, vec![&z1 * &z2]);
        assert!(!origin_isolated(&j, &opts).unwrap().isolated);
    }

    #[test]
    fn regularity_examples() {
        let opts = GroebnerOptions::default();
        let r = ring(4);
        let v = regular_at_origin(&[z(&r, 1), z(&r, 2), z(&r, 3)], 4, 5, 1, &opts).unwrap();
        assert_eq!(v.outcome, RegularityOutcome::CertifiedRegular);
        assert_eq!(v.evidence.len(), 3);

        let r = ring(2);
        let v = regular_at_origin(&[z(&r, 1), z(&r, 1) * z(&r, 2)], 2, 5, 1, &opts).unwrap();
        assert_eq!(v.outcome, RegularityOutcome::RefutedAtPrefix(2));
        assert_eq!(v.refutation, Some(RefutationKind::Exact));

        let r = ring(3);
        let seq = [z(&r, 1) * z(&r, 2), z(&r, 1) * z(&r, 3)];
        let v = regular_at_origin(&seq, 3, 5, 1, &opts).unwrap();
        assert_eq!(v.outcome, RegularityOutcome::RefutedAtPrefix(2));
        assert_eq!(v.refutation, Some(RefutationKind::MonteCarlo { trials: 5 }));
        assert_eq!(v.evidence[1].trials.len(), 5);
    }

    #[test]
    fn preconditions() {
        let opts = GroebnerOptions::default();
        let r = ring(2);
        let one = Polynomial::one(&r);
        assert_eq!(
            regular_at_origin(&[z(&r, 1), z(&r, 2) + one], 2, 5, 1, &opts),
            Err(RegseqError::NotVanishingAtOrigin { index: 2 })
        );
        assert!(matches!(
            regular_at_origin(&[z(&r, 1), z(&r, 2), z(&r, 1)], 2, 5, 1, &opts),
            Err(RegseqError::SequenceTooLong { .. })
        ));
    }

    #[test]
    fn budget_is_reported() {
        let r = ring(3);
        let (z1, z2, z3) = (z(&r, 1), z(&r, 2), z(&r, 3));
        let gens = vec![&z1 * &z2 - z3.pow(2), &z1 * &z3 - z2.pow(2), &z2 * &z3 - z1.pow(2)];
        let tiny = GroebnerOptions { step_budget: 1 };
        assert!(matches!(
            groebner_basis(&ideal(&r, gens.clone()), &tiny),
            Err(RegseqError::BudgetExceeded { budget: 1 })
        ));
        let v = regular_at_origin(&gens, 3, 5, 1, &tiny).unwrap();
        assert!(matches!(v.outcome, RegularityOutcome::Inconclusive(_)));
    }
}
