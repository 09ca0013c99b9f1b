//! Exact sparse multivariate polynomials over `Q` and `F_p`.
//!
//! Every polynomial carries a shared [`PolyRing`] (variable names, coefficient
//! domain and positive integer weights). Terms are stored sorted by weighted
//! graded reverse lexicographic order, highest first, with no zero
//! coefficients, so equal polynomials have identical representations.
//!
//! "Degree" always means weighted total degree.

mod coeff;
pub mod modular;
pub mod univariate;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub use coeff::{rational_string, Coeff, CoeffDomain};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Numerators over the least common denominator of a rational polynomial.
fn integer_numerators(p: &Polynomial) -> (Vec<BigInt>, BigInt) {
    let rationals: Vec<&BigRational> =
        p.terms.iter().map(|(_, c)| c.as_rational().expect("rational coefficient")).collect();
    let den = rationals.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let nums = rationals.iter().map(|q| q.numer() * (&den / q.denom())).collect();
    (nums, den)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("coefficient does not belong to the ring's domain")]
    DomainMismatch,
    #[error("{0} is not a prime modulus")]
    InvalidModulus(u64),
    #[error("{0} is not invertible in the coefficient domain")]
    NotInvertible(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
}

/// Variables, coefficient domain and per-variable weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    variables: Vec<String>,
    domain: CoeffDomain,
    weights: Vec<u32>,
}

pub type RingRef = Arc<PolyRing>;

impl PolyRing {
    pub fn new<S: Into<String>>(
        variables: impl IntoIterator<Item = S>,
        domain: CoeffDomain,
    ) -> Result<RingRef, PolyError> {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        let weights = vec![1; variables.len()];
        Self::with_weights(variables, domain, weights)
    }

    pub fn with_weights<S: Into<String>>(
        variables: impl IntoIterator<Item = S>,
        domain: CoeffDomain,
        weights: Vec<u32>,
    ) -> Result<RingRef, PolyError> {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        if variables.is_empty() {
            return Err(PolyError::InvalidRing("a ring needs at least one variable".into()));
        }
        if weights.len() != variables.len() {
            return Err(PolyError::LengthMismatch { expected: variables.len(), got: weights.len() });
        }
        if weights.contains(&0) {
            return Err(PolyError::InvalidRing("weights must be positive".into()));
        }
        for (i, v) in variables.iter().enumerate() {
            if variables[..i].contains(v) {
                return Err(PolyError::InvalidRing(format!("duplicate variable {v}")));
            }
        }
        if let CoeffDomain::PrimeField(p) = domain {
            CoeffDomain::prime_field(p)?;
        }
        Ok(Arc::new(PolyRing { variables, domain, weights }))
    }

    /// Ring with variables `prefix1 .. prefixN` (one-based, as chart variables are named).
    pub fn numbered(prefix: &str, n: usize, domain: CoeffDomain) -> Result<RingRef, PolyError> {
        Self::new((1..=n).map(|i| format!("{prefix}{i}")), domain)
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn domain(&self) -> CoeffDomain {
        self.domain
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn variable_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    /// Same variables and weights over another domain.
    pub fn with_domain(&self, domain: CoeffDomain) -> RingRef {
        Arc::new(PolyRing { domain, ..self.clone() })
    }

    /// Weighted degree of an exponent vector.
    pub fn weighted_degree(&self, exps: &[u32]) -> u32 {
        exps.iter().zip(&self.weights).map(|(e, w)| e * w).sum()
    }

    /// Weighted graded reverse lexicographic comparison.
    pub fn cmp_monomials(&self, a: &[u32], b: &[u32]) -> Ordering {
        self.weighted_degree(a)
            .cmp(&self.weighted_degree(b))
            .then_with(|| revlex(a, b))
    }
}

/// Reverse lexicographic tie break: the monomial with the smaller exponent
/// in the last differing variable is larger.
pub fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

pub type Term = (Vec<u32>, Coeff);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &RingRef, c: Coeff) -> Self {
        Self::from_terms(ring, [(vec![0; ring.nvars()], c)])
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, ring.domain().one())
    }

    pub fn from_i64(ring: &RingRef, n: i64) -> Self {
        Self::constant(ring, ring.domain().from_i64(n))
    }

    /// The variable with index `i`.
    pub fn var(ring: &RingRef, i: usize) -> Self {
        let mut e = vec![0; ring.nvars()];
        e[i] = 1;
        Self::from_terms(ring, [(e, ring.domain().one())])
    }

    pub fn monomial(ring: &RingRef, exps: Vec<u32>, c: Coeff) -> Self {
        Self::from_terms(ring, [(exps, c)])
    }

    /// Collects like terms, drops zeros and sorts canonically.
    pub fn from_terms(ring: &RingRef, terms: impl IntoIterator<Item = Term>) -> Self {
        let domain = ring.domain();
        let mut acc: HashMap<Vec<u32>, Coeff> = HashMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), ring.nvars(), "exponent vector length");
            match acc.get_mut(&e) {
                Some(existing) => *existing = domain.add(existing, &c),
                None => {
                    acc.insert(e, c);
                }
            }
        }
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn domain(&self) -> CoeffDomain {
        self.ring.domain()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.iter().all(|&x| x == 0))
    }

    pub fn constant_term(&self) -> Coeff {
        self.terms
            .iter()
            .find(|(e, _)| e.iter().all(|&x| x == 0))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.domain().zero())
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Coefficient of the given monomial (zero when absent).
    pub fn coefficient(&self, exps: &[u32]) -> Coeff {
        self.terms
            .iter()
            .find(|(e, _)| e == exps)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.domain().zero())
    }

    /// Weighted total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(e, _)| self.ring.weighted_degree(e)).max()
    }

    /// Lowest weighted degree among the terms; `None` for zero.
    pub fn low_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(e, _)| self.ring.weighted_degree(e)).min()
    }

    /// Maximum exponent of variable `i`.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|(e, _)| e[i]).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.low_degree()
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }

    fn check_ring(&self, other: &Self) -> Result<(), PolyError> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let domain = self.domain();
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let fix = |c: &Coeff| if negate { domain.neg(c) } else { c.clone() };
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match ring.cmp_monomials(&a.0, &b.0) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b.0.clone(), fix(&b.1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { domain.sub(&a.1, &b.1) } else { domain.add(&a.1, &b.1) };
                    if !c.is_zero() {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|t| (t.0.clone(), fix(&t.1))));
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    /// Exact product; fails when the rings differ.
    pub fn try_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.mul_truncated(other, None))
    }

    /// Product keeping only terms of weighted degree `<= max_degree`.
    pub fn mul_truncated(&self, other: &Self, max_degree: Option<u32>) -> Self {
        let ring = &self.ring;
        if self.is_zero() || other.is_zero() {
            return Self::zero(ring);
        }
        let degrees_b: Vec<u32> = other.terms.iter().map(|(e, _)| ring.weighted_degree(e)).collect();
        let mut pairs = Vec::new();
        for (ia, (ea, _)) in self.terms.iter().enumerate() {
            let da = ring.weighted_degree(ea);
            for (ib, db) in degrees_b.iter().enumerate() {
                if max_degree.is_none_or(|maxd| da + db <= maxd) {
                    pairs.push((ia, ib));
                }
            }
        }
        let exps = |ia: usize, ib: usize| -> Vec<u32> {
            self.terms[ia].0.iter().zip(&other.terms[ib].0).map(|(x, y)| x + y).collect()
        };
        let mut terms: Vec<Term> = match self.domain() {
            CoeffDomain::Rationals => {
                // integer numerators over common denominators; one reduction per output term
                let (na, da) = integer_numerators(self);
                let (nb, db) = integer_numerators(other);
                let mut acc: HashMap<Vec<u32>, BigInt> = HashMap::with_capacity(pairs.len());
                for (ia, ib) in pairs {
                    let c = &na[ia] * &nb[ib];
                    *acc.entry(exps(ia, ib)).or_default() += c;
                }
                let den = da * db;
                acc.into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(e, c)| (e, Coeff::Rational(BigRational::new(c, den.clone()))))
                    .collect()
            }
            CoeffDomain::PrimeField(p) => {
                let mut acc: HashMap<Vec<u32>, u64> = HashMap::with_capacity(pairs.len());
                for (ia, ib) in pairs {
                    let (Some(x), Some(y)) = (self.terms[ia].1.as_residue(), other.terms[ib].1.as_residue()) else {
                        unreachable!("prime-field polynomial with a rational coefficient")
                    };
                    let slot = acc.entry(exps(ia, ib)).or_insert(0);
                    *slot = modular::add_mod(*slot, modular::mul_mod(x, y, p), p);
                }
                acc.into_iter().filter(|(_, c)| *c != 0).map(|(e, c)| (e, Coeff::Modular(c))).collect()
            }
        };
        terms.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        let domain = self.domain();
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(e, x)| (e.clone(), domain.mul(x, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Multiplies by a monomial and a scalar.
    pub fn mul_term(&self, exps: &[u32], c: &Coeff) -> Self {
        let domain = self.domain();
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, x)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), domain.mul(x, c)))
            .collect();
        // multiplying by a monomial preserves the (weighted grevlex) order
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        self.pow_truncated(e, None)
    }

    /// Power with all intermediate products truncated above `max_degree`.
    pub fn pow_truncated(&self, mut e: u32, max_degree: Option<u32>) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_truncated(&base, max_degree);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_truncated(&base, max_degree);
            }
        }
        acc
    }

    /// Drops all terms of weighted degree above `d`.
    pub fn truncate_above(&self, d: u32) -> Self {
        let ring = &self.ring;
        let terms = self.terms.iter().filter(|(e, _)| ring.weighted_degree(e) <= d).cloned().collect();
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn eval(&self, point: &[Coeff]) -> Result<Coeff, PolyError> {
        let n = self.ring.nvars();
        if point.len() != n {
            return Err(PolyError::LengthMismatch { expected: n, got: point.len() });
        }
        let domain = self.domain();
        if point.iter().any(|c| !domain.contains(c)) {
            return Err(PolyError::DomainMismatch);
        }
        let mut cache: Vec<Vec<Coeff>> = point.iter().map(|c| vec![domain.one(), c.clone()]).collect();
        let mut acc = domain.zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let powers = &mut cache[i];
                while powers.len() <= k as usize {
                    let next = domain.mul(powers.last().unwrap(), &powers[1]);
                    powers.push(next);
                }
                t = domain.mul(&t, &powers[k as usize]);
            }
            acc = domain.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Weighted-homogeneous pieces keyed by degree; absent keys are zero.
    pub fn homogeneous_components(&self) -> BTreeMap<u32, Polynomial> {
        let mut groups: BTreeMap<u32, Vec<Term>> = BTreeMap::new();
        for t in &self.terms {
            groups.entry(self.ring.weighted_degree(&t.0)).or_default().push(t.clone());
        }
        // terms are already in descending order, which grouping preserves
        groups
            .into_iter()
            .map(|(d, terms)| (d, Polynomial { ring: self.ring.clone(), terms }))
            .collect()
    }

    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        let ring = &self.ring;
        let terms = self.terms.iter().filter(|(e, _)| ring.weighted_degree(e) == d).cloned().collect();
        Polynomial { ring: ring.clone(), terms }
    }

    /// Composition: replaces variable `i` by `images[i]`; the result lives in
    /// the images' ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        let n = self.ring.nvars();
        if images.len() != n {
            return Err(PolyError::LengthMismatch { expected: n, got: images.len() });
        }
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .ok_or(PolyError::LengthMismatch { expected: n, got: 0 })?;
        if images.iter().any(|p| p.ring != target) {
            return Err(PolyError::RingMismatch);
        }
        let target_domain = target.domain();
        let mut powers: Vec<Vec<Polynomial>> =
            images.iter().map(|p| vec![Polynomial::one(&target), p.clone()]).collect();
        let mut acc: HashMap<Vec<u32>, Coeff> = HashMap::new();
        for (e, c) in &self.terms {
            let c = target_domain.convert(c)?;
            let mut t = Polynomial::constant(&target, c);
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= k as usize {
                    let next = pw.last().unwrap().mul_truncated(&pw[1], None);
                    pw.push(next);
                }
                t = t.mul_truncated(&pw[k as usize], None);
            }
            for (te, tc) in t.terms {
                match acc.get_mut(&te) {
                    Some(x) => *x = target_domain.add(x, &tc),
                    None => {
                        acc.insert(te, tc);
                    }
                }
            }
        }
        Ok(Polynomial::from_terms(&target, acc))
    }

    /// `F(z + p)`.
    pub fn translate_origin(&self, p: &[Coeff]) -> Result<Polynomial, PolyError> {
        let n = self.ring.nvars();
        if p.len() != n {
            return Err(PolyError::LengthMismatch { expected: n, got: p.len() });
        }
        let domain = self.domain();
        if p.iter().any(|c| !domain.contains(c)) {
            return Err(PolyError::DomainMismatch);
        }
        if p.iter().all(Coeff::is_zero) {
            return Ok(self.clone());
        }
        let images: Vec<Polynomial> = (0..n)
            .map(|i| Polynomial::var(&self.ring, i) + Polynomial::constant(&self.ring, p[i].clone()))
            .collect();
        self.substitute(&images)
    }

    /// Order of vanishing at `p` (lowest degree of the translated polynomial);
    /// `None` stands for infinity (the zero polynomial).
    pub fn vanishing_order(&self, p: &[Coeff]) -> Result<Option<u32>, PolyError> {
        Ok(self.translate_origin(p)?.low_degree())
    }

    pub fn partial_derivative(&self, i: usize) -> Polynomial {
        let domain = self.domain();
        let terms = self.terms.iter().filter(|(e, _)| e[i] > 0).map(|(e, c)| {
            let mut e2 = e.clone();
            e2[i] -= 1;
            (e2, domain.mul(c, &domain.from_i64(e[i] as i64)))
        });
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Re-expresses the polynomial in another ring with the same number of
    /// variables (different domain, names or weights).
    pub fn change_ring(&self, ring: &RingRef) -> Result<Polynomial, PolyError> {
        if ring.nvars() != self.ring.nvars() {
            return Err(PolyError::LengthMismatch { expected: ring.nvars(), got: self.ring.nvars() });
        }
        let domain = ring.domain();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| Ok((e.clone(), domain.convert(c)?)))
            .collect::<Result<Vec<_>, PolyError>>()?;
        Ok(Polynomial::from_terms(ring, terms))
    }

    /// Embeds into a ring whose first variables coincide with this ring's;
    /// extra variables get exponent zero.
    pub fn extend_to(&self, ring: &RingRef) -> Result<Polynomial, PolyError> {
        let n = self.ring.nvars();
        if ring.nvars() < n || ring.domain() != self.domain() {
            return Err(PolyError::RingMismatch);
        }
        let extra = ring.nvars() - n;
        let terms = self.terms.iter().map(|(e, c)| {
            let mut e2 = e.clone();
            e2.extend(std::iter::repeat_n(0, extra));
            (e2, c.clone())
        });
        Ok(Polynomial::from_terms(ring, terms))
    }

    /// Homogeneous polynomial of weighted degree `d` with every monomial
    /// present: uniform nonzero residues over `F_p`, nonzero integers in
    /// `[-9, 9]` over `Q`. Pure in `(ring, d, seed)`.
    pub fn random_homogeneous(ring: &RingRef, d: u32, seed: u64) -> Polynomial {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let domain = ring.domain();
        let terms: Vec<Term> = monomials_of_degree(ring.weights(), d)
            .into_iter()
            .map(|e| {
                let c = domain.random_nonzero(&mut rng, 9);
                (e, c)
            })
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Canonical text in the instance-file grammar.
    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }
}

/// All exponent vectors of the given weighted degree, in a fixed order.
pub fn monomials_of_degree(weights: &[u32], d: u32) -> Vec<Vec<u32>> {
    fn rec(weights: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == weights.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = weights[i];
        for e in 0..=left / w {
            cur.push(e);
            rec(weights, i + 1, left - e * w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(weights, 0, d, &mut Vec::with_capacity(weights.len()), &mut out);
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let domain = self.domain();
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let shown = if idx > 0 && negative { domain.neg(c) } else { c.clone() };
            if idx > 0 {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            let mut factors: Vec<String> = Vec::new();
            let is_const = e.iter().all(|&x| x == 0);
            if is_const || !shown.is_one() {
                factors.push(shown.to_string());
            }
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => factors.push(self.ring.variables[i].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.variables[i], k)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $impl:ident) => {
        impl std::ops::$trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$impl(rhs).expect("polynomials from different rings")
            }
        }
        impl std::ops::$trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$impl(&rhs).expect("polynomials from different rings")
            }
        }
        impl std::ops::$trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$impl(rhs).expect("polynomials from different rings")
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&self.domain().from_i64(-1))
    }
}

impl std::ops::Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    /// Panics on an empty iterator; use `fold` with an explicit zero instead
    /// when the ring cannot be inferred.
    fn sum<I: Iterator<Item = Polynomial>>(mut iter: I) -> Polynomial {
        let first = iter.next().expect("sum of an empty polynomial list");
        iter.fold(first, |a, b| a + b)
    }
}
