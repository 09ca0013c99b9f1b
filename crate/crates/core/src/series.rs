//! Formal K-th roots and formal arcs.
//!
//! `(1 + s)^{1/K} = 1 + Σ γ_i s^i` gives the [`GammaTable`]; substituting
//! `s = w_1 + … + w_{Kl}` and regrouping by degree gives the homogeneous
//! pieces `Φ_i`. Univariate [`TruncatedSeries`] carry formal arcs: curves
//! `t ↦ (z_1(t), …, z_n(t), y(t))` through the origin on which defining
//! equations vanish to a certified order.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::poly::{Coeff, CoeffDomain, PolyError, Polynomial, RingRef};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("the root index K must be at least 2 (got {0})")]
    InvalidRootIndex(u32),
    #[error("w_{index} is not homogeneous of degree {index}")]
    NotHomogeneous { index: usize },
    #[error("K-th root requires constant term 1")]
    ConstantTermNotOne,
    #[error("{0} is not invertible in the coefficient field")]
    NotInvertible(u64),
    #[error("singular direction: the Jacobian in the solved variables is not invertible at the origin")]
    SingularDirection,
    #[error("equation does not vanish at the origin")]
    NotThroughOrigin,
    #[error("free series must vanish at t = 0")]
    FreeSeriesNotVanishing,
    #[error("Newton lifting did not reach order {0}")]
    NoConvergence(u32),
    #[error("index {index} outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `γ_1 … γ_N` of `(1 + s)^{1/K}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaTable {
    root_index: u32,
    coefficients: Vec<BigRational>,
}

impl GammaTable {
    pub fn root_index(&self) -> u32 {
        self.root_index
    }

    /// `γ_i` for `1 <= i <= N`.
    pub fn gamma(&self, i: usize) -> &BigRational {
        &self.coefficients[i - 1]
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coefficients
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }
}

pub fn gamma_coefficients(k: u32, n: usize) -> Result<GammaTable, SeriesError> {
    if k < 2 {
        return Err(SeriesError::InvalidRootIndex(k));
    }
    let alpha = BigRational::new(BigInt::one(), BigInt::from(k));
    let mut coefficients = Vec::with_capacity(n);
    let mut g = alpha.clone();
    for i in 1..=n {
        coefficients.push(g.clone());
        // (i+1) γ_{i+1} = (1/K − i) γ_i
        g = g * (&alpha - BigRational::from_integer(i.into())) / BigRational::from_integer((i + 1).into());
    }
    Ok(GammaTable { root_index: k, coefficients })
}

fn domain_scalar(domain: CoeffDomain, num: i64, den: i64) -> Result<Coeff, SeriesError> {
    domain.from_rational(&BigRational::new(num.into(), den.into())).map_err(|_| {
        SeriesError::NotInvertible(den.unsigned_abs())
    })
}

/// `Φ_1 … Φ_N`, the degree-`i` pieces of `(1 + w_1 + … + w_{Kl})^{1/K} − 1`.
///
/// `w[j-1]` holds `w_j`, which must be homogeneous of degree `j` or zero.
/// Pieces are produced degree by degree from the Euler-operator identity
/// `E(P)·g = (1/K)·P·E(g)` for `P = g^{1/K}`, which gives
/// `d·P_d = Σ_{j=1..d} (j/K − (d − j))·w_j·P_{d−j}`.
pub fn phi_polynomials(
    ring: &RingRef,
    w: &[Polynomial],
    k: u32,
    n: usize,
) -> Result<Vec<Polynomial>, SeriesError> {
    if k < 2 {
        return Err(SeriesError::InvalidRootIndex(k));
    }
    for (idx, wj) in w.iter().enumerate() {
        if wj.ring() != ring {
            return Err(PolyError::RingMismatch.into());
        }
        if !wj.is_zero() && !(wj.is_homogeneous() && wj.degree() == Some(idx as u32 + 1)) {
            return Err(SeriesError::NotHomogeneous { index: idx + 1 });
        }
    }
    let domain = ring.domain();
    let mut pieces: Vec<Polynomial> = vec![Polynomial::one(ring)];
    for d in 1..=n {
        let mut acc = Polynomial::zero(ring);
        for j in 1..=d.min(w.len()) {
            let wj = &w[j - 1];
            if wj.is_zero() || pieces[d - j].is_zero() {
                continue;
            }
            // (j/K − (d − j)) / d = (j − K(d − j)) / (K d)
            let num = j as i64 - k as i64 * (d - j) as i64;
            if num == 0 {
                continue;
            }
            let c = domain_scalar(domain, num, k as i64 * d as i64)?;
            acc = acc + wj.mul_truncated(&pieces[d - j], None).scale(&c);
        }
        pieces.push(acc);
    }
    pieces.remove(0);
    Ok(pieces)
}

/// `[g^{1/K}]_k = 1 + Φ_1 + … + Φ_k`.
pub fn truncated_kth_root(
    ring: &RingRef,
    w: &[Polynomial],
    k: u32,
    order: usize,
) -> Result<Polynomial, SeriesError> {
    let phis = phi_polynomials(ring, w, k, order)?;
    Ok(phis.into_iter().fold(Polynomial::one(ring), |acc, p| acc + p))
}

/// `f_k = q_1 + … + q_k` from `q[j-1] = q_j`.
pub fn truncate_f(q: &[Polynomial], k: usize) -> Result<Polynomial, SeriesError> {
    if k == 0 || k > q.len() {
        return Err(SeriesError::IndexOutOfRange { index: k, max: q.len() });
    }
    Ok(q[..k].iter().cloned().sum())
}

/// Univariate series `c_0 + c_1 t + … + c_N t^N` known modulo `t^{N+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    domain: CoeffDomain,
    coeffs: Vec<Coeff>,
}

/// t-adic order of a truncated quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value")]
pub enum SeriesOrder {
    /// The first nonzero coefficient sits at this index.
    Exact(u32),
    /// Zero through the truncation order; the true order is at least this.
    AtLeast(u32),
    /// The quantity is identically zero (not merely to the truncation order).
    Infinite,
}

impl SeriesOrder {
    /// Whether the order is certainly at least `k`.
    pub fn certifies_at_least(&self, k: u32) -> bool {
        match self {
            SeriesOrder::Exact(v) | SeriesOrder::AtLeast(v) => *v >= k,
            SeriesOrder::Infinite => true,
        }
    }
}

impl fmt::Display for SeriesOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesOrder::Exact(v) => write!(f, "{v}"),
            SeriesOrder::AtLeast(v) => write!(f, ">={v}"),
            SeriesOrder::Infinite => write!(f, "inf"),
        }
    }
}

impl TruncatedSeries {
    pub fn zero(domain: CoeffDomain, order_bound: usize) -> Self {
        TruncatedSeries { domain, coeffs: vec![domain.zero(); order_bound + 1] }
    }

    pub fn constant(domain: CoeffDomain, c: Coeff, order_bound: usize) -> Self {
        let mut s = Self::zero(domain, order_bound);
        s.coeffs[0] = c;
        s
    }

    /// Pads or truncates `coeffs` to length `order_bound + 1`.
    pub fn from_coeffs(domain: CoeffDomain, mut coeffs: Vec<Coeff>, order_bound: usize) -> Self {
        coeffs.resize(order_bound + 1, domain.zero());
        TruncatedSeries { domain, coeffs }
    }

    pub fn from_i64s(domain: CoeffDomain, values: &[i64], order_bound: usize) -> Self {
        Self::from_coeffs(domain, values.iter().map(|&v| domain.from_i64(v)).collect(), order_bound)
    }

    /// The series `t`.
    pub fn t(domain: CoeffDomain, order_bound: usize) -> Self {
        let mut s = Self::zero(domain, order_bound);
        if order_bound >= 1 {
            s.coeffs[1] = domain.one();
        }
        s
    }

    pub fn domain(&self) -> CoeffDomain {
        self.domain
    }

    pub fn order_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Coeff {
        &self.coeffs[i]
    }

    pub fn with_order_bound(&self, n: usize) -> Self {
        Self::from_coeffs(self.domain, self.coeffs.clone(), n)
    }

    /// Index of the first nonzero coefficient, else `AtLeast(N+1)`.
    pub fn order(&self) -> SeriesOrder {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(i) => SeriesOrder::Exact(i as u32),
            None => SeriesOrder::AtLeast(self.coeffs.len() as u32),
        }
    }

    fn common(&self, other: &Self) -> usize {
        assert_eq!(self.domain, other.domain, "series over different domains");
        self.order_bound().min(other.order_bound())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.common(other);
        let d = self.domain;
        let coeffs = (0..=n).map(|i| d.add(&self.coeffs[i], &other.coeffs[i])).collect();
        TruncatedSeries { domain: d, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.common(other);
        let d = self.domain;
        let coeffs = (0..=n).map(|i| d.sub(&self.coeffs[i], &other.coeffs[i])).collect();
        TruncatedSeries { domain: d, coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.common(other);
        let d = self.domain;
        let mut coeffs = vec![d.zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = d.add(&coeffs[i + j], &d.mul(a, b));
                }
            }
        }
        TruncatedSeries { domain: d, coeffs }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        let d = self.domain;
        TruncatedSeries { domain: d, coeffs: self.coeffs.iter().map(|x| d.mul(x, c)).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::constant(self.domain, self.domain.one(), self.order_bound());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Option<Self> {
        let d = self.domain;
        let inv0 = d.inv(&self.coeffs[0])?;
        let n = self.order_bound();
        let mut out = vec![d.zero(); n + 1];
        out[0] = inv0.clone();
        for i in 1..=n {
            let mut acc = d.zero();
            for j in 1..=i {
                acc = d.add(&acc, &d.mul(&self.coeffs[j], &out[i - j]));
            }
            out[i] = d.neg(&d.mul(&acc, &inv0));
        }
        Some(TruncatedSeries { domain: d, coeffs: out })
    }
}

/// `r` with `r^K ≡ c` through the truncation order and `r_0 = 1`.
pub fn series_kth_root(c: &TruncatedSeries, k: u32) -> Result<TruncatedSeries, SeriesError> {
    if k < 2 {
        return Err(SeriesError::InvalidRootIndex(k));
    }
    let d = c.domain();
    if !c.coeff(0).is_one() {
        return Err(SeriesError::ConstantTermNotOne);
    }
    let n = c.order_bound();
    let mut r = vec![d.zero(); n + 1];
    r[0] = d.one();
    for m in 1..=n {
        let mut acc = d.zero();
        for j in 1..=m {
            if c.coeff(j).is_zero() {
                continue;
            }
            let num = j as i64 - k as i64 * (m - j) as i64;
            if num == 0 {
                continue;
            }
            let w = domain_scalar(d, num, k as i64 * m as i64)?;
            acc = d.add(&acc, &d.mul(&w, &d.mul(c.coeff(j), &r[m - j])));
        }
        r[m] = acc;
    }
    Ok(TruncatedSeries { domain: d, coeffs: r })
}

/// Evaluates a polynomial at a vector of series (one per ring variable).
pub fn compose(poly: &Polynomial, values: &[TruncatedSeries]) -> Result<TruncatedSeries, SeriesError> {
    let nv = poly.ring().nvars();
    if values.len() != nv {
        return Err(PolyError::LengthMismatch { expected: nv, got: values.len() }.into());
    }
    let domain = poly.domain();
    let n = values.iter().map(|s| s.order_bound()).min().unwrap_or(0);
    let mut powers: Vec<Vec<TruncatedSeries>> = values
        .iter()
        .map(|s| vec![TruncatedSeries::constant(domain, domain.one(), n), s.with_order_bound(n)])
        .collect();
    let mut acc = TruncatedSeries::zero(domain, n);
    for (e, c) in poly.terms() {
        let mut t = TruncatedSeries::constant(domain, c.clone(), n);
        for (i, &k) in e.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let pw = &mut powers[i];
            while pw.len() <= k as usize {
                let next = pw.last().unwrap().mul(&pw[1]);
                pw.push(next);
            }
            t = t.mul(&pw[k as usize]);
        }
        acc = acc.add(&t);
    }
    Ok(acc)
}

/// Solves `J·x = b` over truncated series by Gaussian elimination with
/// unit pivots.
fn solve_series_system(
    mut jac: Vec<Vec<TruncatedSeries>>,
    mut rhs: Vec<TruncatedSeries>,
) -> Result<Vec<TruncatedSeries>, SeriesError> {
    let r = rhs.len();
    for col in 0..r {
        let piv = (col..r)
            .find(|&row| !jac[row][col].coeff(0).is_zero())
            .ok_or(SeriesError::SingularDirection)?;
        jac.swap(col, piv);
        rhs.swap(col, piv);
        let inv = jac[col][col].inverse().ok_or(SeriesError::SingularDirection)?;
        for c in col..r {
            jac[col][c] = jac[col][c].mul(&inv);
        }
        rhs[col] = rhs[col].mul(&inv);
        for row in 0..r {
            if row == col {
                continue;
            }
            let factor = jac[row][col].clone();
            if factor.coeffs().iter().all(Coeff::is_zero) {
                continue;
            }
            for c in col..r {
                let v = factor.mul(&jac[col][c]);
                jac[row][c] = jac[row][c].sub(&v);
            }
            let v = factor.mul(&rhs[col]);
            rhs[row] = rhs[row].sub(&v);
        }
    }
    Ok(rhs)
}

/// Newton lifting for a square system: finds series for the `solved`
/// variables, vanishing at `t = 0`, such that every equation vanishes through
/// order `n` once the other variables take the values in `given`
/// (`given[i]` is ignored for solved variables).
pub fn lift_system(
    equations: &[Polynomial],
    solved: &[usize],
    given: &[Option<TruncatedSeries>],
    n: usize,
) -> Result<Vec<TruncatedSeries>, SeriesError> {
    assert_eq!(equations.len(), solved.len(), "square system");
    let ring = equations[0].ring().clone();
    let domain = ring.domain();
    let nv = ring.nvars();
    if given.len() != nv {
        return Err(PolyError::LengthMismatch { expected: nv, got: given.len() }.into());
    }
    let origin = vec![domain.zero(); nv];
    for eq in equations {
        if !eq.eval(&origin)?.is_zero() {
            return Err(SeriesError::NotThroughOrigin);
        }
    }
    let mut values: Vec<TruncatedSeries> = Vec::with_capacity(nv);
    for (i, g) in given.iter().enumerate() {
        if solved.contains(&i) {
            values.push(TruncatedSeries::zero(domain, n));
        } else {
            let s = g.clone().unwrap_or_else(|| TruncatedSeries::zero(domain, n)).with_order_bound(n);
            if !s.coeff(0).is_zero() {
                return Err(SeriesError::FreeSeriesNotVanishing);
            }
            values.push(s);
        }
    }
    let partials: Vec<Vec<Polynomial>> = equations
        .iter()
        .map(|eq| solved.iter().map(|&s| eq.partial_derivative(s)).collect())
        .collect();
    // the constant Jacobian must be invertible
    let jac0: Vec<Vec<TruncatedSeries>> = partials
        .iter()
        .map(|row| {
            row.iter()
                .map(|p| Ok(TruncatedSeries::constant(domain, p.eval(&origin)?, 0)))
                .collect::<Result<Vec<_>, SeriesError>>()
        })
        .collect::<Result<_, _>>()?;
    solve_series_system(jac0, vec![TruncatedSeries::zero(domain, 0); solved.len()])?;

    let max_iter = (usize::BITS - n.leading_zeros()) as usize + 3;
    for _ in 0..=max_iter {
        let residual: Vec<TruncatedSeries> =
            equations.iter().map(|eq| compose(eq, &values)).collect::<Result<_, _>>()?;
        if residual.iter().all(|r| r.coeffs().iter().all(Coeff::is_zero)) {
            return Ok(solved.iter().map(|&s| values[s].clone()).collect());
        }
        let jac: Vec<Vec<TruncatedSeries>> = partials
            .iter()
            .map(|row| row.iter().map(|p| compose(p, &values)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<_, _>>()?;
        let delta = solve_series_system(jac, residual)?;
        for (k, &s) in solved.iter().enumerate() {
            values[s] = values[s].sub(&delta[k]);
        }
    }
    Err(SeriesError::NoConvergence(n as u32))
}

/// Hensel lift of one variable on `{F = 0}` through the origin.
pub fn arc_lift(
    f: &Polynomial,
    solved_var: usize,
    free_values: &[Option<TruncatedSeries>],
    n: usize,
) -> Result<TruncatedSeries, SeriesError> {
    let mut out = lift_system(std::slice::from_ref(f), &[solved_var], free_values, n)?;
    Ok(out.remove(0))
}

/// A residual order recorded when an arc is accepted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Residual {
    pub equation: String,
    pub order: SeriesOrder,
}

/// A formal curve through the origin of a chart, with certified residuals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalArc {
    components: Vec<TruncatedSeries>,
    has_y: bool,
    residuals: Vec<Residual>,
}

impl FormalArc {
    /// Builds an arc and records the order to which each named equation
    /// vanishes along it. All equations must vanish through the common order
    /// bound, otherwise the arc is rejected.
    pub fn certify(
        components: Vec<TruncatedSeries>,
        has_y: bool,
        equations: &[(String, Polynomial)],
    ) -> Result<FormalArc, SeriesError> {
        let n = components.iter().map(|c| c.order_bound()).min().unwrap_or(0);
        let components: Vec<TruncatedSeries> = components.iter().map(|c| c.with_order_bound(n)).collect();
        let mut residuals = Vec::new();
        for (name, eq) in equations {
            let order = compose(eq, &components)?.order();
            if !order.certifies_at_least(n as u32 + 1) {
                return Err(SeriesError::NoConvergence(n as u32));
            }
            residuals.push(Residual { equation: name.clone(), order });
        }
        Ok(FormalArc { components, has_y, residuals })
    }

    pub fn components(&self) -> &[TruncatedSeries] {
        &self.components
    }

    pub fn z(&self) -> &[TruncatedSeries] {
        let n = self.components.len() - usize::from(self.has_y);
        &self.components[..n]
    }

    pub fn y(&self) -> Option<&TruncatedSeries> {
        self.has_y.then(|| self.components.last().unwrap())
    }

    pub fn order_bound(&self) -> usize {
        self.components[0].order_bound()
    }

    pub fn residuals(&self) -> &[Residual] {
        &self.residuals
    }
}

/// t-order of `D` along the arc; the zero polynomial has infinite order and
/// vanishing through the bound is reported as `AtLeast(N+1)`.
pub fn ord_along_arc(d: &Polynomial, arc: &FormalArc) -> Result<SeriesOrder, SeriesError> {
    if d.is_zero() {
        return Ok(SeriesOrder::Infinite);
    }
    Ok(compose(d, arc.components())?.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn qc(n: i64, d: i64) -> Coeff {
        Coeff::Rational(rat(n, d))
    }

    #[test]
    fn gamma_first_values() {
        let g = gamma_coefficients(2, 3).unwrap();
        assert_eq!(g.coefficients(), &[rat(1, 2), rat(-1, 8), rat(1, 16)]);
        let g = gamma_coefficients(3, 2).unwrap();
        assert_eq!(g.coefficients(), &[rat(1, 3), rat(-1, 9)]);
        assert_eq!(gamma_coefficients(1, 2), Err(SeriesError::InvalidRootIndex(1)));
    }

    #[test]
    fn phi_examples() {
        let r = PolyRing::numbered("z", 2, CoeffDomain::Rationals).unwrap();
        let (z1, z2) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let zero = Polynomial::zero(&r);
        let phis = phi_polynomials(&r, &[zero.clone(), zero.clone()], 2, 4).unwrap();
        assert!(phis.iter().all(Polynomial::is_zero));

        let phis = phi_polynomials(&r, &[z1.clone(), zero.clone()], 2, 2).unwrap();
        assert_eq!(phis[0], z1.scale(&qc(1, 2)));
        assert_eq!(phis[1], z1.pow(2).scale(&qc(-1, 8)));

        let phis = phi_polynomials(&r, &[z1.clone(), z2.pow(2)], 2, 2).unwrap();
        assert_eq!(phis[1], z2.pow(2).scale(&qc(1, 2)) - z1.pow(2).scale(&qc(1, 8)));

        assert_eq!(
            phi_polynomials(&r, &[z1.pow(2)], 2, 2),
            Err(SeriesError::NotHomogeneous { index: 1 })
        );
    }

    #[test]
    fn truncated_roots() {
        let r = PolyRing::numbered("z", 1, CoeffDomain::Rationals).unwrap();
        let z = Polynomial::var(&r, 0);
        let zero = Polynomial::zero(&r);
        assert_eq!(truncated_kth_root(&r, &[zero.clone(), zero], 3, 5).unwrap(), Polynomial::one(&r));
        let root = truncated_kth_root(&r, std::slice::from_ref(&z), 2, 1).unwrap();
        assert_eq!(root, Polynomial::one(&r) + z.scale(&qc(1, 2)));
        let defect = root.pow(2) - (Polynomial::one(&r) + z.clone());
        assert_eq!(defect.vanishing_order(&[qc(0, 1)]).unwrap(), Some(2));
        let cube = truncated_kth_root(&r, std::slice::from_ref(&z), 3, 2).unwrap();
        assert_eq!(cube, Polynomial::one(&r) + z.scale(&qc(1, 3)) - z.pow(2).scale(&qc(1, 9)));
    }

    #[test]
    fn truncate_f_sums_prefix() {
        let r = PolyRing::numbered("z", 3, CoeffDomain::Rationals).unwrap();
        let q: Vec<Polynomial> = (0..3).map(|i| Polynomial::var(&r, i).pow(i as u32 + 1)).collect();
        assert_eq!(truncate_f(&q, 1).unwrap(), q[0]);
        assert_eq!(truncate_f(&q, 2).unwrap(), &q[0] + &q[1]);
        assert!(truncate_f(&q, 4).is_err());
        assert!(truncate_f(&q, 0).is_err());
    }

    #[test]
    fn univariate_roots() {
        let d = CoeffDomain::Rationals;
        let one = TruncatedSeries::constant(d, d.one(), 4);
        assert_eq!(series_kth_root(&one, 2).unwrap(), one);
        let c = TruncatedSeries::from_i64s(d, &[1, 1], 3);
        let r = series_kth_root(&c, 2).unwrap();
        assert_eq!(r.coeffs(), &[qc(1, 1), qc(1, 2), qc(-1, 8), qc(1, 16)]);
        let c = TruncatedSeries::from_i64s(d, &[1, 0, 0, 1], 5);
        let r = series_kth_root(&c, 3).unwrap();
        assert_eq!(r, TruncatedSeries::from_coeffs(d, vec![qc(1, 1), qc(0, 1), qc(0, 1), qc(1, 3)], 5));
        assert_eq!(series_kth_root(&TruncatedSeries::from_i64s(d, &[2], 2), 2), Err(SeriesError::ConstantTermNotOne));
    }

    #[test]
    fn lifting_examples() {
        let r = PolyRing::numbered("z", 2, CoeffDomain::Rationals).unwrap();
        let d = r.domain();
        let (z1, z2) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let t = TruncatedSeries::t(d, 6);
        let f = &z1 + &z2.pow(2);
        let lifted = arc_lift(&f, 0, &[None, Some(t.clone())], 6).unwrap();
        assert_eq!(lifted, TruncatedSeries::from_i64s(d, &[0, 0, -1], 6));

        let lifted = arc_lift(&z1, 0, &[None, Some(t.clone())], 6).unwrap();
        assert_eq!(lifted, TruncatedSeries::zero(d, 6));

        // substituting z1 = -t^2 + a t^4 back gives (a - 1) t^4, so a = 1
        let f = &z1 - &z1.pow(2) + z2.pow(2);
        let lifted = arc_lift(&f, 0, &[None, Some(t.clone())], 5).unwrap();
        assert_eq!(&lifted.coeffs()[..5], TruncatedSeries::from_i64s(d, &[0, 0, -1, 0, 1], 4).coeffs());
        let residual = compose(&f, &[lifted, t.with_order_bound(5)]).unwrap();
        assert!(residual.order().certifies_at_least(6));

        assert_eq!(arc_lift(&z2.pow(2), 0, &[None, Some(t)], 4), Err(SeriesError::SingularDirection));
    }

    #[test]
    fn orders_along_arcs() {
        let r = PolyRing::new(["z1", "y"], CoeffDomain::Rationals).unwrap();
        let d = r.domain();
        let (z1, y) = (Polynomial::var(&r, 0), Polynomial::var(&r, 1));
        let n = 6;
        let zt = TruncatedSeries::t(d, n);
        let yt = series_kth_root(&TruncatedSeries::from_i64s(d, &[1, 1], n), 2).unwrap();
        let cover = y.pow(2) - (Polynomial::one(&r) + z1.clone());
        let arc = FormalArc::certify(vec![zt, yt], true, &[("cover".into(), cover)]).unwrap();
        let member = &y - &(Polynomial::one(&r) + z1.scale(&qc(1, 2)));
        assert_eq!(ord_along_arc(&member, &arc).unwrap(), SeriesOrder::Exact(2));
        assert_eq!(ord_along_arc(&Polynomial::one(&r), &arc).unwrap(), SeriesOrder::Exact(0));
        assert_eq!(ord_along_arc(&Polynomial::zero(&r), &arc).unwrap(), SeriesOrder::Infinite);

        let sq = TruncatedSeries::from_i64s(d, &[0, 0, 1], n);
        let arc = FormalArc::certify(vec![sq, TruncatedSeries::zero(d, n)], false, &[]).unwrap();
        assert_eq!(ord_along_arc(&z1, &arc).unwrap(), SeriesOrder::Exact(2));
        assert_eq!(ord_along_arc(&y, &arc).unwrap(), SeriesOrder::AtLeast(7));
    }
}
