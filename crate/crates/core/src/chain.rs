//! Exact bookkeeping for the multiplicity/degree chain.
//!
//! In the main case (`l ≥ 3`, `m ≤ Kl`) the levels of the hypertangent
//! systems used along the chain are scheduled by the index sets
//! `𝓜 = {1, …, m−1}` and `𝓛 = {l, …, Kl−2}`: the counter
//! `c_e = #([3,e] ∩ 𝓜) + #([3,e] ∩ 𝓛)` and the ordering function `χ`, with
//! `χ(i) = e` for `c_{e−1} < i ≤ c_e`. Each step multiplies the
//! mult/deg ratio by `(χ+1)/χ`, and the product telescopes to
//! `(m/3)·((Kl−1)/l)`. On the ramification divisor the chain is
//! `∏_{j=3}^{m} j/(j−1) · ∏_{j=3}^{K} j/(j−1) = mK/4`.
//!
//! Everything here is exact rational arithmetic.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::cover::CoverFamily;
use crate::poly::rational_string;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("unsupported case {family}: {reason}")]
    Unsupported { family: String, reason: String },
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn ser_rational<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rational_string(v))
}

/// `𝓜`, `𝓛`, the counters `c_e` and the ordering function `χ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderingTable {
    pub family: CoverFamily,
    pub m_set: Vec<u32>,
    pub l_set: Vec<u32>,
    /// `c_e` for `e = 2, …, max(m−1, Kl−2)`.
    pub counters: BTreeMap<u32, u32>,
    /// `χ(1), …, χ(M−3)`.
    pub chi: Vec<u32>,
}

fn main_case_guard(family: &CoverFamily) -> Result<(), ChainError> {
    let (m, l, kl) = (family.base_degree(), family.root_weight(), family.branch_degree());
    let reason = if l < 3 {
        Some(format!("l = {l} < 3; the l = 2 case has no explicit index sets"))
    } else if m > kl {
        Some(format!("m = {m} > Kl = {kl}; the m ≥ Kl case has no explicit index sets"))
    } else if m < 3 {
        Some(format!("m = {m} < 3 leaves too few levels in 1..m-1 for the chain"))
    } else {
        None
    };
    match reason {
        Some(reason) => Err(ChainError::Unsupported { family: family.to_string(), reason }),
        None => Ok(()),
    }
}

impl OrderingTable {
    /// `c_e`, zero below the table and `M − 3` above it.
    pub fn counter(&self, e: u32) -> u32 {
        if e <= 2 {
            return 0;
        }
        let top = *self.counters.keys().next_back().expect("nonempty");
        self.counters[&e.min(top)]
    }

    /// `χ(i)` for `1 ≤ i ≤ M − 3`.
    pub fn chi_at(&self, i: usize) -> u32 {
        self.chi[i - 1]
    }
}

pub fn ordering_table(family: &CoverFamily) -> Result<OrderingTable, ChainError> {
    main_case_guard(family)?;
    let (m, l, kl) = (family.base_degree(), family.root_weight(), family.branch_degree());
    let m_set: Vec<u32> = (1..m).collect();
    let l_set: Vec<u32> = (l..=kl - 2).collect();
    let top = (m - 1).max(kl - 2);
    let counters: BTreeMap<u32, u32> = (2..=top)
        .map(|e| {
            let in_range = |x: &&u32| (3..=e).contains(*x);
            (e, (m_set.iter().filter(in_range).count() + l_set.iter().filter(in_range).count()) as u32)
        })
        .collect();
    let len = family.dimension() - 3;
    let chi: Vec<u32> = (1..=len)
        .map(|i| {
            (3..=top)
                .find(|&e| counters[&(e - 1)] < i && i <= counters[&e])
                .expect("counters reach M - 3")
        })
        .collect();
    debug_assert_eq!(counters[&top], len);
    Ok(OrderingTable { family: *family, m_set, l_set, counters, chi })
}

/// `∏_{j=a}^{b} j/(j−1)` computed factor by factor, with its closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TelescopingProduct {
    pub a: u32,
    pub b: u32,
    #[serde(serialize_with = "ser_rational")]
    pub literal: BigRational,
    /// `b/(a−1)`, or 1 for the empty product.
    #[serde(serialize_with = "ser_rational")]
    pub closed_form: BigRational,
}

/// # Panics
/// If `a < 2`.
pub fn telescoping_product(a: u32, b: u32) -> TelescopingProduct {
    assert!(a >= 2, "telescoping products start at a >= 2");
    let literal = (a..=b).fold(BigRational::one(), |acc, j| acc * q(j as i64, j as i64 - 1));
    let closed_form = if a > b { BigRational::one() } else { q(b as i64, a as i64 - 1) };
    TelescopingProduct { a, b, literal, closed_form }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BoundCase {
    /// Off the ramification divisor, `l ≥ 3`, `m ≤ Kl`.
    MainCase,
    RamifiedCase,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BoundVerdict {
    StrictlyBelow,
    Equal,
    Above,
}

impl fmt::Display for BoundVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A product chain and the bound it gives on mult/deg, compared with
/// `4/deg V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCertificate {
    pub case: BoundCase,
    /// `(M, m, l, K)`.
    pub parameters: [u32; 4],
    /// The factors of the chain in order.
    pub factors: Vec<String>,
    #[serde(serialize_with = "ser_rational")]
    pub product: BigRational,
    #[serde(serialize_with = "ser_rational")]
    pub closed_form: BigRational,
    /// `4/(mK)`.
    #[serde(serialize_with = "ser_rational")]
    pub threshold: BigRational,
    /// `1/product`, the resulting upper bound for mult/deg.
    #[serde(serialize_with = "ser_rational")]
    pub bound: BigRational,
    pub verdict: BoundVerdict,
    /// `threshold − bound`.
    #[serde(serialize_with = "ser_rational")]
    pub margin: BigRational,
    /// Why the verdict holds, in closed form.
    pub criterion: String,
}

impl BoundCertificate {
    fn new(
        case: BoundCase,
        parameters: [u32; 4],
        factors: Vec<BigRational>,
        closed_form: BigRational,
        criterion: String,
    ) -> Self {
        let product = factors.iter().fold(BigRational::one(), |acc, f| acc * f);
        assert_eq!(product, closed_form, "literal product must match its closed form");
        let [_, m, _, k] = parameters;
        let threshold = q(4, (m * k) as i64);
        let bound = product.recip();
        let margin = &threshold - &bound;
        let verdict = if margin.is_positive() {
            BoundVerdict::StrictlyBelow
        } else if margin.is_zero() {
            BoundVerdict::Equal
        } else {
            BoundVerdict::Above
        };
        BoundCertificate {
            case,
            parameters,
            factors: factors.iter().map(rational_string).collect(),
            product,
            closed_form,
            threshold,
            bound,
            verdict,
            margin,
            criterion,
        }
    }
}

/// The χ-ordered chain `∏_{i=2}^{M−2} (χ(i−1)+1)/χ(i−1)` and the bound
/// `(1/(mK))·(3Kl/(Kl−1))`, below `4/(mK)` exactly when `Kl ≥ 5`.
pub fn main_case_bound(family: &CoverFamily) -> Result<BoundCertificate, ChainError> {
    let table = ordering_table(family)?;
    let (m, l, k) = (family.base_degree(), family.root_weight(), family.sheets());
    let kl = (k * l) as i64;
    let factors: Vec<BigRational> = (2..=family.dimension() as usize - 2)
        .map(|i| {
            let c = table.chi_at(i - 1) as i64;
            q(c + 1, c)
        })
        .collect();
    let closed = q(m as i64, 3) * q(kl - 1, l as i64);
    let criterion = format!("3Kl/(Kl-1) < 4 iff Kl >= 5; here Kl = {kl}");
    Ok(BoundCertificate::new(BoundCase::MainCase, [family.dimension(), m, l, k], factors, closed, criterion))
}

/// The main-case estimate from its closed form alone, for parameters that
/// need not form a valid family (for instance `Kl = 4`, where the bound
/// meets the threshold).
pub fn main_case_estimate(m: u32, l: u32, k: u32) -> BoundCertificate {
    let kl = (k * l) as i64;
    let closed = q(m as i64, 3) * q(kl - 1, l as i64);
    let dimension = (m + (k - 1) * l).saturating_sub(1);
    let criterion = format!("3Kl/(Kl-1) < 4 iff Kl >= 5; here Kl = {kl}");
    BoundCertificate::new(BoundCase::MainCase, [dimension, m, l, k], vec![closed.clone()], closed, criterion)
}

/// `∏_{j=3}^{m} j/(j−1) · ∏_{j=3}^{K} j/(j−1) = mK/4`, so the bound equals
/// the threshold.
pub fn ramified_case_bound(family: &CoverFamily) -> Result<BoundCertificate, ChainError> {
    let (m, k) = (family.base_degree(), family.sheets());
    if m < 2 {
        return Err(ChainError::Unsupported {
            family: family.to_string(),
            reason: format!("m = {m}: the block 3/2 ... m/(m-1) only telescopes to m/2 for m >= 2"),
        });
    }
    let factors: Vec<BigRational> =
        (3..=m).chain(3..=k).map(|j| q(j as i64, j as i64 - 1)).collect();
    let blocks = telescoping_product(3, m).closed_form * telescoping_product(3, k).closed_form;
    assert_eq!(blocks, q((m * k) as i64, 4));
    Ok(BoundCertificate::new(
        BoundCase::RamifiedCase,
        [family.dimension(), m, family.root_weight(), k],
        factors,
        blocks,
        "the product is mK/4, so the bound is 4/(mK): equality at the threshold".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::validate_family;

    #[test]
    fn table_example() {
        let fam = validate_family(7, 5, 3, 2).unwrap();
        let t = ordering_table(&fam).unwrap();
        assert_eq!(t.m_set, vec![1, 2, 3, 4]);
        assert_eq!(t.l_set, vec![3, 4]);
        assert_eq!(t.counter(2), 0);
        assert_eq!(t.counter(3), 2);
        assert_eq!(t.counter(4), 4);
        assert_eq!(t.chi, vec![3, 3, 4, 4]);
    }

    #[test]
    fn telescoping_examples() {
        let t = telescoping_product(3, 5);
        assert_eq!(t.literal, q(5, 2));
        assert_eq!(t.closed_form, q(5, 2));
        let t = telescoping_product(4, 5);
        assert_eq!(&t.literal * &t.literal, q(25, 9));
        assert_eq!(telescoping_product(6, 5).literal, BigRational::one());
    }

    #[test]
    fn main_case_example() {
        let fam = validate_family(7, 5, 3, 2).unwrap();
        let c = main_case_bound(&fam).unwrap();
        assert_eq!(c.product, q(25, 9));
        assert_eq!(c.bound, q(9, 25));
        assert_eq!(c.threshold, q(2, 5));
        assert_eq!(c.margin, q(1, 25));
        assert_eq!(c.verdict, BoundVerdict::StrictlyBelow);
        assert_eq!(main_case_estimate(4, 2, 2).verdict, BoundVerdict::Equal);
    }

    #[test]
    fn unsupported_cases() {
        // l = 2
        assert!(ordering_table(&validate_family(5, 4, 2, 2).unwrap()).is_err());
        // m > Kl
        assert!(ordering_table(&validate_family(9, 7, 3, 2).unwrap()).is_err());
        // m < 3
        assert!(ordering_table(&validate_family(5, 1, 5, 2).unwrap()).is_err());
        assert!(ramified_case_bound(&validate_family(5, 1, 5, 2).unwrap()).is_err());
    }

    #[test]
    fn ramified_examples() {
        let c = ramified_case_bound(&validate_family(5, 5, 1, 2).unwrap()).unwrap();
        assert_eq!(c.product, q(5, 2));
        assert_eq!(c.verdict, BoundVerdict::Equal);
        let c = ramified_case_bound(&validate_family(5, 4, 1, 3).unwrap()).unwrap();
        assert_eq!(c.product, q(3, 1));
    }
}
