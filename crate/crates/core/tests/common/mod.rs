//! Shared fixtures: a catalog of hand-decomposed ideals, random polynomial
//! generators and independent oracles.
#![allow(dead_code)]

use fanocert::cli::parser::parse_polynomial;
use fanocert::poly::{Coeff, CoeffDomain, PolyRing, Polynomial, RingRef};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Expected verdict of the regularity certifier on a catalog sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expected {
    Regular,
    RefutedAt(usize),
}

/// An ideal over `Q` with its affine dimension and the verdict of its
/// generators read as an ordered sequence at the origin, both worked out by
/// hand from a primary decomposition.
pub struct CatalogEntry {
    pub name: &'static str,
    pub vars: usize,
    pub gens: &'static [&'static str],
    pub dimension: i64,
    pub verdict: Expected,
}

pub const CATALOG: &[CatalogEntry] = &[
    // the coordinate sequence
    CatalogEntry { name: "z1,z2,z3 in A^4", vars: 4, gens: &["z1", "z2", "z3"], dimension: 1, verdict: Expected::Regular },
    // z1*z2 lies in (z1)
    CatalogEntry { name: "z1, z1z2", vars: 2, gens: &["z1", "z1*z2"], dimension: 1, verdict: Expected::RefutedAt(2) },
    // {z1 = 0} u {z2 = z3 = 0}
    CatalogEntry { name: "z1z2, z1z3", vars: 3, gens: &["z1*z2", "z1*z3"], dimension: 2, verdict: Expected::RefutedAt(2) },
    CatalogEntry { name: "z1^2, z2^2", vars: 2, gens: &["z1^2", "z2^2"], dimension: 0, verdict: Expected::Regular },
    CatalogEntry { name: "z1z2", vars: 3, gens: &["z1*z2"], dimension: 2, verdict: Expected::Regular },
    // the axes of the plane
    CatalogEntry { name: "z1^2z2, z1z2^2", vars: 2, gens: &["z1^2*z2", "z1*z2^2"], dimension: 1, verdict: Expected::RefutedAt(2) },
    // z-axis u twisted cubic, both curves
    CatalogEntry { name: "xz - y^2, y - x^2", vars: 3, gens: &["z1*z3 - z2^2", "z2 - z1^2"], dimension: 1, verdict: Expected::Regular },
    // elementary symmetric functions: only the origin
    CatalogEntry {
        name: "e1, e2, e3",
        vars: 3,
        gens: &["z1 + z2 + z3", "z1*z2 + z1*z3 + z2*z3", "z1*z2*z3"],
        dimension: 0,
        verdict: Expected::Regular,
    },
    // two points, (0,0) and (1,0)
    CatalogEntry { name: "z1(z1 - 1), z2", vars: 2, gens: &["z1^2 - z1", "z2"], dimension: 0, verdict: Expected::Regular },
    // cusp then a line through it
    CatalogEntry { name: "cusp, z1", vars: 2, gens: &["z2^2 - z1^3", "z1"], dimension: 0, verdict: Expected::Regular },
    // the plane z3 = 0 (with an embedded point); {z3 = 0} u {z1 = z2 = 0} after two steps
    CatalogEntry { name: "z1z3, z2z3, z3^2", vars: 3, gens: &["z1*z3", "z2*z3", "z3^2"], dimension: 2, verdict: Expected::RefutedAt(2) },
    // cone over the twisted cubic; the first two minors cut it plus the plane z1 = z2 = 0
    CatalogEntry {
        name: "twisted cubic cone",
        vars: 4,
        gens: &["z1*z3 - z2^2", "z1*z4 - z2*z3", "z2*z4 - z3^2"],
        dimension: 2,
        verdict: Expected::RefutedAt(3),
    },
    // a quadric cone cut by a hyperplane
    CatalogEntry { name: "z1z4 - z2z3, z1+z2+z3+z4", vars: 4, gens: &["z1*z4 - z2*z3", "z1 + z2 + z3 + z4"], dimension: 2, verdict: Expected::Regular },
    // a repeated generator is a zero divisor
    CatalogEntry { name: "z1 - z2 twice", vars: 2, gens: &["z1 - z2", "z1 - z2"], dimension: 1, verdict: Expected::RefutedAt(2) },
    // the origin plus other points: (z1 - z2^2, z2 - z3^2, z3 - z1^2)
    CatalogEntry {
        name: "cyclic squares",
        vars: 3,
        gens: &["z1 - z2^2", "z2 - z3^2", "z3 - z1^2"],
        dimension: 0,
        verdict: Expected::Regular,
    },
    // (z1, z2^2) then a generator already in the ideal
    CatalogEntry { name: "z1, z2^2, z1z3", vars: 3, gens: &["z1", "z2^2", "z1*z3"], dimension: 1, verdict: Expected::RefutedAt(3) },
];

pub fn rationals_ring(n: usize) -> RingRef {
    PolyRing::numbered("z", n, CoeffDomain::Rationals).unwrap()
}

pub fn catalog_generators(entry: &CatalogEntry) -> (RingRef, Vec<Polynomial>) {
    let ring = rationals_ring(entry.vars);
    let gens = entry.gens.iter().map(|g| parse_polynomial(g, &ring).unwrap()).collect();
    (ring, gens)
}

/// A random invertible integer matrix (entries in [-3, 3]), rows as
/// images of the variables.
pub fn random_linear_change(ring: &RingRef, rng: &mut ChaCha8Rng) -> Vec<Polynomial> {
    let n = ring.nvars();
    let domain = ring.domain();
    loop {
        let a: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        if integer_determinant(&a) == 0 {
            continue;
        }
        return a
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(j, &c)| Polynomial::var(ring, j).scale(&domain.from_i64(c)))
                    .sum()
            })
            .collect();
    }
}

/// Exact determinant by cofactor expansion (fine for n <= 5).
pub fn integer_determinant(a: &[Vec<i64>]) -> i64 {
    let n = a.len();
    if n == 1 {
        return a[0][0];
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i64>> =
                a[1..].iter().map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, &v)| v).collect()).collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * a[0][j] * integer_determinant(&minor)
        })
        .sum()
}

/// A random polynomial with up to `max_terms` terms, exponents up to
/// `max_exp` and small rational (or residue) coefficients.
pub fn random_polynomial(ring: &RingRef, rng: &mut ChaCha8Rng, max_terms: usize, max_exp: u32) -> Polynomial {
    let domain = ring.domain();
    let n = ring.nvars();
    let count = rng.gen_range(0..=max_terms);
    let terms: Vec<(Vec<u32>, Coeff)> = (0..count)
        .map(|_| {
            let exps = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
            let num: i64 = rng.gen_range(-20..=20);
            let den: i64 = rng.gen_range(1..=6);
            let c = domain.from_rational(&BigRational::new(BigInt::from(num), BigInt::from(den))).unwrap_or_else(|_| domain.from_i64(num));
            (exps, c)
        })
        .collect();
    Polynomial::from_terms(ring, terms)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `χ(1..M-3)` read off as the sorted multiset of the elements `>= 3` of
/// `{1..m-1}` and `{l..Kl-2}`.
pub fn chi_oracle(m: u32, l: u32, k: u32) -> Vec<u32> {
    let mut all: Vec<u32> = (3..m).chain(l.max(3)..=k * l - 2).collect();
    all.sort_unstable();
    all
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
