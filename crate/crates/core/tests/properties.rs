//! Algebraic invariants checked on random inputs.

mod common;

use common::{chi_oracle, q};
use fanocert::chain::{main_case_bound, ordering_table, ramified_case_bound, telescoping_product};
use fanocert::cli::parser::parse_polynomial;
use fanocert::cover::validate_family;
use fanocert::poly::{Coeff, CoeffDomain, PolyRing, Polynomial, RingRef};
use fanocert::regseq::{ideal_dimension, GroebnerOptions, IdealPresentation};
use fanocert::series::{series_kth_root, TruncatedSeries};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

const NVARS: usize = 3;

fn term() -> impl Strategy<Value = (Vec<u32>, i64, i64)> {
    (prop::collection::vec(0u32..4, NVARS), -30i64..=30, 1i64..=5)
}

fn poly_in(ring: RingRef) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(term(), 0..7).prop_map(move |terms| {
        let domain = ring.domain();
        Polynomial::from_terms(
            &ring,
            terms.into_iter().map(|(e, n, d)| {
                let c = domain.from_rational(&BigRational::new(BigInt::from(n), BigInt::from(d))).unwrap();
                (e, c)
            }),
        )
    })
}

fn q_ring() -> RingRef {
    PolyRing::new(["x", "y", "z"], CoeffDomain::Rationals).unwrap()
}

fn fp_ring() -> RingRef {
    PolyRing::new(["x", "y", "z"], CoeffDomain::prime_field(1_000_003).unwrap()).unwrap()
}

fn point(domain: CoeffDomain) -> impl Strategy<Value = Vec<Coeff>> {
    prop::collection::vec(-5i64..=5, NVARS).prop_map(move |v| v.into_iter().map(|c| domain.from_i64(c)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms_over_q(a in poly_in(q_ring()), b in poly_in(q_ring()), c in poly_in(q_ring())) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(&q_ring()), a.clone());
    }

    #[test]
    fn ring_axioms_over_fp(a in poly_in(fp_ring()), b in poly_in(fp_ring()), c in poly_in(fp_ring())) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &(-&a), Polynomial::zero(&fp_ring()));
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly_in(q_ring()), b in poly_in(q_ring()), p in point(CoeffDomain::Rationals)) {
        let d = CoeffDomain::Rationals;
        let (ea, eb) = (a.eval(&p).unwrap(), b.eval(&p).unwrap());
        prop_assert_eq!((&a * &b).eval(&p).unwrap(), d.mul(&ea, &eb));
        prop_assert_eq!((&a + &b).eval(&p).unwrap(), d.add(&ea, &eb));
    }

    #[test]
    fn homogeneous_components_sum_back(a in poly_in(q_ring())) {
        let parts = a.homogeneous_components();
        for (deg, part) in &parts {
            prop_assert!(part.is_homogeneous());
            prop_assert_eq!(part.degree(), Some(*deg));
        }
        let total = parts.into_values().fold(Polynomial::zero(&q_ring()), |acc, p| acc + p);
        prop_assert_eq!(total, a);
    }

    #[test]
    fn vanishing_orders_add(a in poly_in(q_ring()), b in poly_in(q_ring()), p in point(CoeffDomain::Rationals)) {
        let oa = a.vanishing_order(&p).unwrap();
        let ob = b.vanishing_order(&p).unwrap();
        let expected = match (oa, ob) {
            (Some(x), Some(y)) => Some(x + y),
            _ => None,
        };
        prop_assert_eq!((&a * &b).vanishing_order(&p).unwrap(), expected);
    }

    #[test]
    fn translation_round_trip(a in poly_in(q_ring()), p in point(CoeffDomain::Rationals)) {
        let d = CoeffDomain::Rationals;
        let minus: Vec<Coeff> = p.iter().map(|c| d.neg(c)).collect();
        prop_assert_eq!(a.translate_origin(&p).unwrap().translate_origin(&minus).unwrap(), a.clone());
        let origin = vec![d.zero(); NVARS];
        prop_assert_eq!(a.translate_origin(&p).unwrap().eval(&origin).unwrap(), a.eval(&p).unwrap());
    }

    #[test]
    fn parse_print_round_trip_q(a in poly_in(q_ring())) {
        prop_assert_eq!(parse_polynomial(&a.to_string(), &q_ring()).unwrap(), a);
    }

    #[test]
    fn parse_print_round_trip_fp(a in poly_in(fp_ring())) {
        prop_assert_eq!(parse_polynomial(&a.to_string(), &fp_ring()).unwrap(), a);
    }

    #[test]
    fn series_roots_invert_powers(k in 2u32..6, tail in prop::collection::vec(-9i64..=9, 1..10)) {
        let n = tail.len() + 2;
        let mut coeffs = vec![1i64];
        coeffs.extend(tail);
        let s = TruncatedSeries::from_i64s(CoeffDomain::Rationals, &coeffs, n);
        let r = series_kth_root(&s, k).unwrap();
        prop_assert_eq!(r.pow(k).coeffs().to_vec(), s.coeffs().to_vec());
        let inv = s.inverse().unwrap();
        let one = TruncatedSeries::constant(CoeffDomain::Rationals, CoeffDomain::Rationals.one(), n);
        prop_assert_eq!(s.mul(&inv).coeffs().to_vec(), one.coeffs().to_vec());
    }

    #[test]
    fn telescoping_closed_form(a in 2u32..=10_000, len in 0u32..200) {
        let b = (a + len).min(10_000);
        let t = telescoping_product(a, b);
        prop_assert_eq!(&t.literal, &q(b as i64, a as i64 - 1));
        prop_assert_eq!(t.literal, t.closed_form);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dimension_is_invariant_under_linear_changes(seed in any::<u64>(), idx in 0usize..common::CATALOG.len()) {
        let entry = &common::CATALOG[idx];
        let (ring, gens) = common::catalog_generators(entry);
        let images = common::random_linear_change(&ring, &mut common::rng(seed));
        let moved: Vec<Polynomial> = gens.iter().map(|g| g.substitute(&images).unwrap()).collect();
        let opts = GroebnerOptions::default();
        let dim = ideal_dimension(&IdealPresentation::new(&ring, moved).unwrap(), &opts).unwrap();
        prop_assert_eq!(dim, entry.dimension);
    }
}

#[test]
fn chain_identities_for_small_families() {
    let mut checked = 0;
    for dim in 5..=25u32 {
        for k in 2..=6u32 {
            for l in 3..=dim {
                let Some(m) = (dim + 1).checked_sub((k - 1) * l) else { continue };
                if m < 3 || m > k * l {
                    continue;
                }
                let family = validate_family(dim, m, l, k).unwrap();
                let table = ordering_table(&family).unwrap();
                assert_eq!(table.chi, chi_oracle(m, l, k), "{family}");
                let literal = table.chi.iter().fold(q(1, 1), |acc, &c| acc * q(c as i64 + 1, c as i64));
                let closed = q(m as i64, 3) * q((k * l) as i64 - 1, l as i64);
                assert_eq!(literal, closed, "{family}");
                let cert = main_case_bound(&family).unwrap();
                assert_eq!(cert.product, closed);
                let ramified = ramified_case_bound(&family).unwrap();
                assert_eq!(ramified.product, q((m * k) as i64, 4));
                checked += 1;
            }
        }
    }
    assert!(checked > 20);
}

#[test]
fn chi_repeats_at_most_twice() {
    for (m, l, k) in [(4, 3, 2), (6, 3, 2), (5, 4, 3), (12, 3, 4)] {
        let chi = chi_oracle(m, l, k);
        for w in chi.windows(3) {
            assert!(!(w[0] == w[1] && w[1] == w[2]));
        }
        assert!(chi.windows(2).all(|w| w[0] <= w[1]));
    }
}
