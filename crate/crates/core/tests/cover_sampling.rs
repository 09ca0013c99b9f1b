//! Point sampling, localization and the per-point sequences on random
//! instances over prime fields.

use fanocert::cover::{
    check_prime, default_prime, formal_arcs, hypertangent_member, hypertangent_multiplicity_check, lemma2_check,
    localize, regularity_sequence, sample_point_on_branch, sample_point_on_q, smooth_at, validate_family, Branch,
    CaseTag, CoverInstance, ProjectivePoint,
};
use fanocert::poly::CoeffDomain;

fn random_instance(dim: u32, m: u32, l: u32, k: u32, p: u64, trial: u64) -> CoverInstance {
    let family = validate_family(dim, m, l, k).unwrap();
    CoverInstance::random(family, CoeffDomain::prime_field(p).unwrap(), 99, trial)
}

fn on_q(instance: &CoverInstance, point: &ProjectivePoint) -> bool {
    instance.f().eval(point.coords()).unwrap().is_zero()
}

fn on_branch(instance: &CoverInstance, point: &ProjectivePoint) -> bool {
    instance.g().unwrap().eval(point.coords()).unwrap().is_zero()
}

#[test]
fn off_branch_points_lie_on_q_away_from_the_branch_locus() {
    let p = default_prime(2);
    for trial in 0..4 {
        let instance = random_instance(5, 4, 2, 2, p, trial);
        for seed in 0..3 {
            let point = sample_point_on_q(&instance, seed, p, true).unwrap();
            assert!(on_q(&instance, &point));
            assert!(!on_branch(&instance, &point));
            assert_eq!(point, sample_point_on_q(&instance, seed, p, true).unwrap());
            let chart = localize(&instance, &point).unwrap();
            assert_eq!(chart.branch(), Branch::Off);
            assert!(chart.w()[0].is_constant() && chart.w()[0].constant_term().is_one());
        }
    }
}

#[test]
fn branch_points_lie_on_both_hypersurfaces() {
    let p = default_prime(2);
    for trial in 0..4 {
        let instance = random_instance(5, 4, 2, 2, p, trial);
        let point = sample_point_on_branch(&instance, trial, p).unwrap();
        assert!(on_q(&instance, &point) && on_branch(&instance, &point));
        let chart = localize(&instance, &point).unwrap();
        assert_eq!(chart.branch(), Branch::On);
        assert!(chart.w()[0].is_zero());
    }
}

#[test]
fn small_primes_use_exhaustive_search() {
    let p = 11;
    let instance = random_instance(5, 4, 2, 2, p, 0);
    let point = sample_point_on_branch(&instance, 5, p).unwrap();
    assert!(on_q(&instance, &point) && on_branch(&instance, &point));
    let off = sample_point_on_q(&instance, 5, p, true).unwrap();
    assert!(on_q(&instance, &off) && !on_branch(&instance, &off));
}

#[test]
fn primes_must_admit_kth_roots_of_unity() {
    assert!(check_prime(11, 3).is_err());
    assert!(check_prime(13, 3).is_ok());
    assert!(check_prime(15, 2).is_err());
    let p = default_prime(3);
    assert!(p >= 1_000_003 && p % 3 == 1);
}

#[test]
fn sequence_shapes_follow_the_case() {
    let p = default_prime(2);
    let instance = random_instance(5, 4, 2, 2, p, 1);
    let off = localize(&instance, &sample_point_on_q(&instance, 1, p, true).unwrap()).unwrap();
    let case = regularity_sequence(&off).unwrap();
    assert_eq!(case.tag, CaseTag::R1a);
    assert_eq!(case.labels, ["q_1", "q_2", "q_3", "q_4", "Phi_3"]);

    let on = localize(&instance, &sample_point_on_branch(&instance, 1, p).unwrap()).unwrap();
    let case = regularity_sequence(&on).unwrap();
    assert_eq!(case.tag, CaseTag::R2);
    assert_eq!(case.labels, ["q_1", "q_2", "q_3", "q_4", "w_1", "w_2"]);

    // m = 5 >= Kl + 1 = 3
    let wide = random_instance(5, 5, 1, 2, p, 0);
    let chart = localize(&wide, &sample_point_on_q(&wide, 2, p, true).unwrap()).unwrap();
    let case = regularity_sequence(&chart).unwrap();
    assert_eq!(case.tag, CaseTag::R1b);
    assert_eq!(case.labels.last().map(String::as_str), Some("Phi_2"));
    assert_eq!(case.sequence.len(), 5);
}

#[test]
fn hypertangent_members_and_branch_truncations_vanish_to_order() {
    let p = default_prime(3);
    // M = 6: m + 2l = 7 with m = 3, l = 2 and K = 3
    let instance = random_instance(6, 3, 2, 3, p, 0);
    let chart = localize(&instance, &sample_point_on_q(&instance, 3, p, true).unwrap()).unwrap();
    assert!(smooth_at(&chart));
    let top = chart.family().max_hypertangent_level();
    let arcs = formal_arcs(&chart, 4, 2 * top as usize + 2, 17).unwrap();
    for level in 1..=top {
        let member = hypertangent_member(&chart, level, level as u64).unwrap();
        assert_eq!(member.s.len(), level as usize);
        let report = hypertangent_multiplicity_check(&chart, &member, &arcs).unwrap();
        assert!(report.all_pass(), "{report:?}");
    }

    let on = localize(&instance, &sample_point_on_branch(&instance, 4, p).unwrap()).unwrap();
    let arcs = formal_arcs(&on, 4, 8, 21).unwrap();
    for k in 1..3 {
        let report = lemma2_check(&on, k, &arcs).unwrap();
        assert!(report.all_pass(), "{report:?}");
    }
}
