mod common;

use acso::gradedring::RingElement;
use acso::obstruct::{
    acs_verdict, chern_candidate, chern_square_class, construct_w4m_lift, evaluate_candidate,
    homotopy_group, integral_sw, stable_homotopy_group, Status,
};
use acso::BigInt;
use common::{corpus, random_element, random_lifts};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn coefficient_maps_commute_on_corpus_bases() {
    let two = BigInt::from(2);
    for (file, s) in corpus() {
        let r = s.bundle.rings();
        for deg in 0..=r.cutoff() {
            for x in r.integral().basis_elements(deg).unwrap() {
                let lhs = r.theta2(&r.rho2(&x).unwrap()).unwrap();
                let rhs = r.rho4(&r.integral().scale(&two, &x).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "{file}: theta2 rho2 in degree {deg}");
                assert_eq!(
                    r.rho2_4(&r.rho4(&x).unwrap()).unwrap(),
                    r.rho2(&x).unwrap(),
                    "{file}: rho2_4 rho4"
                );
            }
        }
    }
}

#[test]
fn pontryagin_square_ignores_the_lift() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    for (file, s) in corpus() {
        let r = s.bundle.rings();
        let z = r.integral();
        let mut classes: Vec<RingElement> = Vec::new();
        for deg in (2..=r.cutoff() / 2).step_by(2) {
            classes.extend(r.mod2().basis_elements(deg).unwrap());
            classes.extend(s.bundle.w(deg).ok().cloned());
        }
        for u in classes {
            let Some(base) = r.solve_lift(&u).unwrap() else {
                continue;
            };
            let want = r.pontryagin_square(&u).unwrap();
            for _ in 0..50 {
                let v = random_element(z, u.degree(), 5, &mut rng);
                let lift = z
                    .add(&base, &z.scale(&BigInt::from(2), &v).unwrap())
                    .unwrap();
                assert_eq!(r.rho2(&lift).unwrap(), u);
                assert_eq!(
                    r.pontryagin_square_with_lift(&lift).unwrap(),
                    want,
                    "{file}"
                );
                checked += 1;
            }
        }
    }
    assert!(checked >= 500);
}

#[test]
fn chern_square_class_reduces_to_zero_mod_four() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut bundles = 0;
    for (file, s) in corpus() {
        let d = &s.bundle;
        let k = match d.rank() {
            4 => 1,
            6 if d.cutoff() >= 8 => 2,
            r if r % 4 == 0 => r / 4,
            _ => continue,
        };
        bundles += 1;
        for _ in 0..100 {
            let Some(c) = random_lifts(d, d.n() - 1, &mut rng) else {
                break;
            };
            let cand = chern_candidate(d, &c[1..]).unwrap();
            let q = chern_square_class(d, &cand, k).unwrap_or_else(|e| panic!("{file}: {e}"));
            assert!(d.rings().rho4(&q).unwrap().is_zero());
        }
    }
    assert!(bundles >= 6);
}

#[test]
fn constructed_lift_reduces_to_w4m() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut built = 0;
    for (file, s) in corpus() {
        let d = &s.bundle;
        let mut m = 1;
        while 4 * m <= d.cutoff() && 2 * m <= d.rank() {
            for _ in 0..20 {
                let Some(c) = random_lifts(d, 2 * m - 1, &mut rng) else {
                    break;
                };
                let z =
                    construct_w4m_lift(d, m, &c).unwrap_or_else(|e| panic!("{file}, m = {m}: {e}"));
                assert_eq!(
                    d.rings().rho2(&z).unwrap(),
                    *d.w(4 * m).unwrap(),
                    "{file}, m = {m}"
                );
                built += 1;
            }
            m += 1;
        }
    }
    assert!(built > 0);
}

#[test]
fn odd_integral_classes_have_order_two() {
    let two = BigInt::from(2);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (file, s) in corpus() {
        let d = &s.bundle;
        let z = d.rings().integral();
        for i in 1..=(d.cutoff() - 1) / 2 {
            let w = integral_sw(d, i).unwrap();
            assert!(
                z.scale(&two, &w).unwrap().is_zero(),
                "{file}: 2W{}",
                2 * i + 1
            );
        }
        for deg in 0..d.cutoff() {
            for _ in 0..10 {
                let x = random_element(d.rings().mod2(), deg, 1, &mut rng);
                let b = d.rings().beta(&x).unwrap();
                assert!(z.scale(&two, &b).unwrap().is_zero());
                assert_eq!(z.neg(&b).unwrap(), b);
            }
        }
    }
}

#[test]
fn changing_a_lift_by_an_even_class_moves_q_by_a_multiple_of_four() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for file in ["cp2.json", "cp2bar.json", "cp4.json", "s4.json"] {
        let d = common::space(file).bundle;
        let k = d.rank() / 4;
        let z = d.rings().integral();
        for _ in 0..30 {
            let c = random_lifts(&d, d.n() - 1, &mut rng).unwrap();
            let q = chern_square_class(&d, &chern_candidate(&d, &c[1..]).unwrap(), k).unwrap();
            let i = rng.gen_range(1..d.n());
            let v = random_element(z, 2 * i, 4, &mut rng);
            let mut c2 = c.clone();
            c2[i] = z
                .add(&c[i], &z.scale(&BigInt::from(2), &v).unwrap())
                .unwrap();
            let q2 = chern_square_class(&d, &chern_candidate(&d, &c2[1..]).unwrap(), k).unwrap();
            let diff = z.sub(&q2, &q).unwrap();
            assert!(!d.rings().divide_by(4, &diff).unwrap().is_empty(), "{file}");
        }
    }
}

#[test]
fn candidate_verdict_is_insensitive_to_the_sign_of_q() {
    let d = common::space("cp2.json").bundle;
    let z = d.rings().integral();
    for m in -6i64..=6 {
        let c1 = z.element_i64(2, &[2 * m + 1]).unwrap();
        let cand = chern_candidate(&d, &[c1]).unwrap();
        let r = evaluate_candidate(&d, &cand).unwrap();
        let neg = z.neg(&r.q).unwrap();
        assert_eq!(
            d.rings().divide_by(4, &neg).unwrap().len(),
            r.solutions.len()
        );
        assert_eq!(r.verdict.status == Status::Zero, r.q.is_zero());
    }
}

#[test]
fn homotopy_groups_stabilize() {
    for q in 1..=30u64 {
        let stable = stable_homotopy_group(q).unwrap();
        for n in (q / 2 + 1)..=(q / 2 + 6) {
            if q + 1 < 2 * n {
                assert_eq!(homotopy_group(n, q).unwrap(), stable, "n = {n}, q = {q}");
            }
        }
    }
}

#[test]
fn reports_are_deterministic() {
    for (file, s) in corpus() {
        let a = acs_verdict(&s.bundle, 6).unwrap();
        let b = acs_verdict(&s.bundle, 6).unwrap();
        assert_eq!(a, b, "{file}");
    }
}
