mod common;

use acso::gradedring::{Coefficients, Generator, GradedRing, RingPresentation};
use acso::BigInt;
use common::{corpus, random_element};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rings() -> Vec<(String, GradedRing)> {
    let mut out = Vec::new();
    for (file, s) in corpus() {
        let r = s.bundle.rings();
        for c in [
            Coefficients::Integers,
            Coefficients::Mod2,
            Coefficients::Mod4,
        ] {
            out.push((format!("{file} {c}"), r.ring(c).clone()));
        }
    }
    out
}

fn degrees(ring: &GradedRing) -> Vec<usize> {
    (0..=ring.cutoff())
        .filter(|&d| !ring.piece(d).unwrap().is_empty())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws_hold(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (name, ring) in rings() {
            let ds = degrees(&ring);
            for &a in &ds {
                for &b in &ds {
                    if a + b > ring.cutoff() {
                        continue;
                    }
                    let x = random_element(&ring, a, 3, &mut rng);
                    let y = random_element(&ring, b, 3, &mut rng);
                    let y2 = random_element(&ring, b, 3, &mut rng);
                    let xy = ring.cup(&x, &y).unwrap();
                    let yx = ring.cup(&y, &x).unwrap();
                    let sign = if a % 2 == 1 && b % 2 == 1 { -1 } else { 1 };
                    prop_assert_eq!(&xy, &ring.scale(&BigInt::from(sign), &yx).unwrap(), "{} commutativity", name);
                    let lhs = ring.cup(&x, &ring.add(&y, &y2).unwrap()).unwrap();
                    let rhs = ring.add(&xy, &ring.cup(&x, &y2).unwrap()).unwrap();
                    prop_assert_eq!(lhs, rhs, "{} distributivity", name);
                    prop_assert_eq!(ring.cup(&ring.one(), &x).unwrap(), x.clone());
                    for &c in &ds {
                        if a + b + c > ring.cutoff() {
                            continue;
                        }
                        let z = random_element(&ring, c, 3, &mut rng);
                        let l = ring.cup(&xy, &z).unwrap();
                        let r = ring.cup(&x, &ring.cup(&y, &z).unwrap()).unwrap();
                        prop_assert_eq!(l, r, "{} associativity", name);
                    }
                }
            }
        }
    }

    #[test]
    fn corpus_maps_are_additive_and_sq1_squares_to_zero(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (file, s) in corpus() {
            let r = s.bundle.rings();
            for d in 0..=r.cutoff() {
                let x = random_element(r.integral(), d, 5, &mut rng);
                let y = random_element(r.integral(), d, 5, &mut rng);
                let sum = r.integral().add(&x, &y).unwrap();
                prop_assert_eq!(
                    r.rho4(&sum).unwrap(),
                    r.mod4().add(&r.rho4(&x).unwrap(), &r.rho4(&y).unwrap()).unwrap(),
                    "{}", file
                );
                let u = random_element(r.mod2(), d, 1, &mut rng);
                prop_assert!(r.rho2_4(&r.theta2(&u).unwrap()).unwrap().is_zero());
                if d + 2 <= r.cutoff() {
                    prop_assert!(r.sq1(&r.sq1(&u).unwrap()).unwrap().is_zero(), "{} Sq1Sq1", file);
                }
                if d < r.cutoff() {
                    prop_assert!(r.beta(&r.rho2(&x).unwrap()).unwrap().is_zero());
                }
            }
        }
    }
}

#[test]
fn exterior_generator_squares_to_zero() {
    let p = RingPresentation::new(
        Coefficients::Integers,
        6,
        vec![Generator::new("t", 1, 0), Generator::new("a", 2, 0)],
    );
    let ring = GradedRing::build(p).unwrap();
    let t = ring.monomial_element("t").unwrap();
    assert!(ring.square(&t).unwrap().is_zero());
    let a = ring.monomial_element("a").unwrap();
    let ta = ring.cup(&t, &a).unwrap();
    assert_eq!(ring.cup(&a, &t).unwrap(), ta);
    assert_eq!(ring.piece(3).unwrap().len(), 1);
}

#[test]
fn truncated_polynomial_ring_has_expected_ranks() {
    let p = RingPresentation::new(
        Coefficients::Integers,
        8,
        vec![Generator::new("alpha", 2, 0)],
    )
    .with_zero("alpha^3")
    .unwrap();
    let ring = GradedRing::build(p).unwrap();
    let ranks: Vec<usize> = (0..=8).map(|d| ring.piece(d).unwrap().len()).collect();
    assert_eq!(ranks, vec![1, 0, 1, 0, 1, 0, 0, 0, 0]);
}
