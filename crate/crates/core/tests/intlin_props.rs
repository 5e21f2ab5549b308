mod common;

use acso::intlin::{
    group_from_presentation, reduce_modulo_lattice, smith_normal_form, solve_integer_linear,
    solve_modular, IntMatrix,
};
use acso::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use common::determinantal_factors;

fn matrix_strategy(max: usize, entry: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(move |(r, c)| {
        prop::collection::vec(prop::collection::vec(-entry..=entry, c), r)
    })
}

fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn brute_solutions(a: &[Vec<i64>], b: &[i64], box_bound: i64) -> Vec<Vec<i64>> {
    let c = a[0].len();
    let mut out = Vec::new();
    let mut x = vec![-box_bound; c];
    loop {
        if a.iter()
            .zip(b)
            .all(|(row, bi)| row.iter().zip(&x).map(|(p, q)| p * q).sum::<i64>() == *bi)
        {
            out.push(x.clone());
        }
        let mut i = 0;
        loop {
            if i == c {
                return out;
            }
            if x[i] < box_bound {
                x[i] += 1;
                break;
            }
            x[i] = -box_bound;
            i += 1;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn smith_form_matches_minor_gcds(a in matrix_strategy(4, 9)) {
        let m = IntMatrix::from_rows(&a);
        let snf = smith_normal_form(&m);
        let ua = snf.u.mul(&m).unwrap();
        prop_assert_eq!(ua.mul(&snf.v).unwrap(), snf.d.clone());
        prop_assert!(snf.u.determinant().unwrap().abs() == BigInt::from(1));
        prop_assert!(snf.v.determinant().unwrap().abs() == BigInt::from(1));
        for i in 0..snf.d.rows() {
            for j in 0..snf.d.cols() {
                if i != j {
                    prop_assert!(snf.d[(i, j)].is_zero());
                }
            }
        }
        let got: Vec<BigInt> = snf.invariant_factors();
        let want: Vec<BigInt> = determinantal_factors(&a).into_iter().map(BigInt::from).collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn cokernel_counts_zero_factors(a in matrix_strategy(4, 6)) {
        let factors = determinantal_factors(&a);
        let g = group_from_presentation(&IntMatrix::from_rows(&a));
        let nonzero = factors.iter().filter(|d| **d != 0).count();
        prop_assert_eq!(g.free_rank, a.len() - nonzero);
        let torsion: Vec<BigInt> = factors.iter().filter(|d| **d > 1).map(|&d| BigInt::from(d)).collect();
        prop_assert_eq!(g.torsion_factors, torsion);
    }

    #[test]
    fn solver_agrees_with_brute_force(a in matrix_strategy(3, 3), seed in prop::collection::vec(-2i64..=2, 3), free_b in prop::collection::vec(-4i64..=4, 3), use_seed in any::<bool>()) {
        let (r, c) = (a.len(), a[0].len());
        let b: Vec<i64> = if use_seed {
            a.iter().map(|row| row.iter().zip(&seed).map(|(p, q)| p * q).sum()).collect()
        } else {
            free_b[..r].to_vec()
        };
        let sol = solve_integer_linear(&IntMatrix::from_rows(&a), &to_big(&b)).unwrap();
        let brute = brute_solutions(&a, &b, 4);
        match sol {
            None => prop_assert!(brute.is_empty()),
            Some(sol) => {
                let m = IntMatrix::from_rows(&a);
                prop_assert_eq!(m.mul_vec(&sol.particular).unwrap(), to_big(&b));
                for k in &sol.kernel_basis {
                    prop_assert!(m.mul_vec(k).unwrap().iter().all(|x| x.is_zero()));
                }
                let rank = smith_normal_form(&m).rank();
                prop_assert_eq!(sol.kernel_basis.len(), c - rank);
                for x in brute {
                    let mut x = to_big(&x);
                    reduce_modulo_lattice(&mut x, &sol.kernel_basis);
                    prop_assert_eq!(&x, &sol.particular);
                }
            }
        }
        if use_seed {
            prop_assert!(solve_integer_linear(&IntMatrix::from_rows(&a), &to_big(&b)).unwrap().is_some());
        }
    }

    #[test]
    fn modular_solver_agrees_with_brute_force(a in matrix_strategy(2, 3), b in prop::collection::vec(0i64..4, 2), mods in prop::collection::vec(0i64..=4, 2)) {
        let r = a.len();
        let c = a[0].len();
        let moduli: Vec<i64> = mods[..r].to_vec();
        let b: Vec<i64> = b[..r].iter().zip(&moduli).map(|(x, m)| if *m > 1 { x % m } else if *m == 1 { 0 } else { *x }).collect();
        let sol = solve_modular(&IntMatrix::from_rows(&a), &to_big(&moduli), &to_big(&b)).unwrap();
        let holds = |x: &[i64]| a.iter().zip(&b).zip(&moduli).all(|((row, bi), m)| {
            let v: i64 = row.iter().zip(x).map(|(p, q)| p * q).sum::<i64>() - bi;
            if *m == 0 { v == 0 } else { v.rem_euclid(*m) == 0 }
        });
        let mut found = Vec::new();
        let mut x = vec![-4i64; c];
        'outer: loop {
            if holds(&x) {
                found.push(x.clone());
            }
            for xi in x.iter_mut() {
                if *xi < 4 { *xi += 1; continue 'outer; }
                *xi = -4;
            }
            break;
        }
        match sol {
            None => prop_assert!(found.is_empty()),
            Some(sol) => {
                let p: Vec<i64> = sol.particular.iter().map(|v| i64::try_from(v).unwrap()).collect();
                prop_assert!(holds(&p));
                for x in found {
                    let mut x = to_big(&x);
                    reduce_modulo_lattice(&mut x, &sol.kernel_basis);
                    prop_assert_eq!(&x, &sol.particular);
                }
            }
        }
    }
}
