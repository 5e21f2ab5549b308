#![allow(dead_code)]

use acso::cli::{parse_space_str, LoadedSpace, BUILTIN_CORPUS};
use acso::gradedring::{GradedRing, RingElement};
use acso::obstruct::BundleData;
use acso::BigInt;
use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn corpus() -> Vec<(&'static str, LoadedSpace)> {
    BUILTIN_CORPUS
        .iter()
        .map(|(f, t)| {
            (
                *f,
                parse_space_str(t).unwrap_or_else(|e| panic!("{f}: {e}")),
            )
        })
        .collect()
}

pub fn space(file: &str) -> LoadedSpace {
    let (_, text) = BUILTIN_CORPUS
        .iter()
        .find(|(f, _)| *f == file)
        .expect("corpus file");
    parse_space_str(text).unwrap()
}

/// Random element of one degree with free coefficients in `[-r, r]`.
pub fn random_element<R: Rng>(
    ring: &GradedRing,
    degree: usize,
    r: i64,
    rng: &mut R,
) -> RingElement {
    let piece = ring.piece(degree).unwrap();
    let coeffs = piece
        .orders
        .iter()
        .map(|_| BigInt::from(rng.gen_range(-r..=r)))
        .collect();
    ring.element(degree, coeffs).unwrap()
}

fn det_i128(m: &[Vec<i128>]) -> i128 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, x)| *x)
                            .collect()
                    })
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det_i128(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors from gcds of k×k minors.
pub fn determinantal_factors(a: &[Vec<i64>]) -> Vec<i128> {
    let (r, c) = (a.len(), a[0].len());
    let mut divisors = vec![1i128];
    for k in 1..=r.min(c) {
        let mut g = 0i128;
        for rs in subsets(r, k) {
            for cs in subsets(c, k) {
                let m: Vec<Vec<i128>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| a[i][j] as i128).collect())
                    .collect();
                g = g.gcd(&det_i128(&m));
            }
        }
        divisors.push(g);
    }
    (1..divisors.len())
        .map(|k| {
            if divisors[k] == 0 {
                0
            } else {
                divisors[k] / divisors[k - 1]
            }
        })
        .collect()
}

/// Random lifts c_1..c_{top} of w_2..w_{2 top}, or `None` if some class has
/// no integral lift.
pub fn random_lifts<R: Rng>(d: &BundleData, top: usize, rng: &mut R) -> Option<Vec<RingElement>> {
    let rings = d.rings();
    let mut out = vec![rings.integral().one()];
    for i in 1..=top {
        let search = rings.integral_lifts(d.w(2 * i).ok()?, 6).unwrap();
        if search.unsolvable {
            return None;
        }
        out.push(search.lifts.choose(rng)?.clone());
    }
    Some(out)
}
