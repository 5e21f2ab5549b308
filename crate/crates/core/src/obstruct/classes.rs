use num_bigint::BigInt;

use super::bundle::{BundleData, WuCheck};
use super::tables::obstruction_denominator;
use super::verdict::{ChernCandidate, Status, Verdict};
use super::ObstructError;
use crate::gradedring::{CohomologyRings, RingElement};

/// W₂ᵢ₊₁ = β(w₂ᵢ).
pub fn integral_sw(d: &BundleData, i: usize) -> Result<RingElement, ObstructError> {
    if 2 * i + 1 > d.cutoff() {
        return Err(ObstructError::OutOfRange(format!(
            "W{} lies above the cutoff {}",
            2 * i + 1,
            d.cutoff()
        )));
    }
    Ok(d.rings().beta(d.w(2 * i)?)?)
}

/// Evaluates 𝔓(w₂ₘ) − ρ₄(pₘ) − θ₂(Σ_{j<m} w₂ⱼ w₄ₘ₋₂ⱼ).
pub fn validate_wu_formula(d: &BundleData, m: usize) -> Result<WuCheck, ObstructError> {
    if m == 0 || 4 * m > d.cutoff() {
        return Err(ObstructError::OutOfRange(format!(
            "Wu formula for m = {m} needs 1 <= 4m <= cutoff"
        )));
    }
    let rings = d.rings();
    let (mod2, mod4) = (rings.mod2(), rings.mod4());
    let w2m = d.w(2 * m)?;
    let Some(lift) = rings.solve_lift(w2m)? else {
        return Ok(WuCheck::Skipped(format!(
            "Wu formula for w{} not checked: w{} has no integral lift",
            2 * m,
            2 * m
        )));
    };
    let square = rings.pontryagin_square_with_lift(&lift)?;
    let mut correction = mod2.zero(4 * m)?;
    for j in 0..m {
        correction = mod2.add(&correction, &mod2.cup(d.w(2 * j)?, d.w(4 * m - 2 * j)?)?)?;
    }
    let rhs = mod4.add(&rings.rho4(d.p(m)?)?, &rings.theta2(&correction)?)?;
    let diff = mod4.sub(&square, &rhs)?;
    Ok(if diff.is_zero() {
        WuCheck::Holds
    } else {
        WuCheck::Fails(diff)
    })
}

/// The obstruction in degree 3, which is exactly W₃.
pub fn first_obstruction(d: &BundleData) -> Result<Verdict, ObstructError> {
    let w3 = integral_sw(d, 1)?;
    let ring = d.rings().integral();
    Ok(if w3.is_zero() {
        Verdict {
            status: Status::Zero,
            degree: 3,
            witness: None,
            denominator: None,
            note: "W3 = 0".into(),
        }
    } else {
        Verdict {
            status: Status::NonZero,
            degree: 3,
            witness: Some(ring.canonical_sign(&w3)?),
            denominator: None,
            note: "W3 != 0".into(),
        }
    })
}

/// Verdict on `o` given `divisor · o = q` in an integral piece.
pub(crate) fn verdict_from_multiple(
    rings: &CohomologyRings,
    q: &RingElement,
    divisor: u64,
    what: &str,
) -> Result<Verdict, ObstructError> {
    let ring = rings.integral();
    let degree = q.degree();
    let denominator = Some(BigInt::from(divisor));
    if !q.is_zero() {
        return Ok(Verdict {
            status: Status::NonZero,
            degree,
            witness: Some(ring.canonical_sign(q)?),
            denominator,
            note: format!("{what} != 0"),
        });
    }
    let killed = rings.divide_by(divisor, &ring.zero(degree)?)?;
    Ok(if killed.len() == 1 {
        Verdict {
            status: Status::Zero,
            degree,
            witness: None,
            denominator,
            note: format!("{what} = 0 and H^{degree} has no {divisor}-torsion"),
        }
    } else {
        Verdict {
            status: Status::Inconclusive,
            degree,
            witness: None,
            denominator,
            note: format!(
                "{what} = 0 but {} elements of H^{degree} are killed by {divisor}",
                killed.len()
            ),
        }
    })
}

/// The obstruction in degree 4k+3 below the top, through W₄ₖ₊₃ = ℓ·o.
pub fn theorem1_obstruction(d: &BundleData, k: usize) -> Result<Verdict, ObstructError> {
    let degree = 4 * k + 3;
    if k < 1 || degree >= d.rank() {
        return Err(ObstructError::Hypothesis(format!(
            "the degree-{degree} relation needs k >= 1 and 4k+3 < rank {}",
            d.rank()
        )));
    }
    let w = integral_sw(d, 2 * k + 1)?;
    let ell = obstruction_denominator(k as u64)?;
    let ell_u64: u64 = (&ell)
        .try_into()
        .map_err(|_| ObstructError::OutOfRange(format!("denominator for k = {k} is too large")))?;
    let mut v = verdict_from_multiple(d.rings(), &w, ell_u64, &format!("W{degree}"))?;
    v.denominator = Some(ell);
    Ok(v)
}

/// Builds a candidate from `c_1 … c_{n-1}`, checking ρ₂(cᵢ) = w₂ᵢ.
pub fn chern_candidate(
    d: &BundleData,
    lower: &[RingElement],
) -> Result<ChernCandidate, ObstructError> {
    let n = d.n();
    if lower.len() != n - 1 {
        return Err(ObstructError::InvalidCandidate(format!(
            "expected {} classes c1..c{}",
            n - 1,
            n - 1
        )));
    }
    let rings = d.rings();
    let mut classes = vec![rings.integral().one()];
    for (i, c) in lower.iter().enumerate() {
        let i = i + 1;
        if c.degree() != 2 * i || rings.rho2(c)? != *d.w(2 * i)? {
            return Err(ObstructError::InvalidCandidate(format!(
                "c{i} does not reduce to w{}",
                2 * i
            )));
        }
        classes.push(c.clone());
    }
    classes.push(d.euler().clone());
    Ok(ChernCandidate { classes })
}

/// Σ_{i+j=2k} (−1)^i cᵢcⱼ − (−1)^k pₖ with cᵢ = 0 past c_n.
pub fn chern_square_class(
    d: &BundleData,
    c: &ChernCandidate,
    k: usize,
) -> Result<RingElement, ObstructError> {
    let ring = d.rings().integral();
    let mut q = ring.zero(4 * k)?;
    for i in 0..=2 * k {
        let (Some(ci), Some(cj)) = (c.c(i), c.c(2 * k - i)) else {
            continue;
        };
        let term = ring.cup(ci, cj)?;
        q = if i % 2 == 0 {
            ring.add(&q, &term)?
        } else {
            ring.sub(&q, &term)?
        };
    }
    let pk = d.p(k)?;
    q = if k.is_multiple_of(2) {
        ring.sub(&q, pk)?
    } else {
        ring.add(&q, pk)?
    };
    let reduced = d.rings().rho4(&q)?;
    if !reduced.is_zero() {
        return Err(ObstructError::Divisibility(ring.format(&q)));
    }
    Ok(q)
}

/// The top obstruction for rank 4k: q = 4·o and every solution o.
pub fn theorem2_class(
    d: &BundleData,
    c: &ChernCandidate,
) -> Result<(RingElement, Vec<RingElement>), ObstructError> {
    if !d.rank().is_multiple_of(4) {
        return Err(ObstructError::Hypothesis(format!(
            "rank {} is not divisible by 4",
            d.rank()
        )));
    }
    let q = chern_square_class(d, c, d.rank() / 4)?;
    let solutions = d.rings().divide_by(4, &q)?;
    Ok((q, solutions))
}

/// Rank 4: p₁ − c₁² + 2e = 4·o.
pub fn wu_dim4_obstruction(d: &BundleData, c1: &RingElement) -> Result<Verdict, ObstructError> {
    if d.rank() != 4 {
        return Err(ObstructError::Hypothesis(format!(
            "rank {} is not 4",
            d.rank()
        )));
    }
    let c = chern_candidate(d, std::slice::from_ref(c1))?;
    let (q, _) = theorem2_class(d, &c)?;
    verdict_from_multiple(d.rings(), &q, 4, "p1 - c1^2 + 2e")
}

/// Rank 6, degree 8: −2c₁c₃ + c₂² − p₂ = 4·o.
pub fn rank6_second_obstruction(
    d: &BundleData,
    c: &ChernCandidate,
) -> Result<Verdict, ObstructError> {
    if d.rank() != 6 || d.cutoff() < 8 {
        return Err(ObstructError::Hypothesis(
            "needs rank 6 and cutoff at least 8".into(),
        ));
    }
    let q = chern_square_class(d, c, 2)?;
    verdict_from_multiple(d.rings(), &q, 4, "-2c1c3 + c2^2 - p2")
}

/// An integral lift z = x + β(y) of w₄ₘ, from lifts `c[1..2m]` of the lower
/// even classes, where 2x = cₘ² − pₘ − 2Σ_{j=1}^{m−1} cⱼc₂ₘ₋ⱼ and
/// Sq¹(y) = ρ₂(x) + w₄ₘ.
pub fn construct_w4m_lift(
    d: &BundleData,
    m: usize,
    c: &[RingElement],
) -> Result<RingElement, ObstructError> {
    let rings = d.rings();
    let ring = rings.integral();
    if m < 1 || 4 * m > d.cutoff() {
        return Err(ObstructError::OutOfRange(format!(
            "w{} lies above the cutoff",
            4 * m
        )));
    }
    if c.len() < 2 * m {
        return Err(ObstructError::InvalidCandidate(format!(
            "lifts c1..c{} required",
            2 * m - 1
        )));
    }
    for (i, ci) in c.iter().enumerate().take(2 * m).skip(1) {
        if ci.degree() != 2 * i || rings.rho2(ci)? != *d.w(2 * i)? {
            return Err(ObstructError::InvalidCandidate(format!(
                "c{i} does not reduce to w{}",
                2 * i
            )));
        }
    }
    let mut rhs = ring.sub(&ring.square(&c[m])?, d.p(m)?)?;
    for j in 1..m {
        let t = ring.cup(&c[j], &c[2 * m - j])?;
        rhs = ring.sub(&rhs, &ring.scale(&BigInt::from(2), &t)?)?;
    }
    let x = rings
        .divide_by(2, &rhs)?
        .into_iter()
        .next()
        .ok_or_else(|| {
            ObstructError::NoSolution(format!("2x = {} has no solution", ring.format(&rhs)))
        })?;
    let target = rings.mod2().add(&rings.rho2(&x)?, d.w(4 * m)?)?;
    let y = rings.solve_sq1(&target)?.ok_or_else(|| {
        ObstructError::NoSolution(format!(
            "Sq1(y) = {} has no solution",
            rings.mod2().format(&target)
        ))
    })?;
    let by = if y.is_zero() {
        ring.zero(4 * m)?
    } else {
        rings.beta(&y)?
    };
    let z = ring.add(&x, &by)?;
    if rings.rho2(&z)? != *d.w(4 * m)? {
        return Err(ObstructError::NoSolution(format!(
            "constructed {} does not reduce to w{}",
            ring.format(&z),
            4 * m
        )));
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::parse_space_str;

    fn bundle(text: &str) -> BundleData {
        parse_space_str(text).unwrap().bundle
    }

    #[test]
    fn multiple_verdicts() {
        let d = bundle(include_str!("../../corpus/cp2.json"));
        let z = d.rings().integral();
        let q = z.element_i64(4, &[-8]).unwrap();
        let v = verdict_from_multiple(d.rings(), &q, 4, "q").unwrap();
        assert_eq!(v.status, Status::NonZero);
        assert_eq!(v.witness, Some(z.element_i64(4, &[8]).unwrap()));
        let v = verdict_from_multiple(d.rings(), &z.zero(4).unwrap(), 4, "q").unwrap();
        assert_eq!(v.status, Status::Zero);
    }

    #[test]
    fn torsion_killed_by_the_divisor_is_inconclusive() {
        let d = bundle(include_str!("../../corpus/s1xwu.json"));
        let z = d.rings().integral();
        let v = verdict_from_multiple(d.rings(), &z.zero(3).unwrap(), 2, "x").unwrap();
        assert_eq!(v.status, Status::Inconclusive);
        let v = verdict_from_multiple(d.rings(), &z.zero(3).unwrap(), 3, "x").unwrap();
        assert_eq!(v.status, Status::Zero);
    }

    #[test]
    fn candidates_must_reduce_to_w() {
        let d = bundle(include_str!("../../corpus/cp2.json"));
        let z = d.rings().integral();
        assert!(chern_candidate(&d, &[z.element_i64(2, &[2]).unwrap()]).is_err());
        assert!(chern_candidate(&d, &[]).is_err());
        let c = chern_candidate(&d, &[z.element_i64(2, &[3]).unwrap()]).unwrap();
        assert_eq!(c.n(), 2);
        assert_eq!(c.c(2), Some(d.euler()));
        assert!(
            wu_dim4_obstruction(&d, &z.element_i64(2, &[-3]).unwrap())
                .unwrap()
                .status
                == Status::Zero
        );
        assert!(
            wu_dim4_obstruction(&d, &z.element_i64(2, &[1]).unwrap())
                .unwrap()
                .status
                == Status::NonZero
        );
    }

    #[test]
    fn first_obstruction_on_s1xwu() {
        let d = bundle(include_str!("../../corpus/s1xwu.json"));
        let v = first_obstruction(&d).unwrap();
        assert_eq!(v.status, Status::NonZero);
        assert_eq!(v.degree, 3);
    }
}
