use num_bigint::BigInt;

use super::bundle::BundleData;
use super::classes::{
    chern_candidate, chern_square_class, first_obstruction, integral_sw, theorem1_obstruction,
    verdict_from_multiple,
};
use super::tables::homotopy_group;
use super::verdict::{
    CandidateResult, ChernCandidate, Conclusion, ObstructionReport, Status, Verdict,
};
use super::ObstructError;
use crate::gradedring::RingElement;

/// Default cap on the number of enumerated candidates.
pub const DEFAULT_CANDIDATE_CAP: u64 = 1_000_000;

/// Default bound on free coefficients in lift searches.
pub const DEFAULT_BOUND: u64 = 10;

/// Everything a lift search produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateSearch {
    /// Candidates in the coefficient box.
    pub enumerated: usize,
    /// Candidates also satisfying the lower Pontryagin relations, evaluated.
    pub evaluated: Vec<CandidateResult>,
    /// Some `i` for which w₂ᵢ has no integral lift at all.
    pub missing_lift: Option<usize>,
}

/// Which relation decides the top obstruction, and in which degree.
fn top_relation(d: &BundleData) -> Option<(usize, &'static str)> {
    match d.rank() {
        4 => Some((1, "p1 - c1^2 + 2e")),
        6 if d.cutoff() >= 8 => Some((2, "-2c1c3 + c2^2 - p2")),
        r if r % 4 == 0 => Some((r / 4, "sum (-1)^i c_i c_j - (-1)^k p_k")),
        _ => None,
    }
}

/// The relations (−1)ʲ pⱼ = Σ_{a+b=2j} (−1)ᵃ cₐc_b, which hold for genuine
/// Chern classes in every degree 4j < 2n − 1.
fn satisfies_pontryagin_relations(
    d: &BundleData,
    c: &ChernCandidate,
) -> Result<bool, ObstructError> {
    let ring = d.rings().integral();
    let mut j = 1;
    while 4 * j < d.rank() - 1 && 4 * j <= d.cutoff() {
        let mut s = ring.zero(4 * j)?;
        for a in 0..=2 * j {
            let (Some(ca), Some(cb)) = (c.c(a), c.c(2 * j - a)) else {
                continue;
            };
            let t = ring.cup(ca, cb)?;
            s = if a % 2 == 0 {
                ring.add(&s, &t)?
            } else {
                ring.sub(&s, &t)?
            };
        }
        let pj = d.p(j)?;
        let lhs = if j % 2 == 0 {
            pj.clone()
        } else {
            ring.neg(pj)?
        };
        if lhs != s {
            return Ok(false);
        }
        j += 1;
    }
    Ok(true)
}

/// Evaluates the top obstruction for one candidate.
pub fn evaluate_candidate(
    d: &BundleData,
    c: &ChernCandidate,
) -> Result<CandidateResult, ObstructError> {
    let (k, what) = top_relation(d).ok_or_else(|| {
        ObstructError::Hypothesis(format!("no top-degree relation for rank {}", d.rank()))
    })?;
    let q = chern_square_class(d, c, k)?;
    let solutions = d.rings().divide_by(4, &q)?;
    let verdict = verdict_from_multiple(d.rings(), &q, 4, what)?;
    Ok(CandidateResult {
        candidate: c.clone(),
        q_pairing: d.evaluate(&q),
        q,
        solutions,
        verdict,
    })
}

/// Enumerates lifts cᵢ of w₂ᵢ for 1 ≤ i < n with free coefficients in
/// `[-bound, bound]`, keeps those satisfying the lower Pontryagin relations
/// and evaluates the top obstruction on each.
pub fn search_candidates(
    d: &BundleData,
    bound: u64,
    cap: u64,
) -> Result<CandidateSearch, ObstructError> {
    let n = d.n();
    let rings = d.rings();
    let mut lists: Vec<Vec<RingElement>> = Vec::new();
    for i in 1..n {
        let search = rings.integral_lifts(d.w(2 * i)?, bound)?;
        if search.unsolvable {
            return Ok(CandidateSearch {
                enumerated: 0,
                evaluated: Vec::new(),
                missing_lift: Some(i),
            });
        }
        lists.push(search.lifts);
    }
    let total = lists
        .iter()
        .fold(1u64, |acc, l| acc.saturating_mul(l.len() as u64));
    if total > cap {
        return Err(ObstructError::Budget {
            candidates: total,
            cap,
        });
    }
    let mut evaluated = Vec::new();
    if lists.iter().any(Vec::is_empty) {
        return Ok(CandidateSearch {
            enumerated: 0,
            evaluated,
            missing_lift: None,
        });
    }
    let mut idx = vec![0usize; lists.len()];
    loop {
        let lower: Vec<RingElement> = idx.iter().zip(&lists).map(|(&j, l)| l[j].clone()).collect();
        let c = chern_candidate(d, &lower)?;
        if satisfies_pontryagin_relations(d, &c)? {
            evaluated.push(evaluate_candidate(d, &c)?);
        }
        let mut pos = idx.len();
        loop {
            if pos == 0 {
                return Ok(CandidateSearch {
                    enumerated: total as usize,
                    evaluated,
                    missing_lift: None,
                });
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < lists[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Candidates within the bound on which the top obstruction vanishes.
pub fn search_vanishing_lifts(
    d: &BundleData,
    bound: u64,
) -> Result<Vec<ChernCandidate>, ObstructError> {
    Ok(search_candidates(d, bound, DEFAULT_CANDIDATE_CAP)?
        .evaluated
        .into_iter()
        .filter(|r| r.verdict.status == Status::Zero)
        .map(|r| r.candidate)
        .collect())
}

fn aggregate(results: &[CandidateResult], degree: usize, bound: u64) -> Verdict {
    let zero = results
        .iter()
        .filter(|r| r.verdict.status == Status::Zero)
        .count();
    let nonzero = results
        .iter()
        .filter(|r| r.verdict.status == Status::NonZero)
        .count();
    let denominator = Some(BigInt::from(4));
    let total = results.len();
    if zero > 0 {
        Verdict {
            status: Status::Zero,
            degree,
            witness: None,
            denominator,
            note: format!("vanishes for {zero} of {total} candidates with coefficients in [-{bound}, {bound}]"),
        }
    } else if total > 0 && nonzero == total {
        Verdict {
            status: Status::NonZero,
            degree,
            witness: results[0].verdict.witness.clone(),
            denominator,
            note: format!(
                "nonzero for all {total} candidates with coefficients in [-{bound}, {bound}]"
            ),
        }
    } else if total == 0 {
        Verdict {
            status: Status::Inconclusive,
            degree,
            witness: None,
            denominator,
            note: format!("no candidate with coefficients in [-{bound}, {bound}]"),
        }
    } else {
        Verdict {
            status: Status::Inconclusive,
            degree,
            witness: None,
            denominator,
            note: format!("no candidate decides the class among {total} with coefficients in [-{bound}, {bound}]"),
        }
    }
}

/// Runs every implemented obstruction check on `d`.
pub fn acs_verdict(d: &BundleData, bound: u64) -> Result<ObstructionReport, ObstructError> {
    acs_verdict_with_cap(d, bound, DEFAULT_CANDIDATE_CAP)
}

pub fn acs_verdict_with_cap(
    d: &BundleData,
    bound: u64,
    cap: u64,
) -> Result<ObstructionReport, ObstructError> {
    let n = d.n();
    let rank = d.rank();
    let mut notes: Vec<String> = d.validation_notes().to_vec();

    let first = first_obstruction(d)?;

    let mut theorem1 = Vec::new();
    let mut k = 1;
    while 4 * k + 3 < rank && 4 * k + 3 <= d.cutoff() {
        theorem1.push((k, theorem1_obstruction(d, k)?));
        k += 1;
    }

    let ehresmann_w7 = if n >= 4 {
        theorem1
            .iter()
            .find(|(k, _)| *k == 1)
            .map(|(_, v)| v.clone())
    } else if n == 3 && d.cutoff() >= 7 {
        let w7 = integral_sw(d, 3)?;
        debug_assert!(w7.is_zero());
        Some(Verdict {
            status: if w7.is_zero() {
                Status::Zero
            } else {
                Status::NonZero
            },
            degree: 7,
            witness: None,
            denominator: None,
            note: "W7 = beta(w6) vanishes since w6 = rho2(e)".into(),
        })
    } else {
        None
    };

    let mut searched = 0;
    let mut candidates = Vec::new();
    let final_verdict = if rank == 6 && d.base_dimension().is_some_and(|b| b <= 6) {
        let note = "W3 is the sole obstruction on a base of dimension at most 6";
        notes.push(note.into());
        Some(first.clone().with_note(note))
    } else if let Some((k, _)) = top_relation(d) {
        let degree = 4 * k;
        let search = search_candidates(d, bound, cap)?;
        if let Some(i) = search.missing_lift {
            notes.push(format!(
                "top obstruction not evaluated: w{} has no integral lift",
                2 * i
            ));
            None
        } else {
            searched = search.evaluated.len();
            if search.enumerated > search.evaluated.len() {
                notes.push(format!(
                    "{} of {} candidates satisfy the lower Pontryagin relations",
                    search.evaluated.len(),
                    search.enumerated
                ));
            }
            let mut v = aggregate(&search.evaluated, degree, bound);
            if rank.is_multiple_of(8) {
                let note = "Z/2 component undetected";
                notes.push(format!(
                    "{note}: only the integral part of the degree-{degree} obstruction is computed"
                ));
                v = v.with_note(note);
            }
            candidates = search.evaluated;
            Some(v)
        }
    } else {
        if rank > 2 {
            notes.push(format!(
                "no top-degree relation is implemented for rank {rank}"
            ));
        }
        None
    };

    let vanishing_candidates = candidates
        .iter()
        .filter(|r| r.verdict.status == Status::Zero)
        .map(|r| r.candidate.clone())
        .collect();

    let mut report = ObstructionReport {
        rank,
        base_dimension: d.base_dimension(),
        bound,
        first,
        ehresmann_w7,
        theorem1,
        final_verdict,
        searched_candidates: searched,
        candidates,
        vanishing_candidates,
        checked_degrees: Vec::new(),
        unchecked_degrees: Vec::new(),
        notes,
        conclusion: Conclusion::NoObstructionDetected,
    };
    let (checked, unchecked) = coverage(&report, n)?;
    report.checked_degrees = checked;
    report.unchecked_degrees = unchecked;
    report.conclusion = conclude(&report);
    Ok(report)
}

/// Can π_q(SO(2n)/U(n)) be nonzero? `None` when unknown here.
fn group_may_be_nonzero(n: usize, q: usize) -> Option<bool> {
    let (n64, q64) = (n as u64, q as u64);
    if n == 1 {
        return Some(false);
    }
    if q64 < 2 * n64 {
        return homotopy_group(n64, q64).ok().map(|g| !g.is_trivial());
    }
    if n == 3 {
        // SO(6)/U(3) = CP3: π6 = 0, π7 = Z
        return match q {
            6 => Some(false),
            7 => Some(true),
            _ => None,
        };
    }
    None
}

/// Degrees holding a verdict, and degrees up to the base dimension that
/// might carry an obstruction but hold none.
fn coverage(
    report: &ObstructionReport,
    n: usize,
) -> Result<(Vec<usize>, Vec<usize>), ObstructError> {
    let mut checked: Vec<usize> = report.verdicts().iter().map(|v| v.degree).collect();
    checked.sort_unstable();
    checked.dedup();
    let Some(base) = report.base_dimension else {
        return Ok((checked, Vec::new()));
    };
    let sole = report.rank == 6 && base <= 6;
    let mut unchecked = Vec::new();
    for degree in 2..=base {
        let q = degree - 1;
        if sole && degree != 3 {
            continue;
        }
        let covered = checked.contains(&degree);
        match group_may_be_nonzero(n, q) {
            Some(false) => {}
            Some(true) if covered => {}
            _ => unchecked.push(degree),
        }
    }
    Ok((checked, unchecked))
}

fn conclude(report: &ObstructionReport) -> Conclusion {
    let verdicts = report.verdicts();
    if verdicts.iter().any(|v| v.status == Status::NonZero) {
        return Conclusion::Obstructed;
    }
    if verdicts.iter().any(|v| v.status == Status::Inconclusive) {
        return Conclusion::Inconclusive;
    }
    let undetected = report.rank.is_multiple_of(8) && report.final_verdict.is_some();
    let top_needed = report.base_dimension.is_some_and(|b| b >= report.rank);
    if report.base_dimension.is_some()
        && report.unchecked_degrees.is_empty()
        && !(undetected && top_needed)
    {
        Conclusion::Admits
    } else {
        Conclusion::NoObstructionDetected
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::parse_space_str;

    fn result(status: Status) -> CandidateResult {
        let d = parse_space_str(include_str!("../../corpus/s4.json"))
            .unwrap()
            .bundle;
        let c = chern_candidate(&d, &[d.rings().integral().zero(2).unwrap()]).unwrap();
        let mut r = evaluate_candidate(&d, &c).unwrap();
        r.verdict.status = status;
        r
    }

    #[test]
    fn aggregation() {
        use Status::*;
        assert_eq!(
            aggregate(&[result(NonZero), result(Zero)], 4, 1).status,
            Zero
        );
        assert_eq!(
            aggregate(&[result(NonZero), result(NonZero)], 4, 1).status,
            NonZero
        );
        assert_eq!(
            aggregate(&[result(NonZero), result(Inconclusive)], 4, 1).status,
            Inconclusive
        );
        assert_eq!(aggregate(&[], 4, 1).status, Inconclusive);
    }

    #[test]
    fn candidate_cap_is_enforced() {
        let d = parse_space_str(include_str!("../../corpus/cp4.json"))
            .unwrap()
            .bundle;
        let err = search_candidates(&d, 10, 5).unwrap_err();
        assert!(matches!(err, ObstructError::Budget { cap: 5, .. }));
    }

    #[test]
    fn conclusions() {
        let run = |text: &str| {
            acs_verdict(&parse_space_str(text).unwrap().bundle, 10)
                .unwrap()
                .conclusion
        };
        assert_eq!(
            run(include_str!("../../corpus/s6.json")),
            Conclusion::Admits
        );
        assert_eq!(
            run(include_str!("../../corpus/s8.json")),
            Conclusion::Obstructed
        );
        assert_eq!(
            run(include_str!("../../corpus/hp2.json")),
            Conclusion::NoObstructionDetected
        );
    }
}
