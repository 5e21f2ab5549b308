use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::ObstructError;
use crate::gradedring::{Coefficients, CohomologyRings, RingElement};

/// Evaluation of top-degree integral classes against a fundamental class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    pub degree: usize,
    /// Value on each basis monomial of the integral piece in `degree`.
    pub values: Vec<BigInt>,
}

impl Pairing {
    /// `None` when `x` lives in another degree.
    pub fn evaluate(&self, x: &RingElement) -> Option<BigInt> {
        if x.degree() != self.degree || x.ring() != Coefficients::Integers {
            return None;
        }
        Some(
            x.coefficients()
                .iter()
                .zip(&self.values)
                .map(|(a, b)| a * b)
                .sum(),
        )
    }
}

/// Characteristic-class input before validation. Missing `w` and `p`
/// entries are zero; `w0` defaults to 1.
#[derive(Debug, Clone, Default)]
pub struct BundleClasses {
    pub w: BTreeMap<usize, RingElement>,
    pub p: BTreeMap<usize, RingElement>,
    pub euler: Option<RingElement>,
}

/// Outcome of checking the Wu formula in one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WuCheck {
    Holds,
    /// `w2m` has no integral lift, so the Pontryagin square is not evaluated.
    Skipped(String),
    /// The nonzero discrepancy in H^{4m}(-; Z/4).
    Fails(RingElement),
}

/// A validated oriented real vector bundle of even rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleData {
    rank: usize,
    base_dimension: Option<usize>,
    rings: CohomologyRings,
    /// `w[i]` for `0 ≤ i ≤ cutoff`.
    w: Vec<RingElement>,
    /// `p[k]` for `0 ≤ k ≤ cutoff / 4`.
    p: Vec<RingElement>,
    euler: RingElement,
    pairing: Option<Pairing>,
    notes: Vec<String>,
}

impl BundleData {
    pub fn new(
        rings: CohomologyRings,
        rank: usize,
        base_dimension: Option<usize>,
        classes: BundleClasses,
        pairing: Option<Pairing>,
    ) -> Result<BundleData, ObstructError> {
        let invalid = |s: String| Err(ObstructError::InvalidBundle(s));
        if rank < 2 || rank % 2 == 1 {
            return invalid(format!("rank {rank} must be even and positive"));
        }
        let cutoff = rings.cutoff();
        if cutoff < rank.max(3) {
            return invalid(format!(
                "cutoff {cutoff} is below max(rank, 3) = {}",
                rank.max(3)
            ));
        }
        let mod2 = rings.mod2();
        let integral = rings.integral();

        let mut w = Vec::with_capacity(cutoff + 1);
        for i in 0..=cutoff {
            let default = if i == 0 { mod2.one() } else { mod2.zero(i)? };
            let x = match classes.w.get(&i) {
                Some(x) => {
                    if i > rank && !x.is_zero() {
                        return invalid(format!("w{i} is nonzero above the rank"));
                    }
                    check_class(x, Coefficients::Mod2, i, &format!("w{i}"))?;
                    x.clone()
                }
                None => default,
            };
            w.push(x);
        }
        if let Some(&i) = classes.w.keys().find(|&&i| i > cutoff) {
            return invalid(format!("w{i} lies above the cutoff {cutoff}"));
        }
        if w[0] != mod2.one() {
            return invalid("w0 must be 1".into());
        }
        if !w[1].is_zero() {
            return invalid("w1 must vanish: the bundle is assumed orientable".into());
        }

        let n = rank / 2;
        let mut p = vec![integral.one()];
        for k in 1..=cutoff / 4 {
            let x = match classes.p.get(&k) {
                Some(x) => {
                    if k > n && !x.is_zero() {
                        return invalid(format!("p{k} is nonzero above half the rank"));
                    }
                    check_class(x, Coefficients::Integers, 4 * k, &format!("p{k}"))?;
                    x.clone()
                }
                None => integral.zero(4 * k)?,
            };
            p.push(x);
        }
        if let Some(&k) = classes.p.keys().find(|&&k| k == 0 || 4 * k > cutoff) {
            return invalid(format!("p{k} is outside 1 <= k <= cutoff/4"));
        }

        let euler = match classes.euler {
            Some(e) => {
                check_class(&e, Coefficients::Integers, rank, "euler")?;
                e
            }
            None => integral.zero(rank)?,
        };

        if let Some(pr) = &pairing {
            let piece = integral.piece(pr.degree)?;
            if pr.values.len() != piece.len() {
                return invalid(format!(
                    "pairing needs {} values in degree {}",
                    piece.len(),
                    pr.degree
                ));
            }
            if pr
                .values
                .iter()
                .zip(&piece.orders)
                .any(|(v, o)| !o.is_zero() && !v.is_zero())
            {
                return invalid("pairing must vanish on torsion classes".into());
            }
        }

        let mut d = BundleData {
            rank,
            base_dimension,
            rings,
            w,
            p,
            euler,
            pairing,
            notes: Vec::new(),
        };
        d.notes = d.validate()?;
        Ok(d)
    }

    /// Checks ρ₂(pₖ) = w₂ₖ², ρ₂(e) = w₂ₙ and the Wu formula in every degree
    /// within the cutoff. Returns notes for the checks that had to be skipped.
    fn validate(&self) -> Result<Vec<String>, ObstructError> {
        let rings = &self.rings;
        let mod2 = rings.mod2();
        for k in 1..self.p.len() {
            let lhs = rings.rho2(&self.p[k])?;
            let rhs = mod2.square(&self.w[2 * k])?;
            if lhs != rhs {
                let diff = mod2.add(&lhs, &rhs)?;
                return Err(ObstructError::Validation {
                    check: format!("rho2(p{k}) = w{}^2", 2 * k),
                    discrepancy: mod2.format(&diff),
                });
            }
        }
        let r = rings.rho2(&self.euler)?;
        if r != self.w[self.rank] {
            let diff = mod2.add(&r, &self.w[self.rank])?;
            return Err(ObstructError::Validation {
                check: format!("rho2(e) = w{}", self.rank),
                discrepancy: mod2.format(&diff),
            });
        }
        let mut notes = Vec::new();
        for m in 1..=self.cutoff() / 4 {
            match super::validate_wu_formula(self, m)? {
                WuCheck::Holds => {}
                WuCheck::Skipped(why) => notes.push(why),
                WuCheck::Fails(diff) => {
                    return Err(ObstructError::Validation {
                        check: format!("Wu formula for w{}", 2 * m),
                        discrepancy: rings.mod4().format(&diff),
                    })
                }
            }
        }
        Ok(notes)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Half the rank.
    pub fn n(&self) -> usize {
        self.rank / 2
    }

    pub fn base_dimension(&self) -> Option<usize> {
        self.base_dimension
    }

    pub fn rings(&self) -> &CohomologyRings {
        &self.rings
    }

    pub fn cutoff(&self) -> usize {
        self.rings.cutoff()
    }

    /// `w_i`, zero above the rank.
    pub fn w(&self, i: usize) -> Result<&RingElement, ObstructError> {
        self.w
            .get(i)
            .ok_or_else(|| ObstructError::OutOfRange(format!("w{i} lies above the cutoff")))
    }

    /// `p_k`, with `p_0 = 1`.
    pub fn p(&self, k: usize) -> Result<&RingElement, ObstructError> {
        self.p
            .get(k)
            .ok_or_else(|| ObstructError::OutOfRange(format!("p{k} lies above the cutoff")))
    }

    pub fn ws(&self) -> &[RingElement] {
        &self.w
    }

    pub fn ps(&self) -> &[RingElement] {
        &self.p
    }

    pub fn euler(&self) -> &RingElement {
        &self.euler
    }

    pub fn pairing(&self) -> Option<&Pairing> {
        self.pairing.as_ref()
    }

    /// Pairing of `x` with the fundamental class when the degrees match.
    pub fn evaluate(&self, x: &RingElement) -> Option<BigInt> {
        self.pairing.as_ref().and_then(|p| p.evaluate(x))
    }

    /// Notes produced during validation.
    pub fn validation_notes(&self) -> &[String] {
        &self.notes
    }
}

fn check_class(
    x: &RingElement,
    ring: Coefficients,
    degree: usize,
    name: &str,
) -> Result<(), ObstructError> {
    if x.ring() != ring || x.degree() != degree {
        return Err(ObstructError::InvalidBundle(format!(
            "{name} must be a {ring} class in degree {degree}, got a {} class in degree {}",
            x.ring(),
            x.degree()
        )));
    }
    Ok(())
}
