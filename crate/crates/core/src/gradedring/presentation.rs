use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::RingError;

/// Coefficient ring of a cohomology ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Coefficients {
    #[serde(rename = "Z")]
    Integers,
    #[serde(rename = "Z/2")]
    Mod2,
    #[serde(rename = "Z/4")]
    Mod4,
}

impl Coefficients {
    /// 0 for Z.
    pub fn modulus(self) -> u64 {
        match self {
            Coefficients::Integers => 0,
            Coefficients::Mod2 => 2,
            Coefficients::Mod4 => 4,
        }
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Coefficients::Integers => "Z",
            Coefficients::Mod2 => "Z/2",
            Coefficients::Mod4 => "Z/4",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: usize,
    /// Additive order; 0 means free over the coefficient ring.
    #[serde(default)]
    pub order: u64,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: usize, order: u64) -> Self {
        Generator {
            name: name.into(),
            degree,
            order,
        }
    }
}

/// Exponent vector over the generators, read as the ordered product
/// `g0^e0 * g1^e1 * …`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n_generators: usize) -> Self {
        Monomial(vec![0; n_generators])
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

/// `lhs → Σ coeff · monomial`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Monomial,
    pub rhs: Vec<(Monomial, BigInt)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingPresentation {
    pub coefficients: Coefficients,
    pub cutoff: usize,
    pub generators: Vec<Generator>,
    pub rules: Vec<RewriteRule>,
}

impl RingPresentation {
    pub fn new(coefficients: Coefficients, cutoff: usize, generators: Vec<Generator>) -> Self {
        RingPresentation {
            coefficients,
            cutoff,
            generators,
            rules: Vec::new(),
        }
    }

    /// Adds `lhs → rhs` with both sides written as monomial strings.
    pub fn with_rule(mut self, lhs: &str, rhs: &[(&str, i64)]) -> Result<Self, RingError> {
        let (lhs_m, lhs_sign) = self.parse_monomial(lhs)?;
        let mut terms = Vec::new();
        for (m, c) in rhs {
            let (mono, sign) = self.parse_monomial(m)?;
            terms.push((mono, BigInt::from(*c) * sign * lhs_sign));
        }
        self.rules.push(RewriteRule {
            lhs: lhs_m,
            rhs: terms,
        });
        Ok(self)
    }

    /// Shorthand for a rule sending `lhs` to zero.
    pub fn with_zero(self, lhs: &str) -> Result<Self, RingError> {
        self.with_rule(lhs, &[])
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn degree_of(&self, m: &Monomial) -> usize {
        m.0.iter()
            .zip(&self.generators)
            .map(|(&e, g)| e as usize * g.degree)
            .sum()
    }

    fn is_odd(&self, i: usize) -> bool {
        self.generators[i].degree % 2 == 1
    }

    /// Koszul sign of `a · b = sign · (a+b)` where both sides are ordered
    /// products of generators.
    pub fn product_sign(&self, a: &Monomial, b: &Monomial) -> i32 {
        let n = self.generators.len();
        let mut odd_after = 0u64;
        let mut parity = 0u64;
        for j in (0..n).rev() {
            if self.is_odd(j) {
                parity += b.0[j] as u64 * odd_after;
                odd_after += a.0[j] as u64;
            }
        }
        if parity.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Additive order of a monomial, or `None` when it is forced to vanish.
    ///
    /// The order is the gcd of the coefficient modulus and the orders of the
    /// generators involved. An odd-degree generator appearing squared makes
    /// the monomial 2-torsion, and zero over Z when that generator is free.
    pub fn monomial_order(&self, m: &Monomial) -> Option<BigInt> {
        let mut order = BigInt::from(self.coefficients.modulus());
        for (i, &e) in m.0.iter().enumerate() {
            if e > 0 {
                order = order.gcd(&BigInt::from(self.generators[i].order));
            }
        }
        let mut odd_square = false;
        for (i, &e) in m.0.iter().enumerate() {
            if e >= 2 && self.is_odd(i) {
                if self.coefficients == Coefficients::Integers && self.generators[i].order == 0 {
                    return None;
                }
                odd_square = true;
            }
        }
        if odd_square {
            order = order.gcd(&BigInt::from(2));
        }
        if order.is_one() {
            None
        } else {
            Some(order)
        }
    }

    /// Parses `"1"`, `"alpha^2"`, `"t*a*b"`. Returns the exponent vector and
    /// the sign picked up by reordering the factors into generator order.
    pub fn parse_monomial(&self, text: &str) -> Result<(Monomial, i32), RingError> {
        let n = self.generators.len();
        let text = text.trim();
        let mut acc = Monomial::one(n);
        let mut sign = 1;
        if text == "1" {
            return Ok((acc, 1));
        }
        for factor in text.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((name, e)) => {
                    let e: u32 = e
                        .trim()
                        .parse()
                        .map_err(|_| RingError::BadMonomial(text.to_string()))?;
                    (name.trim(), e)
                }
                None => (factor, 1),
            };
            let idx = self
                .generator_index(name)
                .ok_or_else(|| RingError::UnknownGenerator(name.to_string()))?;
            let mut single = Monomial::one(n);
            single.0[idx] = 1;
            for _ in 0..exp {
                sign *= self.product_sign(&acc, &single);
                acc = acc.mul(&single);
            }
        }
        Ok((acc, sign))
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> =
            m.0.iter()
                .zip(&self.generators)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, g)| {
                    if e == 1 {
                        g.name.clone()
                    } else {
                        format!("{}^{}", g.name, e)
                    }
                })
                .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// The same generators and rules read over another coefficient ring.
    ///
    /// Squares of odd free generators vanish automatically over Z but not
    /// over Z/2 or Z/4, so explicit rules are added for them.
    pub fn with_coefficients(&self, coefficients: Coefficients) -> RingPresentation {
        let modulus = BigInt::from(coefficients.modulus());
        let reduce = |c: &BigInt| {
            if modulus.is_zero() {
                c.clone()
            } else {
                c.mod_floor(&modulus)
            }
        };
        let mut rules: Vec<RewriteRule> = self
            .rules
            .iter()
            .map(|r| RewriteRule {
                lhs: r.lhs.clone(),
                rhs: r
                    .rhs
                    .iter()
                    .map(|(m, c)| (m.clone(), reduce(c)))
                    .filter(|(_, c)| !c.is_zero())
                    .collect(),
            })
            .collect();
        if self.coefficients == Coefficients::Integers && coefficients != Coefficients::Integers {
            for (i, g) in self.generators.iter().enumerate() {
                if g.degree % 2 == 1 && g.order == 0 {
                    let mut sq = Monomial::one(self.generators.len());
                    sq.0[i] = 2;
                    if !rules.iter().any(|r| r.lhs.divides(&sq)) {
                        rules.push(RewriteRule {
                            lhs: sq,
                            rhs: Vec::new(),
                        });
                    }
                }
            }
        }
        RingPresentation {
            coefficients,
            cutoff: self.cutoff,
            generators: self.generators.clone(),
            rules,
        }
    }

    /// True when no generator carries finite additive order.
    pub fn is_torsion_free(&self) -> bool {
        self.coefficients == Coefficients::Integers && self.generators.iter().all(|g| g.order == 0)
    }
}
