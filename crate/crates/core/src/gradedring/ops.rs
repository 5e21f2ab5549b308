use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::map::CoefficientMap;
use super::presentation::{Coefficients, RingPresentation};
use super::ring::{GradedRing, RingElement};
use super::RingError;
use crate::intlin::{solve_modular, IntMatrix};

const ENUMERATION_BUDGET: u64 = 10_000_000;

/// Result of [`CohomologyRings::integral_lifts`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftSearch {
    /// Lifts with every free coefficient within the bound, lexicographic.
    pub lifts: Vec<RingElement>,
    /// Set when no integral lift exists at all, independent of the bound.
    pub unsolvable: bool,
}

/// The integral, mod 2 and mod 4 cohomology of one space together with the
/// maps between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyRings {
    integral: GradedRing,
    mod2: GradedRing,
    mod4: GradedRing,
    rho2: CoefficientMap,
    rho4: CoefficientMap,
    rho2_4: CoefficientMap,
    theta2: CoefficientMap,
    beta: Option<CoefficientMap>,
    /// Sq¹ of each mod 2 generator, `None` past the cutoff.
    sq1_generators: Option<Vec<Option<RingElement>>>,
}

impl CohomologyRings {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        integral: GradedRing,
        mod2: GradedRing,
        mod4: GradedRing,
        rho2: CoefficientMap,
        rho4: CoefficientMap,
        rho2_4: CoefficientMap,
        theta2: CoefficientMap,
        beta: Option<CoefficientMap>,
        sq1_generators: Option<Vec<Option<RingElement>>>,
    ) -> Result<CohomologyRings, RingError> {
        use Coefficients::*;
        let expect = |r: &GradedRing, c: Coefficients| {
            if r.coefficients() == c {
                Ok(())
            } else {
                Err(RingError::Incompatible(format!(
                    "expected a {c} ring, got {}",
                    r.coefficients()
                )))
            }
        };
        expect(&integral, Integers)?;
        expect(&mod2, Mod2)?;
        expect(&mod4, Mod4)?;
        if integral.cutoff() != mod2.cutoff() || integral.cutoff() != mod4.cutoff() {
            return Err(RingError::Incompatible(
                "the three rings must share one cutoff".into(),
            ));
        }
        let check_map = |m: &CoefficientMap, s: Coefficients, t: Coefficients, shift: usize| {
            if m.source == s && m.target == t && m.degree_shift == shift {
                Ok(())
            } else {
                Err(RingError::Incompatible(format!(
                    "map {} has the wrong shape",
                    m.name
                )))
            }
        };
        check_map(&rho2, Integers, Mod2, 0)?;
        check_map(&rho4, Integers, Mod4, 0)?;
        check_map(&rho2_4, Mod4, Mod2, 0)?;
        check_map(&theta2, Mod2, Mod4, 0)?;
        if let Some(b) = &beta {
            check_map(b, Mod2, Integers, 1)?;
        }
        if let Some(table) = &sq1_generators {
            if table.len() != mod2.presentation().generators.len() {
                return Err(RingError::Incompatible(
                    "one Sq1 value per mod 2 generator required".into(),
                ));
            }
            for (g, v) in mod2.presentation().generators.iter().zip(table) {
                match v {
                    Some(v) if v.ring() != Mod2 || v.degree() != g.degree + 1 => {
                        return Err(RingError::Incompatible(format!(
                            "Sq1({}) has the wrong degree",
                            g.name
                        )))
                    }
                    None if g.degree < mod2.cutoff() => {
                        return Err(RingError::Incompatible(format!("Sq1({}) missing", g.name)))
                    }
                    _ => {}
                }
            }
        }
        let rings = CohomologyRings {
            integral,
            mod2,
            mod4,
            rho2,
            rho4,
            rho2_4,
            theta2,
            beta,
            sq1_generators,
        };
        rings.check_identities()?;
        Ok(rings)
    }

    /// Rings of a space with torsion-free integral cohomology: the mod 2 and
    /// mod 4 rings share the integral basis, the maps are coefficient
    /// reductions, θ₂ is multiplication by 2 and the Bockstein vanishes.
    pub fn from_torsion_free(presentation: RingPresentation) -> Result<CohomologyRings, RingError> {
        if !presentation.is_torsion_free() {
            return Err(RingError::Incompatible(
                "default maps need a torsion-free integral ring; supply the mod 2 and mod 4 data"
                    .into(),
            ));
        }
        let mod2 = GradedRing::build(presentation.with_coefficients(Coefficients::Mod2))?;
        let mod4 = GradedRing::build(presentation.with_coefficients(Coefficients::Mod4))?;
        let integral = GradedRing::build(presentation)?;
        let rho2 = CoefficientMap::monomialwise("rho2", &integral, &mod2, 1)?;
        let rho4 = CoefficientMap::monomialwise("rho4", &integral, &mod4, 1)?;
        let rho2_4 = CoefficientMap::monomialwise("rho2_4", &mod4, &mod2, 1)?;
        let theta2 = CoefficientMap::monomialwise("theta2", &mod2, &mod4, 2)?;
        let beta = CoefficientMap::zero("beta", &mod2, &integral, 1)?;
        let sq1 = mod2
            .presentation()
            .generators
            .iter()
            .map(|g| {
                if g.degree < mod2.cutoff() {
                    mod2.zero(g.degree + 1).map(Some)
                } else {
                    Ok(None)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(
            integral,
            mod2,
            mod4,
            rho2,
            rho4,
            rho2_4,
            theta2,
            Some(beta),
            Some(sq1),
        )
    }

    pub fn integral(&self) -> &GradedRing {
        &self.integral
    }

    pub fn mod2(&self) -> &GradedRing {
        &self.mod2
    }

    pub fn mod4(&self) -> &GradedRing {
        &self.mod4
    }

    pub fn ring(&self, c: Coefficients) -> &GradedRing {
        match c {
            Coefficients::Integers => &self.integral,
            Coefficients::Mod2 => &self.mod2,
            Coefficients::Mod4 => &self.mod4,
        }
    }

    pub fn cutoff(&self) -> usize {
        self.integral.cutoff()
    }

    pub fn rho2_map(&self) -> &CoefficientMap {
        &self.rho2
    }

    pub fn rho4_map(&self) -> &CoefficientMap {
        &self.rho4
    }

    pub fn rho2_4_map(&self) -> &CoefficientMap {
        &self.rho2_4
    }

    pub fn theta2_map(&self) -> &CoefficientMap {
        &self.theta2
    }

    pub fn beta_map(&self) -> Option<&CoefficientMap> {
        self.beta.as_ref()
    }

    pub fn sq1_generator_table(&self) -> Option<&[Option<RingElement>]> {
        self.sq1_generators.as_deref()
    }

    /// Mod 2 reduction ρ₂.
    pub fn rho2(&self, x: &RingElement) -> Result<RingElement, RingError> {
        self.rho2.apply(&self.mod2, x)
    }

    /// Mod 4 reduction ρ₄.
    pub fn rho4(&self, x: &RingElement) -> Result<RingElement, RingError> {
        self.rho4.apply(&self.mod4, x)
    }

    /// Reduction ρ₂⁴ of mod 4 classes to mod 2.
    pub fn rho2_4(&self, x: &RingElement) -> Result<RingElement, RingError> {
        self.rho2_4.apply(&self.mod2, x)
    }

    /// θ₂, induced by Z/2 → Z/4, 1 ↦ 2.
    pub fn theta2(&self, x: &RingElement) -> Result<RingElement, RingError> {
        self.theta2.apply(&self.mod4, x)
    }

    /// Integral Bockstein β.
    pub fn beta(&self, x: &RingElement) -> Result<RingElement, RingError> {
        match &self.beta {
            Some(b) if b.matrix(x.degree()).is_some() => b.apply(&self.integral, x),
            _ => Err(RingError::BetaUndefined(x.degree())),
        }
    }

    /// Sq¹, as ρ₂∘β when the Bockstein is tabulated, otherwise through the
    /// derivation rule from its values on generators.
    pub fn sq1(&self, x: &RingElement) -> Result<RingElement, RingError> {
        if x.ring() != Coefficients::Mod2 {
            return Err(RingError::WrongRing {
                expected: Coefficients::Mod2,
                got: x.ring(),
            });
        }
        if let Some(b) = &self.beta {
            if b.matrix(x.degree()).is_some() {
                return self.rho2(&self.beta(x)?);
            }
        }
        self.sq1_by_derivation(x)
    }

    fn sq1_by_derivation(&self, x: &RingElement) -> Result<RingElement, RingError> {
        let d = x.degree();
        if d + 1 > self.cutoff() {
            return Err(RingError::BetaUndefined(d));
        }
        let table = self
            .sq1_generators
            .as_ref()
            .ok_or(RingError::BetaUndefined(d))?;
        let ring = &self.mod2;
        let mut acc = ring.zero(d + 1)?;
        let basis = ring.piece(d)?.basis.clone();
        for (c, m) in x.coefficients().iter().zip(&basis) {
            if c.is_zero() {
                continue;
            }
            // the monomial as an ordered list of generator factors
            let factors: Vec<usize> =
                m.0.iter()
                    .enumerate()
                    .flat_map(|(i, &e)| std::iter::repeat_n(i, e as usize))
                    .collect();
            let gens = &ring.presentation().generators;
            let gen_elem = |i: usize| ring.monomial_element(&gens[i].name);
            for k in 0..factors.len() {
                let mut term = ring.one();
                for (pos, &g) in factors.iter().enumerate() {
                    let f = if pos == k {
                        table[g]
                            .clone()
                            .ok_or(RingError::BetaUndefined(gens[g].degree))?
                    } else {
                        gen_elem(g)?
                    };
                    term = ring.cup(&term, &f)?;
                }
                acc = ring.add(&acc, &ring.scale(c, &term)?)?;
            }
        }
        Ok(acc)
    }

    /// Matrix of Sq¹ from degree `d` to degree `d + 1` over the mod 2 bases.
    pub fn sq1_matrix(&self, d: usize) -> Result<IntMatrix, RingError> {
        let rows = self.mod2.piece(d + 1)?.len();
        let basis = self.mod2.basis_elements(d)?;
        let mut m = IntMatrix::zeros(rows, basis.len());
        for (j, b) in basis.iter().enumerate() {
            for (i, c) in self.sq1(b)?.coefficients().iter().enumerate() {
                m[(i, j)] = c.clone();
            }
        }
        Ok(m)
    }

    /// Some `y` with `Sq¹(y) = target`, or `None` when `target ∉ im Sq¹`.
    pub fn solve_sq1(&self, target: &RingElement) -> Result<Option<RingElement>, RingError> {
        let d = target.degree();
        if d == 0 {
            return Ok(if target.is_zero() {
                Some(self.mod2.zero(0)?)
            } else {
                None
            });
        }
        let m = self.sq1_matrix(d - 1)?;
        let moduli = self.mod2.piece(d)?.orders.clone();
        let sol = solve_modular(&m, &moduli, target.coefficients())
            .map_err(|e| RingError::InvalidMap(e.to_string()))?;
        sol.map(|s| self.mod2.element(d - 1, s.particular))
            .transpose()
    }

    /// One integral class reducing to `u`, if any exists.
    pub fn solve_lift(&self, u: &RingElement) -> Result<Option<RingElement>, RingError> {
        if u.ring() != Coefficients::Mod2 {
            return Err(RingError::WrongRing {
                expected: Coefficients::Mod2,
                got: u.ring(),
            });
        }
        let d = u.degree();
        let m = self.rho2.matrix(d).ok_or_else(|| RingError::MapUndefined {
            map: "rho2".into(),
            degree: d,
        })?;
        let moduli = self.mod2.piece(d)?.orders.clone();
        let sol = solve_modular(m, &moduli, u.coefficients())
            .map_err(|e| RingError::InvalidMap(e.to_string()))?;
        sol.map(|s| self.integral.element(d, s.particular))
            .transpose()
    }

    /// All integral lifts of `u` whose free coefficients lie in
    /// `[-bound, bound]`, in lexicographic order.
    pub fn integral_lifts(&self, u: &RingElement, bound: u64) -> Result<LiftSearch, RingError> {
        if self.solve_lift(u)?.is_none() {
            return Ok(LiftSearch {
                lifts: Vec::new(),
                unsolvable: true,
            });
        }
        let d = u.degree();
        let orders = self.integral.piece(d)?.orders.clone();
        let ranges: Vec<(BigInt, BigInt)> = orders
            .iter()
            .map(|o| {
                if o.is_zero() {
                    (-BigInt::from(bound), BigInt::from(bound))
                } else {
                    (BigInt::zero(), o - 1)
                }
            })
            .collect();
        let lifts = enumerate_box(&ranges, "integral lift")?
            .into_iter()
            .map(|v| self.integral.element(d, v))
            .filter(|x| {
                x.as_ref()
                    .map_or(true, |x| self.rho2(x).map_or(true, |r| r == *u))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LiftSearch {
            lifts,
            unsolvable: false,
        })
    }

    /// Every `x` in `y`'s degree with `n·x = y`; empty when `y` is not
    /// divisible. The list is finite because `n·x = 0` has no free solutions.
    pub fn divide_by(&self, n: u64, y: &RingElement) -> Result<Vec<RingElement>, RingError> {
        let ring = self.ring(y.ring());
        let d = y.degree();
        let piece = ring.piece(d)?;
        let orders = piece.orders.clone();
        let mut a = IntMatrix::identity(piece.len());
        for i in 0..piece.len() {
            a[(i, i)] = BigInt::from(n);
        }
        let sol = solve_modular(&a, &orders, y.coefficients())
            .map_err(|e| RingError::InvalidMap(e.to_string()))?;
        let Some(sol) = sol else {
            return Ok(Vec::new());
        };
        let mut kernel_orders = Vec::new();
        for k in &sol.kernel_basis {
            let mut ord = BigInt::one();
            for (kj, oj) in k.iter().zip(&orders) {
                if kj.is_zero() {
                    continue;
                }
                if oj.is_zero() {
                    return Err(RingError::InvalidMap(
                        "free direction in the n-torsion".into(),
                    ));
                }
                ord = ord.lcm(&(oj / oj.gcd(kj)));
            }
            kernel_orders.push(ord);
        }
        let ranges: Vec<(BigInt, BigInt)> = kernel_orders
            .iter()
            .map(|o| (BigInt::zero(), o - 1))
            .collect();
        let mut seen = BTreeSet::new();
        for t in enumerate_box(&ranges, "quotient")? {
            let mut v = sol.particular.clone();
            for (ti, k) in t.iter().zip(&sol.kernel_basis) {
                for (vj, kj) in v.iter_mut().zip(k) {
                    *vj += ti * kj;
                }
            }
            seen.insert(ring.element(d, v)?);
        }
        Ok(seen.into_iter().collect())
    }

    /// Pontryagin square of a mod 2 class with an integral lift ũ: ρ₄(ũ²).
    pub fn pontryagin_square(&self, u: &RingElement) -> Result<RingElement, RingError> {
        let lift = self
            .solve_lift(u)?
            .ok_or_else(|| RingError::NoIntegralLift(self.mod2.format(u)))?;
        self.pontryagin_square_with_lift(&lift)
    }

    pub fn pontryagin_square_with_lift(
        &self,
        lift: &RingElement,
    ) -> Result<RingElement, RingError> {
        self.rho4(&self.integral.square(lift)?)
    }

    /// Checks θ₂ρ₂ = ρ₄·2, ρ₂⁴ρ₄ = ρ₂, ρ₂⁴θ₂ = 0, 2β = 0, βρ₂ = 0 and, when both
    /// are present, that ρ₂β agrees with the Sq¹ generator table.
    pub fn check_identities(&self) -> Result<(), RingError> {
        let two = BigInt::from(2);
        let fail =
            |identity: &str, ring: &GradedRing, x: &RingElement| RingError::IdentityViolation {
                identity: identity.into(),
                element: format!("{} in degree {}", ring.format(x), x.degree()),
            };
        for d in 0..=self.cutoff() {
            for x in self.integral.basis_elements(d)? {
                let r2 = self.rho2(&x)?;
                if self.theta2(&r2)? != self.rho4(&self.integral.scale(&two, &x)?)? {
                    return Err(fail("theta2(rho2(x)) = rho4(2x)", &self.integral, &x));
                }
                if self.rho2_4(&self.rho4(&x)?)? != r2 {
                    return Err(fail("rho2_4(rho4(x)) = rho2(x)", &self.integral, &x));
                }
                if d < self.cutoff() && self.beta.is_some() && !self.beta(&r2)?.is_zero() {
                    return Err(fail("beta(rho2(x)) = 0", &self.integral, &x));
                }
            }
            for y in self.mod2.basis_elements(d)? {
                if !self.rho2_4(&self.theta2(&y)?)?.is_zero() {
                    return Err(fail("rho2_4(theta2(y)) = 0", &self.mod2, &y));
                }
                if d < self.cutoff() && self.beta.is_some() {
                    let b = self.beta(&y)?;
                    if !self.integral.scale(&two, &b)?.is_zero() {
                        return Err(fail("2 beta(y) = 0", &self.mod2, &y));
                    }
                    if self.sq1_generators.is_some()
                        && self.rho2(&b)? != self.sq1_by_derivation(&y)?
                    {
                        return Err(fail("rho2(beta(y)) = Sq1(y)", &self.mod2, &y));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Every integer vector in the box, first coordinate most significant.
fn enumerate_box(ranges: &[(BigInt, BigInt)], what: &str) -> Result<Vec<Vec<BigInt>>, RingError> {
    let mut total: u64 = 1;
    for (lo, hi) in ranges {
        let width = (hi - lo + 1u32).to_u64().unwrap_or(u64::MAX);
        total = total.saturating_mul(width);
    }
    if total > ENUMERATION_BUDGET {
        return Err(RingError::EnumerationTooLarge(what.into()));
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut cur: Vec<BigInt> = ranges.iter().map(|(lo, _)| lo.clone()).collect();
    if ranges.iter().any(|(lo, hi)| lo > hi) {
        return Ok(out);
    }
    loop {
        out.push(cur.clone());
        let mut i = ranges.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if cur[i] < ranges[i].1 {
                cur[i] += 1;
                for (c, (lo, _)) in cur.iter_mut().zip(ranges).skip(i + 1) {
                    *c = lo.clone();
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradedring::presentation::Generator;

    fn cp2() -> CohomologyRings {
        let p = RingPresentation::new(
            Coefficients::Integers,
            8,
            vec![Generator::new("alpha", 2, 0)],
        )
        .with_zero("alpha^3")
        .unwrap();
        CohomologyRings::from_torsion_free(p).unwrap()
    }

    #[test]
    fn reductions() {
        let r = cp2();
        let a3 = r.integral().element_i64(2, &[3]).unwrap();
        assert_eq!(
            r.rho2(&a3).unwrap(),
            r.mod2().monomial_element("alpha").unwrap()
        );
        assert_eq!(r.rho4(&a3).unwrap(), r.mod4().element_i64(2, &[3]).unwrap());
    }

    #[test]
    fn lifts_of_w2_on_cp2() {
        let r = cp2();
        let w2 = r.mod2().monomial_element("alpha").unwrap();
        let search = r.integral_lifts(&w2, 10).unwrap();
        assert!(!search.unsolvable);
        let coeffs: Vec<i64> = search
            .lifts
            .iter()
            .map(|x| i64::try_from(&x.coefficients()[0]).unwrap())
            .collect();
        assert_eq!(coeffs, vec![-9, -7, -5, -3, -1, 1, 3, 5, 7, 9]);
    }

    #[test]
    fn lifts_of_zero_are_even() {
        let r = cp2();
        let zero = r.mod2().zero(4).unwrap();
        let coeffs: Vec<i64> = r
            .integral_lifts(&zero, 2)
            .unwrap()
            .lifts
            .iter()
            .map(|x| i64::try_from(&x.coefficients()[0]).unwrap())
            .collect();
        assert_eq!(coeffs, vec![-2, 0, 2]);
        let unit = r.mod2().one();
        let units = r.integral_lifts(&unit, 1).unwrap().lifts;
        assert_eq!(
            units,
            vec![
                r.integral().neg(&r.integral().one()).unwrap(),
                r.integral().one()
            ]
        );
    }

    #[test]
    fn division() {
        let r = cp2();
        let a2 = r.integral().monomial_element("alpha^2").unwrap();
        let four_a2 = r.integral().scale(&BigInt::from(4), &a2).unwrap();
        assert_eq!(r.divide_by(4, &four_a2).unwrap(), vec![a2.clone()]);
        assert!(r.divide_by(2, &a2).unwrap().is_empty());
    }

    #[test]
    fn division_in_mixed_piece() {
        // Z ⊕ Z/2 in degree 4: x (free) and t*w (order 2)
        let p = RingPresentation::new(
            Coefficients::Integers,
            4,
            vec![
                Generator::new("t", 1, 0),
                Generator::new("w", 3, 2),
                Generator::new("x", 4, 0),
            ],
        );
        let ring = GradedRing::build(p).unwrap();
        let piece = ring.piece(4).unwrap();
        assert_eq!(piece.group().to_string(), "Z + Z/2");
        // wrap in a space so divide_by can be reached; the maps are irrelevant here
        let zero = ring.zero(4).unwrap();
        let sols = divide_by_in(&ring, 4, &zero);
        assert_eq!(sols.len(), 2);
        assert!(sols[0].is_zero());
        assert!(!sols[1].is_zero());
        assert!(ring.scale(&BigInt::from(2), &sols[1]).unwrap().is_zero());
    }

    fn divide_by_in(ring: &GradedRing, n: u64, y: &RingElement) -> Vec<RingElement> {
        // same algorithm as CohomologyRings::divide_by, on a standalone ring
        let d = y.degree();
        let orders = ring.piece(d).unwrap().orders.clone();
        let ranges: Vec<(BigInt, BigInt)> = orders
            .iter()
            .map(|o| {
                if o.is_zero() {
                    (BigInt::from(-8), BigInt::from(8))
                } else {
                    (BigInt::zero(), o - 1)
                }
            })
            .collect();
        enumerate_box(&ranges, "test")
            .unwrap()
            .into_iter()
            .map(|v| ring.element(d, v).unwrap())
            .filter(|x| ring.scale(&BigInt::from(n), x).unwrap() == *y)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    #[test]
    fn pontryagin_square_on_cp2() {
        let r = cp2();
        let w2 = r.mod2().monomial_element("alpha").unwrap();
        let p = r.pontryagin_square(&w2).unwrap();
        assert_eq!(
            p,
            r.rho4(&r.integral().monomial_element("alpha^2").unwrap())
                .unwrap()
        );
        assert!(r
            .pontryagin_square(&r.mod2().zero(2).unwrap())
            .unwrap()
            .is_zero());
        assert_eq!(r.rho2_4(&p).unwrap(), r.mod2().square(&w2).unwrap());
    }

    #[test]
    fn derivation_rule() {
        // u in degree 2 with Sq1(u) = a, v in degree 2 with Sq1(v) = 0
        let p = RingPresentation::new(
            Coefficients::Mod2,
            5,
            vec![
                Generator::new("u", 2, 0),
                Generator::new("v", 2, 0),
                Generator::new("a", 3, 0),
            ],
        );
        let mod2 = GradedRing::build(p).unwrap();
        let table = vec![
            Some(mod2.monomial_element("a").unwrap()),
            Some(mod2.zero(3).unwrap()),
            None,
        ];
        let rings = CohomologyRings {
            integral: GradedRing::build(RingPresentation::new(Coefficients::Integers, 5, vec![]))
                .unwrap(),
            mod4: GradedRing::build(RingPresentation::new(Coefficients::Mod4, 5, vec![])).unwrap(),
            rho2: dummy_map(),
            rho4: dummy_map(),
            rho2_4: dummy_map(),
            theta2: dummy_map(),
            beta: None,
            sq1_generators: Some(table),
            mod2,
        };
        let uv = rings.mod2.monomial_element("u*v").unwrap();
        let expected = rings.mod2.monomial_element("v*a").unwrap();
        assert_eq!(rings.sq1(&uv).unwrap(), expected);
    }

    fn dummy_map() -> CoefficientMap {
        let z =
            GradedRing::build(RingPresentation::new(Coefficients::Integers, 1, vec![])).unwrap();
        CoefficientMap::zero("dummy", &z, &z, 0).unwrap()
    }

    #[test]
    fn box_enumeration_order() {
        let ranges = vec![
            (BigInt::from(-1), BigInt::from(1)),
            (BigInt::zero(), BigInt::one()),
        ];
        let out = enumerate_box(&ranges, "t").unwrap();
        assert_eq!(out.len(), 6);
        assert_eq!(out[0], vec![BigInt::from(-1), BigInt::zero()]);
        assert_eq!(out[1], vec![BigInt::from(-1), BigInt::one()]);
        assert_eq!(out[5], vec![BigInt::one(), BigInt::one()]);
    }
}
