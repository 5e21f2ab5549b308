use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::presentation::{Coefficients, Monomial, RingPresentation};
use super::RingError;
use crate::intlin::{group_from_presentation, AbelianGroupDescriptor, IntMatrix};

const MAX_REWRITE_DEPTH: usize = 256;

/// One graded piece: a monomial basis with the additive order of each basis
/// element (0 = free).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub basis: Vec<Monomial>,
    pub orders: Vec<BigInt>,
}

impl Piece {
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Diagonal relation matrix presenting the piece as an abelian group.
    pub fn relation_matrix(&self) -> IntMatrix {
        IntMatrix::diagonal(&self.orders)
    }

    pub fn group(&self) -> AbelianGroupDescriptor {
        group_from_presentation(&self.relation_matrix())
    }

    pub fn is_torsion_free(&self) -> bool {
        self.orders.iter().all(Zero::is_zero)
    }
}

/// An element of one graded piece, in normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RingElement {
    ring: Coefficients,
    degree: usize,
    #[serde(with = "crate::bigint_serde::vec")]
    coefficients: Vec<BigInt>,
}

impl RingElement {
    pub fn ring(&self) -> Coefficients {
        self.ring
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }
}

/// A truncated graded-commutative ring with its multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedRing {
    presentation: RingPresentation,
    pieces: Vec<Piece>,
    products: BTreeMap<(usize, usize, usize, usize), Vec<BigInt>>,
}

impl fmt::Debug for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedRing")
            .field("coefficients", &self.presentation.coefficients)
            .field("cutoff", &self.presentation.cutoff)
            .field("pieces", &self.pieces)
            .finish()
    }
}

impl GradedRing {
    /// Enumerates bases up to the cutoff, checks the rewrite system and
    /// materializes the multiplication table.
    pub fn build(presentation: RingPresentation) -> Result<GradedRing, RingError> {
        check_presentation(&presentation)?;
        let cutoff = presentation.cutoff;
        let all = enumerate_monomials(&presentation);

        let mut pieces: Vec<Piece> = (0..=cutoff)
            .map(|_| Piece {
                basis: Vec::new(),
                orders: Vec::new(),
            })
            .collect();
        for m in &all {
            if presentation.rules.iter().any(|r| r.lhs.divides(m)) {
                continue;
            }
            if let Some(order) = presentation.monomial_order(m) {
                let d = presentation.degree_of(m);
                pieces[d].basis.push(m.clone());
                pieces[d].orders.push(order);
            }
        }
        for piece in &mut pieces {
            let mut paired: Vec<(Monomial, BigInt)> =
                piece.basis.drain(..).zip(piece.orders.drain(..)).collect();
            // lexicographic, earlier generators most significant
            paired.sort_by(|a, b| b.0.cmp(&a.0));
            for (m, o) in paired {
                piece.basis.push(m);
                piece.orders.push(o);
            }
        }

        let mut ring = GradedRing {
            presentation,
            pieces,
            products: BTreeMap::new(),
        };

        for rule in &ring.presentation.rules {
            for (m, _) in &rule.rhs {
                if ring.basis_index(m).is_none() {
                    return Err(RingError::InvalidRule(format!(
                        "right-hand side of {} → … uses non-basis monomial {}",
                        ring.presentation.format_monomial(&rule.lhs),
                        ring.presentation.format_monomial(m)
                    )));
                }
            }
        }

        for m in &all {
            ring.check_confluent(m)?;
            if let Some(order) = ring.presentation.monomial_order(m) {
                let image = ring.reduce_monomial(m)?;
                let d = ring.presentation.degree_of(m);
                if !ring
                    .reduce_vec(d, image.iter().map(|c| c * &order).collect())
                    .iter()
                    .all(Zero::is_zero)
                {
                    return Err(RingError::InvalidRule(format!(
                        "{} has order {} but rewrites to a class of larger order",
                        ring.presentation.format_monomial(m),
                        order
                    )));
                }
            }
        }

        let mut products = BTreeMap::new();
        for dx in 0..=cutoff {
            for dy in 0..=cutoff - dx {
                for (i, mx) in ring.pieces[dx].basis.iter().enumerate() {
                    for (j, my) in ring.pieces[dy].basis.iter().enumerate() {
                        let sign = ring.presentation.product_sign(mx, my);
                        let v = ring.reduce_monomial(&mx.mul(my))?;
                        let v = ring.reduce_vec(dx + dy, v.into_iter().map(|c| c * sign).collect());
                        products.insert((dx, i, dy, j), v);
                    }
                }
            }
        }
        ring.products = products;
        ring.check_graded_commutative()?;
        ring.check_associative()?;
        Ok(ring)
    }

    pub fn presentation(&self) -> &RingPresentation {
        &self.presentation
    }

    pub fn coefficients(&self) -> Coefficients {
        self.presentation.coefficients
    }

    pub fn cutoff(&self) -> usize {
        self.presentation.cutoff
    }

    pub fn piece(&self, degree: usize) -> Result<&Piece, RingError> {
        self.pieces.get(degree).ok_or(RingError::DegreeOverflow {
            degree,
            cutoff: self.cutoff(),
        })
    }

    pub fn basis_index(&self, m: &Monomial) -> Option<usize> {
        let d = self.presentation.degree_of(m);
        self.pieces.get(d)?.basis.iter().position(|b| b == m)
    }

    pub fn zero(&self, degree: usize) -> Result<RingElement, RingError> {
        let n = self.piece(degree)?.len();
        Ok(RingElement {
            ring: self.coefficients(),
            degree,
            coefficients: vec![BigInt::zero(); n],
        })
    }

    pub fn one(&self) -> RingElement {
        self.monomial_element("1")
            .expect("unit is always a basis monomial")
    }

    /// Element with the given coefficients over the degree's basis, reduced
    /// to normal form.
    pub fn element(
        &self,
        degree: usize,
        coefficients: Vec<BigInt>,
    ) -> Result<RingElement, RingError> {
        let piece = self.piece(degree)?;
        if coefficients.len() != piece.len() {
            return Err(RingError::WrongLength {
                degree,
                expected: piece.len(),
                got: coefficients.len(),
            });
        }
        Ok(RingElement {
            ring: self.coefficients(),
            degree,
            coefficients: self.reduce_vec(degree, coefficients),
        })
    }

    pub fn element_i64(
        &self,
        degree: usize,
        coefficients: &[i64],
    ) -> Result<RingElement, RingError> {
        self.element(
            degree,
            coefficients.iter().map(|&c| BigInt::from(c)).collect(),
        )
    }

    pub fn basis_element(&self, degree: usize, index: usize) -> Result<RingElement, RingError> {
        let mut e = self.zero(degree)?;
        if index >= e.coefficients.len() {
            return Err(RingError::WrongLength {
                degree,
                expected: e.coefficients.len(),
                got: index + 1,
            });
        }
        e.coefficients[index] = BigInt::one();
        Ok(RingElement {
            coefficients: self.reduce_vec(degree, e.coefficients),
            ..e
        })
    }

    pub fn basis_elements(&self, degree: usize) -> Result<Vec<RingElement>, RingError> {
        (0..self.piece(degree)?.len())
            .map(|i| self.basis_element(degree, i))
            .collect()
    }

    /// Any monomial, rewritten into normal form.
    pub fn monomial_element(&self, text: &str) -> Result<RingElement, RingError> {
        let (m, sign) = self.presentation.parse_monomial(text)?;
        let d = self.presentation.degree_of(&m);
        let v = self.reduce_monomial(&m)?;
        self.element(d, v.into_iter().map(|c| c * sign).collect())
    }

    /// Parses `Σ coeff · monomial` written as (monomial, coefficient) pairs.
    /// Every monomial must be a basis monomial of the stated degree.
    pub fn parse_class<'a, I>(&self, degree: usize, terms: I) -> Result<RingElement, RingError>
    where
        I: IntoIterator<Item = (&'a str, BigInt)>,
    {
        let piece = self.piece(degree)?;
        let mut v = vec![BigInt::zero(); piece.len()];
        for (text, c) in terms {
            let (m, sign) = self.presentation.parse_monomial(text)?;
            let d = self.presentation.degree_of(&m);
            if d != degree {
                return Err(RingError::DegreeMismatch {
                    expected: degree,
                    got: d,
                });
            }
            let idx = piece
                .basis
                .iter()
                .position(|b| *b == m)
                .ok_or_else(|| RingError::NotABasisMonomial(text.to_string()))?;
            v[idx] += c * sign;
        }
        self.element(degree, v)
    }

    fn own(&self, x: &RingElement) -> Result<(), RingError> {
        if x.ring != self.coefficients() {
            return Err(RingError::WrongRing {
                expected: self.coefficients(),
                got: x.ring,
            });
        }
        if x.degree > self.cutoff() || x.coefficients.len() != self.pieces[x.degree].len() {
            return Err(RingError::WrongLength {
                degree: x.degree,
                expected: self.pieces.get(x.degree).map_or(0, Piece::len),
                got: x.coefficients.len(),
            });
        }
        Ok(())
    }

    pub fn add(&self, x: &RingElement, y: &RingElement) -> Result<RingElement, RingError> {
        self.own(x)?;
        self.own(y)?;
        if x.degree != y.degree {
            return Err(RingError::DegreeMismatch {
                expected: x.degree,
                got: y.degree,
            });
        }
        let v = x
            .coefficients
            .iter()
            .zip(&y.coefficients)
            .map(|(a, b)| a + b)
            .collect();
        self.element(x.degree, v)
    }

    pub fn sub(&self, x: &RingElement, y: &RingElement) -> Result<RingElement, RingError> {
        self.add(x, &self.neg(y)?)
    }

    pub fn neg(&self, x: &RingElement) -> Result<RingElement, RingError> {
        self.scale(&BigInt::from(-1), x)
    }

    pub fn scale(&self, n: &BigInt, x: &RingElement) -> Result<RingElement, RingError> {
        self.own(x)?;
        self.element(x.degree, x.coefficients.iter().map(|c| c * n).collect())
    }

    pub fn sum<'a, I: IntoIterator<Item = &'a RingElement>>(
        &self,
        degree: usize,
        items: I,
    ) -> Result<RingElement, RingError> {
        let mut acc = self.zero(degree)?;
        for x in items {
            acc = self.add(&acc, x)?;
        }
        Ok(acc)
    }

    /// Cup product.
    pub fn cup(&self, x: &RingElement, y: &RingElement) -> Result<RingElement, RingError> {
        self.own(x)?;
        self.own(y)?;
        let d = x.degree + y.degree;
        if d > self.cutoff() {
            return Err(RingError::DegreeOverflow {
                degree: d,
                cutoff: self.cutoff(),
            });
        }
        let mut v = vec![BigInt::zero(); self.pieces[d].len()];
        for (i, a) in x.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coefficients.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.products[&(x.degree, i, y.degree, j)]
                    .iter()
                    .enumerate()
                {
                    v[k] += &ab * c;
                }
            }
        }
        self.element(d, v)
    }

    pub fn square(&self, x: &RingElement) -> Result<RingElement, RingError> {
        self.cup(x, x)
    }

    /// `Σ coeff · monomial`, e.g. `3*alpha^2 + t*W`.
    pub fn format(&self, x: &RingElement) -> String {
        let Ok(piece) = self.piece(x.degree) else {
            return format!("<degree {} element>", x.degree);
        };
        let terms: Vec<String> = x
            .coefficients
            .iter()
            .zip(&piece.basis)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, m)| {
                let name = self.presentation.format_monomial(m);
                match (c.is_one(), name.as_str()) {
                    (_, "1") => c.to_string(),
                    (true, _) => name,
                    _ if *c == BigInt::from(-1) => format!("-{name}"),
                    _ => format!("{c}*{name}"),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        }
    }

    /// Coefficients reduced modulo each basis element's order.
    pub(crate) fn reduce_vec(&self, degree: usize, mut v: Vec<BigInt>) -> Vec<BigInt> {
        for (c, o) in v.iter_mut().zip(&self.pieces[degree].orders) {
            if !o.is_zero() {
                *c = c.mod_floor(o);
            }
        }
        v
    }

    /// Rewrites an arbitrary monomial to a coefficient vector in its degree.
    pub fn reduce_monomial(&self, m: &Monomial) -> Result<Vec<BigInt>, RingError> {
        self.reduce_inner(m, None, 0)
    }

    fn reduce_inner(
        &self,
        m: &Monomial,
        forced_rule: Option<usize>,
        depth: usize,
    ) -> Result<Vec<BigInt>, RingError> {
        let p = &self.presentation;
        let d = p.degree_of(m);
        if d > p.cutoff {
            return Err(RingError::DegreeOverflow {
                degree: d,
                cutoff: p.cutoff,
            });
        }
        if depth > MAX_REWRITE_DEPTH {
            return Err(RingError::NonTerminating(p.format_monomial(m)));
        }
        let n = self.pieces[d].len();
        let mut out = vec![BigInt::zero(); n];
        if p.monomial_order(m).is_none() {
            return Ok(out);
        }
        let rule = forced_rule.or_else(|| p.rules.iter().position(|r| r.lhs.divides(m)));
        match rule {
            Some(r) => {
                let rule = &p.rules[r];
                let rest = m.quotient(&rule.lhs);
                let outer = p.product_sign(&rule.lhs, &rest);
                for (t, c) in &rule.rhs {
                    let sign = outer * p.product_sign(t, &rest);
                    let sub = self.reduce_inner(&t.mul(&rest), None, depth + 1)?;
                    for (o, s) in out.iter_mut().zip(sub) {
                        *o += c * s * sign;
                    }
                }
            }
            None => {
                let idx = self.pieces[d]
                    .basis
                    .iter()
                    .position(|b| b == m)
                    .expect("normal monomial is in the basis");
                out[idx] = BigInt::one();
            }
        }
        Ok(self.reduce_vec(d, out))
    }

    fn check_confluent(&self, m: &Monomial) -> Result<(), RingError> {
        let p = &self.presentation;
        let applicable: Vec<usize> = (0..p.rules.len())
            .filter(|&r| p.rules[r].lhs.divides(m))
            .collect();
        let forced_zero = p.monomial_order(m).is_none();
        let mut first: Option<Vec<BigInt>> = if forced_zero {
            Some(vec![BigInt::zero(); self.pieces[p.degree_of(m)].len()])
        } else {
            None
        };
        for r in applicable {
            let v = if forced_zero {
                // the rule must agree with the sign rule
                let rule = &p.rules[r];
                let rest = m.quotient(&rule.lhs);
                let mut out = vec![BigInt::zero(); self.pieces[p.degree_of(m)].len()];
                for (t, c) in &rule.rhs {
                    let sub = self.reduce_inner(&t.mul(&rest), None, 1)?;
                    for (o, s) in out.iter_mut().zip(sub) {
                        *o += c * s;
                    }
                }
                self.reduce_vec(p.degree_of(m), out)
            } else {
                self.reduce_inner(m, Some(r), 0)?
            };
            match &first {
                None => first = Some(v),
                Some(f) if *f != v => return Err(RingError::NonConfluent(p.format_monomial(m))),
                Some(_) => {}
            }
        }
        Ok(())
    }

    fn check_graded_commutative(&self) -> Result<(), RingError> {
        for (&(dx, i, dy, j), v) in &self.products {
            let w = &self.products[&(dy, j, dx, i)];
            let sign = if (dx * dy) % 2 == 0 { 1 } else { -1 };
            let w = self.reduce_vec(dx + dy, w.iter().map(|c| c * sign).collect());
            if *v != w {
                return Err(RingError::SignRuleViolation(format!(
                    "{} and {} do not graded-commute",
                    self.presentation.format_monomial(&self.pieces[dx].basis[i]),
                    self.presentation.format_monomial(&self.pieces[dy].basis[j])
                )));
            }
        }
        Ok(())
    }

    fn check_associative(&self) -> Result<(), RingError> {
        let cutoff = self.cutoff();
        for dx in 1..=cutoff {
            for dy in 1..=cutoff - dx {
                for dz in 1..=cutoff - dx - dy {
                    for x in self.basis_elements(dx)? {
                        for y in self.basis_elements(dy)? {
                            let xy = self.cup(&x, &y)?;
                            for z in self.basis_elements(dz)? {
                                let left = self.cup(&xy, &z)?;
                                let right = self.cup(&x, &self.cup(&y, &z)?)?;
                                if left != right {
                                    return Err(RingError::NonAssociative(format!(
                                        "({})({})({})",
                                        self.format(&x),
                                        self.format(&y),
                                        self.format(&z)
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Canonical sign: first free coordinate positive when it is nonzero.
    pub fn canonical_sign(&self, x: &RingElement) -> Result<RingElement, RingError> {
        let piece = self.piece(x.degree)?;
        let lead = x
            .coefficients
            .iter()
            .zip(&piece.orders)
            .find(|(c, o)| o.is_zero() && !c.is_zero());
        match lead {
            Some((c, _)) if c.is_negative() => self.neg(x),
            _ => Ok(x.clone()),
        }
    }
}

fn check_presentation(p: &RingPresentation) -> Result<(), RingError> {
    if p.cutoff == 0 {
        return Err(RingError::InvalidPresentation(
            "cutoff must be positive".into(),
        ));
    }
    let mut names = std::collections::BTreeSet::new();
    for g in &p.generators {
        if g.degree == 0 {
            return Err(RingError::InvalidPresentation(format!(
                "generator {} has degree 0",
                g.name
            )));
        }
        if g.order == 1 {
            return Err(RingError::InvalidPresentation(format!(
                "generator {} has order 1",
                g.name
            )));
        }
        if g.name.is_empty()
            || g.name == "1"
            || !g.name.chars().all(|c| c.is_alphanumeric() || c == '_')
        {
            return Err(RingError::InvalidPresentation(format!(
                "bad generator name {:?}",
                g.name
            )));
        }
        if !names.insert(g.name.clone()) {
            return Err(RingError::InvalidPresentation(format!(
                "duplicate generator {}",
                g.name
            )));
        }
    }
    for r in &p.rules {
        if r.lhs.0.len() != p.generators.len()
            || r.rhs.iter().any(|(m, _)| m.0.len() != p.generators.len())
        {
            return Err(RingError::InvalidRule(
                "monomial length does not match generators".into(),
            ));
        }
        let d = p.degree_of(&r.lhs);
        if d == 0 {
            return Err(RingError::InvalidRule("cannot rewrite the unit".into()));
        }
        for (m, _) in &r.rhs {
            if p.degree_of(m) != d {
                return Err(RingError::InvalidRule(format!(
                    "{} → {} is not homogeneous",
                    p.format_monomial(&r.lhs),
                    p.format_monomial(m)
                )));
            }
        }
    }
    Ok(())
}

/// All exponent vectors of degree ≤ cutoff, in lexicographic order.
fn enumerate_monomials(p: &RingPresentation) -> Vec<Monomial> {
    fn go(
        p: &RingPresentation,
        idx: usize,
        budget: usize,
        cur: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if idx == p.generators.len() {
            out.push(Monomial(cur.clone()));
            return;
        }
        let deg = p.generators[idx].degree;
        let mut e = 0;
        while e * deg <= budget {
            cur.push(e as u32);
            go(p, idx + 1, budget - e * deg, cur, out);
            cur.pop();
            e += 1;
        }
    }
    let mut out = Vec::new();
    go(p, 0, p.cutoff, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradedring::presentation::Generator;

    fn cp2() -> GradedRing {
        let p = RingPresentation::new(
            Coefficients::Integers,
            8,
            vec![Generator::new("alpha", 2, 0)],
        )
        .with_zero("alpha^3")
        .unwrap();
        GradedRing::build(p).unwrap()
    }

    #[test]
    fn truncated_polynomial_bases() {
        let r = cp2();
        let sizes: Vec<usize> = (0..=8).map(|d| r.piece(d).unwrap().len()).collect();
        assert_eq!(sizes, vec![1, 0, 1, 0, 1, 0, 0, 0, 0]);
        let a = r.monomial_element("alpha").unwrap();
        let a2 = r.cup(&a, &a).unwrap();
        assert_eq!(a2, r.monomial_element("alpha^2").unwrap());
        assert!(r.cup(&a, &a2).unwrap().is_zero());
        assert_eq!(
            r.format(&r.scale(&BigInt::from(-3), &a2).unwrap()),
            "-3*alpha^2"
        );
    }

    #[test]
    fn sphere_and_product() {
        let s8 = GradedRing::build(
            RingPresentation::new(Coefficients::Integers, 8, vec![Generator::new("x", 8, 0)])
                .with_zero("x^2")
                .unwrap(),
        )
        .unwrap();
        assert_eq!(
            s8.piece(8).unwrap().group(),
            AbelianGroupDescriptor::free(1)
        );

        let s2s4 = GradedRing::build(
            RingPresentation::new(
                Coefficients::Integers,
                12,
                vec![Generator::new("a", 2, 0), Generator::new("b", 4, 0)],
            )
            .with_zero("a^2")
            .unwrap()
            .with_zero("b^2")
            .unwrap(),
        )
        .unwrap();
        let p6 = s2s4.piece(6).unwrap();
        assert_eq!(p6.len(), 1);
        assert_eq!(s2s4.presentation().format_monomial(&p6.basis[0]), "a*b");
    }

    #[test]
    fn odd_generator_square_vanishes_over_z() {
        let r = GradedRing::build(RingPresentation::new(
            Coefficients::Integers,
            4,
            vec![Generator::new("t", 1, 0)],
        ))
        .unwrap();
        let t = r.monomial_element("t").unwrap();
        assert!(r.cup(&t, &t).unwrap().is_zero());
        assert!(r.piece(2).unwrap().is_empty());
    }

    #[test]
    fn odd_generators_anticommute() {
        let r = GradedRing::build(RingPresentation::new(
            Coefficients::Integers,
            3,
            vec![Generator::new("s", 1, 0), Generator::new("t", 1, 0)],
        ))
        .unwrap();
        let s = r.monomial_element("s").unwrap();
        let t = r.monomial_element("t").unwrap();
        assert_eq!(
            r.cup(&t, &s).unwrap(),
            r.neg(&r.cup(&s, &t).unwrap()).unwrap()
        );
    }

    #[test]
    fn cup_beyond_cutoff_is_an_error() {
        let r = cp2();
        let a2 = r.monomial_element("alpha^2").unwrap();
        let e = r.cup(
            &a2,
            &r.cup(&a2, &r.monomial_element("alpha").unwrap()).unwrap(),
        );
        assert!(matches!(e, Err(RingError::DegreeOverflow { .. })));
    }

    #[test]
    fn torsion_orders_propagate() {
        let r = GradedRing::build(
            RingPresentation::new(
                Coefficients::Integers,
                7,
                vec![Generator::new("t", 1, 0), Generator::new("w", 3, 2)],
            )
            .with_zero("w^2")
            .unwrap(),
        )
        .unwrap();
        let tw = r.piece(4).unwrap();
        assert_eq!(tw.orders, vec![BigInt::from(2)]);
        let w = r.monomial_element("w").unwrap();
        assert!(r.scale(&BigInt::from(2), &w).unwrap().is_zero());
    }

    #[test]
    fn rejects_non_confluent_rules() {
        // a*b is rewritten two incompatible ways through a^2 and b^2 overlaps
        let p = RingPresentation::new(
            Coefficients::Integers,
            4,
            vec![Generator::new("a", 2, 0), Generator::new("b", 2, 0)],
        )
        .with_rule("a*b", &[("a^2", 1)])
        .unwrap()
        .with_rule("b^2", &[("a^2", 1)])
        .unwrap()
        .with_zero("a*b")
        .unwrap();
        assert!(matches!(
            GradedRing::build(p),
            Err(RingError::NonConfluent(_)) | Err(RingError::InvalidRule(_))
        ));
    }

    #[test]
    fn rejects_inhomogeneous_rule() {
        let p = RingPresentation::new(
            Coefficients::Integers,
            4,
            vec![Generator::new("a", 2, 0), Generator::new("b", 4, 0)],
        )
        .with_rule("a", &[("b", 1)])
        .unwrap();
        assert!(matches!(
            GradedRing::build(p),
            Err(RingError::InvalidRule(_))
        ));
    }

    #[test]
    fn rejects_rule_that_breaks_orders() {
        // an order-2 product rewritten to a free class
        let p = RingPresentation::new(
            Coefficients::Integers,
            4,
            vec![Generator::new("a", 2, 2), Generator::new("b", 2, 0)],
        )
        .with_rule("a*b", &[("b^2", 1)])
        .unwrap();
        assert!(matches!(
            GradedRing::build(p),
            Err(RingError::InvalidRule(_))
        ));
    }
}
