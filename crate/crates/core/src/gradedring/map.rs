use num_bigint::BigInt;
use num_traits::Zero;

use super::presentation::Coefficients;
use super::ring::{GradedRing, RingElement};
use super::RingError;
use crate::intlin::IntMatrix;

/// A degree-wise additive map between two rings of the same space.
///
/// `matrices[d]` sends the source basis in degree `d` to the target basis in
/// degree `d + degree_shift`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientMap {
    pub name: String,
    pub source: Coefficients,
    pub target: Coefficients,
    pub degree_shift: usize,
    matrices: Vec<IntMatrix>,
}

impl CoefficientMap {
    /// Builds the map from the image of every source basis element.
    /// `images[d][j]` is the image of basis element `j` in degree `d`.
    pub fn from_images(
        name: &str,
        source: &GradedRing,
        target: &GradedRing,
        degree_shift: usize,
        images: &[Vec<RingElement>],
    ) -> Result<CoefficientMap, RingError> {
        let top = source.cutoff().min(target.cutoff());
        let mut matrices = Vec::new();
        for d in 0..=top.saturating_sub(degree_shift) {
            let td = d + degree_shift;
            if td > top {
                break;
            }
            let src = source.piece(d)?;
            let tgt = target.piece(td)?;
            let col_images = images.get(d).ok_or_else(|| RingError::MapUndefined {
                map: name.into(),
                degree: d,
            })?;
            if col_images.len() != src.len() {
                return Err(RingError::WrongLength {
                    degree: d,
                    expected: src.len(),
                    got: col_images.len(),
                });
            }
            let mut m = IntMatrix::zeros(tgt.len(), src.len());
            for (j, img) in col_images.iter().enumerate() {
                if img.ring() != target.coefficients() || img.degree() != td {
                    return Err(RingError::MapUndefined {
                        map: name.into(),
                        degree: d,
                    });
                }
                for (i, c) in img.coefficients().iter().enumerate() {
                    m[(i, j)] = c.clone();
                }
            }
            matrices.push(m);
        }
        let map = CoefficientMap {
            name: name.into(),
            source: source.coefficients(),
            target: target.coefficients(),
            degree_shift,
            matrices,
        };
        map.check_orders(source, target)?;
        Ok(map)
    }

    /// Sends each basis monomial to `factor` times the same monomial of the
    /// target. Used for coefficient reductions and for θ₂ when both rings share
    /// a monomial basis.
    pub fn monomialwise(
        name: &str,
        source: &GradedRing,
        target: &GradedRing,
        factor: i64,
    ) -> Result<CoefficientMap, RingError> {
        let mut images = Vec::new();
        for d in 0..=source.cutoff().min(target.cutoff()) {
            let mut col = Vec::new();
            for m in &source.piece(d)?.basis {
                let mut v = vec![BigInt::zero(); target.piece(d)?.len()];
                if let Some(i) = target.basis_index(m) {
                    v[i] = BigInt::from(factor);
                }
                col.push(target.element(d, v)?);
            }
            images.push(col);
        }
        Self::from_images(name, source, target, 0, &images)
    }

    pub fn zero(
        name: &str,
        source: &GradedRing,
        target: &GradedRing,
        degree_shift: usize,
    ) -> Result<CoefficientMap, RingError> {
        let mut images = Vec::new();
        for d in 0..=source.cutoff().min(target.cutoff()) {
            if d + degree_shift > target.cutoff() {
                break;
            }
            let z = target.zero(d + degree_shift)?;
            images.push(vec![z; source.piece(d)?.len()]);
        }
        Self::from_images(name, source, target, degree_shift, &images)
    }

    pub fn matrix(&self, degree: usize) -> Option<&IntMatrix> {
        self.matrices.get(degree)
    }

    /// Highest source degree the map is defined on.
    pub fn top_degree(&self) -> Option<usize> {
        self.matrices.len().checked_sub(1)
    }

    pub fn apply(&self, target: &GradedRing, x: &RingElement) -> Result<RingElement, RingError> {
        if x.ring() != self.source {
            return Err(RingError::WrongRing {
                expected: self.source,
                got: x.ring(),
            });
        }
        if target.coefficients() != self.target {
            return Err(RingError::WrongRing {
                expected: self.target,
                got: target.coefficients(),
            });
        }
        let m = self
            .matrices
            .get(x.degree())
            .ok_or_else(|| RingError::MapUndefined {
                map: self.name.clone(),
                degree: x.degree(),
            })?;
        let v = m
            .mul_vec(x.coefficients())
            .map_err(|e| RingError::InvalidMap(e.to_string()))?;
        target.element(x.degree() + self.degree_shift, v)
    }

    /// Images of all source basis elements, for serialization.
    pub fn images(
        &self,
        source: &GradedRing,
        target: &GradedRing,
    ) -> Result<Vec<Vec<RingElement>>, RingError> {
        let mut out = Vec::new();
        for d in 0..self.matrices.len() {
            out.push(
                source
                    .basis_elements(d)?
                    .iter()
                    .map(|b| self.apply(target, b))
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        Ok(out)
    }

    /// An order-m source basis element must map to an element killed by m.
    fn check_orders(&self, source: &GradedRing, target: &GradedRing) -> Result<(), RingError> {
        for (d, m) in self.matrices.iter().enumerate() {
            let td = d + self.degree_shift;
            for (j, order) in source.piece(d)?.orders.iter().enumerate() {
                if order.is_zero() {
                    continue;
                }
                let col: Vec<BigInt> = m.column(j).iter().map(|c| c * order).collect();
                if !target.element(td, col)?.is_zero() {
                    return Err(RingError::InvalidMap(format!(
                        "{} does not respect the order of {} in degree {}",
                        self.name,
                        source
                            .presentation()
                            .format_monomial(&source.piece(d)?.basis[j]),
                        d
                    )));
                }
            }
        }
        Ok(())
    }
}
