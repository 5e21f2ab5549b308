use num_bigint::BigInt;
use num_traits::One;

use super::ObstructError;
use crate::intlin::AbelianGroupDescriptor;

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// ℓ(k) = (2k)! for even k and (2k)!/2 for odd k, the factor relating
/// W₄ₖ₊₃ to the obstruction in that degree.
pub fn obstruction_denominator(k: u64) -> Result<BigInt, ObstructError> {
    if k < 1 {
        return Err(ObstructError::OutOfRange(format!(
            "denominator index k = {k} must be at least 1"
        )));
    }
    let f = factorial(2 * k);
    Ok(if k.is_multiple_of(2) { f } else { f / 2 })
}

/// π_q(SO/U) for q ≥ 1, 8-periodic: 0, Z, 0, 0, 0, Z, Z/2, Z/2.
pub fn stable_homotopy_group(q: u64) -> Result<AbelianGroupDescriptor, ObstructError> {
    if q < 1 {
        return Err(ObstructError::OutOfRange(format!(
            "q = {q} must be at least 1"
        )));
    }
    Ok(match q % 8 {
        2 | 6 => AbelianGroupDescriptor::free(1),
        7 | 0 => AbelianGroupDescriptor::from_cyclic_orders(0, &[BigInt::from(2)]),
        _ => AbelianGroupDescriptor::trivial(),
    })
}

/// π_q(SO(2n)/U(n)) for 1 ≤ q ≤ 2n−1: the stable value below 2n−1 and the
/// first unstable group at q = 2n−1.
pub fn homotopy_group(n: u64, q: u64) -> Result<AbelianGroupDescriptor, ObstructError> {
    if n < 1 || q < 1 || q > 2 * n - 1 {
        return Err(ObstructError::OutOfRange(format!(
            "pi_{q}(SO({})/U({n})) is outside 1 <= q <= 2n-1",
            2 * n
        )));
    }
    if q <= 2 * n - 2 {
        return stable_homotopy_group(q);
    }
    let f = factorial(n - 1);
    Ok(match n % 4 {
        0 => AbelianGroupDescriptor::from_cyclic_orders(1, &[BigInt::from(2)]),
        1 => AbelianGroupDescriptor::from_cyclic_orders(0, &[f]),
        2 => AbelianGroupDescriptor::free(1),
        _ => AbelianGroupDescriptor::from_cyclic_orders(0, &[f / 2]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn denominators() {
        let got: Vec<BigInt> = (1..=4)
            .map(|k| obstruction_denominator(k).unwrap())
            .collect();
        assert_eq!(
            got,
            vec![1, 24, 360, 40320]
                .into_iter()
                .map(BigInt::from)
                .collect::<Vec<_>>()
        );
        assert!(obstruction_denominator(0).is_err());
    }

    #[test]
    fn unstable_groups() {
        let show = |n, q| homotopy_group(n, q).unwrap().to_string();
        assert_eq!(show(4, 7), "Z + Z/2");
        assert_eq!(show(5, 9), "Z/24");
        assert_eq!(show(6, 11), "Z");
        assert_eq!(show(7, 13), "Z/360");
        assert_eq!(show(2, 3), "Z");
        assert_eq!(show(3, 5), "0");
        assert_eq!(show(1, 1), "0");
        assert_eq!(show(5, 6), "Z");
        assert!(homotopy_group(3, 6).is_err());
    }
}
