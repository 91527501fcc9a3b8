//! Truncated power series in `u`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, IntPolynomial};

/// First `order` coefficients of `1/p`. Requires `p(0) = ±1` so the inverse
/// has integer coefficients.
pub fn series_inverse(p: &IntPolynomial, order: usize) -> Result<IntPolynomial, AlgebraError> {
    let c0 = p.coeff(0);
    if !c0.abs().is_one() {
        return Err(AlgebraError::NotAUnit(c0));
    }
    let mut inv: Vec<BigInt> = Vec::with_capacity(order);
    for k in 0..order {
        let mut acc = if k == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
        for j in 1..=k {
            let pj = p.coeff(j);
            if !pj.is_zero() {
                acc -= pj * &inv[k - j];
            }
        }
        // c0 = ±1 is its own inverse
        inv.push(acc * &c0);
    }
    Ok(IntPolynomial::new(inv))
}

/// Coefficients `c_0, ..., c_{order-1}` of `-Z'(u)/Z(u)`.
///
/// For `Z = det(1 - uM)` this series is `sum_{n>=1} tr(M^n) u^(n-1)`.
pub fn neg_log_derivative(z: &IntPolynomial, order: usize) -> Result<Vec<BigInt>, AlgebraError> {
    let inv = series_inverse(z, order)?;
    let prod = (-z.derivative()).mul_truncated(&inv, order);
    Ok((0..order).map(|k| prod.coeff(k)).collect())
}

/// Coefficients `l_1, ..., l_order` of `log Z(u)` for `Z(0) = 1` (index 0 of
/// the result is `l_1`).
pub fn log_series(z: &IntPolynomial, order: usize) -> Result<Vec<BigRational>, AlgebraError> {
    let c0 = z.coeff(0);
    if !c0.is_one() {
        return Err(AlgebraError::NotAUnit(c0));
    }
    // (log Z)' = Z'/Z, so l_n = [u^(n-1)] (Z'/Z) / n
    let d = neg_log_derivative(z, order)?;
    Ok(d.into_iter()
        .enumerate()
        .map(|(k, c)| BigRational::new(-c, BigInt::from(k + 1)))
        .collect())
}
