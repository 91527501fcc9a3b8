//! Determinants of `I - uM` and of general polynomial matrices by
//! evaluation at small integers followed by exact interpolation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{AlgebraError, IntPolynomial, SparseIntMatrix};

/// Square matrix whose entries are polynomials in `u`.
pub type PolyMatrix = Vec<Vec<IntPolynomial>>;

/// Fraction-free Gaussian elimination (Bareiss). Every intermediate value is
/// a minor of the input, so all divisions are exact.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// The evaluation points `0, 1, -1, 2, -2, ...`.
pub fn evaluation_points(count: usize) -> Vec<i64> {
    (0..count as i64)
        .map(|i| if i % 2 == 1 { (i + 1) / 2 } else { -(i / 2) })
        .collect()
}

/// Newton interpolation through `(x_i, y_i)`; fails unless the interpolant
/// has integer coefficients.
pub fn interpolate(xs: &[i64], ys: &[BigInt]) -> Result<IntPolynomial, AlgebraError> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut dd: Vec<BigRational> = ys
        .iter()
        .map(|y| BigRational::from_integer(y.clone()))
        .collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let denom = BigInt::from(xs[i] - xs[i - level]);
            dd[i] = (&dd[i] - &dd[i - 1]) / BigRational::from_integer(denom);
        }
    }
    // Horner expansion of the Newton form.
    let mut coeffs: Vec<BigRational> = Vec::with_capacity(n);
    for i in (0..n).rev() {
        // coeffs := coeffs * (u - x_i) + dd[i]
        let xi = BigRational::from_integer(BigInt::from(xs[i]));
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * &xi;
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    let ints = coeffs
        .into_iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect::<Option<Vec<_>>>()
        .ok_or(AlgebraError::NonIntegralInterpolant)?;
    Ok(IntPolynomial::new(ints))
}

fn det_by_interpolation<F>(degree_bound: usize, eval_det: F) -> Result<IntPolynomial, AlgebraError>
where
    F: Fn(i64) -> BigInt,
{
    let pts = evaluation_points(degree_bound + 2);
    let (fit, check) = pts.split_at(degree_bound + 1);
    let values: Vec<BigInt> = fit.iter().map(|&x| eval_det(x)).collect();
    let poly = interpolate(fit, &values).map_err(|_| AlgebraError::DegreeBoundViolated {
        bound: degree_bound,
    })?;
    let x = check[0];
    if poly.eval_i64(x) != eval_det(x) {
        return Err(AlgebraError::DegreeBoundViolated {
            bound: degree_bound,
        });
    }
    Ok(poly)
}

/// `det(I - uM)` as an exact polynomial of degree at most `N`.
pub fn det_one_minus_um(m: &SparseIntMatrix) -> Result<IntPolynomial, AlgebraError> {
    if !m.is_square() {
        return Err(AlgebraError::NonSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let dense = m.to_dense();
    det_by_interpolation(n, |x| {
        let x = BigInt::from(x);
        let a = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let d = if i == j {
                            BigInt::one()
                        } else {
                            BigInt::zero()
                        };
                        d - &x * &dense[i][j]
                    })
                    .collect()
            })
            .collect();
        bareiss_det(a)
    })
}

/// Determinant of a square polynomial matrix known to have degree at most
/// `degree_bound`.
pub fn det_poly_matrix(m: &PolyMatrix, degree_bound: usize) -> Result<IntPolynomial, AlgebraError> {
    let n = m.len();
    if let Some(row) = m.iter().find(|r| r.len() != n) {
        return Err(AlgebraError::NonSquare {
            rows: n,
            cols: row.len(),
        });
    }
    det_by_interpolation(degree_bound, |x| {
        let x = BigInt::from(x);
        bareiss_det(
            m.iter()
                .map(|row| row.iter().map(|p| p.eval(&x)).collect())
                .collect(),
        )
    })
}
