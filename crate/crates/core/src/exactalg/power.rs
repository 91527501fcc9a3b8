//! Extraction of `(m, R)` with `Z * R = D^m` by repeated gcd stripping.

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{AlgebraError, IntPolynomial, RationalFunction};

/// Outcome of [`extract_power_quotient`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PowerQuotient {
    /// `Z * quotient = D^m` holds exactly, and `m` is minimal.
    Found { m: u32, quotient: IntPolynomial },
    /// Some factor of the numerator of `Z` is coprime to `D`, so no power of
    /// `D` is divisible by it.
    NoSolution {
        /// The part of the numerator left after stripping every factor
        /// shared with `D`.
        residual: IntPolynomial,
        passes: u32,
    },
    /// Stripping needed more than `m_max` passes.
    PowerBoundExceeded { m_max: u32 },
}

impl PowerQuotient {
    pub fn is_found(&self) -> bool {
        matches!(self, PowerQuotient::Found { .. })
    }
}

/// Finds the minimal `m <= m_max` with `Z * R = D^m` for a polynomial `R`.
///
/// Each pass divides the remaining numerator of `Z` by its gcd with `D`; an
/// irreducible factor of multiplicity `e` in `Z` and `f >= 1` in `D` needs
/// `ceil(e / f)` passes, so the pass count is the minimal exponent. The
/// denominator of `Z` is carried into `R`.
pub fn extract_power_quotient(
    z: &RationalFunction,
    d: &IntPolynomial,
    m_max: u32,
) -> Result<PowerQuotient, AlgebraError> {
    if !d.coeff(0).is_one() {
        return Err(AlgebraError::Precondition(format!(
            "D(0) must be 1, got {}",
            d.coeff(0)
        )));
    }
    if m_max == 0 {
        return Err(AlgebraError::Precondition(
            "m_max must be at least 1".into(),
        ));
    }
    let num = z.numerator();
    let mut rest = num.primitive_part();
    let mut passes = 0u32;
    while !rest.is_constant() {
        let g = rest.gcd(d);
        if g.is_constant() {
            // sign normalized so that the constant term is positive
            let residual = if rest.coeff(0).is_negative() {
                -rest
            } else {
                rest
            };
            return Ok(PowerQuotient::NoSolution { residual, passes });
        }
        rest = rest.div_exact(&g)?.expect("primitive gcd divides exactly");
        passes += 1;
        if passes > m_max {
            return Ok(PowerQuotient::PowerBoundExceeded { m_max });
        }
    }
    let target = &d.pow(passes) * z.denominator();
    let quotient = target
        .div_exact(num)?
        .ok_or(AlgebraError::NonIntegralQuotient)?;
    debug_assert_eq!(&quotient * num, target);
    Ok(PowerQuotient::Found {
        m: passes,
        quotient,
    })
}

/// Whether `n` divides some power of `d` over `Q`.
///
/// Checked directly by reducing `d^k` modulo `n` for `k = deg n`, which
/// suffices because no irreducible factor of `n` has multiplicity above
/// `deg n`. Independent of the gcd-stripping route.
pub fn divides_some_power(n: &IntPolynomial, d: &IntPolynomial) -> Result<bool, AlgebraError> {
    let Some(deg) = n.degree() else {
        return Err(AlgebraError::DivisionByZero);
    };
    if deg == 0 {
        return Ok(true);
    }
    // residues are only tracked up to a rational scalar
    let step = d.pseudo_rem(n)?.primitive_part();
    let mut acc = step.clone();
    for _ in 1..deg {
        if acc.is_zero() {
            break;
        }
        acc = (&acc * &step).pseudo_rem(n)?.primitive_part();
    }
    Ok(acc.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn rf(n: IntPolynomial) -> RationalFunction {
        RationalFunction::from_polynomial(n)
    }

    #[test]
    fn perfect_power() {
        let d = p(&[1, -2]);
        let z = rf(d.pow(2));
        assert_eq!(
            extract_power_quotient(&z, &d, 8).unwrap(),
            PowerQuotient::Found {
                m: 2,
                quotient: IntPolynomial::one()
            }
        );
    }

    #[test]
    fn single_factor_of_d() {
        let d = &p(&[1, -2]) * &p(&[1, -3]);
        let z = rf(p(&[1, -2]));
        assert_eq!(
            extract_power_quotient(&z, &d, 8).unwrap(),
            PowerQuotient::Found {
                m: 1,
                quotient: p(&[1, -3])
            }
        );
    }

    #[test]
    fn mixed_multiplicities_need_ceiling() {
        // Z = a^5 b, D = a^2 b  ->  m = 3, R = a b^2
        let (a, b) = (p(&[1, -2]), p(&[1, 1, 1]));
        let z = rf(&a.pow(5) * &b);
        let d = &a.pow(2) * &b;
        match extract_power_quotient(&z, &d, 8).unwrap() {
            PowerQuotient::Found { m, quotient } => {
                assert_eq!(m, 3);
                assert_eq!(quotient, &a * &b.pow(2));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn coprime_factor_is_no_solution() {
        let d = p(&[1, -2]);
        let z = rf(&p(&[1, -2]) * &p(&[1, -5]));
        match extract_power_quotient(&z, &d, 8).unwrap() {
            PowerQuotient::NoSolution { residual, passes } => {
                assert_eq!(residual, p(&[1, -5]));
                assert_eq!(passes, 1);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(!divides_some_power(z.numerator(), &d).unwrap());
    }

    #[test]
    fn bound_is_enforced() {
        let d = p(&[1, -2]);
        let z = rf(d.pow(4));
        assert_eq!(
            extract_power_quotient(&z, &d, 3).unwrap(),
            PowerQuotient::PowerBoundExceeded { m_max: 3 }
        );
    }

    #[test]
    fn rational_input_carries_denominator() {
        // Z = (1-2u)/(1+u), D = 1-2u  ->  Z * (1+u) = D
        let z = RationalFunction::new(p(&[1, -2]), p(&[1, 1])).unwrap();
        assert_eq!(
            extract_power_quotient(&z, &p(&[1, -2]), 4).unwrap(),
            PowerQuotient::Found {
                m: 1,
                quotient: p(&[1, 1])
            }
        );
    }

    #[test]
    fn preconditions() {
        let z = rf(p(&[1, -2]));
        assert!(extract_power_quotient(&z, &p(&[2, 1]), 4).is_err());
        assert!(extract_power_quotient(&z, &p(&[1, 1]), 0).is_err());
    }

    #[test]
    fn power_divisibility_oracle() {
        let a = p(&[1, -2]);
        let b = p(&[1, 0, 3]);
        assert!(divides_some_power(&a.pow(3), &(&a * &b)).unwrap());
        assert!(!divides_some_power(&(&a * &p(&[1, 1])), &(&a * &b)).unwrap());
    }
}
