use std::fmt;

use num_integer::Integer;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::{AlgebraError, IntPolynomial};

/// Reduced quotient of integer polynomials.
///
/// Normal form: numerator and denominator share no common factor over `Q`,
/// their contents are coprime integers, and the denominator has positive
/// leading coefficient. For the zeta quotients handled here both constant
/// terms are `±1`, so the denominator is primitive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalFunction {
    numerator: IntPolynomial,
    denominator: IntPolynomial,
}

impl RationalFunction {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self {
                numerator: IntPolynomial::zero(),
                denominator: IntPolynomial::one(),
            });
        }
        let g = num.gcd(&den);
        let mut n = num
            .div_exact(&g)?
            .expect("gcd is primitive and divides over Z");
        let mut d = den
            .div_exact(&g)?
            .expect("gcd is primitive and divides over Z");
        let c = n.content().gcd(&d.content());
        n = IntPolynomial::new(n.coeffs().iter().map(|x| x / &c).collect());
        d = IntPolynomial::new(d.coeffs().iter().map(|x| x / &c).collect());
        if d.leading_coeff().is_some_and(Signed::is_negative) {
            n = -n;
            d = -d;
        }
        Ok(Self {
            numerator: n,
            denominator: d,
        })
    }

    pub fn from_polynomial(p: IntPolynomial) -> Self {
        Self::new(p, IntPolynomial::one()).expect("nonzero denominator")
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.denominator
    }

    pub fn is_polynomial(&self) -> bool {
        self.denominator.is_constant() && self.denominator.coeff(0) == 1.into()
    }

    /// First `order` series coefficients; the denominator must have constant
    /// term `±1`.
    pub fn series(&self, order: usize) -> Result<IntPolynomial, AlgebraError> {
        let inv = super::series_inverse(&self.denominator, order)?;
        Ok(self.numerator.mul_truncated(&inv, order))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        }
    }
}
