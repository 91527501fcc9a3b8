//! Dense univariate polynomials in `u` with arbitrary-precision integer
//! coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::AlgebraError;

/// Polynomial `c_0 + c_1 u + ... + c_d u^d`; index is the degree in `u`.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and equality is structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c u^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `u^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// True for the constants `1` and `-1`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }

    /// True for nonzero constants, the units of `Q[u]`.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Reduction modulo `u^order`.
    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.iter().take(order).cloned().collect())
    }

    /// `p(u^k)`.
    pub fn substitute_power(&self, k: usize) -> Self {
        assert!(k >= 1, "substitution exponent must be positive");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::new(coeffs)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Product truncated modulo `u^order`, without forming the full product.
    pub fn mul_truncated(&self, other: &Self, order: usize) -> Self {
        let n = order.min(self.coeffs.len() + other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Gcd of the coefficients, non-negative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// `self / content`, with the sign chosen so the leading coefficient is
    /// positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().is_some_and(Signed::is_negative) {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`, computed in `Z[u]`.
    pub fn pseudo_rem(&self, b: &Self) -> Result<Self, AlgebraError> {
        let db = b.degree().ok_or(AlgebraError::DivisionByZero)?;
        let lb = b.coeffs[db].clone();
        let mut r = self.coeffs.clone();
        while r.len() > db && !r.is_empty() {
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            for x in r.iter_mut() {
                *x *= &lb;
            }
            let shift = dr - db;
            for (i, c) in b.coeffs.iter().enumerate() {
                r[i + shift] -= &lr * c;
            }
            debug_assert!(r[dr].is_zero());
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Ok(Self::new(r))
    }

    /// Quotient and remainder over `Q`. Returns `None` unless both have integer
    /// coefficients.
    fn div_rem_integral(&self, b: &Self) -> Result<Option<(Self, Self)>, AlgebraError> {
        let (q, r) = self.div_rem_rational(b)?;
        let to_int = |v: Vec<BigRational>| -> Option<Self> {
            v.into_iter()
                .map(|c| c.is_integer().then(|| c.to_integer()))
                .collect::<Option<Vec<_>>>()
                .map(Self::new)
        };
        Ok(to_int(q).zip(to_int(r)))
    }

    /// Long division over `Q`; quotient and remainder as rational coefficient
    /// vectors (remainder trimmed).
    pub fn div_rem_rational(
        &self,
        b: &Self,
    ) -> Result<(Vec<BigRational>, Vec<BigRational>), AlgebraError> {
        let db = b.degree().ok_or(AlgebraError::DivisionByZero)?;
        let lb = BigRational::from_integer(b.coeffs[db].clone());
        let mut r: Vec<BigRational> = self
            .coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let qlen = r.len().saturating_sub(db);
        let mut q = vec![BigRational::zero(); qlen];
        while r.len() > db {
            let dr = r.len() - 1;
            let t = &r[dr] / &lb;
            if !t.is_zero() {
                for (i, c) in b.coeffs.iter().enumerate() {
                    r[i + dr - db] -= &t * BigRational::from_integer(c.clone());
                }
                q[dr - db] = t;
            }
            r.pop();
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
        Ok((q, r))
    }

    /// Exact quotient `self / b` when `b` divides `self` in `Z[u]`.
    pub fn div_exact(&self, b: &Self) -> Result<Option<Self>, AlgebraError> {
        Ok(match self.div_rem_integral(b)? {
            Some((q, r)) if r.is_zero() => Some(q),
            _ => None,
        })
    }

    /// True if `b` divides `self` in `Q[u]`.
    pub fn divisible_over_q(&self, b: &Self) -> Result<bool, AlgebraError> {
        Ok(self.pseudo_rem(b)?.is_zero())
    }

    /// Greatest common divisor over `Q`, normalised to be primitive in `Z[u]`
    /// with positive leading coefficient. Uses the primitive polynomial
    /// remainder sequence, so coefficients stay bounded by the inputs'.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).expect("b is nonzero").primitive_part();
            a = b;
            b = r;
        }
        a
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "u")?,
                _ => write!(f, "u^{k}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    coeffs: Vec<String>,
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyRepr {
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(d)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}
