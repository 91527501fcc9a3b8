//! The local operators between the formal spans `W_2` (basis: lines) and
//! `W_1` (basis: points) of PG(2, q).
//!
//! `local_t` sends a line to the sum of the points off it: at a vertex of
//! the building this is the geodesic-continuation relation between an
//! incoming and an outgoing edge. Two candidate inverses are provided: the
//! literal `local_t_prime` with coefficients `-1/(q+1)` and `1/(q^2-q-1)`,
//! and `local_right_inverse`, the exact inverse `J/q^2 - M^T/q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::ProjPlane;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LocalSpace {
    /// Span of the points (1-dimensional subspaces).
    Points,
    /// Span of the lines (2-dimensional subspaces).
    Lines,
}

/// Dense exact rational matrix from `domain` to `codomain`; `entries[r][c]`
/// is the coefficient of codomain basis vector `r` in the image of domain
/// basis vector `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalOperator {
    pub domain: LocalSpace,
    pub codomain: LocalSpace,
    pub entries: Vec<Vec<BigRational>>,
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl LocalOperator {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LocalOperator) -> LocalOperator {
        assert_eq!(self.domain, other.codomain, "incompatible composition");
        let (n, k, m) = (self.rows(), self.cols(), other.cols());
        let mut out = vec![vec![BigRational::zero(); m]; n];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                for l in 0..k {
                    *cell += &self.entries[i][l] * &other.entries[l][j];
                }
            }
        }
        LocalOperator {
            domain: other.domain,
            codomain: self.codomain,
            entries: out,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.domain == self.codomain
            && self.entries.iter().enumerate().all(|(i, row)| {
                row.iter()
                    .enumerate()
                    .all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
            })
    }

    pub fn col_sums(&self) -> Vec<BigRational> {
        (0..self.cols())
            .map(|c| self.entries.iter().map(|row| &row[c]).sum())
            .collect()
    }

    pub fn row_sums(&self) -> Vec<BigRational> {
        self.entries.iter().map(|row| row.iter().sum()).collect()
    }

    /// Distinct values on the diagonal and off it, for reporting how far a
    /// product is from the identity.
    pub fn diagonal_profile(&self) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut diag = Vec::new();
        let mut off = Vec::new();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let bucket = if i == j { &mut diag } else { &mut off };
                if !bucket.contains(v) {
                    bucket.push(v.clone());
                }
            }
        }
        diag.sort();
        off.sort();
        (diag, off)
    }
}

/// `T : W_2 -> W_1`, entry `(point, line)` is 1 when the point is off the line.
pub fn local_t(plane: &ProjPlane) -> LocalOperator {
    let n = plane.size();
    LocalOperator {
        domain: LocalSpace::Lines,
        codomain: LocalSpace::Points,
        entries: (0..n)
            .map(|p| {
                (0..n)
                    .map(|l| {
                        if plane.incident(p, l) {
                            BigRational::zero()
                        } else {
                            BigRational::one()
                        }
                    })
                    .collect()
            })
            .collect(),
    }
}

fn lines_by_points(plane: &ProjPlane, on: BigRational, off: BigRational) -> LocalOperator {
    let n = plane.size();
    LocalOperator {
        domain: LocalSpace::Points,
        codomain: LocalSpace::Lines,
        entries: (0..n)
            .map(|l| {
                (0..n)
                    .map(|p| {
                        if plane.incident(p, l) {
                            on.clone()
                        } else {
                            off.clone()
                        }
                    })
                    .collect()
            })
            .collect(),
    }
}

/// `T' : W_1 -> W_2` with `-1/(q+1)` on lines through the point and
/// `1/(q^2-q-1)` on lines missing it.
pub fn local_t_prime(plane: &ProjPlane) -> LocalOperator {
    let q = i64::from(plane.q());
    lines_by_points(plane, ratio(-1, q + 1), ratio(1, q * q - q - 1))
}

/// The exact inverse of [`local_t`]: `-(q-1)/q^2` on lines through the point
/// and `1/q^2` on lines missing it.
///
/// With `M` the point-line incidence matrix, `T = J - M` and
/// `(J - M)(J/q^2 - M^T/q) = I` follows from `MJ = JM^T = (q+1)J` and
/// `MM^T = qI + J`.
pub fn local_right_inverse(plane: &ProjPlane) -> LocalOperator {
    let q = i64::from(plane.q());
    lines_by_points(plane, ratio(-(q - 1), q * q), ratio(1, q * q))
}

/// Outcome of composing `local_t` with both candidate inverses.
#[derive(Clone, Debug, Serialize)]
pub struct RightInverseReport {
    pub q: u32,
    pub dimension: usize,
    /// `T ∘ T'` with the literal coefficients equals the identity.
    pub literal_is_right_inverse: bool,
    /// Distinct diagonal and off-diagonal values of `T ∘ T'` (literal).
    pub literal_diagonal: Vec<String>,
    pub literal_off_diagonal: Vec<String>,
    /// `T ∘ T'` with the corrected coefficients equals the identity.
    pub corrected_is_right_inverse: bool,
    pub corrected_incident_coefficient: String,
    pub corrected_nonincident_coefficient: String,
}

pub fn right_inverse_report(plane: &ProjPlane) -> RightInverseReport {
    let t = local_t(plane);
    let literal = t.compose(&local_t_prime(plane));
    let corrected = t.compose(&local_right_inverse(plane));
    let (diag, off) = literal.diagonal_profile();
    let q = i64::from(plane.q());
    RightInverseReport {
        q: plane.q(),
        dimension: plane.size(),
        literal_is_right_inverse: literal.is_identity(),
        literal_diagonal: diag.iter().map(ToString::to_string).collect(),
        literal_off_diagonal: off.iter().map(ToString::to_string).collect(),
        corrected_is_right_inverse: corrected.is_identity(),
        corrected_incident_coefficient: ratio(-(q - 1), q * q).to_string(),
        corrected_nonincident_coefficient: ratio(1, q * q).to_string(),
    }
}
