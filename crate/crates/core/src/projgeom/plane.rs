use super::field::prime_power;
use super::{Fq, PlaneError};

/// Default upper bound on the field order.
pub const DEFAULT_MAX_Q: u32 = 16;

/// The projective plane PG(2, q): points are the 1-dimensional subspaces of
/// `F_q^3`, lines the 2-dimensional ones (stored as normal covectors).
///
/// Representatives have their last nonzero coordinate equal to 1 and both
/// lists are sorted lexicographically, so indices are stable across runs.
#[derive(Clone, Debug)]
pub struct ProjPlane {
    field: Fq,
    points: Vec<[u32; 3]>,
    lines: Vec<[u32; 3]>,
    incidence: Vec<Vec<bool>>,
    points_on_line: Vec<Vec<usize>>,
    lines_through_point: Vec<Vec<usize>>,
}

impl ProjPlane {
    pub fn new(q: u32) -> Result<Self, PlaneError> {
        Self::with_bound(q, DEFAULT_MAX_Q)
    }

    pub fn with_bound(q: u32, max_q: u32) -> Result<Self, PlaneError> {
        if prime_power(q).is_none() {
            return Err(PlaneError::NotPrimePower(q));
        }
        if q > max_q {
            return Err(PlaneError::BoundExceeded { q, bound: max_q });
        }
        let field = Fq::new(q)?;
        let reps = canonical_vectors(q);
        let points = reps.clone();
        let lines = reps;
        let incidence: Vec<Vec<bool>> = points
            .iter()
            .map(|p| lines.iter().map(|l| dot(&field, p, l) == 0).collect())
            .collect();
        let n = points.len();
        let points_on_line = (0..n)
            .map(|l| (0..n).filter(|&p| incidence[p][l]).collect())
            .collect();
        let lines_through_point = (0..n)
            .map(|p| (0..n).filter(|&l| incidence[p][l]).collect())
            .collect();
        Ok(Self {
            field,
            points,
            lines,
            incidence,
            points_on_line,
            lines_through_point,
        })
    }

    pub fn q(&self) -> u32 {
        self.field.order()
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    /// `q^2 + q + 1`, the number of points and of lines.
    pub fn size(&self) -> usize {
        self.points.len()
    }

    pub fn points(&self) -> &[[u32; 3]] {
        &self.points
    }

    pub fn lines(&self) -> &[[u32; 3]] {
        &self.lines
    }

    pub fn incident(&self, point: usize, line: usize) -> bool {
        self.incidence[point][line]
    }

    pub fn points_on_line(&self, line: usize) -> &[usize] {
        &self.points_on_line[line]
    }

    pub fn lines_through_point(&self, point: usize) -> &[usize] {
        &self.lines_through_point[point]
    }

    /// Index of the point spanned by a nonzero vector.
    pub fn point_index(&self, v: [u32; 3]) -> Option<usize> {
        let c = normalize(&self.field, v)?;
        self.points.binary_search(&c).ok()
    }

    /// The unique line through two distinct points.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        if a == b {
            return None;
        }
        self.lines_through_point[a]
            .iter()
            .copied()
            .find(|&l| self.incidence[b][l])
    }

    /// Checks the structural invariants of the plane, including the design
    /// identity `M M^T = q I + J` for the point-line incidence matrix `M`.
    pub fn check_invariants(&self) -> Result<(), PlaneError> {
        let q = self.q() as usize;
        let n = q * q + q + 1;
        if self.points.len() != n || self.lines.len() != n {
            return Err(PlaneError::AxiomViolation(format!(
                "expected {n} points and lines, found {} and {}",
                self.points.len(),
                self.lines.len()
            )));
        }
        if let Some(l) = (0..n).find(|&l| self.points_on_line[l].len() != q + 1) {
            return Err(PlaneError::AxiomViolation(format!(
                "line {l} has {} points, expected {}",
                self.points_on_line[l].len(),
                q + 1
            )));
        }
        if let Some(p) = (0..n).find(|&p| self.lines_through_point[p].len() != q + 1) {
            return Err(PlaneError::AxiomViolation(format!(
                "point {p} lies on {} lines, expected {}",
                self.lines_through_point[p].len(),
                q + 1
            )));
        }
        for a in 0..n {
            for b in 0..n {
                let common = (0..n)
                    .filter(|&l| self.incidence[a][l] && self.incidence[b][l])
                    .count();
                let expected = if a == b { q + 1 } else { 1 };
                if common != expected {
                    return Err(PlaneError::AxiomViolation(format!(
                        "(M M^T)[{a}][{b}] = {common}, expected {expected}"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn dot(f: &Fq, a: &[u32; 3], b: &[u32; 3]) -> u32 {
    (0..3).fold(0, |acc, i| f.add(acc, f.mul(a[i], b[i])))
}

fn normalize(f: &Fq, v: [u32; 3]) -> Option<[u32; 3]> {
    let last = *v.iter().rev().find(|&&x| x != 0)?;
    let s = f.inv(last)?;
    Some(v.map(|x| f.mul(x, s)))
}

fn canonical_vectors(q: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let v = [a, b, c];
                let last = v.iter().rev().find(|&&x| x != 0);
                if last == Some(&1) {
                    out.push(v);
                }
            }
        }
    }
    out.sort_unstable();
    out
}
