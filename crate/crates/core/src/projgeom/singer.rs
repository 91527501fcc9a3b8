use super::{Fq, ProjPlane};

/// A Singer cycle: a collineation of PG(2, q) permuting the points in a
/// single cycle of length `q^2+q+1`, realised as multiplication by a
/// generator of `F_{q^3}^* / F_q^*`.
#[derive(Clone, Debug)]
pub struct SingerCycle {
    /// `powers[i]` is the point index of `w^i`.
    powers: Vec<usize>,
    /// Inverse of `powers`.
    exponent: Vec<usize>,
    /// Exponents of the points on the line `line_zero`: a perfect
    /// difference set modulo `q^2+q+1`.
    difference_set: Vec<usize>,
}

/// `a * b` in `F_q[t] / (t^3 - c2 t^2 - c1 t - c0)`.
fn cubic_mul(f: &Fq, a: [u32; 3], b: [u32; 3], c: [u32; 3]) -> [u32; 3] {
    let mut prod = [0u32; 5];
    for i in 0..3 {
        for j in 0..3 {
            prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
        }
    }
    for k in (3..5).rev() {
        let top = prod[k];
        prod[k] = 0;
        for (i, &ci) in c.iter().enumerate() {
            prod[k - 3 + i] = f.add(prod[k - 3 + i], f.mul(top, ci));
        }
    }
    [prod[0], prod[1], prod[2]]
}

fn has_root(f: &Fq, c: [u32; 3]) -> bool {
    // t^3 - c2 t^2 - c1 t - c0 = 0
    f.elements().any(|x| {
        let x2 = f.mul(x, x);
        let rhs = f.add(c[0], f.add(f.mul(c[1], x), f.mul(c[2], x2)));
        f.mul(x2, x) == rhs
    })
}

impl SingerCycle {
    pub fn new(plane: &ProjPlane) -> Self {
        let f = plane.field();
        let n = plane.size();
        let q = f.order();
        for c0 in 1..q {
            for c1 in 0..q {
                for c2 in 0..q {
                    let c = [c0, c1, c2];
                    if has_root(f, c) {
                        continue;
                    }
                    if let Some(powers) = Self::orbit(plane, c, n) {
                        let mut exponent = vec![0; n];
                        for (i, &p) in powers.iter().enumerate() {
                            exponent[p] = i;
                        }
                        let difference_set =
                            (0..n).filter(|&i| plane.incident(powers[i], 0)).collect();
                        return Self {
                            powers,
                            exponent,
                            difference_set,
                        };
                    }
                }
            }
        }
        unreachable!("F_q^3 has a primitive element for every prime power q")
    }

    /// Point indices of `t^i` when `t` generates the projective cycle.
    fn orbit(plane: &ProjPlane, c: [u32; 3], n: usize) -> Option<Vec<usize>> {
        let f = plane.field();
        let mut w = [1, 0, 0];
        let mut seen = vec![false; n];
        let mut powers = Vec::with_capacity(n);
        for _ in 0..n {
            let p = plane.point_index(w)?;
            if std::mem::replace(&mut seen[p], true) {
                return None;
            }
            powers.push(p);
            w = cubic_mul(f, w, [0, 1, 0], c);
        }
        Some(powers)
    }

    pub fn len(&self) -> usize {
        self.powers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn point(&self, i: usize) -> usize {
        self.powers[i % self.powers.len()]
    }

    pub fn exponent(&self, point: usize) -> usize {
        self.exponent[point]
    }

    pub fn difference_set(&self) -> &[usize] {
        &self.difference_set
    }

    /// Line index of the translate `D + j` of the difference set.
    pub fn line(&self, plane: &ProjPlane, j: usize) -> usize {
        let a = self.point(self.difference_set[0] + j);
        let b = self.point(self.difference_set[1] + j);
        plane.join(a, b).expect("distinct points")
    }
}
