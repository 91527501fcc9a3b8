use std::collections::BTreeSet;

use crate::projgeom::ProjPlane;

/// A triangle presentation over PG(2, q): a bijection `lambda` from points
/// to lines and a cyclically closed set of point triples `(x, y, z)` such
/// that `(x, y)` extends to a triple exactly when `y` lies on `lambda(x)`,
/// and then uniquely.
///
/// Points and lines are indices into the canonical ordering of
/// [`ProjPlane`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrianglePresentation {
    pub q: u32,
    pub lambda: Vec<usize>,
    pub triples: BTreeSet<[usize; 3]>,
}

impl TrianglePresentation {
    /// Every violated invariant, as a readable message. Empty means valid.
    ///
    /// Each ordered pair `(x, y)` is examined independently of how the
    /// triples were produced.
    pub fn violations(&self, plane: &ProjPlane) -> Vec<String> {
        let n = plane.size();
        let mut out = Vec::new();
        if plane.q() != self.q {
            out.push(format!(
                "plane has order {}, presentation {}",
                plane.q(),
                self.q
            ));
            return out;
        }
        if self.lambda.len() != n {
            out.push(format!(
                "lambda has {} entries, expected {n}",
                self.lambda.len()
            ));
            return out;
        }
        let mut hit = vec![false; n];
        for (x, &l) in self.lambda.iter().enumerate() {
            if l >= n {
                out.push(format!("lambda({x}) = {l} is not a line"));
            } else if std::mem::replace(&mut hit[l], true) {
                out.push(format!("line {l} is hit twice by lambda"));
            }
        }
        if !out.is_empty() {
            return out;
        }
        for t in &self.triples {
            if t.iter().any(|&p| p >= n) {
                out.push(format!("triple {t:?} names an unknown point"));
            } else if !self.triples.contains(&[t[1], t[2], t[0]]) {
                out.push(format!("triple {t:?} is not cyclically closed"));
            }
        }
        if !out.is_empty() {
            return out;
        }
        let mut extensions = vec![0usize; n * n];
        for t in &self.triples {
            extensions[t[0] * n + t[1]] += 1;
        }
        for x in 0..n {
            for y in 0..n {
                let incident = plane.incident(y, self.lambda[x]);
                let count = extensions[x * n + y];
                match (incident, count) {
                    (true, 1) | (false, 0) => {}
                    (true, c) => out.push(format!(
                        "({x}, {y}) with y on lambda(x) extends to {c} triples"
                    )),
                    (false, c) => out.push(format!(
                        "({x}, {y}) with y off lambda(x) extends to {c} triples"
                    )),
                }
            }
        }
        let expected = n * (self.q as usize + 1);
        if self.triples.len() != expected {
            out.push(format!(
                "{} triples, expected {expected}",
                self.triples.len()
            ));
        }
        out
    }

    pub fn is_valid(&self, plane: &ProjPlane) -> bool {
        self.violations(plane).is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_triples_are_reported() {
        let plane = ProjPlane::new(2).unwrap();
        let p = TrianglePresentation {
            q: 2,
            lambda: (0..7).collect(),
            triples: BTreeSet::new(),
        };
        let v = p.violations(&plane);
        assert!(v.iter().any(|m| m.contains("21")));
        assert!(!p.is_valid(&plane));
    }

    #[test]
    fn non_bijective_lambda_is_reported() {
        let plane = ProjPlane::new(2).unwrap();
        let p = TrianglePresentation {
            q: 2,
            lambda: vec![0; 7],
            triples: BTreeSet::new(),
        };
        assert!(p.violations(&plane)[0].contains("hit twice"));
    }

    #[test]
    fn open_triple_is_reported() {
        let plane = ProjPlane::new(2).unwrap();
        let p = TrianglePresentation {
            q: 2,
            lambda: (0..7).collect(),
            triples: [[0, 1, 2]].into_iter().collect(),
        };
        assert!(p.violations(&plane)[0].contains("cyclically closed"));
    }
}
