//! Neighbour counts on the radius-1 star of a vertex of the building.
//!
//! The star of `[L_0]` consists of the centre together with its neighbours,
//! which correspond to the proper nonzero subspaces of `F_q^3`: points and
//! lines of PG(2, q). Two neighbours are adjacent exactly when the point
//! lies on the line.

use serde::Serialize;

use super::{PlaneError, ProjPlane};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StarVertex {
    Centre,
    Point(usize),
    Line(usize),
}

/// The radius-1 star as an explicit graph.
#[derive(Clone, Debug)]
pub struct Star<'a> {
    plane: &'a ProjPlane,
}

impl<'a> Star<'a> {
    pub fn new(plane: &'a ProjPlane) -> Self {
        Self { plane }
    }

    pub fn vertices(&self) -> Vec<StarVertex> {
        let n = self.plane.size();
        std::iter::once(StarVertex::Centre)
            .chain((0..n).map(StarVertex::Point))
            .chain((0..n).map(StarVertex::Line))
            .collect()
    }

    pub fn adjacent(&self, a: StarVertex, b: StarVertex) -> bool {
        use StarVertex::*;
        match (a, b) {
            (Centre, Centre) => false,
            (Centre, _) | (_, Centre) => true,
            (Point(p), Line(l)) | (Line(l), Point(p)) => self.plane.incident(p, l),
            _ => false,
        }
    }

    /// Common neighbours of `set` among the star's vertices.
    pub fn common_neighbours(&self, set: &[StarVertex]) -> Vec<StarVertex> {
        self.vertices()
            .into_iter()
            .filter(|v| !set.contains(v) && set.iter().all(|&s| self.adjacent(*v, s)))
            .collect()
    }
}

/// Counts confirming the neighbourhood structure at a vertex.
#[derive(Clone, Debug, Serialize)]
pub struct LocalCountReport {
    pub q: u32,
    /// Neighbours of the centre; must be `2(q^2+q+1)`.
    pub neighbours: usize,
    /// Incident (point, line) pairs; must be `(q^2+q+1)(q+1)`.
    pub flags: usize,
    /// Common neighbours of the centre and any neighbour; must be `q+1` for
    /// every such pair.
    pub common_neighbours: usize,
    /// Largest common-neighbour count over triples of distinct star vertices
    /// containing the centre. The full common neighbourhood of such a triple
    /// lies inside the star, so the bound `<= 1` is checkable here.
    pub max_common_through_centre: usize,
    pub triple_bound_holds: bool,
    /// Largest common-neighbour count, counted within the star, over triples
    /// avoiding the centre. Three collinear points share both the centre and
    /// their line, so this is 2 for every `q`.
    pub max_common_avoiding_centre: usize,
    pub avoiding_centre_witness: Option<[StarVertex; 3]>,
}

/// Verifies the neighbour, flag and common-neighbour counts on the star.
pub fn count_common_neighbours(plane: &ProjPlane) -> Result<LocalCountReport, PlaneError> {
    let star = Star::new(plane);
    let q = plane.q() as usize;
    let n = plane.size();
    let verts = star.vertices();
    let centre = StarVertex::Centre;

    let neighbours = verts.iter().filter(|&&v| star.adjacent(centre, v)).count();
    if neighbours != 2 * (q * q + q + 1) {
        return Err(PlaneError::AxiomViolation(format!(
            "centre has {neighbours} neighbours, expected {}",
            2 * (q * q + q + 1)
        )));
    }

    let flags = (0..n)
        .map(|p| (0..n).filter(|&l| plane.incident(p, l)).count())
        .sum::<usize>();
    if flags != (q * q + q + 1) * (q + 1) {
        return Err(PlaneError::AxiomViolation(format!(
            "{flags} flags, expected {}",
            (q * q + q + 1) * (q + 1)
        )));
    }

    for &v in &verts[1..] {
        let c = star.common_neighbours(&[centre, v]).len();
        if c != q + 1 {
            return Err(PlaneError::AxiomViolation(format!(
                "centre and {v:?} have {c} common neighbours, expected {}",
                q + 1
            )));
        }
    }

    let others = &verts[1..];
    let mut max_through = 0;
    for i in 0..others.len() {
        for j in i + 1..others.len() {
            let c = star
                .common_neighbours(&[centre, others[i], others[j]])
                .len();
            max_through = max_through.max(c);
        }
    }
    if max_through > 1 {
        return Err(PlaneError::AxiomViolation(format!(
            "a triple through the centre has {max_through} common neighbours"
        )));
    }

    let mut max_avoiding = 0;
    let mut witness = None;
    for i in 0..others.len() {
        for j in i + 1..others.len() {
            for k in j + 1..others.len() {
                let t = [others[i], others[j], others[k]];
                let c = star.common_neighbours(&t).len();
                if c > max_avoiding {
                    max_avoiding = c;
                    witness = Some(t);
                }
            }
        }
    }

    Ok(LocalCountReport {
        q: plane.q(),
        neighbours,
        flags,
        common_neighbours: q + 1,
        max_common_through_centre: max_through,
        triple_bound_holds: max_through <= 1,
        max_common_avoiding_centre: max_avoiding,
        avoiding_centre_witness: witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_for_small_orders() {
        for (q, flags, common) in [(2, 21, 3), (3, 52, 4), (4, 105, 5)] {
            let plane = ProjPlane::new(q).unwrap();
            let r = count_common_neighbours(&plane).unwrap();
            assert_eq!(r.flags, flags);
            assert_eq!(r.common_neighbours, common);
            assert_eq!(r.neighbours, 2 * plane.size());
            assert!(r.triple_bound_holds);
        }
    }

    #[test]
    fn collinear_points_share_two_neighbours() {
        let plane = ProjPlane::new(2).unwrap();
        let r = count_common_neighbours(&plane).unwrap();
        assert_eq!(r.max_common_avoiding_centre, 2);
        let star = Star::new(&plane);
        let line = 0;
        let pts: Vec<StarVertex> = plane
            .points_on_line(line)
            .iter()
            .map(|&p| StarVertex::Point(p))
            .collect();
        assert_eq!(
            star.common_neighbours(&pts),
            vec![StarVertex::Centre, StarVertex::Line(line)]
        );
    }

    #[test]
    fn pair_of_points_through_centre_has_one_common_neighbour() {
        let plane = ProjPlane::new(3).unwrap();
        let star = Star::new(&plane);
        let c = star.common_neighbours(&[
            StarVertex::Centre,
            StarVertex::Point(0),
            StarVertex::Point(1),
        ]);
        assert_eq!(c, vec![StarVertex::Line(plane.join(0, 1).unwrap())]);
    }
}
