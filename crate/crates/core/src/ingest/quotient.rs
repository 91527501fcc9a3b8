use std::collections::BTreeSet;

use super::{IngestError, TrianglePresentation};
use crate::complex::{Chamber, Edge, TriangleComplex, Vertex, VertexType};
use crate::projgeom::ProjPlane;

/// Edge id of `e(x, i)`, the edge `v_i -> v_{i+1}` labelled by point `x`.
pub fn edge_id(x: usize, i: usize) -> String {
    format!("e{i}.{x}")
}

/// The type cover of a presentation: three vertices `v0, v1, v2`, an edge
/// `e(x, i): v_i -> v_{i+1}` for every point `x` and type `i`, and for each
/// cyclic class of triples and each `i` the chamber
/// `(e(x,i), e(y,i+1), e(z,i+2))`, deduplicated up to rotation.
pub fn build_quotient(p: &TrianglePresentation) -> Result<TriangleComplex, IngestError> {
    let plane = ProjPlane::new(p.q)?;
    let violations = p.violations(&plane);
    if !violations.is_empty() {
        return Err(IngestError::InvalidPresentation(violations.join("; ")));
    }
    let n = plane.size();
    let vertices = (0..3u8)
        .map(|t| Vertex {
            id: format!("v{t}"),
            vtype: VertexType::new(t).expect("types are below 3"),
        })
        .collect();
    let index = |x: usize, i: usize| (i % 3) * n + x;
    let edges = (0..3)
        .flat_map(|i| {
            (0..n).map(move |x| Edge {
                id: edge_id(x, i),
                tail: i,
                head: (i + 1) % 3,
            })
        })
        .collect();

    let mut seen = BTreeSet::new();
    for &[x, y, z] in &p.triples {
        let class = [[x, y, z], [y, z, x], [z, x, y]]
            .into_iter()
            .min()
            .expect("three rotations");
        if class != [x, y, z] {
            continue;
        }
        for i in 0..3 {
            let cycle = [index(x, i), index(y, i + 1), index(z, i + 2)];
            let key = (0..3)
                .map(|r| [cycle[r], cycle[(r + 1) % 3], cycle[(r + 2) % 3]])
                .min()
                .expect("three rotations");
            seen.insert(key);
        }
    }
    // The minimal rotation starts with the type-0 edge, since edge indices
    // are grouped by tail type.
    let chambers = seen
        .into_iter()
        .enumerate()
        .map(|(k, edges)| Chamber {
            id: format!("c{k}"),
            edges,
        })
        .collect();
    Ok(TriangleComplex::new(p.q, vertices, edges, chambers)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{continuation_counts, validate};
    use crate::ingest::search_presentation;

    #[test]
    fn q2_type_cover_counts() {
        let c = build_quotient(&search_presentation(2, 0).unwrap()).unwrap();
        assert_eq!(c.vertices().len(), 3);
        assert_eq!(c.edges().len(), 21);
        assert_eq!(c.chambers().len(), 21);
        let r = validate(&c);
        assert!(r.passed(), "{:?}", r.violations);
        assert!(r.out_degree.iter().all(|&d| d == 7));
        assert!(continuation_counts(&c)
            .unwrap()
            .forward
            .iter()
            .all(|&k| k == 4));
    }

    #[test]
    fn deleting_an_edge_breaks_both_endpoints() {
        let c = build_quotient(&search_presentation(2, 0).unwrap()).unwrap();
        let broken = c.without_edge(0);
        let r = validate(&broken);
        assert_eq!(broken.chambers().len(), 21 - 3);
        assert!(!r.passed());
        assert_eq!(r.out_degree[0], 6);
        assert_eq!(r.in_degree[1], 6);
        assert!(!r.chambers_per_edge_ok);
        assert!(!r.global_count_ok);
    }

    #[test]
    fn invalid_presentation_is_rejected() {
        let mut p = search_presentation(2, 0).unwrap();
        let first = *p.triples.iter().next().unwrap();
        p.triples.remove(&first);
        assert!(matches!(
            build_quotient(&p),
            Err(IngestError::InvalidPresentation(_))
        ));
    }
}
