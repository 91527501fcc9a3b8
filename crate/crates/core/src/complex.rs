//! Finite quotients of the building as typed triangle multicomplexes.
//!
//! Vertices carry a type in `Z/3`; every stored edge is positively oriented
//! (head type = tail type + 1), and every chamber lists its edges in the
//! order `(0,1)`, `(1,2)`, `(2,0)` by tail type. Parallel edges and repeated
//! chambers are allowed; everything is addressed by index, with the opaque
//! string ids kept for I/O and diagnostics.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Vertex type in `Z/3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct VertexType(u8);

impl VertexType {
    pub fn new(t: u8) -> Option<Self> {
        (t < 3).then_some(Self(t))
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn next(self) -> Self {
        Self((self.0 + 1) % 3)
    }
}

impl fmt::Display for VertexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub vtype: VertexType,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub tail: usize,
    pub head: usize,
}

/// A chamber's edges by tail type: `[e01, e12, e20]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    pub id: String,
    pub edges: [usize; 3],
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("edge {edge}: tail type {tail} to head type {head} is not positively oriented")]
    TypeRuleViolation { edge: String, tail: u8, head: u8 },
    #[error("{kind} {id} references unknown {target} index {index}")]
    DanglingReference {
        kind: &'static str,
        id: String,
        target: &'static str,
        index: usize,
    },
    #[error("chamber {chamber}: {reason}")]
    InconsistentChamber { chamber: String, reason: String },
    #[error("duplicate {kind} id {id}")]
    DuplicateId { kind: &'static str, id: String },
    #[error("edges {first} and {second} are not composable (head != tail)")]
    NotComposable { first: String, second: String },
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("axiom violation: {0}")]
    AxiomViolation(String),
}

/// Γ\X as a typed triangle multicomplex, immutable after construction.
#[derive(Clone, Debug)]
pub struct TriangleComplex {
    q: u32,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    chambers: Vec<Chamber>,
    out_edges: Vec<Vec<usize>>,
    in_edges: Vec<Vec<usize>>,
    /// Chambers containing each edge, sorted, with multiplicity.
    edge_chambers: Vec<Vec<usize>>,
}

impl PartialEq for TriangleComplex {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
            && self.vertices == other.vertices
            && self.edges == other.edges
            && self.chambers == other.chambers
    }
}

impl Eq for TriangleComplex {}

fn check_unique<'a>(
    kind: &'static str,
    ids: impl Iterator<Item = &'a String>,
) -> Result<(), ComplexError> {
    let mut seen = HashMap::new();
    for id in ids {
        if seen.insert(id, ()).is_some() {
            return Err(ComplexError::DuplicateId {
                kind,
                id: id.clone(),
            });
        }
    }
    Ok(())
}

impl TriangleComplex {
    /// Builds a complex, enforcing the structural invariants: unique ids,
    /// in-range references, positively oriented edges, and chambers whose
    /// edges form a directed 3-cycle with tail types 0, 1, 2.
    pub fn new(
        q: u32,
        vertices: Vec<Vertex>,
        edges: Vec<Edge>,
        chambers: Vec<Chamber>,
    ) -> Result<Self, ComplexError> {
        check_unique("vertex", vertices.iter().map(|v| &v.id))?;
        check_unique("edge", edges.iter().map(|e| &e.id))?;
        check_unique("chamber", chambers.iter().map(|c| &c.id))?;

        for e in &edges {
            for (end, index) in [("tail", e.tail), ("head", e.head)] {
                if index >= vertices.len() {
                    return Err(ComplexError::DanglingReference {
                        kind: "edge",
                        id: e.id.clone(),
                        target: if end == "tail" {
                            "tail vertex"
                        } else {
                            "head vertex"
                        },
                        index,
                    });
                }
            }
            let (t, h) = (vertices[e.tail].vtype, vertices[e.head].vtype);
            if t.next() != h {
                return Err(ComplexError::TypeRuleViolation {
                    edge: e.id.clone(),
                    tail: t.value(),
                    head: h.value(),
                });
            }
        }

        for c in &chambers {
            if let Some(&index) = c.edges.iter().find(|&&i| i >= edges.len()) {
                return Err(ComplexError::DanglingReference {
                    kind: "chamber",
                    id: c.id.clone(),
                    target: "edge",
                    index,
                });
            }
            for slot in 0..3 {
                let e = &edges[c.edges[slot]];
                let next = &edges[c.edges[(slot + 1) % 3]];
                if vertices[e.tail].vtype.value() as usize != slot {
                    return Err(ComplexError::InconsistentChamber {
                        chamber: c.id.clone(),
                        reason: format!(
                            "edge {} in slot {slot} has tail type {}",
                            e.id, vertices[e.tail].vtype
                        ),
                    });
                }
                if e.head != next.tail {
                    return Err(ComplexError::InconsistentChamber {
                        chamber: c.id.clone(),
                        reason: format!("head of {} is not the tail of {}", e.id, next.id),
                    });
                }
            }
        }

        let mut out_edges = vec![Vec::new(); vertices.len()];
        let mut in_edges = vec![Vec::new(); vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            out_edges[e.tail].push(i);
            in_edges[e.head].push(i);
        }
        let mut edge_chambers = vec![Vec::new(); edges.len()];
        for (ci, c) in chambers.iter().enumerate() {
            for &e in &c.edges {
                edge_chambers[e].push(ci);
            }
        }

        Ok(Self {
            q,
            vertices,
            edges,
            chambers,
            out_edges,
            in_edges,
            edge_chambers,
        })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn chambers(&self) -> &[Chamber] {
        &self.chambers
    }

    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edges[v]
    }

    pub fn in_edges(&self, v: usize) -> &[usize] {
        &self.in_edges[v]
    }

    /// Chambers containing edge `e`.
    pub fn chambers_of_edge(&self, e: usize) -> &[usize] {
        &self.edge_chambers[e]
    }

    pub fn vertex_type(&self, v: usize) -> VertexType {
        self.vertices[v].vtype
    }

    /// Position of `e` in chamber `c` (the tail type of `e`), if present.
    pub fn slot_of(&self, c: usize, e: usize) -> Option<usize> {
        self.chambers[c].edges.iter().position(|&x| x == e)
    }

    /// The vertex of chamber `c` with the given type.
    pub fn chamber_vertex(&self, c: usize, vtype: usize) -> usize {
        self.edges[self.chambers[c].edges[vtype % 3]].tail
    }

    /// Angle-π test at the shared vertex: `e` then `f` continue a rank-one
    /// geodesic iff no chamber contains both. Only chamber data is consulted.
    pub fn geodesic_continuation(&self, e: usize, f: usize) -> Result<bool, ComplexError> {
        if self.edges[e].head != self.edges[f].tail {
            return Err(ComplexError::NotComposable {
                first: self.edges[e].id.clone(),
                second: self.edges[f].id.clone(),
            });
        }
        Ok(!sorted_intersect(
            &self.edge_chambers[e],
            &self.edge_chambers[f],
        ))
    }

    /// For each edge, the edges continuing it geodesically (with
    /// multiplicity when parallel edges are involved, each listed once per id).
    pub fn continuation_graph(&self) -> Vec<Vec<usize>> {
        self.edges
            .iter()
            .enumerate()
            .map(|(e, edge)| {
                self.out_edges[edge.head]
                    .iter()
                    .copied()
                    .filter(|&f| !sorted_intersect(&self.edge_chambers[e], &self.edge_chambers[f]))
                    .collect()
            })
            .collect()
    }

    /// Copy with edge `e` and every chamber containing it removed.
    pub fn without_edge(&self, e: usize) -> Self {
        let remap = |i: usize| if i > e { i - 1 } else { i };
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != e)
            .map(|(_, x)| x.clone())
            .collect();
        let chambers = self
            .chambers
            .iter()
            .filter(|c| !c.edges.contains(&e))
            .map(|c| Chamber {
                id: c.id.clone(),
                edges: c.edges.map(remap),
            })
            .collect();
        Self::new(self.q, self.vertices.clone(), edges, chambers)
            .expect("removing an edge and its chambers keeps the structure valid")
    }
}

fn sorted_intersect(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    OutDegree {
        vertex: String,
        found: usize,
        expected: usize,
    },
    InDegree {
        vertex: String,
        found: usize,
        expected: usize,
    },
    ChambersPerEdge {
        edge: String,
        found: usize,
        expected: usize,
    },
    GlobalCount {
        three_chambers: usize,
        q1_edges: usize,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub q: u32,
    pub vertices: usize,
    pub edges: usize,
    pub chambers: usize,
    pub out_degree: Vec<usize>,
    pub in_degree: Vec<usize>,
    pub chambers_per_edge: Vec<usize>,
    pub degrees_ok: bool,
    pub chambers_per_edge_ok: bool,
    pub global_count_ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks, with multiplicity, the local counting axioms of a building
/// quotient: out- and in-degree `q^2+q+1` at every vertex, `q+1` chambers on
/// every edge, and `3|C| = (q+1)|E|`.
pub fn validate(c: &TriangleComplex) -> ValidationReport {
    let q = c.q as usize;
    let deg = q * q + q + 1;
    let mut violations = Vec::new();
    let out_degree: Vec<usize> = c.out_edges.iter().map(Vec::len).collect();
    let in_degree: Vec<usize> = c.in_edges.iter().map(Vec::len).collect();
    for (v, vert) in c.vertices.iter().enumerate() {
        if out_degree[v] != deg {
            violations.push(Violation::OutDegree {
                vertex: vert.id.clone(),
                found: out_degree[v],
                expected: deg,
            });
        }
        if in_degree[v] != deg {
            violations.push(Violation::InDegree {
                vertex: vert.id.clone(),
                found: in_degree[v],
                expected: deg,
            });
        }
    }
    let degrees_ok = violations.is_empty();
    let chambers_per_edge: Vec<usize> = c.edge_chambers.iter().map(Vec::len).collect();
    let before = violations.len();
    for (e, edge) in c.edges.iter().enumerate() {
        if chambers_per_edge[e] != q + 1 {
            violations.push(Violation::ChambersPerEdge {
                edge: edge.id.clone(),
                found: chambers_per_edge[e],
                expected: q + 1,
            });
        }
    }
    let chambers_per_edge_ok = violations.len() == before;
    let global_count_ok = 3 * c.chambers.len() == (q + 1) * c.edges.len();
    if !global_count_ok {
        violations.push(Violation::GlobalCount {
            three_chambers: 3 * c.chambers.len(),
            q1_edges: (q + 1) * c.edges.len(),
        });
    }
    ValidationReport {
        q: c.q,
        vertices: c.vertices.len(),
        edges: c.edges.len(),
        chambers: c.chambers.len(),
        out_degree,
        in_degree,
        chambers_per_edge,
        degrees_ok,
        chambers_per_edge_ok,
        global_count_ok,
        violations,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ContinuationReport {
    pub expected: usize,
    pub forward: Vec<usize>,
    pub backward: Vec<usize>,
}

/// Every edge of a validated complex has exactly `q^2` geodesic
/// continuations and `q^2` geodesic predecessors.
pub fn continuation_counts(c: &TriangleComplex) -> Result<ContinuationReport, ComplexError> {
    let v = validate(c);
    if !v.passed() {
        return Err(ComplexError::PreconditionFailed(format!(
            "complex fails validation with {} violations",
            v.violations.len()
        )));
    }
    let expected = (c.q * c.q) as usize;
    let graph = c.continuation_graph();
    let forward: Vec<usize> = graph.iter().map(Vec::len).collect();
    let mut backward = vec![0usize; c.edges.len()];
    for succ in &graph {
        for &f in succ {
            backward[f] += 1;
        }
    }
    let bad: Vec<&str> = (0..c.edges.len())
        .filter(|&e| forward[e] != expected || backward[e] != expected)
        .map(|e| c.edges[e].id.as_str())
        .collect();
    if !bad.is_empty() {
        return Err(ComplexError::AxiomViolation(format!(
            "edges without {expected} continuations both ways: {}",
            bad.join(", ")
        )));
    }
    Ok(ContinuationReport {
        expected,
        forward,
        backward,
    })
}
