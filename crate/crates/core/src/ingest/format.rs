//! JSON files for complexes and presentations.
//!
//! Files are written one record per line so that diagnostics pointing at a
//! line name a single vertex, edge, chamber or triple. Semantic errors found
//! after parsing are located by re-reading the text up to the offending
//! record.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::path::Path;

use serde::de::{self, DeserializeSeed, IgnoredAny, MapAccess, SeqAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize};

use super::{IngestError, TrianglePresentation};
use crate::complex::{Chamber, ComplexError, Edge, TriangleComplex, Vertex, VertexType};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexRecord {
    id: String,
    #[serde(rename = "type")]
    vtype: u8,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeRecord {
    id: String,
    tail: String,
    head: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ChamberRecord {
    id: String,
    edges: [String; 3],
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexFile {
    q: u32,
    vertices: Vec<VertexRecord>,
    edges: Vec<EdgeRecord>,
    chambers: Vec<ChamberRecord>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PresentationFile {
    q: u32,
    lambda: Vec<[usize; 2]>,
    triples: Vec<[usize; 3]>,
}

/// Line and column (1-based) of element `index` of the top-level array
/// `section`, found by failing deliberately as soon as that element starts.
fn locate(text: &str, section: &'static str, index: usize) -> (usize, usize) {
    let mut de = serde_json::Deserializer::from_str(text);
    match (Locator { section, index }).deserialize(&mut de) {
        Err(e) => (e.line(), e.column()),
        Ok(()) => (0, 0),
    }
}

const HERE: &str = "__located__";

struct Locator {
    section: &'static str,
    index: usize,
}

impl<'de> DeserializeSeed<'de> for Locator {
    type Value = ();

    fn deserialize<D: Deserializer<'de>>(self, d: D) -> Result<(), D::Error> {
        d.deserialize_map(self)
    }
}

impl<'de> Visitor<'de> for Locator {
    type Value = ();

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a JSON object")
    }

    fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<(), A::Error> {
        while let Some(key) = map.next_key::<String>()? {
            if key == self.section {
                return map.next_value_seed(ElementLocator(self.index));
            }
            map.next_value::<IgnoredAny>()?;
        }
        Ok(())
    }
}

struct ElementLocator(usize);

impl<'de> DeserializeSeed<'de> for ElementLocator {
    type Value = ();

    fn deserialize<D: Deserializer<'de>>(self, d: D) -> Result<(), D::Error> {
        d.deserialize_seq(self)
    }
}

impl<'de> Visitor<'de> for ElementLocator {
    type Value = ();

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an array")
    }

    fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<(), A::Error> {
        for _ in 0..self.0 {
            if seq.next_element::<IgnoredAny>()?.is_none() {
                return Ok(());
            }
        }
        seq.next_element::<Stop>()?;
        Ok(())
    }
}

struct Stop;

impl<'de> Deserialize<'de> for Stop {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Stop;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("anything")
            }
            fn visit_map<A: MapAccess<'de>>(self, _: A) -> Result<Stop, A::Error> {
                Err(de::Error::custom(HERE))
            }
            fn visit_seq<A: SeqAccess<'de>>(self, _: A) -> Result<Stop, A::Error> {
                Err(de::Error::custom(HERE))
            }
        }
        d.deserialize_any(V)
    }
}

fn parse_error(e: serde_json::Error) -> IngestError {
    IngestError::ParseError {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Parses a complex file, checking ids, references and the type rule.
pub fn complex_from_json(text: &str) -> Result<TriangleComplex, IngestError> {
    let file: ComplexFile = serde_json::from_str(text).map_err(parse_error)?;
    let malformed = |section, index, message: String| {
        let (line, column) = locate(text, section, index);
        IngestError::Malformed {
            line,
            column,
            message,
        }
    };

    let mut vertex_index = HashMap::new();
    let mut vertices = Vec::with_capacity(file.vertices.len());
    for (k, v) in file.vertices.into_iter().enumerate() {
        let vtype = VertexType::new(v.vtype).ok_or_else(|| {
            malformed(
                "vertices",
                k,
                format!("vertex {} has type {}", v.id, v.vtype),
            )
        })?;
        if vertex_index.insert(v.id.clone(), k).is_some() {
            return Err(malformed(
                "vertices",
                k,
                format!("duplicate vertex id {}", v.id),
            ));
        }
        vertices.push(Vertex { id: v.id, vtype });
    }

    let mut edge_index = HashMap::new();
    let mut edges = Vec::with_capacity(file.edges.len());
    for (k, e) in file.edges.into_iter().enumerate() {
        let end = |name: &str| {
            vertex_index.get(name).copied().ok_or_else(|| {
                let (line, column) = locate(text, "edges", k);
                IngestError::DanglingReference {
                    line,
                    column,
                    owner: e.id.clone(),
                    reference: name.to_string(),
                }
            })
        };
        let (tail, head) = (end(&e.tail)?, end(&e.head)?);
        let (t, h) = (vertices[tail].vtype, vertices[head].vtype);
        if t.next() != h {
            let (line, column) = locate(text, "edges", k);
            return Err(IngestError::TypeRuleViolation {
                line,
                column,
                edge: e.id,
                tail_type: t.value(),
                head_type: h.value(),
            });
        }
        if edge_index.insert(e.id.clone(), k).is_some() {
            return Err(malformed("edges", k, format!("duplicate edge id {}", e.id)));
        }
        edges.push(Edge {
            id: e.id,
            tail,
            head,
        });
    }

    let mut chambers = Vec::with_capacity(file.chambers.len());
    for (k, c) in file.chambers.into_iter().enumerate() {
        let mut idx = [0usize; 3];
        for (slot, name) in c.edges.iter().enumerate() {
            idx[slot] = *edge_index.get(name).ok_or_else(|| {
                let (line, column) = locate(text, "chambers", k);
                IngestError::DanglingReference {
                    line,
                    column,
                    owner: c.id.clone(),
                    reference: name.clone(),
                }
            })?;
        }
        chambers.push(Chamber {
            id: c.id,
            edges: idx,
        });
    }

    let chamber_position: HashMap<String, usize> = chambers
        .iter()
        .enumerate()
        .map(|(k, c)| (c.id.clone(), k))
        .collect();
    TriangleComplex::new(file.q, vertices, edges, chambers).map_err(|err| {
        let k = match &err {
            ComplexError::InconsistentChamber { chamber, .. }
            | ComplexError::DuplicateId { id: chamber, .. } => {
                chamber_position.get(chamber).copied().unwrap_or(0)
            }
            _ => 0,
        };
        malformed("chambers", k, err.to_string())
    })
}

fn json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("records serialize")
}

fn write_section(out: &mut String, name: &str, lines: Vec<String>, last: bool) {
    out.push_str(&format!("  \"{name}\": ["));
    if lines.is_empty() {
        out.push(']');
    } else {
        out.push('\n');
        let count = lines.len();
        for (k, l) in lines.into_iter().enumerate() {
            out.push_str("    ");
            out.push_str(&l);
            if k + 1 < count {
                out.push(',');
            }
            out.push('\n');
        }
        out.push_str("  ]");
    }
    out.push_str(if last { "\n" } else { ",\n" });
}

/// Canonical text of a complex: records in stored order, one per line.
pub fn complex_to_json(c: &TriangleComplex) -> String {
    let vs = c.vertices();
    let es = c.edges();
    let mut out = format!("{{\n  \"q\": {},\n", c.q());
    write_section(
        &mut out,
        "vertices",
        vs.iter()
            .map(|v| {
                json_line(&VertexRecord {
                    id: v.id.clone(),
                    vtype: v.vtype.value(),
                })
            })
            .collect(),
        false,
    );
    write_section(
        &mut out,
        "edges",
        es.iter()
            .map(|e| {
                json_line(&EdgeRecord {
                    id: e.id.clone(),
                    tail: vs[e.tail].id.clone(),
                    head: vs[e.head].id.clone(),
                })
            })
            .collect(),
        false,
    );
    write_section(
        &mut out,
        "chambers",
        c.chambers()
            .iter()
            .map(|ch| {
                json_line(&ChamberRecord {
                    id: ch.id.clone(),
                    edges: ch.edges.map(|e| es[e].id.clone()),
                })
            })
            .collect(),
        true,
    );
    out.push_str("}\n");
    out
}

pub fn presentation_to_json(p: &TrianglePresentation) -> String {
    let mut out = format!("{{\n  \"q\": {},\n", p.q);
    write_section(
        &mut out,
        "lambda",
        p.lambda
            .iter()
            .enumerate()
            .map(|(x, l)| json_line(&[x, *l]))
            .collect(),
        false,
    );
    write_section(
        &mut out,
        "triples",
        p.triples.iter().map(json_line).collect(),
        true,
    );
    out.push_str("}\n");
    out
}

/// Parses a presentation file. Its invariants are not checked here.
pub fn presentation_from_json(text: &str) -> Result<TrianglePresentation, IngestError> {
    let file: PresentationFile = serde_json::from_str(text).map_err(parse_error)?;
    let n = file.lambda.len();
    let mut lambda = vec![usize::MAX; n];
    for (k, [x, l]) in file.lambda.into_iter().enumerate() {
        if x >= n || lambda[x] != usize::MAX {
            let (line, column) = locate(text, "lambda", k);
            return Err(IngestError::Malformed {
                line,
                column,
                message: format!("point {x} is out of range or assigned twice"),
            });
        }
        lambda[x] = l;
    }
    let triples: BTreeSet<[usize; 3]> = file.triples.into_iter().collect();
    Ok(TrianglePresentation {
        q: file.q,
        lambda,
        triples,
    })
}

fn read(path: &Path) -> Result<String, IngestError> {
    std::fs::read_to_string(path).map_err(|source| IngestError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), IngestError> {
    std::fs::write(path, text).map_err(|source| IngestError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load(path: impl AsRef<Path>) -> Result<TriangleComplex, IngestError> {
    complex_from_json(&read(path.as_ref())?)
}

pub fn save(c: &TriangleComplex, path: impl AsRef<Path>) -> Result<(), IngestError> {
    write(path.as_ref(), &complex_to_json(c))
}

pub fn load_presentation(path: impl AsRef<Path>) -> Result<TrianglePresentation, IngestError> {
    presentation_from_json(&read(path.as_ref())?)
}

pub fn save_presentation(
    p: &TrianglePresentation,
    path: impl AsRef<Path>,
) -> Result<(), IngestError> {
    write(path.as_ref(), &presentation_to_json(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = r#"{
  "q": 2,
  "vertices": [
    {"id":"a","type":0},
    {"id":"b","type":1},
    {"id":"c","type":2}
  ],
  "edges": [
    {"id":"ab","tail":"a","head":"b"},
    {"id":"bc","tail":"b","head":"c"},
    {"id":"ca","tail":"c","head":"a"}
  ],
  "chambers": [
    {"id":"t","edges":["ab","bc","ca"]}
  ]
}
"#;

    #[test]
    fn small_file_round_trips_byte_for_byte() {
        let c = complex_from_json(SMALL).unwrap();
        assert_eq!(complex_to_json(&c), SMALL);
    }

    #[test]
    fn type_rule_violation_names_the_line() {
        let text = SMALL.replace(r#""tail":"c","head":"a""#, r#""tail":"a","head":"c""#);
        match complex_from_json(&text) {
            Err(IngestError::TypeRuleViolation {
                line,
                edge,
                tail_type,
                head_type,
                ..
            }) => {
                assert_eq!(
                    (line, edge.as_str(), tail_type, head_type),
                    (11, "ca", 0, 2)
                );
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn dangling_vertex_names_the_line() {
        let text = SMALL.replace(r#""head":"b""#, r#""head":"zz""#);
        match complex_from_json(&text) {
            Err(IngestError::DanglingReference {
                line, reference, ..
            }) => {
                assert_eq!((line, reference.as_str()), (9, "zz"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn dangling_edge_in_chamber() {
        let text = SMALL.replace(r#"["ab","bc","ca"]"#, r#"["ab","bc","nope"]"#);
        assert!(matches!(
            complex_from_json(&text),
            Err(IngestError::DanglingReference { line: 14, .. })
        ));
    }

    #[test]
    fn inconsistent_chamber_is_located() {
        let text = SMALL.replace(r#"["ab","bc","ca"]"#, r#"["bc","ca","ab"]"#);
        assert!(matches!(
            complex_from_json(&text),
            Err(IngestError::Malformed { line: 14, .. })
        ));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let text = SMALL.replace(r#""type":1}"#, r#""type":1"#);
        match complex_from_json(&text) {
            Err(IngestError::ParseError { line, .. }) => assert!(line >= 5),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bad_vertex_type_is_located() {
        let text = SMALL.replace(r#""type":2"#, r#""type":3"#);
        assert!(matches!(
            complex_from_json(&text),
            Err(IngestError::Malformed { line: 6, .. })
        ));
    }
}
