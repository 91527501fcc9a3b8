//! Test complexes: triangle presentations, their type-cover quotients, and
//! the JSON file formats.

mod format;
mod presentation;
mod quotient;
mod search;

use thiserror::Error;

use crate::complex::ComplexError;
use crate::projgeom::PlaneError;

pub use format::{
    complex_from_json, complex_to_json, load, load_presentation, presentation_from_json,
    presentation_to_json, save, save_presentation,
};
pub use presentation::TrianglePresentation;
pub use quotient::{build_quotient, edge_id};
pub use search::{search_presentation, search_presentation_with, SearchConfig};

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}, column {column}: {message}")]
    ParseError {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(
        "line {line}, column {column}: edge {edge} runs from type {tail_type} to type {head_type}"
    )]
    TypeRuleViolation {
        line: usize,
        column: usize,
        edge: String,
        tail_type: u8,
        head_type: u8,
    },
    #[error("line {line}, column {column}: {owner} references unknown id {reference}")]
    DanglingReference {
        line: usize,
        column: usize,
        owner: String,
        reference: String,
    },
    #[error("line {line}, column {column}: {message}")]
    Malformed {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("no presentation for q = {q}, seed = {seed} within {nodes} search nodes")]
    SearchExhausted { q: u32, seed: u64, nodes: u64 },
    #[error(transparent)]
    Plane(#[from] PlaneError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}
