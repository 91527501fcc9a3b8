// Search a triangle presentation, build its quotient and round-trip it
// through the JSON format.

use building_zeta::complex::validate;
use building_zeta::ingest::{
    build_quotient, complex_from_json, complex_to_json, search_presentation,
};
use building_zeta::projgeom::ProjPlane;

pub fn run_example() {
    for q in [2, 3] {
        let presentation = search_presentation(q, 7).expect("presentation");
        assert!(presentation.is_valid(&ProjPlane::new(q).unwrap()));
        let complex = build_quotient(&presentation).expect("quotient");
        let report = validate(&complex);
        println!(
            "q={q}: lambda = {:?}, {} triples -> {} vertices, {} edges, {} chambers, valid: {}",
            presentation.lambda,
            presentation.triples.len(),
            report.vertices,
            report.edges,
            report.chambers,
            report.passed()
        );
        let json = complex_to_json(&complex);
        let back = complex_from_json(&json).expect("round trip");
        assert_eq!(complex_to_json(&back), json);
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
