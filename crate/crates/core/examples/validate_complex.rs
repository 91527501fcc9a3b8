// Validation of a complex and the errors reported for broken input.

use building_zeta::complex::{continuation_counts, validate};
use building_zeta::ingest::{build_quotient, complex_from_json, search_presentation};

pub fn run_example() {
    let complex = build_quotient(&search_presentation(2, 0).unwrap()).unwrap();
    let counts = continuation_counts(&complex).expect("valid complex");
    println!(
        "continuations per edge: expected {}, forward {:?}",
        counts.expected, counts.forward
    );

    let damaged = complex.without_edge(0);
    let report = validate(&damaged);
    println!(
        "after removing an edge: {} violations",
        report.violations.len()
    );
    for v in report.violations.iter().take(3) {
        println!("  {v:?}");
    }
    assert!(!report.passed());

    let text = r#"{
  "q": 2,
  "vertices": [
    {"id":"a","type":0},
    {"id":"b","type":0}
  ],
  "edges": [
    {"id":"ab","tail":"a","head":"b"}
  ],
  "chambers": []
}"#;
    match complex_from_json(text) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!("type rule is checked on load"),
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
