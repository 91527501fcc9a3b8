// The full zeta report for a generated quotient: Z1, Z2, D, the
// certificates, the series checks and the discrepancy list.

use building_zeta::enumerate::trace_table_csv;
use building_zeta::ingest::{build_quotient, search_presentation};
use building_zeta::zeta::{zeta_report, ZetaOptions};

pub fn run_example() {
    let c = build_quotient(&search_presentation(2, 0).unwrap()).unwrap();
    let report = zeta_report(
        &c,
        &ZetaOptions {
            gallery_chambers: 12,
            ..Default::default()
        },
    )
    .unwrap();
    println!("Z1 = {}", report.z1);
    println!("Z2 = {}", report.z2);
    println!("D  = {}", report.d);
    println!("Z1 certificate: {:?}", report.z1_certificate.result);
    println!("{}", trace_table_csv(&report.traces));
    for d in &report.discrepancies {
        println!("finding: {d}");
    }
    assert!(report.invariant_failures().is_empty());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
