// Brute-force enumeration of closed geodesics and closed galleries, and the
// trace table comparing them with tr T^n and tr L^n.

use building_zeta::enumerate::{enumerate_gallery_loops, enumerate_geodesic_loops};
use building_zeta::ingest::{build_quotient, search_presentation};
use building_zeta::operators::build_t;

pub fn run_example() {
    let c = build_quotient(&search_presentation(2, 0).unwrap()).unwrap();
    let geodesics = enumerate_geodesic_loops(&c, 9).unwrap();
    let t = build_t(&c);
    let mut power = t.clone();
    for n in 1..=9 {
        println!(
            "n={n}: sum l(c_0) = {}, tr T^n = {}",
            geodesics.trace_sums[n - 1],
            power.trace()
        );
        power = &power * &t;
    }
    println!(
        "primitive geodesic loops by length: {:?}",
        geodesics.primitive_counts
    );
    println!("Euler product mod u^10: {}", geodesics.euler_product());

    let galleries = enumerate_gallery_loops(&c, 12).unwrap();
    for g in &galleries.counts {
        println!(
            "{} chambers: {} loops ({} primitive), {} based",
            g.chambers, g.classes, g.primitive, g.based
        );
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
