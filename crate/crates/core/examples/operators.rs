// The edge, chamber, Hecke and segment operators of a quotient, and the
// stabilized product that defines H(u).

use building_zeta::ingest::{build_quotient, search_presentation};
use building_zeta::operators::{
    build_a_direct, build_a_recursive, build_d, build_h, build_l, build_pi, build_t,
};

pub fn run_example() {
    let c = build_quotient(&search_presentation(2, 0).unwrap()).unwrap();
    let t = build_t(&c);
    let gallery = build_l(&c);
    println!(
        "T: {}x{}, {} nonzero; L: {}x{}, tr L = {}",
        t.rows(),
        t.cols(),
        t.nnz(),
        gallery.l.rows(),
        gallery.l.cols(),
        gallery.l.trace()
    );

    let pi1 = build_pi(&c, 1).unwrap();
    let pi2 = build_pi(&c, 2).unwrap();
    assert_eq!(&pi1 * &pi2, &pi2 * &pi1);
    let recursive = build_a_recursive(&c, 10).unwrap();
    for (n, a) in recursive.iter().enumerate() {
        assert_eq!(*a, build_a_direct(&c, n + 1).unwrap());
    }
    println!(
        "tr A_n for n = 1..10: {:?}",
        recursive
            .iter()
            .map(|a| a.trace().to_string())
            .collect::<Vec<_>>()
    );

    let h = build_h(&c, 10).unwrap();
    println!(
        "H(u) stabilizes; derived equals closed form: {}",
        h.derived_matches_closed_form
    );
    println!(
        "printed H matches per coefficient: {:?}",
        h.printed_matches_derived
    );
    println!("D(u) = {}", build_d(&c).unwrap());
}

#[allow(dead_code)]
fn main() {
    run_example();
}
