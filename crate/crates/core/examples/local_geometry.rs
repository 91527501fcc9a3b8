// The projective plane at a vertex: local counts and the local operator
// with its right inverse.

use building_zeta::projgeom::{count_common_neighbours, right_inverse_report, ProjPlane};

pub fn run_example() {
    for q in [2, 3, 4] {
        let plane = ProjPlane::new(q).expect("prime power");
        plane.check_invariants().expect("plane axioms");
        let counts = count_common_neighbours(&plane).expect("local counts");
        let inverse = right_inverse_report(&plane);
        println!(
            "q={q}: {} points, {} neighbours, {} flags, {} common neighbours",
            plane.size(),
            counts.neighbours,
            counts.flags,
            counts.common_neighbours
        );
        println!(
            "  T T' = I with -1/(q+1), 1/(q^2-q-1): {}; with {}, {}: {}",
            inverse.literal_is_right_inverse,
            inverse.corrected_incident_coefficient,
            inverse.corrected_nonincident_coefficient,
            inverse.corrected_is_right_inverse
        );
        assert!(inverse.corrected_is_right_inverse);
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
