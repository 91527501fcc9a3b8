// Exact determinants, power series and power quotients over Z[u].

use building_zeta::exactalg::{
    det_one_minus_um, extract_power_quotient, log_series, neg_log_derivative, IntPolynomial,
    PowerQuotient, RationalFunction, SparseIntMatrix,
};
use num_bigint::BigInt;

pub fn run_example() {
    // a 3-cycle with weight 2: det(1 - uM) = 1 - 8u^3
    let m = SparseIntMatrix::from_triplets(3, 3, (0..3).map(|i| ((i + 1) % 3, i, BigInt::from(2))));
    let z = det_one_minus_um(&m).unwrap();
    println!("det(1 - uM) = {z}");
    println!("-z'/z = {:?}", neg_log_derivative(&z, 7).unwrap());
    println!(
        "log z = {:?}",
        log_series(&z, 6)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );

    // (1-8u^3) divides (1-u^3)(1-8u^3) once
    let d = IntPolynomial::from_i64s(&[1, 0, 0, -9, 0, 0, 8]);
    match extract_power_quotient(&RationalFunction::from_polynomial(z.clone()), &d, 8).unwrap() {
        PowerQuotient::Found { m, quotient } => println!("z * ({quotient}) = D^{m}"),
        other => println!("{other:?}"),
    }
    // 1 - 2u divides no power of 1 - 3u
    let r = extract_power_quotient(
        &RationalFunction::from_polynomial(IntPolynomial::from_i64s(&[1, -2])),
        &IntPolynomial::from_i64s(&[1, -3]),
        8,
    )
    .unwrap();
    assert!(matches!(r, PowerQuotient::NoSolution { .. }));
    println!("1 - 2u against 1 - 3u: {r:?}");
}

#[allow(dead_code)]
fn main() {
    run_example();
}
