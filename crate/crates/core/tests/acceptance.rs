//! Acceptance criteria. Each test prints one PASS/FAIL line to standard
//! error (uncaptured) and then asserts the recorded outcome. Two criteria
//! are red: the literal `T'` is not a right inverse, and `tr A_n` differs
//! from `tr T^n`. Their tests assert the red outcome so that a change in
//! either direction is noticed.

use std::io::Write;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use building_zeta::complex::{validate, TriangleComplex};
use building_zeta::enumerate::{enumerate_gallery_loops, enumerate_geodesic_loops};
use building_zeta::exactalg::{
    det_one_minus_um, neg_log_derivative, PowerQuotient, SparseIntMatrix,
};
use building_zeta::ingest::{build_quotient, search_presentation};
use building_zeta::operators::{
    build_a_direct, build_a_recursive, build_h, build_l, build_pi, build_t,
};
use building_zeta::projgeom::{
    count_common_neighbours, local_t, local_t_prime, right_inverse_report, ProjPlane,
};
use building_zeta::zeta::{
    compute_z1, compute_z2, verify_series_identities, z1_certificate, z_certificate,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn quotients() -> &'static [(u32, TriangleComplex); 2] {
    static CELL: OnceLock<[(u32, TriangleComplex); 2]> = OnceLock::new();
    CELL.get_or_init(|| {
        [2, 3].map(|q| {
            (
                q,
                build_quotient(&search_presentation(q, 0).unwrap()).unwrap(),
            )
        })
    })
}

enum Expect {
    Pass,
    /// Red with the finding recorded in the decisions ledger.
    Fail,
}

fn verdict(n: u32, title: &str, pass: bool, detail: &str, expect: Expect) {
    let status = if pass { "PASS" } else { "FAIL" };
    let mut err = std::io::stderr().lock();
    let _ = writeln!(err, "criterion {n:>2} {status}: {title} | {detail}");
    match expect {
        Expect::Pass => assert!(pass, "criterion {n}: {detail}"),
        Expect::Fail => assert!(!pass, "criterion {n} turned green: {detail}"),
    }
}

fn within(start: Instant, limit: Duration) -> bool {
    start.elapsed() < limit
}

#[test]
fn criterion_01_local_right_inverse() {
    let mut pass = true;
    let mut detail = Vec::new();
    for q in [2, 3, 4, 5] {
        let start = Instant::now();
        let plane = ProjPlane::new(q).unwrap();
        let literal = local_t(&plane)
            .compose(&local_t_prime(&plane))
            .is_identity();
        let report = right_inverse_report(&plane);
        pass &= literal && within(start, Duration::from_secs(1));
        detail.push(format!(
            "q={q}: T T' = I {literal} (diagonal {:?}), exact inverse {}",
            report.literal_diagonal, report.corrected_is_right_inverse
        ));
    }
    verdict(
        1,
        "local right inverse",
        pass,
        &detail.join("; "),
        Expect::Fail,
    );
}

#[test]
fn criterion_02_local_counts() {
    let start = Instant::now();
    let mut pass = true;
    let mut detail = Vec::new();
    for q in [2usize, 3, 4, 5] {
        let plane = ProjPlane::new(q as u32).unwrap();
        match count_common_neighbours(&plane) {
            Ok(r) => {
                pass &= r.neighbours == 2 * (q * q + q + 1)
                    && r.common_neighbours == q + 1
                    && r.triple_bound_holds;
                detail.push(format!(
                    "q={q}: {} neighbours, {} common, triples through the centre share <= {}",
                    r.neighbours, r.common_neighbours, r.max_common_through_centre
                ));
            }
            Err(e) => {
                pass = false;
                detail.push(format!("q={q}: {e}"));
            }
        }
    }
    pass &= within(start, Duration::from_secs(1));
    verdict(2, "local counts", pass, &detail.join("; "), Expect::Pass);
}

#[test]
fn criterion_03_generator_soundness() {
    let start = Instant::now();
    let mut pass = true;
    let mut detail = Vec::new();
    for q in [2u32, 3] {
        let c = build_quotient(&search_presentation(q, 0).unwrap()).unwrap();
        let r = validate(&c);
        let qq = q as usize;
        pass &= r.passed()
            && r.out_degree.iter().all(|&d| d == qq * qq + qq + 1)
            && r.chambers_per_edge.iter().all(|&k| k == qq + 1)
            && 3 * r.chambers == (qq + 1) * r.edges;
        detail.push(format!(
            "q={q}: {} vertices, {} edges, {} chambers, {} violations",
            r.vertices,
            r.edges,
            r.chambers,
            r.violations.len()
        ));
    }
    pass &= within(start, Duration::from_secs(60));
    verdict(
        3,
        "generator soundness",
        pass,
        &detail.join("; "),
        Expect::Pass,
    );
}

#[test]
fn criterion_04_determinant_enumeration_equivalence() {
    let start = Instant::now();
    let mut pass = true;
    let mut detail = Vec::new();
    for (q, c) in quotients() {
        let z1 = compute_z1(c).unwrap().z1;
        let loops = enumerate_geodesic_loops(c, 8).unwrap();
        let euler = loops.euler_product() == z1.truncate(9);
        let t = build_t(c);
        let mut power = SparseIntMatrix::identity(t.rows());
        let mut traces = true;
        for n in 1..=8 {
            power = &power * &t;
            traces &= BigInt::from(loops.trace_sums[n - 1]) == power.trace();
        }
        pass &= euler && traces;
        detail.push(format!(
            "q={q}: Euler product = Z1 mod u^9 {euler}, sums {:?} = tr T^n {traces}",
            loops.trace_sums
        ));
    }
    pass &= within(start, Duration::from_secs(300));
    verdict(
        4,
        "determinant-enumeration equivalence",
        pass,
        &detail.join("; "),
        Expect::Pass,
    );
}

#[test]
fn criterion_05_hecke_relations() {
    let start = Instant::now();
    let mut pass = true;
    let mut detail = Vec::new();
    for (q, c) in quotients() {
        let qb = BigInt::from(*q);
        let pi1 = build_pi(c, 1).unwrap();
        let pi2 = build_pi(c, 2).unwrap();
        let direct: Vec<SparseIntMatrix> =
            (1..=10).map(|n| build_a_direct(c, n).unwrap()).collect();
        let recursive = build_a_recursive(c, 10).unwrap();
        let a1 = direct[0] == pi1;
        let a2 = direct[1] == &(&pi1 * &pi1) - &pi2.scale(&(&qb + 1));
        let q3 = &qb * &qb * &qb;
        let recurrence = (3..10).all(|n| {
            // A_{n+1} = A_n pi1 - q A_{n-1} pi2 + q^3 A_{n-2}, indices shifted by one
            let rhs = &(&(&direct[n - 1] * &pi1) - &(&direct[n - 2] * &pi2).scale(&qb))
                + &direct[n - 3].scale(&q3);
            direct[n] == rhs
        });
        let same = recursive == direct;
        let commute = &pi1 * &pi2 == &pi2 * &pi1;
        pass &= a1 && a2 && recurrence && same && commute;
        detail.push(format!(
            "q={q}: A1 {a1}, A2 {a2}, recurrence {recurrence}, direct = recursive {same}, commute {commute}"
        ));
    }
    pass &= within(start, Duration::from_secs(60));
    verdict(5, "Hecke relations", pass, &detail.join("; "), Expect::Pass);
}

#[test]
fn criterion_06_rational_form_stabilization() {
    let start = Instant::now();
    let mut pass = true;
    let mut detail = Vec::new();
    for (q, c) in quotients() {
        match build_h(c, 10) {
            Ok(h) => {
                pass &= h.derived_matches_closed_form;
                detail.push(format!(
                    "q={q}: degrees 3..9 vanish, derived form {}, printed form per coefficient {:?}",
                    h.derived_matches_closed_form, h.printed_matches_derived
                ));
            }
            Err(e) => {
                pass = false;
                detail.push(format!("q={q}: {e}"));
            }
        }
    }
    pass &= within(start, Duration::from_secs(60));
    verdict(
        6,
        "rational-form stabilization",
        pass,
        &detail.join("; "),
        Expect::Pass,
    );
}

#[test]
fn criterion_07_series_identity() {
    let start = Instant::now();
    let mut pass = true;
    let mut detail = Vec::new();
    for (q, c) in quotients() {
        let r = verify_series_identities(c, 10).unwrap();
        pass &= r.signed_identity_holds;
        detail.push(format!(
            "q={q}: signed {} (first mismatch n={:?}: -Z1'/Z1 gives {}, tr A_n = {}), unsigned {}, \
             -Z1'/Z1 = sum tr T^n {}",
            r.signed_identity_holds,
            r.signed_first_mismatch,
            r.signed_first_mismatch.map_or("-", |n| r.neg_log_derivative[n - 1].as_str()),
            r.signed_first_mismatch.map_or("-", |n| r.trace_a[n - 1].as_str()),
            r.unsigned_identity_holds,
            r.neg_log_derivative == r.trace_t,
        ));
    }
    pass &= within(start, Duration::from_secs(60));
    verdict(7, "series identity", pass, &detail.join("; "), Expect::Fail);
}

#[test]
fn criterion_08_gallery_determinant() {
    let start = Instant::now();
    let mut pass = true;
    let mut detail = Vec::new();
    for (q, c) in quotients() {
        let z2 = compute_z2(c).unwrap();
        let in_u_cubed = z2
            .coeffs()
            .iter()
            .enumerate()
            .all(|(k, v)| k % 3 == 0 || v.is_zero());
        let bounded = z2.degree().unwrap_or(0) <= 3 * c.chambers().len();
        pass &= in_u_cubed && bounded && z2.coeff(0).is_one();
        let gallery = enumerate_gallery_loops(c, 18).unwrap();
        let sums = gallery.trace_sums();
        let l = build_l(c).l;
        let mut power = SparseIntMatrix::identity(l.rows());
        let mut rows = Vec::new();
        for (n, sum) in sums.iter().enumerate().take(3) {
            power = &power * &l;
            let tr = power.trace();
            let matched = *sum == num_rational::BigRational::from_integer(tr.clone());
            rows.push(format!(
                "n={}: gallery {sum} vs tr L^n {tr} match {matched}",
                n + 1
            ));
        }
        detail.push(format!(
            "q={q}: Z2 in u^3 {in_u_cubed}, deg {} <= {} {bounded}; {}",
            z2.degree().unwrap_or(0),
            3 * c.chambers().len(),
            rows.join(", ")
        ));
    }
    pass &= within(start, Duration::from_secs(600));
    verdict(
        8,
        "gallery determinant (trace comparison recorded)",
        pass,
        &detail.join("; "),
        Expect::Pass,
    );
}

#[test]
fn criterion_09_factorization_certificates() {
    let start = Instant::now();
    let mut pass = true;
    let mut detail = Vec::new();
    for (q, c) in quotients() {
        for (name, cert) in [
            ("Z1 certificate", z1_certificate(c, 64).unwrap()),
            ("Z certificate", z_certificate(c, 64).unwrap()),
        ] {
            let state = match &cert.result {
                PowerQuotient::Found { m, .. } => {
                    pass &=
                        cert.verified && cert.constant_term_one && cert.oracle_divides_some_power;
                    format!("found exponent {m}, re-multiplied {}", cert.verified)
                }
                PowerQuotient::NoSolution { residual, .. } => {
                    // the divisibility oracle must agree that no power works
                    pass &= !cert.oracle_divides_some_power;
                    format!(
                        "NO SOLUTION (residual degree {})",
                        residual.degree().unwrap_or(0)
                    )
                }
                PowerQuotient::PowerBoundExceeded { m_max } => {
                    pass = false;
                    format!("exponent above {m_max}")
                }
            };
            detail.push(format!("q={q} {name}: {state}"));
        }
    }
    pass &= within(start, Duration::from_secs(300));
    verdict(
        9,
        "factorization certificates",
        pass,
        &detail.join("; "),
        Expect::Pass,
    );
}

#[test]
fn criterion_10_degree_audit() {
    let mut pass = true;
    let mut detail = Vec::new();
    for (q, c) in quotients() {
        let audit = compute_z1(c).unwrap().audit;
        let json: serde_json::Value = serde_json::to_value(&audit).unwrap();
        pass &= [
            "observed_degree",
            "edges",
            "claimed_degree",
            "claimed_matches",
            "edge_formula",
            "det_t_nonzero",
        ]
        .iter()
        .all(|k| json.get(k).is_some());
        detail.push(format!(
            "q={q}: deg Z1 {}, edges {}, (q+1)N/2 = {} match {}, N(q^2+q+1) = {} match {}, det T != 0 {}",
            audit.observed_degree,
            audit.edges,
            audit.claimed_degree,
            audit.claimed_matches,
            audit.edge_formula,
            audit.edge_formula_matches,
            audit.det_t_nonzero
        ));
    }
    verdict(10, "degree audit", pass, &detail.join("; "), Expect::Pass);
}

#[test]
fn criterion_11_exact_algebra_self_tests() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut constant = 0;
    let mut log_derivative = 0;
    let mut interpolation = 0;
    for _ in 0..100 {
        let n = rng.gen_range(1..=20);
        let nnz = rng.gen_range(0..=3 * n);
        let m = SparseIntMatrix::from_triplets(
            n,
            n,
            (0..nnz).map(|_| {
                (
                    rng.gen_range(0..n),
                    rng.gen_range(0..n),
                    BigInt::from(rng.gen_range(-5..=5)),
                )
            }),
        );
        // the extra evaluation point is checked inside; a failure is an error
        let Ok(z) = det_one_minus_um(&m) else {
            continue;
        };
        interpolation += 1;
        if z.coeff(0).is_one() {
            constant += 1;
        }
        let neg = neg_log_derivative(&z, 10).unwrap();
        let mut power = SparseIntMatrix::identity(n);
        let ok = (0..10).all(|k| {
            power = &power * &m;
            neg[k] == power.trace()
        });
        if ok {
            log_derivative += 1;
        }
    }
    let pass = constant == 100
        && log_derivative == 100
        && interpolation == 100
        && within(start, Duration::from_secs(60));
    let detail = format!(
        "constant term 1: {constant}/100, log-derivative traces: {log_derivative}/100, \
         interpolation check: {interpolation}/100"
    );
    verdict(11, "exact-algebra self-tests", pass, &detail, Expect::Pass);
}
