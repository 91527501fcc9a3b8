//! Command-line front end.
//!
//! Exit codes: 0 when every hard invariant holds, 1 on an invariant failure
//! or unreadable input, 2 on a usage error. Reports go to `--out` (`-` for
//! standard output); progress and findings go to standard error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::complex::{validate, TriangleComplex};
use crate::enumerate::{
    enumerate_gallery_loops_with, enumerate_geodesic_loops_with, trace_table_csv,
    EnumerationConfig, TraceRow,
};
use crate::exactalg::SparseIntMatrix;
use crate::ingest::{self, build_quotient, search_presentation};
use crate::operators::{build_l, build_t, operator_bundle};
use crate::projgeom::{count_common_neighbours, right_inverse_report, ProjPlane};
use crate::zeta::{zeta_report, ZetaOptions};

/// Largest series and enumeration order accepted on the command line.
pub const MAX_N: usize = 12;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVARIANT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "building-zeta",
    version,
    about = "Zeta functions of finite quotients of the PGL3 building"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the plane, the local counts and the local right inverse.
    LocalCheck {
        #[arg(long)]
        q: u32,
        #[arg(long, default_value = "-")]
        out: PathBuf,
    },
    /// Search a triangle presentation and write its quotient complex.
    Generate {
        #[arg(long)]
        q: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Also write the presentation itself.
        #[arg(long)]
        presentation: Option<PathBuf>,
    },
    /// Validate a complex file.
    Validate {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Export T, L1, L2, L3, L, pi1, pi2 and A_1..A_n.
    Operators {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "-")]
        out: PathBuf,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
    /// Compute the full zeta report.
    Zeta {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "-")]
        out: PathBuf,
        /// Series and enumeration order, at most 10.
        #[arg(long, default_value_t = 8)]
        order: usize,
        /// Bound on certificate exponents.
        #[arg(long, default_value_t = 64)]
        m_max: u32,
        /// Largest gallery loop in chambers.
        #[arg(long, default_value_t = 18)]
        gallery_chambers: usize,
        /// Write the trace table to this CSV file and reference it.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Include wall-clock timings (the report is then not reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Enumerate loops and print the trace comparison table.
    Enumerate {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, default_value = "-")]
        out: PathBuf,
        /// Largest gallery loop in chambers.
        #[arg(long, default_value_t = 18)]
        gallery_chambers: usize,
    },
}

/// A failure that ends the run with the given exit code.
struct Exit {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Exit {
    Exit {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn failure(message: impl ToString) -> Exit {
    Exit {
        code: EXIT_INVARIANT,
        message: message.to_string(),
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(Exit { code, message }) => {
            let _ = writeln!(stderr, "error: {message}");
            code
        }
    }
}

fn dispatch(command: Command, stdout: &mut dyn Write, log: &mut dyn Write) -> Result<i32, Exit> {
    match command {
        Command::LocalCheck { q, out } => local_check(q, &out, stdout, log),
        Command::Generate {
            q,
            seed,
            out,
            presentation,
        } => generate(q, seed, &out, presentation.as_deref(), stdout, log),
        Command::Validate { input } => validate_file(&input, log),
        Command::Operators { input, out, n_max } => {
            check_order(n_max, MAX_N)?;
            let c = load(&input)?;
            let bundle = operator_bundle(&c, n_max).map_err(failure)?;
            emit(&out, &to_json(&bundle), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Zeta {
            input,
            out,
            order,
            m_max,
            gallery_chambers,
            csv,
            timing,
        } => {
            check_order(order, 10)?;
            let c = load(&input)?;
            zeta(
                &c,
                &out,
                order,
                m_max,
                gallery_chambers,
                csv.as_deref(),
                timing,
                stdout,
                log,
            )
        }
        Command::Enumerate {
            input,
            n_max,
            out,
            gallery_chambers,
        } => {
            check_order(n_max, MAX_N)?;
            let c = load(&input)?;
            enumerate(&c, n_max, gallery_chambers, &out, stdout)
        }
    }
}

fn check_order(n: usize, bound: usize) -> Result<(), Exit> {
    if n > bound {
        return Err(usage(format!("order {n} exceeds {bound}")));
    }
    Ok(())
}

fn load(path: &Path) -> Result<TriangleComplex, Exit> {
    if !path.is_file() {
        return Err(usage(format!(
            "input file {} does not exist",
            path.display()
        )));
    }
    ingest::load(path).map_err(failure)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report types serialize");
    text.push('\n');
    text
}

fn emit(out: &Path, text: &str, stdout: &mut dyn Write) -> Result<(), Exit> {
    if out == Path::new("-") {
        stdout.write_all(text.as_bytes()).map_err(failure)
    } else {
        std::fs::write(out, text).map_err(|e| failure(format!("{}: {e}", out.display())))
    }
}

#[derive(Serialize)]
struct LocalCheck {
    q: u32,
    plane_invariants: bool,
    counts: crate::projgeom::LocalCountReport,
    right_inverse: crate::projgeom::RightInverseReport,
}

fn local_check(
    q: u32,
    out: &Path,
    stdout: &mut dyn Write,
    log: &mut dyn Write,
) -> Result<i32, Exit> {
    let plane = ProjPlane::new(q).map_err(|e| usage(e.to_string()))?;
    plane.check_invariants().map_err(failure)?;
    let counts = count_common_neighbours(&plane).map_err(failure)?;
    let right_inverse = right_inverse_report(&plane);
    if !right_inverse.literal_is_right_inverse {
        let _ = writeln!(
            log,
            "finding: T' with coefficients -1/(q+1), 1/(q^2-q-1) is not a right inverse \
             (diagonal {:?}, off-diagonal {:?}); the exact inverse uses {} and {}",
            right_inverse.literal_diagonal,
            right_inverse.literal_off_diagonal,
            right_inverse.corrected_incident_coefficient,
            right_inverse.corrected_nonincident_coefficient,
        );
    }
    let ok = counts.triple_bound_holds && right_inverse.corrected_is_right_inverse;
    emit(
        out,
        &to_json(&LocalCheck {
            q,
            plane_invariants: true,
            counts,
            right_inverse,
        }),
        stdout,
    )?;
    Ok(if ok { EXIT_OK } else { EXIT_INVARIANT })
}

fn generate(
    q: u32,
    seed: u64,
    out: &Path,
    presentation: Option<&Path>,
    stdout: &mut dyn Write,
    log: &mut dyn Write,
) -> Result<i32, Exit> {
    let p = search_presentation(q, seed).map_err(|e| match e {
        ingest::IngestError::Plane(_) => usage(e.to_string()),
        _ => failure(e),
    })?;
    if let Some(path) = presentation {
        emit(path, &ingest::presentation_to_json(&p), stdout)?;
    }
    let c = build_quotient(&p).map_err(failure)?;
    let report = validate(&c);
    let _ = writeln!(
        log,
        "generated q={q} seed={seed}: {} vertices, {} edges, {} chambers",
        report.vertices, report.edges, report.chambers
    );
    emit(out, &ingest::complex_to_json(&c), stdout)?;
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_INVARIANT
    })
}

fn validate_file(input: &Path, log: &mut dyn Write) -> Result<i32, Exit> {
    let c = load(input)?;
    let report = validate(&c);
    let _ = writeln!(log, "{}", to_json(&report).trim_end());
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_INVARIANT
    })
}

#[allow(clippy::too_many_arguments)]
fn zeta(
    c: &TriangleComplex,
    out: &Path,
    order: usize,
    m_max: u32,
    gallery_chambers: usize,
    csv: Option<&Path>,
    timing: bool,
    stdout: &mut dyn Write,
    log: &mut dyn Write,
) -> Result<i32, Exit> {
    let validation = validate(c);
    if !validation.passed() {
        return Err(failure(format!(
            "complex fails validation: {:?}",
            validation.violations
        )));
    }
    let options = ZetaOptions {
        order,
        m_max,
        gallery_chambers,
        timing,
    };
    let mut report = zeta_report(c, &options).map_err(failure)?;
    if let Some(path) = csv {
        emit(path, &trace_table_csv(&report.traces), stdout)?;
        report.trace_table = Some(path.display().to_string());
    }
    for d in &report.discrepancies {
        let _ = writeln!(log, "finding: {d}");
    }
    let failures = report.invariant_failures();
    for f in &failures {
        let _ = writeln!(log, "invariant failed: {f}");
    }
    emit(out, &to_json(&report), stdout)?;
    Ok(if failures.is_empty() {
        EXIT_OK
    } else {
        EXIT_INVARIANT
    })
}

fn enumerate(
    c: &TriangleComplex,
    n_max: usize,
    chambers: usize,
    out: &Path,
    stdout: &mut dyn Write,
) -> Result<i32, Exit> {
    let config = EnumerationConfig {
        max_length: MAX_N,
        max_gallery_chambers: chambers.max(18),
        store_limit: 0,
    };
    let geodesics = enumerate_geodesic_loops_with(c, n_max, &config).map_err(failure)?;
    let gallery = enumerate_gallery_loops_with(c, chambers, &config).map_err(failure)?;
    let gallery_sums = gallery.trace_sums();
    let t = build_t(c);
    let l = build_l(c).l;
    let mut t_power = SparseIntMatrix::identity(t.rows());
    let mut l_power = SparseIntMatrix::identity(l.rows());
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        t_power = &t_power * &t;
        let gallery_sum = gallery_sums.get(n - 1).cloned();
        let trace_l_n = gallery_sum.as_ref().map(|_| {
            l_power = &l_power * &l;
            l_power.trace()
        });
        rows.push(TraceRow {
            n,
            geodesic_sum: Some(geodesics.trace_sums[n - 1]),
            trace_t_n: t_power.trace(),
            gallery_sum,
            trace_l_n,
        });
    }
    emit(out, &trace_table_csv(&rows), stdout)?;
    let geodesic_ok = rows.iter().all(|r| {
        r.geodesic_sum
            .is_none_or(|g| num_bigint::BigInt::from(g) == r.trace_t_n)
    });
    Ok(if geodesic_ok { EXIT_OK } else { EXIT_INVARIANT })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("building-zeta").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_args(&[]).0, EXIT_USAGE);
        assert_eq!(run_args(&["local-check"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["local-check", "--q", "6"]).0, EXIT_USAGE);
        assert_eq!(
            run_args(&["validate", "--in", "/nonexistent.json"]).0,
            EXIT_USAGE
        );
    }

    #[test]
    fn local_check_q2_exits_0() {
        let (code, out, err) = run_args(&["local-check", "--q", "2"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("\"corrected_is_right_inverse\": true"));
        assert!(err.contains("finding"));
    }

    #[test]
    fn generate_validate_enumerate_pipeline() {
        let dir = tempfile::tempdir().unwrap();
        let file = dir.path().join("q2.json");
        let file = file.to_str().unwrap();
        assert_eq!(
            run_args(&["generate", "--q", "2", "--seed", "0", "--out", file]).0,
            EXIT_OK
        );
        assert_eq!(run_args(&["validate", "--in", file]).0, EXIT_OK);
        let (code, csv, _) = run_args(&[
            "enumerate",
            "--in",
            file,
            "--n-max",
            "3",
            "--gallery-chambers",
            "6",
        ]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(csv.lines().nth(3).unwrap(), "3,147,147,,,true");
        assert_eq!(
            run_args(&["enumerate", "--in", file, "--n-max", "13"]).0,
            EXIT_USAGE
        );
    }
}
