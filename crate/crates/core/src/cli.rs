//! Command-line front end: tables, identity suites and single values.
//!
//! Exit codes: 0 success, 1 identity violation, 2 usage or input error.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::Error;
use crate::exact::{format_rational, parse_rational, Rational, TriangleKind};
use crate::report::IdentityReport;
use crate::{basis, errata, fermat, interp, polyfam, powersum, stirling};

/// Outcome of one command: exit code plus the text to print.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub payload: String,
}

impl CommandResult {
    fn ok(payload: String) -> Self {
        CommandResult { exit_code: 0, payload }
    }

    fn usage(msg: impl Into<String>) -> Self {
        CommandResult {
            exit_code: 2,
            payload: msg.into(),
        }
    }

    fn from_error(err: &Error) -> Self {
        match err {
            Error::IdentityViolation(c) => CommandResult {
                exit_code: 1,
                payload: json!({ "error": "identity violation", "counterexample": c }).to_string(),
            },
            other => CommandResult::usage(format!("error: {other}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "faulhaber", about = "Exact power sums, polynomial families and Stirling-type triangles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print rows 0..=rows of a triangle, the A-coefficients, or the T/U coefficients.
    Table {
        kind: String,
        #[arg(long, default_value_t = 7)]
        rows: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Run an identity suite and print per-identity counts.
    Verify {
        suite: String,
        #[arg(long)]
        n_max: Option<i64>,
        #[arg(long)]
        m_max: Option<i64>,
        #[arg(long)]
        r_max: Option<i64>,
        #[arg(long)]
        k_max: Option<i64>,
        #[arg(long)]
        a_max: Option<i64>,
    },
    /// r-fold sum of n^m evaluated at n.
    Powersum { m: u32, r: u32, n: i64 },
    /// Fermat quotient (a^(p-1) - 1)/p.
    FermatQuotient { a: i64, p: i64 },
    /// Principal polynomial of a^k, optionally evaluated at x.
    PrincipalPoly {
        a: i64,
        k: u32,
        #[arg(long)]
        eval: Option<String>,
    },
    /// Coefficients of sum_{t=1}^n t^m, lowest degree first.
    Faulhaber { m: usize },
    /// Recorded discrepancies and their evidence.
    Errata,
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return CommandResult {
                exit_code: code,
                payload: e.to_string(),
            };
        }
    };
    match cli.command {
        Command::Table { kind, rows, format } => cmd_table(&kind, rows, format),
        Command::Verify {
            suite,
            n_max,
            m_max,
            r_max,
            k_max,
            a_max,
        } => cmd_verify(
            &suite,
            &Bounds {
                n_max,
                m_max,
                r_max,
                k_max,
                a_max,
            },
        ),
        Command::Powersum { m, r, n } => {
            CommandResult::ok(format_rational(&powersum::rfold_sum(m, r).eval_int(n)))
        }
        Command::FermatQuotient { a, p } => match fermat::fermat_quotient(a, p) {
            Ok(q) => CommandResult::ok(q.to_string()),
            Err(e) => CommandResult::from_error(&e),
        },
        Command::PrincipalPoly { a, k, eval } => cmd_principal(a, k, eval.as_deref()),
        Command::Faulhaber { m } => CommandResult::ok(
            serde_json::to_string(&powersum::faulhaber(m)).expect("strings serialize"),
        ),
        Command::Errata => cmd_errata(),
    }
}

fn cmd_principal(a: i64, k: u32, x: Option<&str>) -> CommandResult {
    let f = match interp::principal_poly(a, k) {
        Ok(f) => f,
        Err(e) => return CommandResult::from_error(&e),
    };
    match x {
        None => CommandResult::ok(serde_json::to_string(&f).expect("strings serialize")),
        Some(s) => match parse_rational(s).and_then(|x| f.eval(&x)) {
            Ok(v) => CommandResult::ok(format_rational(&v)),
            Err(e) => CommandResult::from_error(&e),
        },
    }
}

fn cmd_errata() -> CommandResult {
    let list: Vec<_> = errata::errata()
        .into_iter()
        .map(|e| {
            let ev = e.evidence();
            json!({
                "id": e.id,
                "topic": e.topic,
                "printed": e.printed,
                "corrected": e.corrected,
                "confirmed": ev.confirmed,
                "evidence": ev.detail,
            })
        })
        .collect();
    let all = list.iter().all(|v| v["confirmed"] == true);
    CommandResult {
        exit_code: if all { 0 } else { 1 },
        payload: serde_json::to_string_pretty(&list).expect("json values serialize"),
    }
}

/// Rows of rational cells for `table`.
pub fn table_rows(kind: &str, rows: usize) -> crate::Result<Vec<Vec<Rational>>> {
    let key = kind.to_ascii_lowercase().replace(['-', '_'], "");
    let to_rat = |r: Vec<Vec<crate::exact::Integer>>| -> Vec<Vec<Rational>> {
        r.into_iter()
            .map(|row| row.into_iter().map(Rational::from_integer).collect())
            .collect()
    };
    let n = rows as i64;
    match key.as_str() {
        "faulhabera" => Ok((0..=n)
            .map(|m| (0..=m).map(|j| powersum::faulhaber_a_entry(m, j)).collect())
            .collect()),
        "tcoeff" => Ok(to_rat(
            (0..=n)
                .map(|k| (0..=k).map(|i| polyfam::t_coeff(i, k)).collect())
                .collect(),
        )),
        "ucoeff" => Ok(to_rat(
            (0..=n)
                .map(|k| (0..=k).map(|i| polyfam::u_coeff(i, k)).collect())
                .collect(),
        )),
        _ => {
            let tk: TriangleKind = kind.parse()?;
            Ok(to_rat(stirling::triangle(tk, rows).rows))
        }
    }
}

fn cmd_table(kind: &str, rows: usize, format: Format) -> CommandResult {
    let table = match table_rows(kind, rows) {
        Ok(t) => t,
        Err(e) => return CommandResult::from_error(&e),
    };
    let payload = match format {
        Format::Csv => table
            .iter()
            .map(|row| row.iter().map(format_rational).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => {
            let cell = |c: &Rational| {
                if c.is_integer() {
                    format_rational(c)
                } else {
                    format!("\"{}\"", format_rational(c))
                }
            };
            let body: Vec<String> = table
                .iter()
                .map(|row| format!("[{}]", row.iter().map(cell).collect::<Vec<_>>().join(",")))
                .collect();
            format!("[{}]", body.join(","))
        }
    };
    CommandResult::ok(payload)
}

/// Optional numeric bounds passed to `verify`.
#[derive(Debug, Clone, Default)]
pub struct Bounds {
    pub n_max: Option<i64>,
    pub m_max: Option<i64>,
    pub r_max: Option<i64>,
    pub k_max: Option<i64>,
    pub a_max: Option<i64>,
}

/// Names accepted by `verify`.
pub const SUITES: &[&str] = &[
    "lucas-links",
    "family-recurrences",
    "faulhaber",
    "inner-poly",
    "theorem1",
    "theorem5",
    "corollary",
    "lemma31",
    "theorem2",
    "theorem3",
    "theorem4",
    "lemma32",
    "reciprocal",
    "flt",
    "fermat",
    "triangle-inverse",
    "triangle-cross",
    "theorem6",
    "central-factorial",
    "power-expansion",
    "u-basis",
];

/// Run a named suite.
pub fn run_suite(name: &str, b: &Bounds) -> crate::Result<IdentityReport> {
    let n = |d: i64| b.n_max.unwrap_or(d);
    let m = |d: i64| b.m_max.unwrap_or(d);
    let r = |d: i64| b.r_max.unwrap_or(d);
    let k = |d: i64| b.k_max.unwrap_or(d);
    let a = |d: i64| b.a_max.unwrap_or(d);
    let nonneg = |v: i64, what: &str| -> crate::Result<u32> {
        u32::try_from(v).map_err(|_| Error::InvalidArgument(format!("{what} must be >= 0, got {v}")))
    };
    match name {
        "lucas-links" => Ok(polyfam::verify_lucas_links(n(12))),
        "family-recurrences" => basis::verify_family_recurrences(n(10)),
        "faulhaber" => powersum::faulhaber_suite(m(6), nonneg(r(4), "r_max")?, n(30)),
        "inner-poly" => powersum::inner_poly_suite(m(6), nonneg(r(4), "r_max")?),
        "theorem1" => powersum::theorem1_suite(m(4), nonneg(r(3), "r_max")?),
        "theorem5" => powersum::theorem5_suite(m(4)),
        "corollary" => powersum::corollary_suite(m(4), nonneg(r(3), "r_max")?),
        "lemma31" => {
            let pairs = [(1, 3), (2, 4), (3, 5), (1, 5), (2, 6), (-1, 3), (3, 1), (4, 10), (5, -3)]
                .iter()
                .map(|&(y, z)| fermat::PowerPair::new(y, z))
                .collect::<crate::Result<Vec<_>>>()?;
            fermat::lemma31_suite(m(8), &pairs)
        }
        "theorem2" => fermat::theorem2_suite(m(5), n(10)),
        "theorem3" => fermat::theorem3_suite(m(10), a(50)),
        "theorem4" => fermat::theorem4_suite(n(10), a(10)),
        "lemma32" => fermat::lemma32_suite(m(8)),
        "reciprocal" => fermat::reciprocal_identity_check(m(6)),
        "flt" => fermat::flt_search(a(30), m(4)).map(|(rep, _)| rep),
        "fermat" => fermat::fermat_suite(m(6), a(12)),
        "triangle-inverse" => {
            let kk = nonneg(k(10), "k_max")? as usize;
            let mut rep = IdentityReport::new("triangle-inverse");
            use TriangleKind::*;
            for (x, y) in [(LegendreStirling1, LegendreStirling2), (GenStirling1, CentralFactorial2), (Stirling1, Stirling2)] {
                rep.merge(stirling::triangle_inverse_check(x, y, kk)?);
            }
            Ok(rep)
        }
        "triangle-cross" => stirling::triangle_cross_suite(nonneg(k(10), "k_max")? as usize),
        "theorem6" => Ok(stirling::theorem6_check(nonneg(m(10), "m_max")? as usize)),
        "central-factorial" => stirling::central_factorial_suite(nonneg(m(8), "m_max")?),
        "power-expansion" => interp::power_expansion_check(a(8), nonneg(m(5), "m_max")?),
        "u-basis" => interp::u_basis_suite(k(8), m(10)),
        other => Err(Error::InvalidArgument(format!(
            "unknown suite {other:?}; known suites: {}",
            SUITES.join(", ")
        ))),
    }
}

fn cmd_verify(name: &str, b: &Bounds) -> CommandResult {
    let names: Vec<&str> = if name == "all" { SUITES.to_vec() } else { vec![name] };
    let mut reports = Vec::new();
    for s in names {
        match run_suite(s, b) {
            Ok(rep) => reports.push(rep),
            Err(e) => return CommandResult::from_error(&e),
        }
    }
    let passed = reports.iter().all(IdentityReport::passed);
    let summary: Vec<_> = reports
        .iter()
        .map(|rep| {
            json!({
                "suite": rep.suite,
                "passed": rep.passed(),
                "checked": rep.total_checked(),
                "failed": rep.total_failed(),
                "identities": rep.tallies,
                "first_failure": rep.first_failure,
            })
        })
        .collect();
    let payload = if summary.len() == 1 {
        serde_json::to_string_pretty(&summary[0])
    } else {
        serde_json::to_string_pretty(&summary)
    }
    .expect("json values serialize");
    CommandResult {
        exit_code: if passed { 0 } else { 1 },
        payload,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> CommandResult {
        run(std::iter::once("faulhaber").chain(args.iter().copied()))
    }

    #[test]
    fn table_csv_central_factorial() {
        let out = run_args(&["table", "CentralFactorial2", "--rows", "7"]);
        assert_eq!(out.exit_code, 0);
        let lines: Vec<_> = out.payload.lines().collect();
        assert_eq!(lines.len(), 8);
        assert_eq!(lines[7], "0,1,1365,13013,11440,2002,91,1");
    }

    #[test]
    fn table_legendre_row_four() {
        let out = run_args(&["table", "LegendreStirling2", "--rows", "4"]);
        assert_eq!(out.payload.lines().nth(4), Some("0,8,52,20,1"));
    }

    #[test]
    fn table_zero_rows_json() {
        for kind in ["Stirling1", "LegendreStirling1", "GenStirling1", "faulhaber-a", "t-coeff"] {
            let out = run_args(&["table", kind, "--rows", "0", "--format", "json"]);
            assert_eq!(out.payload, "[[1]]", "{kind}");
        }
    }

    #[test]
    fn table_negative_and_rational_cells() {
        let out = run_args(&["table", "Stirling1", "--rows", "3"]);
        assert_eq!(out.payload.lines().nth(3), Some("0,2,-3,1"));
        let out = run_args(&["table", "faulhaber-a", "--rows", "3", "--format", "json"]);
        assert!(out.payload.contains("\"-1/2\""), "{}", out.payload);
    }

    #[test]
    fn unknown_inputs_exit_two() {
        assert_eq!(run_args(&["table", "nosuch"]).exit_code, 2);
        assert_eq!(run_args(&["verify", "nosuch"]).exit_code, 2);
        assert_eq!(run_args(&["fermat-quotient", "6", "9"]).exit_code, 2);
        assert_eq!(run_args(&["powersum", "x", "1", "2"]).exit_code, 2);
        assert_eq!(run_args(&[]).exit_code, 2);
    }

    #[test]
    fn compute_commands() {
        assert_eq!(run_args(&["fermat-quotient", "6", "5"]).payload, "259");
        assert_eq!(run_args(&["powersum", "3", "1", "5"]).payload, "225");
        assert_eq!(run_args(&["principal-poly", "7", "5", "--eval", "2"]).payload, "16807");
        assert_eq!(run_args(&["principal-poly", "7", "6", "--eval", "3"]).payload, "117649");
        assert_eq!(run_args(&["principal-poly", "7", "6", "--eval", "0"]).exit_code, 2);
        assert_eq!(run_args(&["faulhaber", "1"]).payload, r#"["0","1/2","1/2"]"#);
    }

    #[test]
    fn verify_examples() {
        let out = run_args(&["verify", "theorem3", "--a-max", "50", "--m-max", "10"]);
        assert_eq!(out.exit_code, 0, "{}", out.payload);
        let out = run_args(&["verify", "triangle-inverse", "--k-max", "7"]);
        assert_eq!(out.exit_code, 0, "{}", out.payload);
        let v: serde_json::Value = serde_json::from_str(&out.payload).unwrap();
        assert_eq!(v["passed"], true);
    }

    #[test]
    fn deterministic_output() {
        let a = run_args(&["verify", "lemma32", "--m-max", "4"]);
        let b = run_args(&["verify", "lemma32", "--m-max", "4"]);
        assert_eq!(a, b);
    }

    #[test]
    fn violation_maps_to_exit_one() {
        let err = Error::IdentityViolation(Box::new(crate::report::Counterexample {
            identity: "x".into(),
            params: "n=1".into(),
            lhs: "1".into(),
            rhs: "2".into(),
        }));
        let out = CommandResult::from_error(&err);
        assert_eq!(out.exit_code, 1);
        assert!(out.payload.contains("n=1"));
    }
}
