use std::fmt::Write;
use std::process::ExitCode;

use clap::{Args, ValueEnum};
use serde::{Deserialize, Serialize};

use dirac_osc::fock::{literal_fock_residuals, verify_fock_commutators};
use dirac_osc::lie::{
    alge11, build_generator_set, check_isomorphism, clifford_residual,
    gamma5_anticommutation_residual, o33gen, sl4r_printed, table1_correspondence, verify_algebra,
    Family, GeneratorLabel, MatchStatus, StructureTable, SP2_TRIPLES,
};
use dirac_osc::linalg::{commutator, max_abs_diff, max_real_part, trace, I};
use dirac_osc::report::VerificationReport;

use crate::output::{emit, Format};
use crate::{CliError, OutputArgs};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Sp4,
    Sl4r,
    O33,
    O32,
    Sp2,
    Fock,
    Table1,
    Iso,
    Dirac,
    All,
}

impl Suite {
    const EACH: [Suite; 9] = [
        Suite::Sp4,
        Suite::O32,
        Suite::Sl4r,
        Suite::O33,
        Suite::Sp2,
        Suite::Fock,
        Suite::Table1,
        Suite::Iso,
        Suite::Dirac,
    ];

    fn name(self) -> &'static str {
        match self {
            Suite::Sp4 => "sp4",
            Suite::Sl4r => "sl4r",
            Suite::O33 => "o33",
            Suite::O32 => "o32",
            Suite::Sp2 => "sp2",
            Suite::Fock => "fock",
            Suite::Table1 => "table1",
            Suite::Iso => "iso",
            Suite::Dirac => "dirac",
            Suite::All => "all",
        }
    }
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long, default_value_t = 1e-12)]
    tolerance: f64,
    /// Fock truncation (occupations below nmax per mode).
    #[arg(long, default_value_t = 8)]
    nmax: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Warn,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub name: String,
    pub residual: f64,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub results: Vec<ResultRow>,
}

fn check(name: impl Into<String>, residual: f64, tolerance: f64) -> ResultRow {
    ResultRow {
        name: name.into(),
        residual,
        status: if residual <= tolerance {
            Status::Pass
        } else {
            Status::Fail
        },
    }
}

fn from_report(name: &str, report: &VerificationReport) -> ResultRow {
    let mut row = check(name, report.worst_residual(), report.tolerance);
    if let Some(w) = report.worst.filter(|_| row.status == Status::Fail) {
        row.name = format!("{name} (worst [{}, {}])", w.a, w.b);
    }
    row
}

fn warn(name: impl Into<String>, residual: f64) -> ResultRow {
    ResultRow {
        name: name.into(),
        residual,
        status: Status::Warn,
    }
}

fn algebra_rows(
    family: Family,
    table: &StructureTable,
    label: &str,
    tol: f64,
) -> Result<Vec<ResultRow>, CliError> {
    let report = verify_algebra(&build_generator_set(family), table, tol)?;
    Ok(vec![from_report(&format!("{family} {label}"), &report)])
}

fn sl4r_rows(tol: f64) -> Result<Vec<ResultRow>, CliError> {
    let mut rows = algebra_rows(Family::Sl4r, &o33gen(), "fifteen-generator table", tol)?;
    let printed = verify_algebra(&sl4r_printed(), &o33gen(), tol)?;
    rows.push(warn(
        format!(
            "S2 with its printed sign breaks {} brackets; family uses -S2",
            printed.failures().count()
        ),
        printed.worst_residual(),
    ));
    Ok(rows)
}

fn o33_rows(tol: f64) -> Result<Vec<ResultRow>, CliError> {
    let mut rows = algebra_rows(Family::O33, &o33gen(), "fifteen-generator table", tol)?;
    let full = o33gen();
    let mut gg = StructureTable::new();
    for i in 1..=3 {
        for j in (i + 1)..=3 {
            let gi = GeneratorLabel::triple('G', i).expect("axis in range");
            let gj = GeneratorLabel::triple('G', j).expect("axis in range");
            gg.insert(gi, gj, full.entry(gi, gj).unwrap_or_default());
        }
    }
    let worst = verify_algebra(&build_generator_set(Family::O33), &gg, tol)?.worst_residual();
    rows.push(warn(
        "duplicated bracket slot read as [G_i, G_j] = -i eps_ijk L_k",
        worst,
    ));
    Ok(rows)
}

fn sp2_rows(tol: f64) -> Result<Vec<ResultRow>, CliError> {
    let sp4 = build_generator_set(Family::Sp4);
    let mut rows = Vec::new();
    for triple in SP2_TRIPLES {
        let sub = sp4.subset(&triple.labels())?;
        let report = verify_algebra(&sub, &triple.expected_table(), tol)?;
        rows.push(from_report(
            &format!("Sp(2) triple {}", triple.describe()),
            &report,
        ));
    }
    let bracket = commutator(
        sp4.matrix(GeneratorLabel::S3)?,
        sp4.matrix(GeneratorLabel::Q2)?,
    )?;
    let printed = sp4.matrix(GeneratorLabel::Q3)? * (-I);
    rows.push(warn(
        "[S3, Q2] = -iQ3 as printed; holds as -iK2",
        max_abs_diff(&bracket, &printed),
    ));
    Ok(rows)
}

fn fock_rows(nmax: usize, tol: f64) -> Result<Vec<ResultRow>, CliError> {
    let report = verify_fock_commutators(nmax, tol)?;
    let literal = literal_fock_residuals(nmax, tol)?;
    Ok(vec![
        from_report(
            &format!("fock(nmax={nmax}) Sp(4) table, safe subspace"),
            &report,
        ),
        warn(
            format!(
                "literal S3 = (a1^+ a1 + a2 a2^+)/2 flips {} brackets; aligned set uses -S3",
                literal.failures().count()
            ),
            literal.worst_residual(),
        ),
    ])
}

fn table1_rows(tol: f64) -> Vec<ResultRow> {
    let report = table1_correspondence(tol);
    report
        .rows
        .iter()
        .map(|row| {
            let documented = matches!(
                (row.label, row.vs_printed, row.vs_family),
                (
                    GeneratorLabel::L1,
                    MatchStatus::FactorMismatch { .. },
                    MatchStatus::FactorMismatch { .. }
                ) | (
                    GeneratorLabel::S2,
                    MatchStatus::Exact,
                    MatchStatus::SignFlip
                )
            );
            let mut name = format!("{} = {}: {}", row.label, row.formula, row.vs_printed.name());
            if let Some(r) = row.vs_printed.ratio() {
                let _ = write!(name, " (ratio {}{:+}i)", r.re, r.im);
            }
            if row.vs_family != row.vs_printed {
                let _ = write!(
                    name,
                    "; {} against the algebra family",
                    row.vs_family.name()
                );
            }
            let exact = row.vs_printed == MatchStatus::Exact && row.vs_family == MatchStatus::Exact;
            let status = if exact {
                Status::Pass
            } else if documented {
                Status::Warn
            } else {
                Status::Fail
            };
            ResultRow {
                name,
                residual: row.printed_residual.max(row.family_residual),
                status,
            }
        })
        .collect()
}

fn iso_rows(tol: f64) -> Result<Vec<ResultRow>, CliError> {
    let pairs = [(Family::Sl4r, Family::O33), (Family::Sp4, Family::O32)];
    pairs
        .iter()
        .map(|&(a, b)| {
            let report = check_isomorphism(&build_generator_set(a), &build_generator_set(b), tol)?;
            Ok(from_report(&format!("{a} ~ {b} structure tables"), &report))
        })
        .collect()
}

fn dirac_rows(tol: f64) -> Vec<ResultRow> {
    let set = build_generator_set(Family::DiracGamma);
    let traces = set.iter().map(|(_, m)| trace(m).norm()).fold(0.0, f64::max);
    let real = set
        .iter()
        .map(|(_, m)| max_real_part(m))
        .fold(0.0, f64::max);
    vec![
        check(
            "Clifford relations {g_mu, g_nu} = 2 g_mu_nu",
            clifford_residual(),
            tol,
        ),
        check(
            "gamma5 anticommutes with g_mu, gamma5^2 = 1",
            gamma5_anticommutation_residual(),
            tol,
        ),
        check("fifteen bilinears traceless", traces, tol),
        check("fifteen bilinears purely imaginary", real, tol),
    ]
}

fn suite_rows(suite: Suite, args: &VerifyArgs) -> Result<Vec<ResultRow>, CliError> {
    let tol = args.tolerance;
    Ok(match suite {
        Suite::Sp4 => algebra_rows(Family::Sp4, &alge11(), "ten-generator table", tol)?,
        Suite::O32 => algebra_rows(Family::O32, &alge11(), "ten-generator table", tol)?,
        Suite::Sl4r => sl4r_rows(tol)?,
        Suite::O33 => o33_rows(tol)?,
        Suite::Sp2 => sp2_rows(tol)?,
        Suite::Fock => fock_rows(args.nmax, tol)?,
        Suite::Table1 => table1_rows(tol),
        Suite::Iso => iso_rows(tol)?,
        Suite::Dirac => dirac_rows(tol),
        Suite::All => {
            let mut rows = Vec::new();
            for s in Suite::EACH {
                for mut row in suite_rows(s, args)? {
                    row.name = format!("{}: {}", s.name(), row.name);
                    rows.push(row);
                }
            }
            rows
        }
    })
}

pub fn build_report(args: &VerifyArgs) -> Result<SuiteReport, CliError> {
    if !(args.tolerance > 0.0 && args.tolerance.is_finite()) {
        return Err(CliError::Usage(format!(
            "tolerance must be positive, got {}",
            args.tolerance
        )));
    }
    if args.nmax < 6 {
        return Err(CliError::Usage(format!(
            "nmax must be at least 6, got {}",
            args.nmax
        )));
    }
    Ok(SuiteReport {
        suite: args.suite.name().to_string(),
        results: suite_rows(args.suite, args)?,
    })
}

fn render_text(report: &SuiteReport, tolerance: f64) -> String {
    let mut out = format!("suite {} (tolerance {tolerance:e})\n", report.suite);
    for row in &report.results {
        let status = match row.status {
            Status::Pass => "PASS",
            Status::Warn => "WARN",
            Status::Fail => "FAIL",
        };
        let _ = writeln!(out, "{status}  {:<10.3e}  {}", row.residual, row.name);
    }
    let count = |s| report.results.iter().filter(|r| r.status == s).count();
    let _ = writeln!(
        out,
        "{} pass, {} warn, {} fail",
        count(Status::Pass),
        count(Status::Warn),
        count(Status::Fail)
    );
    out
}

pub fn run(args: &VerifyArgs) -> Result<ExitCode, CliError> {
    let report = build_report(args)?;
    let text = match args.output.format {
        Format::Text => render_text(&report, args.tolerance),
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
        Format::Csv => {
            let mut s = String::from("name,residual,status\n");
            for r in &report.results {
                let status = serde_json::to_value(r.status).expect("status serializes");
                let _ = writeln!(
                    s,
                    "\"{}\",{},{}",
                    r.name.replace('"', "\"\""),
                    crate::output::num(r.residual),
                    status.as_str().unwrap_or("")
                );
            }
            s
        }
    };
    emit(&text, args.output.out.as_deref())?;
    let failed = report.results.iter().any(|r| r.status == Status::Fail);
    Ok(if failed {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    })
}
