use std::fmt::Write;
use std::process::ExitCode;

use clap::{ArgGroup, Args};
use serde::{Deserialize, Serialize};

use dirac_osc::lie::GeneratorLabel;
use dirac_osc::phase_space::{
    eta_from_temperature, gaussian_entropy, gaussian_purity, generator_to_transform,
    temperature_from_eta, two_mode_squeeze, GaussianState, PhaseTransform,
};

use crate::output::{emit, num, Format};
use crate::{CliError, OutputArgs};

const CANONICAL_TOL: f64 = 1e-12;

#[derive(Args)]
#[command(group(ArgGroup::new("transform").required(true).args(["generator", "couple"])))]
#[command(group(ArgGroup::new("parameter").required(true).args(["eta", "temperature"])))]
pub struct SimulateArgs {
    /// Exponentiate one generator, `exp(-2iθG)` with θ = η.
    #[arg(long)]
    generator: Option<GeneratorLabel>,
    /// Two-mode squeeze of the coupled oscillators.
    #[arg(long)]
    couple: bool,
    /// Comma-separated squeeze parameters.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    eta: Vec<f64>,
    /// Comma-separated temperatures, mapped to η by cosh 2η = 1/tanh(1/2T).
    #[arg(long, value_delimiter = ',')]
    temperature: Vec<f64>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimRow {
    pub eta: f64,
    pub temperature: f64,
    pub purity_1: f64,
    pub purity_2: f64,
    /// `None` for a sub-vacuum marginal.
    pub entropy_1: Option<f64>,
    pub entropy_2: Option<f64>,
    pub area_1: f64,
    pub area_2: f64,
    pub area_product: f64,
    pub canonical: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimReport {
    pub transform: String,
    pub rows: Vec<SimRow>,
}

fn entropy(state: &GaussianState, keep: usize) -> Result<Option<f64>, CliError> {
    match gaussian_entropy(&state.reduce(keep)?) {
        Ok(s) => Ok(Some(s)),
        Err(dirac_osc::Error::SubVacuum { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn row(m: &PhaseTransform, eta: f64, temperature: f64) -> Result<SimRow, CliError> {
    let state = GaussianState::vacuum().evolve(m);
    let (r1, r2) = (state.reduce(1)?, state.reduce(2)?);
    let (area_1, area_2) = state.areas();
    Ok(SimRow {
        eta,
        temperature,
        purity_1: gaussian_purity(&r1)?,
        purity_2: gaussian_purity(&r2)?,
        entropy_1: entropy(&state, 1)?,
        entropy_2: entropy(&state, 2)?,
        area_1,
        area_2,
        area_product: area_1 * area_2,
        canonical: m.is_canonical(CANONICAL_TOL),
    })
}

pub fn build_report(args: &SimulateArgs) -> Result<SimReport, CliError> {
    let points: Vec<(f64, f64)> = if args.temperature.is_empty() {
        args.eta
            .iter()
            .map(|&eta| {
                let t = if eta == 0.0 {
                    0.0
                } else {
                    temperature_from_eta(eta.abs())?
                };
                Ok((eta, t))
            })
            .collect::<Result<_, dirac_osc::Error>>()?
    } else {
        args.temperature
            .iter()
            .map(|&t| Ok((eta_from_temperature(t)?, t)))
            .collect::<Result<_, dirac_osc::Error>>()?
    };
    let transform = match args.generator {
        Some(label) => label.to_string(),
        None => "two-mode squeeze".to_string(),
    };
    let rows = points
        .into_iter()
        .map(|(eta, t)| {
            let m = match args.generator {
                Some(label) => generator_to_transform(label, eta)?,
                None => two_mode_squeeze(eta),
            };
            row(&m, eta, t)
        })
        .collect::<Result<_, CliError>>()?;
    Ok(SimReport { transform, rows })
}

fn opt(x: Option<f64>, render: impl Fn(f64) -> String, missing: &str) -> String {
    x.map_or_else(|| missing.to_string(), render)
}

fn render_text(report: &SimReport) -> String {
    let mut out = format!("transform: {}\n", report.transform);
    let _ = writeln!(
        out,
        "{:>8} {:>10} {:>10} {:>10} {:>11} {:>11} {:>10} {:>10} {:>10} {:>9}",
        "eta", "T", "purity1", "purity2", "entropy1", "entropy2", "A1", "A2", "A1*A2", "canonical"
    );
    for r in &report.rows {
        let f = |x: f64| format!("{x:.6}");
        let _ = writeln!(
            out,
            "{:>8.4} {:>10.6} {:>10.6} {:>10.6} {:>11} {:>11} {:>10.6} {:>10.6} {:>10.6} {:>9}",
            r.eta,
            r.temperature,
            r.purity_1,
            r.purity_2,
            opt(r.entropy_1, f, "sub-vacuum"),
            opt(r.entropy_2, f, "sub-vacuum"),
            r.area_1,
            r.area_2,
            r.area_product,
            r.canonical
        );
    }
    out
}

fn render_csv(report: &SimReport) -> String {
    let mut out = String::from(
        "eta,T,purity_1,purity_2,entropy_1,entropy_2,area_1,area_2,area_product,canonical\n",
    );
    for r in &report.rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            num(r.eta),
            num(r.temperature),
            num(r.purity_1),
            num(r.purity_2),
            opt(r.entropy_1, num, ""),
            opt(r.entropy_2, num, ""),
            num(r.area_1),
            num(r.area_2),
            num(r.area_product),
            r.canonical
        );
    }
    out
}

pub fn run(args: &SimulateArgs) -> Result<ExitCode, CliError> {
    let report = build_report(args)?;
    let text = match args.output.format {
        Format::Text => render_text(&report),
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
        Format::Csv => render_csv(&report),
    };
    emit(&text, args.output.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}
