use std::fmt::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Args;

use dirac_osc::fock::{
    entropy_closed_form, moments, purity_closed_form, thermal_entropy, wigner_radius, SeriesState,
};
use dirac_osc::phase_space::{
    gaussian_entropy, gaussian_purity, temperature_from_eta, two_mode_squeeze, GaussianState,
};

use crate::output::{emit, num};
use crate::CliError;

/// Default series length, raised where the tail bound at the top of the
/// grid would exceed this.
const DEFAULT_KMAX: usize = 200;
const TAIL_TARGET: f64 = 1e-15;

#[derive(Args)]
pub struct TableArgs {
    /// Grid of squeeze parameters as LO:HI:STEP.
    #[arg(long)]
    eta_grid: String,
    /// Series truncation; defaults to 200 or whatever keeps the tail below 1e-15.
    #[arg(long)]
    kmax: Option<usize>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

pub fn parse_grid(grid: &str) -> Result<Vec<f64>, CliError> {
    let bad = || CliError::Usage(format!("eta grid must be LO:HI:STEP, got `{grid}`"));
    let parts: Vec<f64> = grid
        .split(':')
        .map(|p| p.trim().parse::<f64>().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    let [lo, hi, step] = parts[..] else {
        return Err(bad());
    };
    if !(lo.is_finite() && hi.is_finite() && step.is_finite()) || lo < 0.0 {
        return Err(CliError::Usage(format!(
            "eta grid `{grid}` must be finite and non-negative"
        )));
    }
    if step <= 0.0 || hi < lo {
        return Err(CliError::Usage(format!("eta grid `{grid}` is empty")));
    }
    let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
    Ok((0..count).map(|i| lo + i as f64 * step).collect())
}

fn max_spread(values: &[f64]) -> f64 {
    let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    hi - lo
}

pub fn render(grid: &[f64], kmax: usize) -> Result<String, CliError> {
    let mut out =
        String::from("eta,T,purity,entropy_series,entropy_gaussian,radius,max_discrepancy\n");
    for &eta in grid {
        let m = moments(eta, kmax)?;
        let marginal = GaussianState::vacuum()
            .evolve(&two_mode_squeeze(eta))
            .reduce(1)?;
        let entropy_gaussian = gaussian_entropy(&marginal)?;
        let purity_gaussian = gaussian_purity(&marginal)?;
        let (t, radius, mut entropies) = if eta == 0.0 {
            (
                0.0,
                1.0,
                vec![m.entropy, entropy_gaussian, entropy_closed_form(eta)],
            )
        } else {
            let t = temperature_from_eta(eta)?;
            let e = vec![
                m.entropy,
                entropy_gaussian,
                entropy_closed_form(eta),
                thermal_entropy(t)?,
            ];
            (t, wigner_radius(t)?, e)
        };
        let purity_spread = max_spread(&[m.purity, purity_gaussian, purity_closed_form(eta)]);
        let radius_spread = (radius - (2.0 * eta).cosh().sqrt()).abs();
        entropies.dedup();
        let discrepancy = max_spread(&entropies).max(purity_spread).max(radius_spread);
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            num(eta),
            num(t),
            num(m.purity),
            num(m.entropy),
            num(entropy_gaussian),
            num(radius),
            num(discrepancy)
        );
    }
    Ok(out)
}

pub fn default_kmax(grid: &[f64]) -> usize {
    let top = grid.iter().copied().fold(0.0, f64::max);
    DEFAULT_KMAX.max(SeriesState::kmax_for_tail(top, TAIL_TARGET))
}

pub fn run(args: &TableArgs) -> Result<ExitCode, CliError> {
    let grid = parse_grid(&args.eta_grid)?;
    let kmax = args.kmax.unwrap_or_else(|| default_kmax(&grid));
    let text = render(&grid, kmax)?;
    emit(&text, args.out.as_deref())?;
    Ok(ExitCode::SUCCESS)
}
