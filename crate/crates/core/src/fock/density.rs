//! The two-mode squeezed ground state, its reduced density matrix and the
//! series over oscillator eigenstates.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::sync::OnceLock;

use serde::Serialize;

use super::hermite::{phi_table, GaussHermite};
use crate::{Error, Result};

/// Nodes per axis for every oscillator integral.
pub const QUADRATURE_NODES: usize = 128;

/// Tail bound above which series results carry a warning.
pub const TAIL_WARNING: f64 = 1e-12;

pub fn quadrature() -> &'static GaussHermite {
    static RULE: OnceLock<GaussHermite> = OnceLock::new();
    RULE.get_or_init(|| GaussHermite::new(QUADRATURE_NODES))
}

/// `ψ_η(x1, x2) = π^{-1/2} exp{-[e^{2η}(x1 - x2)² + e^{-2η}(x1 + x2)²]/4}`.
pub fn psi_eta(eta: f64, x1: f64, x2: f64) -> f64 {
    let d = x1 - x2;
    let s = x1 + x2;
    (-0.25 * ((2.0 * eta).exp() * d * d + (-2.0 * eta).exp() * s * s)).exp() / PI.sqrt()
}

fn from_uv(u: f64, v: f64) -> (f64, f64) {
    ((u + v) * FRAC_1_SQRT_2, (u - v) * FRAC_1_SQRT_2)
}

/// `∫∫ ψ_η²` by quadrature in the rotated coordinates `u, v`.
pub fn psi_norm(eta: f64) -> f64 {
    let (a_u, a_v) = ((-2.0 * eta).exp(), (2.0 * eta).exp());
    quadrature().integrate_2d(a_u, a_v, |u, v| {
        let (x1, x2) = from_uv(u, v);
        psi_eta(eta, x1, x2).powi(2)
    })
}

/// `<φ_k φ_k | ψ_η>` by quadrature; equals `tanh^k η / cosh η`.
pub fn expansion_overlap(eta: f64, k: usize) -> Result<f64> {
    phi_table(k, 0.0)?;
    let a_u = 0.5 * (1.0 + (-2.0 * eta).exp());
    let a_v = 0.5 * (1.0 + (2.0 * eta).exp());
    Ok(quadrature().integrate_2d(a_u, a_v, |u, v| {
        let (x1, x2) = from_uv(u, v);
        let p1 = phi_table(k, x1).expect("k checked")[k];
        let p2 = phi_table(k, x2).expect("k checked")[k];
        p1 * p2 * psi_eta(eta, x1, x2)
    }))
}

pub fn expansion_coefficient(eta: f64, k: usize) -> f64 {
    eta.tanh().powi(k as i32) / eta.cosh()
}

/// Closed-form reduced density matrix after tracing out the second
/// oscillator.
pub fn rho_reduced(eta: f64, x: f64, xp: f64) -> f64 {
    let ch = (2.0 * eta).cosh();
    let s = x + xp;
    let d = x - xp;
    (1.0 / (PI * ch)).sqrt() * (-(s * s + d * d * ch * ch) / (4.0 * ch)).exp()
}

/// `∫ ψ_η(x, y) ψ_η(x', y) dy` by quadrature.
pub fn rho_partial_trace(eta: f64, x: f64, xp: f64) -> f64 {
    let ch = (2.0 * eta).cosh();
    let center = (x + xp) * (2.0 * eta).sinh() / (2.0 * ch);
    quadrature().integrate(ch, center, |y| psi_eta(eta, x, y) * psi_eta(eta, xp, y))
}

/// `Σ_{k<=kmax} w_k φ_k(x) φ_k(x')`.
pub fn rho_series(eta: f64, kmax: usize, x: f64, xp: f64) -> Result<f64> {
    let series = SeriesState::new(eta, kmax)?;
    let px = phi_table(kmax, x)?;
    let pxp = phi_table(kmax, xp)?;
    Ok(series
        .weights
        .iter()
        .zip(px.iter().zip(&pxp))
        .map(|(w, (a, b))| w * a * b)
        .sum())
}

/// `∫∫ ρ(x, x')²` by quadrature on the closed form.
pub fn purity_quadrature(eta: f64) -> f64 {
    let ch = (2.0 * eta).cosh();
    quadrature().integrate_2d(1.0 / ch, ch, |u, v| {
        let (x, xp) = from_uv(u, v);
        rho_reduced(eta, x, xp).powi(2)
    })
}

/// `1 / cosh 2η`.
pub fn purity_closed_form(eta: f64) -> f64 {
    1.0 / (2.0 * eta).cosh()
}

/// `cosh²η ln cosh²η - sinh²η ln sinh²η`.
pub fn entropy_closed_form(eta: f64) -> f64 {
    let c2 = eta.cosh().powi(2);
    let s2 = eta.sinh().powi(2);
    let s_term = if s2 > 0.0 { s2 * s2.ln() } else { 0.0 };
    c2 * c2.ln() - s_term
}

/// Eigenvalue ladder `w_k = tanh^{2k}η / cosh²η` of the reduced density
/// matrix, truncated at `kmax`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesState {
    pub eta: f64,
    pub kmax: usize,
    pub weights: Vec<f64>,
}

impl SeriesState {
    /// Negative `η` is folded to `|η|`.
    pub fn new(eta: f64, kmax: usize) -> Result<Self> {
        if !eta.is_finite() {
            return Err(Error::invalid("eta", eta, "must be finite"));
        }
        let eta = eta.abs();
        let ratio = eta.tanh().powi(2);
        let first = 1.0 / eta.cosh().powi(2);
        let mut weights = Vec::with_capacity(kmax + 1);
        let mut w = first;
        for _ in 0..=kmax {
            weights.push(w);
            w *= ratio;
        }
        Ok(SeriesState { eta, kmax, weights })
    }

    /// Upper bound on the omitted weight `Σ_{k>kmax} w_k`.
    pub fn tail_bound(&self) -> f64 {
        let t = self.eta.tanh().powi(2);
        if t == 0.0 {
            0.0
        } else {
            t.powi(self.kmax as i32 + 1) / (1.0 - t)
        }
    }

    pub fn tail_warning(&self) -> bool {
        self.tail_bound() > TAIL_WARNING
    }

    pub fn trace(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn purity(&self) -> f64 {
        self.weights.iter().map(|w| w * w).sum()
    }

    pub fn entropy(&self) -> f64 {
        0.0 - self
            .weights
            .iter()
            .filter(|&&w| w > 0.0)
            .map(|w| w * w.ln())
            .sum::<f64>()
    }

    /// Smallest `kmax` whose tail bound is at most `bound`.
    pub fn kmax_for_tail(eta: f64, bound: f64) -> usize {
        let t = eta.abs().tanh().powi(2);
        if t == 0.0 {
            return 0;
        }
        let needed = (bound * (1.0 - t)).ln() / t.ln() - 1.0;
        needed.ceil().max(0.0) as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Moments {
    pub trace: f64,
    pub purity: f64,
    pub entropy: f64,
    pub tail_bound: f64,
    pub tail_warning: bool,
}

/// Trace, purity and entropy of the truncated series.
pub fn moments(eta: f64, kmax: usize) -> Result<Moments> {
    let s = SeriesState::new(eta, kmax)?;
    Ok(Moments {
        trace: s.trace(),
        purity: s.purity(),
        entropy: s.entropy(),
        tail_bound: s.tail_bound(),
        tail_warning: s.tail_warning(),
    })
}
