//! Single oscillator in equilibrium at temperature `T` (Boltzmann units,
//! `ħω = 1`).

use std::f64::consts::PI;

use serde::Serialize;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ThermalState {
    /// Zero only for the pure vacuum built by [`ThermalState::vacuum`].
    temperature: f64,
}

impl ThermalState {
    pub fn new(temperature: f64) -> Result<Self> {
        check_temperature(temperature)?;
        Ok(ThermalState { temperature })
    }

    /// The `T -> 0` limit: all weight on the ground state.
    pub fn vacuum() -> Self {
        ThermalState { temperature: 0.0 }
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    /// `(1 - e^{-1/T}) e^{-k/T}`.
    pub fn weight(&self, k: usize) -> f64 {
        if self.temperature == 0.0 {
            return if k == 0 { 1.0 } else { 0.0 };
        }
        let beta = 1.0 / self.temperature;
        -(-beta).exp_m1() * (-(k as f64) * beta).exp()
    }

    pub fn weights(&self, kmax: usize) -> Vec<f64> {
        (0..=kmax).map(|k| self.weight(k)).collect()
    }

    /// `-Σ_{k<=kmax} λ_k ln λ_k`.
    pub fn entropy_series(&self, kmax: usize) -> f64 {
        0.0 - self
            .weights(kmax)
            .iter()
            .filter(|&&w| w > 0.0)
            .map(|w| w * w.ln())
            .sum::<f64>()
    }

    pub fn entropy(&self) -> f64 {
        if self.temperature == 0.0 {
            0.0
        } else {
            thermal_entropy(self.temperature).expect("positive temperature")
        }
    }

    /// Radius of the `1/e` contour of the Wigner function.
    pub fn radius(&self) -> f64 {
        if self.temperature == 0.0 {
            1.0
        } else {
            wigner_radius(self.temperature).expect("positive temperature")
        }
    }

    /// `W_T(x, p) = [tanh(1/2T)/π] exp[-(x² + p²) tanh(1/2T)]`.
    pub fn wigner(&self, x: f64, p: f64) -> f64 {
        let t = if self.temperature == 0.0 {
            1.0
        } else {
            (0.5 / self.temperature).tanh()
        };
        t / PI * (-(x * x + p * p) * t).exp()
    }
}

fn check_temperature(t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid(
            "temperature",
            t,
            "must be positive and finite",
        ))
    }
}

/// `S(T) = (1/T)/(e^{1/T} - 1) - ln(1 - e^{-1/T})`.
pub fn thermal_entropy(t: f64) -> Result<f64> {
    check_temperature(t)?;
    let beta = 1.0 / t;
    Ok(beta / beta.exp_m1() - (-(-beta).exp_m1()).ln())
}

/// `1 / sqrt(tanh(1/2T))`.
pub fn wigner_radius(t: f64) -> Result<f64> {
    check_temperature(t)?;
    Ok(1.0 / (0.5 / t).tanh().sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::SeriesState;
    use crate::phase_space::temperature_from_eta;

    #[test]
    fn weights_sum_to_one() {
        let s = ThermalState::new(1.3).unwrap();
        let total: f64 = s.weights(400).iter().sum();
        assert!((total - 1.0).abs() < 1e-12);
        assert!(ThermalState::new(0.0).is_err());
        assert!(ThermalState::new(-1.0).is_err());
    }

    #[test]
    fn vacuum_limit() {
        let v = ThermalState::vacuum();
        assert_eq!(v.weights(3), vec![1.0, 0.0, 0.0, 0.0]);
        assert_eq!(v.radius(), 1.0);
        assert_eq!(v.entropy(), 0.0);
        assert!((wigner_radius(1e-3).unwrap() - 1.0).abs() < 1e-12);
        assert!((wigner_radius(1.0).unwrap() - 1.471_038_209_476_101).abs() < 1e-13);
    }

    #[test]
    fn entropy_series_matches_closed_form() {
        for t in [0.5, 1.0, 1.8362, 5.0] {
            let s = ThermalState::new(t).unwrap();
            assert!((s.entropy_series(2000) - s.entropy()).abs() < 1e-10, "{t}");
        }
    }

    #[test]
    fn bridge_to_series_weights() {
        for eta in [0.3, 0.8, 1.0, 1.5] {
            let t = temperature_from_eta(eta).unwrap();
            let thermal = ThermalState::new(t).unwrap().weights(100);
            let series = SeriesState::new(eta, 100).unwrap().weights;
            let worst = thermal
                .iter()
                .zip(&series)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            assert!(worst <= 1e-12, "{eta}: {worst}");
        }
    }

    #[test]
    fn wigner_normalized() {
        let s = ThermalState::new(2.0).unwrap();
        let gh = crate::fock::quadrature();
        let a = (0.25f64).tanh();
        let v = gh.integrate(a, 0.0, |x| gh.integrate(a, 0.0, |p| s.wigner(x, p)));
        assert!((v - 1.0).abs() < 1e-12);
    }
}
