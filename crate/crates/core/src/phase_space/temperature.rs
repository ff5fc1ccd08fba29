use serde::Serialize;

use crate::{Error, Result};

/// `η(T) = arccosh(1 / tanh(1/2T)) / 2`.
pub fn eta_from_temperature(t: f64) -> Result<f64> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::invalid(
            "temperature",
            t,
            "must be positive and finite",
        ));
    }
    Ok((1.0 / (0.5 / t).tanh()).acosh() / 2.0)
}

/// `T(η) = 1 / (-2 ln tanh η)`.
pub fn temperature_from_eta(eta: f64) -> Result<f64> {
    if !(eta > 0.0 && eta.is_finite()) {
        return Err(Error::invalid("eta", eta, "must be positive and finite"));
    }
    Ok(1.0 / (-2.0 * eta.tanh().ln()))
}

/// A squeeze parameter and the temperature that produces the same reduced
/// state: `cosh 2η · tanh(1/2T) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TemperatureMap {
    pub eta: f64,
    pub temperature: f64,
}

impl TemperatureMap {
    pub fn from_eta(eta: f64) -> Result<Self> {
        Ok(TemperatureMap {
            eta,
            temperature: temperature_from_eta(eta)?,
        })
    }

    pub fn from_temperature(temperature: f64) -> Result<Self> {
        Ok(TemperatureMap {
            eta: eta_from_temperature(temperature)?,
            temperature,
        })
    }

    /// `|cosh 2η · tanh(1/2T) - 1|`.
    pub fn residual(&self) -> f64 {
        ((2.0 * self.eta).cosh() * (0.5 / self.temperature).tanh() - 1.0).abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{entropy_closed_form, thermal_entropy};

    #[test]
    fn reference_values() {
        assert!((temperature_from_eta(1.0).unwrap() - 1.835_930_466_255_475_4).abs() < 1e-13);
        let t = 2.0;
        let back = temperature_from_eta(eta_from_temperature(t).unwrap()).unwrap();
        assert!((back - t).abs() < 1e-12);
        assert!(eta_from_temperature(0.0).is_err());
        assert!(temperature_from_eta(-0.1).is_err());
    }

    #[test]
    fn map_satisfies_relation() {
        let m = TemperatureMap::from_eta(0.8).unwrap();
        assert!(m.residual() < 1e-14);
        let m = TemperatureMap::from_temperature(3.0).unwrap();
        assert!(m.residual() < 1e-14);
        // e^{-1/T} = tanh²η
        let m = TemperatureMap::from_eta(1.0).unwrap();
        assert!(((-1.0 / m.temperature).exp() - 1f64.tanh().powi(2)).abs() < 1e-15);
    }

    #[test]
    fn entropies_agree_through_map() {
        for t in [0.5, 1.0, 2.0, 5.0] {
            let eta = eta_from_temperature(t).unwrap();
            let diff = entropy_closed_form(eta) - thermal_entropy(t).unwrap();
            assert!(diff.abs() < 1e-10, "{t}: {diff}");
        }
    }
}
