//! Normalized oscillator eigenfunctions and Gauss-Hermite quadrature.

use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};

use crate::{Error, Result};

/// Highest eigenfunction index accepted by [`phi`] and [`phi_table`].
pub const MAX_K: usize = 200;

/// `φ0 .. φ_kmax` at `x` by the normalized three-term recurrence
/// `φ_{k+1} = sqrt(2/(k+1)) x φ_k - sqrt(k/(k+1)) φ_{k-1}`.
pub fn phi_table(kmax: usize, x: f64) -> Result<Vec<f64>> {
    if kmax > MAX_K {
        return Err(Error::invalid(
            "k",
            kmax as f64,
            "exceeds the recurrence cap of 200",
        ));
    }
    Ok(recurrence(kmax, x))
}

fn recurrence(kmax: usize, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(kmax + 1);
    out.push(PI.powf(-0.25) * (-0.5 * x * x).exp());
    if kmax >= 1 {
        out.push(2f64.sqrt() * x * out[0]);
    }
    for k in 1..kmax {
        let kf = k as f64;
        let next = (2.0 / (kf + 1.0)).sqrt() * x * out[k] - (kf / (kf + 1.0)).sqrt() * out[k - 1];
        out.push(next);
    }
    out
}

/// `φ_k(x)`, normalized with ground state `π^{-1/4} e^{-x²/2}`.
pub fn phi(k: usize, x: f64) -> Result<f64> {
    Ok(phi_table(k, x)?[k])
}

/// Gauss-Hermite rule for the weight `e^{-x²}`.
#[derive(Debug, Clone)]
pub struct GaussHermite {
    nodes: Vec<f64>,
    /// `w_i e^{x_i²}`, finite at every node.
    scaled_weights: Vec<f64>,
}

impl GaussHermite {
    /// Nodes from the symmetric Jacobi matrix, polished by Newton steps on
    /// `φ_n`; scaled weights from the Christoffel sum `1 / Σ_{k<n} φ_k(x)²`.
    pub fn new(n: usize) -> Self {
        assert!((1..=MAX_K).contains(&n), "rule size out of range");
        let jacobi = DMatrix::from_fn(n, n, |i, j| {
            if i.abs_diff(j) == 1 {
                (i.max(j) as f64 / 2.0).sqrt()
            } else {
                0.0
            }
        });
        let mut nodes: Vec<f64> = SymmetricEigen::new(jacobi)
            .eigenvalues
            .iter()
            .copied()
            .collect();
        nodes.sort_by(f64::total_cmp);
        for x in nodes.iter_mut() {
            for _ in 0..3 {
                let table = recurrence(n, *x);
                let derivative = (2.0 * n as f64).sqrt() * table[n - 1] - *x * table[n];
                if derivative != 0.0 {
                    *x -= table[n] / derivative;
                }
            }
        }
        let scaled_weights = nodes
            .iter()
            .map(|&x| 1.0 / recurrence(n - 1, x).iter().map(|p| p * p).sum::<f64>())
            .collect();
        GaussHermite {
            nodes,
            scaled_weights,
        }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    /// `w_i` for the weight `e^{-x²}`.
    pub fn weights(&self) -> Vec<f64> {
        self.nodes
            .iter()
            .zip(&self.scaled_weights)
            .map(|(x, w)| w * (-x * x).exp())
            .collect()
    }

    /// `∫ g(y) dy` for `g` = polynomial × `e^{-a (y - center)²}`, exact up
    /// to the rule's polynomial degree.
    pub fn integrate(&self, a: f64, center: f64, g: impl Fn(f64) -> f64) -> f64 {
        let s = a.sqrt();
        self.nodes
            .iter()
            .zip(&self.scaled_weights)
            .map(|(t, w)| w * g(center + t / s))
            .sum::<f64>()
            / s
    }

    /// Two-dimensional product rule over `(u, v)` with Gaussian widths
    /// `a_u`, `a_v` centred at the origin.
    pub fn integrate_2d(&self, a_u: f64, a_v: f64, g: impl Fn(f64, f64) -> f64) -> f64 {
        self.integrate(a_u, 0.0, |u| self.integrate(a_v, 0.0, |v| g(u, v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ground_state_value_and_parity() {
        assert!((phi(0, 0.0).unwrap() - 0.751_125_544_464_942_5).abs() < 1e-15);
        assert_eq!(phi(1, 0.0).unwrap(), 0.0);
        assert!((phi(3, -1.3).unwrap() + phi(3, 1.3).unwrap()).abs() < 1e-15);
        assert!(phi(201, 0.0).is_err());
        assert!(phi(200, 3.0).unwrap().is_finite());
    }

    #[test]
    fn rule_reproduces_moments() {
        let gh = GaussHermite::new(128);
        let w = gh.weights();
        assert!((w.iter().sum::<f64>() - PI.sqrt()).abs() < 1e-13);
        let second: f64 = gh.nodes().iter().zip(&w).map(|(x, w)| w * x * x).sum();
        assert!((second - PI.sqrt() / 2.0).abs() < 1e-13);
        let small = GaussHermite::new(2);
        assert!((small.nodes()[1] - 0.5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn eigenfunctions_orthonormal() {
        let gh = GaussHermite::new(128);
        for j in 0..=8 {
            for k in 0..=8 {
                let v = gh.integrate(1.0, 0.0, |x| {
                    let t = phi_table(8, x).unwrap();
                    t[j] * t[k]
                });
                let expected = if j == k { 1.0 } else { 0.0 };
                assert!((v - expected).abs() < 1e-12, "{j} {k} {v}");
            }
        }
    }

    #[test]
    fn shifted_scaled_gaussian() {
        let gh = GaussHermite::new(64);
        let v = gh.integrate(3.0, 0.7, |y| y * y * (-3.0 * (y - 0.7) * (y - 0.7)).exp());
        let expected = (PI / 3.0).sqrt() * (0.49 + 1.0 / 6.0);
        assert!((v - expected).abs() < 1e-13);
    }
}
