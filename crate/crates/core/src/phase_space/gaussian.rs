//! Gaussian Wigner functions with vacuum covariance `I/2`.

use std::f64::consts::PI;

use nalgebra::{Matrix2, Matrix4, SymmetricEigen, Vector4};

use super::transform::{PhaseTransform, SymplecticForm};
use crate::{Error, Result};

/// Symmetry tolerance for covariance matrices.
const SYMMETRY_TOL: f64 = 1e-12;

/// Slack below `μ = 1` tolerated before a state counts as sub-vacuum.
pub const SUB_VACUUM_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianState {
    mean: Vector4<f64>,
    cov: Matrix4<f64>,
}

impl GaussianState {
    pub fn vacuum() -> Self {
        GaussianState {
            mean: Vector4::zeros(),
            cov: Matrix4::identity() * 0.5,
        }
    }

    pub fn new(mean: Vector4<f64>, cov: Matrix4<f64>) -> Result<Self> {
        if (cov - cov.transpose()).abs().max() > SYMMETRY_TOL || cov.cholesky().is_none() {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(GaussianState { mean, cov })
    }

    pub fn mean(&self) -> &Vector4<f64> {
        &self.mean
    }

    pub fn cov(&self) -> &Matrix4<f64> {
        &self.cov
    }

    /// `mean -> M mean`, `cov -> M cov Mᵀ`.
    pub fn evolve(&self, m: &PhaseTransform) -> GaussianState {
        let cov = m.0 * self.cov * m.0.transpose();
        GaussianState {
            mean: m.0 * self.mean,
            cov: (cov + cov.transpose()) * 0.5,
        }
    }

    pub fn wigner(&self, xi: &Vector4<f64>) -> f64 {
        let inv = self
            .cov
            .try_inverse()
            .expect("positive-definite covariance");
        let d = xi - self.mean;
        let q = (d.transpose() * inv * d)[0];
        (-0.5 * q).exp() / ((2.0 * PI).powi(2) * self.cov.determinant().sqrt())
    }

    /// Covariance of one oscillator after integrating out the other.
    pub fn reduce(&self, keep: usize) -> Result<Matrix2<f64>> {
        let offset = match keep {
            1 => 0,
            2 => 2,
            _ => return Err(Error::invalid("oscillator", keep as f64, "must be 1 or 2")),
        };
        Ok(self.cov.fixed_view::<2, 2>(offset, offset).into_owned())
    }

    /// Symplectic eigenvalues `(ν+, ν-)` of the covariance: the moduli of
    /// the eigenvalues of the antisymmetric `Σ^{1/2} J Σ^{1/2}`, read off the
    /// symmetric `-(Σ^{1/2} J Σ^{1/2})²` so that degenerate pairs stay
    /// accurate to rounding.
    pub fn symplectic_eigenvalues(&self) -> (f64, f64) {
        let eig = SymmetricEigen::new(self.cov);
        let root = eig.eigenvectors
            * Matrix4::from_diagonal(&eig.eigenvalues.map(|l| l.max(0.0).sqrt()))
            * eig.eigenvectors.transpose();
        let a = root * SymplecticForm::standard().0 * root;
        let mut squares: Vec<f64> = SymmetricEigen::new(a.transpose() * a)
            .eigenvalues
            .iter()
            .copied()
            .collect();
        squares.sort_by(|x, y| y.total_cmp(x));
        let plus = ((squares[0] + squares[1]) / 2.0).max(0.0).sqrt();
        let minus = ((squares[2] + squares[3]) / 2.0).max(0.0).sqrt();
        (plus, minus)
    }

    /// Phase-space areas `(A1, A2) = 2π(ν1, ν2)`, vacuum area `π`.
    ///
    /// The larger symplectic eigenvalue goes to the oscillator with the
    /// larger marginal determinant (the first on ties). For block-diagonal
    /// covariances this equals `2π sqrt(det)` of each marginal block.
    pub fn areas(&self) -> (f64, f64) {
        let (plus, minus) = self.symplectic_eigenvalues();
        let d1 = self.cov.fixed_view::<2, 2>(0, 0).determinant();
        let d2 = self.cov.fixed_view::<2, 2>(2, 2).determinant();
        let (n1, n2) = if d1 >= d2 {
            (plus, minus)
        } else {
            (minus, plus)
        };
        (2.0 * PI * n1, 2.0 * PI * n2)
    }

    /// `2π sqrt(det)` of each marginal block.
    pub fn marginal_areas(&self) -> (f64, f64) {
        let area = |k| {
            2.0 * PI
                * self
                    .cov
                    .fixed_view::<2, 2>(k, k)
                    .determinant()
                    .max(0.0)
                    .sqrt()
        };
        (area(0), area(2))
    }
}

fn check_cov2(cov2: &Matrix2<f64>) -> Result<f64> {
    let det = cov2.determinant();
    if (cov2 - cov2.transpose()).abs().max() > SYMMETRY_TOL || cov2[(0, 0)] <= 0.0 || det <= 0.0 {
        return Err(Error::NotPositiveDefinite);
    }
    Ok(det)
}

/// `1 / (2 sqrt(det cov2))`.
pub fn gaussian_purity(cov2: &Matrix2<f64>) -> Result<f64> {
    Ok(1.0 / (2.0 * check_cov2(cov2)?.sqrt()))
}

/// `u ln u - v ln v` with `u = (μ + 1)/2`, `v = (μ - 1)/2`, `μ = 2 sqrt(det)`.
pub fn gaussian_entropy(cov2: &Matrix2<f64>) -> Result<f64> {
    let mu = 2.0 * check_cov2(cov2)?.sqrt();
    if mu < 1.0 - SUB_VACUUM_TOL {
        return Err(Error::SubVacuum { mu });
    }
    let u = (mu + 1.0) / 2.0;
    let v = (mu - 1.0) / 2.0;
    let v_term = if v > 0.0 { v * v.ln() } else { 0.0 };
    Ok(u * u.ln() - v_term)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::GeneratorLabel::*;
    use crate::phase_space::{generator_to_transform, two_mode_squeeze};

    #[test]
    fn vacuum_wigner_and_reduction() {
        let v = GaussianState::vacuum();
        let xi: Vector4<f64> = Vector4::new(0.3, -0.2, 0.5, 1.0);
        let expected = (-xi.norm_squared()).exp() / (PI * PI);
        assert!((v.wigner(&xi) - expected).abs() < 1e-15);
        assert_eq!(v.reduce(1).unwrap(), Matrix2::identity() * 0.5);
        assert!(v.reduce(3).is_err());
        assert_eq!(v.evolve(&PhaseTransform::identity()), v);
        let (a1, a2) = v.areas();
        assert!((a1 - PI).abs() < 1e-14 && (a2 - PI).abs() < 1e-14);
    }

    #[test]
    fn squeezed_vacuum() {
        let eta: f64 = 0.7;
        let s = GaussianState::vacuum().evolve(&two_mode_squeeze(eta));
        let (c2, s2) = ((2.0 * eta).cosh(), (2.0 * eta).sinh());
        #[rustfmt::skip]
        let expected = Matrix4::new(
            c2, 0.0, s2, 0.0,
            0.0, c2, 0.0, -s2,
            s2, 0.0, c2, 0.0,
            0.0, -s2, 0.0, c2,
        ) * 0.5;
        assert!((s.cov() - expected).abs().max() < 1e-13);
        let r = s.reduce(1).unwrap();
        assert!((r - Matrix2::identity() * (c2 / 2.0)).abs().max() < 1e-13);
        assert!((gaussian_purity(&r).unwrap() - 1.0 / c2).abs() < 1e-13);
        let (nu1, nu2) = s.symplectic_eigenvalues();
        assert!((nu1 - 0.5).abs() < 1e-12 && (nu2 - 0.5).abs() < 1e-12);
        assert!((s.cov().determinant() - 1.0 / 16.0).abs() < 1e-12);
    }

    #[test]
    fn g3_areas_and_sub_vacuum() {
        let eta: f64 = 0.5;
        let s = GaussianState::vacuum().evolve(&generator_to_transform(G3, eta).unwrap());
        let (a1, a2) = s.areas();
        assert!((a1 - PI * (2.0 * eta).exp()).abs() < 1e-12);
        assert!((a2 - PI * (-2.0 * eta).exp()).abs() < 1e-12);
        let (m1, m2) = s.marginal_areas();
        assert!((a1 - m1).abs() < 1e-12 && (a2 - m2).abs() < 1e-12);
        let r1 = s.reduce(1).unwrap();
        assert!(
            (r1 - Matrix2::identity() * ((2.0 * eta).exp() / 2.0))
                .abs()
                .max()
                < 1e-12
        );
        match gaussian_entropy(&s.reduce(2).unwrap()) {
            Err(Error::SubVacuum { mu }) => assert!((mu - (-1.0f64).exp()).abs() < 1e-12),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn entropy_values() {
        assert_eq!(gaussian_entropy(&(Matrix2::identity() * 0.5)).unwrap(), 0.0);
        let c2 = (2.0f64).cosh();
        let s = gaussian_entropy(&(Matrix2::identity() * (c2 / 2.0))).unwrap();
        assert!((s - 1.619_822_092_897_702_7).abs() < 1e-12);
        assert_eq!(
            gaussian_purity(&Matrix2::new(1.0, 2.0, 2.0, 1.0)),
            Err(Error::NotPositiveDefinite)
        );
    }

    #[test]
    fn rejects_bad_covariance() {
        let mut cov = Matrix4::identity();
        cov[(0, 1)] = 0.1;
        assert!(GaussianState::new(Vector4::zeros(), cov).is_err());
        assert!(GaussianState::new(Vector4::zeros(), -Matrix4::identity()).is_err());
        assert!(GaussianState::new(Vector4::zeros(), Matrix4::identity()).is_ok());
    }

    #[test]
    fn single_oscillator_triples_keep_each_area() {
        for label in [S3, K2, Q2, L3, K1, Q1] {
            let s = GaussianState::vacuum().evolve(&generator_to_transform(label, 0.8).unwrap());
            let (a1, a2) = s.areas();
            assert!(
                (a1 - PI).abs() < 1e-10 && (a2 - PI).abs() < 1e-10,
                "{label}"
            );
        }
    }
}
