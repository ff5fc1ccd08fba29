//! Linear transformations of the four-dimensional phase space
//! `ξ = (x1, p1, x2, p2)`.

use std::ops::Mul;

use nalgebra::Matrix4;

use crate::lie::{build_generator_set, Family, GeneratorLabel};
use crate::Result;

/// `J = diag([[0, 1], [-1, 0]], [[0, 1], [-1, 0]])`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymplecticForm(pub Matrix4<f64>);

impl SymplecticForm {
    pub fn standard() -> Self {
        #[rustfmt::skip]
        let j = Matrix4::new(
            0.0, 1.0, 0.0, 0.0,
            -1.0, 0.0, 0.0, 0.0,
            0.0, 0.0, 0.0, 1.0,
            0.0, 0.0, -1.0, 0.0,
        );
        SymplecticForm(j)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseTransform(pub Matrix4<f64>);

impl PhaseTransform {
    pub fn identity() -> Self {
        PhaseTransform(Matrix4::identity())
    }

    pub fn matrix(&self) -> &Matrix4<f64> {
        &self.0
    }

    pub fn determinant(&self) -> f64 {
        self.0.determinant()
    }

    /// `max |M J Mᵀ - J|`.
    pub fn canonical_deviation(&self) -> f64 {
        let j = SymplecticForm::standard().0;
        (self.0 * j * self.0.transpose() - j).abs().max()
    }

    pub fn is_canonical(&self, tolerance: f64) -> bool {
        self.canonical_deviation() <= tolerance
    }
}

impl Mul for PhaseTransform {
    type Output = PhaseTransform;

    fn mul(self, rhs: PhaseTransform) -> PhaseTransform {
        PhaseTransform(self.0 * rhs.0)
    }
}

pub fn is_canonical(m: &PhaseTransform, tolerance: f64) -> bool {
    m.is_canonical(tolerance)
}

/// `M(θ) = exp(-2iθ G)` for a member `G` of the fifteen-generator family.
///
/// The members are purely imaginary, so `M` is real. The factor two makes
/// `G3` at `θ = η` the expansion `diag(e^η, e^η, e^-η, e^-η)` and gives the
/// compact generators period `2π`.
pub fn generator_to_transform(label: GeneratorLabel, theta: f64) -> Result<PhaseTransform> {
    let set = build_generator_set(Family::Sl4r);
    let g = set.matrix(label)?;
    let real = Matrix4::from_fn(|r, c| 2.0 * theta * g[(r, c)].im);
    Ok(PhaseTransform(real.exp()))
}

/// Rotation by 45° in the `(x1, x2)` plane, squeeze along the rotated axes
/// and rotation back, with the momenta squeezed the opposite way:
///
/// ```text
/// x1' = cosh η x1 + sinh η x2     p1' = cosh η p1 - sinh η p2
/// x2' = sinh η x1 + cosh η x2     p2' = cosh η p2 - sinh η p1
/// ```
pub fn two_mode_squeeze(eta: f64) -> PhaseTransform {
    let (ch, sh) = (eta.cosh(), eta.sinh());
    #[rustfmt::skip]
    let m = Matrix4::new(
        ch, 0.0, sh, 0.0,
        0.0, ch, 0.0, -sh,
        sh, 0.0, ch, 0.0,
        0.0, -sh, 0.0, ch,
    );
    PhaseTransform(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{EXTENSION_LABELS, SP4_LABELS};
    use std::f64::consts::PI;

    #[test]
    fn form_properties() {
        let j = SymplecticForm::standard().0;
        assert_eq!(j * j, -Matrix4::identity());
        assert_eq!(j.transpose(), -j);
    }

    #[test]
    fn zero_angle_is_identity() {
        for label in crate::lie::ALGEBRA_LABELS {
            let m = generator_to_transform(label, 0.0).unwrap();
            assert_eq!(m, PhaseTransform::identity());
        }
    }

    #[test]
    fn g3_expands_and_contracts() {
        let eta: f64 = 0.6;
        let m = generator_to_transform(GeneratorLabel::G3, eta).unwrap();
        let expected = Matrix4::from_diagonal(&nalgebra::Vector4::new(
            eta.exp(),
            eta.exp(),
            (-eta).exp(),
            (-eta).exp(),
        ));
        assert!((m.0 - expected).abs().max() < 1e-13);
        let d = Matrix4::from_diagonal(&nalgebra::Vector4::new(
            0.5f64.exp(),
            0.5f64.exp(),
            (-0.5f64).exp(),
            (-0.5f64).exp(),
        ));
        assert!(!is_canonical(&PhaseTransform(d), 1e-12));
    }

    #[test]
    fn s3_has_period_two_pi() {
        let m = generator_to_transform(GeneratorLabel::S3, 2.0 * PI).unwrap();
        assert!((m.0 - Matrix4::identity()).abs().max() < 1e-12);
    }

    #[test]
    fn canonical_split() {
        for label in SP4_LABELS {
            for theta in [-1.0, -0.3, 0.3, 1.0] {
                let m = generator_to_transform(label, theta).unwrap();
                assert!(m.is_canonical(1e-12), "{label} {theta}");
                assert!((m.determinant() - 1.0).abs() < 1e-10);
            }
        }
        for label in EXTENSION_LABELS {
            let m = generator_to_transform(label, 0.5).unwrap();
            assert!(m.canonical_deviation() > 0.1, "{label}");
            assert!((m.determinant() - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn squeeze_is_q3_exponential() {
        let eta = 0.9;
        let q3 = generator_to_transform(GeneratorLabel::Q3, eta).unwrap();
        assert!((q3.0 - two_mode_squeeze(eta).0).abs().max() < 1e-13);
        assert!(two_mode_squeeze(eta).is_canonical(1e-12));
    }

    #[test]
    fn non_member_label_rejected() {
        assert!(generator_to_transform(GeneratorLabel::Gamma1, 0.1).is_err());
    }
}
