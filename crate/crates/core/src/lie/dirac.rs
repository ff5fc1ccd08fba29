use super::family::majorana_gammas;
use crate::linalg::{anticommutator, identity, max_abs, CMatrix, I};

/// Signature of `(γ1, γ2, γ3, γ0)`.
const METRIC: [f64; 4] = [-1.0, -1.0, -1.0, 1.0];

/// Worst entry of `{γ_μ, γ_ν} - 2 g_μν I` over all sixteen ordered pairs.
pub fn clifford_residual() -> f64 {
    let gammas = majorana_gammas();
    let mut worst: f64 = 0.0;
    for (mu, a) in gammas.iter().enumerate() {
        for (nu, b) in gammas.iter().enumerate() {
            let g = if mu == nu { 2.0 * METRIC[mu] } else { 0.0 };
            let expected = identity(4) * crate::linalg::c(g, 0.0);
            let ac = anticommutator(a, b).expect("4x4");
            worst = worst.max(max_abs(&(ac - expected)));
        }
    }
    worst
}

/// `γ5 = iγ0γ1γ2γ3`.
pub fn gamma5() -> CMatrix {
    let [g1, g2, g3, g0] = majorana_gammas();
    &g0 * &g1 * &g2 * &g3 * I
}

/// Worst entry of `{γ5, γ_μ}` over `μ = 0..3`, together with `γ5² - I`.
pub fn gamma5_anticommutation_residual() -> f64 {
    let g5 = gamma5();
    let square = max_abs(&(&g5 * &g5 - identity(4)));
    majorana_gammas()
        .iter()
        .map(|g| max_abs(&anticommutator(&g5, g).expect("4x4")))
        .fold(square, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clifford_and_gamma5() {
        assert!(clifford_residual() <= 1e-14);
        assert!(gamma5_anticommutation_residual() <= 1e-14);
    }
}
