//! Expressing the fifteen SL(4,r) generators as halves of Majorana gamma
//! products, checked against the explicit 4x4 matrices.

use num_complex::Complex64;
use serde::Serialize;

use super::family::{build_generator_set, majorana_gammas, sl4r_printed, Family};
use super::label::GeneratorLabel;
use crate::linalg::{c, max_abs, max_abs_diff, CMatrix};

use GeneratorLabel::*;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MatchStatus {
    Exact,
    SignFlip,
    /// `candidate = ratio * member`.
    FactorMismatch {
        ratio: [f64; 2],
    },
    Unrelated,
}

impl MatchStatus {
    pub fn name(&self) -> &'static str {
        match self {
            MatchStatus::Exact => "EXACT",
            MatchStatus::SignFlip => "SIGN_FLIP",
            MatchStatus::FactorMismatch { .. } => "FACTOR_MISMATCH",
            MatchStatus::Unrelated => "UNRELATED",
        }
    }

    pub fn ratio(&self) -> Option<Complex64> {
        match self {
            MatchStatus::FactorMismatch { ratio } => Some(c(ratio[0], ratio[1])),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CorrespondenceRow {
    pub label: GeneratorLabel,
    pub formula: &'static str,
    /// Against the 4x4 matrix with every entry as printed.
    pub vs_printed: MatchStatus,
    /// Against the member of the algebra-consistent `sl4r_4` family.
    pub vs_family: MatchStatus,
    /// Max-abs entry of `candidate - printed`.
    pub printed_residual: f64,
    /// Max-abs entry of `candidate - member`.
    pub family_residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorrespondenceReport {
    pub tolerance: f64,
    pub rows: Vec<CorrespondenceRow>,
}

impl CorrespondenceReport {
    pub fn row(&self, label: GeneratorLabel) -> Option<&CorrespondenceRow> {
        self.rows.iter().find(|r| r.label == label)
    }

    pub fn count_printed(&self, name: &str) -> usize {
        self.rows
            .iter()
            .filter(|r| r.vs_printed.name() == name)
            .count()
    }
}

/// `(label, formula, coefficient, gamma indices)`; indices are positions in
/// `[γ1, γ2, γ3, γ0, γ5]`.
const CANDIDATES: [(GeneratorLabel, &str, [f64; 2], &[usize]); 15] = [
    (L1, "(-i/2) g0", [0.0, -0.5], &[3]),
    (L2, "(-i/2) g5 g0", [0.0, -0.5], &[4, 3]),
    (L3, "(-1/2) g5", [-0.5, 0.0], &[4]),
    (S1, "(i/2) g2 g3", [0.0, 0.5], &[1, 2]),
    (S2, "(i/2) g1 g2", [0.0, 0.5], &[0, 1]),
    (S3, "(i/2) g3 g1", [0.0, 0.5], &[2, 0]),
    (K1, "(-i/2) g5 g1", [0.0, -0.5], &[4, 0]),
    (K2, "(1/2) g1", [0.5, 0.0], &[0]),
    (K3, "(i/2) g0 g1", [0.0, 0.5], &[3, 0]),
    (Q1, "(i/2) g5 g3", [0.0, 0.5], &[4, 2]),
    (Q2, "(-1/2) g3", [-0.5, 0.0], &[2]),
    (Q3, "(-i/2) g0 g3", [0.0, -0.5], &[3, 2]),
    (G1, "(-i/2) g5 g2", [0.0, -0.5], &[4, 1]),
    (G2, "(1/2) g2", [0.5, 0.0], &[1]),
    (G3, "(i/2) g0 g2", [0.0, 0.5], &[3, 1]),
];

fn gamma_basis() -> [CMatrix; 5] {
    let [g1, g2, g3, g0] = majorana_gammas();
    let g5 = &g0 * &g1 * &g2 * &g3 * c(0.0, 1.0);
    [g1, g2, g3, g0, g5]
}

/// Candidate matrix for each label, built from gamma products.
pub fn candidate(label: GeneratorLabel) -> Option<CMatrix> {
    let gammas = gamma_basis();
    CANDIDATES
        .iter()
        .find(|row| row.0 == label)
        .map(|(_, _, k, idx)| {
            let product = idx
                .iter()
                .skip(1)
                .fold(gammas[idx[0]].clone(), |acc, &j| acc * &gammas[j]);
            product * c(k[0], k[1])
        })
}

fn classify(candidate: &CMatrix, member: &CMatrix, tolerance: f64) -> MatchStatus {
    if max_abs_diff(candidate, member) <= tolerance {
        return MatchStatus::Exact;
    }
    if max_abs_diff(candidate, &(-member)) <= tolerance {
        return MatchStatus::SignFlip;
    }
    let norm2: f64 = member.iter().map(|z| z.norm_sqr()).sum();
    if norm2 > 0.0 {
        let ratio: Complex64 = member
            .iter()
            .zip(candidate.iter())
            .map(|(m, x)| m.conj() * x)
            .sum::<Complex64>()
            / norm2;
        if ratio.norm() > tolerance && max_abs(&(candidate - member * ratio)) <= tolerance {
            return MatchStatus::FactorMismatch {
                ratio: [ratio.re, ratio.im],
            };
        }
    }
    MatchStatus::Unrelated
}

/// Classifies every gamma-product candidate against the printed matrices and
/// against the `sl4r_4` family.
pub fn table1_correspondence(tolerance: f64) -> CorrespondenceReport {
    let printed = sl4r_printed();
    let family = build_generator_set(Family::Sl4r);
    let rows = CANDIDATES
        .iter()
        .map(|&(label, formula, _, _)| {
            let cand = candidate(label).expect("listed label");
            let p = printed.get(label).expect("15 labels");
            let f = family.get(label).expect("15 labels");
            CorrespondenceRow {
                label,
                formula,
                vs_printed: classify(&cand, p, tolerance),
                vs_family: classify(&cand, f, tolerance),
                printed_residual: max_abs_diff(&cand, p),
                family_residual: max_abs_diff(&cand, f),
            }
        })
        .collect();
    CorrespondenceReport { tolerance, rows }
}
