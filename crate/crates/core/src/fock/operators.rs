//! Ladder operators and the ten quadratic generators on the truncated
//! two-mode Fock space `|n1, n2>`, `0 <= n1, n2 < nmax`.

use nalgebra::DVector;
use num_complex::Complex64;

use crate::lie::{alge11, GeneratorLabel, GeneratorSet, SetKind};
use crate::linalg::{c, combine, identity, kron, sparse_commutator, zeros, CMatrix, I};
use crate::report::{PairResidual, VerificationReport};
use crate::{Error, Result};

use GeneratorLabel::*;

/// An operator on the truncated two-mode space, indexed by
/// `n1 * nmax + n2`.
#[derive(Debug, Clone, PartialEq)]
pub struct FockOperator {
    pub nmax: usize,
    pub matrix: CMatrix,
}

impl FockOperator {
    pub fn dagger(&self) -> FockOperator {
        FockOperator {
            nmax: self.nmax,
            matrix: self.matrix.adjoint(),
        }
    }

    pub fn apply(&self, state: &DVector<Complex64>) -> DVector<Complex64> {
        &self.matrix * state
    }
}

pub fn fock_index(nmax: usize, n1: usize, n2: usize) -> usize {
    n1 * nmax + n2
}

/// `|n1, n2>` as a column vector.
pub fn basis_state(nmax: usize, n1: usize, n2: usize) -> Result<DVector<Complex64>> {
    if n1 >= nmax || n2 >= nmax {
        return Err(Error::invalid(
            "occupation",
            n1.max(n2) as f64,
            "must be below nmax",
        ));
    }
    let mut v = DVector::zeros(nmax * nmax);
    v[fock_index(nmax, n1, n2)] = c(1.0, 0.0);
    Ok(v)
}

fn single_mode_lowering(levels: usize) -> CMatrix {
    let mut a = zeros(levels);
    for n in 1..levels {
        a[(n - 1, n)] = c((n as f64).sqrt(), 0.0);
    }
    a
}

/// `(a1, a2)`: `a|n> = sqrt(n)|n-1>` on one mode, identity on the other.
pub fn ladder_operators(nmax: usize) -> Result<(FockOperator, FockOperator)> {
    if nmax < 2 {
        return Err(Error::invalid("nmax", nmax as f64, "must be at least 2"));
    }
    let a = single_mode_lowering(nmax);
    let id = identity(nmax);
    Ok((
        FockOperator {
            nmax,
            matrix: kron(&a, &id),
        },
        FockOperator {
            nmax,
            matrix: kron(&id, &a),
        },
    ))
}

#[derive(Clone, Copy)]
enum Ladder {
    A1,
    A2,
    D1,
    D2,
}

use Ladder::{A1, A2, D1, D2};

/// Applies a product of ladder operators (rightmost first) to `|n1, n2>`
/// without truncation.
fn apply_word(word: &[Ladder], n1: usize, n2: usize) -> Option<(usize, usize, f64)> {
    let (mut n1, mut n2, mut amp) = (n1, n2, 1.0);
    for op in word.iter().rev() {
        match op {
            A1 if n1 == 0 => return None,
            A2 if n2 == 0 => return None,
            A1 => {
                amp *= (n1 as f64).sqrt();
                n1 -= 1;
            }
            A2 => {
                amp *= (n2 as f64).sqrt();
                n2 -= 1;
            }
            D1 => {
                n1 += 1;
                amp *= (n1 as f64).sqrt();
            }
            D2 => {
                n2 += 1;
                amp *= (n2 as f64).sqrt();
            }
        }
    }
    Some((n1, n2, amp))
}

/// Matrix of `Σ coeff · word` restricted to occupations below `nmax`.
/// Intermediate states are never truncated, so the result is the exact
/// compression of the untruncated operator.
fn compress(nmax: usize, terms: &[(Complex64, &[Ladder])]) -> CMatrix {
    let mut m = zeros(nmax * nmax);
    for n1 in 0..nmax {
        for n2 in 0..nmax {
            for (coeff, word) in terms {
                if let Some((m1, m2, amp)) = apply_word(word, n1, n2) {
                    if m1 < nmax && m2 < nmax {
                        m[(fock_index(nmax, m1, m2), fock_index(nmax, n1, n2))] += coeff * amp;
                    }
                }
            }
        }
    }
    m
}

fn generators(nmax: usize, printed_s3: bool) -> Vec<(GeneratorLabel, CMatrix)> {
    let h = c(0.5, 0.0);
    let q = c(0.25, 0.0);
    let s3 = if printed_s3 { h } else { -h };
    let build = |terms: &[(Complex64, &[Ladder])]| compress(nmax, terms);
    vec![
        (L1, build(&[(h, &[D1, A2]), (h, &[D2, A1])])),
        (L2, build(&[(-h * I, &[D1, A2]), (h * I, &[D2, A1])])),
        (L3, build(&[(h, &[D1, A1]), (-h, &[D2, A2])])),
        (S3, build(&[(s3, &[D1, A1]), (s3, &[A2, D2])])),
        (
            K1,
            build(&[
                (-q, &[D1, D1]),
                (-q, &[A1, A1]),
                (q, &[D2, D2]),
                (q, &[A2, A2]),
            ]),
        ),
        (
            K2,
            build(&[
                (q * I, &[D1, D1]),
                (-q * I, &[A1, A1]),
                (q * I, &[D2, D2]),
                (-q * I, &[A2, A2]),
            ]),
        ),
        (K3, build(&[(h, &[D1, D2]), (h, &[A1, A2])])),
        (
            Q1,
            build(&[
                (-q * I, &[D1, D1]),
                (q * I, &[A1, A1]),
                (q * I, &[D2, D2]),
                (-q * I, &[A2, A2]),
            ]),
        ),
        (
            Q2,
            build(&[
                (-q, &[D1, D1]),
                (-q, &[A1, A1]),
                (-q, &[D2, D2]),
                (-q, &[A2, A2]),
            ]),
        ),
        (Q3, build(&[(h * I, &[D1, D2]), (-h * I, &[A1, A2])])),
    ]
}

fn tenfold(nmax: usize, printed_s3: bool, kind: SetKind) -> Result<GeneratorSet> {
    if nmax < 4 {
        return Err(Error::invalid("nmax", nmax as f64, "must be at least 4"));
    }
    GeneratorSet::new(kind, generators(nmax, printed_s3))
}

/// The ten quadratic generators, each the exact compression of the
/// untruncated operator onto `n1, n2 < nmax`.
///
/// `S3` is `-(a1†a1 + a2 a2†)/2`, the sign under which the set satisfies
/// the same commutation table as the 4x4 Sp(4) matrices and maps onto
/// them through `[X, ξ] = -m(X) ξ` with `ξ = (x1, p1, x2, p2)`.
pub fn dirac_tenfold(nmax: usize) -> Result<GeneratorSet> {
    tenfold(nmax, false, SetKind::Fock { nmax })
}

/// Same as [`dirac_tenfold`] with `S3 = +(a1†a1 + a2 a2†)/2`, the literal
/// ordering of the classic presentation. With this sign the `[K_i, Q_i]`,
/// `[K_i, S3]` and `[Q_i, S3]` brackets come out negated.
pub fn dirac_tenfold_as_printed(nmax: usize) -> Result<GeneratorSet> {
    tenfold(
        nmax,
        true,
        SetKind::Subset(format!("fock(nmax={nmax}, literal S3)")),
    )
}

/// Columns on which a bracket residual is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subspace {
    /// `n1 + n2 <= nmax - 3`: states whose images under a product of two
    /// generators never reach the truncation edge.
    Safe,
    Full,
}

impl Subspace {
    fn columns(self, nmax: usize) -> Vec<usize> {
        (0..nmax * nmax)
            .filter(|&j| match self {
                Subspace::Full => true,
                Subspace::Safe => j / nmax + j % nmax + 3 <= nmax,
            })
            .collect()
    }
}

/// Residuals of every Sp(4) bracket on the aligned Fock generators over the
/// chosen columns (all rows).
pub fn fock_bracket_residuals(
    nmax: usize,
    subspace: Subspace,
    tolerance: f64,
) -> Result<VerificationReport> {
    bracket_residuals(&dirac_tenfold(nmax)?, nmax, subspace, tolerance)
}

/// Safe-subspace residuals of the Sp(4) table on the literal-`S3` set; nine
/// brackets come out with the opposite sign.
pub fn literal_fock_residuals(nmax: usize, tolerance: f64) -> Result<VerificationReport> {
    bracket_residuals(
        &dirac_tenfold_as_printed(nmax)?,
        nmax,
        Subspace::Safe,
        tolerance,
    )
}

fn bracket_residuals(
    set: &GeneratorSet,
    nmax: usize,
    subspace: Subspace,
    tolerance: f64,
) -> Result<VerificationReport> {
    let cols = subspace.columns(nmax);
    let table = alge11();
    let mut residuals = Vec::with_capacity(table.len());
    for (a, b, terms) in table.pairs() {
        let bracket = sparse_commutator(set.matrix(a)?, set.matrix(b)?);
        let mats: Vec<&CMatrix> = terms
            .iter()
            .map(|t| set.matrix(t.label))
            .collect::<Result<_>>()?;
        let coeffs: Vec<Complex64> = terms.iter().map(|t| t.coeff).collect();
        let diff = if mats.is_empty() {
            bracket
        } else {
            bracket - combine(&mats, &coeffs)
        };
        let residual = cols
            .iter()
            .flat_map(|&j| diff.column(j).iter().map(|z| z.norm()).collect::<Vec<_>>())
            .fold(0.0, f64::max);
        residuals.push(PairResidual { a, b, residual });
    }
    let scope = match subspace {
        Subspace::Safe => "safe subspace",
        Subspace::Full => "full space",
    };
    Ok(VerificationReport::new(
        format!("{}, {scope}", set.kind()),
        tolerance,
        residuals,
    ))
}

/// Sp(4) commutation table on the Fock generators, restricted to the safe
/// subspace.
pub fn verify_fock_commutators(nmax: usize, tolerance: f64) -> Result<VerificationReport> {
    if nmax < 6 {
        return Err(Error::invalid("nmax", nmax as f64, "must be at least 6"));
    }
    fock_bracket_residuals(nmax, Subspace::Safe, tolerance)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{commutator, max_abs};

    fn apply(
        set: &GeneratorSet,
        label: GeneratorLabel,
        n1: usize,
        n2: usize,
    ) -> DVector<Complex64> {
        let nmax = (set.dim() as f64).sqrt() as usize;
        set.get(label).unwrap() * basis_state(nmax, n1, n2).unwrap()
    }

    #[test]
    fn ladder_action() {
        let (a1, a2) = ladder_operators(6).unwrap();
        let vac = basis_state(6, 0, 0).unwrap();
        assert_eq!(
            max_abs(&CMatrix::from_column_slice(
                36,
                1,
                a1.apply(&vac).as_slice()
            )),
            0.0
        );
        let number = &a1.dagger().matrix * &a1.matrix;
        let v = basis_state(6, 3, 5).unwrap();
        assert!((&number * &v - &v * c(3.0, 0.0)).norm() < 1e-14);
        let mixed = commutator(&a1.matrix, &a2.dagger().matrix).unwrap();
        assert!(max_abs(&mixed) < 1e-14);
        assert!(ladder_operators(1).is_err());
    }

    #[test]
    fn canonical_commutator_below_edge() {
        let nmax = 5;
        let (a1, _) = ladder_operators(nmax).unwrap();
        let cm = commutator(&a1.matrix, &a1.dagger().matrix).unwrap();
        for n1 in 0..nmax - 1 {
            for n2 in 0..nmax {
                let j = fock_index(nmax, n1, n2);
                assert!((cm[(j, j)] - c(1.0, 0.0)).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn generator_actions() {
        let printed = dirac_tenfold_as_printed(6).unwrap();
        let v = apply(&printed, S3, 0, 0);
        assert!((v - basis_state(6, 0, 0).unwrap() * c(0.5, 0.0)).norm() < 1e-14);
        let aligned = dirac_tenfold(6).unwrap();
        assert!(apply(&aligned, L3, 1, 1).norm() < 1e-14);
        let v = apply(&aligned, K3, 0, 0);
        assert!((v - basis_state(6, 1, 1).unwrap() * c(0.5, 0.0)).norm() < 1e-14);
        assert!(dirac_tenfold(3).is_err());
    }

    #[test]
    fn aligned_set_satisfies_table() {
        for nmax in [6, 8, 10] {
            let r = verify_fock_commutators(nmax, 1e-12).unwrap();
            assert!(r.pass, "nmax {nmax}: {:?}", r.worst);
        }
        assert!(verify_fock_commutators(5, 1e-12).is_err());
    }

    #[test]
    fn edge_residual_is_visible() {
        let full = fock_bracket_residuals(4, Subspace::Full, 1e-12).unwrap();
        assert!(full.worst_residual() > 0.1);
        assert!(
            fock_bracket_residuals(4, Subspace::Safe, 1e-12)
                .unwrap()
                .pass
        );
    }

    #[test]
    fn literal_s3_flips_nine_brackets() {
        let set = dirac_tenfold_as_printed(8).unwrap();
        let cols = Subspace::Safe.columns(8);
        let table = alge11();
        let mut flipped = 0;
        for (a, b, terms) in table.pairs() {
            let bracket = sparse_commutator(set.get(a).unwrap(), set.get(b).unwrap());
            let rhs = terms.iter().fold(zeros(64), |acc, t| {
                acc + set.get(t.label).unwrap() * t.coeff
            });
            let worst = |m: &CMatrix| {
                cols.iter()
                    .flat_map(|&j| m.column(j).iter().map(|z| z.norm()).collect::<Vec<_>>())
                    .fold(0.0, f64::max)
            };
            if worst(&(&bracket - &rhs)) > 1e-12 {
                assert!(worst(&(&bracket + &rhs)) < 1e-12, "{a} {b}");
                flipped += 1;
            }
        }
        assert_eq!(flipped, 9);
    }

    #[test]
    fn generators_hermitian() {
        for (label, m) in dirac_tenfold(6).unwrap().iter() {
            assert!(max_abs(&(m - m.adjoint())) < 1e-14, "{label}");
        }
    }
}
