//! Dense complex-matrix helpers shared by the generator families and the
//! Fock realization.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::{Error, Result};

/// Dense square matrix of complex scalars.
pub type CMatrix = DMatrix<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);
pub const I: Complex64 = Complex64::new(0.0, 1.0);

#[inline]
pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn identity(dim: usize) -> CMatrix {
    CMatrix::identity(dim, dim)
}

pub fn zeros(dim: usize) -> CMatrix {
    CMatrix::zeros(dim, dim)
}

/// Builds a 2x2 complex matrix from row-major entries.
pub fn mat2(entries: [Complex64; 4]) -> CMatrix {
    CMatrix::from_row_slice(2, 2, &entries)
}

/// Pauli matrices `(sigma1, sigma2, sigma3)`.
pub fn pauli() -> (CMatrix, CMatrix, CMatrix) {
    (
        mat2([ZERO, ONE, ONE, ZERO]),
        mat2([ZERO, -I, I, ZERO]),
        mat2([ONE, ZERO, ZERO, -ONE]),
    )
}

/// Assembles `[[a, b], [c, d]]` from four equally sized square blocks.
pub fn block2(a: &CMatrix, b: &CMatrix, c: &CMatrix, d: &CMatrix) -> CMatrix {
    let n = a.nrows();
    debug_assert!([b, c, d].iter().all(|m| m.nrows() == n && m.ncols() == n));
    let mut out = zeros(2 * n);
    out.view_mut((0, 0), (n, n)).copy_from(a);
    out.view_mut((0, n), (n, n)).copy_from(b);
    out.view_mut((n, 0), (n, n)).copy_from(c);
    out.view_mut((n, n), (n, n)).copy_from(d);
    out
}

pub fn block_diag(a: &CMatrix, d: &CMatrix) -> CMatrix {
    let z = zeros(a.nrows());
    block2(a, &z, &z, d)
}

pub fn off_diag(b: &CMatrix, c: &CMatrix) -> CMatrix {
    let z = zeros(b.nrows());
    block2(&z, b, c, &z)
}

/// `AB - BA`.
pub fn commutator(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    check_same_dim(a, b)?;
    Ok(a * b - b * a)
}

/// `AB + BA`.
pub fn anticommutator(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    check_same_dim(a, b)?;
    Ok(a * b + b * a)
}

pub(crate) fn check_same_dim(a: &CMatrix, b: &CMatrix) -> Result<()> {
    if a.nrows() != b.nrows() || a.ncols() != b.ncols() {
        return Err(Error::DimensionMismatch {
            left: a.nrows(),
            right: b.nrows(),
        });
    }
    Ok(())
}

/// `AB` visiting only the nonzero entries; for the Fock generators, whose
/// columns carry at most four entries.
pub fn sparse_mul(a: &CMatrix, b: &CMatrix) -> CMatrix {
    assert_eq!(a.ncols(), b.nrows(), "inner dimensions differ");
    let columns: Vec<Vec<(usize, Complex64)>> = (0..a.ncols())
        .map(|k| {
            a.column(k)
                .iter()
                .enumerate()
                .filter(|(_, z)| **z != ZERO)
                .map(|(i, z)| (i, *z))
                .collect()
        })
        .collect();
    let mut out = CMatrix::zeros(a.nrows(), b.ncols());
    for j in 0..b.ncols() {
        for (k, bkj) in b.column(j).iter().enumerate() {
            if *bkj == ZERO {
                continue;
            }
            for &(i, aik) in &columns[k] {
                out[(i, j)] += aik * bkj;
            }
        }
    }
    out
}

/// `AB - BA` via [`sparse_mul`].
pub fn sparse_commutator(a: &CMatrix, b: &CMatrix) -> CMatrix {
    sparse_mul(a, b) - sparse_mul(b, a)
}

/// Largest entry modulus.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

pub fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter()
        .zip(b.iter())
        .fold(0.0, |acc, (x, y)| acc.max((x - y).norm()))
}

pub fn trace(m: &CMatrix) -> Complex64 {
    m.diagonal().iter().sum()
}

/// Largest modulus of the real parts; zero for a purely imaginary matrix.
pub fn max_real_part(m: &CMatrix) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.re.abs()))
}

pub fn is_symmetric(m: &CMatrix, tol: f64) -> bool {
    max_abs_diff(m, &m.transpose()) <= tol
}

pub fn is_antisymmetric(m: &CMatrix, tol: f64) -> bool {
    max_abs_diff(m, &(-m.transpose())) <= tol
}

/// Column-stacks the flattened matrices into a `dim^2 x n` system matrix.
pub fn flatten_stack(members: &[&CMatrix]) -> CMatrix {
    let rows = members.first().map_or(0, |m| m.len());
    let mut out = CMatrix::zeros(rows, members.len());
    for (k, m) in members.iter().enumerate() {
        out.column_mut(k).copy_from_slice(m.as_slice());
    }
    out
}

/// Numerical rank of the flattened stack (singular values above
/// `tol * largest`).
pub fn stack_rank(members: &[&CMatrix], tol: f64) -> usize {
    if members.is_empty() {
        return 0;
    }
    let svd = flatten_stack(members).svd(false, false);
    let smax = svd.singular_values.max();
    svd.singular_values
        .iter()
        .filter(|&&s| s > tol * smax.max(f64::MIN_POSITIVE))
        .count()
}

/// Least-squares solver for repeated expansions in one fixed set of
/// matrices; factors the flattened stack once.
pub struct LeastSquares<'a> {
    members: Vec<&'a CMatrix>,
    pinv: CMatrix,
}

impl<'a> LeastSquares<'a> {
    pub fn new(members: &[&'a CMatrix]) -> Self {
        let pinv = if members.is_empty() {
            CMatrix::zeros(0, 0)
        } else {
            let a = flatten_stack(members);
            let smax = a.clone().svd(false, false).singular_values.max();
            a.pseudo_inverse(1e-13 * smax)
                .expect("pseudo-inverse of a non-negative tolerance")
        };
        LeastSquares {
            members: members.to_vec(),
            pinv,
        }
    }

    /// Coefficients `c` minimizing `|X - Σ c_k G_k|` and the max-abs
    /// residual of the reconstruction.
    pub fn solve(&self, target: &CMatrix) -> (Vec<Complex64>, f64) {
        if self.members.is_empty() {
            return (Vec::new(), max_abs(target));
        }
        let b = DVector::from_column_slice(target.as_slice());
        let coeffs: Vec<Complex64> = (&self.pinv * b).iter().copied().collect();
        let recon = combine(&self.members, &coeffs);
        (coeffs, max_abs_diff(&recon, target))
    }
}

/// One-off [`LeastSquares::solve`].
pub fn least_squares(members: &[&CMatrix], target: &CMatrix) -> (Vec<Complex64>, f64) {
    LeastSquares::new(members).solve(target)
}

/// `sum_k c_k G_k`.
pub fn combine(members: &[&CMatrix], coeffs: &[Complex64]) -> CMatrix {
    let dim = members.first().map_or(0, |m| m.nrows());
    let mut out = zeros(dim);
    for (m, &ck) in members.iter().zip(coeffs) {
        if ck != ZERO {
            out += *m * ck;
        }
    }
    out
}

/// Kronecker product.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}
