use num_complex::Complex64;

use super::family::GeneratorSet;
use super::label::GeneratorLabel;
use super::table::{StructureTable, Term};
use crate::linalg::{check_same_dim, combine, commutator, max_abs_diff, CMatrix, LeastSquares};
use crate::report::{PairResidual, VerificationReport};
use crate::{Error, Result};

/// Coefficients below this modulus are treated as zero when reading
/// structure constants off a commutator.
pub const COEFFICIENT_ZERO: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub coeffs: Vec<(GeneratorLabel, Complex64)>,
    /// Max-abs entry of `X - Σ c_k G_k`.
    pub residual: f64,
}

impl Decomposition {
    pub fn coeff(&self, label: GeneratorLabel) -> Complex64 {
        self.coeffs
            .iter()
            .find(|(l, _)| *l == label)
            .map_or(Complex64::new(0.0, 0.0), |(_, c)| *c)
    }

    pub fn is_exact(&self, tolerance: f64) -> bool {
        self.residual <= tolerance
    }

    fn terms(&self) -> Vec<Term> {
        self.coeffs
            .iter()
            .filter(|(_, c)| c.norm() > COEFFICIENT_ZERO)
            .map(|&(l, c)| Term::new(c, l))
            .collect()
    }
}

/// Least-squares expansion of `x` in the members of `basis`.
pub fn decompose(x: &CMatrix, basis: &GeneratorSet) -> Result<Decomposition> {
    if let Some(first) = basis.matrices().first() {
        check_same_dim(first, x)?;
    }
    Ok(decompose_with(
        &LeastSquares::new(&basis.matrices()),
        basis,
        x,
    ))
}

fn decompose_with(solver: &LeastSquares<'_>, basis: &GeneratorSet, x: &CMatrix) -> Decomposition {
    let (coeffs, residual) = solver.solve(x);
    Decomposition {
        coeffs: basis.labels().into_iter().zip(coeffs).collect(),
        residual,
    }
}

/// Computed structure constants of a set together with the brackets that
/// left the span.
#[derive(Debug, Clone)]
pub struct StructureComputation {
    pub table: StructureTable,
    /// Pairs whose commutator residual exceeds the tolerance.
    pub non_closure: Vec<PairResidual>,
}

impl StructureComputation {
    pub fn is_closed(&self) -> bool {
        self.non_closure.is_empty()
    }
}

/// Decomposes every bracket of the set in its own basis.
pub fn structure_table(set: &GeneratorSet, tolerance: f64) -> StructureComputation {
    let mut table = StructureTable::new();
    let mut non_closure = Vec::new();
    let solver = LeastSquares::new(&set.matrices());
    let members: Vec<_> = set.iter().collect();
    for (i, &(a, ma)) in members.iter().enumerate() {
        for &(b, mb) in &members[i + 1..] {
            let bracket = commutator(ma, mb).expect("set members share a dimension");
            let d = decompose_with(&solver, set, &bracket);
            if d.residual > tolerance {
                non_closure.push(PairResidual {
                    a,
                    b,
                    residual: d.residual,
                });
            }
            table.insert(a, b, d.terms());
        }
    }
    StructureComputation { table, non_closure }
}

/// Checks every listed bracket of `expected` on the matrices of `set`.
pub fn verify_algebra(
    set: &GeneratorSet,
    expected: &StructureTable,
    tolerance: f64,
) -> Result<VerificationReport> {
    for label in expected.labels() {
        set.matrix(label)?;
    }
    let mut residuals = Vec::with_capacity(expected.len());
    for (a, b, terms) in expected.pairs() {
        let bracket = commutator(set.matrix(a)?, set.matrix(b)?)?;
        let mats: Vec<&CMatrix> = terms
            .iter()
            .map(|t| set.matrix(t.label))
            .collect::<Result<_>>()?;
        let coeffs: Vec<Complex64> = terms.iter().map(|t| t.coeff).collect();
        let rhs = if mats.is_empty() {
            CMatrix::zeros(set.dim(), set.dim())
        } else {
            combine(&mats, &coeffs)
        };
        residuals.push(PairResidual {
            a,
            b,
            residual: max_abs_diff(&bracket, &rhs),
        });
    }
    Ok(VerificationReport::new(
        set.kind().to_string(),
        tolerance,
        residuals,
    ))
}

/// Compares the computed structure tables of two sets with identical
/// labels. The residual of a pair is its largest coefficient difference,
/// or its non-closure residual when larger.
pub fn check_isomorphism(
    a: &GeneratorSet,
    b: &GeneratorSet,
    tolerance: f64,
) -> Result<VerificationReport> {
    let (mut la, mut lb) = (a.labels(), b.labels());
    la.sort();
    lb.sort();
    if la != lb {
        return Err(Error::LabelMismatch);
    }
    let ta = structure_table(a, tolerance);
    let tb = structure_table(b, tolerance);
    let leak = |comp: &StructureComputation, x, y| {
        comp.non_closure
            .iter()
            .find(|r| (r.a, r.b) == (x, y) || (r.a, r.b) == (y, x))
            .map_or(0.0, |r| r.residual)
    };
    let mut residuals = Vec::new();
    for (i, &x) in la.iter().enumerate() {
        for &y in &la[i + 1..] {
            let mut single_a = StructureTable::new();
            let mut single_b = StructureTable::new();
            single_a.insert(x, y, ta.table.entry(x, y).unwrap_or_default());
            single_b.insert(x, y, tb.table.entry(x, y).unwrap_or_default());
            let residual = single_a
                .max_difference(&single_b)
                .max(leak(&ta, x, y))
                .max(leak(&tb, x, y));
            residuals.push(PairResidual {
                a: x,
                b: y,
                residual,
            });
        }
    }
    Ok(VerificationReport::new(
        format!("{} ~ {}", a.kind(), b.kind()),
        tolerance,
        residuals,
    ))
}
