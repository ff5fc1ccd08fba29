//! Explicit generator matrices of every family.
//!
//! All entries are exact multiples of `1/2` and `i/2`, so construction is
//! exact in double precision.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::label::{GeneratorLabel, ALGEBRA_LABELS, DIRAC_LABELS, SP4_LABELS};
use crate::linalg::{
    block2, block_diag, c, identity, off_diag, pauli, stack_rank, zeros, CMatrix, I, ONE,
};
use crate::{Error, Result};

use GeneratorLabel::*;

/// The five explicit matrix families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Dirac gamma matrices in the Majorana representation and their
    /// fifteen bilinears (4x4).
    #[serde(rename = "dirac_gamma")]
    DiracGamma,
    /// Dirac's ten oscillator matrices, generators of Sp(4) (4x4).
    #[serde(rename = "sp4_4")]
    Sp4,
    /// Sp(4) plus the five non-canonical generators: SL(4,r) (4x4).
    #[serde(rename = "sl4r_4")]
    Sl4r,
    /// O(3,2) on `(x, y, z, t, s)` (5x5).
    #[serde(rename = "o32_5")]
    O32,
    /// O(3,3) on `(x, y, z, t, s, s')` (6x6).
    #[serde(rename = "o33_6")]
    O33,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::DiracGamma,
        Family::Sp4,
        Family::Sl4r,
        Family::O32,
        Family::O33,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::DiracGamma => "dirac_gamma",
            Family::Sp4 => "sp4_4",
            Family::Sl4r => "sl4r_4",
            Family::O32 => "o32_5",
            Family::O33 => "o33_6",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Family::DiracGamma | Family::Sp4 | Family::Sl4r => 4,
            Family::O32 => 5,
            Family::O33 => 6,
        }
    }

    pub fn labels(self) -> &'static [GeneratorLabel] {
        match self {
            Family::DiracGamma => &DIRAC_LABELS,
            Family::Sp4 | Family::O32 => &SP4_LABELS,
            Family::Sl4r | Family::O33 => &ALGEBRA_LABELS,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|fam| fam.tag() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// What a [`GeneratorSet`] represents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetKind {
    Family(Family),
    /// Ladder-operator realization on a truncated two-mode Fock space.
    Fock {
        nmax: usize,
    },
    /// A selection of members taken from another set.
    Subset(String),
}

impl fmt::Display for SetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetKind::Family(fam) => write!(f, "{fam}"),
            SetKind::Fock { nmax } => write!(f, "fock(nmax={nmax})"),
            SetKind::Subset(desc) => f.write_str(desc),
        }
    }
}

/// A named family of equally sized generator matrices.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    kind: SetKind,
    dim: usize,
    members: Vec<(GeneratorLabel, CMatrix)>,
}

impl GeneratorSet {
    /// Validates that the members are non-empty, square, equally sized and
    /// uniquely labelled.
    pub fn new(kind: SetKind, members: Vec<(GeneratorLabel, CMatrix)>) -> Result<Self> {
        let dim = members
            .first()
            .map(|(_, m)| m.nrows())
            .ok_or_else(|| Error::MalformedTable("generator set has no members".into()))?;
        for (label, m) in &members {
            if m.nrows() != dim || m.ncols() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: m.nrows().max(m.ncols()),
                });
            }
            if members.iter().filter(|(l, _)| l == label).count() > 1 {
                return Err(Error::MalformedTable(format!("duplicate label {label}")));
            }
        }
        Ok(GeneratorSet { kind, dim, members })
    }

    pub fn kind(&self) -> &SetKind {
        &self.kind
    }

    pub fn family(&self) -> Option<Family> {
        match self.kind {
            SetKind::Family(f) => Some(f),
            _ => None,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn labels(&self) -> Vec<GeneratorLabel> {
        self.members.iter().map(|(l, _)| *l).collect()
    }

    pub fn contains(&self, label: GeneratorLabel) -> bool {
        self.members.iter().any(|(l, _)| *l == label)
    }

    pub fn get(&self, label: GeneratorLabel) -> Option<&CMatrix> {
        self.members
            .iter()
            .find(|(l, _)| *l == label)
            .map(|(_, m)| m)
    }

    /// Like [`get`](Self::get) but reports a missing label as an error.
    pub fn matrix(&self, label: GeneratorLabel) -> Result<&CMatrix> {
        self.get(label).ok_or_else(|| Error::LabelNotInSet {
            label: label.to_string(),
            family: self.kind.to_string(),
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = (GeneratorLabel, &CMatrix)> {
        self.members.iter().map(|(l, m)| (*l, m))
    }

    pub fn matrices(&self) -> Vec<&CMatrix> {
        self.members.iter().map(|(_, m)| m).collect()
    }

    /// Keeps the listed members, in the listed order.
    pub fn subset(&self, labels: &[GeneratorLabel]) -> Result<GeneratorSet> {
        let members = labels
            .iter()
            .map(|&l| self.matrix(l).map(|m| (l, m.clone())))
            .collect::<Result<Vec<_>>>()?;
        let names: Vec<&str> = labels.iter().map(|l| l.name()).collect();
        GeneratorSet::new(
            SetKind::Subset(format!("{}{{{}}}", self.kind, names.join(","))),
            members,
        )
    }

    /// Rank of the flattened member stack.
    pub fn rank(&self) -> usize {
        stack_rank(&self.matrices(), 1e-10)
    }

    pub fn is_linearly_independent(&self) -> bool {
        self.rank() == self.len()
    }
}

/// Builds one of the five explicit families.
pub fn build_generator_set(family: Family) -> GeneratorSet {
    let members = match family {
        Family::DiracGamma => dirac_members(),
        Family::Sp4 => sp4_members(),
        Family::Sl4r => sl4r_members(),
        Family::O32 => o32_members(),
        Family::O33 => o33_members(),
    };
    GeneratorSet::new(SetKind::Family(family), members).expect("explicit families are well formed")
}

/// Same as [`build_generator_set`] but parses the family tag first.
pub fn build_generator_set_by_tag(tag: &str) -> Result<GeneratorSet> {
    Ok(build_generator_set(tag.parse()?))
}

fn half(m: CMatrix) -> CMatrix {
    m * c(0.5, 0.0)
}

fn half_i(m: CMatrix) -> CMatrix {
    m * c(0.0, 0.5)
}

/// The four gamma matrices `(γ1, γ2, γ3, γ0)` in the Majorana representation.
pub fn majorana_gammas() -> [CMatrix; 4] {
    let (s1, s2, s3) = pauli();
    let z = zeros(2);
    [
        block_diag(&s3, &s3) * I,
        block2(&z, &(-&s2), &s2, &z),
        block_diag(&s1, &s1) * (-I),
        block2(&z, &s2, &s2, &z),
    ]
}

fn dirac_members() -> Vec<(GeneratorLabel, CMatrix)> {
    let [g1, g2, g3, g0] = majorana_gammas();
    let g5 = &g0 * &g1 * &g2 * &g3 * I;
    let axial = |g: &CMatrix| (&g5 * g) * I;
    let tensor = |a: &CMatrix, b: &CMatrix| (a * b) * I;
    vec![
        (Gamma1, g1.clone()),
        (Gamma2, g2.clone()),
        (Gamma3, g3.clone()),
        (Gamma0, g0.clone()),
        (Gamma5, g5.clone()),
        (Axial1, axial(&g1)),
        (Axial2, axial(&g2)),
        (Axial3, axial(&g3)),
        (Axial0, axial(&g0)),
        (Tensor01, tensor(&g0, &g1)),
        (Tensor02, tensor(&g0, &g2)),
        (Tensor03, tensor(&g0, &g3)),
        (Tensor12, tensor(&g1, &g2)),
        (Tensor23, tensor(&g2, &g3)),
        (Tensor31, tensor(&g3, &g1)),
    ]
}

fn sp4_members() -> Vec<(GeneratorLabel, CMatrix)> {
    let (s1, s2, s3) = pauli();
    let id = identity(2);
    vec![
        (L1, half(off_diag(&s2, &s2)) * (-ONE)),
        (L2, half_i(off_diag(&(-&id), &id))),
        (L3, half(block_diag(&(-&s2), &s2))),
        (S3, half(block_diag(&s2, &s2))),
        (K1, half_i(block_diag(&s1, &(-&s1)))),
        (K2, half_i(block_diag(&s3, &s3))),
        (K3, half_i(off_diag(&s1, &s1)) * (-ONE)),
        (Q1, half_i(block_diag(&(-&s3), &s3))),
        (Q2, half_i(block_diag(&s1, &s1))),
        (Q3, half_i(off_diag(&s3, &s3))),
    ]
}

/// The five SL(4,r) extension matrices exactly as printed alongside the
/// radial-expansion generator `G3`, including the printed sign of `S2`.
fn printed_extension() -> Vec<(GeneratorLabel, CMatrix)> {
    let (s1, s2, s3) = pauli();
    let id = identity(2);
    vec![
        (S1, half_i(off_diag(&s3, &(-&s3)))),
        (S2, half_i(off_diag(&(-&s1), &s1))),
        (G1, half_i(off_diag(&id, &id))),
        (G2, half(off_diag(&(-&s2), &s2))),
        (G3, half_i(block_diag(&id, &(-&id)))),
    ]
}

/// The fifteen 4x4 matrices with every entry as printed. Differs from the
/// [`Family::Sl4r`] family only in the sign of `S2`: the printed `S2`
/// satisfies `[S1, S2] = -iS3`, breaking the `[S_i, S_j] = iε_ijk S_k`
/// relation that the six-by-six `S_i` obey.
pub fn sl4r_printed() -> GeneratorSet {
    let mut members = sp4_members();
    members.extend(printed_extension());
    sort_by_labels(&mut members, &ALGEBRA_LABELS);
    GeneratorSet::new(SetKind::Subset("sl4r_4(as printed)".into()), members)
        .expect("printed matrices are well formed")
}

fn sl4r_members() -> Vec<(GeneratorLabel, CMatrix)> {
    let mut members = sp4_members();
    for (label, m) in printed_extension() {
        let m = if label == S2 { -m } else { m };
        members.push((label, m));
    }
    sort_by_labels(&mut members, &ALGEBRA_LABELS);
    members
}

fn sort_by_labels(members: &mut [(GeneratorLabel, CMatrix)], order: &[GeneratorLabel]) {
    members.sort_by_key(|(l, _)| order.iter().position(|o| o == l).unwrap_or(usize::MAX));
}

/// Three-by-three blocks `A_i` (rotations), `B_i`, `C_i`, `D_i` (boost
/// couplings to the first, second and third time axis).
fn o33_blocks(axis: usize) -> [CMatrix; 4] {
    let mut a = zeros(3);
    let (j, k) = [(1, 2), (2, 0), (0, 1)][axis];
    a[(j, k)] = -I;
    a[(k, j)] = I;
    let unit = |col: usize| {
        let mut m = zeros(3);
        m[(axis, col)] = I;
        m
    };
    [a, unit(0), unit(1), unit(2)]
}

fn o33_members() -> Vec<(GeneratorLabel, CMatrix)> {
    let z = zeros(3);
    let mut members = Vec::with_capacity(15);
    for axis in 0..3 {
        let [a, b, cc, d] = o33_blocks(axis);
        let n = axis + 1;
        let lbl = |kind| GeneratorLabel::triple(kind, n).expect("axis in range");
        members.push((lbl('L'), block_diag(&a, &z)));
        members.push((lbl('S'), block_diag(&z, &a)));
        members.push((lbl('K'), off_diag(&b, &b.transpose())));
        members.push((lbl('Q'), off_diag(&cc, &cc.transpose())));
        members.push((lbl('G'), off_diag(&d, &d.transpose())));
    }
    sort_by_labels(&mut members, &ALGEBRA_LABELS);
    members
}

/// The four five-by-five matrices printed for the coordinates
/// `(x, y, z, t, s)`.
pub fn o32_printed() -> Vec<(GeneratorLabel, CMatrix)> {
    let entry = |pairs: &[(usize, usize)]| {
        let mut m = zeros(5);
        for &(r, col) in pairs {
            m[(r, col)] = I;
        }
        m
    };
    let mut l3 = zeros(5);
    l3[(0, 1)] = -I;
    l3[(1, 0)] = I;
    let mut s3 = zeros(5);
    s3[(3, 4)] = -I;
    s3[(4, 3)] = I;
    vec![
        (L3, l3),
        (K3, entry(&[(2, 3), (3, 2)])),
        (Q3, entry(&[(2, 4), (4, 2)])),
        (S3, s3),
    ]
}

fn o32_members() -> Vec<(GeneratorLabel, CMatrix)> {
    let printed = o32_printed();
    let o33 = o33_members();
    SP4_LABELS
        .iter()
        .map(|&label| {
            let m = printed
                .iter()
                .find(|(l, _)| *l == label)
                .map(|(_, m)| m.clone())
                .unwrap_or_else(|| {
                    let full = &o33.iter().find(|(l, _)| *l == label).expect("o33 label").1;
                    full.view((0, 0), (5, 5)).into_owned()
                });
            (label, m)
        })
        .collect()
}
