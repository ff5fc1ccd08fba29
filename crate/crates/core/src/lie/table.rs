//! Structure tables `[A, B] = Σ c_k G_k` and the commutation tables shipped
//! with the crate.

use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::label::GeneratorLabel;
use crate::{Error, Result};

use GeneratorLabel::*;

/// One term `coeff * label` of a commutator expansion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub coeff: Complex64,
    pub label: GeneratorLabel,
}

impl Term {
    pub fn new(coeff: Complex64, label: GeneratorLabel) -> Self {
        Term { coeff, label }
    }
}

/// Commutator expansions keyed by label pair.
///
/// Pairs are stored once in canonical order; the reversed entry is the
/// negation, so antisymmetry holds by construction. A listed pair with no
/// terms records a vanishing bracket.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct StructureTable {
    entries: BTreeMap<(GeneratorLabel, GeneratorLabel), Vec<Term>>,
}

fn negate(terms: &[Term]) -> Vec<Term> {
    terms.iter().map(|t| Term::new(-t.coeff, t.label)).collect()
}

impl StructureTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `[a, b] = Σ terms`. Diagonal pairs are ignored (always zero).
    pub fn insert(&mut self, a: GeneratorLabel, b: GeneratorLabel, terms: Vec<Term>) {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => {
                self.entries.insert((a, b), terms);
            }
            std::cmp::Ordering::Greater => {
                self.entries.insert((b, a), negate(&terms));
            }
            std::cmp::Ordering::Equal => {}
        }
    }

    /// Expansion of `[a, b]`, or `None` when the pair is not listed.
    pub fn entry(&self, a: GeneratorLabel, b: GeneratorLabel) -> Option<Vec<Term>> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => self.entries.get(&(a, b)).cloned(),
            std::cmp::Ordering::Greater => self.entries.get(&(b, a)).map(|t| negate(t)),
            std::cmp::Ordering::Equal => Some(Vec::new()),
        }
    }

    /// Listed pairs in canonical order.
    pub fn pairs(&self) -> impl Iterator<Item = (GeneratorLabel, GeneratorLabel, &[Term])> {
        self.entries
            .iter()
            .map(|((a, b), t)| (*a, *b, t.as_slice()))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Every label that appears as a bracket argument or in an expansion.
    pub fn labels(&self) -> BTreeSet<GeneratorLabel> {
        let mut out = BTreeSet::new();
        for ((a, b), terms) in &self.entries {
            out.insert(*a);
            out.insert(*b);
            out.extend(terms.iter().map(|t| t.label));
        }
        out
    }

    /// Largest coefficient difference over the union of listed pairs; a
    /// pair missing from one table counts as a vanishing bracket there.
    pub fn max_difference(&self, other: &StructureTable) -> f64 {
        let keys: BTreeSet<_> = self.entries.keys().chain(other.entries.keys()).collect();
        let mut worst: f64 = 0.0;
        for key in keys {
            let lhs = coefficient_map(self.entries.get(key));
            let rhs = coefficient_map(other.entries.get(key));
            let labels: BTreeSet<_> = lhs.keys().chain(rhs.keys()).collect();
            for label in labels {
                let zero = Complex64::new(0.0, 0.0);
                let d = lhs.get(label).unwrap_or(&zero) - rhs.get(label).unwrap_or(&zero);
                worst = worst.max(d.norm());
            }
        }
        worst
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&TableJson::from(self)).expect("table serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: TableJson =
            serde_json::from_str(text).map_err(|e| Error::MalformedTable(e.to_string()))?;
        let mut table = StructureTable::new();
        for pair in raw.pairs {
            if pair.a == pair.b && !pair.terms.is_empty() {
                return Err(Error::MalformedTable(format!(
                    "[{0}, {0}] must vanish",
                    pair.a
                )));
            }
            let terms = pair
                .terms
                .into_iter()
                .map(|t| Term::new(Complex64::new(t.coeff[0], t.coeff[1]), t.label))
                .collect();
            table.insert(pair.a, pair.b, terms);
        }
        Ok(table)
    }
}

fn coefficient_map(terms: Option<&Vec<Term>>) -> BTreeMap<GeneratorLabel, Complex64> {
    let mut out = BTreeMap::new();
    for t in terms.into_iter().flatten() {
        *out.entry(t.label).or_insert(Complex64::new(0.0, 0.0)) += t.coeff;
    }
    out
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    pairs: Vec<PairJson>,
}

#[derive(Serialize, Deserialize)]
struct PairJson {
    a: GeneratorLabel,
    b: GeneratorLabel,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: [f64; 2],
    label: GeneratorLabel,
}

impl From<&StructureTable> for TableJson {
    fn from(table: &StructureTable) -> Self {
        TableJson {
            pairs: table
                .pairs()
                .map(|(a, b, terms)| PairJson {
                    a,
                    b,
                    terms: terms
                        .iter()
                        .map(|t| TermJson {
                            coeff: [t.coeff.re, t.coeff.im],
                            label: t.label,
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1.0,
        (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1.0,
        _ => 0.0,
    }
}

fn lbl(kind: char, axis: usize) -> GeneratorLabel {
    GeneratorLabel::triple(kind, axis).expect("axis in 1..=3")
}

/// `[X_i, Y_j] = coeff * ε_ijk Z_k` for every `i, j`.
fn epsilon_rule(table: &mut StructureTable, x: char, y: char, z: char, coeff: f64) {
    for i in 1..=3 {
        for j in 1..=3 {
            let terms = (1..=3)
                .filter_map(|k| {
                    let e = levi_civita(i, j, k);
                    (e != 0.0).then(|| Term::new(Complex64::new(0.0, coeff * e), lbl(z, k)))
                })
                .collect();
            table.insert(lbl(x, i), lbl(y, j), terms);
        }
    }
}

/// `[X_i, Y_j] = coeff * δ_ij Z`.
fn delta_rule(table: &mut StructureTable, x: char, y: char, z: GeneratorLabel, coeff: f64) {
    for i in 1..=3 {
        for j in 1..=3 {
            let terms = if i == j {
                vec![Term::new(Complex64::new(0.0, coeff), z)]
            } else {
                Vec::new()
            };
            table.insert(lbl(x, i), lbl(y, j), terms);
        }
    }
}

/// `[X_i, Y] = coeff * Z_i` for a single generator `Y`.
fn fixed_rule(table: &mut StructureTable, x: char, y: GeneratorLabel, z: Option<char>, coeff: f64) {
    for i in 1..=3 {
        let terms = z
            .map(|z| vec![Term::new(Complex64::new(0.0, coeff), lbl(z, i))])
            .unwrap_or_default();
        table.insert(lbl(x, i), y, terms);
    }
}

fn zero_rule(table: &mut StructureTable, x: char, y: char) {
    for i in 1..=3 {
        for j in 1..=3 {
            table.insert(lbl(x, i), lbl(y, j), Vec::new());
        }
    }
}

/// Dirac's ten-generator table, shared by Sp(4) and O(3,2):
///
/// ```text
/// [L_i, L_j] = iε_ijk L_k    [L_i, K_j] = iε_ijk K_k    [L_i, Q_j] = iε_ijk Q_k
/// [K_i, K_j] = [Q_i, Q_j] = -iε_ijk L_k                 [L_i, S3]  = 0
/// [K_i, Q_j] = -iδ_ij S3     [K_i, S3]  = -iQ_i         [Q_i, S3]  = iK_i
/// ```
pub fn alge11() -> StructureTable {
    let mut t = StructureTable::new();
    epsilon_rule(&mut t, 'L', 'L', 'L', 1.0);
    epsilon_rule(&mut t, 'L', 'K', 'K', 1.0);
    epsilon_rule(&mut t, 'L', 'Q', 'Q', 1.0);
    epsilon_rule(&mut t, 'K', 'K', 'L', -1.0);
    epsilon_rule(&mut t, 'Q', 'Q', 'L', -1.0);
    fixed_rule(&mut t, 'L', S3, None, 0.0);
    delta_rule(&mut t, 'K', 'Q', S3, -1.0);
    fixed_rule(&mut t, 'K', S3, Some('Q'), -1.0);
    fixed_rule(&mut t, 'Q', S3, Some('K'), 1.0);
    t
}

/// The fifteen-generator SL(4,r) / O(3,3) table. The third slot of the
/// printed `[K_i,K_j] = [Q_i,Q_j] = [Q_i,Q_j]` line is read as `[G_i,G_j]`.
pub fn o33gen() -> StructureTable {
    let mut t = StructureTable::new();
    epsilon_rule(&mut t, 'L', 'L', 'L', 1.0);
    epsilon_rule(&mut t, 'S', 'S', 'S', 1.0);
    zero_rule(&mut t, 'L', 'S');
    epsilon_rule(&mut t, 'L', 'K', 'K', 1.0);
    epsilon_rule(&mut t, 'L', 'Q', 'Q', 1.0);
    epsilon_rule(&mut t, 'L', 'G', 'G', 1.0);
    epsilon_rule(&mut t, 'K', 'K', 'L', -1.0);
    epsilon_rule(&mut t, 'Q', 'Q', 'L', -1.0);
    epsilon_rule(&mut t, 'G', 'G', 'L', -1.0);
    delta_rule(&mut t, 'K', 'Q', S3, -1.0);
    delta_rule(&mut t, 'Q', 'G', S1, -1.0);
    delta_rule(&mut t, 'G', 'K', S2, -1.0);
    fixed_rule(&mut t, 'K', S3, Some('Q'), -1.0);
    fixed_rule(&mut t, 'Q', S3, Some('K'), 1.0);
    fixed_rule(&mut t, 'G', S3, None, 0.0);
    fixed_rule(&mut t, 'K', S1, None, 0.0);
    fixed_rule(&mut t, 'Q', S1, Some('G'), -1.0);
    fixed_rule(&mut t, 'G', S1, Some('Q'), 1.0);
    fixed_rule(&mut t, 'K', S2, Some('G'), 1.0);
    fixed_rule(&mut t, 'Q', S2, None, 0.0);
    fixed_rule(&mut t, 'G', S2, Some('K'), -1.0);
    t
}

/// An ordered Sp(2) triple `(A, B, C)` of signed Sp(4) members satisfying
/// `[A, B] = iC`, `[A, C] = -iB`, `[B, C] = -iA`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sp2Triple {
    pub members: [(i8, GeneratorLabel); 3],
}

/// One rotation and two squeezes acting on a single-oscillator phase space,
/// four ways: the same transformation on both oscillators (first two) and
/// opposite squeeze directions in the second phase space (last two).
pub const SP2_TRIPLES: [Sp2Triple; 4] = [
    Sp2Triple {
        members: [(1, S3), (1, K2), (1, Q2)],
    },
    Sp2Triple {
        members: [(1, S3), (-1, Q1), (1, K1)],
    },
    Sp2Triple {
        members: [(1, L3), (1, K2), (-1, K1)],
    },
    Sp2Triple {
        members: [(1, L3), (1, Q1), (1, Q2)],
    },
];

impl Sp2Triple {
    pub fn labels(&self) -> [GeneratorLabel; 3] {
        self.members.map(|(_, l)| l)
    }

    /// The Sp(2) relations rewritten on the unsigned labels:
    /// `[s_a A, s_b B] = i s_c C` gives `[A, B] = i s_c/(s_a s_b) C`.
    pub fn expected_table(&self) -> StructureTable {
        let [(sa, a), (sb, b), (sc, cc)] = self.members;
        let term = |coeff: f64, s_lhs: i8, s_rhs: i8, label| {
            let sign = f64::from(s_rhs) / f64::from(s_lhs);
            vec![Term::new(Complex64::new(0.0, coeff * sign), label)]
        };
        let mut t = StructureTable::new();
        t.insert(a, b, term(1.0, sa * sb, sc, cc));
        t.insert(a, cc, term(-1.0, sa * sc, sb, b));
        t.insert(b, cc, term(-1.0, sb * sc, sa, a));
        t
    }

    pub fn describe(&self) -> String {
        let parts: Vec<String> = self
            .members
            .iter()
            .map(|(s, l)| {
                if *s < 0 {
                    format!("-{l}")
                } else {
                    l.to_string()
                }
            })
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}
