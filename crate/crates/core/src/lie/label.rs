use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::Error;

/// Name of a generator: the fifteen rotation/boost labels of the oscillator
/// algebras and the fifteen gamma bilinears of the Dirac family.
///
/// The declaration order is the canonical order used for label pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum GeneratorLabel {
    L1,
    L2,
    L3,
    S1,
    S2,
    S3,
    K1,
    K2,
    K3,
    Q1,
    Q2,
    Q3,
    G1,
    G2,
    G3,
    /// `γ1`
    Gamma1,
    /// `γ2`
    Gamma2,
    /// `γ3`
    Gamma3,
    /// `γ0`
    Gamma0,
    /// `γ5 = iγ0γ1γ2γ3`
    Gamma5,
    /// `iγ5γ1`
    Axial1,
    /// `iγ5γ2`
    Axial2,
    /// `iγ5γ3`
    Axial3,
    /// `iγ5γ0`
    Axial0,
    /// `iγ0γ1`
    Tensor01,
    /// `iγ0γ2`
    Tensor02,
    /// `iγ0γ3`
    Tensor03,
    /// `iγ1γ2`
    Tensor12,
    /// `iγ2γ3`
    Tensor23,
    /// `iγ3γ1`
    Tensor31,
}

use GeneratorLabel::*;

const NAMES: [(GeneratorLabel, &str); 30] = [
    (L1, "L1"),
    (L2, "L2"),
    (L3, "L3"),
    (S1, "S1"),
    (S2, "S2"),
    (S3, "S3"),
    (K1, "K1"),
    (K2, "K2"),
    (K3, "K3"),
    (Q1, "Q1"),
    (Q2, "Q2"),
    (Q3, "Q3"),
    (G1, "G1"),
    (G2, "G2"),
    (G3, "G3"),
    (Gamma1, "gamma1"),
    (Gamma2, "gamma2"),
    (Gamma3, "gamma3"),
    (Gamma0, "gamma0"),
    (Gamma5, "gamma5"),
    (Axial1, "ig5g1"),
    (Axial2, "ig5g2"),
    (Axial3, "ig5g3"),
    (Axial0, "ig5g0"),
    (Tensor01, "ig0g1"),
    (Tensor02, "ig0g2"),
    (Tensor03, "ig0g3"),
    (Tensor12, "ig1g2"),
    (Tensor23, "ig2g3"),
    (Tensor31, "ig3g1"),
];

/// The fifteen SL(4,r) / O(3,3) labels.
pub const ALGEBRA_LABELS: [GeneratorLabel; 15] =
    [L1, L2, L3, S1, S2, S3, K1, K2, K3, Q1, Q2, Q3, G1, G2, G3];

/// The ten Sp(4) / O(3,2) labels.
pub const SP4_LABELS: [GeneratorLabel; 10] = [L1, L2, L3, S3, K1, K2, K3, Q1, Q2, Q3];

/// The five generators that extend Sp(4) to SL(4,r).
pub const EXTENSION_LABELS: [GeneratorLabel; 5] = [S1, S2, G1, G2, G3];

/// The fifteen Majorana bilinears, identity excluded.
pub const DIRAC_LABELS: [GeneratorLabel; 15] = [
    Gamma1, Gamma2, Gamma3, Gamma0, Gamma5, Axial1, Axial2, Axial3, Axial0, Tensor01, Tensor02,
    Tensor03, Tensor12, Tensor23, Tensor31,
];

impl GeneratorLabel {
    pub fn name(self) -> &'static str {
        NAMES[self as usize].1
    }

    /// Rotation/boost triples: `L`, `S`, `K`, `Q`, `G` indexed by axis 1..=3.
    pub fn triple(kind: char, axis: usize) -> Option<Self> {
        let base = match kind {
            'L' => 0,
            'S' => 3,
            'K' => 6,
            'Q' => 9,
            'G' => 12,
            _ => return None,
        };
        (1..=3).contains(&axis).then(|| NAMES[base + axis - 1].0)
    }

    pub fn is_dirac(self) -> bool {
        (self as usize) >= Gamma1 as usize
    }
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GeneratorLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NAMES
            .iter()
            .find(|(_, name)| name.eq_ignore_ascii_case(s))
            .map(|(label, _)| *label)
            .ok_or_else(|| Error::UnknownLabel(s.to_string()))
    }
}

impl From<GeneratorLabel> for String {
    fn from(label: GeneratorLabel) -> Self {
        label.name().to_string()
    }
}

impl TryFrom<String> for GeneratorLabel {
    type Error = Error;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_follow_declaration_order() {
        for (k, (label, _)) in NAMES.iter().enumerate() {
            assert_eq!(*label as usize, k);
        }
    }

    #[test]
    fn parse_roundtrip() {
        for (label, name) in NAMES {
            assert_eq!(name.parse::<GeneratorLabel>().unwrap(), label);
            assert_eq!(label.to_string(), name);
        }
        assert_eq!("g3".parse::<GeneratorLabel>().unwrap(), G3);
        assert!("L4".parse::<GeneratorLabel>().is_err());
    }

    #[test]
    fn label_counts() {
        assert_eq!(ALGEBRA_LABELS.len(), 15);
        assert_eq!(SP4_LABELS.len(), 10);
        assert!(SP4_LABELS
            .iter()
            .all(|l| !EXTENSION_LABELS.contains(l) && ALGEBRA_LABELS.contains(l)));
        assert!(DIRAC_LABELS.iter().all(|l| l.is_dirac()));
        assert!(ALGEBRA_LABELS.iter().all(|l| !l.is_dirac()));
    }

    #[test]
    fn triples() {
        assert_eq!(GeneratorLabel::triple('Q', 2), Some(Q2));
        assert_eq!(GeneratorLabel::triple('G', 3), Some(G3));
        assert_eq!(GeneratorLabel::triple('G', 4), None);
        assert_eq!(GeneratorLabel::triple('X', 1), None);
    }
}
