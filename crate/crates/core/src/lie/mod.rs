//! Generator families, structure constants and algebra checks.

mod algebra;
mod correspondence;
mod dirac;
mod family;
mod label;
mod table;

pub use algebra::{
    check_isomorphism, decompose, structure_table, verify_algebra, Decomposition,
    StructureComputation,
};
pub use correspondence::{
    table1_correspondence, CorrespondenceReport, CorrespondenceRow, MatchStatus,
};
pub use dirac::{clifford_residual, gamma5_anticommutation_residual};
pub use family::{
    build_generator_set, build_generator_set_by_tag, majorana_gammas, o32_printed, sl4r_printed,
    Family, GeneratorSet, SetKind,
};
pub use label::{GeneratorLabel, ALGEBRA_LABELS, DIRAC_LABELS, EXTENSION_LABELS, SP4_LABELS};
pub use table::{alge11, o33gen, Sp2Triple, StructureTable, Term, SP2_TRIPLES};
