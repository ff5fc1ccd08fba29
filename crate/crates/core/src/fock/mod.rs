//! Ladder-operator realization of the ten oscillator generators, oscillator
//! eigenfunctions and quadrature, the squeezed two-mode ground state and the
//! thermal state.

mod density;
mod hermite;
mod operators;
mod thermal;

pub use density::{
    entropy_closed_form, expansion_coefficient, expansion_overlap, moments, psi_eta, psi_norm,
    purity_closed_form, purity_quadrature, quadrature, rho_partial_trace, rho_reduced, rho_series,
    Moments, SeriesState, QUADRATURE_NODES, TAIL_WARNING,
};
pub use hermite::{phi, phi_table, GaussHermite, MAX_K};
pub use operators::{
    basis_state, dirac_tenfold, dirac_tenfold_as_printed, fock_bracket_residuals, fock_index,
    ladder_operators, literal_fock_residuals, verify_fock_commutators, FockOperator, Subspace,
};
pub use thermal::{thermal_entropy, wigner_radius, ThermalState};
