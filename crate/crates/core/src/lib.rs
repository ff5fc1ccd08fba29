//! Dirac's two families of four-by-four matrices and the coupled-oscillator
//! phase space they act on.
//!
//! * [`lie`] builds the Majorana gamma bilinears, the Sp(4) and SL(4,r)
//!   oscillator generators and the O(3,2)/O(3,3) rotation-boost generators,
//!   reads structure constants off numerical commutators and checks the
//!   commutation tables and local isomorphisms between the families.
//! * [`fock`] realizes the ten ladder-operator generators on a truncated
//!   two-mode Fock space and provides the Hermite-function, quadrature and
//!   series routes to the reduced density matrix of a two-mode squeezed
//!   ground state and to the thermal oscillator state.
//! * [`phase_space`] is a Gaussian Wigner-function simulator over
//!   `(x1, p1, x2, p2)`: canonical and non-canonical linear transforms,
//!   partial trace, purity, entropy, areas and the squeeze/temperature map.

pub mod error;
pub mod fock;
pub mod lie;
pub mod linalg;
pub mod phase_space;
pub mod report;

pub use error::{Error, Result};
