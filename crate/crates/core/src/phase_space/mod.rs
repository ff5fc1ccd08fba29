//! Gaussian Wigner functions over `(x1, p1, x2, p2)` and the linear
//! transformations generated by the fifteen 4x4 generators.

mod gaussian;
mod temperature;
mod transform;

pub use gaussian::{gaussian_entropy, gaussian_purity, GaussianState, SUB_VACUUM_TOL};
pub use temperature::{eta_from_temperature, temperature_from_eta, TemperatureMap};
pub use transform::{
    generator_to_transform, is_canonical, two_mode_squeeze, PhaseTransform, SymplecticForm,
};
