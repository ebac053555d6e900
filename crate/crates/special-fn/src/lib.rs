//! Numerical layer: theta and eta functions, Eisenstein series, and the jets
//! in the auxiliary variable(s) used by the elliptic connection coefficients.
//!
//! Everything is computed from q-product/series formulas (q = e^{2πiτ},
//! |q| < 1) with a configurable number of terms. Derivatives are analytic:
//! scalars carry one directional derivative slot ([`dual::DualC`]), so
//! τ- or z-derivatives are evaluated by seeding the direction, never by
//! finite differences.
//!
//! [`identities::check_scalar_identity`] evaluates the scalar identities that
//! the flatness/modularity proofs of the elliptic connection reduce to, at
//! random sample points, and reports the maximum residual.

pub mod dual;
pub mod error;
pub mod identities;
pub mod jet;
pub mod series;
pub mod theta;

pub use dual::DualC;
pub use error::SpecialFnError;
pub use identities::{check_scalar_identity, IdentityName, SampleConfig};
pub use jet::{Jet, Jet2};
pub use series::{a2n, a2n_table, bernoulli_numbers, eisenstein, even_multipliers, phi_jet};
pub use theta::{eta, g_jet, g_jet0, h_unit_jet, k_jet, theta, theta_dz, theta_jet};

pub type C64 = num_complex::Complex64;

/// 2πi.
pub fn two_pi_i() -> C64 {
    C64::new(0.0, 2.0 * std::f64::consts::PI)
}
