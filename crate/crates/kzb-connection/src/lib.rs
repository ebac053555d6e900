//! The flat connection coefficients of configuration spaces of the torus:
//! K_i(z|τ) = −y_i + Σ_{j≠i} k(z_ij, ad x_i)(t_ij) on the dz_i-directions and
//! Δ(z|τ) = −(1/2πi)Δ_0 − (1/2πi)Σ_m a_{2m}E_{2m+2}(τ)δ_{2m} + (1/2πi)g(z|τ)
//! on the dτ-direction, evaluated as truncated Lie series over the elliptic
//! braid algebras of `lie_core` with coefficients from the theta-function
//! jets of `special_fn`.
//!
//! The residual evaluators check flatness in the z-directions, the mixed
//! τ/z-flatness, the universal classical dynamical Yang–Baxter identity, and
//! the lattice shift laws. All derivatives are analytic (seeded q-series),
//! never finite differences.

pub mod connection;
pub mod equivariance;
pub mod error;
pub mod flatness;
pub mod point;

pub use connection::{
    build_delta, build_delta_directional, build_k, build_k_directional, exp_ad, pair_term,
    BraidAlgebra, BraidKind, DeltaData, Direction, KByStrand, KzbConfig,
};
pub use equivariance::{equivariance_residual, permute_element, EquivarianceKind};
pub use error::KzbError;
pub use flatness::{cdybe_residual, cdybe_scalar_residual, flatness_residual, tau_flatness_residual};
pub use point::{lattice_distance, ConnectionPoint, C64};
