use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpecialFnError {
    /// An argument landed on (or too close to) the period lattice where the
    /// evaluated function has a pole.
    #[error("argument too close to the period lattice (|theta| = {0:.3e})")]
    LatticePole(f64),
    /// A jet was divided by x^k but its low coefficients did not vanish.
    #[error("jet not divisible by the variable (leading residual {0:.3e})")]
    NotDivisible(f64),
    #[error("unknown identity name {0:?}")]
    UnknownIdentity(String),
    #[error("modular parameter must satisfy Im(tau) > 0, got {0}")]
    NotUpperHalfPlane(f64),
}
