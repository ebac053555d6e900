use thiserror::Error;

#[derive(Debug, Error)]
pub enum KzbError {
    /// A marked-point difference z_i - z_j came within `margin` of the lattice
    /// Z + tau*Z (in lattice coordinates), where the connection has poles.
    #[error("z_{i} - z_{j} is within {margin} of the period lattice (distance {dist:.3e})")]
    LatticeCollision { i: usize, j: usize, dist: f64, margin: f64 },

    #[error("tau must lie in the upper half-plane (got im = {0})")]
    TauNotInUpperHalfPlane(f64),

    #[error("need at least two marked points, got {0}")]
    TooFewPoints(usize),

    #[error("strand index {0} out of range for n = {1}")]
    StrandOutOfRange(usize, usize),

    #[error("configuration has {0} points but the algebra has {1} strands")]
    StrandMismatch(usize, usize),

    #[error("indices must be pairwise distinct: {0:?}")]
    DegenerateIndices(Vec<usize>),

    #[error("{0} requires a finite-dimensional realization; see the realizations crate")]
    MissingRealization(&'static str),

    #[error("{0} is only defined over the reduced algebra (Σx = Σy = 0)")]
    ReducedOnly(&'static str),

    #[error(transparent)]
    Algebra(#[from] lie_core::LieError),
}
