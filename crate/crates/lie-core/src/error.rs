use thiserror::Error;

#[derive(Debug, Error)]
pub enum LieError {
    #[error("element is not homogeneous where a homogeneous one is required")]
    NotHomogeneous,
    #[error("degree {0} exceeds the truncation bound {1}")]
    DegreeOverflow(u32, u32),
    #[error("associative expansion is not a Lie element (smallest word {0:?} is not Lyndon)")]
    NotLieElement(String),
    #[error("envelope element is not group-like (constant term must be 1)")]
    NotGroupLike,
    #[error("logarithm is not primitive: support contains monomial of length {0}")]
    NotPrimitive(usize),
    #[error("map does not respect relation {0:?}: image has nonzero normal form")]
    RelationBroken(String),
    #[error("derivation {0:?} is not well defined: relation {1:?} maps outside the ideal")]
    DerivationIllDefined(String, String),
    #[error("generator index {0} out of range ({1} generators)")]
    BadGenerator(usize, usize),
    #[error("{0}")]
    Unsupported(String),
}
