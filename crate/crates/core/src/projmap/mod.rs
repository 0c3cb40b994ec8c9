//! Projective points and rational self-maps of projective space.

mod map;
mod point;
mod word;

pub use map::{BirationalMap, JacobianCheck, Multiplicity, Order};
pub use point::ProjectivePoint;
pub use word::{word_to_map, BindingMode, GeneratorSet, Letter, MapWord};

use crate::algebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MapError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("components are not homogeneous of a common degree")]
    Inhomogeneous,
    #[error("all components vanish")]
    AllZero,
    #[error("composition collapsed to zero")]
    ZeroComposition,
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("map is indeterminate at {0}")]
    Indeterminate(String),
    #[error("jacobian determinant is identically zero")]
    ZeroJacobian,
    #[error("claimed factor {0} is free of projective variables")]
    BadFactor(String),
    #[error("unknown generator {0}")]
    UnknownLetter(String),
    #[error("parameter {0} is unbound")]
    UnboundParameter(String),
    #[error("bad value for {name}: {msg}")]
    BadBinding { name: String, msg: String },
    #[error("malformed word at {pos}: {msg}")]
    BadWord { pos: usize, msg: String },
}
