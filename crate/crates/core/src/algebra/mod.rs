//! Group algebras KG over GF(2) and GF(4), and the GF(2) linear algebra
//! used to describe their subspaces.

mod bits;
mod element;
mod field;
mod literal;
mod subspace;

use thiserror::Error;

use crate::presentation::PresentationError;

pub use bits::BitVec;
pub use element::{AlgebraElement, GroupAlgebra};
pub use field::{Field, Gf4};
pub use subspace::{kernel_of_additive_map, kernel_on_subspace, SubspaceBasis};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("operands belong to different algebras")]
    Mismatch,
    #[error("coefficient outside the field: {0}")]
    CoefficientOutsideField(String),
    #[error("element does not have augmentation 1")]
    NotNormalized,
    #[error("1 - u is not nilpotent")]
    NotNilpotent,
    #[error("map failed the additivity spot check")]
    NonAdditive,
    #[error("literal: {0}")]
    Syntax(#[from] PresentationError),
}
