//! Theorem-based classification of finite 2-groups and the catalog
//! verification harness.

mod catalog;
mod classify;
mod verify;

use thiserror::Error;

use crate::group::GroupError;
use crate::presentation::PresentationError;
use crate::unit_lab::UnitLabError;

pub use catalog::{builtin_catalog, catalog_entry, CatalogEntry, Recipe};
pub use classify::{theorem_classify, Classification, Family};
pub use verify::{
    abelian_group, computed_verdict, dimension_identities_hold, phi_equals_omega_central_of_order_4,
    run_paper_verification, verify_entry, CheckReport, EntryReport, FieldVerdict, VerificationReport,
    VerificationConfig, OMEGA_IDEAL_GROUPS, PHI_EQUALS_OMEGA_GROUPS, SQUARE_ZERO_ABELIAN,
};

#[derive(Debug, Error)]
pub enum ClassifierError {
    #[error("group of order {0} is not a 2-group")]
    NotATwoGroup(usize),
    #[error("catalog entry {name}: expected order {expected}, built {found}")]
    CatalogOrder {
        name: String,
        expected: usize,
        found: usize,
    },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    UnitLab(#[from] UnitLabError),
}
