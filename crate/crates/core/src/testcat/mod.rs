//! Checkers for the test-category hierarchy — aspherical, totally aspherical,
//! locally aspherical presheaves, local test, test, strict test, weak-test
//! evidence — plus interval diagnostics and the canonical isomorphism suite.

mod hierarchy;
mod intervals;
mod iso_suite;

use thiserror::Error;

pub use hierarchy::{
    check_hierarchy, default_catalog, is_locally_aspherical, is_totally_aspherical,
    weak_test_evidence, HierarchyReport,
};
pub use intervals::{
    canonical_multiplicative_interval, delta1_multiplicative, is_strongly_separating,
    is_strongly_separating_on_family, verify_multiplicative, MultiplicativeReport,
    SeparationWitness,
};
pub use iso_suite::{canonical_iso_suite, IsoSuiteReport};

use crate::limits::SizeExceeded;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum TestCatError {
    #[error(transparent)]
    SizeExceeded(#[from] SizeExceeded),
    #[error("catalog entry {name:?} has no terminal object")]
    CatalogEntryLacksTerminal { name: String },
    #[error("canonical isomorphism failed to verify: {0}")]
    IsoVerificationFailed(String),
}
