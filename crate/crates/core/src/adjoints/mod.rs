//! The right adjoints to the elements construction: hom-groupoids, the
//! groupoid-valued presheaves Hom(i(-), C), the counit evaluated at chosen
//! terminal objects, the adjunction bijection with its triangle identities,
//! the slice comparison, and the sieve classifier of strongly separating
//! intervals.

mod counit;
mod diagram;
mod homgrpd;
mod istar;
mod sieve;
mod theta;
mod transpose;

use thiserror::Error;

pub use counit::counit_alpha;
pub use diagram::{slice_diagram, slice_diagram_with_tables, CatDiagram};
pub use homgrpd::{hom_groupoid, hom_set_discrete, HomGroupoid};
pub use istar::{
    i_star, i_star_map, i_star_product_comparison, istar_delta1_interval, IStarResult,
};
pub use sieve::{sieve_classifier, SieveClassifier};
pub use theta::{theta_slice_iso, ThetaWitness};
pub use transpose::{
    adjunction_transpose, adjunction_unit, slice_adjunction_ctx, transpose_functor_to_psh,
    transposed_counit, SliceAdjunctionCtx, TransposeResult,
};

use crate::limits::SizeExceeded;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum AdjointsError {
    #[error(transparent)]
    SizeExceeded(#[from] SizeExceeded),
    #[error("diagram value at {object:?} has no (declared) terminal object")]
    MissingTerminalObject { object: String },
    #[error("declared terminal object of the value at {object:?} is not terminal")]
    TerminalNotVerified { object: String },
    #[error("diagram is not covariantly functorial at {0}")]
    NotFunctorial(String),
    #[error("canonical comparison failed to verify as an isomorphism: {0}")]
    IsoVerificationFailed(String),
    #[error("interval is not strongly separating at base object {object:?}")]
    NotStronglySeparating { object: String },
}
