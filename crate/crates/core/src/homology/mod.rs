//! Nerve construction, normalized integer chain complexes, Smith normal form,
//! homology reports and the asphericity oracles parameterized by localizer.

mod asph;
mod chain;
mod matrix;
mod nerve;
mod snf;

pub use asph::{
    is_aspherical, is_aspherical_morphism, thomason_check, w_class, LocalizerSpec, ThomasonRecord,
};
pub use chain::{homology, ChainComplex, DegreeReport, HomologyReport};
pub use matrix::IntMatrix;
pub use nerve::{nerve, TruncatedNerve};
pub use snf::{cokernel_invariants, smith_normal_form, AbelianInvariants, Snf};
