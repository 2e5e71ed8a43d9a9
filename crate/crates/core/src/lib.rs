//! Finite categories, groupoid-valued presheaves and the machinery to probe
//! them: categories of elements, hom-groupoid adjunctions, nerve homology,
//! fundamental-groupoid localization and the test-category hierarchy checks.
//!
//! Everything operates on fully tabulated finite data, so every law that the
//! library claims to check is checked by exhaustive enumeration. Operations
//! that are undecidable in general (group isomorphism, W∞ membership) return
//! three-valued [`grpd::Verdict`]s carrying machine-checkable evidence.

pub mod adjoints;
pub mod corpus;
pub mod doc;
pub mod elements;
pub mod fincat;
pub mod grpd;
pub mod homology;
pub mod limits;
pub(crate) mod par;
pub mod presheaf;
pub mod testcat;

pub use fincat::{FinCategory, FinFunctor, NatTransf};
pub use grpd::{Answer, FinGroupoid, FpGroupoid, GroupPresentation, Verdict};
pub use homology::LocalizerSpec;
pub use limits::Limits;
pub use presheaf::{CatPresheaf, GrpdPresheaf, Interval, PresheafMorphism, SetPresheaf};
