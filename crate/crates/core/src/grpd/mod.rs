//! Finite groupoids, fundamental-groupoid localization of a finite category,
//! and the bounded decision machinery behind the W₁ localizer: presentations,
//! coset enumeration and three-valued comparison verdicts.

mod compare;
mod coset;
mod groupoid;
mod localize;
mod presentation;
mod verdict;

pub use compare::{answer_label, aut_group_table, fp_equivalence, group_compare, groupoid_equivalence, w1_class};
pub use coset::{enumerate_cosets, CosetOutcome, FiniteGroupTable};
pub use groupoid::{FinGroupoid, GroupoidError};
pub use localize::{induced_map, localize, vertex_group, FpComponent, FpGroupoid, FpGroupoidMap, UnknownComponent};
pub use presentation::{GroupPresentation, Letter, Word};
pub use verdict::{Answer, Evidence, Verdict};
