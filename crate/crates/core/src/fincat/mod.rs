//! Finite categories as validated composition tables, together with functors,
//! natural transformations and the standard constructions on them.

mod build;
mod category;
mod fibration;
mod functor;
mod iso;
mod slice;

pub use build::{
    cyclic_group, delta, discrete, empty, free_iso, idempotent_monoid, opposite, poset, product,
    terminal, StandardSpec,
};
pub use category::{CatError, FinCategory, ProductStructure, RawCategory};
pub use fibration::{is_grothendieck_fibration, FibrationReport};
pub use functor::{
    enumerate_functors, natural_transformations, FinFunctor, FunctorError, NatTransf,
};
pub use iso::{extremal_objects, find_isomorphism, iso_classes, objects_isomorphic, try_find_isomorphism};
pub use slice::{slice, SliceResult};
