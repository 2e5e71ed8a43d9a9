//! Set/Grpd/Cat-valued presheaves over a finite base, their morphisms and
//! invertible 2-morphisms, and the interval/homotopy machinery.

mod build;
mod homotopy;
mod types;

pub use build::{
    bang, constant_presheaf, embed_discrete, point_morphism, product_presheaf,
    product_projections, representable, restrict, restrict_morphism, terminal_presheaf,
};
pub use homotopy::{
    are_homotopic, enumerate_homotopies, enumerate_presheaf_morphisms, homotopy_classes_cat,
    homotopy_classes_psh, is_contractible, two_morphisms, HomotopyAnswer, HomotopyClasses,
    HomotopyList, ParallelPair,
};
pub use types::{
    CatPresheaf, CatPresheafMorphism, GrpdPresheaf, Interval, IntervalOp, MultiplicativeInterval,
    PresheafError, PresheafMorphism, SetPresheaf, TwoMorphism,
};
