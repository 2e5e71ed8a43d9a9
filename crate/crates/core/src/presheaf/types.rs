use std::sync::Arc;

use thiserror::Error;

use crate::fincat::{FinCategory, FinFunctor, NatTransf};
use crate::grpd::FinGroupoid;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum PresheafError {
    #[error("contravariant functoriality fails on composable pair (g = {g:?}, f = {f:?})")]
    FunctorialityViolation { g: String, f: String },
    #[error("action of identity at {object:?} is not the identity functor")]
    IdentityActionViolation { object: String },
    #[error("action of {morphism:?} has the wrong domain or codomain")]
    IllTypedAction { morphism: String },
    #[error("declared Set-valued but value at {object:?} has non-identity morphism {morphism:?}")]
    DiscretenessViolation { object: String, morphism: String },
    #[error("wrong number of values or actions for the base")]
    Arity,
    #[error("presheaves do not share a base")]
    BaseMismatch,
    #[error("component at {object:?} is ill-typed")]
    IllTypedComponent { object: String },
    #[error("strict naturality fails at base morphism {morphism:?}")]
    NaturalityViolation { morphism: String },
    #[error("point is not natural: X({morphism:?}) does not carry the chosen objects to each other")]
    InvalidPoint { morphism: String },
    #[error("whiskering compatibility fails at base morphism {morphism:?}")]
    WhiskeringViolation { morphism: String },
    #[error("interval operation has the wrong shape: {0}")]
    IllTypedOperation(String),
}

/// A contravariant assignment of finite groupoids over a finite base.
/// `action(f)` for f : a -> a' is a functor X(a') -> X(a); contravariant
/// functoriality is checked exhaustively on construction.
#[derive(Clone, Debug)]
pub struct GrpdPresheaf {
    base: Arc<FinCategory>,
    values: Vec<Arc<FinGroupoid>>,
    actions: Vec<FinFunctor>,
}

fn check_contravariance(
    base: &Arc<FinCategory>,
    value_cat: &dyn Fn(usize) -> Arc<FinCategory>,
    actions: &[FinFunctor],
) -> Result<(), PresheafError> {
    if actions.len() != base.n_morphisms() {
        return Err(PresheafError::Arity);
    }
    for f in 0..base.n_morphisms() {
        let act = &actions[f];
        if !act.dom().same_table(&value_cat(base.tgt(f)))
            || !act.cod().same_table(&value_cat(base.src(f)))
        {
            return Err(PresheafError::IllTypedAction { morphism: base.morphism_id(f).into() });
        }
    }
    for o in 0..base.n_objects() {
        if !actions[base.identity_of(o)].is_identity_functor() {
            return Err(PresheafError::IdentityActionViolation { object: base.object_id(o).into() });
        }
    }
    for (g, f, h) in base.composable_triples() {
        // X(g∘f) = X(f)∘X(g)
        let lhs = &actions[h];
        let rhs = FinFunctor::compose(&actions[f], &actions[g]).map_err(|_| {
            PresheafError::FunctorialityViolation {
                g: base.morphism_id(g).into(),
                f: base.morphism_id(f).into(),
            }
        })?;
        if lhs.omap() != rhs.omap() || lhs.mmap() != rhs.mmap() {
            return Err(PresheafError::FunctorialityViolation {
                g: base.morphism_id(g).into(),
                f: base.morphism_id(f).into(),
            });
        }
    }
    Ok(())
}

impl GrpdPresheaf {
    pub fn new(
        base: Arc<FinCategory>,
        values: Vec<Arc<FinGroupoid>>,
        actions: Vec<FinFunctor>,
    ) -> Result<GrpdPresheaf, PresheafError> {
        if values.len() != base.n_objects() {
            return Err(PresheafError::Arity);
        }
        let vals = values.clone();
        check_contravariance(&base, &move |o| vals[o].cat().clone(), &actions)?;
        Ok(GrpdPresheaf { base, values, actions })
    }

    pub fn base(&self) -> &Arc<FinCategory> {
        &self.base
    }

    pub fn value(&self, a: usize) -> &Arc<FinGroupoid> {
        &self.values[a]
    }

    pub fn action(&self, f: usize) -> &FinFunctor {
        &self.actions[f]
    }

    pub fn to_cat(&self) -> CatPresheaf {
        CatPresheaf {
            base: self.base.clone(),
            values: self.values.iter().map(|g| g.cat().clone()).collect(),
            actions: self.actions.clone(),
        }
    }

    /// Structural identity: same base table, identical value tables and
    /// identical action tables.
    pub fn same_structure(&self, other: &GrpdPresheaf) -> bool {
        self.base.same_table(&other.base)
            && self.values.len() == other.values.len()
            && self
                .values
                .iter()
                .zip(&other.values)
                .all(|(a, b)| a.cat().same_table(b.cat()))
            && self
                .actions
                .iter()
                .zip(&other.actions)
                .all(|(a, b)| a.omap() == b.omap() && a.mmap() == b.mmap())
    }

    /// Validate a family of objects, one per base object, as a point * -> X.
    pub fn validate_point(&self, point: &[usize]) -> Result<(), PresheafError> {
        if point.len() != self.base.n_objects() {
            return Err(PresheafError::Arity);
        }
        for f in 0..self.base.n_morphisms() {
            let (a, a2) = (self.base.src(f), self.base.tgt(f));
            if self.actions[f].on_obj(point[a2]) != point[a] {
                return Err(PresheafError::InvalidPoint {
                    morphism: self.base.morphism_id(f).into(),
                });
            }
        }
        Ok(())
    }

    /// Enumerate all points (natural families of objects).
    pub fn points(&self) -> Vec<Vec<usize>> {
        let n = self.base.n_objects();
        let mut out = Vec::new();
        if n == 0 {
            out.push(vec![]);
            return out;
        }
        let mut choice = vec![0usize; n];
        'outer: loop {
            if self.validate_point(&choice).is_ok() {
                out.push(choice.clone());
            }
            let mut i = n;
            loop {
                if i == 0 {
                    break 'outer;
                }
                i -= 1;
                choice[i] += 1;
                if choice[i] < self.values[i].cat().n_objects() {
                    break;
                }
                choice[i] = 0;
            }
        }
        out
    }
}

/// A Grpd-valued presheaf whose values are discrete.
#[derive(Clone, Debug)]
pub struct SetPresheaf(GrpdPresheaf);

impl SetPresheaf {
    pub fn new(p: GrpdPresheaf) -> Result<SetPresheaf, PresheafError> {
        for a in 0..p.base().n_objects() {
            let g = p.value(a);
            if let Some(m) = (0..g.cat().n_morphisms()).find(|&m| !g.cat().is_identity(m)) {
                return Err(PresheafError::DiscretenessViolation {
                    object: p.base().object_id(a).into(),
                    morphism: g.cat().morphism_id(m).into(),
                });
            }
        }
        Ok(SetPresheaf(p))
    }

    pub fn as_grpd(&self) -> &GrpdPresheaf {
        &self.0
    }

    pub fn into_grpd(self) -> GrpdPresheaf {
        self.0
    }
}

/// A Cat-valued presheaf: arbitrary finite categories and functorial actions.
#[derive(Clone, Debug)]
pub struct CatPresheaf {
    base: Arc<FinCategory>,
    values: Vec<Arc<FinCategory>>,
    actions: Vec<FinFunctor>,
}

impl CatPresheaf {
    pub fn new(
        base: Arc<FinCategory>,
        values: Vec<Arc<FinCategory>>,
        actions: Vec<FinFunctor>,
    ) -> Result<CatPresheaf, PresheafError> {
        if values.len() != base.n_objects() {
            return Err(PresheafError::Arity);
        }
        let vals = values.clone();
        check_contravariance(&base, &move |o| vals[o].clone(), &actions)?;
        Ok(CatPresheaf { base, values, actions })
    }

    pub fn base(&self) -> &Arc<FinCategory> {
        &self.base
    }

    pub fn value(&self, a: usize) -> &Arc<FinCategory> {
        &self.values[a]
    }

    pub fn action(&self, f: usize) -> &FinFunctor {
        &self.actions[f]
    }
}

/// A strict natural transformation of Grpd-valued presheaves.
#[derive(Clone, Debug)]
pub struct PresheafMorphism {
    source: GrpdPresheaf,
    target: GrpdPresheaf,
    components: Vec<FinFunctor>,
}

impl PresheafMorphism {
    pub fn new(
        source: GrpdPresheaf,
        target: GrpdPresheaf,
        components: Vec<FinFunctor>,
    ) -> Result<PresheafMorphism, PresheafError> {
        if !source.base.same_table(&target.base) {
            return Err(PresheafError::BaseMismatch);
        }
        let base = &source.base;
        if components.len() != base.n_objects() {
            return Err(PresheafError::Arity);
        }
        for a in 0..base.n_objects() {
            let c = &components[a];
            if !c.dom().same_table(source.value(a).cat())
                || !c.cod().same_table(target.value(a).cat())
            {
                return Err(PresheafError::IllTypedComponent { object: base.object_id(a).into() });
            }
        }
        for f in 0..base.n_morphisms() {
            let (a, a2) = (base.src(f), base.tgt(f));
            // φ_a ∘ X(f) = Y(f) ∘ φ_{a'} as functors X(a') -> Y(a)
            let lhs = FinFunctor::compose(&components[a], source.action(f)).unwrap();
            let rhs = FinFunctor::compose(target.action(f), &components[a2]).unwrap();
            if lhs.omap() != rhs.omap() || lhs.mmap() != rhs.mmap() {
                return Err(PresheafError::NaturalityViolation {
                    morphism: base.morphism_id(f).into(),
                });
            }
        }
        Ok(PresheafMorphism { source, target, components })
    }

    pub fn identity(x: &GrpdPresheaf) -> PresheafMorphism {
        let components =
            (0..x.base.n_objects()).map(|a| FinFunctor::identity(x.value(a).cat().clone())).collect();
        PresheafMorphism { source: x.clone(), target: x.clone(), components }
    }

    pub fn compose(g: &PresheafMorphism, f: &PresheafMorphism) -> Result<PresheafMorphism, PresheafError> {
        if !f.target.same_structure(&g.source) {
            return Err(PresheafError::BaseMismatch);
        }
        let components = f
            .components
            .iter()
            .zip(&g.components)
            .map(|(a, b)| FinFunctor::compose(b, a).expect("components composable"))
            .collect();
        Ok(PresheafMorphism { source: f.source.clone(), target: g.target.clone(), components })
    }

    pub fn source(&self) -> &GrpdPresheaf {
        &self.source
    }

    pub fn target(&self) -> &GrpdPresheaf {
        &self.target
    }

    pub fn component(&self, a: usize) -> &FinFunctor {
        &self.components[a]
    }

    pub fn components(&self) -> &[FinFunctor] {
        &self.components
    }

    pub fn same_tables(&self, other: &PresheafMorphism) -> bool {
        self.components.len() == other.components.len()
            && self
                .components
                .iter()
                .zip(&other.components)
                .all(|(a, b)| a.omap() == b.omap() && a.mmap() == b.mmap())
    }

    /// Is every component pointwise an isomorphism of categories?
    pub fn is_pointwise_iso(&self) -> bool {
        self.components.iter().all(|c| c.is_isomorphism())
    }
}

/// A strict natural transformation of Cat-valued presheaves.
#[derive(Clone, Debug)]
pub struct CatPresheafMorphism {
    source: CatPresheaf,
    target: CatPresheaf,
    components: Vec<FinFunctor>,
}

impl CatPresheafMorphism {
    pub fn new(
        source: CatPresheaf,
        target: CatPresheaf,
        components: Vec<FinFunctor>,
    ) -> Result<CatPresheafMorphism, PresheafError> {
        if !source.base.same_table(&target.base) {
            return Err(PresheafError::BaseMismatch);
        }
        let base = &source.base;
        if components.len() != base.n_objects() {
            return Err(PresheafError::Arity);
        }
        for a in 0..base.n_objects() {
            let c = &components[a];
            if !c.dom().same_table(source.value(a)) || !c.cod().same_table(target.value(a)) {
                return Err(PresheafError::IllTypedComponent { object: base.object_id(a).into() });
            }
        }
        for f in 0..base.n_morphisms() {
            let (a, a2) = (base.src(f), base.tgt(f));
            let lhs = FinFunctor::compose(&components[a], source.action(f)).unwrap();
            let rhs = FinFunctor::compose(target.action(f), &components[a2]).unwrap();
            if lhs.omap() != rhs.omap() || lhs.mmap() != rhs.mmap() {
                return Err(PresheafError::NaturalityViolation {
                    morphism: base.morphism_id(f).into(),
                });
            }
        }
        Ok(CatPresheafMorphism { source, target, components })
    }

    pub fn source(&self) -> &CatPresheaf {
        &self.source
    }

    pub fn target(&self) -> &CatPresheaf {
        &self.target
    }

    pub fn component(&self, a: usize) -> &FinFunctor {
        &self.components[a]
    }
}

/// An invertible 2-morphism between parallel presheaf morphisms: a family of
/// natural transformations φ_a => ψ_a compatible with whiskering along the
/// base actions.
#[derive(Clone, Debug)]
pub struct TwoMorphism {
    source: PresheafMorphism,
    target: PresheafMorphism,
    components: Vec<NatTransf>,
}

impl TwoMorphism {
    pub fn new(
        source: PresheafMorphism,
        target: PresheafMorphism,
        components: Vec<NatTransf>,
    ) -> Result<TwoMorphism, PresheafError> {
        if !source.source.same_structure(&target.source)
            || !source.target.same_structure(&target.target)
        {
            return Err(PresheafError::BaseMismatch);
        }
        let base = source.source.base();
        if components.len() != base.n_objects() {
            return Err(PresheafError::Arity);
        }
        for a in 0..base.n_objects() {
            let alpha = &components[a];
            if alpha.source() != source.component(a) || alpha.target() != target.component(a) {
                return Err(PresheafError::IllTypedComponent { object: base.object_id(a).into() });
            }
        }
        let x = &source.source;
        let y = &source.target;
        for f in 0..base.n_morphisms() {
            let (a, a2) = (base.src(f), base.tgt(f));
            // α_a ⋆ X(f) = Y(f) ⋆ α_{a'}
            for obj in 0..x.value(a2).cat().n_objects() {
                let lhs = components[a].component(x.action(f).on_obj(obj));
                let rhs = y.action(f).on_mor(components[a2].component(obj));
                if lhs != rhs {
                    return Err(PresheafError::WhiskeringViolation {
                        morphism: base.morphism_id(f).into(),
                    });
                }
            }
        }
        Ok(TwoMorphism { source, target, components })
    }

    pub fn source(&self) -> &PresheafMorphism {
        &self.source
    }

    pub fn target(&self) -> &PresheafMorphism {
        &self.target
    }

    pub fn component(&self, a: usize) -> &NatTransf {
        &self.components[a]
    }

    /// Values are groupoids, so every 2-morphism inverts componentwise.
    pub fn invert(&self) -> Result<TwoMorphism, PresheafError> {
        let components: Vec<NatTransf> = self
            .components
            .iter()
            .map(|n| n.invert().expect("components of a 2-morphism are invertible"))
            .collect();
        TwoMorphism::new(self.target.clone(), self.source.clone(), components)
    }
}

/// An interval: a carrier with two chosen points, either in Cat or in the
/// presheaf category over a fixed base. The ambient tag dispatches the
/// homotopy operations without implicit coercion.
#[derive(Clone, Debug)]
pub enum Interval {
    Cat { carrier: Arc<FinCategory>, i0: usize, i1: usize },
    Presheaf { carrier: GrpdPresheaf, i0: Vec<usize>, i1: Vec<usize> },
}

impl Interval {
    pub fn in_cat(carrier: Arc<FinCategory>, i0: usize, i1: usize) -> Interval {
        assert!(i0 < carrier.n_objects() && i1 < carrier.n_objects());
        Interval::Cat { carrier, i0, i1 }
    }

    pub fn in_presheaves(
        carrier: GrpdPresheaf,
        i0: Vec<usize>,
        i1: Vec<usize>,
    ) -> Result<Interval, PresheafError> {
        carrier.validate_point(&i0)?;
        carrier.validate_point(&i1)?;
        Ok(Interval::Presheaf { carrier, i0, i1 })
    }
}

/// The binary operation of a multiplicative interval, in either ambient.
#[derive(Clone, Debug)]
pub enum IntervalOp {
    /// functor carrier×carrier -> carrier; its domain must carry product
    /// metadata
    Cat(FinFunctor),
    /// presheaf morphism carrier×carrier -> carrier, domain values carrying
    /// product metadata
    Presheaf(PresheafMorphism),
}

/// An interval with a left-unital, left-absorbing binary operation.
#[derive(Clone, Debug)]
pub struct MultiplicativeInterval {
    pub interval: Interval,
    pub op: IntervalOp,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{delta, terminal};
    use crate::presheaf::build::{constant_presheaf, terminal_presheaf};
    use crate::grpd::FinGroupoid;

    #[test]
    fn terminal_presheaf_validates() {
        let p = terminal_presheaf(&delta(1));
        assert_eq!(p.base().n_objects(), 2);
        assert_eq!(p.points().len(), 1);
    }

    #[test]
    fn constant_presheaf_at_bg2() {
        let g = FinGroupoid::new(crate::fincat::cyclic_group(2)).unwrap();
        let p = constant_presheaf(&terminal(), &g);
        assert_eq!(p.value(0).cat().n_morphisms(), 2);
    }

    #[test]
    fn broken_functoriality_rejected() {
        // base Δ₁, values BG(3) everywhere, with the action of id_0 set to
        // the inversion automorphism: fails the identity-action check
        let base = delta(1);
        let g = FinGroupoid::new(crate::fincat::cyclic_group(3)).unwrap();
        let idf = FinFunctor::identity(g.cat().clone());
        let inv = FinFunctor::new(g.cat().clone(), g.cat().clone(), vec![0], vec![0, 2, 1]).unwrap();
        let r = GrpdPresheaf::new(
            base,
            vec![Arc::new(g.clone()), Arc::new(g.clone())],
            vec![inv, idf.clone(), idf],
        );
        assert!(matches!(r, Err(PresheafError::IdentityActionViolation { .. })));
    }

    #[test]
    fn composition_functoriality_violation_rejected() {
        // base Δ₂ with X(d0_2) not equal to X(d0_1)∘X(d1_2)
        let base = delta(2);
        let g = FinGroupoid::new(crate::fincat::cyclic_group(3)).unwrap();
        let idf = FinFunctor::identity(g.cat().clone());
        let inv = FinFunctor::new(g.cat().clone(), g.cat().clone(), vec![0], vec![0, 2, 1]).unwrap();
        let values = vec![Arc::new(g.clone()); 3];
        // morphism order of delta(2): id_0, d0_1, d0_2, id_1, d1_2, id_2
        let actions = vec![idf.clone(), idf.clone(), inv, idf.clone(), idf.clone(), idf];
        let r = GrpdPresheaf::new(base, values, actions);
        assert!(matches!(r, Err(PresheafError::FunctorialityViolation { .. })));
    }
}
