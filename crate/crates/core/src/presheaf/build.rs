use std::sync::Arc;

use super::types::{GrpdPresheaf, PresheafMorphism, SetPresheaf};
use crate::fincat::{FinCategory, FinFunctor};
use crate::grpd::FinGroupoid;

/// The terminal presheaf over A: every value the terminal groupoid.
pub fn terminal_presheaf(base: &Arc<FinCategory>) -> GrpdPresheaf {
    let point = Arc::new(FinGroupoid::terminal());
    let values = vec![point.clone(); base.n_objects()];
    let actions = (0..base.n_morphisms())
        .map(|_| FinFunctor::identity(point.cat().clone()))
        .collect();
    GrpdPresheaf::new(base.clone(), values, actions).expect("terminal presheaf is functorial")
}

/// The constant presheaf at a groupoid (all actions identities).
pub fn constant_presheaf(base: &Arc<FinCategory>, g: &FinGroupoid) -> GrpdPresheaf {
    let v = Arc::new(g.clone());
    let values = vec![v.clone(); base.n_objects()];
    let actions =
        (0..base.n_morphisms()).map(|_| FinFunctor::identity(v.cat().clone())).collect();
    GrpdPresheaf::new(base.clone(), values, actions).expect("constant presheaf is functorial")
}

/// The representable presheaf at `a`, valued in discrete groupoids on the
/// hom-sets Hom(b, a). Fibre object ids are the morphism ids of the base, so
/// the elements machinery can decode them.
pub fn representable(base: &Arc<FinCategory>, a: usize) -> SetPresheaf {
    let homs: Vec<Vec<usize>> = (0..base.n_objects()).map(|b| base.hom(b, a)).collect();
    let values: Vec<Arc<FinGroupoid>> = homs
        .iter()
        .map(|qs| {
            Arc::new(FinGroupoid::discrete(
                qs.iter().map(|&q| base.morphism_id(q).to_string()).collect(),
            ))
        })
        .collect();
    let actions = (0..base.n_morphisms())
        .map(|f| {
            let (b, b2) = (base.src(f), base.tgt(f));
            // precomposition Hom(b', a) -> Hom(b, a), q -> q∘f
            let omap: Vec<usize> = homs[b2]
                .iter()
                .map(|&q| {
                    let qf = base.compose(q, f).expect("q∘f defined");
                    homs[b].iter().position(|&m| m == qf).unwrap()
                })
                .collect();
            let mmap = omap.iter().map(|&o| values[b].cat().identity_of(o)).collect();
            FinFunctor::new(values[b2].cat().clone(), values[b].cat().clone(), omap, mmap)
                .expect("precomposition is a functor")
        })
        .collect();
    SetPresheaf::new(
        GrpdPresheaf::new(base.clone(), values, actions).expect("representable is functorial"),
    )
    .expect("representable values are discrete")
}

/// Pointwise binary product. Value carriers hold product metadata, so pairs
/// decode without string parsing.
pub fn product_presheaf(x: &GrpdPresheaf, y: &GrpdPresheaf) -> GrpdPresheaf {
    assert!(x.base().same_table(y.base()), "product needs a common base");
    let base = x.base().clone();
    let values: Vec<Arc<FinGroupoid>> = (0..base.n_objects())
        .map(|a| Arc::new(FinGroupoid::product(x.value(a), y.value(a))))
        .collect();
    let actions = (0..base.n_morphisms())
        .map(|f| {
            let (a, a2) = (base.src(f), base.tgt(f));
            let dom = values[a2].cat().clone();
            let cod = values[a].cat().clone();
            let pd = dom.product_structure().unwrap().clone();
            let pc = cod.product_structure().unwrap().clone();
            let omap: Vec<usize> = pd
                .obj_pairs
                .iter()
                .map(|&(l, r)| {
                    pc.obj_of_pair(x.action(f).on_obj(l), y.action(f).on_obj(r))
                })
                .collect();
            let mmap: Vec<usize> = pd
                .mor_pairs
                .iter()
                .map(|&(l, r)| {
                    pc.mor_of_pair(x.action(f).on_mor(l), y.action(f).on_mor(r))
                })
                .collect();
            FinFunctor::new(dom, cod, omap, mmap).expect("product action is a functor")
        })
        .collect();
    GrpdPresheaf::new(base, values, actions).expect("pointwise product is functorial")
}

/// Projections out of a product presheaf.
pub fn product_projections(
    p: &GrpdPresheaf,
    x: &GrpdPresheaf,
    y: &GrpdPresheaf,
) -> (PresheafMorphism, PresheafMorphism) {
    let base = p.base();
    let mut left = Vec::new();
    let mut right = Vec::new();
    for a in 0..base.n_objects() {
        let ps = p.value(a).cat().product_structure().unwrap().clone();
        let dom = p.value(a).cat().clone();
        let lomap: Vec<usize> = ps.obj_pairs.iter().map(|&(l, _)| l).collect();
        let lmmap: Vec<usize> = ps.mor_pairs.iter().map(|&(l, _)| l).collect();
        left.push(
            FinFunctor::new(dom.clone(), x.value(a).cat().clone(), lomap, lmmap)
                .expect("projection is a functor"),
        );
        let romap: Vec<usize> = ps.obj_pairs.iter().map(|&(_, r)| r).collect();
        let rmmap: Vec<usize> = ps.mor_pairs.iter().map(|&(_, r)| r).collect();
        right.push(
            FinFunctor::new(dom, y.value(a).cat().clone(), romap, rmmap)
                .expect("projection is a functor"),
        );
    }
    (
        PresheafMorphism::new(p.clone(), x.clone(), left).expect("projection is natural"),
        PresheafMorphism::new(p.clone(), y.clone(), right).expect("projection is natural"),
    )
}

/// View a family of finite sets (given as discrete groupoids) as a presheaf.
/// This is the inclusion of Set-valued presheaves into Grpd-valued ones.
pub fn embed_discrete(p: &SetPresheaf) -> GrpdPresheaf {
    p.as_grpd().clone()
}

/// Restriction u*(X) along u : A -> B of a presheaf X on B:
/// value at a is X(u(a)), action of f is X(u(f)).
pub fn restrict(u: &FinFunctor, x: &GrpdPresheaf) -> GrpdPresheaf {
    assert!(x.base().same_table(u.cod()), "presheaf must live on the codomain of u");
    let values = (0..u.dom().n_objects()).map(|a| x.value(u.on_obj(a)).clone()).collect();
    let actions = (0..u.dom().n_morphisms()).map(|f| x.action(u.on_mor(f)).clone()).collect();
    GrpdPresheaf::new(u.dom().clone(), values, actions).expect("restriction is functorial")
}

/// Restriction of a presheaf morphism along u.
pub fn restrict_morphism(u: &FinFunctor, phi: &PresheafMorphism) -> PresheafMorphism {
    let src = restrict(u, phi.source());
    let tgt = restrict(u, phi.target());
    let components =
        (0..u.dom().n_objects()).map(|a| phi.component(u.on_obj(a)).clone()).collect();
    PresheafMorphism::new(src, tgt, components).expect("restricted morphism is natural")
}

/// The unique morphism X -> * to the terminal presheaf.
pub fn bang(x: &GrpdPresheaf) -> PresheafMorphism {
    let t = terminal_presheaf(x.base());
    let components = (0..x.base().n_objects())
        .map(|a| FinFunctor::constant(x.value(a).cat().clone(), t.value(a).cat().clone(), 0))
        .collect();
    PresheafMorphism::new(x.clone(), t, components).expect("bang is natural")
}

/// The morphism * -> X selecting a validated point.
pub fn point_morphism(x: &GrpdPresheaf, point: &[usize]) -> PresheafMorphism {
    let t = terminal_presheaf(x.base());
    let components = (0..x.base().n_objects())
        .map(|a| {
            FinFunctor::new(
                t.value(a).cat().clone(),
                x.value(a).cat().clone(),
                vec![point[a]],
                vec![x.value(a).cat().identity_of(point[a])],
            )
            .expect("point component is a functor")
        })
        .collect();
    PresheafMorphism::new(t, x.clone(), components).expect("point is natural")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{delta, find_isomorphism, terminal};
    use crate::limits::Counter;

    #[test]
    fn representable_at_zero_has_empty_fibre_at_one() {
        let d1 = delta(1);
        let r = representable(&d1, 0);
        assert_eq!(r.as_grpd().value(1).cat().n_objects(), 0);
        assert_eq!(r.as_grpd().value(0).cat().n_objects(), 1);
    }

    #[test]
    fn product_with_terminal_is_same_shape() {
        let d1 = delta(1);
        let x = embed_discrete(&representable(&d1, 1));
        let t = terminal_presheaf(&d1);
        let p = product_presheaf(&x, &t);
        for a in 0..2 {
            assert!(find_isomorphism(
                p.value(a).cat(),
                x.value(a).cat(),
                &mut Counter::new(10_000, "test")
            )
            .is_some());
        }
    }

    #[test]
    fn product_of_disjoint_representables_is_empty_somewhere() {
        let d1 = delta(1);
        let r0 = embed_discrete(&representable(&d1, 0));
        let r1 = embed_discrete(&representable(&d1, 1));
        let p = product_presheaf(&r0, &r1);
        assert_eq!(p.value(0).cat().n_objects(), 1);
        assert_eq!(p.value(1).cat().n_objects(), 0);
    }

    #[test]
    fn product_is_symmetric_up_to_structural_isomorphism() {
        let d1 = delta(1);
        let x = embed_discrete(&representable(&d1, 1));
        let t = terminal_presheaf(&d1);
        let xy = product_presheaf(&x, &t);
        let yx = product_presheaf(&t, &x);
        // swap components assemble into a pointwise-iso presheaf morphism
        let components: Vec<FinFunctor> = (0..d1.n_objects())
            .map(|a| {
                let ps_xy = xy.value(a).cat().product_structure().unwrap().clone();
                let ps_yx = yx.value(a).cat().product_structure().unwrap().clone();
                let omap = ps_xy.obj_pairs.iter().map(|&(l, r)| ps_yx.obj_of_pair(r, l)).collect();
                let mmap = ps_xy.mor_pairs.iter().map(|&(l, r)| ps_yx.mor_of_pair(r, l)).collect();
                FinFunctor::new(xy.value(a).cat().clone(), yx.value(a).cat().clone(), omap, mmap)
                    .unwrap()
            })
            .collect();
        let swap = crate::presheaf::PresheafMorphism::new(xy, yx, components).unwrap();
        assert!(swap.is_pointwise_iso());
    }

    #[test]
    fn restriction_along_identity_is_identity() {
        let d1 = delta(1);
        let x = terminal_presheaf(&d1);
        let r = restrict(&FinFunctor::identity(d1.clone()), &x);
        assert!(r.same_structure(&x));
    }

    #[test]
    fn restriction_is_functorial_in_u() {
        let d1 = delta(1);
        let e = terminal();
        let x = embed_discrete(&representable(&d1, 1));
        let u = FinFunctor::new(e.clone(), d1.clone(), vec![0], vec![d1.identity_of(0)]).unwrap();
        let one_step = restrict(&u, &x);
        let through_id = restrict(
            &FinFunctor::compose(&FinFunctor::identity(d1.clone()), &u).unwrap(),
            &x,
        );
        assert!(one_step.same_structure(&through_id));
    }
}
