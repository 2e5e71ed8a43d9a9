use std::sync::Arc;

use super::diagram::{slice_diagram, CatDiagram};
use super::homgrpd::{hom_groupoid, hom_set_discrete, HomGroupoid};
use crate::fincat::{FinCategory, FinFunctor};
use crate::limits::{Counter, SizeExceeded};
use crate::presheaf::{product_presheaf, GrpdPresheaf, Interval, PresheafMorphism};

/// The presheaf Homi(i(-), C) together with the hom-groupoid decode tables
/// per base object.
#[derive(Clone, Debug)]
pub struct IStarResult {
    pub presheaf: GrpdPresheaf,
    pub homs: Vec<HomGroupoid>,
}

/// Build I*(C) for a diagram i : A -> Cat. With `set_valued`, build the
/// classical i*(C) instead (same functor objects, discrete values); when C
/// has no non-identity isomorphisms the two are structurally identical.
pub fn i_star(
    i: &CatDiagram,
    c: &Arc<FinCategory>,
    set_valued: bool,
    counter: &mut Counter,
) -> Result<IStarResult, SizeExceeded> {
    let base = i.base().clone();
    let homs: Vec<HomGroupoid> = (0..base.n_objects())
        .map(|a| {
            if set_valued {
                hom_set_discrete(i.value(a), c, counter)
            } else {
                hom_groupoid(i.value(a), c, counter)
            }
        })
        .collect::<Result<_, _>>()?;
    let actions: Vec<FinFunctor> = (0..base.n_morphisms())
        .map(|f| {
            let (a, a2) = (base.src(f), base.tgt(f));
            // X(f) : Homi(i(a'), C) -> Homi(i(a), C), precomposition with i(f)
            let omap: Vec<usize> = homs[a2]
                .functors
                .iter()
                .map(|p| {
                    let pif = FinFunctor::compose(p, i.action(f)).expect("p∘i(f) composable");
                    homs[a].functor_index(&pif).expect("precomposite enumerated")
                })
                .collect();
            let mmap: Vec<usize> = (0..homs[a2].grpd.cat().n_morphisms())
                .map(|t| {
                    let tr = &homs[a2].isos[t];
                    let whiskered = tr.whisker_right(i.action(f));
                    let src = homs[a2].grpd.cat().src(t);
                    let tgt = homs[a2].grpd.cat().tgt(t);
                    homs[a]
                        .iso_index(omap[src], omap[tgt], whiskered.components())
                        .expect("whiskered transformation enumerated")
                })
                .collect();
            FinFunctor::new(
                homs[a2].grpd.cat().clone(),
                homs[a].grpd.cat().clone(),
                omap,
                mmap,
            )
            .expect("precomposition action is a functor")
        })
        .collect();
    let values = homs.iter().map(|h| h.grpd.clone()).collect();
    let presheaf =
        GrpdPresheaf::new(base, values, actions).expect("I* is contravariantly functorial");
    Ok(IStarResult { presheaf, homs })
}

/// I*(u) : I*(C) -> I*(D) by postcomposition with u : C -> D.
pub fn i_star_map(
    i: &CatDiagram,
    u: &FinFunctor,
    src: &IStarResult,
    tgt: &IStarResult,
) -> PresheafMorphism {
    let base = i.base().clone();
    let components: Vec<FinFunctor> = (0..base.n_objects())
        .map(|a| {
            let omap: Vec<usize> = src.homs[a]
                .functors
                .iter()
                .map(|p| {
                    let up = FinFunctor::compose(u, p).expect("u∘p composable");
                    tgt.homs[a].functor_index(&up).expect("postcomposite enumerated")
                })
                .collect();
            let mmap: Vec<usize> = (0..src.homs[a].grpd.cat().n_morphisms())
                .map(|t| {
                    let tr = &src.homs[a].isos[t];
                    let whiskered = tr.whisker_left(u);
                    let s = src.homs[a].grpd.cat().src(t);
                    let tg = src.homs[a].grpd.cat().tgt(t);
                    tgt.homs[a]
                        .iso_index(omap[s], omap[tg], whiskered.components())
                        .expect("whiskered transformation enumerated")
                })
                .collect();
            FinFunctor::new(
                src.homs[a].grpd.cat().clone(),
                tgt.homs[a].grpd.cat().clone(),
                omap,
                mmap,
            )
            .expect("postcomposition component is a functor")
        })
        .collect();
    PresheafMorphism::new(src.presheaf.clone(), tgt.presheaf.clone(), components)
        .expect("postcomposition is natural")
}

/// The canonical comparison I*(C) × I*(D) -> I*(C×D), pairing functors and
/// transformations pointwise. The target base product category must carry
/// product metadata.
pub fn i_star_product_comparison(
    i: &CatDiagram,
    left: &IStarResult,
    right: &IStarResult,
    target: &IStarResult,
    cd: &Arc<FinCategory>,
) -> PresheafMorphism {
    let base = i.base().clone();
    let ps = cd.product_structure().expect("target of comparison is a product").clone();
    let product = product_presheaf(&left.presheaf, &right.presheaf);
    let components: Vec<FinFunctor> = (0..base.n_objects())
        .map(|a| {
            let pair_meta = product.value(a).cat().product_structure().unwrap().clone();
            let ia = i.value(a).clone();
            let omap: Vec<usize> = pair_meta
                .obj_pairs
                .iter()
                .map(|&(p, q)| {
                    let fp = &left.homs[a].functors[p];
                    let fq = &right.homs[a].functors[q];
                    let omap: Vec<usize> = (0..ia.n_objects())
                        .map(|x| ps.obj_of_pair(fp.on_obj(x), fq.on_obj(x)))
                        .collect();
                    let mmap: Vec<usize> = (0..ia.n_morphisms())
                        .map(|m| ps.mor_of_pair(fp.on_mor(m), fq.on_mor(m)))
                        .collect();
                    let paired = FinFunctor::new(ia.clone(), cd.clone(), omap, mmap)
                        .expect("pairing is a functor");
                    target.homs[a].functor_index(&paired).expect("pairing enumerated")
                })
                .collect();
            let mmap: Vec<usize> = pair_meta
                .mor_pairs
                .iter()
                .enumerate()
                .map(|(pm, &(s, t))| {
                    let cat = product.value(a).cat();
                    let ts = &left.homs[a].isos[s];
                    let tt = &right.homs[a].isos[t];
                    let comps: Vec<usize> = (0..ia.n_objects())
                        .map(|x| ps.mor_of_pair(ts.component(x), tt.component(x)))
                        .collect();
                    target.homs[a]
                        .iso_index(omap[cat.src(pm)], omap[cat.tgt(pm)], &comps)
                        .expect("paired transformation enumerated")
                })
                .collect();
            FinFunctor::new(
                product.value(a).cat().clone(),
                target.homs[a].grpd.cat().clone(),
                omap,
                mmap,
            )
            .expect("comparison component is a functor")
        })
        .collect();
    PresheafMorphism::new(product, target.presheaf.clone(), components)
        .expect("comparison is natural")
}

/// The interval (I_A*(Δ₁), const-0, const-1) over a base, with its decode
/// tables.
pub fn istar_delta1_interval(
    a_cat: &Arc<FinCategory>,
    counter: &mut Counter,
) -> Result<(Interval, IStarResult), SizeExceeded> {
    let diagram = slice_diagram(a_cat);
    let d1 = crate::fincat::delta(1);
    let istar = i_star(&diagram, &d1, false, counter)?;
    let point = |obj: usize| -> Vec<usize> {
        (0..a_cat.n_objects())
            .map(|a| {
                let c = FinFunctor::constant(diagram.value(a).clone(), d1.clone(), obj);
                istar.homs[a].functor_index(&c).expect("constant functor enumerated")
            })
            .collect()
    };
    let interval = Interval::in_presheaves(istar.presheaf.clone(), point(0), point(1))
        .expect("constant points are natural");
    Ok((interval, istar))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elements::elements;
    use crate::fincat::{delta, find_isomorphism, terminal};

    fn counter() -> Counter {
        Counter::new(1_000_000, "test")
    }

    #[test]
    fn istar_of_terminal_is_terminal_presheaf() {
        let d1 = delta(1);
        let diagram = slice_diagram(&d1);
        let r = i_star(&diagram, &terminal(), false, &mut counter()).unwrap();
        for a in 0..2 {
            assert_eq!(r.presheaf.value(a).cat().n_objects(), 1);
            assert_eq!(r.presheaf.value(a).cat().n_morphisms(), 1);
        }
    }

    #[test]
    fn istar_delta1_values_over_delta1() {
        // over 0: Homi(e, Δ₁) = 2 objects; over 1: Homi(Δ₁, Δ₁) = 3 objects
        let d1 = delta(1);
        let (interval, istar) = istar_delta1_interval(&d1, &mut counter()).unwrap();
        assert_eq!(istar.presheaf.value(0).cat().n_objects(), 2);
        assert_eq!(istar.presheaf.value(1).cat().n_objects(), 3);
        match interval {
            Interval::Presheaf { i0, i1, .. } => assert_ne!(i0, i1),
            _ => panic!("expected presheaf interval"),
        }
    }

    #[test]
    fn istar_matches_set_valued_on_delta1() {
        let d1 = delta(1);
        let diagram = slice_diagram(&d1);
        let grpd = i_star(&diagram, &d1, false, &mut counter()).unwrap();
        let set = i_star(&diagram, &d1, true, &mut counter()).unwrap();
        assert!(grpd.presheaf.same_structure(&set.presheaf));
    }

    #[test]
    fn elements_of_istar_terminal_is_the_base() {
        // I_A I_A*(e) ≅ A
        let d1 = delta(1);
        let diagram = slice_diagram(&d1);
        let r = i_star(&diagram, &terminal(), false, &mut counter()).unwrap();
        let e = elements(&r.presheaf);
        assert!(find_isomorphism(&e.total, &d1, &mut counter()).is_some());
    }
}
