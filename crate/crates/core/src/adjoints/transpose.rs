//! The adjunction between the elements construction and Hom(A/(-), C):
//! hom-set enumeration on both sides, the natural bijection, and the
//! triangle identities, all verified on concrete instances.

use std::sync::Arc;

use super::counit::counit_alpha;
use super::diagram::{slice_diagram_with_tables, CatDiagram};
use super::istar::{i_star, i_star_map, IStarResult};
use super::AdjointsError;
use crate::elements::{elements, elements_map, ElementsResult};
use crate::fincat::{enumerate_functors, FinCategory, FinFunctor, SliceResult};
use crate::limits::Counter;
use crate::presheaf::{enumerate_presheaf_morphisms, GrpdPresheaf, PresheafMorphism};

/// Context for the slice-diagram adjunction over a fixed base.
pub struct SliceAdjunctionCtx {
    pub a_cat: Arc<FinCategory>,
    pub diagram: CatDiagram,
    pub slices: Vec<SliceResult>,
}

pub fn slice_adjunction_ctx(a_cat: &Arc<FinCategory>) -> SliceAdjunctionCtx {
    let (diagram, slices) = slice_diagram_with_tables(a_cat);
    SliceAdjunctionCtx { a_cat: a_cat.clone(), diagram, slices }
}

/// Transpose a functor F : elements(X) -> C to a presheaf morphism
/// X -> I*(C). At an object x of X(a), the image functor A/a -> C sends
/// (a', q) to F(a', X(q)(x)); a fibre morphism k goes to the evident
/// transformation with components F(id, X(q)(k)).
pub fn transpose_functor_to_psh(
    ctx: &SliceAdjunctionCtx,
    x: &GrpdPresheaf,
    elems_x: &ElementsResult,
    istar_c: &IStarResult,
    f: &FinFunctor,
) -> PresheafMorphism {
    let a_cat = &ctx.a_cat;
    let components: Vec<FinFunctor> = (0..a_cat.n_objects())
        .map(|a| {
            let xa = x.value(a).cat().clone();
            let slice = &ctx.slices[a];
            let functor_at = |x_obj: usize| -> FinFunctor {
                let omap: Vec<usize> = slice
                    .objs
                    .iter()
                    .map(|&(a2, q)| {
                        let xq = x.action(q).on_obj(x_obj);
                        f.on_obj(elems_x.obj_index(a2, xq).expect("elements object"))
                    })
                    .collect();
                let mmap: Vec<usize> = slice
                    .mors
                    .iter()
                    .map(|&(m, so, to)| {
                        let (a1, q1) = slice.objs[so];
                        let (_, q2) = slice.objs[to];
                        let src_fib = x.action(q1).on_obj(x_obj);
                        let tgt_fib = x.action(q2).on_obj(x_obj);
                        let k = x.value(a1).cat().identity_of(src_fib);
                        f.on_mor(
                            elems_x.mor_index(m, k, tgt_fib).expect("elements morphism"),
                        )
                    })
                    .collect();
                FinFunctor::new(slice.cat.clone(), f.cod().clone(), omap, mmap)
                    .expect("transpose object image is a functor")
            };
            let omap: Vec<usize> = (0..xa.n_objects())
                .map(|x_obj| {
                    istar_c.homs[a]
                        .functor_index(&functor_at(x_obj))
                        .expect("transpose image enumerated")
                })
                .collect();
            let mmap: Vec<usize> = (0..xa.n_morphisms())
                .map(|k| {
                    let (sx, tx) = (xa.src(k), xa.tgt(k));
                    let comps: Vec<usize> = slice
                        .objs
                        .iter()
                        .map(|&(a2, q)| {
                            let xk = x.action(q).on_mor(k);
                            let tgt_fib = x.action(q).on_obj(tx);
                            f.on_mor(
                                elems_x
                                    .mor_index(a_cat.identity_of(a2), xk, tgt_fib)
                                    .expect("component morphism"),
                            )
                        })
                        .collect();
                    istar_c.homs[a]
                        .iso_index(omap[sx], omap[tx], &comps)
                        .expect("transpose component enumerated")
                })
                .collect();
            FinFunctor::new(xa, istar_c.homs[a].grpd.cat().clone(), omap, mmap)
                .expect("transpose component is a functor")
        })
        .collect();
    PresheafMorphism::new(x.clone(), istar_c.presheaf.clone(), components)
        .expect("transpose is natural")
}

/// Everything the adjunction check produces: both hom-sets, the bijection
/// table, and the two triangle identities evaluated on this instance.
pub struct TransposeResult {
    pub cat_homs: Vec<FinFunctor>,
    pub psh_homs: Vec<PresheafMorphism>,
    /// index into psh_homs for each functor, when the transpose is found
    pub to_psh: Vec<Option<usize>>,
    pub bijection: bool,
    pub triangle1: bool,
    pub triangle2: bool,
}

/// Enumerate Hom_Cat(elements(X), C) and Hom(X, I*(C)), transpose each
/// functor, and verify bijectivity plus both triangle identities.
pub fn adjunction_transpose(
    a_cat: &Arc<FinCategory>,
    x: &GrpdPresheaf,
    c: &Arc<FinCategory>,
    counter: &mut Counter,
) -> Result<TransposeResult, AdjointsError> {
    let ctx = slice_adjunction_ctx(a_cat);
    let istar_c = i_star(&ctx.diagram, c, false, counter)?;
    let elems_x = elements(x);

    let cat_homs = enumerate_functors(&elems_x.total, c, counter)?;
    let psh_homs = enumerate_presheaf_morphisms(x, &istar_c.presheaf, counter)?;

    let to_psh: Vec<Option<usize>> = cat_homs
        .iter()
        .map(|f| {
            let phi = transpose_functor_to_psh(&ctx, x, &elems_x, &istar_c, f);
            psh_homs.iter().position(|p| p.same_tables(&phi))
        })
        .collect();
    let mut seen = vec![false; psh_homs.len()];
    let mut injective = true;
    for t in to_psh.iter().flatten() {
        if seen[*t] {
            injective = false;
        }
        seen[*t] = true;
    }
    let bijection = to_psh.iter().all(|t| t.is_some())
        && injective
        && cat_homs.len() == psh_homs.len();

    let (triangle1, triangle2) =
        triangle_identities(&ctx, x, &elems_x, c, &istar_c, counter)?;

    Ok(TransposeResult { cat_homs, psh_homs, to_psh, bijection, triangle1, triangle2 })
}

/// The unit X -> I*(elements(X)) as the transpose of the identity functor.
pub fn adjunction_unit(
    ctx: &SliceAdjunctionCtx,
    x: &GrpdPresheaf,
    elems_x: &ElementsResult,
    istar_ex: &IStarResult,
) -> PresheafMorphism {
    let idf = FinFunctor::identity(elems_x.total.clone());
    transpose_functor_to_psh(ctx, x, elems_x, istar_ex, &idf)
}

fn triangle_identities(
    ctx: &SliceAdjunctionCtx,
    x: &GrpdPresheaf,
    elems_x: &ElementsResult,
    c: &Arc<FinCategory>,
    istar_c: &IStarResult,
    counter: &mut Counter,
) -> Result<(bool, bool), AdjointsError> {
    // triangle 1: α_{elements(X)} ∘ elements(η_X) = id on elements(X)
    let istar_ex = i_star(&ctx.diagram, &elems_x.total, false, counter)?;
    let eta = adjunction_unit(ctx, x, elems_x, &istar_ex);
    let (alpha_ex, elems_istar_ex) = counit_alpha(&ctx.diagram, &elems_x.total, &istar_ex)?;
    let eta_elems = elements_map(&eta, elems_x, &elems_istar_ex);
    let composite1 = FinFunctor::compose(&alpha_ex, &eta_elems).expect("triangle 1 composable");
    let triangle1 = composite1.is_identity_functor();

    // triangle 2: I*(α_C) ∘ η_{I*(C)} = id on I*(C)
    let (alpha_c, elems_istar_c) = counit_alpha(&ctx.diagram, c, istar_c)?;
    let istar_e_istar_c = i_star(&ctx.diagram, &elems_istar_c.total, false, counter)?;
    let eta2 = adjunction_unit(ctx, &istar_c.presheaf, &elems_istar_c, &istar_e_istar_c);
    let istar_alpha = i_star_map(&ctx.diagram, &alpha_c, &istar_e_istar_c, istar_c);
    let composite2 =
        PresheafMorphism::compose(&istar_alpha, &eta2).expect("triangle 2 composable");
    let triangle2 = composite2.same_tables(&PresheafMorphism::identity(&istar_c.presheaf));
    Ok((triangle1, triangle2))
}

/// The counit at C recovered through the bijection: the unique functor
/// elements(I*(C)) -> C whose transpose is the identity of I*(C). This is
/// independent of the direct construction in [`counit_alpha`].
pub fn transposed_counit(
    a_cat: &Arc<FinCategory>,
    c: &Arc<FinCategory>,
    counter: &mut Counter,
) -> Result<FinFunctor, AdjointsError> {
    let ctx = slice_adjunction_ctx(a_cat);
    let istar_c = i_star(&ctx.diagram, c, false, counter)?;
    let x = istar_c.presheaf.clone();
    let elems = elements(&x);
    let id = PresheafMorphism::identity(&x);
    let candidates = enumerate_functors(&elems.total, c, counter)?;
    for f in candidates {
        let phi = transpose_functor_to_psh(&ctx, &x, &elems, &istar_c, &f);
        if phi.same_tables(&id) {
            return Ok(f);
        }
    }
    Err(AdjointsError::IsoVerificationFailed(
        "no functor transposes to the identity of I*(C)".into(),
    ))
}
