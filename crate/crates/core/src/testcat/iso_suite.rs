//! The three-way canonical isomorphism
//! elements(a × X) ≅ elements over A/a of X|_{A/a} ≅ elements(X)/a,
//! built from the common description by triples (a', p : a' -> a, x) and
//! verified as honest isomorphisms of categories, naturally in X.

use std::sync::Arc;

use super::TestCatError;
use crate::elements::{elements, elements_map, ElementsResult};
use crate::fincat::{slice, FinCategory, FinFunctor, SliceResult};
use crate::presheaf::{
    embed_discrete, product_presheaf, representable, restrict, restrict_morphism, GrpdPresheaf,
    PresheafMorphism,
};

pub struct IsoSuiteReport {
    /// elements(a × X) -> elements over A/a of the restriction
    pub iso12: FinFunctor,
    /// elements over A/a of the restriction -> slice of elements(X) over a
    pub iso23: FinFunctor,
    /// both naturality squares against the supplied morphism commuted
    pub natural: Option<bool>,
}

struct SuitePieces {
    prod: GrpdPresheaf,
    e1: ElementsResult,
    slice_a: SliceResult,
    e2: ElementsResult,
    ex: ElementsResult,
    slice3: SliceResult,
    iso12: FinFunctor,
    iso23: FinFunctor,
}

fn hom_lists(a_cat: &Arc<FinCategory>, a_obj: usize) -> Vec<Vec<usize>> {
    (0..a_cat.n_objects()).map(|b| a_cat.hom(b, a_obj)).collect()
}

fn build_suite(
    a_cat: &Arc<FinCategory>,
    x: &GrpdPresheaf,
    a_obj: usize,
) -> Result<SuitePieces, TestCatError> {
    let rep = embed_discrete(&representable(a_cat, a_obj));
    let prod = product_presheaf(&rep, x);
    let e1 = elements(&prod);

    let slice_a = slice(&FinFunctor::identity(a_cat.clone()), a_obj);
    let restricted = restrict(&slice_a.projection, x);
    let e2 = elements(&restricted);

    let ex = elements(x);
    let slice3 = slice(&ex.zeta, a_obj);

    let homs = hom_lists(a_cat, a_obj);

    // iso12: (a', (q, x)) -> ((a', q), x)
    let mut omap12 = Vec::with_capacity(e1.objs.len());
    for &(a1, pair) in &e1.objs {
        let ps = prod.value(a1).cat().product_structure().unwrap().clone();
        let (q_pos, xo) = ps.obj_pairs[pair];
        let q = homs[a1][q_pos];
        let so = slice_a.obj_of(a1, q).ok_or_else(|| {
            TestCatError::IsoVerificationFailed("missing slice object".into())
        })?;
        let target = e2.obj_index(so, xo).ok_or_else(|| {
            TestCatError::IsoVerificationFailed("missing restricted element".into())
        })?;
        omap12.push(target);
    }
    let mut mmap12 = Vec::with_capacity(e1.mors.len());
    for m in &e1.mors {
        let f = m.base_mor;
        let a1 = a_cat.src(f);
        let a2 = a_cat.tgt(f);
        let ps_src = prod.value(a1).cat().product_structure().unwrap().clone();
        let ps_tgt = prod.value(a2).cat().product_structure().unwrap().clone();
        let (_, k_x) = ps_src.mor_pairs[m.fiber_mor];
        let (q2_pos, x2) = ps_tgt.obj_pairs[m.fiber_tgt];
        let (q1_pos, _) = ps_src.obj_pairs[prod.value(a1).cat().src(m.fiber_mor)];
        let q1 = homs[a1][q1_pos];
        let q2 = homs[a2][q2_pos];
        let so = slice_a.obj_of(a1, q1).unwrap();
        let to = slice_a.obj_of(a2, q2).unwrap();
        let sm = slice_a
            .mors
            .iter()
            .position(|&p| p == (f, so, to))
            .ok_or_else(|| TestCatError::IsoVerificationFailed("missing slice morphism".into()))?;
        let target = e2.mor_index(sm, k_x, x2).ok_or_else(|| {
            TestCatError::IsoVerificationFailed("missing restricted element morphism".into())
        })?;
        mmap12.push(target);
    }
    let iso12 = FinFunctor::new(e1.total.clone(), e2.total.clone(), omap12, mmap12)
        .map_err(|e| TestCatError::IsoVerificationFailed(format!("iso12 not a functor: {e}")))?;
    if !iso12.is_isomorphism() {
        return Err(TestCatError::IsoVerificationFailed("iso12 not bijective".into()));
    }

    // iso23: ((a', q), x) -> ((a', x), q)
    let mut omap23 = Vec::with_capacity(e2.objs.len());
    for &(so, xo) in &e2.objs {
        let (a1, q) = slice_a.objs[so];
        let eo = ex.obj_index(a1, xo).unwrap();
        let target = slice3.obj_of(eo, q).ok_or_else(|| {
            TestCatError::IsoVerificationFailed("missing slice of elements object".into())
        })?;
        omap23.push(target);
    }
    let mut mmap23 = Vec::with_capacity(e2.mors.len());
    for m in &e2.mors {
        let (f, _, _) = slice_a.mors[m.base_mor];
        let em = ex.mor_index(f, m.fiber_mor, m.fiber_tgt).unwrap();
        let so3 = omap23[m.src];
        let to3 = omap23[m.tgt];
        let target = slice3
            .mors
            .iter()
            .position(|&p| p == (em, so3, to3))
            .ok_or_else(|| {
                TestCatError::IsoVerificationFailed("missing slice of elements morphism".into())
            })?;
        mmap23.push(target);
    }
    let iso23 = FinFunctor::new(e2.total.clone(), slice3.cat.clone(), omap23, mmap23)
        .map_err(|e| TestCatError::IsoVerificationFailed(format!("iso23 not a functor: {e}")))?;
    if !iso23.is_isomorphism() {
        return Err(TestCatError::IsoVerificationFailed("iso23 not bijective".into()));
    }

    Ok(SuitePieces { prod, e1, slice_a, e2, ex, slice3, iso12, iso23 })
}

/// The componentwise product id_rep × ψ on the product presheaves.
fn product_with_identity_left(
    prod_x: &GrpdPresheaf,
    prod_y: &GrpdPresheaf,
    psi: &PresheafMorphism,
) -> PresheafMorphism {
    let base = prod_x.base().clone();
    let components: Vec<FinFunctor> = (0..base.n_objects())
        .map(|a| {
            let psx = prod_x.value(a).cat().product_structure().unwrap().clone();
            let psy = prod_y.value(a).cat().product_structure().unwrap().clone();
            let omap: Vec<usize> = psx
                .obj_pairs
                .iter()
                .map(|&(q, xo)| psy.obj_of_pair(q, psi.component(a).on_obj(xo)))
                .collect();
            let mmap: Vec<usize> = psx
                .mor_pairs
                .iter()
                .map(|&(kq, kx)| psy.mor_of_pair(kq, psi.component(a).on_mor(kx)))
                .collect();
            FinFunctor::new(
                prod_x.value(a).cat().clone(),
                prod_y.value(a).cat().clone(),
                omap,
                mmap,
            )
            .expect("id × ψ is a functor")
        })
        .collect();
    PresheafMorphism::new(prod_x.clone(), prod_y.clone(), components)
        .expect("id × ψ is natural")
}

/// Functor between slices of ζ over a induced by a presheaf morphism.
fn slice_of_elements_map(
    g: &FinFunctor,
    sx: &SliceResult,
    sy: &SliceResult,
) -> FinFunctor {
    let omap: Vec<usize> = sx
        .objs
        .iter()
        .map(|&(eo, q)| sy.obj_of(g.on_obj(eo), q).expect("slice image object"))
        .collect();
    let mmap: Vec<usize> = sx
        .mors
        .iter()
        .map(|&(em, so, to)| {
            sy.mors
                .iter()
                .position(|&p| p == (g.on_mor(em), omap[so], omap[to]))
                .expect("slice image morphism")
        })
        .collect();
    FinFunctor::new(sx.cat.clone(), sy.cat.clone(), omap, mmap)
        .expect("sliced functor is a functor")
}

/// Build and verify all three canonical isomorphisms for (A, X, a); when a
/// morphism ψ : X -> Y is supplied, also verify that both isomorphism squares
/// commute with the induced maps.
pub fn canonical_iso_suite(
    a_cat: &Arc<FinCategory>,
    x: &GrpdPresheaf,
    a_obj: usize,
    naturality_against: Option<&PresheafMorphism>,
    _counter: &mut crate::limits::Counter,
) -> Result<IsoSuiteReport, TestCatError> {
    let px = build_suite(a_cat, x, a_obj)?;
    let natural = match naturality_against {
        None => None,
        Some(psi) => {
            let y = psi.target().clone();
            let py = build_suite(a_cat, &y, a_obj)?;
            let n1 = elements_map(
                &product_with_identity_left(&px.prod, &py.prod, psi),
                &px.e1,
                &py.e1,
            );
            let n2 = elements_map(
                &restrict_morphism(&px.slice_a.projection, psi),
                &px.e2,
                &py.e2,
            );
            let g = elements_map(psi, &px.ex, &py.ex);
            let n3 = slice_of_elements_map(&g, &px.slice3, &py.slice3);

            let sq1_lhs = FinFunctor::compose(&py.iso12, &n1).unwrap();
            let sq1_rhs = FinFunctor::compose(&n2, &px.iso12).unwrap();
            let sq2_lhs = FinFunctor::compose(&py.iso23, &n2).unwrap();
            let sq2_rhs = FinFunctor::compose(&n3, &px.iso23).unwrap();
            Some(
                sq1_lhs.omap() == sq1_rhs.omap()
                    && sq1_lhs.mmap() == sq1_rhs.mmap()
                    && sq2_lhs.omap() == sq2_rhs.omap()
                    && sq2_lhs.mmap() == sq2_rhs.mmap(),
            )
        }
    };
    Ok(IsoSuiteReport { iso12: px.iso12, iso23: px.iso23, natural })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{cyclic_group, delta, find_isomorphism, terminal};
    use crate::grpd::FinGroupoid;
    use crate::limits::Counter;
    use crate::presheaf::{bang, constant_presheaf, terminal_presheaf};

    fn counter() -> Counter {
        Counter::new(4_000_000, "test")
    }

    #[test]
    fn suite_for_terminal_presheaf_gives_the_slice() {
        let d1 = delta(1);
        let t = terminal_presheaf(&d1);
        let r = canonical_iso_suite(&d1, &t, 1, None, &mut counter()).unwrap();
        // all three sides ≅ Δ₁/1 ≅ Δ₁
        assert!(find_isomorphism(r.iso12.dom(), &d1, &mut counter()).is_some());
    }

    #[test]
    fn suite_with_naturality_against_bang() {
        let d1 = delta(1);
        let x = embed_discrete(&representable(&d1, 0));
        let psi = bang(&x);
        for a in 0..2 {
            let r = canonical_iso_suite(&d1, &x, a, Some(&psi), &mut counter()).unwrap();
            assert_eq!(r.natural, Some(true));
        }
    }

    #[test]
    fn suite_over_point_with_constant_bg2() {
        let e = terminal();
        let g = FinGroupoid::new(cyclic_group(2)).unwrap();
        let x = constant_presheaf(&e, &g);
        let r = canonical_iso_suite(&e, &x, 0, None, &mut counter()).unwrap();
        // all three sides ≅ BG(2)
        assert!(find_isomorphism(r.iso12.dom(), &cyclic_group(2), &mut counter()).is_some());
        assert!(find_isomorphism(r.iso23.cod(), &cyclic_group(2), &mut counter()).is_some());
    }
}
