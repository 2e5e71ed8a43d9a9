//! Categories of elements: the Grothendieck construction for Set-, Grpd- and
//! Cat-valued presheaves, its functoriality, the projection fibration, and
//! the base-change comparison.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::fincat::{FinCategory, FinFunctor};
use crate::presheaf::{restrict, CatPresheaf, CatPresheafMorphism, GrpdPresheaf, PresheafMorphism, SetPresheaf};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ElementsError {
    #[error("base category carries no product structure metadata")]
    ProductMetadataMissing,
    #[error("canonical comparison failed to be an isomorphism: {0}")]
    IsoSearchFailed(String),
}

/// One morphism of a category of elements: (f, k) : (a, x) -> (a', x') where
/// k : x -> X(f)(x'); the target fibre object is tracked explicitly because k
/// does not determine it when X(f) is not injective.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ElemMor {
    pub base_mor: usize,
    pub fiber_mor: usize,
    pub fiber_tgt: usize,
    pub src: usize,
    pub tgt: usize,
}

/// The total category of a Grothendieck construction with its projection and
/// decode tables.
#[derive(Clone, Debug)]
pub struct ElementsResult {
    pub total: Arc<FinCategory>,
    pub zeta: FinFunctor,
    /// total object -> (base object, fibre object)
    pub objs: Vec<(usize, usize)>,
    pub mors: Vec<ElemMor>,
    obj_lookup: BTreeMap<(usize, usize), usize>,
    mor_lookup: BTreeMap<(usize, usize, usize), usize>,
}

impl ElementsResult {
    pub fn obj_index(&self, a: usize, x: usize) -> Option<usize> {
        self.obj_lookup.get(&(a, x)).copied()
    }

    /// Index of the morphism (f, k) with explicit target fibre object.
    pub fn mor_index(&self, f: usize, k: usize, fiber_tgt: usize) -> Option<usize> {
        self.mor_lookup.get(&(f, k, fiber_tgt)).copied()
    }
}

fn grothendieck_core(
    base: &Arc<FinCategory>,
    value: &dyn Fn(usize) -> Arc<FinCategory>,
    action: &dyn Fn(usize) -> FinFunctor,
) -> ElementsResult {
    let mut objs = Vec::new();
    let mut obj_ids = Vec::new();
    for a in 0..base.n_objects() {
        let v = value(a);
        for x in 0..v.n_objects() {
            obj_ids.push(format!("({},{})", base.object_id(a), v.object_id(x)));
            objs.push((a, x));
        }
    }
    let obj_lookup: BTreeMap<(usize, usize), usize> =
        objs.iter().enumerate().map(|(i, &p)| (p, i)).collect();

    // morphisms: (f : a -> a', k : x -> X(f)(x') in X(a), x' in X(a'))
    let mut mors: Vec<ElemMor> = Vec::new();
    let mut mor_ids = Vec::new();
    for f in 0..base.n_morphisms() {
        let (a, a2) = (base.src(f), base.tgt(f));
        let va = value(a);
        let va2 = value(a2);
        let act = action(f);
        for x2 in 0..va2.n_objects() {
            let image = act.on_obj(x2);
            for k in 0..va.n_morphisms() {
                if va.tgt(k) != image {
                    continue;
                }
                let src = obj_lookup[&(a, va.src(k))];
                let tgt = obj_lookup[&(a2, x2)];
                mor_ids.push(format!(
                    "({},{},{})",
                    base.morphism_id(f),
                    va.morphism_id(k),
                    va2.object_id(x2)
                ));
                mors.push(ElemMor { base_mor: f, fiber_mor: k, fiber_tgt: x2, src, tgt });
            }
        }
    }
    let mor_lookup: BTreeMap<(usize, usize, usize), usize> = mors
        .iter()
        .enumerate()
        .map(|(i, m)| ((m.base_mor, m.fiber_mor, m.fiber_tgt), i))
        .collect();

    let identity: Vec<usize> = objs
        .iter()
        .map(|&(a, x)| mor_lookup[&(base.identity_of(a), value(a).identity_of(x), x)])
        .collect();

    // composite of (f, k) then (f', k'): (f'∘f, X(f)(k')∘k)
    let mut compose = Vec::new();
    for (i, m1) in mors.iter().enumerate() {
        for (j, m2) in mors.iter().enumerate() {
            if m2.src != m1.tgt {
                continue;
            }
            let f = m1.base_mor;
            let f2 = m2.base_mor;
            let h = base.compose(f2, f).expect("base morphisms composable");
            let va = value(base.src(f));
            let kp_mapped = action(f).on_mor(m2.fiber_mor);
            let k2 = va.compose(kp_mapped, m1.fiber_mor).expect("fibre morphisms composable");
            let idx = mor_lookup[&(h, k2, m2.fiber_tgt)];
            compose.push((j, i, idx));
        }
    }

    let morphisms: Vec<(String, usize, usize)> = mor_ids
        .into_iter()
        .zip(&mors)
        .map(|(id, m)| (id, m.src, m.tgt))
        .collect();
    let total = Arc::new(
        FinCategory::from_parts(obj_ids, morphisms, identity, &compose)
            .expect("Grothendieck construction yields a valid category"),
    );
    let omap = objs.iter().map(|&(a, _)| a).collect();
    let mmap = mors.iter().map(|m| m.base_mor).collect();
    let zeta = FinFunctor::new(total.clone(), base.clone(), omap, mmap)
        .expect("projection to the base is a functor");
    ElementsResult { total, zeta, objs, mors, obj_lookup, mor_lookup }
}

/// Category of elements of a Grpd-valued presheaf.
pub fn elements(x: &GrpdPresheaf) -> ElementsResult {
    let xc = x.clone();
    let xc2 = x.clone();
    grothendieck_core(
        x.base(),
        &move |a| xc.value(a).cat().clone(),
        &move |f| xc2.action(f).clone(),
    )
}

/// Category of elements of a Set-valued presheaf (classical case).
pub fn elements_set(x: &SetPresheaf) -> ElementsResult {
    elements(x.as_grpd())
}

/// Grothendieck construction of a Cat-valued presheaf. Agrees with
/// [`elements`] on Grpd-valued input by construction.
pub fn grothendieck(x: &CatPresheaf) -> ElementsResult {
    let xc = x.clone();
    let xc2 = x.clone();
    grothendieck_core(x.base(), &move |a| xc.value(a).clone(), &move |f| xc2.action(f).clone())
}

/// The functor between element categories induced by a presheaf morphism:
/// (a, x) -> (a, φ_a(x)), (f, k) -> (f, φ_a(k)).
pub fn elements_map(
    phi: &PresheafMorphism,
    src: &ElementsResult,
    tgt: &ElementsResult,
) -> FinFunctor {
    let base = phi.source().base().clone();
    let omap: Vec<usize> = src
        .objs
        .iter()
        .map(|&(a, x)| tgt.obj_index(a, phi.component(a).on_obj(x)).expect("image object exists"))
        .collect();
    let mmap: Vec<usize> = src
        .mors
        .iter()
        .map(|m| {
            let a = base.src(m.base_mor);
            let a2 = base.tgt(m.base_mor);
            tgt.mor_index(
                m.base_mor,
                phi.component(a).on_mor(m.fiber_mor),
                phi.component(a2).on_obj(m.fiber_tgt),
            )
            .expect("image morphism exists")
        })
        .collect();
    FinFunctor::new(src.total.clone(), tgt.total.clone(), omap, mmap)
        .expect("induced map on elements is a functor")
}

/// Same construction for Cat-valued presheaf morphisms.
pub fn cat_elements_map(
    phi: &CatPresheafMorphism,
    src: &ElementsResult,
    tgt: &ElementsResult,
) -> FinFunctor {
    let base = phi.source().base().clone();
    let omap: Vec<usize> = src
        .objs
        .iter()
        .map(|&(a, x)| tgt.obj_index(a, phi.component(a).on_obj(x)).expect("image object exists"))
        .collect();
    let mmap: Vec<usize> = src
        .mors
        .iter()
        .map(|m| {
            let a = base.src(m.base_mor);
            let a2 = base.tgt(m.base_mor);
            tgt.mor_index(
                m.base_mor,
                phi.component(a).on_mor(m.fiber_mor),
                phi.component(a2).on_obj(m.fiber_tgt),
            )
            .expect("image morphism exists")
        })
        .collect();
    FinFunctor::new(src.total.clone(), tgt.total.clone(), omap, mmap)
        .expect("induced map on elements is a functor")
}

/// Outcome of the base-change comparison along u : A -> B.
#[derive(Clone, Debug)]
pub struct BaseChangeResult {
    pub lambda: FinFunctor,
    /// the square with the two projections and u is a strict pullback
    pub pullback: bool,
    pub restricted: ElementsResult,
    pub total: ElementsResult,
}

/// Build λ : elements(u*X) -> elements(X) over u and check the square is a
/// strict pullback of categories (object and morphism sets are fibre
/// products).
pub fn base_change_square(u: &FinFunctor, x: &GrpdPresheaf) -> BaseChangeResult {
    let ux = restrict(u, x);
    let restricted = elements(&ux);
    let total = elements(x);
    let omap: Vec<usize> = restricted
        .objs
        .iter()
        .map(|&(a, xo)| total.obj_index(u.on_obj(a), xo).expect("λ object image"))
        .collect();
    let mmap: Vec<usize> = restricted
        .mors
        .iter()
        .map(|m| {
            total
                .mor_index(u.on_mor(m.base_mor), m.fiber_mor, m.fiber_tgt)
                .expect("λ morphism image")
        })
        .collect();
    let lambda = FinFunctor::new(restricted.total.clone(), total.total.clone(), omap, mmap)
        .expect("λ is a functor");

    // commutativity: ζ_X ∘ λ = u ∘ ζ_{u*X}
    let left = FinFunctor::compose(&total.zeta, &lambda).unwrap();
    let right = FinFunctor::compose(u, &restricted.zeta).unwrap();
    let commutes = left.omap() == right.omap() && left.mmap() == right.mmap();

    // strict fibre products: count pairs agreeing over the base
    let a_cat = u.dom();
    let expected_objs: usize = (0..a_cat.n_objects())
        .map(|a| total.objs.iter().filter(|&&(b, _)| b == u.on_obj(a)).count())
        .sum();
    let expected_mors: usize = (0..a_cat.n_morphisms())
        .map(|f| total.mors.iter().filter(|m| m.base_mor == u.on_mor(f)).count())
        .sum();
    let pullback = commutes
        && restricted.objs.len() == expected_objs
        && restricted.mors.len() == expected_mors;
    BaseChangeResult { lambda, pullback, restricted, total }
}

/// Witness for the comparison of i_{A×B}(X) with the iterated construction
/// over A of the fibrewise constructions over B.
#[derive(Clone, Debug)]
pub struct IteratedElementsWitness {
    pub lhs: ElementsResult,
    pub rhs: ElementsResult,
    pub iso: FinFunctor,
}

/// For a Set-valued presheaf on a product base A×B, build both sides of the
/// comparison and the canonical isomorphism between them.
pub fn iterated_elements_check(
    x: &SetPresheaf,
) -> Result<IteratedElementsWitness, ElementsError> {
    let xg = x.as_grpd();
    let base = xg.base().clone();
    let ps = base.product_structure().ok_or(ElementsError::ProductMetadataMissing)?.clone();
    let a_cat = ps.left.clone();
    let b_cat = ps.right.clone();

    let lhs = elements(xg);

    // fibrewise: for each a, the presheaf X(a, -) on B and its elements
    let fibre_presheaf = |a: usize| -> GrpdPresheaf {
        let values = (0..b_cat.n_objects())
            .map(|b| xg.value(ps.obj_of_pair(a, b)).clone())
            .collect();
        let actions = (0..b_cat.n_morphisms())
            .map(|g| xg.action(ps.mor_of_pair(a_cat.identity_of(a), g)).clone())
            .collect();
        GrpdPresheaf::new(b_cat.clone(), values, actions).expect("fibre presheaf is functorial")
    };
    let fibres: Vec<GrpdPresheaf> = (0..a_cat.n_objects()).map(fibre_presheaf).collect();
    let fibre_elements: Vec<ElementsResult> = fibres.iter().map(elements).collect();

    // Cat-valued presheaf over A: a -> i_B(X(a, -))
    let values: Vec<Arc<FinCategory>> = fibre_elements.iter().map(|e| e.total.clone()).collect();
    let actions: Vec<FinFunctor> = (0..a_cat.n_morphisms())
        .map(|f| {
            let (a, a2) = (a_cat.src(f), a_cat.tgt(f));
            let components: Vec<FinFunctor> = (0..b_cat.n_objects())
                .map(|b| xg.action(ps.mor_of_pair(f, b_cat.identity_of(b))).clone())
                .collect();
            let phi = PresheafMorphism::new(fibres[a2].clone(), fibres[a].clone(), components)
                .expect("fibre restriction is natural");
            elements_map(&phi, &fibre_elements[a2], &fibre_elements[a])
        })
        .collect();
    let iterated = CatPresheaf::new(a_cat.clone(), values, actions)
        .expect("iterated Cat-valued presheaf is functorial");
    let rhs = grothendieck(&iterated);

    // canonical comparison on objects and morphisms
    let mut omap = Vec::with_capacity(lhs.objs.len());
    for &(ab, xo) in &lhs.objs {
        let (a, b) = ps.obj_pairs[ab];
        let e = fibre_elements[a].obj_index(b, xo).expect("fibre object");
        omap.push(rhs.obj_index(a, e).expect("iterated object"));
    }
    let mut mmap = Vec::with_capacity(lhs.mors.len());
    for m in &lhs.mors {
        let (f, g) = ps.mor_pairs[m.base_mor];
        let a = a_cat.src(f);
        let a2 = a_cat.tgt(f);
        let b2 = b_cat.tgt(g);
        // target fibre object in X(a', -) over b'
        let e2 = fibre_elements[a2].obj_index(b2, m.fiber_tgt).expect("fibre target");
        // κ in i_B(X(a, -)): (g, k) with target fibre X(f, id_b')(x')
        let xf = xg.action(ps.mor_of_pair(f, b_cat.identity_of(b2)));
        let kappa_tgt = xf.on_obj(m.fiber_tgt);
        let kappa =
            fibre_elements[a].mor_index(g, m.fiber_mor, kappa_tgt).expect("fibre morphism");
        mmap.push(rhs.mor_index(f, kappa, e2).expect("iterated morphism"));
    }
    let iso = FinFunctor::new(lhs.total.clone(), rhs.total.clone(), omap, mmap)
        .map_err(|e| ElementsError::IsoSearchFailed(e.to_string()))?;
    if !iso.is_isomorphism() {
        return Err(ElementsError::IsoSearchFailed("comparison is not bijective".into()));
    }
    Ok(IteratedElementsWitness { lhs, rhs, iso })
}
