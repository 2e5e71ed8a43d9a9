use std::sync::Arc;

use thiserror::Error;

use super::category::FinCategory;
use crate::limits::{Counter, SizeExceeded};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum FunctorError {
    #[error("object map has length {got}, domain has {want} objects")]
    ObjectArity { got: usize, want: usize },
    #[error("morphism map has length {got}, domain has {want} morphisms")]
    MorphismArity { got: usize, want: usize },
    #[error("image of morphism {morphism:?} has wrong source or target")]
    SrcTgtViolation { morphism: String },
    #[error("identity of {object:?} is not sent to an identity")]
    IdentityNotPreserved { object: String },
    #[error("composition not preserved on pair ({g:?}, {f:?})")]
    CompositionNotPreserved { g: String, f: String },
    #[error("categories do not match where they should")]
    BaseMismatch,
    #[error("functors are not parallel")]
    NotParallel,
    #[error("component at {object:?} is not a morphism F({object:?}) -> G({object:?})")]
    IllTypedComponent { object: String },
    #[error("naturality square fails at morphism {morphism:?}")]
    NaturalityViolation { morphism: String },
}

/// A functor between finite categories, tabulated on objects and morphisms.
/// Preservation of sources, targets, identities and composition is checked
/// exhaustively on construction.
#[derive(Clone, Debug)]
pub struct FinFunctor {
    dom: Arc<FinCategory>,
    cod: Arc<FinCategory>,
    omap: Vec<usize>,
    mmap: Vec<usize>,
}

impl PartialEq for FinFunctor {
    fn eq(&self, other: &Self) -> bool {
        self.omap == other.omap
            && self.mmap == other.mmap
            && self.dom.same_table(&other.dom)
            && self.cod.same_table(&other.cod)
    }
}

impl Eq for FinFunctor {}

impl FinFunctor {
    pub fn new(
        dom: Arc<FinCategory>,
        cod: Arc<FinCategory>,
        omap: Vec<usize>,
        mmap: Vec<usize>,
    ) -> Result<FinFunctor, FunctorError> {
        if omap.len() != dom.n_objects() {
            return Err(FunctorError::ObjectArity { got: omap.len(), want: dom.n_objects() });
        }
        if mmap.len() != dom.n_morphisms() {
            return Err(FunctorError::MorphismArity { got: mmap.len(), want: dom.n_morphisms() });
        }
        for m in 0..dom.n_morphisms() {
            let im = mmap[m];
            if cod.src(im) != omap[dom.src(m)] || cod.tgt(im) != omap[dom.tgt(m)] {
                return Err(FunctorError::SrcTgtViolation { morphism: dom.morphism_id(m).into() });
            }
        }
        for o in 0..dom.n_objects() {
            if mmap[dom.identity_of(o)] != cod.identity_of(omap[o]) {
                return Err(FunctorError::IdentityNotPreserved { object: dom.object_id(o).into() });
            }
        }
        for (g, f, h) in dom.composable_triples() {
            if cod.compose(mmap[g], mmap[f]) != Some(mmap[h]) {
                return Err(FunctorError::CompositionNotPreserved {
                    g: dom.morphism_id(g).into(),
                    f: dom.morphism_id(f).into(),
                });
            }
        }
        Ok(FinFunctor { dom, cod, omap, mmap })
    }

    pub fn identity(cat: Arc<FinCategory>) -> FinFunctor {
        let omap = (0..cat.n_objects()).collect();
        let mmap = (0..cat.n_morphisms()).collect();
        FinFunctor { dom: cat.clone(), cod: cat, omap, mmap }
    }

    /// The constant functor at `obj`.
    pub fn constant(dom: Arc<FinCategory>, cod: Arc<FinCategory>, obj: usize) -> FinFunctor {
        let omap = vec![obj; dom.n_objects()];
        let mmap = vec![cod.identity_of(obj); dom.n_morphisms()];
        FinFunctor { dom, cod, omap, mmap }
    }

    /// g∘f. Requires cod(f) and dom(g) to be the same table.
    pub fn compose(g: &FinFunctor, f: &FinFunctor) -> Result<FinFunctor, FunctorError> {
        if !f.cod.same_table(&g.dom) {
            return Err(FunctorError::BaseMismatch);
        }
        let omap = f.omap.iter().map(|&o| g.omap[o]).collect();
        let mmap = f.mmap.iter().map(|&m| g.mmap[m]).collect();
        Ok(FinFunctor { dom: f.dom.clone(), cod: g.cod.clone(), omap, mmap })
    }

    pub fn dom(&self) -> &Arc<FinCategory> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<FinCategory> {
        &self.cod
    }

    pub fn on_obj(&self, o: usize) -> usize {
        self.omap[o]
    }

    pub fn on_mor(&self, m: usize) -> usize {
        self.mmap[m]
    }

    pub fn omap(&self) -> &[usize] {
        &self.omap
    }

    pub fn mmap(&self) -> &[usize] {
        &self.mmap
    }

    /// Bijective on objects and morphisms.
    pub fn is_isomorphism(&self) -> bool {
        self.omap.len() == self.cod.n_objects()
            && self.mmap.len() == self.cod.n_morphisms()
            && is_permutation(&self.omap, self.cod.n_objects())
            && is_permutation(&self.mmap, self.cod.n_morphisms())
    }

    pub fn inverse(&self) -> Option<FinFunctor> {
        if !self.is_isomorphism() {
            return None;
        }
        let mut omap = vec![0; self.cod.n_objects()];
        for (o, &im) in self.omap.iter().enumerate() {
            omap[im] = o;
        }
        let mut mmap = vec![0; self.cod.n_morphisms()];
        for (m, &im) in self.mmap.iter().enumerate() {
            mmap[im] = m;
        }
        Some(FinFunctor { dom: self.cod.clone(), cod: self.dom.clone(), omap, mmap })
    }

    pub fn is_identity_functor(&self) -> bool {
        self.dom.same_table(&self.cod)
            && self.omap.iter().enumerate().all(|(i, &o)| i == o)
            && self.mmap.iter().enumerate().all(|(i, &m)| i == m)
    }
}

fn is_permutation(v: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    for &x in v {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    v.len() == n
}

/// A natural transformation between parallel functors, with its naturality
/// squares checked exhaustively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatTransf {
    source: FinFunctor,
    target: FinFunctor,
    /// per domain object: a morphism source(x) -> target(x) of the codomain
    components: Vec<usize>,
}

impl NatTransf {
    pub fn new(
        source: FinFunctor,
        target: FinFunctor,
        components: Vec<usize>,
    ) -> Result<NatTransf, FunctorError> {
        if !source.dom.same_table(&target.dom) || !source.cod.same_table(&target.cod) {
            return Err(FunctorError::NotParallel);
        }
        let dom = &source.dom;
        let cod = &source.cod;
        if components.len() != dom.n_objects() {
            return Err(FunctorError::ObjectArity {
                got: components.len(),
                want: dom.n_objects(),
            });
        }
        for o in 0..dom.n_objects() {
            let c = components[o];
            if cod.src(c) != source.omap[o] || cod.tgt(c) != target.omap[o] {
                return Err(FunctorError::IllTypedComponent { object: dom.object_id(o).into() });
            }
        }
        for m in 0..dom.n_morphisms() {
            let (x, y) = (dom.src(m), dom.tgt(m));
            let lhs = cod.compose(components[y], source.mmap[m]);
            let rhs = cod.compose(target.mmap[m], components[x]);
            if lhs != rhs || lhs.is_none() {
                return Err(FunctorError::NaturalityViolation { morphism: dom.morphism_id(m).into() });
            }
        }
        Ok(NatTransf { source, target, components })
    }

    pub fn identity(f: &FinFunctor) -> NatTransf {
        let components = (0..f.dom.n_objects()).map(|o| f.cod.identity_of(f.omap[o])).collect();
        NatTransf { source: f.clone(), target: f.clone(), components }
    }

    pub fn source(&self) -> &FinFunctor {
        &self.source
    }

    pub fn target(&self) -> &FinFunctor {
        &self.target
    }

    pub fn component(&self, o: usize) -> usize {
        self.components[o]
    }

    pub fn components(&self) -> &[usize] {
        &self.components
    }

    pub fn is_iso(&self) -> bool {
        self.components.iter().all(|&c| self.source.cod.is_iso(c))
    }

    /// Vertical composition: other after self (self: F => G, other: G => H).
    pub fn then(&self, other: &NatTransf) -> Result<NatTransf, FunctorError> {
        if self.target != other.source {
            return Err(FunctorError::NotParallel);
        }
        let cod = &self.source.cod;
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(&a, &b)| cod.compose(b, a).expect("vertical composite is composable"))
            .collect();
        Ok(NatTransf { source: self.source.clone(), target: other.target.clone(), components })
    }

    pub fn invert(&self) -> Option<NatTransf> {
        let cod = &self.source.cod;
        let components: Option<Vec<usize>> =
            self.components.iter().map(|&c| cod.inverse_of(c)).collect();
        Some(NatTransf {
            source: self.target.clone(),
            target: self.source.clone(),
            components: components?,
        })
    }

    /// Whisker on the right with `f : C -> dom`, yielding a transformation
    /// between the precomposed functors.
    pub fn whisker_right(&self, f: &FinFunctor) -> NatTransf {
        let components = f.omap.iter().map(|&o| self.components[o]).collect();
        NatTransf {
            source: FinFunctor::compose(&self.source, f).expect("whisker composable"),
            target: FinFunctor::compose(&self.target, f).expect("whisker composable"),
            components,
        }
    }

    /// Whisker on the left with `h : cod -> D`.
    pub fn whisker_left(&self, h: &FinFunctor) -> NatTransf {
        let components = self.components.iter().map(|&c| h.mmap[c]).collect();
        NatTransf {
            source: FinFunctor::compose(h, &self.source).expect("whisker composable"),
            target: FinFunctor::compose(h, &self.target).expect("whisker composable"),
            components,
        }
    }
}

/// Enumerate all functors dom -> cod in lexicographic order of their object
/// and morphism tables.
pub fn enumerate_functors(
    dom: &Arc<FinCategory>,
    cod: &Arc<FinCategory>,
    counter: &mut Counter,
) -> Result<Vec<FinFunctor>, SizeExceeded> {
    let mut out = Vec::new();
    if dom.n_objects() == 0 {
        out.push(FinFunctor {
            dom: dom.clone(),
            cod: cod.clone(),
            omap: vec![],
            mmap: vec![],
        });
        return Ok(out);
    }
    if cod.n_objects() == 0 {
        return Ok(out);
    }

    // composition entries of dom, triggered by the last non-identity morphism
    // assigned among the three participants
    let non_id: Vec<usize> = (0..dom.n_morphisms()).filter(|&m| !dom.is_identity(m)).collect();
    let order_of: Vec<Option<usize>> = {
        let mut v = vec![None; dom.n_morphisms()];
        for (k, &m) in non_id.iter().enumerate() {
            v[m] = Some(k);
        }
        v
    };
    let mut triggers: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); non_id.len().max(1)];
    let mut id_only_triples = Vec::new();
    for (g, f, h) in dom.composable_triples() {
        let last = [g, f, h].into_iter().filter_map(|m| order_of[m]).max();
        match last {
            Some(k) => triggers[k].push((g, f, h)),
            None => id_only_triples.push((g, f, h)),
        }
    }

    let n_obj = dom.n_objects();
    let mut omap = vec![0usize; n_obj];
    'outer: loop {
        counter.tick()?;
        // seed mmap with forced identity images
        let mut mmap = vec![usize::MAX; dom.n_morphisms()];
        for o in 0..n_obj {
            mmap[dom.identity_of(o)] = cod.identity_of(omap[o]);
        }
        let mut ok = true;
        for &(g, f, h) in &id_only_triples {
            if cod.compose(mmap[g], mmap[f]) != Some(mmap[h]) {
                ok = false;
                break;
            }
        }
        if ok {
            assign_morphisms(dom, cod, &omap, &non_id, &triggers, &mut mmap, 0, counter, &mut out)?;
        }
        // advance odometer (object 0 most significant)
        let mut i = n_obj;
        loop {
            if i == 0 {
                break 'outer;
            }
            i -= 1;
            omap[i] += 1;
            if omap[i] < cod.n_objects() {
                break;
            }
            omap[i] = 0;
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn assign_morphisms(
    dom: &Arc<FinCategory>,
    cod: &Arc<FinCategory>,
    omap: &[usize],
    non_id: &[usize],
    triggers: &[Vec<(usize, usize, usize)>],
    mmap: &mut Vec<usize>,
    k: usize,
    counter: &mut Counter,
    out: &mut Vec<FinFunctor>,
) -> Result<(), SizeExceeded> {
    if k == non_id.len() {
        out.push(FinFunctor {
            dom: dom.clone(),
            cod: cod.clone(),
            omap: omap.to_vec(),
            mmap: mmap.clone(),
        });
        return Ok(());
    }
    let m = non_id[k];
    let (s, t) = (omap[dom.src(m)], omap[dom.tgt(m)]);
    for cand in cod.hom(s, t) {
        counter.tick()?;
        mmap[m] = cand;
        let consistent = triggers[k]
            .iter()
            .all(|&(g, f, h)| cod.compose(mmap[g], mmap[f]) == Some(mmap[h]));
        if consistent {
            assign_morphisms(dom, cod, omap, non_id, triggers, mmap, k + 1, counter, out)?;
        }
    }
    mmap[m] = usize::MAX;
    Ok(())
}

/// Enumerate natural transformations F => G by exhaustive search over
/// component families, in lexicographic order. With `iso_only`, restrict
/// components to invertible morphisms.
pub fn natural_transformations(
    f: &FinFunctor,
    g: &FinFunctor,
    iso_only: bool,
    counter: &mut Counter,
) -> Result<Vec<NatTransf>, SizeExceeded> {
    assert!(f.dom.same_table(&g.dom) && f.cod.same_table(&g.cod), "functors must be parallel");
    let dom = &f.dom;
    let cod = &f.cod;
    let n = dom.n_objects();
    // morphisms checked once both endpoint components are assigned
    let mut triggers: Vec<Vec<usize>> = vec![Vec::new(); n.max(1)];
    for m in 0..dom.n_morphisms() {
        triggers[dom.src(m).max(dom.tgt(m))].push(m);
    }
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|o| {
            cod.hom(f.omap[o], g.omap[o])
                .into_iter()
                .filter(|&c| !iso_only || cod.is_iso(c))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut comp = vec![usize::MAX; n];
    search_components(f, g, &candidates, &triggers, &mut comp, 0, counter, &mut out)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn search_components(
    f: &FinFunctor,
    g: &FinFunctor,
    candidates: &[Vec<usize>],
    triggers: &[Vec<usize>],
    comp: &mut Vec<usize>,
    k: usize,
    counter: &mut Counter,
    out: &mut Vec<NatTransf>,
) -> Result<(), SizeExceeded> {
    if k == candidates.len() {
        out.push(NatTransf { source: f.clone(), target: g.clone(), components: comp.clone() });
        return Ok(());
    }
    let dom = &f.dom;
    let cod = &f.cod;
    for &cand in &candidates[k] {
        counter.tick()?;
        comp[k] = cand;
        let natural = triggers[k].iter().all(|&m| {
            let (x, y) = (dom.src(m), dom.tgt(m));
            cod.compose(comp[y], f.mmap[m]) == cod.compose(g.mmap[m], comp[x])
        });
        if natural {
            search_components(f, g, candidates, triggers, comp, k + 1, counter, out)?;
        }
    }
    comp[k] = usize::MAX;
    Ok(())
}
