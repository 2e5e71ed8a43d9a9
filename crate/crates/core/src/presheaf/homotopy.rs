use std::sync::Arc;

use super::build::product_presheaf;
use super::types::{GrpdPresheaf, Interval, PresheafMorphism, TwoMorphism};
use crate::fincat::{enumerate_functors, natural_transformations, product, FinCategory, FinFunctor};
use crate::limits::{Counter, SizeExceeded};

/// Parallel morphisms in the ambient of an interval.
#[derive(Clone, Debug)]
pub enum ParallelPair {
    Cat(FinFunctor, FinFunctor),
    Psh(PresheafMorphism, PresheafMorphism),
}

/// Homotopies found between the pair, as morphisms out of interval×source.
#[derive(Clone, Debug)]
pub enum HomotopyList {
    Cat(Vec<FinFunctor>),
    Psh(Vec<PresheafMorphism>),
}

impl HomotopyList {
    pub fn len(&self) -> usize {
        match self {
            HomotopyList::Cat(v) => v.len(),
            HomotopyList::Psh(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug)]
pub struct HomotopyAnswer {
    pub list: HomotopyList,
    /// reachability in the symmetric-transitive closure over the whole
    /// hom-set, not just a direct homotopy
    pub are_homotopic: bool,
}

/// The hom-set X -> Y partitioned into interval-homotopy classes.
#[derive(Clone, Debug)]
pub enum HomotopyClasses {
    Cat { homs: Vec<FinFunctor>, class: Vec<usize> },
    Psh { homs: Vec<PresheafMorphism>, class: Vec<usize> },
}

fn close_classes(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut repr: Vec<usize> = (0..n).collect();
    fn find(repr: &mut Vec<usize>, x: usize) -> usize {
        if repr[x] != x {
            let r = find(repr, repr[x]);
            repr[x] = r;
        }
        repr[x]
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut repr, a), find(&mut repr, b));
        if ra != rb {
            repr[ra.max(rb)] = ra.min(rb);
        }
    }
    (0..n).map(|x| find(&mut repr, x)).collect()
}

/// All morphisms h : I×X -> Y in Cat together with full homotopy classes on
/// Hom(X, Y).
pub fn homotopy_classes_cat(
    carrier: &Arc<FinCategory>,
    i0: usize,
    i1: usize,
    x: &Arc<FinCategory>,
    y: &Arc<FinCategory>,
    counter: &mut Counter,
) -> Result<HomotopyClasses, SizeExceeded> {
    let homs = enumerate_functors(x, y, counter)?;
    let p = product(carrier, x);
    let ps = p.product_structure().unwrap().clone();
    let cylinders = enumerate_functors(&p, y, counter)?;
    let endpoint = |h: &FinFunctor, point: usize| -> FinFunctor {
        let omap: Vec<usize> =
            (0..x.n_objects()).map(|o| h.on_obj(ps.obj_of_pair(point, o))).collect();
        let mmap: Vec<usize> = (0..x.n_morphisms())
            .map(|m| h.on_mor(ps.mor_of_pair(carrier.identity_of(point), m)))
            .collect();
        FinFunctor::new(x.clone(), y.clone(), omap, mmap).expect("endpoint of a cylinder")
    };
    let index_of = |f: &FinFunctor| homs.iter().position(|h| h == f).expect("endpoint in hom-set");
    let edges: Vec<(usize, usize)> = cylinders
        .iter()
        .map(|h| (index_of(&endpoint(h, i0)), index_of(&endpoint(h, i1))))
        .collect();
    let class = close_classes(homs.len(), &edges);
    Ok(HomotopyClasses::Cat { homs, class })
}

/// All morphisms h : I×X -> Y in presheaves together with homotopy classes.
pub fn homotopy_classes_psh(
    carrier: &GrpdPresheaf,
    i0: &[usize],
    i1: &[usize],
    x: &GrpdPresheaf,
    y: &GrpdPresheaf,
    counter: &mut Counter,
) -> Result<HomotopyClasses, SizeExceeded> {
    let homs = enumerate_presheaf_morphisms(x, y, counter)?;
    let p = product_presheaf(carrier, x);
    let cylinders = enumerate_presheaf_morphisms(&p, y, counter)?;
    let base = x.base().clone();
    let endpoint = |h: &PresheafMorphism, point: &[usize]| -> PresheafMorphism {
        let components: Vec<FinFunctor> = (0..base.n_objects())
            .map(|a| {
                let ps = p.value(a).cat().product_structure().unwrap().clone();
                let xa = x.value(a).cat().clone();
                let omap: Vec<usize> = (0..xa.n_objects())
                    .map(|o| h.component(a).on_obj(ps.obj_of_pair(point[a], o)))
                    .collect();
                let id_pt = carrier.value(a).cat().identity_of(point[a]);
                let mmap: Vec<usize> = (0..xa.n_morphisms())
                    .map(|m| h.component(a).on_mor(ps.mor_of_pair(id_pt, m)))
                    .collect();
                FinFunctor::new(xa, y.value(a).cat().clone(), omap, mmap)
                    .expect("endpoint component")
            })
            .collect();
        PresheafMorphism::new(x.clone(), y.clone(), components).expect("endpoint is natural")
    };
    let index_of = |f: &PresheafMorphism| {
        homs.iter().position(|h| h.same_tables(f)).expect("endpoint in hom-set")
    };
    let edges: Vec<(usize, usize)> = cylinders
        .iter()
        .map(|h| (index_of(&endpoint(h, i0)), index_of(&endpoint(h, i1))))
        .collect();
    let class = close_classes(homs.len(), &edges);
    Ok(HomotopyClasses::Psh { homs, class })
}

/// All homotopies from f to g along the interval, plus the closure verdict.
pub fn enumerate_homotopies(
    interval: &Interval,
    pair: &ParallelPair,
    counter: &mut Counter,
) -> Result<HomotopyAnswer, SizeExceeded> {
    match (interval, pair) {
        (Interval::Cat { carrier, i0, i1 }, ParallelPair::Cat(f, g)) => {
            let x = f.dom().clone();
            let y = f.cod().clone();
            let p = product(carrier, &x);
            let ps = p.product_structure().unwrap().clone();
            let all = enumerate_functors(&p, &y, counter)?;
            let matches_endpoint = |h: &FinFunctor, point: usize, want: &FinFunctor| -> bool {
                (0..x.n_objects()).all(|o| h.on_obj(ps.obj_of_pair(point, o)) == want.on_obj(o))
                    && (0..x.n_morphisms()).all(|m| {
                        h.on_mor(ps.mor_of_pair(carrier.identity_of(point), m)) == want.on_mor(m)
                    })
            };
            let list: Vec<FinFunctor> = all
                .into_iter()
                .filter(|h| matches_endpoint(h, *i0, f) && matches_endpoint(h, *i1, g))
                .collect();
            let classes = homotopy_classes_cat(carrier, *i0, *i1, &x, &y, counter)?;
            let are = match &classes {
                HomotopyClasses::Cat { homs, class } => {
                    let fi = homs.iter().position(|h| h == f).expect("f in hom-set");
                    let gi = homs.iter().position(|h| h == g).expect("g in hom-set");
                    class[fi] == class[gi]
                }
                _ => unreachable!(),
            };
            Ok(HomotopyAnswer { list: HomotopyList::Cat(list), are_homotopic: are })
        }
        (Interval::Presheaf { carrier, i0, i1 }, ParallelPair::Psh(f, g)) => {
            let x = f.source().clone();
            let y = f.target().clone();
            let p = product_presheaf(carrier, &x);
            let all = enumerate_presheaf_morphisms(&p, &y, counter)?;
            let base = x.base().clone();
            let matches_endpoint =
                |h: &PresheafMorphism, point: &[usize], want: &PresheafMorphism| -> bool {
                    (0..base.n_objects()).all(|a| {
                        let ps = p.value(a).cat().product_structure().unwrap().clone();
                        let xa = x.value(a).cat();
                        let id_pt = carrier.value(a).cat().identity_of(point[a]);
                        (0..xa.n_objects()).all(|o| {
                            h.component(a).on_obj(ps.obj_of_pair(point[a], o))
                                == want.component(a).on_obj(o)
                        }) && (0..xa.n_morphisms()).all(|m| {
                            h.component(a).on_mor(ps.mor_of_pair(id_pt, m))
                                == want.component(a).on_mor(m)
                        })
                    })
                };
            let list: Vec<PresheafMorphism> = all
                .into_iter()
                .filter(|h| matches_endpoint(h, i0, f) && matches_endpoint(h, i1, g))
                .collect();
            let classes = homotopy_classes_psh(carrier, i0, i1, &x, &y, counter)?;
            let are = match &classes {
                HomotopyClasses::Psh { homs, class } => {
                    let fi = homs.iter().position(|h| h.same_tables(f)).expect("f in hom-set");
                    let gi = homs.iter().position(|h| h.same_tables(g)).expect("g in hom-set");
                    class[fi] == class[gi]
                }
                _ => unreachable!(),
            };
            Ok(HomotopyAnswer { list: HomotopyList::Psh(list), are_homotopic: are })
        }
        _ => panic!("interval ambient does not match the morphism pair"),
    }
}

/// Convenience wrapper over the closure: are f and g interval-homotopic?
pub fn are_homotopic(
    interval: &Interval,
    pair: &ParallelPair,
    counter: &mut Counter,
) -> Result<bool, SizeExceeded> {
    Ok(enumerate_homotopies(interval, pair, counter)?.are_homotopic)
}

/// Is id_X interval-homotopic to a morphism factoring through the terminal
/// object?
pub fn is_contractible(
    interval: &Interval,
    x_cat: Option<&Arc<FinCategory>>,
    x_psh: Option<&GrpdPresheaf>,
    counter: &mut Counter,
) -> Result<bool, SizeExceeded> {
    match interval {
        Interval::Cat { carrier, i0, i1 } => {
            let x = x_cat.expect("Cat-ambient interval needs a category");
            let classes = homotopy_classes_cat(carrier, *i0, *i1, x, x, counter)?;
            let (homs, class) = match classes {
                HomotopyClasses::Cat { homs, class } => (homs, class),
                _ => unreachable!(),
            };
            let id = FinFunctor::identity(x.clone());
            let idi = match homs.iter().position(|h| *h == id) {
                Some(i) => i,
                None => return Ok(false), // empty category: no identity listed means no objects
            };
            let constant = |h: &FinFunctor| -> bool {
                if x.n_objects() == 0 {
                    return false;
                }
                let p = h.on_obj(0);
                (0..x.n_objects()).all(|o| h.on_obj(o) == p)
                    && (0..x.n_morphisms()).all(|m| h.on_mor(m) == x.identity_of(p))
            };
            Ok(homs
                .iter()
                .enumerate()
                .any(|(i, h)| constant(h) && class[i] == class[idi]))
        }
        Interval::Presheaf { carrier, i0, i1 } => {
            let x = x_psh.expect("presheaf-ambient interval needs a presheaf");
            let classes = homotopy_classes_psh(carrier, i0, i1, x, x, counter)?;
            let (homs, class) = match classes {
                HomotopyClasses::Psh { homs, class } => (homs, class),
                _ => unreachable!(),
            };
            let id = PresheafMorphism::identity(x);
            let idi = homs.iter().position(|h| h.same_tables(&id)).expect("identity in hom-set");
            let base = x.base().clone();
            let constant = |h: &PresheafMorphism| -> bool {
                let mut point = Vec::new();
                for a in 0..base.n_objects() {
                    let xa = x.value(a).cat();
                    if xa.n_objects() == 0 {
                        return false;
                    }
                    let p = h.component(a).on_obj(0);
                    if !(0..xa.n_objects()).all(|o| h.component(a).on_obj(o) == p) {
                        return false;
                    }
                    if !(0..xa.n_morphisms()).all(|m| h.component(a).on_mor(m) == xa.identity_of(p))
                    {
                        return false;
                    }
                    point.push(p);
                }
                x.validate_point(&point).is_ok()
            };
            Ok(homs
                .iter()
                .enumerate()
                .any(|(i, h)| constant(h) && class[i] == class[idi]))
        }
    }
}

/// Enumerate strict presheaf morphisms X -> Y by backtracking over
/// componentwise functors with incremental naturality checks.
pub fn enumerate_presheaf_morphisms(
    x: &GrpdPresheaf,
    y: &GrpdPresheaf,
    counter: &mut Counter,
) -> Result<Vec<PresheafMorphism>, SizeExceeded> {
    let base = x.base().clone();
    let n = base.n_objects();
    let candidates: Vec<Vec<FinFunctor>> = (0..n)
        .map(|a| enumerate_functors(x.value(a).cat(), y.value(a).cat(), counter))
        .collect::<Result<_, _>>()?;
    let mut triggers: Vec<Vec<usize>> = vec![Vec::new(); n.max(1)];
    for f in 0..base.n_morphisms() {
        triggers[base.src(f).max(base.tgt(f))].push(f);
    }
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = vec![usize::MAX; n];
    search(
        x,
        y,
        &base,
        &candidates,
        &triggers,
        &mut chosen,
        0,
        counter,
        &mut out,
    )?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn search(
    x: &GrpdPresheaf,
    y: &GrpdPresheaf,
    base: &Arc<FinCategory>,
    candidates: &[Vec<FinFunctor>],
    triggers: &[Vec<usize>],
    chosen: &mut Vec<usize>,
    k: usize,
    counter: &mut Counter,
    out: &mut Vec<PresheafMorphism>,
) -> Result<(), SizeExceeded> {
    if k == candidates.len() {
        let components: Vec<FinFunctor> =
            chosen.iter().enumerate().map(|(a, &i)| candidates[a][i].clone()).collect();
        out.push(
            PresheafMorphism::new(x.clone(), y.clone(), components)
                .expect("search enforces naturality"),
        );
        return Ok(());
    }
    'cands: for i in 0..candidates[k].len() {
        counter.tick()?;
        chosen[k] = i;
        for &f in &triggers[k] {
            let (a, a2) = (base.src(f), base.tgt(f));
            let ca = &candidates[a][chosen[a]];
            let ca2 = &candidates[a2][chosen[a2]];
            let lhs = FinFunctor::compose(ca, x.action(f)).unwrap();
            let rhs = FinFunctor::compose(y.action(f), ca2).unwrap();
            if lhs.omap() != rhs.omap() || lhs.mmap() != rhs.mmap() {
                continue 'cands;
            }
        }
        search(x, y, base, candidates, triggers, chosen, k + 1, counter, out)?;
    }
    chosen[k] = usize::MAX;
    Ok(())
}

/// Exhaustive enumeration of 2-morphisms φ => ψ: componentwise natural
/// transformations compatible with whiskering along every base action.
pub fn two_morphisms(
    phi: &PresheafMorphism,
    psi: &PresheafMorphism,
    counter: &mut Counter,
) -> Result<Vec<TwoMorphism>, SizeExceeded> {
    let x = phi.source().clone();
    let y = phi.target().clone();
    let base = x.base().clone();
    let n = base.n_objects();
    let candidates: Vec<Vec<crate::fincat::NatTransf>> = (0..n)
        .map(|a| natural_transformations(phi.component(a), psi.component(a), false, counter))
        .collect::<Result<_, _>>()?;
    let mut triggers: Vec<Vec<usize>> = vec![Vec::new(); n.max(1)];
    for f in 0..base.n_morphisms() {
        triggers[base.src(f).max(base.tgt(f))].push(f);
    }
    let mut out = Vec::new();
    let mut chosen = vec![usize::MAX; n];
    search_two(
        phi, psi, &x, &y, &base, &candidates, &triggers, &mut chosen, 0, counter, &mut out,
    )?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn search_two(
    phi: &PresheafMorphism,
    psi: &PresheafMorphism,
    x: &GrpdPresheaf,
    y: &GrpdPresheaf,
    base: &Arc<FinCategory>,
    candidates: &[Vec<crate::fincat::NatTransf>],
    triggers: &[Vec<usize>],
    chosen: &mut Vec<usize>,
    k: usize,
    counter: &mut Counter,
    out: &mut Vec<TwoMorphism>,
) -> Result<(), SizeExceeded> {
    if k == candidates.len() {
        let components: Vec<crate::fincat::NatTransf> =
            chosen.iter().enumerate().map(|(a, &i)| candidates[a][i].clone()).collect();
        out.push(
            TwoMorphism::new(phi.clone(), psi.clone(), components)
                .expect("search enforces whiskering compatibility"),
        );
        return Ok(());
    }
    'cands: for i in 0..candidates[k].len() {
        counter.tick()?;
        chosen[k] = i;
        for &f in &triggers[k] {
            let (a, a2) = (base.src(f), base.tgt(f));
            let alpha_a = &candidates[a][chosen[a]];
            let alpha_a2 = &candidates[a2][chosen[a2]];
            for obj in 0..x.value(a2).cat().n_objects() {
                let lhs = alpha_a.component(x.action(f).on_obj(obj));
                let rhs = y.action(f).on_mor(alpha_a2.component(obj));
                if lhs != rhs {
                    continue 'cands;
                }
            }
        }
        search_two(phi, psi, x, y, base, candidates, triggers, chosen, k + 1, counter, out)?;
    }
    chosen[k] = usize::MAX;
    Ok(())
}
