use std::sync::Arc;

use super::category::FinCategory;
use super::functor::FinFunctor;
use crate::limits::{Counter, SizeExceeded};

/// Terminal and initial objects, each list in object-index order.
pub fn extremal_objects(c: &FinCategory) -> (Vec<usize>, Vec<usize>) {
    let terminal = (0..c.n_objects())
        .filter(|&t| (0..c.n_objects()).all(|x| c.hom(x, t).len() == 1))
        .collect();
    let initial = (0..c.n_objects())
        .filter(|&i| (0..c.n_objects()).all(|x| c.hom(i, x).len() == 1))
        .collect();
    (terminal, initial)
}

/// Partition of objects into isomorphism classes, found by enumerating
/// mutually inverse pairs. Classes are sorted by their smallest member.
pub fn iso_classes(c: &FinCategory) -> Vec<Vec<usize>> {
    let n = c.n_objects();
    let mut repr: Vec<usize> = (0..n).collect();
    fn find(repr: &mut Vec<usize>, x: usize) -> usize {
        if repr[x] != x {
            let r = find(repr, repr[x]);
            repr[x] = r;
        }
        repr[x]
    }
    for m in 0..c.n_morphisms() {
        if c.is_iso(m) {
            let (a, b) = (c.src(m), c.tgt(m));
            let (ra, rb) = (find(&mut repr, a), find(&mut repr, b));
            if ra != rb {
                let lo = ra.min(rb);
                let hi = ra.max(rb);
                repr[hi] = lo;
            }
        }
    }
    let mut classes: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for x in 0..n {
        let r = find(&mut repr, x);
        classes.entry(r).or_default().push(x);
    }
    classes.into_values().collect()
}

/// Are x and y isomorphic in c?
pub fn objects_isomorphic(c: &FinCategory, x: usize, y: usize) -> bool {
    x == y || c.hom(x, y).into_iter().any(|m| c.is_iso(m))
}

/// Search for an isomorphism of categories by backtracking over object and
/// morphism bijections, with lexicographically smallest assignments tried
/// first so the result is deterministic.
pub fn find_isomorphism(
    a: &Arc<FinCategory>,
    b: &Arc<FinCategory>,
    counter: &mut Counter,
) -> Option<FinFunctor> {
    match try_find_isomorphism(a, b, counter) {
        Ok(r) => r,
        Err(_) => None,
    }
}

/// Like [`find_isomorphism`] but surfacing cap exhaustion.
pub fn try_find_isomorphism(
    a: &Arc<FinCategory>,
    b: &Arc<FinCategory>,
    counter: &mut Counter,
) -> Result<Option<FinFunctor>, SizeExceeded> {
    if a.n_objects() != b.n_objects() || a.n_morphisms() != b.n_morphisms() {
        return Ok(None);
    }
    let n = a.n_objects();
    // object fingerprint: sorted hom-set sizes in and out, endo count
    let profile = |c: &FinCategory, o: usize| {
        let mut outs: Vec<usize> = (0..c.n_objects()).map(|y| c.hom(o, y).len()).collect();
        let mut ins: Vec<usize> = (0..c.n_objects()).map(|x| c.hom(x, o).len()).collect();
        outs.sort_unstable();
        ins.sort_unstable();
        (outs, ins)
    };
    let pa: Vec<_> = (0..n).map(|o| profile(a, o)).collect();
    let pb: Vec<_> = (0..n).map(|o| profile(b, o)).collect();

    let mut omap = vec![usize::MAX; n];
    let mut used_obj = vec![false; n];
    let mut result = None;
    search_objects(a, b, &pa, &pb, &mut omap, &mut used_obj, 0, counter, &mut result)?;
    Ok(result)
}

#[allow(clippy::too_many_arguments)]
fn search_objects(
    a: &Arc<FinCategory>,
    b: &Arc<FinCategory>,
    pa: &[(Vec<usize>, Vec<usize>)],
    pb: &[(Vec<usize>, Vec<usize>)],
    omap: &mut Vec<usize>,
    used: &mut Vec<bool>,
    k: usize,
    counter: &mut Counter,
    result: &mut Option<FinFunctor>,
) -> Result<(), SizeExceeded> {
    if result.is_some() {
        return Ok(());
    }
    if k == omap.len() {
        // hom-set cardinalities must match pairwise before the morphism search
        for x in 0..a.n_objects() {
            for y in 0..a.n_objects() {
                if a.hom(x, y).len() != b.hom(omap[x], omap[y]).len() {
                    return Ok(());
                }
            }
        }
        let mut mmap = vec![usize::MAX; a.n_morphisms()];
        let mut used_m = vec![false; b.n_morphisms()];
        for o in 0..a.n_objects() {
            let im = b.identity_of(omap[o]);
            mmap[a.identity_of(o)] = im;
            used_m[im] = true;
        }
        let non_id: Vec<usize> =
            (0..a.n_morphisms()).filter(|&m| !a.is_identity(m)).collect();
        search_morphisms(a, b, omap, &non_id, &mut mmap, &mut used_m, 0, counter, result)?;
        return Ok(());
    }
    for cand in 0..omap.len() {
        if used[cand] || pa[k] != pb[cand] {
            continue;
        }
        counter.tick()?;
        omap[k] = cand;
        used[cand] = true;
        search_objects(a, b, pa, pb, omap, used, k + 1, counter, result)?;
        used[cand] = false;
        omap[k] = usize::MAX;
        if result.is_some() {
            return Ok(());
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn search_morphisms(
    a: &Arc<FinCategory>,
    b: &Arc<FinCategory>,
    omap: &[usize],
    non_id: &[usize],
    mmap: &mut Vec<usize>,
    used: &mut Vec<bool>,
    k: usize,
    counter: &mut Counter,
    result: &mut Option<FinFunctor>,
) -> Result<(), SizeExceeded> {
    if result.is_some() {
        return Ok(());
    }
    if k == non_id.len() {
        // all entries assigned bijectively; verify composition tables agree
        for (g, f, h) in a.composable_triples() {
            if b.compose(mmap[g], mmap[f]) != Some(mmap[h]) {
                return Ok(());
            }
        }
        *result = Some(
            FinFunctor::new(a.clone(), b.clone(), omap.to_vec(), mmap.clone())
                .expect("validated isomorphism tables form a functor"),
        );
        return Ok(());
    }
    let m = non_id[k];
    let (s, t) = (omap[a.src(m)], omap[a.tgt(m)]);
    for cand in b.hom(s, t) {
        if used[cand] || b.is_identity(cand) {
            continue;
        }
        counter.tick()?;
        mmap[m] = cand;
        used[cand] = true;
        // partial composition consistency among assigned morphisms
        let consistent = a.composable_triples().into_iter().all(|(g, f, h)| {
            if mmap[g] == usize::MAX || mmap[f] == usize::MAX || mmap[h] == usize::MAX {
                true
            } else {
                b.compose(mmap[g], mmap[f]) == Some(mmap[h])
            }
        });
        if consistent {
            search_morphisms(a, b, omap, non_id, mmap, used, k + 1, counter, result)?;
        }
        used[cand] = false;
        mmap[m] = usize::MAX;
        if result.is_some() {
            return Ok(());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::build::{cyclic_group, delta, free_iso};

    #[test]
    fn delta1_extremals() {
        let d1 = delta(1);
        let (t, i) = extremal_objects(&d1);
        assert_eq!(t, vec![1]);
        assert_eq!(i, vec![0]);
    }

    #[test]
    fn free_iso_extremals_and_classes() {
        let j = free_iso();
        let (t, i) = extremal_objects(&j);
        assert_eq!(t, vec![0, 1]);
        assert_eq!(i, vec![0, 1]);
        assert_eq!(iso_classes(&j), vec![vec![0, 1]]);
    }

    #[test]
    fn bg2_has_no_extremals() {
        let c = cyclic_group(2);
        let (t, i) = extremal_objects(&c);
        assert!(t.is_empty());
        assert!(i.is_empty());
        assert_eq!(iso_classes(&c), vec![vec![0]]);
    }

    #[test]
    fn delta1_iso_classes_are_singletons() {
        let d1 = delta(1);
        assert_eq!(iso_classes(&d1), vec![vec![0], vec![1]]);
    }

    #[test]
    fn cyclic_groups_of_different_order_not_isomorphic() {
        let b2 = cyclic_group(2);
        let b3 = cyclic_group(3);
        assert!(find_isomorphism(&b2, &b3, &mut Counter::new(10_000, "test")).is_none());
        assert!(find_isomorphism(&b3, &b3, &mut Counter::new(10_000, "test")).is_some());
    }
}
