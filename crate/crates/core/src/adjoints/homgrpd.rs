use std::collections::BTreeMap;
use std::sync::Arc;

use crate::fincat::{enumerate_functors, natural_transformations, FinCategory, FinFunctor, NatTransf};
use crate::grpd::FinGroupoid;
use crate::limits::{Counter, SizeExceeded};

/// The groupoid of functors C -> D and natural isomorphisms, together with
/// decode tables back to the functors and transformations.
#[derive(Clone, Debug)]
pub struct HomGroupoid {
    pub grpd: Arc<FinGroupoid>,
    /// object index -> functor
    pub functors: Vec<FinFunctor>,
    /// morphism index -> natural isomorphism
    pub isos: Vec<NatTransf>,
    functor_lookup: BTreeMap<(Vec<usize>, Vec<usize>), usize>,
    iso_lookup: BTreeMap<(usize, usize, Vec<usize>), usize>,
}

impl HomGroupoid {
    /// Index of a functor by its tables.
    pub fn functor_index(&self, f: &FinFunctor) -> Option<usize> {
        self.functor_lookup.get(&(f.omap().to_vec(), f.mmap().to_vec())).copied()
    }

    /// Index of a transformation by endpoints and components.
    pub fn iso_index(&self, src: usize, tgt: usize, components: &[usize]) -> Option<usize> {
        self.iso_lookup.get(&(src, tgt, components.to_vec())).copied()
    }
}

fn assemble(
    functors: Vec<FinFunctor>,
    isos_per_pair: Vec<Vec<NatTransf>>,
    pairs: Vec<(usize, usize)>,
) -> HomGroupoid {
    let functor_lookup: BTreeMap<(Vec<usize>, Vec<usize>), usize> = functors
        .iter()
        .enumerate()
        .map(|(i, f)| ((f.omap().to_vec(), f.mmap().to_vec()), i))
        .collect();

    let mut isos: Vec<NatTransf> = Vec::new();
    let mut morphisms: Vec<(String, usize, usize)> = Vec::new();
    let mut iso_lookup: BTreeMap<(usize, usize, Vec<usize>), usize> = BTreeMap::new();
    let mut identity = vec![usize::MAX; functors.len()];
    let mut fresh = 0usize;
    for ((i, j), ts) in pairs.into_iter().zip(isos_per_pair) {
        for t in ts {
            let idx = isos.len();
            let is_id = i == j
                && t.components()
                    .iter()
                    .enumerate()
                    .all(|(o, &m)| m == functors[i].cod().identity_of(functors[i].on_obj(o)));
            let id_str = if is_id {
                identity[i] = idx;
                format!("id_F{i}")
            } else {
                fresh += 1;
                format!("n{}", fresh - 1)
            };
            iso_lookup.insert((i, j, t.components().to_vec()), idx);
            morphisms.push((id_str, i, j));
            isos.push(t);
        }
    }
    debug_assert!(identity.iter().all(|&m| m != usize::MAX));

    let mut compose = Vec::new();
    for (p, tp) in isos.iter().enumerate() {
        let (sp, tp_tgt) = (morphisms[p].1, morphisms[p].2);
        for (q, tq) in isos.iter().enumerate() {
            let (sq, tq_tgt) = (morphisms[q].1, morphisms[q].2);
            if sq != tp_tgt {
                continue;
            }
            let vert = tp.then(tq).expect("vertical composite defined");
            let idx = iso_lookup[&(sp, tq_tgt, vert.components().to_vec())];
            compose.push((q, p, idx));
        }
    }

    let objects: Vec<String> = (0..functors.len()).map(|i| format!("F{i}")).collect();
    let cat = Arc::new(
        FinCategory::from_parts(objects, morphisms, identity, &compose)
            .expect("hom-groupoid table is valid"),
    );
    let grpd = Arc::new(
        FinGroupoid::new(cat).expect("natural isomorphisms compose to a groupoid"),
    );
    HomGroupoid { grpd, functors, isos, functor_lookup, iso_lookup }
}

/// The groupoid Homi(C, D): all functors, all natural isomorphisms.
pub fn hom_groupoid(
    c: &Arc<FinCategory>,
    d: &Arc<FinCategory>,
    counter: &mut Counter,
) -> Result<HomGroupoid, SizeExceeded> {
    let functors = enumerate_functors(c, d, counter)?;
    let mut isos_per_pair = Vec::new();
    let mut pairs = Vec::new();
    for i in 0..functors.len() {
        for j in 0..functors.len() {
            let ts = natural_transformations(&functors[i], &functors[j], true, counter)?;
            pairs.push((i, j));
            isos_per_pair.push(ts);
        }
    }
    Ok(assemble(functors, isos_per_pair, pairs))
}

/// The Set-valued variant: same functor objects, identity morphisms only.
/// When D has no non-identity isomorphisms this coincides structurally with
/// [`hom_groupoid`].
pub fn hom_set_discrete(
    c: &Arc<FinCategory>,
    d: &Arc<FinCategory>,
    counter: &mut Counter,
) -> Result<HomGroupoid, SizeExceeded> {
    let functors = enumerate_functors(c, d, counter)?;
    let mut isos_per_pair = Vec::new();
    let mut pairs = Vec::new();
    for (i, f) in functors.iter().enumerate() {
        pairs.push((i, i));
        isos_per_pair.push(vec![NatTransf::identity(f)]);
    }
    Ok(assemble(functors, isos_per_pair, pairs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{cyclic_group, delta, free_iso, terminal};

    fn counter() -> Counter {
        Counter::new(1_000_000, "test")
    }

    #[test]
    fn hom_into_terminal_is_terminal() {
        let h = hom_groupoid(&delta(2), &terminal(), &mut counter()).unwrap();
        assert_eq!(h.grpd.cat().n_objects(), 1);
        assert_eq!(h.grpd.cat().n_morphisms(), 1);
    }

    #[test]
    fn hom_from_point_is_maximal_subgroupoid() {
        let h = hom_groupoid(&terminal(), &free_iso(), &mut counter()).unwrap();
        assert_eq!(h.grpd.cat().n_objects(), 2);
        assert_eq!(h.grpd.cat().n_morphisms(), 4);
    }

    #[test]
    fn hom_delta1_delta1_is_discrete_on_three() {
        let d1 = delta(1);
        let h = hom_groupoid(&d1, &d1, &mut counter()).unwrap();
        assert_eq!(h.grpd.cat().n_objects(), 3);
        assert!(h.grpd.is_discrete());
    }

    #[test]
    fn discrete_variant_matches_on_iso_free_target() {
        let d1 = delta(1);
        let a = hom_groupoid(&d1, &d1, &mut counter()).unwrap();
        let b = hom_set_discrete(&d1, &d1, &mut counter()).unwrap();
        assert!(a.grpd.cat().same_table(b.grpd.cat()));
    }

    #[test]
    fn hom_from_point_into_bg2_has_two_morphisms() {
        let h = hom_groupoid(&terminal(), &cyclic_group(2), &mut counter()).unwrap();
        assert_eq!(h.grpd.cat().n_objects(), 1);
        assert_eq!(h.grpd.cat().n_morphisms(), 2);
    }

    #[test]
    fn tiny_cap_fails_fast() {
        let d1 = delta(1);
        let mut tiny = Counter::new(3, "cap test");
        assert!(hom_groupoid(&d1, &d1, &mut tiny).is_err());
    }
}
