use std::sync::Arc;

use super::category::FinCategory;
use super::functor::FinFunctor;

/// Slice category A/b along a functor u : A -> B, with its projection to A
/// and index tables decoding slice objects and morphisms.
#[derive(Clone, Debug)]
pub struct SliceResult {
    pub cat: Arc<FinCategory>,
    /// forgetful functor to dom(u)
    pub projection: FinFunctor,
    /// slice object -> (object a of A, morphism q : u(a) -> b of B)
    pub objs: Vec<(usize, usize)>,
    /// slice morphism -> (morphism f of A, source slice object, target slice object)
    pub mors: Vec<(usize, usize, usize)>,
}

impl SliceResult {
    /// Index of the slice object (a, q), if present.
    pub fn obj_of(&self, a: usize, q: usize) -> Option<usize> {
        self.objs.iter().position(|&p| p == (a, q))
    }
}

/// The slice of u : A -> B over the object b of B. Objects are pairs
/// (a, q : u(a) -> b); a morphism (a, q) -> (a', q') is a morphism f : a -> a'
/// of A with q'∘u(f) = q. Use u = identity for the plain slice A/a.
pub fn slice(u: &FinFunctor, b: usize) -> SliceResult {
    let a_cat = u.dom();
    let b_cat = u.cod();
    assert!(b < b_cat.n_objects(), "slice object out of range");

    let mut objs = Vec::new();
    for a in 0..a_cat.n_objects() {
        for q in b_cat.hom(u.on_obj(a), b) {
            objs.push((a, q));
        }
    }
    let mut mors = Vec::new();
    let mut morphisms = Vec::new();
    for f in 0..a_cat.n_morphisms() {
        let (s, t) = (a_cat.src(f), a_cat.tgt(f));
        for (so, &(a1, q1)) in objs.iter().enumerate() {
            if a1 != s {
                continue;
            }
            for (to, &(a2, q2)) in objs.iter().enumerate() {
                if a2 != t {
                    continue;
                }
                if b_cat.compose(q2, u.on_mor(f)) == Some(q1) {
                    morphisms.push((
                        format!(
                            "({},{},{})",
                            a_cat.morphism_id(f),
                            b_cat.morphism_id(q1),
                            b_cat.morphism_id(q2)
                        ),
                        so,
                        to,
                    ));
                    mors.push((f, so, to));
                }
            }
        }
    }
    let mor_idx = |f: usize, so: usize, to: usize| {
        mors.iter().position(|&p| p == (f, so, to)).unwrap()
    };

    let objects: Vec<String> = objs
        .iter()
        .map(|&(a, q)| format!("({},{})", a_cat.object_id(a), b_cat.morphism_id(q)))
        .collect();
    let identity: Vec<usize> = objs
        .iter()
        .enumerate()
        .map(|(so, &(a, _))| mor_idx(a_cat.identity_of(a), so, so))
        .collect();

    let mut compose = Vec::new();
    for (i, &(f, so, mid)) in mors.iter().enumerate() {
        for (j, &(g, mid2, to)) in mors.iter().enumerate() {
            if mid2 == mid {
                let gf = a_cat.compose(g, f).expect("projections composable");
                compose.push((j, i, mor_idx(gf, so, to)));
            }
        }
    }

    let cat = Arc::new(
        FinCategory::from_parts(objects, morphisms, identity, &compose)
            .expect("slice of a valid category is valid"),
    );
    let omap = objs.iter().map(|&(a, _)| a).collect();
    let mmap = mors.iter().map(|&(f, _, _)| f).collect();
    let projection =
        FinFunctor::new(cat.clone(), a_cat.clone(), omap, mmap).expect("slice projection is a functor");
    SliceResult { cat, projection, objs, mors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::build::{delta, product, terminal};
    use crate::fincat::iso::find_isomorphism;
    use crate::limits::Counter;

    #[test]
    fn slice_of_delta1_over_top() {
        let d1 = delta(1);
        let s = slice(&FinFunctor::identity(d1.clone()), 1);
        assert!(find_isomorphism(&s.cat, &d1, &mut Counter::new(100_000, "test")).is_some());
    }

    #[test]
    fn slice_of_terminal() {
        let e = terminal();
        let s = slice(&FinFunctor::identity(e.clone()), 0);
        assert_eq!(s.cat.n_objects(), 1);
        assert_eq!(s.cat.n_morphisms(), 1);
    }

    #[test]
    fn diagonal_slice_has_one_object() {
        // slice of the diagonal Δ₁ -> Δ₁×Δ₁ over (0,1): only (0, 0->0, 0->1)
        let d1 = delta(1);
        let p = product(&d1, &d1);
        let ps = p.product_structure().unwrap().clone();
        let omap: Vec<usize> = (0..2).map(|o| ps.obj_of_pair(o, o)).collect();
        let mmap: Vec<usize> = (0..3).map(|m| ps.mor_of_pair(m, m)).collect();
        let diag = FinFunctor::new(d1.clone(), p.clone(), omap, mmap).unwrap();
        let b = ps.obj_of_pair(0, 1);
        let s = slice(&diag, b);
        assert_eq!(s.cat.n_objects(), 1);
    }

    #[test]
    fn projection_forgets_the_arrow_to_base() {
        let d2 = delta(2);
        let s = slice(&FinFunctor::identity(d2.clone()), 2);
        for (so, &(a, _)) in s.objs.iter().enumerate() {
            assert_eq!(s.projection.on_obj(so), a);
        }
    }
}
