//! Property tests for the algebraic laws: category constructions, Smith
//! normal form, nerves, and localization, exercised on randomly generated
//! posets and integer matrices.

use std::sync::Arc;

use proptest::prelude::*;

use testcat_core::fincat::{
    delta, extremal_objects, find_isomorphism, is_grothendieck_fibration, opposite, poset,
    product, slice, terminal, FinCategory, FinFunctor,
};
use testcat_core::grpd::localize;
use testcat_core::homology::{homology, nerve, ChainComplex, IntMatrix, smith_normal_form};
use testcat_core::limits::Counter;

/// A random poset on up to five elements: edges only from lower to higher
/// indices, then transitively closed, so the relation is always valid.
fn arb_poset() -> impl Strategy<Value = Arc<FinCategory>> {
    (1usize..=5, proptest::collection::vec(any::<bool>(), 0..25)).prop_map(|(n, bits)| {
        let mut le = vec![vec![false; n]; n];
        let mut k = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                if k < bits.len() && bits[k] {
                    le[i][j] = true;
                }
                k += 1;
            }
        }
        // transitive closure
        for m in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if le[i][m] && le[m][j] {
                        le[i][j] = true;
                    }
                }
            }
        }
        let objects: Vec<String> = (0..n).map(|i| format!("o{i}")).collect();
        let mut rel = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if i != j && le[i][j] {
                    rel.push((objects[i].clone(), objects[j].clone()));
                }
            }
        }
        poset(objects, &rel).expect("closure of a DAG is a poset")
    })
}

fn arb_matrix() -> impl Strategy<Value = IntMatrix> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-9i64..=9, r * c).prop_map(move |data| {
            let rows: Vec<Vec<i64>> = data.chunks(c).map(|ch| ch.to_vec()).collect();
            IntMatrix::from_rows(&rows)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn double_opposite_is_identity(p in arb_poset()) {
        let oo = opposite(&opposite(&p));
        prop_assert!(oo.same_table(&p));
    }

    #[test]
    fn product_with_terminal_is_isomorphic(p in arb_poset()) {
        let prod = product(&p, &terminal());
        let iso = find_isomorphism(&prod, &p, &mut Counter::new(1_000_000, "laws"));
        prop_assert!(iso.is_some());
    }

    #[test]
    fn identity_functor_is_a_fibration(p in arb_poset()) {
        prop_assert!(is_grothendieck_fibration(&FinFunctor::identity(p)).is_fibration);
    }

    #[test]
    fn terminal_objects_have_singleton_homs(p in arb_poset()) {
        let (terms, inits) = extremal_objects(&p);
        for t in terms {
            for x in 0..p.n_objects() {
                prop_assert_eq!(p.hom(x, t).len(), 1);
            }
        }
        for i in inits {
            for x in 0..p.n_objects() {
                prop_assert_eq!(p.hom(i, x).len(), 1);
            }
        }
    }

    #[test]
    fn slice_projection_is_faithful(p in arb_poset()) {
        let id = FinFunctor::identity(p.clone());
        for b in 0..p.n_objects() {
            let s = slice(&id, b);
            // distinct parallel slice morphisms project to distinct morphisms
            for (i, &(f1, s1, t1)) in s.mors.iter().enumerate() {
                for &(f2, s2, t2) in &s.mors[i + 1..] {
                    if s1 == s2 && t1 == t2 {
                        prop_assert_ne!(f1, f2);
                    }
                }
            }
        }
    }

    #[test]
    fn smith_form_verifies(m in arb_matrix()) {
        let s = smith_normal_form(&m);
        prop_assert!(s.verify(&m));
    }

    #[test]
    fn nerve_boundaries_square_to_zero(p in arb_poset()) {
        let n = nerve(&p, 4);
        let complex = ChainComplex::of_nerve(&p, &n);
        prop_assert!(complex.check_dd_zero());
    }

    #[test]
    fn h0_counts_connected_components(p in arb_poset()) {
        let fp = localize(&p);
        let h = homology(&p, 1);
        prop_assert_eq!(h.degree(0).betti, fp.n_components());
    }

    #[test]
    fn pi0_of_product_multiplies(p in arb_poset(), q in arb_poset()) {
        let prod = product(&p, &q);
        let fp = localize(&prod);
        prop_assert_eq!(
            fp.n_components(),
            localize(&p).n_components() * localize(&q).n_components()
        );
    }
}

#[test]
fn delta_slice_over_top_is_the_whole_chain() {
    for n in 1..=3 {
        let d = delta(n);
        let s = slice(&FinFunctor::identity(d.clone()), n);
        assert!(find_isomorphism(&s.cat, &d, &mut Counter::new(1_000_000, "laws")).is_some());
    }
}
