//! Integration checks for the localization machinery across the corpus:
//! idempotency up to equivalence, and the W₁ behaviour of functors between
//! categories with terminal objects.

use std::sync::Arc;

use testcat_core::corpus::corpus;
use testcat_core::fincat::{enumerate_functors, FinCategory};
use testcat_core::grpd::{
    enumerate_cosets, group_compare, localize, vertex_group, w1_class, Answer, CosetOutcome,
};
use testcat_core::limits::Counter;

const BUDGET: u64 = 100_000;

/// Realize a localized groupoid as a finite groupoid, one object per
/// component carrying the enumerated vertex group.
fn realize(fp: &testcat_core::FpGroupoid) -> Option<Arc<FinCategory>> {
    let mut objects = Vec::new();
    let mut morphisms: Vec<(String, usize, usize)> = Vec::new();
    let mut identity = Vec::new();
    let mut compose = Vec::new();
    for (ci, comp) in fp.components.iter().enumerate() {
        let table = match enumerate_cosets(&comp.presentation, BUDGET) {
            CosetOutcome::Finite(t) => t,
            CosetOutcome::BudgetExhausted { .. } => return None,
        };
        objects.push(format!("c{ci}"));
        let offset = morphisms.len();
        for e in 0..table.order {
            morphisms.push((format!("c{ci}_g{e}"), ci, ci));
        }
        identity.push(offset);
        for a in 0..table.order {
            for b in 0..table.order {
                // table[a][b] = a·b; composition g∘f with f applied first
                compose.push((offset + a, offset + b, offset + table.table[a][b]));
            }
        }
    }
    Some(Arc::new(
        FinCategory::from_parts(objects, morphisms, identity, &compose)
            .expect("realized groupoid is a valid category"),
    ))
}

#[test]
fn localize_is_idempotent_up_to_equivalence_on_corpus() {
    for (name, cat) in corpus() {
        let fp = localize(&cat);
        let realized = realize(&fp).unwrap_or_else(|| panic!("{name} realizes"));
        let fp2 = localize(&realized);
        assert_eq!(fp.n_components(), fp2.n_components(), "{name}: π₀ stable");
        for ci in 0..fp.n_components() {
            let v = group_compare(
                &vertex_group(&fp, ci).unwrap(),
                &vertex_group(&fp2, ci).unwrap(),
                BUDGET,
            );
            assert_eq!(v.answer, Answer::Yes, "{name} component {ci}: vertex group stable");
        }
    }
}

#[test]
fn every_functor_between_w1_aspherical_categories_is_w1() {
    // categories with a terminal object are W₁-aspherical; any functor
    // between connected, π₁-trivial categories localizes to an equivalence
    let with_terminals = ["e", "delta1", "delta2", "delta1x1"];
    for a_name in with_terminals {
        for b_name in with_terminals {
            let a = testcat_core::corpus::corpus_entry(a_name).unwrap();
            let b = testcat_core::corpus::corpus_entry(b_name).unwrap();
            let mut counter = Counter::new(1_000_000, "w1 sweep");
            let functors = enumerate_functors(&a, &b, &mut counter).unwrap();
            for f in functors {
                let v = w1_class(&f, BUDGET);
                assert_ne!(
                    v.answer,
                    Answer::No,
                    "functor {a_name} -> {b_name} must not be W₁-rejected"
                );
            }
        }
    }
}
