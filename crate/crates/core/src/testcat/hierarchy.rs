use std::sync::Arc;

use serde::Serialize;

use super::TestCatError;
use crate::adjoints::{i_star, slice_diagram};
use crate::elements::elements;
use crate::fincat::{extremal_objects, product, slice, FinCategory, FinFunctor};
use crate::grpd::{Answer, Verdict};
use crate::homology::{is_aspherical, LocalizerSpec};
use crate::limits::Counter;
use crate::par::par_map;
use crate::presheaf::{embed_discrete, product_presheaf, representable, GrpdPresheaf};

/// The diagonal A -> A×A against the given product (which must carry
/// metadata pairing it with A on both sides).
pub fn diagonal_functor(a: &Arc<FinCategory>, p: &Arc<FinCategory>) -> FinFunctor {
    let ps = p.product_structure().expect("diagonal needs product metadata");
    let omap = (0..a.n_objects()).map(|o| ps.obj_of_pair(o, o)).collect();
    let mmap = (0..a.n_morphisms()).map(|m| ps.mor_of_pair(m, m)).collect();
    FinFunctor::new(a.clone(), p.clone(), omap, mmap).expect("diagonal is a functor")
}

/// Totally aspherical: aspherical and every slice of the diagonal over a pair
/// of objects is aspherical. The finite per-pair criterion is evaluated in
/// parallel.
pub fn is_totally_aspherical(a: &Arc<FinCategory>, loc: &LocalizerSpec) -> Verdict {
    let mut parts = vec![("aspherical".to_string(), is_aspherical(a, loc))];
    let p = product(a, a);
    let delta = diagonal_functor(a, &p);
    let pair_parts = par_map((0..p.n_objects()).collect::<Vec<_>>(), |pair_obj| {
        let s = slice(&delta, pair_obj);
        (format!("diagonal_slice@{}", p.object_id(pair_obj)), is_aspherical(&s.cat, loc))
    });
    parts.extend(pair_parts);
    Verdict::all(parts)
}

/// Locally aspherical presheaf: for every object a, the elements category of
/// a × X is aspherical. Evidence names the failing object.
pub fn is_locally_aspherical(x: &GrpdPresheaf, loc: &LocalizerSpec) -> Verdict {
    let base = x.base().clone();
    let parts = par_map((0..base.n_objects()).collect::<Vec<_>>(), |a| {
        let rep = embed_discrete(&representable(&base, a));
        let prod = product_presheaf(&rep, x);
        let e = elements(&prod);
        (format!("a={}", base.object_id(a)), is_aspherical(&e.total, loc))
    });
    Verdict::all(parts)
}

/// Catalog-bounded evidence for the weak-test property: No when some
/// I_A*(C) fails asphericity, Yes-on-catalog when all pass. The genuine
/// criterion quantifies over all categories with a terminal object, so a
/// passing sweep is evidence, not a decision.
pub fn weak_test_evidence(
    a: &Arc<FinCategory>,
    catalog: &[(String, Arc<FinCategory>)],
    loc: &LocalizerSpec,
    counter: &mut Counter,
) -> Result<Verdict, TestCatError> {
    for (name, c) in catalog {
        let (terms, _) = extremal_objects(c);
        if terms.is_empty() {
            return Err(TestCatError::CatalogEntryLacksTerminal { name: name.clone() });
        }
    }
    let diagram = slice_diagram(a);
    let mut parts = Vec::new();
    for (name, c) in catalog {
        let istar = i_star(&diagram, c, false, counter)?;
        let e = elements(&istar.presheaf);
        parts.push((format!("I*({name})"), is_aspherical(&e.total, loc)));
    }
    Ok(Verdict::all(parts))
}

/// The default catalog: small categories with terminal objects.
pub fn default_catalog() -> Vec<(String, Arc<FinCategory>)> {
    use crate::fincat::{delta, poset, terminal};
    vec![
        ("e".to_string(), terminal()),
        ("delta1".to_string(), delta(1)),
        ("delta2".to_string(), delta(2)),
        ("delta1x1".to_string(), product(&delta(1), &delta(1))),
        (
            "cone3".to_string(),
            poset(
                vec!["x".into(), "y".into(), "t".into()],
                &[("x".into(), "t".into()), ("y".into(), "t".into())],
            )
            .expect("cone poset is valid"),
        ),
    ]
}

/// Everything the hierarchy checker decides about one base category.
#[derive(Clone, Debug, Serialize)]
pub struct HierarchyReport {
    pub aspherical: Verdict,
    pub totally_aspherical: Verdict,
    pub local_test: Verdict,
    pub test: Verdict,
    pub strict_test: Verdict,
    pub weak_test_evidence: Verdict,
    pub catalog: Vec<String>,
    /// I*(Δ₁) and i*(Δ₁) are structurally identical presheaves
    pub cross_check_istar: bool,
    /// implication consistency: strict ⇒ test ⇒ local test; test ⇒ aspherical
    pub consistent: bool,
}

pub fn check_hierarchy(
    a: &Arc<FinCategory>,
    loc: &LocalizerSpec,
    catalog: &[(String, Arc<FinCategory>)],
    counter: &mut Counter,
) -> Result<HierarchyReport, TestCatError> {
    let aspherical = is_aspherical(a, loc);
    let totally_aspherical = is_totally_aspherical(a, loc);

    let diagram = slice_diagram(a);
    let d1 = crate::fincat::delta(1);
    let istar_grpd = i_star(&diagram, &d1, false, counter)?;
    let istar_set = i_star(&diagram, &d1, true, counter)?;
    let cross_check_istar = istar_grpd.presheaf.same_structure(&istar_set.presheaf);

    let local_test = is_locally_aspherical(&istar_grpd.presheaf, loc);
    let test = Verdict::all(vec![
        ("local_test".to_string(), local_test.clone()),
        ("aspherical".to_string(), aspherical.clone()),
    ]);
    let istar_elements_aspherical = {
        let e = elements(&istar_grpd.presheaf);
        is_aspherical(&e.total, loc)
    };
    let strict_test = Verdict::all(vec![
        ("totally_aspherical".to_string(), totally_aspherical.clone()),
        ("istar_delta1_aspherical".to_string(), istar_elements_aspherical),
    ]);
    let weak = weak_test_evidence(a, catalog, loc, counter)?;

    let implies = |p: &Verdict, q: &Verdict| !(p.answer == Answer::Yes && q.answer == Answer::No);
    let consistent = implies(&strict_test, &test)
        && implies(&test, &local_test)
        && implies(&test, &aspherical)
        && implies(&strict_test, &aspherical);

    Ok(HierarchyReport {
        aspherical,
        totally_aspherical,
        local_test,
        test,
        strict_test,
        weak_test_evidence: weak,
        catalog: catalog.iter().map(|(n, _)| n.clone()).collect(),
        cross_check_istar,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{cyclic_group, delta, discrete, poset, terminal};

    fn w1() -> LocalizerSpec {
        LocalizerSpec::w1_default()
    }

    fn counter() -> Counter {
        Counter::new(4_000_000, "test")
    }

    #[test]
    fn terminal_category_is_totally_aspherical() {
        assert_eq!(is_totally_aspherical(&terminal(), &w1()).answer, Answer::Yes);
    }

    #[test]
    fn vee_meet_semilattice_is_totally_aspherical() {
        let v = poset(
            vec!["m".into(), "x".into(), "y".into()],
            &[("m".into(), "x".into()), ("m".into(), "y".into())],
        )
        .unwrap();
        assert_eq!(is_totally_aspherical(&v, &w1()).answer, Answer::Yes);
    }

    #[test]
    fn discrete_two_objects_not_totally_aspherical() {
        let d = discrete(vec!["x".into(), "y".into()]);
        assert_eq!(is_totally_aspherical(&d, &w1()).answer, Answer::No);
    }

    #[test]
    fn delta1_is_totally_aspherical() {
        // Δ₁ has finite meets and a top, so every diagonal slice has a
        // terminal object
        assert_eq!(is_totally_aspherical(&delta(1), &w1()).answer, Answer::Yes);
    }

    #[test]
    fn terminal_presheaf_is_locally_aspherical() {
        let d1 = delta(1);
        let t = crate::presheaf::terminal_presheaf(&d1);
        assert_eq!(is_locally_aspherical(&t, &w1()).answer, Answer::Yes);
    }

    #[test]
    fn representable_0_locally_aspherical_over_delta1() {
        let d1 = delta(1);
        let r = embed_discrete(&representable(&d1, 0));
        assert_eq!(is_locally_aspherical(&r, &w1()).answer, Answer::Yes);
    }

    #[test]
    fn representable_not_locally_aspherical_on_discrete_base() {
        let d = discrete(vec!["x".into(), "y".into()]);
        let r = embed_discrete(&representable(&d, 0));
        let v = is_locally_aspherical(&r, &w1());
        assert_eq!(v.answer, Answer::No);
    }

    #[test]
    fn hierarchy_of_terminal_category() {
        // aspherical but not local test at W₁
        let e = terminal();
        let r = check_hierarchy(&e, &w1(), &default_catalog(), &mut counter()).unwrap();
        assert_eq!(r.aspherical.answer, Answer::Yes);
        assert_eq!(r.local_test.answer, Answer::No);
        assert_eq!(r.test.answer, Answer::No);
        assert_eq!(r.strict_test.answer, Answer::No);
        assert!(r.cross_check_istar);
        assert!(r.consistent);
    }

    #[test]
    fn hierarchy_of_bg2_fails_asphericity() {
        let r = check_hierarchy(&cyclic_group(2), &w1(), &default_catalog(), &mut counter())
            .unwrap();
        assert_eq!(r.aspherical.answer, Answer::No);
        assert_eq!(r.test.answer, Answer::No);
        assert!(r.consistent);
    }

    #[test]
    fn weak_test_evidence_on_point_with_delta1_catalog_is_no() {
        let e = terminal();
        let catalog = vec![("e".to_string(), terminal()), ("delta1".to_string(), delta(1))];
        let v = weak_test_evidence(&e, &catalog, &w1(), &mut counter()).unwrap();
        assert_eq!(v.answer, Answer::No);
    }

    #[test]
    fn weak_test_evidence_on_point_with_terminal_catalog_is_yes() {
        let e = terminal();
        let catalog = vec![("e".to_string(), terminal())];
        let v = weak_test_evidence(&e, &catalog, &w1(), &mut counter()).unwrap();
        assert_eq!(v.answer, Answer::Yes);
    }

    #[test]
    fn catalog_entry_without_terminal_rejected() {
        let e = terminal();
        let catalog = vec![("bg2".to_string(), cyclic_group(2))];
        assert!(matches!(
            weak_test_evidence(&e, &catalog, &w1(), &mut counter()),
            Err(TestCatError::CatalogEntryLacksTerminal { .. })
        ));
    }
}
