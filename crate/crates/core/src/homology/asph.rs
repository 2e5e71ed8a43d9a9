use std::sync::Arc;

use serde::Serialize;

use super::chain::homology;
use crate::elements::{cat_elements_map, grothendieck};
use crate::fincat::{extremal_objects, slice, FinCategory, FinFunctor};
use crate::grpd::{group_compare, localize, vertex_group, Evidence, GroupPresentation, Verdict};
use crate::limits::Counter;
use crate::par::par_map;
use crate::presheaf::{is_contractible, CatPresheafMorphism, Interval};

/// Choice of basic localizer semantics for the asphericity oracles.
/// W₁ is exact; W∞ is evidence-based under a truncation bound.
#[derive(Clone, Copy, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LocalizerSpec {
    W1 { budget: u64 },
    WinftyEvidence { dim: usize, pi1_budget: u64 },
}

impl LocalizerSpec {
    pub fn w1_default() -> LocalizerSpec {
        LocalizerSpec::W1 { budget: crate::limits::DEFAULT_COSET_BUDGET }
    }

    pub fn winfty_default() -> LocalizerSpec {
        LocalizerSpec::WinftyEvidence {
            dim: crate::limits::DEFAULT_NERVE_DIM,
            pi1_budget: crate::limits::DEFAULT_COSET_BUDGET,
        }
    }
}

/// Budget for the Δ₁-contractibility probe; the probe is skipped when the
/// functor search outgrows it.
const CONTRACTIBILITY_CAP: u64 = 200_000;

fn delta1_contractible(cat: &Arc<FinCategory>) -> Option<bool> {
    let d1 = crate::fincat::delta(1);
    let interval = Interval::in_cat(d1, 0, 1);
    let mut counter = Counter::new(CONTRACTIBILITY_CAP, "Δ₁-contractibility probe");
    is_contractible(&interval, Some(cat), None, &mut counter).ok()
}

/// Is the canonical functor to the terminal category in the localizer?
///
/// Sufficient certificates first (terminal or initial object, Δ₁-contractible
/// for the evidence-based localizer), then the localizer-specific decision.
pub fn is_aspherical(cat: &Arc<FinCategory>, loc: &LocalizerSpec) -> Verdict {
    if cat.is_empty() {
        return Verdict::no(Evidence::EmptyCategory);
    }
    let (terminals, initials) = extremal_objects(cat);
    if let Some(&t) = terminals.first() {
        return Verdict::yes(Evidence::TerminalObject { object: cat.object_id(t).into() });
    }
    if let Some(&i) = initials.first() {
        return Verdict::yes(Evidence::InitialObject { object: cat.object_id(i).into() });
    }
    match *loc {
        LocalizerSpec::W1 { budget } => {
            let fp = localize(cat);
            if fp.n_components() != 1 {
                return Verdict::no(Evidence::ComponentCount {
                    left: fp.n_components(),
                    right: 1,
                });
            }
            let vg = vertex_group(&fp, 0).expect("component 0 exists");
            let exact = group_compare(&vg, &GroupPresentation::trivial(), budget);
            if exact.is_unknown() && delta1_contractible(cat) == Some(true) {
                // contractibility is a sufficient certificate for any localizer
                return Verdict::yes(Evidence::Contractible);
            }
            exact
        }
        LocalizerSpec::WinftyEvidence { dim, pi1_budget } => {
            let h = homology(cat, dim);
            if let Some(d) = h.first_nonzero() {
                return Verdict::no(Evidence::HomologyNonzero {
                    degree: d.degree,
                    betti: d.betti,
                    torsion: d.torsion.clone(),
                });
            }
            let fp = localize(cat);
            if fp.n_components() == 1 {
                let vg = vertex_group(&fp, 0).expect("component 0 exists");
                let pi1 = group_compare(&vg, &GroupPresentation::trivial(), pi1_budget);
                if pi1.is_no() {
                    return Verdict::no(pi1.evidence);
                }
            }
            if delta1_contractible(cat) == Some(true) {
                return Verdict::yes(Evidence::Contractible);
            }
            Verdict::unknown(Evidence::TruncationInconclusive { valid_through: h.valid_through })
        }
    }
}

/// A morphism is aspherical when every slice over an object of the codomain
/// is; the conjunction is evaluated per object, in parallel.
pub fn is_aspherical_morphism(u: &FinFunctor, loc: &LocalizerSpec) -> Verdict {
    let cod = u.cod().clone();
    let parts = par_map((0..cod.n_objects()).collect(), |b| {
        let s = slice(u, b);
        (format!("slice@{}", cod.object_id(b)), is_aspherical(&s.cat, loc))
    });
    Verdict::all(parts)
}

/// Membership of a single functor in the localizer: exact for W₁,
/// evidence-based for W∞.
pub fn w_class(u: &FinFunctor, loc: &LocalizerSpec) -> Verdict {
    match *loc {
        LocalizerSpec::W1 { budget } => crate::grpd::w1_class(u, budget),
        LocalizerSpec::WinftyEvidence { dim, pi1_budget } => {
            // π₁ obstruction is sound: a W∞-equivalence induces a π₁-equivalence
            let pi1 = crate::grpd::w1_class(u, pi1_budget);
            if pi1.is_no() {
                return Verdict::no(pi1.evidence);
            }
            let hd = homology(u.dom(), dim);
            let hc = homology(u.cod(), dim);
            for k in 0..=dim {
                let (a, b) = (hd.degree(k), hc.degree(k));
                if a.valid && b.valid && (a.betti != b.betti || a.torsion != b.torsion) {
                    return Verdict::no(Evidence::HomologyNonzero {
                        degree: k,
                        betti: a.betti.max(b.betti),
                        torsion: if a.torsion.len() >= b.torsion.len() {
                            a.torsion.clone()
                        } else {
                            b.torsion.clone()
                        },
                    });
                }
            }
            let asph = is_aspherical_morphism(u, loc);
            if asph.is_yes() {
                return Verdict::yes(asph.evidence);
            }
            Verdict::unknown(Evidence::TruncationInconclusive { valid_through: dim })
        }
    }
}

/// Consistency record for the colimit-compatibility property: pointwise
/// verdicts for each component, the verdict for the induced functor on
/// Grothendieck constructions, and whether "all pointwise Yes ⇒ total not No"
/// held on this instance.
#[derive(Clone, Debug)]
pub struct ThomasonRecord {
    pub pointwise: Vec<(String, Verdict)>,
    pub total: Verdict,
    pub consistent: bool,
}

pub fn thomason_check(phi: &CatPresheafMorphism, loc: &LocalizerSpec) -> ThomasonRecord {
    let base = phi.source().base().clone();
    let pointwise = par_map((0..base.n_objects()).collect(), |a| {
        (base.object_id(a).to_string(), w_class(phi.component(a), loc))
    });
    let src = grothendieck(phi.source());
    let tgt = grothendieck(phi.target());
    let total = w_class(&cat_elements_map(phi, &src, &tgt), loc);
    let all_yes = pointwise.iter().all(|(_, v)| v.is_yes());
    let consistent = !(all_yes && total.is_no());
    ThomasonRecord { pointwise, total, consistent }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{cyclic_group, delta, discrete, terminal};
    use crate::grpd::Answer;

    fn w1() -> LocalizerSpec {
        LocalizerSpec::w1_default()
    }

    #[test]
    fn empty_category_is_not_aspherical() {
        let e = crate::fincat::empty();
        for loc in [w1(), LocalizerSpec::winfty_default()] {
            let v = is_aspherical(&e, &loc);
            assert_eq!(v.answer, Answer::No);
            assert_eq!(v.evidence, Evidence::EmptyCategory);
        }
    }

    #[test]
    fn delta1_is_aspherical_via_terminal_object() {
        let v = is_aspherical(&delta(1), &w1());
        assert_eq!(v.answer, Answer::Yes);
        assert!(matches!(v.evidence, Evidence::TerminalObject { .. }));
    }

    #[test]
    fn bg2_is_not_w1_aspherical() {
        let v = is_aspherical(&cyclic_group(2), &w1());
        assert_eq!(v.answer, Answer::No);
    }

    #[test]
    fn two_points_not_aspherical_for_any_localizer() {
        let d = discrete(vec!["x".into(), "y".into()]);
        assert_eq!(is_aspherical(&d, &w1()).answer, Answer::No);
        assert_eq!(is_aspherical(&d, &LocalizerSpec::winfty_default()).answer, Answer::No);
    }

    #[test]
    fn bg2_not_winfty_aspherical_via_homology() {
        let v = is_aspherical(&cyclic_group(2), &LocalizerSpec::winfty_default());
        assert_eq!(v.answer, Answer::No);
        assert!(matches!(v.evidence, Evidence::HomologyNonzero { degree: 1, .. }));
    }

    #[test]
    fn equivalent_categories_get_consistent_verdicts() {
        // J ≃ e and BG(2) ≃ BG(2): verdicts must never contradict
        let pairs = [
            (crate::fincat::free_iso(), terminal()),
            (cyclic_group(2), cyclic_group(2)),
            (delta(2), terminal()),
        ];
        for loc in [w1(), LocalizerSpec::winfty_default()] {
            for (a, b) in &pairs {
                let va = is_aspherical(a, &loc);
                let vb = is_aspherical(b, &loc);
                let contradictory = (va.answer == Answer::Yes && vb.answer == Answer::No)
                    || (va.answer == Answer::No && vb.answer == Answer::Yes);
                assert!(!contradictory, "{va:?} vs {vb:?}");
            }
        }
    }

    #[test]
    fn thomason_on_identity_is_pointwise_and_total_yes() {
        let d1 = delta(1);
        let c = delta(1);
        let values = vec![c.clone(), c.clone()];
        let actions =
            (0..d1.n_morphisms()).map(|_| FinFunctor::identity(c.clone())).collect();
        let x = crate::presheaf::CatPresheaf::new(d1, values, actions).unwrap();
        let comps = (0..2).map(|_| FinFunctor::identity(c.clone())).collect();
        let phi = crate::presheaf::CatPresheafMorphism::new(x.clone(), x, comps).unwrap();
        let rec = thomason_check(&phi, &w1());
        assert!(rec.pointwise.iter().all(|(_, v)| v.answer == Answer::Yes));
        assert_eq!(rec.total.answer, Answer::Yes);
        assert!(rec.consistent);
    }

    #[test]
    fn identity_is_an_aspherical_morphism() {
        let d2 = delta(2);
        let v = is_aspherical_morphism(&FinFunctor::identity(d2), &w1());
        assert_eq!(v.answer, Answer::Yes);
    }

    #[test]
    fn point_at_top_is_aspherical_morphism_but_not_at_bottom() {
        let d1 = delta(1);
        let e = terminal();
        let at1 = FinFunctor::new(e.clone(), d1.clone(), vec![1], vec![d1.identity_of(1)]).unwrap();
        // slice over 0 is empty: Hom(1, 0) = ∅
        let v = is_aspherical_morphism(&at1, &w1());
        assert_eq!(v.answer, Answer::No);
        let bang = FinFunctor::new(d1.clone(), e.clone(), vec![0, 0], vec![0, 0, 0]).unwrap();
        assert_eq!(is_aspherical_morphism(&bang, &w1()).answer, Answer::Yes);
    }
}
