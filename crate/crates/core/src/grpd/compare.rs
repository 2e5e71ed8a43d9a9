//! Bounded comparison verdicts: group presentations, groupoid equivalences,
//! and the W₁ class of a functor. Yes certificates come from completed coset
//! enumerations or syntactic identity; No certificates from computable
//! invariants (component counts, abelianizations, finite orders, exhaustive
//! checks); everything else is Unknown.

use super::coset::{enumerate_cosets, find_table_isomorphism, CosetOutcome, FiniteGroupTable};
use super::groupoid::FinGroupoid;
use super::localize::{induced_map, localize, FpGroupoid, FpGroupoidMap};
use super::presentation::{GroupPresentation, Word};
use super::verdict::{Answer, Evidence, Verdict};
use crate::fincat::{iso_classes, FinFunctor};
use crate::homology::{cokernel_invariants, AbelianInvariants, IntMatrix};

fn abelian_invariants(p: &GroupPresentation) -> AbelianInvariants {
    let m = p.abelianization_matrix();
    if p.generators.is_empty() {
        return AbelianInvariants { free_rank: 0, torsion: vec![] };
    }
    let rows: Vec<Vec<i64>> = if p.relators.is_empty() {
        // a matrix with zero columns confuses nothing, but keep one zero column
        vec![vec![0]; p.generators.len()]
    } else {
        m
    };
    cokernel_invariants(&IntMatrix::from_rows(&rows))
}

/// Decide whether two presentations present isomorphic groups, within budget.
pub fn group_compare(p: &GroupPresentation, q: &GroupPresentation, budget: u64) -> Verdict {
    assert!(budget > 0, "budget must be positive");
    let ps = p.simplify();
    let qs = q.simplify();
    if syntactically_identical(&ps, &qs) {
        return Verdict::yes(Evidence::SyntacticIdentity);
    }
    let ab_p = abelian_invariants(&ps);
    let ab_q = abelian_invariants(&qs);
    if ab_p != ab_q {
        return Verdict::no(Evidence::AbelianizationInvariants {
            left: ab_p.describe(),
            right: ab_q.describe(),
        });
    }
    match (enumerate_cosets(&ps, budget), enumerate_cosets(&qs, budget)) {
        (CosetOutcome::Finite(a), CosetOutcome::Finite(b)) => {
            if a.order != b.order {
                return Verdict::no(Evidence::CosetEnumeration {
                    left_order: a.order,
                    right_order: b.order,
                    iso_found: false,
                });
            }
            let iso = find_table_isomorphism(&a, &b).is_some();
            let ev = Evidence::CosetEnumeration {
                left_order: a.order,
                right_order: b.order,
                iso_found: iso,
            };
            if iso {
                Verdict::yes(ev)
            } else {
                Verdict::no(ev)
            }
        }
        _ => Verdict::unknown(Evidence::BudgetExhausted { budget }),
    }
}

fn syntactically_identical(p: &GroupPresentation, q: &GroupPresentation) -> bool {
    if p.generators.len() != q.generators.len() {
        return false;
    }
    let mut rp = p.relators.clone();
    let mut rq = q.relators.clone();
    rp.sort();
    rq.sort();
    rp == rq
}

/// Exhaustive equivalence check for a functor between finite groupoids:
/// essentially surjective plus fully faithful. Always decides.
pub fn groupoid_equivalence(u: &FinFunctor) -> Verdict {
    let dom = u.dom();
    let cod = u.cod();
    debug_assert!(FinGroupoid::new(dom.clone()).is_ok(), "domain must be a groupoid");
    debug_assert!(FinGroupoid::new(cod.clone()).is_ok(), "codomain must be a groupoid");
    for class in iso_classes(cod) {
        let hit = (0..dom.n_objects()).any(|x| class.contains(&u.on_obj(x)));
        if !hit {
            return Verdict::no(Evidence::NotEquivalence {
                reason: format!(
                    "essential surjectivity fails: iso class of {} not hit",
                    cod.object_id(class[0])
                ),
            });
        }
    }
    for x in 0..dom.n_objects() {
        for y in 0..dom.n_objects() {
            let hom = dom.hom(x, y);
            let image: Vec<usize> = hom.iter().map(|&m| u.on_mor(m)).collect();
            let mut dedup = image.clone();
            dedup.sort_unstable();
            dedup.dedup();
            if dedup.len() != hom.len() {
                return Verdict::no(Evidence::NotEquivalence {
                    reason: format!(
                        "not faithful on hom({}, {})",
                        dom.object_id(x),
                        dom.object_id(y)
                    ),
                });
            }
            if cod.hom(u.on_obj(x), u.on_obj(y)).len() != hom.len() {
                return Verdict::no(Evidence::NotEquivalence {
                    reason: format!(
                        "not full on hom({}, {})",
                        dom.object_id(x),
                        dom.object_id(y)
                    ),
                });
            }
        }
    }
    Verdict::yes(Evidence::ExhaustiveEquivalence)
}

fn eval_word(table: &FiniteGroupTable, images: &[usize], w: &Word) -> usize {
    let mut acc = 0usize; // identity
    for &(g, sign) in w {
        let x = images[g];
        let x = if sign { x } else { inverse_element(table, x) };
        acc = table.table[acc][x];
    }
    acc
}

fn inverse_element(table: &FiniteGroupTable, x: usize) -> usize {
    (0..table.order).find(|&y| table.table[x][y] == 0).expect("finite group has inverses")
}

/// Verdict for "this induced map of localized groupoids is an equivalence".
pub fn fp_equivalence(
    map: &FpGroupoidMap,
    src: &FpGroupoid,
    tgt: &FpGroupoid,
    budget: u64,
) -> Verdict {
    if src.n_components() != tgt.n_components() {
        return Verdict::no(Evidence::ComponentCount {
            left: src.n_components(),
            right: tgt.n_components(),
        });
    }
    let mut seen = vec![false; tgt.n_components()];
    for &c in &map.component_map {
        if seen[c] {
            return Verdict::no(Evidence::NotEquivalence {
                reason: format!("two components map to target component {c}"),
            });
        }
        seen[c] = true;
    }
    let mut parts = Vec::new();
    for (ci, comp) in src.components.iter().enumerate() {
        let tc = map.component_map[ci];
        let name = format!("vertex_group@{}", src.cat.object_id(comp.base));
        let p = &comp.presentation;
        let q = &tgt.components[tc].presentation;
        let verdict = match (enumerate_cosets(p, budget), enumerate_cosets(q, budget)) {
            (CosetOutcome::Finite(a), CosetOutcome::Finite(b)) => {
                if a.order != b.order {
                    Verdict::no(Evidence::CosetEnumeration {
                        left_order: a.order,
                        right_order: b.order,
                        iso_found: false,
                    })
                } else {
                    // images of source generators as elements of the target group
                    let gen_images: Vec<usize> = map.vertex_words[ci]
                        .iter()
                        .map(|w| eval_word(&b, &b.generator_elements, w))
                        .collect();
                    // map each source element through its representative word
                    let mapped: Vec<usize> = (0..a.order)
                        .map(|x| {
                            let w: Word =
                                a.words[x].iter().map(|&g| (g, true)).collect();
                            eval_word(&b, &gen_images, &w)
                        })
                        .collect();
                    let mut sorted = mapped.clone();
                    sorted.sort_unstable();
                    sorted.dedup();
                    let bijective = sorted.len() == b.order;
                    for x in 0..a.order {
                        for y in 0..a.order {
                            debug_assert_eq!(
                                mapped[a.table[x][y]],
                                b.table[mapped[x]][mapped[y]],
                                "induced vertex map must be a homomorphism"
                            );
                        }
                    }
                    let ev = Evidence::CosetEnumeration {
                        left_order: a.order,
                        right_order: b.order,
                        iso_found: bijective,
                    };
                    if bijective {
                        Verdict::yes(ev)
                    } else {
                        Verdict::no(ev)
                    }
                }
            }
            _ => {
                let ab_p = abelian_invariants(&p.simplify());
                let ab_q = abelian_invariants(&q.simplify());
                if ab_p != ab_q {
                    Verdict::no(Evidence::AbelianizationInvariants {
                        left: ab_p.describe(),
                        right: ab_q.describe(),
                    })
                } else {
                    Verdict::unknown(Evidence::BudgetExhausted { budget })
                }
            }
        };
        parts.push((name, verdict));
    }
    parts.push((
        "pi0".into(),
        Verdict::yes(Evidence::ComponentCount {
            left: src.n_components(),
            right: tgt.n_components(),
        }),
    ));
    Verdict::all(parts)
}

/// Is π₁(u) an equivalence of groupoids? This is the W₁ membership test.
pub fn w1_class(u: &FinFunctor, budget: u64) -> Verdict {
    let src = localize(u.dom());
    let tgt = localize(u.cod());
    let map = induced_map(u, &src, &tgt);
    fp_equivalence(&map, &src, &tgt, budget)
}

/// Multiplication table of the automorphism group of an object of a finite
/// groupoid. Element 0 is the identity.
pub fn aut_group_table(g: &FinGroupoid, x: usize) -> FiniteGroupTable {
    let cat = g.cat();
    let mut endos: Vec<usize> = cat.hom(x, x);
    let id = cat.identity_of(x);
    endos.retain(|&m| m != id);
    endos.insert(0, id);
    let rank = |m: usize| endos.iter().position(|&e| e == m).unwrap();
    let n = endos.len();
    let mut table = vec![vec![0usize; n]; n];
    for a in 0..n {
        for b in 0..n {
            table[a][b] = rank(cat.compose(endos[a], endos[b]).unwrap());
        }
    }
    let generator_elements: Vec<usize> = (1..n).collect();
    let words = (0..n).map(|e| if e == 0 { vec![] } else { vec![e - 1] }).collect();
    FiniteGroupTable { order: n, table, generator_elements, words }
}

/// Map a verdict's answer through a human-readable label. Used by reports.
pub fn answer_label(a: Answer) -> &'static str {
    match a {
        Answer::Yes => "yes",
        Answer::No => "no",
        Answer::Unknown => "unknown",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{cyclic_group, delta, free_iso, idempotent_monoid, terminal, FinFunctor};
    use crate::grpd::localize::vertex_group;

    const BUDGET: u64 = 100_000;

    #[test]
    fn collapsing_presentation_equals_trivial() {
        let p = GroupPresentation {
            generators: vec!["s".into()],
            relators: vec![vec![(0, true), (0, true), (0, false)]],
        };
        let v = group_compare(&p, &GroupPresentation::trivial(), BUDGET);
        assert_eq!(v.answer, Answer::Yes);
    }

    #[test]
    fn z2_vs_trivial_is_no_with_abelianization() {
        let p = GroupPresentation {
            generators: vec!["s".into()],
            relators: vec![vec![(0, true), (0, true)]],
        };
        let v = group_compare(&p, &GroupPresentation::trivial(), BUDGET);
        assert_eq!(v.answer, Answer::No);
        assert!(matches!(v.evidence, Evidence::AbelianizationInvariants { .. }));
    }

    #[test]
    fn identical_presentations_yes() {
        let p = GroupPresentation {
            generators: vec!["s".into()],
            relators: vec![vec![(0, true), (0, true)]],
        };
        let v = group_compare(&p, &p, BUDGET);
        assert_eq!(v.answer, Answer::Yes);
        assert_eq!(v.evidence, Evidence::SyntacticIdentity);
    }

    #[test]
    fn w1_terminal_map_from_delta1_is_yes() {
        let d1 = delta(1);
        let e = terminal();
        let bang = FinFunctor::new(d1.clone(), e.clone(), vec![0, 0], vec![0, 0, 0]).unwrap();
        assert_eq!(w1_class(&bang, BUDGET).answer, Answer::Yes);
    }

    #[test]
    fn w1_terminal_map_from_bg2_is_no() {
        let b = cyclic_group(2);
        let e = terminal();
        let bang = FinFunctor::new(b.clone(), e.clone(), vec![0], vec![0, 0]).unwrap();
        assert_eq!(w1_class(&bang, BUDGET).answer, Answer::No);
    }

    #[test]
    fn w1_terminal_map_from_idempotent_monoid_is_yes() {
        let m = idempotent_monoid();
        let e = terminal();
        let bang = FinFunctor::new(m.clone(), e.clone(), vec![0], vec![0, 0]).unwrap();
        assert_eq!(w1_class(&bang, BUDGET).answer, Answer::Yes);
    }

    #[test]
    fn w1_terminal_map_from_free_iso_is_yes() {
        let j = free_iso();
        let e = terminal();
        let bang =
            FinFunctor::new(j.clone(), e.clone(), vec![0, 0], vec![0, 0, 0, 0]).unwrap();
        assert_eq!(w1_class(&bang, BUDGET).answer, Answer::Yes);
    }

    #[test]
    fn inclusion_into_free_iso_is_equivalence() {
        let j = free_iso();
        let e = terminal();
        let point = FinFunctor::new(e.clone(), j.clone(), vec![0], vec![0]).unwrap();
        assert_eq!(groupoid_equivalence(&point).answer, Answer::Yes);
        assert_eq!(w1_class(&point, BUDGET).answer, Answer::Yes);
    }

    #[test]
    fn identity_on_bg2_is_equivalence() {
        let b = cyclic_group(2);
        assert_eq!(groupoid_equivalence(&FinFunctor::identity(b)).answer, Answer::Yes);
    }

    #[test]
    fn bg2_to_terminal_groupoid_not_equivalence() {
        let b = cyclic_group(2);
        let e = terminal();
        let bang = FinFunctor::new(b, e, vec![0], vec![0, 0]).unwrap();
        assert_eq!(groupoid_equivalence(&bang).answer, Answer::No);
    }

    #[test]
    fn trivial_endomorphism_of_bg2_is_not_w1() {
        // s -> id is a functor but kills the vertex group
        let b = cyclic_group(2);
        let trivial = FinFunctor::new(b.clone(), b.clone(), vec![0], vec![0, 0]).unwrap();
        let v = w1_class(&trivial, BUDGET);
        assert_eq!(v.answer, Answer::No);
    }

    #[test]
    fn swap_automorphism_of_connected_groupoid_is_w1() {
        // J × BG(2): swapping the two objects conjugates the vertex group
        // through a nontrivial tree path
        let k = crate::fincat::product(&free_iso(), &cyclic_group(2));
        let ps = k.product_structure().unwrap().clone();
        let j = free_iso();
        let swap_j_obj = [1usize, 0];
        let swap_j_mor: Vec<usize> = (0..j.n_morphisms())
            .map(|m| match j.morphism_id(m) {
                "id_a" => j.mor_index("id_b").unwrap(),
                "id_b" => j.mor_index("id_a").unwrap(),
                "u" => j.mor_index("v").unwrap(),
                _ => j.mor_index("u").unwrap(),
            })
            .collect();
        let omap: Vec<usize> = ps
            .obj_pairs
            .iter()
            .map(|&(l, r)| ps.obj_of_pair(swap_j_obj[l], r))
            .collect();
        let mmap: Vec<usize> = ps
            .mor_pairs
            .iter()
            .map(|&(l, r)| ps.mor_of_pair(swap_j_mor[l], r))
            .collect();
        let swap = FinFunctor::new(k.clone(), k.clone(), omap, mmap).unwrap();
        assert!(swap.is_isomorphism());
        assert_eq!(w1_class(&swap, BUDGET).answer, Answer::Yes);
    }

    #[test]
    fn point_away_from_the_base_is_w1_equivalence() {
        // include BG(2) at the object that is not the spanning-tree base:
        // the induced map must be conjugated along the tree path
        let k = crate::fincat::product(&free_iso(), &cyclic_group(2));
        let ps = k.product_structure().unwrap().clone();
        let b = cyclic_group(2);
        let tgt_obj = ps.obj_of_pair(1, 0); // (b, pt)
        let omap = vec![tgt_obj];
        let j = free_iso();
        let id_b = j.mor_index("id_b").unwrap();
        let mmap: Vec<usize> =
            (0..b.n_morphisms()).map(|m| ps.mor_of_pair(id_b, m)).collect();
        let incl = FinFunctor::new(b.clone(), k.clone(), omap, mmap).unwrap();
        assert_eq!(w1_class(&incl, BUDGET).answer, Answer::Yes);
    }

    #[test]
    fn vertex_groups_match_automorphism_groups() {
        for g in [cyclic_group(2), cyclic_group(3), free_iso()] {
            let grpd = FinGroupoid::new(g.clone()).unwrap();
            let fp = localize(&g);
            for (ci, comp) in fp.components.iter().enumerate() {
                let aut = aut_group_table(&grpd, comp.base);
                let pres = GroupPresentation::from_multiplication_table_struct(&aut);
                let v = group_compare(&vertex_group(&fp, ci).unwrap(), &pres, BUDGET);
                assert_eq!(v.answer, Answer::Yes, "component {ci} of {:?}", g.object_id(0));
            }
        }
    }
}
