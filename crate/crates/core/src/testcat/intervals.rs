use std::sync::Arc;

use crate::adjoints::{i_star, i_star_map, i_star_product_comparison, istar_delta1_interval, slice_diagram, IStarResult};
use crate::fincat::{delta, objects_isomorphic, product, FinCategory, FinFunctor};
use crate::limits::{Counter, SizeExceeded};
use crate::presheaf::{
    two_morphisms, bang, point_morphism, GrpdPresheaf, Interval, IntervalOp,
    MultiplicativeInterval, PresheafMorphism,
};

/// Violation found by the separation check: the base object and the fibre
/// isomorphism identifying the two endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationWitness {
    pub base_object: usize,
    pub fibre_iso: usize,
}

/// An interval over A is strongly separating iff in every fibre the two
/// endpoint objects lie in distinct isomorphism classes: a forbidden 2-square
/// from a nonempty presheaf restricts along any element to a representable,
/// and a 2-square from a representable at a is exactly an isomorphism in the
/// fibre at a between the two constant images.
pub fn is_strongly_separating(interval: &Interval) -> (bool, Option<SeparationWitness>) {
    match interval {
        Interval::Presheaf { carrier, i0, i1 } => {
            for a in 0..carrier.base().n_objects() {
                let cat = carrier.value(a).cat();
                if let Some(m) =
                    cat.hom(i0[a], i1[a]).into_iter().find(|&m| cat.is_iso(m))
                {
                    return (false, Some(SeparationWitness { base_object: a, fibre_iso: m }));
                }
            }
            (true, None)
        }
        Interval::Cat { carrier, i0, i1 } => {
            if *i0 != *i1 && !objects_isomorphic(carrier, *i0, *i1) {
                (true, None)
            } else {
                let m = carrier
                    .hom(*i0, *i1)
                    .into_iter()
                    .find(|&m| carrier.is_iso(m))
                    .unwrap_or_else(|| carrier.identity_of(*i0));
                (false, Some(SeparationWitness { base_object: 0, fibre_iso: m }))
            }
        }
    }
}

/// Audit form of the definition: check directly that no presheaf in the
/// supplied family admits an invertible 2-morphism between its two constant
/// maps to the endpoints (unless it is empty).
pub fn is_strongly_separating_on_family(
    interval: &Interval,
    family: &[GrpdPresheaf],
    counter: &mut Counter,
) -> Result<(bool, Option<usize>), SizeExceeded> {
    let (carrier, i0, i1) = match interval {
        Interval::Presheaf { carrier, i0, i1 } => (carrier, i0, i1),
        Interval::Cat { .. } => panic!("family audit applies to presheaf intervals"),
    };
    for (idx, x) in family.iter().enumerate() {
        let nonempty =
            (0..x.base().n_objects()).any(|a| x.value(a).cat().n_objects() > 0);
        if !nonempty {
            continue;
        }
        let to_i0 = PresheafMorphism::compose(&point_morphism(carrier, i0), &bang(x))
            .expect("constant at i0");
        let to_i1 = PresheafMorphism::compose(&point_morphism(carrier, i1), &bang(x))
            .expect("constant at i1");
        if !two_morphisms(&to_i0, &to_i1, counter)?.is_empty() {
            return Ok((false, Some(idx)));
        }
    }
    Ok((true, None))
}

/// Outcome of checking the two multiplicative-interval diagrams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicativeReport {
    pub left_unit: bool,
    pub left_absorbing: bool,
    pub failure: Option<String>,
}

impl MultiplicativeReport {
    pub fn ok(&self) -> bool {
        self.left_unit && self.left_absorbing
    }
}

/// Check that λ₀ is a left unit and λ₁ left absorbing for the operation,
/// pointwise on objects and morphisms of the carrier.
pub fn verify_multiplicative(mult: &MultiplicativeInterval) -> MultiplicativeReport {
    match (&mult.interval, &mult.op) {
        (Interval::Cat { carrier, i0, i1 }, IntervalOp::Cat(op)) => {
            let ps = op
                .dom()
                .product_structure()
                .expect("operation domain carries product metadata")
                .clone();
            let id0 = carrier.identity_of(*i0);
            let id1 = carrier.identity_of(*i1);
            let mut left_unit = true;
            let mut left_absorbing = true;
            let mut failure = None;
            for x in 0..carrier.n_objects() {
                if op.on_obj(ps.obj_of_pair(*i0, x)) != x {
                    left_unit = false;
                    failure.get_or_insert(format!("unit fails at object {}", carrier.object_id(x)));
                }
                if op.on_obj(ps.obj_of_pair(*i1, x)) != *i1 {
                    left_absorbing = false;
                    failure
                        .get_or_insert(format!("absorbing fails at object {}", carrier.object_id(x)));
                }
            }
            for m in 0..carrier.n_morphisms() {
                if op.on_mor(ps.mor_of_pair(id0, m)) != m {
                    left_unit = false;
                    failure
                        .get_or_insert(format!("unit fails at morphism {}", carrier.morphism_id(m)));
                }
                if op.on_mor(ps.mor_of_pair(id1, m)) != id1 {
                    left_absorbing = false;
                    failure.get_or_insert(format!(
                        "absorbing fails at morphism {}",
                        carrier.morphism_id(m)
                    ));
                }
            }
            MultiplicativeReport { left_unit, left_absorbing, failure }
        }
        (Interval::Presheaf { carrier, i0, i1 }, IntervalOp::Presheaf(op)) => {
            let base = carrier.base().clone();
            let mut left_unit = true;
            let mut left_absorbing = true;
            let mut failure = None;
            for a in 0..base.n_objects() {
                let fibre = carrier.value(a).cat();
                let ps = op
                    .source()
                    .value(a)
                    .cat()
                    .product_structure()
                    .expect("operation domain carries product metadata")
                    .clone();
                let comp = op.component(a);
                let id0 = fibre.identity_of(i0[a]);
                let id1 = fibre.identity_of(i1[a]);
                for x in 0..fibre.n_objects() {
                    if comp.on_obj(ps.obj_of_pair(i0[a], x)) != x {
                        left_unit = false;
                        failure.get_or_insert(format!(
                            "unit fails at ({}, {})",
                            base.object_id(a),
                            fibre.object_id(x)
                        ));
                    }
                    if comp.on_obj(ps.obj_of_pair(i1[a], x)) != i1[a] {
                        left_absorbing = false;
                        failure.get_or_insert(format!(
                            "absorbing fails at ({}, {})",
                            base.object_id(a),
                            fibre.object_id(x)
                        ));
                    }
                }
                for m in 0..fibre.n_morphisms() {
                    if comp.on_mor(ps.mor_of_pair(id0, m)) != m {
                        left_unit = false;
                        failure.get_or_insert(format!(
                            "unit fails at morphism ({}, {})",
                            base.object_id(a),
                            fibre.morphism_id(m)
                        ));
                    }
                    if comp.on_mor(ps.mor_of_pair(id1, m)) != id1 {
                        left_absorbing = false;
                        failure.get_or_insert(format!(
                            "absorbing fails at morphism ({}, {})",
                            base.object_id(a),
                            fibre.morphism_id(m)
                        ));
                    }
                }
            }
            MultiplicativeReport { left_unit, left_absorbing, failure }
        }
        _ => MultiplicativeReport {
            left_unit: false,
            left_absorbing: false,
            failure: Some("interval ambient does not match the operation".into()),
        },
    }
}

/// The interval (Δ₁, 0, 1) in Cat with the operation (a, b) -> a + b - ab.
pub fn delta1_multiplicative() -> MultiplicativeInterval {
    let d1 = delta(1);
    let p = product(&d1, &d1);
    let ps = p.product_structure().unwrap().clone();
    let omap: Vec<usize> = ps.obj_pairs.iter().map(|&(a, b)| a + b - a * b).collect();
    let mmap: Vec<usize> = (0..p.n_morphisms())
        .map(|m| {
            let (s, t) = (omap[p.src(m)], omap[p.tgt(m)]);
            d1.hom(s, t)[0]
        })
        .collect();
    let op = FinFunctor::new(p, d1.clone(), omap, mmap).expect("a+b-ab is a functor");
    MultiplicativeInterval { interval: Interval::in_cat(d1, 0, 1), op: IntervalOp::Cat(op) }
}

/// The canonical multiplicative structure on I_A*(Δ₁): the image of the Δ₁
/// operation under I_A*, transported along the product comparison.
pub fn canonical_multiplicative_interval(
    a_cat: &Arc<FinCategory>,
    counter: &mut Counter,
) -> Result<(MultiplicativeInterval, IStarResult), SizeExceeded> {
    let (interval, istar) = istar_delta1_interval(a_cat, counter)?;
    let diagram = slice_diagram(a_cat);
    let d1 = delta(1);
    let d1x = product(&d1, &d1);
    let istar_prod = i_star(&diagram, &d1x, false, counter)?;
    let comparison = i_star_product_comparison(&diagram, &istar, &istar, &istar_prod, &d1x);
    let delta1_op = match delta1_multiplicative().op {
        IntervalOp::Cat(op) => op,
        _ => unreachable!(),
    };
    let post = i_star_map(&diagram, &delta1_op, &istar_prod, &istar);
    let lambda = PresheafMorphism::compose(&post, &comparison).expect("Λ composable");
    Ok((
        MultiplicativeInterval { interval, op: IntervalOp::Presheaf(lambda) },
        istar,
    ))
}
