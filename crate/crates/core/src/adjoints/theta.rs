//! The canonical comparison elements(I*(C/c)) ≅ elements(I*(C))/c, where the
//! right-hand slice is taken along the counit evaluation.

use std::sync::Arc;

use super::counit::counit_alpha;
use super::diagram::CatDiagram;
use super::istar::i_star;
use super::AdjointsError;
use crate::elements::ElementsResult;
use crate::fincat::{slice, FinCategory, FinFunctor, SliceResult};
use crate::limits::Counter;

/// Verified isomorphism witness: θ with both sides attached.
pub struct ThetaWitness {
    pub theta: FinFunctor,
    pub lhs: ElementsResult,
    pub rhs: SliceResult,
}

/// Build θ : elements(I*(C/c)) -> elements(I*(C))/c, sending (a, q) to
/// (a, π_c∘q, q(e_a)), and verify it is an isomorphism of categories.
pub fn theta_slice_iso(
    i: &CatDiagram,
    c: &Arc<FinCategory>,
    c_obj: usize,
    counter: &mut Counter,
) -> Result<ThetaWitness, AdjointsError> {
    if !i.has_terminals() {
        return Err(AdjointsError::MissingTerminalObject {
            object: i
                .base()
                .object_ids()
                .first()
                .cloned()
                .unwrap_or_else(|| "<empty base>".into()),
        });
    }
    let base = i.base().clone();
    // the slice C/c with its decode tables and projection π_c
    let slice_cc = slice(&FinFunctor::identity(c.clone()), c_obj);

    let istar_slice = i_star(i, &slice_cc.cat, false, counter)?;
    let lhs = crate::elements::elements(&istar_slice.presheaf);

    let istar_c = i_star(i, c, false, counter)?;
    let (alpha, elems_c) = counit_alpha(i, c, &istar_c)?;
    let rhs = slice(&alpha, c_obj);

    // θ on objects: (a, q : i(a) -> C/c)  ->  ((a, π_c∘q), g = q(e_a))
    let mut omap = Vec::with_capacity(lhs.objs.len());
    for &(a, q_idx) in &lhs.objs {
        let q = &istar_slice.homs[a].functors[q_idx];
        let p = FinFunctor::compose(&slice_cc.projection, q).expect("π_c∘q composable");
        let p_idx = istar_c.homs[a].functor_index(&p).expect("π_c∘q enumerated");
        let e_a = i.terminal_of(a).expect("terminals verified");
        let g = slice_cc.objs[q.on_obj(e_a)].1;
        let total_obj = elems_c.obj_index(a, p_idx).expect("elements object");
        omap.push(rhs.obj_of(total_obj, g).ok_or_else(|| {
            AdjointsError::IsoVerificationFailed(format!(
                "θ image of ({}, F{q_idx}) is not a slice object",
                base.object_id(a)
            ))
        })?);
    }

    // θ on morphisms: (f, σ, q') -> ((f, π_c ⋆ σ, π_c∘q'), g, g')
    let mut mmap = Vec::with_capacity(lhs.mors.len());
    for m in &lhs.mors {
        let f = m.base_mor;
        let a = base.src(f);
        let sigma = &istar_slice.homs[a].isos[m.fiber_mor];
        let a2 = base.tgt(f);
        let q2 = &istar_slice.homs[a2].functors[m.fiber_tgt];
        let p2 = FinFunctor::compose(&slice_cc.projection, q2).expect("π_c∘q' composable");
        let p2_idx = istar_c.homs[a2].functor_index(&p2).expect("π_c∘q' enumerated");
        let whiskered = sigma.whisker_left(&slice_cc.projection);
        let src_p = {
            let q_src = lhs.objs[m.src].1;
            let q = &istar_slice.homs[a].functors[q_src];
            let p = FinFunctor::compose(&slice_cc.projection, q).unwrap();
            istar_c.homs[a].functor_index(&p).unwrap()
        };
        // image of X(f) applied to p2 inside I*(C) over a
        let sigma_c_idx = istar_c.homs[a]
            .iso_index(
                src_p,
                istar_c.presheaf.action(f).on_obj(p2_idx),
                whiskered.components(),
            )
            .expect("whiskered transformation enumerated");
        let total_mor = elems_c.mor_index(f, sigma_c_idx, p2_idx).expect("elements morphism");
        let slot = rhs
            .mors
            .iter()
            .position(|&(em, so, to)| em == total_mor && so == omap[m.src] && to == omap[m.tgt])
            .ok_or_else(|| {
                AdjointsError::IsoVerificationFailed(format!(
                    "θ image of a morphism over {} does not satisfy the slice triangle",
                    base.morphism_id(f)
                ))
            })?;
        mmap.push(slot);
    }

    let theta = FinFunctor::new(lhs.total.clone(), rhs.cat.clone(), omap, mmap)
        .map_err(|e| AdjointsError::IsoVerificationFailed(format!("θ is not a functor: {e}")))?;
    if !theta.is_isomorphism() {
        return Err(AdjointsError::IsoVerificationFailed("θ is not bijective".into()));
    }
    Ok(ThetaWitness { theta, lhs, rhs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjoints::slice_diagram;
    use crate::fincat::{delta, terminal};

    fn counter() -> Counter {
        Counter::new(4_000_000, "test")
    }

    #[test]
    fn theta_for_terminal_c() {
        let d1 = delta(1);
        let diagram = slice_diagram(&d1);
        let w = theta_slice_iso(&diagram, &terminal(), 0, &mut counter()).unwrap();
        assert!(w.theta.is_isomorphism());
    }

    #[test]
    fn theta_for_delta1_over_top() {
        let d1 = delta(1);
        let diagram = slice_diagram(&d1);
        let w = theta_slice_iso(&diagram, &d1, 1, &mut counter()).unwrap();
        assert!(w.theta.is_isomorphism());
    }

    #[test]
    fn theta_for_delta1_over_bottom() {
        let d1 = delta(1);
        let diagram = slice_diagram(&d1);
        let w = theta_slice_iso(&diagram, &d1, 0, &mut counter()).unwrap();
        assert!(w.theta.is_isomorphism());
    }
}
