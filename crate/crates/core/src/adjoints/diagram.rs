use std::sync::Arc;

use super::AdjointsError;
use crate::fincat::{extremal_objects, slice, FinCategory, FinFunctor, SliceResult};

/// A covariant functor A -> Cat given by tables, with optionally chosen
/// terminal objects in each value. The chosen terminals are part of the data
/// so downstream constructions are deterministic even when terminal objects
/// are not unique.
#[derive(Clone, Debug)]
pub struct CatDiagram {
    base: Arc<FinCategory>,
    values: Vec<Arc<FinCategory>>,
    /// action[f] : values[src f] -> values[tgt f]
    actions: Vec<FinFunctor>,
    terminals: Option<Vec<usize>>,
}

impl CatDiagram {
    pub fn new(
        base: Arc<FinCategory>,
        values: Vec<Arc<FinCategory>>,
        actions: Vec<FinFunctor>,
        terminals: Option<Vec<usize>>,
    ) -> Result<CatDiagram, AdjointsError> {
        if values.len() != base.n_objects() || actions.len() != base.n_morphisms() {
            return Err(AdjointsError::NotFunctorial("arity mismatch".into()));
        }
        for f in 0..base.n_morphisms() {
            let act = &actions[f];
            if !act.dom().same_table(&values[base.src(f)])
                || !act.cod().same_table(&values[base.tgt(f)])
            {
                return Err(AdjointsError::NotFunctorial(format!(
                    "action of {} is ill-typed",
                    base.morphism_id(f)
                )));
            }
        }
        for o in 0..base.n_objects() {
            if !actions[base.identity_of(o)].is_identity_functor() {
                return Err(AdjointsError::NotFunctorial(format!(
                    "identity action at {}",
                    base.object_id(o)
                )));
            }
        }
        for (g, f, h) in base.composable_triples() {
            let lhs = &actions[h];
            let rhs = FinFunctor::compose(&actions[g], &actions[f])
                .map_err(|e| AdjointsError::NotFunctorial(e.to_string()))?;
            if lhs.omap() != rhs.omap() || lhs.mmap() != rhs.mmap() {
                return Err(AdjointsError::NotFunctorial(format!(
                    "composite at ({}, {})",
                    base.morphism_id(g),
                    base.morphism_id(f)
                )));
            }
        }
        if let Some(ts) = &terminals {
            if ts.len() != values.len() {
                return Err(AdjointsError::NotFunctorial("terminal list arity".into()));
            }
            for (o, &t) in ts.iter().enumerate() {
                let (terms, _) = extremal_objects(&values[o]);
                if !terms.contains(&t) {
                    return Err(AdjointsError::TerminalNotVerified {
                        object: base.object_id(o).into(),
                    });
                }
            }
        }
        Ok(CatDiagram { base, values, actions, terminals })
    }

    pub fn base(&self) -> &Arc<FinCategory> {
        &self.base
    }

    pub fn value(&self, a: usize) -> &Arc<FinCategory> {
        &self.values[a]
    }

    pub fn action(&self, f: usize) -> &FinFunctor {
        &self.actions[f]
    }

    pub fn terminal_of(&self, a: usize) -> Result<usize, AdjointsError> {
        self.terminals
            .as_ref()
            .map(|t| t[a])
            .ok_or_else(|| AdjointsError::MissingTerminalObject {
                object: self.base.object_id(a).into(),
            })
    }

    pub fn has_terminals(&self) -> bool {
        self.terminals.is_some()
    }
}

/// The slice diagram a -> A/a with action by postcomposition, terminal
/// objects (a, id_a).
pub fn slice_diagram(a_cat: &Arc<FinCategory>) -> CatDiagram {
    slice_diagram_with_tables(a_cat).0
}

/// Slice diagram plus the decode tables of each slice, for constructions
/// that need to take slice objects apart.
pub fn slice_diagram_with_tables(a_cat: &Arc<FinCategory>) -> (CatDiagram, Vec<SliceResult>) {
    let id = FinFunctor::identity(a_cat.clone());
    let slices: Vec<SliceResult> = (0..a_cat.n_objects()).map(|a| slice(&id, a)).collect();
    let values: Vec<Arc<FinCategory>> = slices.iter().map(|s| s.cat.clone()).collect();
    let actions: Vec<FinFunctor> = (0..a_cat.n_morphisms())
        .map(|f| {
            let (a, a2) = (a_cat.src(f), a_cat.tgt(f));
            let sa = &slices[a];
            let sa2 = &slices[a2];
            let omap: Vec<usize> = sa
                .objs
                .iter()
                .map(|&(x, q)| {
                    let fq = a_cat.compose(f, q).expect("f∘q defined");
                    sa2.obj_of(x, fq).expect("slice object exists")
                })
                .collect();
            let mmap: Vec<usize> = sa
                .mors
                .iter()
                .map(|&(m, so, to)| {
                    let (so2, to2) = (omap[so], omap[to]);
                    sa2.mors
                        .iter()
                        .position(|&p| p == (m, so2, to2))
                        .expect("slice morphism exists")
                })
                .collect();
            FinFunctor::new(sa.cat.clone(), sa2.cat.clone(), omap, mmap)
                .expect("postcomposition is a functor")
        })
        .collect();
    let terminals: Vec<usize> = (0..a_cat.n_objects())
        .map(|a| slices[a].obj_of(a, a_cat.identity_of(a)).expect("(a, id_a) in slice"))
        .collect();
    let diagram = CatDiagram::new(a_cat.clone(), values, actions, Some(terminals))
        .expect("slice diagram is functorial with verified terminals");
    (diagram, slices)
}
