use std::sync::Arc;

use thiserror::Error;

use crate::fincat::{FinCategory, ProductStructure};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GroupoidError {
    #[error("morphism {0:?} has no two-sided inverse")]
    NotInvertible(String),
    #[error("groupoid is not discrete: {0:?} is a non-identity morphism")]
    NotDiscrete(String),
}

/// A finite groupoid: a finite category in which every morphism has a
/// two-sided inverse. The inverse table is computed and checked on
/// construction.
#[derive(Clone, Debug)]
pub struct FinGroupoid {
    cat: Arc<FinCategory>,
    inverse: Vec<usize>,
}

impl FinGroupoid {
    pub fn new(cat: Arc<FinCategory>) -> Result<FinGroupoid, GroupoidError> {
        let inverse = (0..cat.n_morphisms())
            .map(|m| {
                cat.inverse_of(m)
                    .ok_or_else(|| GroupoidError::NotInvertible(cat.morphism_id(m).into()))
            })
            .collect::<Result<Vec<usize>, _>>()?;
        Ok(FinGroupoid { cat, inverse })
    }

    /// Discrete groupoid on the given object ids.
    pub fn discrete(objects: Vec<String>) -> FinGroupoid {
        let cat = crate::fincat::discrete(objects);
        FinGroupoid::new(cat).expect("discrete category is a groupoid")
    }

    /// The terminal groupoid (one object, one morphism).
    pub fn terminal() -> FinGroupoid {
        FinGroupoid::new(crate::fincat::terminal()).expect("terminal category is a groupoid")
    }

    pub fn cat(&self) -> &Arc<FinCategory> {
        &self.cat
    }

    pub fn inverse(&self, m: usize) -> usize {
        self.inverse[m]
    }

    pub fn is_discrete(&self) -> bool {
        (0..self.cat.n_morphisms()).all(|m| self.cat.is_identity(m))
    }

    pub fn require_discrete(&self) -> Result<(), GroupoidError> {
        match (0..self.cat.n_morphisms()).find(|&m| !self.cat.is_identity(m)) {
            None => Ok(()),
            Some(m) => Err(GroupoidError::NotDiscrete(self.cat.morphism_id(m).into())),
        }
    }

    /// Binary product (carries product metadata on the carrier category).
    pub fn product(a: &FinGroupoid, b: &FinGroupoid) -> FinGroupoid {
        let cat = crate::fincat::product(&a.cat, &b.cat);
        FinGroupoid::new(cat).expect("product of groupoids is a groupoid")
    }

    pub fn product_structure(&self) -> Option<&Arc<ProductStructure>> {
        self.cat.product_structure()
    }

    /// The maximal subgroupoid of a category: same objects, only the
    /// invertible morphisms.
    pub fn maximal_subgroupoid(c: &Arc<FinCategory>) -> FinGroupoid {
        let objects = c.object_ids().to_vec();
        let keep: Vec<usize> = (0..c.n_morphisms()).filter(|&m| c.is_iso(m)).collect();
        let rank: std::collections::BTreeMap<usize, usize> =
            keep.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let morphisms: Vec<(String, usize, usize)> = keep
            .iter()
            .map(|&m| (c.morphism_id(m).to_string(), c.src(m), c.tgt(m)))
            .collect();
        let identity: Vec<usize> = (0..c.n_objects()).map(|o| rank[&c.identity_of(o)]).collect();
        let mut compose = Vec::new();
        for &g in &keep {
            for &f in &keep {
                if let Some(h) = c.compose(g, f) {
                    compose.push((rank[&g], rank[&f], rank[&h]));
                }
            }
        }
        let cat = FinCategory::from_parts(objects, morphisms, identity, &compose)
            .expect("subgroupoid of a valid category is valid");
        FinGroupoid::new(Arc::new(cat)).expect("isos closed under composition and inverse")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{cyclic_group, delta, free_iso};

    #[test]
    fn cyclic_group_is_a_groupoid() {
        let g = FinGroupoid::new(cyclic_group(3)).unwrap();
        let s = g.cat().mor_index("s1").unwrap();
        assert_eq!(g.cat().morphism_id(g.inverse(s)), "s2");
    }

    #[test]
    fn delta1_is_not_a_groupoid() {
        assert!(matches!(
            FinGroupoid::new(delta(1)),
            Err(GroupoidError::NotInvertible(m)) if m == "d0_1"
        ));
    }

    #[test]
    fn maximal_subgroupoid_of_delta1_is_discrete() {
        let g = FinGroupoid::maximal_subgroupoid(&delta(1));
        assert!(g.is_discrete());
        assert_eq!(g.cat().n_objects(), 2);
    }

    #[test]
    fn maximal_subgroupoid_of_free_iso_is_everything() {
        let j = free_iso();
        let g = FinGroupoid::maximal_subgroupoid(&j);
        assert_eq!(g.cat().n_morphisms(), 4);
    }
}
