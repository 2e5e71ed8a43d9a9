use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

/// Errors raised while validating a composition table.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CatError {
    #[error("duplicate object id {0:?}")]
    DuplicateObject(String),
    #[error("duplicate morphism id {0:?}")]
    DuplicateMorphism(String),
    #[error("unknown object id {0:?}")]
    UnknownObject(String),
    #[error("unknown morphism id {0:?}")]
    UnknownMorphism(String),
    #[error("object {object:?} has no identity morphism")]
    MissingIdentity { object: String },
    #[error("identity violation: {identity:?} declared for {object:?} but compose({identity:?}, {other:?}) != {other:?}")]
    IdentityViolation { object: String, identity: String, other: String },
    #[error("identity morphism {identity:?} of {object:?} must have src = tgt = {object:?}")]
    IllTypedIdentity { object: String, identity: String },
    #[error("missing composite for composable pair ({g:?}, {f:?})")]
    MissingComposite { g: String, f: String },
    #[error("compose entry ({g:?}, {f:?}) is ill-typed: tgt({f:?}) != src({g:?})")]
    SpuriousComposite { g: String, f: String },
    #[error("composite {h:?} of ({g:?}, {f:?}) does not go from src({f:?}) to tgt({g:?})")]
    CompositeTypeMismatch { g: String, f: String, h: String },
    #[error("associativity violation on triple ({h:?}, {g:?}, {f:?})")]
    AssociativityViolation { h: String, g: String, f: String },
    #[error("invalid poset relation: {0}")]
    InvalidPosetRelation(String),
}

/// Raw composition-table document, before validation.
#[derive(Clone, Debug, Default)]
pub struct RawCategory {
    pub objects: Vec<String>,
    /// (id, src, tgt) for every non-identity morphism. Identity entries are
    /// also accepted here as long as they are declared in `identities`.
    pub morphisms: Vec<(String, String, String)>,
    /// object id to morphism id
    pub identities: Vec<(String, String)>,
    /// (g, f, g_after_f); identity composites may be omitted.
    pub compose: Vec<(String, String, String)>,
}

impl RawCategory {
    pub fn build(self) -> Result<Arc<FinCategory>, CatError> {
        FinCategory::from_raw(self).map(Arc::new)
    }
}

/// Metadata attached to categories built as binary products. Lets the
/// elements/iso machinery decode a product object into its factors without
/// parsing id strings.
#[derive(Clone, Debug)]
pub struct ProductStructure {
    pub left: Arc<FinCategory>,
    pub right: Arc<FinCategory>,
    /// total object index -> (left object, right object)
    pub obj_pairs: Vec<(usize, usize)>,
    /// total morphism index -> (left morphism, right morphism)
    pub mor_pairs: Vec<(usize, usize)>,
    obj_lookup: BTreeMap<(usize, usize), usize>,
    mor_lookup: BTreeMap<(usize, usize), usize>,
}

impl ProductStructure {
    pub(crate) fn new(
        left: Arc<FinCategory>,
        right: Arc<FinCategory>,
        obj_pairs: Vec<(usize, usize)>,
        mor_pairs: Vec<(usize, usize)>,
    ) -> Self {
        let obj_lookup = obj_pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let mor_lookup = mor_pairs.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        ProductStructure { left, right, obj_pairs, mor_pairs, obj_lookup, mor_lookup }
    }

    pub fn obj_of_pair(&self, l: usize, r: usize) -> usize {
        self.obj_lookup[&(l, r)]
    }

    pub fn mor_of_pair(&self, l: usize, r: usize) -> usize {
        self.mor_lookup[&(l, r)]
    }
}

/// A finite category given by a total composition table.
///
/// All invariants (well-typed identities, totality of composition on
/// composable pairs, unit laws, associativity) are checked exhaustively on
/// construction; a value of this type always satisfies them. Values are
/// immutable and shared behind `Arc`.
#[derive(Clone, Debug)]
pub struct FinCategory {
    objects: Vec<String>,
    mor_ids: Vec<String>,
    src: Vec<usize>,
    tgt: Vec<usize>,
    identity: Vec<usize>,
    /// flat table, `compose[g * n_mor + f]` = g∘f when tgt(f) = src(g)
    compose: Vec<Option<usize>>,
    obj_lookup: BTreeMap<String, usize>,
    mor_lookup: BTreeMap<String, usize>,
    product: Option<Arc<ProductStructure>>,
}

impl FinCategory {
    /// Build and validate from index-level parts. `compose` must list each
    /// composable pair exactly once.
    pub fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<(String, usize, usize)>,
        identity: Vec<usize>,
        compose: &[(usize, usize, usize)],
    ) -> Result<FinCategory, CatError> {
        let mut obj_lookup = BTreeMap::new();
        for (i, o) in objects.iter().enumerate() {
            if obj_lookup.insert(o.clone(), i).is_some() {
                return Err(CatError::DuplicateObject(o.clone()));
            }
        }
        let mut mor_lookup = BTreeMap::new();
        let mut mor_ids = Vec::with_capacity(morphisms.len());
        let mut src = Vec::with_capacity(morphisms.len());
        let mut tgt = Vec::with_capacity(morphisms.len());
        for (i, (id, s, t)) in morphisms.into_iter().enumerate() {
            if mor_lookup.insert(id.clone(), i).is_some() {
                return Err(CatError::DuplicateMorphism(id));
            }
            mor_ids.push(id);
            src.push(s);
            tgt.push(t);
        }
        let n = mor_ids.len();
        let mut table: Vec<Option<usize>> = vec![None; n * n];
        for &(g, f, h) in compose {
            table[g * n + f] = Some(h);
        }
        let cat = FinCategory {
            objects,
            mor_ids,
            src,
            tgt,
            identity,
            compose: table,
            obj_lookup,
            mor_lookup,
            product: None,
        };
        cat.validate()?;
        Ok(cat)
    }

    fn from_raw(raw: RawCategory) -> Result<FinCategory, CatError> {
        let mut obj_lookup = BTreeMap::new();
        for (i, o) in raw.objects.iter().enumerate() {
            if obj_lookup.insert(o.clone(), i).is_some() {
                return Err(CatError::DuplicateObject(o.clone()));
            }
        }
        let mut morphisms = Vec::new();
        for (id, s, t) in &raw.morphisms {
            let s = *obj_lookup.get(s).ok_or_else(|| CatError::UnknownObject(s.clone()))?;
            let t = *obj_lookup.get(t).ok_or_else(|| CatError::UnknownObject(t.clone()))?;
            morphisms.push((id.clone(), s, t));
        }
        let mut mor_lookup = BTreeMap::new();
        for (i, (id, _, _)) in morphisms.iter().enumerate() {
            if mor_lookup.insert(id.clone(), i).is_some() {
                return Err(CatError::DuplicateMorphism(id.clone()));
            }
        }
        let mut identity = vec![usize::MAX; raw.objects.len()];
        for (o, m) in &raw.identities {
            let oi = *obj_lookup.get(o).ok_or_else(|| CatError::UnknownObject(o.clone()))?;
            let mi = *mor_lookup.get(m).ok_or_else(|| CatError::UnknownMorphism(m.clone()))?;
            identity[oi] = mi;
        }
        for (i, &m) in identity.iter().enumerate() {
            if m == usize::MAX {
                return Err(CatError::MissingIdentity { object: raw.objects[i].clone() });
            }
        }
        let mut compose = Vec::new();
        for (g, f, h) in &raw.compose {
            let g = *mor_lookup.get(g).ok_or_else(|| CatError::UnknownMorphism(g.clone()))?;
            let f = *mor_lookup.get(f).ok_or_else(|| CatError::UnknownMorphism(f.clone()))?;
            let h = *mor_lookup.get(h).ok_or_else(|| CatError::UnknownMorphism(h.clone()))?;
            compose.push((g, f, h));
        }
        // identity composites may be omitted in documents; fill them in
        let mut full: BTreeMap<(usize, usize), usize> = compose.iter().map(|&(g, f, h)| ((g, f), h)).collect();
        for m in 0..morphisms.len() {
            let (s, t) = (morphisms[m].1, morphisms[m].2);
            full.entry((m, identity[s])).or_insert(m);
            full.entry((identity[t], m)).or_insert(m);
        }
        let compose: Vec<(usize, usize, usize)> = full.into_iter().map(|((g, f), h)| (g, f, h)).collect();
        FinCategory::from_parts(raw.objects, morphisms, identity, &compose)
    }

    fn validate(&self) -> Result<(), CatError> {
        let n = self.mor_ids.len();
        for (o, &i) in self.identity.iter().enumerate() {
            if self.src[i] != o || self.tgt[i] != o {
                return Err(CatError::IllTypedIdentity {
                    object: self.objects[o].clone(),
                    identity: self.mor_ids[i].clone(),
                });
            }
        }
        // totality and typing of the table
        for g in 0..n {
            for f in 0..n {
                let entry = self.compose[g * n + f];
                if self.tgt[f] == self.src[g] {
                    match entry {
                        None => {
                            return Err(CatError::MissingComposite {
                                g: self.mor_ids[g].clone(),
                                f: self.mor_ids[f].clone(),
                            })
                        }
                        Some(h) => {
                            if self.src[h] != self.src[f] || self.tgt[h] != self.tgt[g] {
                                return Err(CatError::CompositeTypeMismatch {
                                    g: self.mor_ids[g].clone(),
                                    f: self.mor_ids[f].clone(),
                                    h: self.mor_ids[h].clone(),
                                });
                            }
                        }
                    }
                } else if entry.is_some() {
                    return Err(CatError::SpuriousComposite {
                        g: self.mor_ids[g].clone(),
                        f: self.mor_ids[f].clone(),
                    });
                }
            }
        }
        // unit laws
        for f in 0..n {
            let l = self.compose[self.identity[self.tgt[f]] * n + f];
            let r = self.compose[f * n + self.identity[self.src[f]]];
            if l != Some(f) {
                return Err(CatError::IdentityViolation {
                    object: self.objects[self.tgt[f]].clone(),
                    identity: self.mor_ids[self.identity[self.tgt[f]]].clone(),
                    other: self.mor_ids[f].clone(),
                });
            }
            if r != Some(f) {
                return Err(CatError::IdentityViolation {
                    object: self.objects[self.src[f]].clone(),
                    identity: self.mor_ids[self.identity[self.src[f]]].clone(),
                    other: self.mor_ids[f].clone(),
                });
            }
        }
        // associativity on all composable triples
        for f in 0..n {
            for g in 0..n {
                if self.tgt[f] != self.src[g] {
                    continue;
                }
                let gf = self.compose[g * n + f].unwrap();
                for h in 0..n {
                    if self.tgt[g] != self.src[h] {
                        continue;
                    }
                    let hg = self.compose[h * n + g].unwrap();
                    if self.compose[h * n + gf] != self.compose[hg * n + f] {
                        return Err(CatError::AssociativityViolation {
                            h: self.mor_ids[h].clone(),
                            g: self.mor_ids[g].clone(),
                            f: self.mor_ids[f].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn n_morphisms(&self) -> usize {
        self.mor_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn object_id(&self, o: usize) -> &str {
        &self.objects[o]
    }

    pub fn morphism_id(&self, m: usize) -> &str {
        &self.mor_ids[m]
    }

    pub fn object_ids(&self) -> &[String] {
        &self.objects
    }

    pub fn morphism_ids(&self) -> &[String] {
        &self.mor_ids
    }

    pub fn obj_index(&self, id: &str) -> Option<usize> {
        self.obj_lookup.get(id).copied()
    }

    pub fn mor_index(&self, id: &str) -> Option<usize> {
        self.mor_lookup.get(id).copied()
    }

    pub fn src(&self, m: usize) -> usize {
        self.src[m]
    }

    pub fn tgt(&self, m: usize) -> usize {
        self.tgt[m]
    }

    pub fn identity_of(&self, o: usize) -> usize {
        self.identity[o]
    }

    pub fn is_identity(&self, m: usize) -> bool {
        self.identity[self.src[m]] == m
    }

    /// g∘f when tgt(f) = src(g), None otherwise.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose[g * self.mor_ids.len() + f]
    }

    /// Morphisms x -> y in index order.
    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.mor_ids.len()).filter(|&m| self.src[m] == x && self.tgt[m] == y).collect()
    }

    /// Two-sided inverse of `m`, if any.
    pub fn inverse_of(&self, m: usize) -> Option<usize> {
        let (s, t) = (self.src[m], self.tgt[m]);
        (0..self.mor_ids.len()).find(|&k| {
            self.src[k] == t
                && self.tgt[k] == s
                && self.compose(k, m) == Some(self.identity[s])
                && self.compose(m, k) == Some(self.identity[t])
        })
    }

    pub fn is_iso(&self, m: usize) -> bool {
        self.inverse_of(m).is_some()
    }

    /// Composable pairs (g, f, g∘f) in row-major order.
    pub fn composable_triples(&self) -> Vec<(usize, usize, usize)> {
        let n = self.mor_ids.len();
        let mut out = Vec::new();
        for g in 0..n {
            for f in 0..n {
                if let Some(h) = self.compose[g * n + f] {
                    out.push((g, f, h));
                }
            }
        }
        out
    }

    /// Structural equality of tables: same ids in the same order, same
    /// sources, targets, identities and composites. Product metadata is not
    /// part of the comparison.
    pub fn same_table(&self, other: &FinCategory) -> bool {
        self.objects == other.objects
            && self.mor_ids == other.mor_ids
            && self.src == other.src
            && self.tgt == other.tgt
            && self.identity == other.identity
            && self.compose == other.compose
    }

    pub fn product_structure(&self) -> Option<&Arc<ProductStructure>> {
        self.product.as_ref()
    }

    pub(crate) fn with_product(mut self, p: ProductStructure) -> FinCategory {
        self.product = Some(Arc::new(p));
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn delta1_raw() -> RawCategory {
        RawCategory {
            objects: vec!["0".into(), "1".into()],
            morphisms: vec![
                ("id_0".into(), "0".into(), "0".into()),
                ("id_1".into(), "1".into(), "1".into()),
                ("d".into(), "0".into(), "1".into()),
            ],
            identities: vec![("0".into(), "id_0".into()), ("1".into(), "id_1".into())],
            compose: vec![
                ("d".into(), "id_0".into(), "d".into()),
                ("id_1".into(), "d".into(), "d".into()),
            ],
        }
    }

    #[test]
    fn terminal_document_validates() {
        let raw = RawCategory {
            objects: vec!["pt".into()],
            morphisms: vec![("id_pt".into(), "pt".into(), "pt".into())],
            identities: vec![("pt".into(), "id_pt".into())],
            compose: vec![],
        };
        let c = raw.build().unwrap();
        assert_eq!(c.n_objects(), 1);
        assert_eq!(c.n_morphisms(), 1);
    }

    #[test]
    fn delta1_document_validates() {
        let c = delta1_raw().build().unwrap();
        assert_eq!(c.n_objects(), 2);
        assert_eq!(c.n_morphisms(), 3);
        let d = c.mor_index("d").unwrap();
        assert_eq!(c.compose(d, c.identity_of(0)), Some(d));
    }

    #[test]
    fn non_composable_entry_rejected() {
        let mut raw = delta1_raw();
        raw.compose.push(("d".into(), "d".into(), "d".into()));
        match raw.build() {
            Err(CatError::SpuriousComposite { g, f }) => {
                assert_eq!((g.as_str(), f.as_str()), ("d", "d"));
            }
            other => panic!("expected SpuriousComposite, got {other:?}"),
        }
    }

    #[test]
    fn missing_composite_detected() {
        let raw = RawCategory {
            objects: vec!["0".into(), "1".into(), "2".into()],
            morphisms: vec![
                ("id_0".into(), "0".into(), "0".into()),
                ("id_1".into(), "1".into(), "1".into()),
                ("id_2".into(), "2".into(), "2".into()),
                ("f".into(), "0".into(), "1".into()),
                ("g".into(), "1".into(), "2".into()),
            ],
            identities: vec![
                ("0".into(), "id_0".into()),
                ("1".into(), "id_1".into()),
                ("2".into(), "id_2".into()),
            ],
            compose: vec![],
        };
        match raw.build() {
            Err(CatError::MissingComposite { g, f }) => {
                assert_eq!((g.as_str(), f.as_str()), ("g", "f"));
            }
            other => panic!("expected MissingComposite, got {other:?}"),
        }
    }

    #[test]
    fn associativity_violation_detected() {
        // one object, three non-identity endomorphisms with a broken table
        let raw = RawCategory {
            objects: vec!["x".into()],
            morphisms: vec![
                ("e".into(), "x".into(), "x".into()),
                ("a".into(), "x".into(), "x".into()),
                ("b".into(), "x".into(), "x".into()),
            ],
            identities: vec![("x".into(), "e".into())],
            compose: vec![
                ("a".into(), "a".into(), "b".into()),
                ("a".into(), "b".into(), "e".into()),
                ("b".into(), "a".into(), "a".into()),
                ("b".into(), "b".into(), "a".into()),
            ],
        };
        assert!(matches!(raw.build(), Err(CatError::AssociativityViolation { .. })));
    }
}
