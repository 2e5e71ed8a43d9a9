use std::sync::Arc;

use super::category::{CatError, FinCategory, ProductStructure};

/// Parameter block for the standard constructions, mirroring the document
/// grammar of the command-line tool.
#[derive(Clone, Debug)]
pub enum StandardSpec {
    Terminal,
    Delta(usize),
    Product(Arc<FinCategory>, Arc<FinCategory>),
    Opposite(Arc<FinCategory>),
    Poset { objects: Vec<String>, relation: Vec<(String, String)> },
    FreeIso,
    CyclicGroup(usize),
    IdempotentMonoid,
}

impl StandardSpec {
    pub fn build(self) -> Result<Arc<FinCategory>, CatError> {
        match self {
            StandardSpec::Terminal => Ok(terminal()),
            StandardSpec::Delta(n) => Ok(delta(n)),
            StandardSpec::Product(a, b) => Ok(product(&a, &b)),
            StandardSpec::Opposite(a) => Ok(opposite(&a)),
            StandardSpec::Poset { objects, relation } => poset(objects, &relation),
            StandardSpec::FreeIso => Ok(free_iso()),
            StandardSpec::CyclicGroup(n) => Ok(cyclic_group(n)),
            StandardSpec::IdempotentMonoid => Ok(idempotent_monoid()),
        }
    }
}

fn must(parts: Result<FinCategory, CatError>) -> Arc<FinCategory> {
    Arc::new(parts.expect("standard construction yields a valid table"))
}

/// The terminal category e.
pub fn terminal() -> Arc<FinCategory> {
    must(FinCategory::from_parts(
        vec!["pt".into()],
        vec![("id_pt".into(), 0, 0)],
        vec![0],
        &[(0, 0, 0)],
    ))
}

/// The ordered set {0 < ... < n} as a category.
pub fn delta(n: usize) -> Arc<FinCategory> {
    let objects: Vec<String> = (0..=n).map(|i| i.to_string()).collect();
    let mut morphisms = Vec::new();
    let mut index = std::collections::BTreeMap::new();
    for i in 0..=n {
        for j in i..=n {
            let id = if i == j { format!("id_{i}") } else { format!("d{i}_{j}") };
            index.insert((i, j), morphisms.len());
            morphisms.push((id, i, j));
        }
    }
    let identity: Vec<usize> = (0..=n).map(|i| index[&(i, i)]).collect();
    let mut compose = Vec::new();
    for (&(i, j), &f) in &index {
        for (&(j2, k), &g) in &index {
            if j2 == j {
                compose.push((g, f, index[&(i, k)]));
            }
        }
    }
    must(FinCategory::from_parts(objects, morphisms, identity, &compose))
}

/// Binary product, with pairing metadata attached.
pub fn product(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> Arc<FinCategory> {
    let mut objects = Vec::new();
    let mut obj_pairs = Vec::new();
    for i in 0..a.n_objects() {
        for j in 0..b.n_objects() {
            objects.push(format!("({},{})", a.object_id(i), b.object_id(j)));
            obj_pairs.push((i, j));
        }
    }
    let obj_of = |i: usize, j: usize| i * b.n_objects() + j;
    let mut morphisms = Vec::new();
    let mut mor_pairs = Vec::new();
    for f in 0..a.n_morphisms() {
        for g in 0..b.n_morphisms() {
            morphisms.push((
                format!("({},{})", a.morphism_id(f), b.morphism_id(g)),
                obj_of(a.src(f), b.src(g)),
                obj_of(a.tgt(f), b.tgt(g)),
            ));
            mor_pairs.push((f, g));
        }
    }
    let mor_of = |f: usize, g: usize| f * b.n_morphisms() + g;
    let identity: Vec<usize> = obj_pairs
        .iter()
        .map(|&(i, j)| mor_of(a.identity_of(i), b.identity_of(j)))
        .collect();
    let mut compose = Vec::new();
    for (g1, f1, h1) in a.composable_triples() {
        for (g2, f2, h2) in b.composable_triples() {
            compose.push((mor_of(g1, g2), mor_of(f1, f2), mor_of(h1, h2)));
        }
    }
    let cat = FinCategory::from_parts(objects, morphisms, identity, &compose)
        .expect("product of valid tables is valid");
    Arc::new(cat.with_product(ProductStructure::new(a.clone(), b.clone(), obj_pairs, mor_pairs)))
}

/// Opposite category: same ids, arrows reversed.
pub fn opposite(a: &FinCategory) -> Arc<FinCategory> {
    let objects = a.object_ids().to_vec();
    let morphisms: Vec<(String, usize, usize)> = (0..a.n_morphisms())
        .map(|m| (a.morphism_id(m).to_string(), a.tgt(m), a.src(m)))
        .collect();
    let identity: Vec<usize> = (0..a.n_objects()).map(|o| a.identity_of(o)).collect();
    let compose: Vec<(usize, usize, usize)> =
        a.composable_triples().into_iter().map(|(g, f, h)| (f, g, h)).collect();
    must(FinCategory::from_parts(objects, morphisms, identity, &compose))
}

/// A poset as a category. The relation is given by its non-reflexive pairs
/// (x, y) meaning x <= y; reflexivity is implied. The completed relation must
/// be a partial order.
pub fn poset(objects: Vec<String>, relation: &[(String, String)]) -> Result<Arc<FinCategory>, CatError> {
    let n = objects.len();
    let index: std::collections::BTreeMap<&str, usize> =
        objects.iter().enumerate().map(|(i, o)| (o.as_str(), i)).collect();
    let mut le = vec![vec![false; n]; n];
    for i in 0..n {
        le[i][i] = true;
    }
    for (x, y) in relation {
        let i = *index.get(x.as_str()).ok_or_else(|| CatError::UnknownObject(x.clone()))?;
        let j = *index.get(y.as_str()).ok_or_else(|| CatError::UnknownObject(y.clone()))?;
        le[i][j] = true;
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if le[i][j] && le[j][k] && !le[i][k] {
                    return Err(CatError::InvalidPosetRelation(format!(
                        "not transitive: {} <= {} <= {} but not {} <= {}",
                        objects[i], objects[j], objects[k], objects[i], objects[k]
                    )));
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && le[i][j] && le[j][i] {
                return Err(CatError::InvalidPosetRelation(format!(
                    "not antisymmetric: {} <= {} and {} <= {}",
                    objects[i], objects[j], objects[j], objects[i]
                )));
            }
        }
    }
    let mut morphisms = Vec::new();
    let mut midx = std::collections::BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            if le[i][j] {
                let id = if i == j {
                    format!("id_{}", objects[i])
                } else {
                    format!("le_{}_{}", objects[i], objects[j])
                };
                midx.insert((i, j), morphisms.len());
                morphisms.push((id, i, j));
            }
        }
    }
    let identity: Vec<usize> = (0..n).map(|i| midx[&(i, i)]).collect();
    let mut compose = Vec::new();
    for (&(i, j), &f) in &midx {
        for (&(j2, k), &g) in &midx {
            if j2 == j {
                compose.push((g, f, midx[&(i, k)]));
            }
        }
    }
    FinCategory::from_parts(objects, morphisms, identity, &compose).map(Arc::new)
}

/// Discrete category on the given object ids.
pub fn discrete(objects: Vec<String>) -> Arc<FinCategory> {
    poset(objects, &[]).expect("discrete poset is valid")
}

/// The free-standing isomorphism J: two objects, mutually inverse arrows.
pub fn free_iso() -> Arc<FinCategory> {
    must(FinCategory::from_parts(
        vec!["a".into(), "b".into()],
        vec![
            ("id_a".into(), 0, 0),
            ("id_b".into(), 1, 1),
            ("u".into(), 0, 1),
            ("v".into(), 1, 0),
        ],
        vec![0, 1],
        &[
            (0, 0, 0),
            (1, 1, 1),
            (2, 0, 2),
            (1, 2, 2),
            (3, 1, 3),
            (0, 3, 3),
            (3, 2, 0),
            (2, 3, 1),
        ],
    ))
}

/// The cyclic group of order n as a one-object groupoid, generator `s1`.
pub fn cyclic_group(n: usize) -> Arc<FinCategory> {
    assert!(n >= 1, "cyclic group needs order >= 1");
    let mut morphisms = vec![("id_pt".to_string(), 0, 0)];
    for k in 1..n {
        morphisms.push((format!("s{k}"), 0, 0));
    }
    let mut compose = Vec::new();
    for i in 0..n {
        for j in 0..n {
            compose.push((i, j, (i + j) % n));
        }
    }
    must(FinCategory::from_parts(vec!["pt".into()], morphisms, vec![0], &compose))
}

/// The two-element monoid {1, s} with s∘s = s, as a one-object category.
pub fn idempotent_monoid() -> Arc<FinCategory> {
    must(FinCategory::from_parts(
        vec!["pt".into()],
        vec![("id_pt".into(), 0, 0), ("s".into(), 0, 0)],
        vec![0],
        &[(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 1)],
    ))
}

/// Empty category (zero objects). Valid; needed as the degenerate carrier in
/// separation checks.
pub fn empty() -> Arc<FinCategory> {
    must(FinCategory::from_parts(vec![], vec![], vec![], &[]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::iso::find_isomorphism;
    use crate::limits::Counter;

    #[test]
    fn delta1_shape() {
        let d = delta(1);
        assert_eq!(d.n_objects(), 2);
        assert_eq!(d.n_morphisms(), 3);
    }

    #[test]
    fn delta3_counts() {
        let d = delta(3);
        assert_eq!(d.n_objects(), 4);
        assert_eq!(d.n_morphisms(), 10);
    }

    #[test]
    fn product_with_terminal_isomorphic() {
        let a = delta(1);
        let p = product(&terminal(), &a);
        assert!(find_isomorphism(&p, &a, &mut Counter::new(100_000, "test")).is_some());
    }

    #[test]
    fn double_opposite_is_identity() {
        let a = delta(2);
        let oo = opposite(&opposite(&a));
        assert!(oo.same_table(&a));
    }

    #[test]
    fn cyclic_group_two() {
        let c = cyclic_group(2);
        assert_eq!(c.n_objects(), 1);
        assert_eq!(c.n_morphisms(), 2);
        let s = c.mor_index("s1").unwrap();
        assert_eq!(c.compose(s, s), Some(c.identity_of(0)));
    }

    #[test]
    fn bad_poset_rejected() {
        let r = poset(
            vec!["x".into(), "y".into()],
            &[("x".into(), "y".into()), ("y".into(), "x".into())],
        );
        assert!(matches!(r, Err(CatError::InvalidPosetRelation(_))));
    }
}
