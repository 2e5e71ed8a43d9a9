//! Fundamental-groupoid localization: invert every morphism of a finite
//! category, presented by generators and relations read off the composition
//! table through a spanning tree.

use std::collections::{BTreeMap, VecDeque};
use std::sync::Arc;

use thiserror::Error;

use super::presentation::{free_reduce, GroupPresentation, Letter, Word};
use crate::fincat::{FinCategory, FinFunctor};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
#[error("unknown component index {0}")]
pub struct UnknownComponent(pub usize);

/// A path in the underlying graph: morphisms traversed forwards (`true`) or
/// backwards (`false`).
pub type GraphPath = Vec<(usize, bool)>;

#[derive(Clone, Debug)]
pub struct FpComponent {
    /// object with the lexicographically smallest id in the component
    pub base: usize,
    /// member objects in index order
    pub members: Vec<usize>,
    /// tree path base -> x for every member x
    pub tree_path: BTreeMap<usize, GraphPath>,
    /// morphisms used as (undirected) spanning-tree edges
    pub tree_edges: Vec<usize>,
    /// presentation of the vertex group at `base`
    pub presentation: GroupPresentation,
    /// non-identity, non-tree morphism -> generator index
    pub gen_of_mor: BTreeMap<usize, usize>,
}

/// The localization π₁(C) of a finite category, as objects partitioned into
/// connected components with one presented vertex group each.
#[derive(Clone, Debug)]
pub struct FpGroupoid {
    pub cat: Arc<FinCategory>,
    pub components: Vec<FpComponent>,
    /// object -> component index
    pub component_of: Vec<usize>,
}

/// A map of localized groupoids induced by a functor: where components go and
/// what happens to each vertex-group generator.
#[derive(Clone, Debug)]
pub struct FpGroupoidMap {
    /// source component -> target component
    pub component_map: Vec<usize>,
    /// per source component, image word (over the target component's
    /// generators) of each source generator
    pub vertex_words: Vec<Vec<Word>>,
}

/// Localize a finite category. Components are connected components of the
/// underlying undirected graph; each vertex group is presented with one
/// generator per non-identity non-tree morphism and one relator per
/// composition-table entry, rewritten through the spanning tree.
pub fn localize(cat: &Arc<FinCategory>) -> FpGroupoid {
    let n = cat.n_objects();
    // union-find over objects
    let mut repr: Vec<usize> = (0..n).collect();
    fn find(repr: &mut Vec<usize>, x: usize) -> usize {
        if repr[x] != x {
            let r = find(repr, repr[x]);
            repr[x] = r;
        }
        repr[x]
    }
    for m in 0..cat.n_morphisms() {
        let (a, b) = (cat.src(m), cat.tgt(m));
        let (ra, rb) = (find(&mut repr, a), find(&mut repr, b));
        if ra != rb {
            let lo = ra.min(rb);
            repr[ra.max(rb)] = lo;
        }
    }
    let mut members_by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..n {
        let r = find(&mut repr, x);
        members_by_root.entry(r).or_default().push(x);
    }
    // order components by the lexicographically smallest object id
    let mut groups: Vec<Vec<usize>> = members_by_root.into_values().collect();
    groups.sort_by(|a, b| {
        let ka = a.iter().map(|&x| cat.object_id(x)).min().unwrap();
        let kb = b.iter().map(|&x| cat.object_id(x)).min().unwrap();
        ka.cmp(kb)
    });

    // morphisms in id order for deterministic tree building
    let mut mor_by_id: Vec<usize> = (0..cat.n_morphisms()).collect();
    mor_by_id.sort_by(|&a, &b| cat.morphism_id(a).cmp(cat.morphism_id(b)));

    let mut component_of = vec![usize::MAX; n];
    let mut components = Vec::new();
    for (ci, members) in groups.into_iter().enumerate() {
        for &x in &members {
            component_of[x] = ci;
        }
        let base = *members
            .iter()
            .min_by(|&&a, &&b| cat.object_id(a).cmp(cat.object_id(b)))
            .unwrap();

        // breadth-first spanning tree from the base
        let mut tree_path: BTreeMap<usize, GraphPath> = BTreeMap::new();
        let mut tree_edges = Vec::new();
        tree_path.insert(base, vec![]);
        let mut queue = VecDeque::from([base]);
        while let Some(x) = queue.pop_front() {
            for &m in &mor_by_id {
                if cat.is_identity(m) {
                    continue;
                }
                let (s, t) = (cat.src(m), cat.tgt(m));
                let step = if s == x && !tree_path.contains_key(&t) {
                    Some((t, (m, true)))
                } else if t == x && !tree_path.contains_key(&s) {
                    Some((s, (m, false)))
                } else {
                    None
                };
                if let Some((y, edge)) = step {
                    let mut p = tree_path[&x].clone();
                    p.push(edge);
                    tree_path.insert(y, p);
                    tree_edges.push(m);
                    queue.push_back(y);
                }
            }
        }

        // generators: non-identity, non-tree morphisms inside the component
        let mut gen_of_mor = BTreeMap::new();
        let mut generators = Vec::new();
        for &m in &mor_by_id {
            if cat.is_identity(m) || tree_edges.contains(&m) {
                continue;
            }
            if component_of[cat.src(m)] != ci {
                continue;
            }
            gen_of_mor.insert(m, generators.len());
            generators.push(cat.morphism_id(m).to_string());
        }

        // one relator per composition entry within the component
        let letter = |m: usize| -> Option<Letter> { gen_of_mor.get(&m).map(|&g| (g, true)) };
        let mut relators: Vec<Word> = Vec::new();
        for (g, f, h) in cat.composable_triples() {
            if component_of[cat.src(f)] != ci {
                continue;
            }
            let mut w: Word = Vec::new();
            w.extend(letter(g));
            w.extend(letter(f));
            if let Some((x, _)) = letter(h) {
                w.push((x, false));
            }
            let w = free_reduce(&w);
            if !w.is_empty() && !relators.contains(&w) {
                relators.push(w);
            }
        }

        components.push(FpComponent {
            base,
            members,
            tree_path,
            tree_edges,
            presentation: GroupPresentation { generators, relators },
            gen_of_mor,
        });
    }
    FpGroupoid { cat: cat.clone(), components, component_of }
}

/// The stored vertex-group presentation of a component, deterministically
/// Tietze-simplified.
pub fn vertex_group(g: &FpGroupoid, component: usize) -> Result<GroupPresentation, UnknownComponent> {
    g.components
        .get(component)
        .map(|c| c.presentation.simplify())
        .ok_or(UnknownComponent(component))
}

impl FpGroupoid {
    /// Number of path components (π₀).
    pub fn n_components(&self) -> usize {
        self.components.len()
    }

    /// Express a graph path of the underlying category as a word over a
    /// component's generators (tree edges and identities vanish).
    fn word_of_path(&self, ci: usize, path: &[(usize, bool)]) -> Word {
        let comp = &self.components[ci];
        let mut w = Vec::new();
        for &(m, sign) in path {
            if self.cat.is_identity(m) || comp.tree_edges.contains(&m) {
                continue;
            }
            let g = comp.gen_of_mor[&m];
            w.push((g, sign));
        }
        w
    }
}

/// The induced map π₁(u) between localizations. `src` and `tgt` must be the
/// localizations of dom(u) and cod(u).
pub fn induced_map(u: &FinFunctor, src: &FpGroupoid, tgt: &FpGroupoid) -> FpGroupoidMap {
    let component_map: Vec<usize> = src
        .components
        .iter()
        .map(|c| tgt.component_of[u.on_obj(c.base)])
        .collect();
    let mut vertex_words = Vec::new();
    for (ci, comp) in src.components.iter().enumerate() {
        let tc = component_map[ci];
        let image_base_path = &tgt.components[tc].tree_path[&u.on_obj(comp.base)];
        let mut words = Vec::new();
        let mut gens: Vec<(usize, usize)> = comp.gen_of_mor.iter().map(|(&m, &g)| (g, m)).collect();
        gens.sort_unstable();
        for (_, m) in gens {
            // conjugated loop: p_D(u(base))^-1 · u(p_C(tgt m))^-1 · u(m) · u(p_C(src m)) · p_D(u(base))
            let mut path: Vec<(usize, bool)> = Vec::new();
            path.extend(image_base_path.iter().map(|&(e, s)| (e, !s)).rev());
            let p_tgt = &comp.tree_path[&src.cat.tgt(m)];
            path.extend(p_tgt.iter().rev().map(|&(e, s)| (u.on_mor(e), !s)));
            path.push((u.on_mor(m), true));
            let p_src = &comp.tree_path[&src.cat.src(m)];
            path.extend(p_src.iter().map(|&(e, s)| (u.on_mor(e), s)));
            path.extend(image_base_path.iter().copied());
            words.push(free_reduce(&tgt.word_of_path(tc, &path)));
        }
        vertex_words.push(words);
    }
    FpGroupoidMap { component_map, vertex_words }
}
