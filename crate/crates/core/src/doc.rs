//! The document grammar: one structured-text (JSON) format for categories,
//! functors, presheaves, diagrams, intervals and presheaf morphisms.
//! Identifiers are drawn from [A-Za-z0-9_(),-] so that composite ids emitted
//! by the constructors round-trip through the parser.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::adjoints::{AdjointsError, CatDiagram};
use crate::corpus::corpus_entry;
use crate::fincat::{CatError, FinCategory, FinFunctor, FunctorError, RawCategory};
use crate::grpd::{FinGroupoid, GroupoidError};
use crate::presheaf::{
    CatPresheaf, CatPresheafMorphism, GrpdPresheaf, Interval, PresheafError, PresheafMorphism,
    SetPresheaf,
};

#[derive(Clone, Debug, Error)]
pub enum DocError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown corpus entry {0:?}")]
    UnknownCorpus(String),
    #[error("invalid id {0:?}: ids match [A-Za-z0-9_(),-]+")]
    BadId(String),
    #[error("unknown object id {0:?}")]
    UnknownObject(String),
    #[error("unknown morphism id {0:?}")]
    UnknownMorphism(String),
    #[error(transparent)]
    Category(#[from] CatError),
    #[error(transparent)]
    Functor(#[from] FunctorError),
    #[error(transparent)]
    Presheaf(#[from] PresheafError),
    #[error(transparent)]
    Groupoid(#[from] GroupoidError),
    #[error(transparent)]
    Diagram(#[from] AdjointsError),
    #[error("document has the wrong kind for this command: expected {expected}")]
    WrongKind { expected: &'static str },
}

fn check_id(id: &str) -> Result<(), DocError> {
    let ok = !id.is_empty()
        && id
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '(' | ')' | ',' | '-'));
    if ok {
        Ok(())
    } else {
        Err(DocError::BadId(id.to_string()))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MorphismDoc {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CategoryDoc {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDoc>,
    pub identities: BTreeMap<String, String>,
    /// triples [g, f, g_after_f]; identity composites may be omitted
    pub compose: Vec<[String; 3]>,
}

/// Either an inline category document or a named corpus reference.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum CategoryRef {
    Corpus(String),
    Inline(CategoryDoc),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FunctorBodyDoc {
    pub omap: BTreeMap<String, String>,
    pub mmap: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FunctorDoc {
    pub dom: CategoryRef,
    pub cod: CategoryRef,
    #[serde(flatten)]
    pub body: FunctorBodyDoc,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PresheafDoc {
    pub base: CategoryRef,
    /// "set" | "grpd" | "cat"; grpd when omitted
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flavor: Option<String>,
    pub values: BTreeMap<String, CategoryDoc>,
    pub actions: BTreeMap<String, FunctorBodyDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DiagramDoc {
    pub base: CategoryRef,
    pub assignment: BTreeMap<String, CategoryDoc>,
    pub action: BTreeMap<String, FunctorBodyDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terminals: Option<BTreeMap<String, String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(untagged)]
pub enum PointDoc {
    CatObject(String),
    PresheafPoint(BTreeMap<String, String>),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct IntervalDoc {
    /// "cat" | "presheaf"
    pub ambient: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carrier_category: Option<CategoryRef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub carrier_presheaf: Option<PresheafDoc>,
    pub i0: PointDoc,
    pub i1: PointDoc,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PresheafMorphismDoc {
    pub source: PresheafDoc,
    pub target: PresheafDoc,
    pub components: BTreeMap<String, FunctorBodyDoc>,
}

/// Top-level typed document.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", content = "body", rename_all = "snake_case")]
pub enum Document {
    Category(CategoryDoc),
    Functor(FunctorDoc),
    Presheaf(PresheafDoc),
    Diagram(DiagramDoc),
    Interval(IntervalDoc),
    PresheafMorphism(PresheafMorphismDoc),
}

/// A parsed and validated document.
#[derive(Clone, Debug)]
pub enum ParsedDocument {
    Category(Arc<FinCategory>),
    Functor(FinFunctor),
    GrpdPresheaf(GrpdPresheaf),
    SetPresheaf(SetPresheaf),
    CatPresheaf(CatPresheaf),
    Diagram(CatDiagram),
    Interval(Interval),
    CatPresheafMorphism(CatPresheafMorphism),
    PresheafMorphism(PresheafMorphism),
}

impl ParsedDocument {
    pub fn kind(&self) -> &'static str {
        match self {
            ParsedDocument::Category(_) => "category",
            ParsedDocument::Functor(_) => "functor",
            ParsedDocument::GrpdPresheaf(_) => "presheaf(grpd)",
            ParsedDocument::SetPresheaf(_) => "presheaf(set)",
            ParsedDocument::CatPresheaf(_) => "presheaf(cat)",
            ParsedDocument::Diagram(_) => "diagram",
            ParsedDocument::Interval(_) => "interval",
            ParsedDocument::CatPresheafMorphism(_) => "presheaf_morphism(cat)",
            ParsedDocument::PresheafMorphism(_) => "presheaf_morphism",
        }
    }
}

pub fn parse_document(text: &str) -> Result<ParsedDocument, DocError> {
    let doc: Document = serde_json::from_str(text).map_err(|e| DocError::Parse(e.to_string()))?;
    build_document(&doc)
}

pub fn build_document(doc: &Document) -> Result<ParsedDocument, DocError> {
    match doc {
        Document::Category(c) => Ok(ParsedDocument::Category(build_category(c)?)),
        Document::Functor(f) => Ok(ParsedDocument::Functor(build_functor(f)?)),
        Document::Presheaf(p) => build_presheaf(p),
        Document::Diagram(d) => Ok(ParsedDocument::Diagram(build_diagram(d)?)),
        Document::Interval(i) => Ok(ParsedDocument::Interval(build_interval(i)?)),
        Document::PresheafMorphism(m) => build_presheaf_morphism(m),
    }
}

pub fn resolve_category_ref(r: &CategoryRef) -> Result<Arc<FinCategory>, DocError> {
    match r {
        CategoryRef::Corpus(name) => {
            corpus_entry(name).ok_or_else(|| DocError::UnknownCorpus(name.clone()))
        }
        CategoryRef::Inline(doc) => build_category(doc),
    }
}

pub fn build_category(doc: &CategoryDoc) -> Result<Arc<FinCategory>, DocError> {
    for o in &doc.objects {
        check_id(o)?;
    }
    for m in &doc.morphisms {
        check_id(&m.id)?;
    }
    let raw = RawCategory {
        objects: doc.objects.clone(),
        morphisms: doc.morphisms.iter().map(|m| (m.id.clone(), m.src.clone(), m.tgt.clone())).collect(),
        identities: doc.identities.iter().map(|(o, m)| (o.clone(), m.clone())).collect(),
        compose: doc.compose.iter().map(|[g, f, h]| (g.clone(), f.clone(), h.clone())).collect(),
    };
    Ok(raw.build()?)
}

fn build_functor_body(
    dom: &Arc<FinCategory>,
    cod: &Arc<FinCategory>,
    body: &FunctorBodyDoc,
) -> Result<FinFunctor, DocError> {
    let mut omap = vec![usize::MAX; dom.n_objects()];
    for (o, im) in &body.omap {
        let oi = dom.obj_index(o).ok_or_else(|| DocError::UnknownObject(o.clone()))?;
        omap[oi] = cod.obj_index(im).ok_or_else(|| DocError::UnknownObject(im.clone()))?;
    }
    if omap.contains(&usize::MAX) {
        return Err(DocError::Parse("object map does not cover the domain".into()));
    }
    let mut mmap = vec![usize::MAX; dom.n_morphisms()];
    for (m, im) in &body.mmap {
        let mi = dom.mor_index(m).ok_or_else(|| DocError::UnknownMorphism(m.clone()))?;
        mmap[mi] = cod.mor_index(im).ok_or_else(|| DocError::UnknownMorphism(im.clone()))?;
    }
    // identity images may be omitted; they are forced
    for o in 0..dom.n_objects() {
        let id = dom.identity_of(o);
        if mmap[id] == usize::MAX {
            mmap[id] = cod.identity_of(omap[o]);
        }
    }
    if mmap.contains(&usize::MAX) {
        return Err(DocError::Parse("morphism map does not cover the domain".into()));
    }
    Ok(FinFunctor::new(dom.clone(), cod.clone(), omap, mmap)?)
}

pub fn build_functor(doc: &FunctorDoc) -> Result<FinFunctor, DocError> {
    let dom = resolve_category_ref(&doc.dom)?;
    let cod = resolve_category_ref(&doc.cod)?;
    build_functor_body(&dom, &cod, &doc.body)
}

fn presheaf_parts(
    doc: &PresheafDoc,
) -> Result<(Arc<FinCategory>, Vec<Arc<FinCategory>>, Vec<FinFunctor>), DocError> {
    let base = resolve_category_ref(&doc.base)?;
    let mut values = Vec::with_capacity(base.n_objects());
    for a in 0..base.n_objects() {
        let id = base.object_id(a);
        let vdoc = doc
            .values
            .get(id)
            .ok_or_else(|| DocError::Parse(format!("missing value at object {id:?}")))?;
        values.push(build_category(vdoc)?);
    }
    let mut actions = Vec::with_capacity(base.n_morphisms());
    for f in 0..base.n_morphisms() {
        let id = base.morphism_id(f);
        if base.is_identity(f) && !doc.actions.contains_key(id) {
            actions.push(FinFunctor::identity(values[base.src(f)].clone()));
            continue;
        }
        let body = doc
            .actions
            .get(id)
            .ok_or_else(|| DocError::Parse(format!("missing action at morphism {id:?}")))?;
        // contravariant: X(f) : X(tgt f) -> X(src f)
        actions.push(build_functor_body(&values[base.tgt(f)], &values[base.src(f)], body)?);
    }
    Ok((base, values, actions))
}

pub fn build_presheaf(doc: &PresheafDoc) -> Result<ParsedDocument, DocError> {
    let (base, values, actions) = presheaf_parts(doc)?;
    match doc.flavor.as_deref().unwrap_or("grpd") {
        "cat" => Ok(ParsedDocument::CatPresheaf(CatPresheaf::new(base, values, actions)?)),
        "set" => {
            let groupoids = values
                .into_iter()
                .map(FinGroupoid::new)
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .map(Arc::new)
                .collect();
            let p = GrpdPresheaf::new(base, groupoids, actions)?;
            Ok(ParsedDocument::SetPresheaf(SetPresheaf::new(p)?))
        }
        "grpd" => {
            let groupoids = values
                .into_iter()
                .map(FinGroupoid::new)
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .map(Arc::new)
                .collect();
            Ok(ParsedDocument::GrpdPresheaf(GrpdPresheaf::new(base, groupoids, actions)?))
        }
        other => Err(DocError::Parse(format!("unknown presheaf flavor {other:?}"))),
    }
}

pub fn build_grpd_presheaf(doc: &PresheafDoc) -> Result<GrpdPresheaf, DocError> {
    match build_presheaf(doc)? {
        ParsedDocument::GrpdPresheaf(p) => Ok(p),
        ParsedDocument::SetPresheaf(p) => Ok(p.into_grpd()),
        _ => Err(DocError::WrongKind { expected: "set- or grpd-valued presheaf" }),
    }
}

pub fn build_diagram(doc: &DiagramDoc) -> Result<CatDiagram, DocError> {
    let base = resolve_category_ref(&doc.base)?;
    let mut values = Vec::with_capacity(base.n_objects());
    for a in 0..base.n_objects() {
        let id = base.object_id(a);
        let vdoc = doc
            .assignment
            .get(id)
            .ok_or_else(|| DocError::Parse(format!("missing assignment at object {id:?}")))?;
        values.push(build_category(vdoc)?);
    }
    let mut actions = Vec::with_capacity(base.n_morphisms());
    for f in 0..base.n_morphisms() {
        let id = base.morphism_id(f);
        if base.is_identity(f) && !doc.action.contains_key(id) {
            actions.push(FinFunctor::identity(values[base.src(f)].clone()));
            continue;
        }
        let body = doc
            .action
            .get(id)
            .ok_or_else(|| DocError::Parse(format!("missing action at morphism {id:?}")))?;
        // covariant: i(f) : i(src f) -> i(tgt f)
        actions.push(build_functor_body(&values[base.src(f)], &values[base.tgt(f)], body)?);
    }
    let terminals = match &doc.terminals {
        None => None,
        Some(map) => {
            let mut t = Vec::with_capacity(base.n_objects());
            for a in 0..base.n_objects() {
                let id = base.object_id(a);
                let obj = map
                    .get(id)
                    .ok_or_else(|| DocError::Parse(format!("missing terminal at {id:?}")))?;
                t.push(
                    values[a]
                        .obj_index(obj)
                        .ok_or_else(|| DocError::UnknownObject(obj.clone()))?,
                );
            }
            Some(t)
        }
    };
    Ok(CatDiagram::new(base, values, actions, terminals)?)
}

pub fn build_interval(doc: &IntervalDoc) -> Result<Interval, DocError> {
    match doc.ambient.as_str() {
        "cat" => {
            let carrier = doc
                .carrier_category
                .as_ref()
                .ok_or(DocError::WrongKind { expected: "carrier_category" })?;
            let carrier = resolve_category_ref(carrier)?;
            let obj = |p: &PointDoc| -> Result<usize, DocError> {
                match p {
                    PointDoc::CatObject(o) => {
                        carrier.obj_index(o).ok_or_else(|| DocError::UnknownObject(o.clone()))
                    }
                    _ => Err(DocError::WrongKind { expected: "object id point" }),
                }
            };
            Ok(Interval::in_cat(carrier.clone(), obj(&doc.i0)?, obj(&doc.i1)?))
        }
        "presheaf" => {
            let pdoc = doc
                .carrier_presheaf
                .as_ref()
                .ok_or(DocError::WrongKind { expected: "carrier_presheaf" })?;
            let carrier = build_grpd_presheaf(pdoc)?;
            let point = |p: &PointDoc| -> Result<Vec<usize>, DocError> {
                match p {
                    PointDoc::PresheafPoint(map) => {
                        let base = carrier.base();
                        let mut out = Vec::with_capacity(base.n_objects());
                        for a in 0..base.n_objects() {
                            let id = base.object_id(a);
                            let o = map.get(id).ok_or_else(|| {
                                DocError::Parse(format!("point missing at object {id:?}"))
                            })?;
                            out.push(
                                carrier
                                    .value(a)
                                    .cat()
                                    .obj_index(o)
                                    .ok_or_else(|| DocError::UnknownObject(o.clone()))?,
                            );
                        }
                        Ok(out)
                    }
                    _ => Err(DocError::WrongKind { expected: "per-object point" }),
                }
            };
            let p0 = point(&doc.i0)?;
            let p1 = point(&doc.i1)?;
            Ok(Interval::in_presheaves(carrier, p0, p1)?)
        }
        other => Err(DocError::Parse(format!("unknown ambient {other:?}"))),
    }
}

pub fn build_presheaf_morphism(doc: &PresheafMorphismDoc) -> Result<ParsedDocument, DocError> {
    let src_flavor = doc.source.flavor.as_deref().unwrap_or("grpd");
    if src_flavor == "cat" {
        let source = match build_presheaf(&doc.source)? {
            ParsedDocument::CatPresheaf(p) => p,
            _ => return Err(DocError::WrongKind { expected: "cat presheaf" }),
        };
        let target = match build_presheaf(&doc.target)? {
            ParsedDocument::CatPresheaf(p) => p,
            _ => return Err(DocError::WrongKind { expected: "cat presheaf" }),
        };
        let base = source.base().clone();
        let mut components = Vec::with_capacity(base.n_objects());
        for a in 0..base.n_objects() {
            let id = base.object_id(a);
            let body = doc
                .components
                .get(id)
                .ok_or_else(|| DocError::Parse(format!("missing component at {id:?}")))?;
            components.push(build_functor_body(source.value(a), target.value(a), body)?);
        }
        Ok(ParsedDocument::CatPresheafMorphism(CatPresheafMorphism::new(
            source, target, components,
        )?))
    } else {
        let source = build_grpd_presheaf(&doc.source)?;
        let target = build_grpd_presheaf(&doc.target)?;
        let base = source.base().clone();
        let mut components = Vec::with_capacity(base.n_objects());
        for a in 0..base.n_objects() {
            let id = base.object_id(a);
            let body = doc
                .components
                .get(id)
                .ok_or_else(|| DocError::Parse(format!("missing component at {id:?}")))?;
            components.push(build_functor_body(
                source.value(a).cat(),
                target.value(a).cat(),
                body,
            )?);
        }
        Ok(ParsedDocument::PresheafMorphism(PresheafMorphism::new(source, target, components)?))
    }
}

/// Serialize a category back to its document form.
pub fn category_to_doc(cat: &FinCategory) -> CategoryDoc {
    let morphisms = (0..cat.n_morphisms())
        .map(|m| MorphismDoc {
            id: cat.morphism_id(m).to_string(),
            src: cat.object_id(cat.src(m)).to_string(),
            tgt: cat.object_id(cat.tgt(m)).to_string(),
        })
        .collect();
    let identities = (0..cat.n_objects())
        .map(|o| {
            (cat.object_id(o).to_string(), cat.morphism_id(cat.identity_of(o)).to_string())
        })
        .collect();
    let compose = cat
        .composable_triples()
        .into_iter()
        .filter(|&(g, f, _)| !cat.is_identity(g) && !cat.is_identity(f))
        .map(|(g, f, h)| {
            [
                cat.morphism_id(g).to_string(),
                cat.morphism_id(f).to_string(),
                cat.morphism_id(h).to_string(),
            ]
        })
        .collect();
    CategoryDoc {
        objects: cat.object_ids().to_vec(),
        morphisms,
        identities,
        compose,
    }
}

/// Serialize a groupoid-valued presheaf.
pub fn presheaf_to_doc(p: &GrpdPresheaf, flavor: Option<&str>) -> PresheafDoc {
    let base = p.base();
    let values = (0..base.n_objects())
        .map(|a| (base.object_id(a).to_string(), category_to_doc(p.value(a).cat())))
        .collect();
    let actions = (0..base.n_morphisms())
        .filter(|&f| !base.is_identity(f))
        .map(|f| (base.morphism_id(f).to_string(), functor_body_to_doc(p.action(f))))
        .collect();
    PresheafDoc {
        base: CategoryRef::Inline(category_to_doc(base)),
        flavor: flavor.map(|s| s.to_string()),
        values,
        actions,
    }
}

pub fn functor_body_to_doc(f: &FinFunctor) -> FunctorBodyDoc {
    let dom = f.dom();
    let cod = f.cod();
    FunctorBodyDoc {
        omap: (0..dom.n_objects())
            .map(|o| (dom.object_id(o).to_string(), cod.object_id(f.on_obj(o)).to_string()))
            .collect(),
        mmap: (0..dom.n_morphisms())
            .map(|m| (dom.morphism_id(m).to_string(), cod.morphism_id(f.on_mor(m)).to_string()))
            .collect(),
    }
}

/// Canonical pretty-printed JSON for a document.
pub fn document_to_string(doc: &Document) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::corpus;

    #[test]
    fn corpus_round_trips() {
        for (name, cat) in corpus() {
            let doc = Document::Category(category_to_doc(&cat));
            let text = document_to_string(&doc);
            let parsed = parse_document(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
            let c = match &parsed {
                ParsedDocument::Category(c) => c.clone(),
                _ => panic!("wrong kind"),
            };
            assert!(c.same_table(&cat), "{name} round-trips");
            // serialize(parse(doc)) is byte-identical
            let reserialized = document_to_string(&Document::Category(category_to_doc(&c)));
            assert_eq!(text, reserialized, "{name} serializes deterministically");
        }
    }

    #[test]
    fn malformed_compose_triple_is_a_parse_error() {
        let text = r#"{"kind":"category","body":{"objects":["x"],
            "morphisms":[{"id":"id_x","src":"x","tgt":"x"}],
            "identities":{"x":"id_x"},
            "compose":[["id_x","nope","id_x"]]}}"#;
        match parse_document(text) {
            Err(DocError::Category(CatError::UnknownMorphism(m))) => assert_eq!(m, "nope"),
            other => panic!("expected unknown morphism, got {other:?}"),
        }
    }

    #[test]
    fn presheaf_with_undefined_base_object_rejected() {
        let text = r#"{"kind":"presheaf","body":{"base":"e","values":{},"actions":{}}}"#;
        assert!(parse_document(text).is_err());
    }

    #[test]
    fn bad_id_rejected() {
        let text = r#"{"kind":"category","body":{"objects":["x y"],
            "morphisms":[{"id":"id","src":"x y","tgt":"x y"}],
            "identities":{"x y":"id"},"compose":[]}}"#;
        assert!(matches!(parse_document(text), Err(DocError::BadId(_))));
    }

    #[test]
    fn functor_document_builds() {
        let text = r#"{"kind":"functor","body":{
            "dom":"delta1","cod":"e",
            "omap":{"0":"pt","1":"pt"},
            "mmap":{"d0_1":"id_pt"}}}"#;
        match parse_document(text).unwrap() {
            ParsedDocument::Functor(f) => {
                assert_eq!(f.dom().n_objects(), 2);
                assert_eq!(f.cod().n_objects(), 1);
            }
            _ => panic!("wrong kind"),
        }
    }
}
