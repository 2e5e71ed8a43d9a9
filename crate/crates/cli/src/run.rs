use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use serde::Deserialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use testcat_core::adjoints::{
    adjunction_transpose, counit_alpha, i_star, sieve_classifier, slice_diagram,
    transposed_counit, AdjointsError,
};
use testcat_core::corpus::{corpus, corpus_entry};
use testcat_core::doc::{
    build_category, category_to_doc, document_to_string, functor_body_to_doc, parse_document,
    presheaf_to_doc, CategoryRef, DocError, Document, ParsedDocument,
};
use testcat_core::elements::{elements, elements_set, grothendieck, ElementsResult};
use testcat_core::fincat::{is_grothendieck_fibration, FinCategory};
use testcat_core::grpd::{localize, vertex_group, w1_class, Verdict};
use testcat_core::homology::{
    homology, is_aspherical, is_aspherical_morphism, nerve, thomason_check, LocalizerSpec,
};
use testcat_core::limits::Counter;
use testcat_core::presheaf::{embed_discrete, representable, terminal_presheaf};
use testcat_core::testcat::{
    canonical_iso_suite, canonical_multiplicative_interval, check_hierarchy, default_catalog,
    is_strongly_separating, verify_multiplicative, weak_test_evidence,
};
use testcat_core::{FinGroupoid, Limits};

use crate::report::{InputDigest, Report, Status};

#[derive(Debug)]
pub enum CliError {
    Io(String),
    Doc(DocError),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(e) => write!(f, "io error: {e}"),
            CliError::Doc(e) => write!(f, "{e}"),
            CliError::Usage(e) => write!(f, "usage error: {e}"),
        }
    }
}

impl From<DocError> for CliError {
    fn from(e: DocError) -> Self {
        CliError::Doc(e)
    }
}

pub struct LoadedInput {
    pub name: String,
    pub digest: String,
    pub parsed: ParsedDocument,
}

fn sha256_hex(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    hex::encode(h.finalize())
}

pub fn load_input(spec: &str) -> Result<LoadedInput, CliError> {
    if let Some(name) = spec.strip_prefix("corpus:") {
        let cat = corpus_entry(name)
            .ok_or_else(|| CliError::Doc(DocError::UnknownCorpus(name.to_string())))?;
        let text = document_to_string(&Document::Category(category_to_doc(&cat)));
        return Ok(LoadedInput {
            name: spec.to_string(),
            digest: sha256_hex(text.as_bytes()),
            parsed: ParsedDocument::Category(cat),
        });
    }
    let bytes = std::fs::read(spec).map_err(|e| CliError::Io(format!("{spec}: {e}")))?;
    let text = String::from_utf8_lossy(&bytes);
    let parsed = parse_document(&text)?;
    Ok(LoadedInput { name: spec.to_string(), digest: sha256_hex(&bytes), parsed })
}

fn digests(inputs: &[&LoadedInput]) -> Vec<InputDigest> {
    inputs
        .iter()
        .map(|i| InputDigest { name: i.name.clone(), sha256: i.digest.clone() })
        .collect()
}

fn want_category(i: &LoadedInput) -> Result<Arc<FinCategory>, CliError> {
    match &i.parsed {
        ParsedDocument::Category(c) => Ok(c.clone()),
        _ => Err(CliError::Usage(format!("{} must be a category document", i.name))),
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, u128) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_millis())
}

fn verdict_result(report: &mut Report, name: &str, v: &Verdict, ms: u128) {
    report.push(
        name,
        Status::from_answer(v.answer),
        serde_json::to_value(v).unwrap_or(Value::Null),
        ms,
    );
}

pub struct RunOptions {
    pub localizer: LocalizerSpec,
    pub limits: Limits,
    pub catalog_path: Option<PathBuf>,
    pub dim: usize,
}

impl RunOptions {
    fn counter(&self, context: &'static str) -> Counter {
        Counter::new(self.limits.enum_cap, context)
    }

    fn config_value(&self, catalog: Option<&[(String, Arc<FinCategory>)]>) -> Value {
        json!({
            "localizer": serde_json::to_value(self.localizer).unwrap(),
            "budgets": serde_json::to_value(self.limits).unwrap(),
            "dim": self.dim,
            "catalog": catalog.map(|c| c.iter().map(|(n, _)| n.clone()).collect::<Vec<_>>()),
        })
    }
}

#[derive(Deserialize)]
struct CatalogEntryDoc {
    name: String,
    category: CategoryRef,
}

pub fn load_catalog(
    path: Option<&PathBuf>,
) -> Result<Vec<(String, Arc<FinCategory>)>, CliError> {
    match path {
        None => Ok(default_catalog()),
        Some(p) => {
            let bytes =
                std::fs::read(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
            let entries: Vec<CatalogEntryDoc> = serde_json::from_slice(&bytes)
                .map_err(|e| CliError::Doc(DocError::Parse(e.to_string())))?;
            entries
                .into_iter()
                .map(|e| {
                    let cat = match e.category {
                        CategoryRef::Corpus(name) => corpus_entry(&name)
                            .ok_or(DocError::UnknownCorpus(name))
                            .map_err(CliError::Doc)?,
                        CategoryRef::Inline(doc) => build_category(&doc).map_err(CliError::Doc)?,
                    };
                    Ok((e.name, cat))
                })
                .collect()
        }
    }
}

fn elements_detail(e: &ElementsResult) -> Value {
    let index: Vec<Value> = e
        .objs
        .iter()
        .enumerate()
        .map(|(i, &(a, x))| {
            json!({
                "total": e.total.object_id(i),
                "base": e.zeta.cod().object_id(a),
                "fibre": x,
            })
        })
        .collect();
    json!({
        "category": category_to_doc(&e.total),
        "index": index,
        "zeta_is_fibration": is_grothendieck_fibration(&e.zeta).is_fibration,
    })
}

pub fn run_validate(inputs: &[LoadedInput], opts: &RunOptions) -> Report {
    let refs: Vec<&LoadedInput> = inputs.iter().collect();
    let mut report = Report::new("validate", digests(&refs), opts.config_value(None));
    for i in inputs {
        report.push(
            format!("validate {}", i.name),
            Status::Pass,
            json!({ "kind": i.parsed.kind() }),
            0,
        );
    }
    report.finalize();
    report
}

pub fn run_elements(input: &LoadedInput, opts: &RunOptions, grothendieck_mode: bool) -> Result<Report, CliError> {
    let command = if grothendieck_mode { "grothendieck" } else { "elements" };
    let mut report = Report::new(command, digests(&[input]), opts.config_value(None));
    let (result, ms) = match &input.parsed {
        ParsedDocument::GrpdPresheaf(p) => timed(|| elements(p)),
        ParsedDocument::SetPresheaf(p) => timed(|| elements_set(p)),
        ParsedDocument::CatPresheaf(p) if grothendieck_mode => timed(|| grothendieck(p)),
        ParsedDocument::CatPresheaf(_) => {
            return Err(CliError::Usage(
                "Cat-valued presheaves go through the grothendieck command".into(),
            ))
        }
        _ => return Err(CliError::Usage("input must be a presheaf document".into())),
    };
    report.push(format!("{command} total category"), Status::Pass, elements_detail(&result), ms);
    report.finalize();
    Ok(report)
}

pub fn run_nerve(input: &LoadedInput, opts: &RunOptions) -> Result<Report, CliError> {
    let cat = want_category(input)?;
    let mut report = Report::new("nerve", digests(&[input]), opts.config_value(None));
    let (n, ms) = timed(|| nerve(&cat, opts.dim));
    report.push(
        format!("nerve sizes through dim {}", opts.dim),
        Status::Pass,
        json!({ "sizes": n.sizes() }),
        ms,
    );
    report.finalize();
    Ok(report)
}

pub fn run_homology(input: &LoadedInput, opts: &RunOptions) -> Result<Report, CliError> {
    let cat = want_category(input)?;
    let mut report = Report::new("homology", digests(&[input]), opts.config_value(None));
    let (h, ms) = timed(|| homology(&cat, opts.dim.max(1)));
    report.push("homology", Status::Pass, serde_json::to_value(&h).unwrap(), ms);
    report.finalize();
    Ok(report)
}

pub fn run_pi1(input: &LoadedInput, opts: &RunOptions) -> Result<Report, CliError> {
    let cat = want_category(input)?;
    let mut report = Report::new("pi1", digests(&[input]), opts.config_value(None));
    let (fp, ms) = timed(|| localize(&cat));
    let components: Vec<Value> = (0..fp.n_components())
        .map(|ci| {
            let comp = &fp.components[ci];
            let pres = vertex_group(&fp, ci).expect("component exists");
            json!({
                "base": cat.object_id(comp.base),
                "members": comp.members.iter().map(|&o| cat.object_id(o)).collect::<Vec<_>>(),
                "vertex_group": serde_json::to_value(pres.to_doc()).unwrap(),
            })
        })
        .collect();
    report.push(
        "fundamental groupoid",
        Status::Pass,
        json!({ "components": components }),
        ms,
    );
    report.finalize();
    Ok(report)
}

pub fn run_w1(input: &LoadedInput, opts: &RunOptions) -> Result<Report, CliError> {
    let f = match &input.parsed {
        ParsedDocument::Functor(f) => f.clone(),
        _ => return Err(CliError::Usage("w1 expects a functor document".into())),
    };
    let mut report = Report::new("w1", digests(&[input]), opts.config_value(None));
    let (v, ms) = timed(|| w1_class(&f, opts.limits.coset_budget));
    verdict_result(&mut report, "w1 class", &v, ms);
    report.finalize();
    Ok(report)
}

fn want_diagram(input: &LoadedInput) -> Result<testcat_core::adjoints::CatDiagram, CliError> {
    match &input.parsed {
        ParsedDocument::Diagram(d) => Ok(d.clone()),
        ParsedDocument::Category(c) => Ok(slice_diagram(c)),
        _ => Err(CliError::Usage(
            "expected a diagram document or a category (for its slice diagram)".into(),
        )),
    }
}

pub fn run_istar(inputs: &[LoadedInput], opts: &RunOptions) -> Result<Report, CliError> {
    if inputs.len() != 2 {
        return Err(CliError::Usage("istar needs --input <diagram|category> --input <category>".into()));
    }
    let diagram = want_diagram(&inputs[0])?;
    let c = want_category(&inputs[1])?;
    let refs: Vec<&LoadedInput> = inputs.iter().collect();
    let mut report = Report::new("istar", digests(&refs), opts.config_value(None));
    let mut counter = opts.counter("istar");
    let (r, ms) = timed(|| i_star(&diagram, &c, false, &mut counter));
    match r {
        Ok(istar) => {
            report.push(
                "I*(C)",
                Status::Pass,
                serde_json::to_value(presheaf_to_doc(&istar.presheaf, None)).unwrap(),
                ms,
            );
        }
        Err(e) => report.push("I*(C)", Status::Error, json!({ "error": e.to_string() }), ms),
    }
    report.finalize();
    Ok(report)
}

pub fn run_counit(inputs: &[LoadedInput], opts: &RunOptions) -> Result<Report, CliError> {
    if inputs.len() != 2 {
        return Err(CliError::Usage("counit needs --input <diagram|category> --input <category>".into()));
    }
    let diagram = want_diagram(&inputs[0])?;
    let c = want_category(&inputs[1])?;
    let refs: Vec<&LoadedInput> = inputs.iter().collect();
    let mut report = Report::new("counit", digests(&refs), opts.config_value(None));
    let mut counter = opts.counter("counit");
    let (out, ms) = timed(|| -> Result<Value, AdjointsError> {
        let istar = i_star(&diagram, &c, false, &mut counter)?;
        let (alpha, _) = counit_alpha(&diagram, &c, &istar)?;
        Ok(serde_json::to_value(functor_body_to_doc(&alpha)).unwrap())
    });
    match out {
        Ok(v) => report.push("counit α", Status::Pass, v, ms),
        Err(e) => report.push("counit α", Status::Error, json!({ "error": e.to_string() }), ms),
    }
    report.finalize();
    Ok(report)
}

pub fn run_transpose(inputs: &[LoadedInput], opts: &RunOptions) -> Result<Report, CliError> {
    if inputs.len() != 2 {
        return Err(CliError::Usage("transpose needs --input <presheaf> --input <category>".into()));
    }
    let x = match &inputs[0].parsed {
        ParsedDocument::GrpdPresheaf(p) => p.clone(),
        ParsedDocument::SetPresheaf(p) => p.as_grpd().clone(),
        _ => return Err(CliError::Usage("first input must be a grpd/set presheaf".into())),
    };
    let c = want_category(&inputs[1])?;
    let refs: Vec<&LoadedInput> = inputs.iter().collect();
    let mut report = Report::new("transpose", digests(&refs), opts.config_value(None));
    let base = x.base().clone();
    let mut counter = opts.counter("transpose");
    let (out, ms) = timed(|| adjunction_transpose(&base, &x, &c, &mut counter));
    match out {
        Ok(t) => {
            report.push(
                "hom-set bijection",
                Status::of_bool(t.bijection),
                json!({
                    "cat_homs": t.cat_homs.len(),
                    "psh_homs": t.psh_homs.len(),
                }),
                ms,
            );
            report.push("triangle identity 1", Status::of_bool(t.triangle1), Value::Null, 0);
            report.push("triangle identity 2", Status::of_bool(t.triangle2), Value::Null, 0);
        }
        Err(e) => report.push("transpose", Status::Error, json!({ "error": e.to_string() }), ms),
    }
    report.finalize();
    Ok(report)
}

pub fn run_sieve(input: &LoadedInput, opts: &RunOptions) -> Result<Report, CliError> {
    let interval = match &input.parsed {
        ParsedDocument::Interval(i) => i.clone(),
        _ => return Err(CliError::Usage("sieve expects an interval document".into())),
    };
    let mut report = Report::new("sieve", digests(&[input]), opts.config_value(None));
    let mut counter = opts.counter("sieve");
    let (out, ms) = timed(|| sieve_classifier(&interval, &mut counter));
    match out {
        Ok(s) => {
            report.push(
                "sieve classifier",
                Status::of_bool(s.sieve_ok && s.endpoints_ok),
                json!({
                    "u": functor_body_to_doc(&s.u),
                    "endpoints_ok": s.endpoints_ok,
                }),
                ms,
            );
        }
        Err(e) => {
            report.push("sieve classifier", Status::Error, json!({ "error": e.to_string() }), ms)
        }
    }
    report.finalize();
    Ok(report)
}

pub fn run_check_aspherical(input: &LoadedInput, opts: &RunOptions) -> Result<Report, CliError> {
    let cat = want_category(input)?;
    let mut report = Report::new("check aspherical", digests(&[input]), opts.config_value(None));
    let (v, ms) = timed(|| is_aspherical(&cat, &opts.localizer));
    verdict_result(&mut report, "aspherical", &v, ms);
    report.finalize();
    Ok(report)
}

pub fn run_check_morphism(input: &LoadedInput, opts: &RunOptions) -> Result<Report, CliError> {
    let f = match &input.parsed {
        ParsedDocument::Functor(f) => f.clone(),
        _ => return Err(CliError::Usage("check morphism expects a functor document".into())),
    };
    let mut report = Report::new("check morphism", digests(&[input]), opts.config_value(None));
    let (v, ms) = timed(|| is_aspherical_morphism(&f, &opts.localizer));
    verdict_result(&mut report, "aspherical morphism", &v, ms);
    report.finalize();
    Ok(report)
}

pub fn run_check_hierarchy(input: &LoadedInput, opts: &RunOptions) -> Result<Report, CliError> {
    let cat = want_category(input)?;
    let catalog = load_catalog(opts.catalog_path.as_ref())?;
    let mut report =
        Report::new("check hierarchy", digests(&[input]), opts.config_value(Some(&catalog)));
    let mut counter = opts.counter("hierarchy");
    let (out, ms) = timed(|| check_hierarchy(&cat, &opts.localizer, &catalog, &mut counter));
    match out {
        Ok(h) => {
            verdict_result(&mut report, "aspherical", &h.aspherical, ms);
            verdict_result(&mut report, "totally aspherical", &h.totally_aspherical, 0);
            verdict_result(&mut report, "local test", &h.local_test, 0);
            verdict_result(&mut report, "test", &h.test, 0);
            verdict_result(&mut report, "strict test", &h.strict_test, 0);
            verdict_result(&mut report, "weak test (catalog evidence)", &h.weak_test_evidence, 0);
            report.push(
                "cross-check I*(Δ₁) = i*(Δ₁)",
                Status::of_bool(h.cross_check_istar),
                Value::Null,
                0,
            );
            report.push(
                "implication consistency",
                Status::of_bool(h.consistent),
                Value::Null,
                0,
            );
        }
        Err(e) => report.push("hierarchy", Status::Error, json!({ "error": e.to_string() }), ms),
    }
    report.finalize();
    Ok(report)
}

pub fn run_check_weak_test(input: &LoadedInput, opts: &RunOptions) -> Result<Report, CliError> {
    let cat = want_category(input)?;
    let catalog = load_catalog(opts.catalog_path.as_ref())?;
    let mut report =
        Report::new("check weak-test", digests(&[input]), opts.config_value(Some(&catalog)));
    let mut counter = opts.counter("weak-test");
    let (out, ms) = timed(|| weak_test_evidence(&cat, &catalog, &opts.localizer, &mut counter));
    match out {
        Ok(v) => verdict_result(&mut report, "weak test evidence", &v, ms),
        Err(e) => {
            report.push("weak test evidence", Status::Error, json!({ "error": e.to_string() }), ms)
        }
    }
    report.finalize();
    Ok(report)
}

pub fn run_check_interval(input: &LoadedInput, opts: &RunOptions) -> Result<Report, CliError> {
    let mut report = Report::new("check interval", digests(&[input]), opts.config_value(None));
    match &input.parsed {
        ParsedDocument::Interval(interval) => {
            let ((ok, witness), ms) = timed(|| is_strongly_separating(interval));
            report.push(
                "strongly separating",
                Status::of_bool(ok),
                json!({ "witness": witness.map(|w| format!("base object #{}, iso #{}", w.base_object, w.fibre_iso)) }),
                ms,
            );
        }
        ParsedDocument::Category(cat) => {
            // canonical interval I_A*(Δ₁) with its multiplicative structure
            let mut counter = opts.counter("check interval");
            let (out, ms) = timed(|| canonical_multiplicative_interval(cat, &mut counter));
            match out {
                Ok((mult, _)) => {
                    let (ok, witness) = is_strongly_separating(&mult.interval);
                    report.push(
                        "strongly separating (I_A*(Δ₁))",
                        Status::of_bool(ok),
                        json!({ "witness": witness.map(|w| format!("base object #{}", w.base_object)) }),
                        ms,
                    );
                    let m = verify_multiplicative(&mult);
                    report.push(
                        "multiplicative (left unit, left absorbing)",
                        Status::of_bool(m.ok()),
                        json!({ "failure": m.failure }),
                        0,
                    );
                }
                Err(e) => report.push(
                    "canonical interval",
                    Status::Error,
                    json!({ "error": e.to_string() }),
                    ms,
                ),
            }
        }
        _ => {
            return Err(CliError::Usage(
                "check interval expects an interval or category document".into(),
            ))
        }
    }
    report.finalize();
    Ok(report)
}

pub fn run_check_iso_suite(input: &LoadedInput, opts: &RunOptions) -> Result<Report, CliError> {
    let cat = want_category(input)?;
    let mut report = Report::new("check iso-suite", digests(&[input]), opts.config_value(None));
    let presheaves = generated_presheaves(&cat);
    for (pname, x) in &presheaves {
        for a in 0..cat.n_objects() {
            let mut counter = opts.counter("iso-suite");
            let psi = testcat_core::presheaf::bang(x);
            let (out, ms) =
                timed(|| canonical_iso_suite(&cat, x, a, Some(&psi), &mut counter));
            let name = format!("iso suite X={pname} a={}", cat.object_id(a));
            match out {
                Ok(r) => {
                    report.push(name, Status::of_bool(r.natural == Some(true)), Value::Null, ms)
                }
                Err(e) => report.push(name, Status::Error, json!({ "error": e.to_string() }), ms),
            }
        }
    }
    report.finalize();
    Ok(report)
}

/// Deterministic small family of presheaves over a base, used by the sweep
/// commands: the terminal presheaf, the representable at the first object,
/// and the constant presheaf at BG(2).
pub fn generated_presheaves(
    cat: &Arc<FinCategory>,
) -> Vec<(String, testcat_core::GrpdPresheaf)> {
    let bg2 = FinGroupoid::new(testcat_core::fincat::cyclic_group(2)).expect("BG(2)");
    let mut out = vec![
        ("terminal".to_string(), terminal_presheaf(cat)),
        (
            "constant_bg2".to_string(),
            testcat_core::presheaf::constant_presheaf(cat, &bg2),
        ),
    ];
    if cat.n_objects() > 0 {
        let min = (0..cat.n_objects())
            .min_by(|&a, &b| cat.object_id(a).cmp(cat.object_id(b)))
            .unwrap();
        out.insert(
            1,
            (
                format!("representable_{}", cat.object_id(min)),
                embed_discrete(&representable(cat, min)),
            ),
        );
    }
    out
}

pub fn run_check_thomason(input: &LoadedInput, opts: &RunOptions) -> Result<Report, CliError> {
    let phi = match &input.parsed {
        ParsedDocument::CatPresheafMorphism(m) => m.clone(),
        _ => {
            return Err(CliError::Usage(
                "check thomason expects a Cat-valued presheaf morphism document".into(),
            ))
        }
    };
    let mut report = Report::new("check thomason", digests(&[input]), opts.config_value(None));
    let (rec, ms) = timed(|| thomason_check(&phi, &opts.localizer));
    for (name, v) in &rec.pointwise {
        verdict_result(&mut report, &format!("pointwise@{name}"), v, 0);
    }
    verdict_result(&mut report, "total", &rec.total, ms);
    report.push("pointwise-yes implies total-not-no", Status::of_bool(rec.consistent), Value::Null, 0);
    report.finalize();
    Ok(report)
}

pub fn run_corpus_list(opts: &RunOptions) -> Report {
    let mut report = Report::new("corpus", vec![], opts.config_value(None));
    for (name, cat) in corpus() {
        report.push(
            name.clone(),
            Status::Pass,
            json!({ "objects": cat.n_objects(), "morphisms": cat.n_morphisms() }),
            0,
        );
    }
    report.finalize();
    report
}

pub fn run_corpus_export(dir: &PathBuf, opts: &RunOptions) -> Result<Report, CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::Io(e.to_string()))?;
    let mut report = Report::new("corpus export", vec![], opts.config_value(None));
    for (name, cat) in corpus() {
        let path = dir.join(format!("{name}.json"));
        let text = document_to_string(&Document::Category(category_to_doc(&cat)));
        std::fs::write(&path, text).map_err(|e| CliError::Io(e.to_string()))?;
        report.push(format!("wrote {}", path.display()), Status::Pass, Value::Null, 0);
    }
    report.finalize();
    Ok(report)
}

/// Run the exact-equality check that the direct counit construction matches
/// the counit recovered through the adjunction bijection.
pub fn run_counit_crosscheck(
    inputs: &[LoadedInput],
    opts: &RunOptions,
) -> Result<Report, CliError> {
    if inputs.len() != 2 {
        return Err(CliError::Usage(
            "counit-crosscheck needs --input <category A> --input <category C>".into(),
        ));
    }
    let a_cat = want_category(&inputs[0])?;
    let c = want_category(&inputs[1])?;
    let refs: Vec<&LoadedInput> = inputs.iter().collect();
    let mut report =
        Report::new("counit-crosscheck", digests(&refs), opts.config_value(None));
    let mut counter = opts.counter("counit crosscheck");
    let (out, ms) = timed(|| -> Result<bool, AdjointsError> {
        let diagram = slice_diagram(&a_cat);
        let istar = i_star(&diagram, &c, false, &mut counter)?;
        let (alpha, _) = counit_alpha(&diagram, &c, &istar)?;
        let via = transposed_counit(&a_cat, &c, &mut counter)?;
        Ok(alpha.omap() == via.omap() && alpha.mmap() == via.mmap())
    });
    match out {
        Ok(eq) => report.push("α equals transposed counit", Status::of_bool(eq), Value::Null, ms),
        Err(e) => report.push(
            "α equals transposed counit",
            Status::Error,
            json!({ "error": e.to_string() }),
            ms,
        ),
    }
    report.finalize();
    Ok(report)
}

