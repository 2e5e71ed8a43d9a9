//! Acceptance suite: one pass/fail line per criterion (run with
//! `cargo test -p testcat-cli --test acceptance -- --nocapture` to see them).
//! Every tolerance is exact; the suites are deterministic (fixed seeds).

use std::sync::Arc;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use testcat_cli::run::generated_presheaves;
use testcat_core::adjoints::{
    adjunction_transpose, counit_alpha, i_star, sieve_classifier, slice_diagram,
    transposed_counit,
};
use testcat_core::corpus::corpus;
use testcat_core::elements::{
    base_change_square, elements, grothendieck, iterated_elements_check,
};
use testcat_core::fincat::{
    cyclic_group, delta, is_grothendieck_fibration, product, terminal, FinCategory, FinFunctor,
};
use testcat_core::grpd::{w1_class, Answer};
use testcat_core::homology::{homology, smith_normal_form, thomason_check, IntMatrix, LocalizerSpec};
use testcat_core::limits::Counter;
use testcat_core::presheaf::{
    bang, constant_presheaf, representable, terminal_presheaf, CatPresheaf, CatPresheafMorphism,
    GrpdPresheaf, Interval, SetPresheaf,
};
use testcat_core::testcat::{
    canonical_iso_suite, canonical_multiplicative_interval, check_hierarchy,
    is_strongly_separating, verify_multiplicative, weak_test_evidence,
};
use testcat_core::FinGroupoid;

const BUDGET: u64 = 100_000;

fn counter() -> Counter {
    Counter::new(50_000_000, "acceptance")
}

fn w1() -> LocalizerSpec {
    LocalizerSpec::W1 { budget: BUDGET }
}

fn criterion(n: usize, name: &str, f: impl FnOnce() -> Result<(), String>) {
    match f() {
        Ok(()) => println!("criterion {n} ({name}): PASS"),
        Err(e) => {
            println!("criterion {n} ({name}): FAIL - {e}");
            panic!("criterion {n} ({name}) failed: {e}");
        }
    }
}

fn bang_to_terminal(a: &Arc<FinCategory>) -> FinFunctor {
    let e = terminal();
    FinFunctor::new(
        a.clone(),
        e.clone(),
        vec![0; a.n_objects()],
        vec![0; a.n_morphisms()],
    )
    .expect("unique functor to the terminal category")
}

fn point_at_min(a: &Arc<FinCategory>) -> FinFunctor {
    let e = terminal();
    let min = (0..a.n_objects())
        .min_by(|&x, &y| a.object_id(x).cmp(a.object_id(y)))
        .expect("nonempty");
    FinFunctor::new(e, a.clone(), vec![min], vec![a.identity_of(min)]).expect("point functor")
}

#[test]
fn criterion_1_isomorphism_lemma_suite() {
    criterion(1, "isomorphism-lemma suite", || {
        // canonical three-way isomorphism over every corpus base, presheaf
        // and object, with naturality against the map to the terminal
        for (name, a_cat) in corpus() {
            for (pname, x) in generated_presheaves(&a_cat) {
                let psi = bang(&x);
                for a in 0..a_cat.n_objects() {
                    let r = canonical_iso_suite(&a_cat, &x, a, Some(&psi), &mut counter())
                        .map_err(|e| format!("iso suite {name}/{pname}/{a}: {e}"))?;
                    if r.natural != Some(true) {
                        return Err(format!("naturality fails at {name}/{pname}/{a}"));
                    }
                }
            }
        }
        // θ for every corpus slice diagram and C in {e, Δ₁, Δ₂}, all c
        let targets = [terminal(), delta(1), delta(2)];
        for (name, a_cat) in corpus() {
            let diagram = slice_diagram(&a_cat);
            for c_cat in &targets {
                for c in 0..c_cat.n_objects() {
                    testcat_core::adjoints::theta_slice_iso(&diagram, c_cat, c, &mut counter())
                        .map_err(|e| format!("theta {name}/{}: {e}", c_cat.object_id(c)))?;
                }
            }
        }
        // iterated elements on the product-base corpus entry
        let p = product(&delta(1), &delta(1));
        let top = p.obj_index("(1,1)").unwrap();
        let bottom = p.obj_index("(0,0)").unwrap();
        let presheaves: Vec<(&str, SetPresheaf)> = vec![
            ("terminal", SetPresheaf::new(terminal_presheaf(&p)).unwrap()),
            ("rep_top", representable(&p, top)),
            ("rep_bottom", representable(&p, bottom)),
        ];
        for (pname, x) in presheaves {
            iterated_elements_check(&x).map_err(|e| format!("iterated {pname}: {e}"))?;
        }
        Ok(())
    });
}

#[test]
fn criterion_2_adjunction_suite() {
    criterion(2, "adjunction suite", || {
        let bases = [terminal(), delta(1)];
        let targets = [terminal(), delta(1)];
        for a_cat in &bases {
            let mut presheaves: Vec<(String, GrpdPresheaf)> =
                vec![("terminal".into(), terminal_presheaf(a_cat))];
            for a in 0..a_cat.n_objects() {
                presheaves.push((
                    format!("rep_{}", a_cat.object_id(a)),
                    representable(a_cat, a).into_grpd(),
                ));
            }
            for c_cat in &targets {
                for (pname, x) in &presheaves {
                    let t = adjunction_transpose(a_cat, x, c_cat, &mut counter())
                        .map_err(|e| format!("transpose {pname}: {e}"))?;
                    if !t.bijection {
                        return Err(format!(
                            "bijection fails for X={pname}, |cat|={}, |psh|={}",
                            t.cat_homs.len(),
                            t.psh_homs.len()
                        ));
                    }
                    if !t.triangle1 || !t.triangle2 {
                        return Err(format!(
                            "triangles fail for X={pname}: ({}, {})",
                            t.triangle1, t.triangle2
                        ));
                    }
                }
                // counit table equals the transposed counit, exactly
                let diagram = slice_diagram(a_cat);
                let istar = i_star(&diagram, c_cat, false, &mut counter())
                    .map_err(|e| e.to_string())?;
                let (alpha, _) =
                    counit_alpha(&diagram, c_cat, &istar).map_err(|e| e.to_string())?;
                let via = transposed_counit(a_cat, c_cat, &mut counter())
                    .map_err(|e| e.to_string())?;
                if alpha.omap() != via.omap() || alpha.mmap() != via.mmap() {
                    return Err("direct counit differs from transposed counit".into());
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_3_fibration_and_pullback_suite() {
    criterion(3, "fibration and pullback suite", || {
        for (name, a_cat) in corpus() {
            for (pname, x) in generated_presheaves(&a_cat) {
                let e = elements(&x);
                if !is_grothendieck_fibration(&e.zeta).is_fibration {
                    return Err(format!("ζ not a fibration for {name}/{pname}"));
                }
                // base changes along the identity and along a point
                for u in [FinFunctor::identity(a_cat.clone()), point_at_min(&a_cat)] {
                    let r = base_change_square(&u, &x);
                    if !r.pullback {
                        return Err(format!("pullback fails for {name}/{pname}"));
                    }
                    if !is_grothendieck_fibration(&r.restricted.zeta).is_fibration {
                        return Err(format!("restricted ζ not a fibration for {name}/{pname}"));
                    }
                }
            }
            // presheaves over e pulled back along the unique functor to e
            let e_cat = terminal();
            let bg2 = FinGroupoid::new(cyclic_group(2)).unwrap();
            for (pname, x) in [
                ("terminal", terminal_presheaf(&e_cat)),
                ("const_bg2", constant_presheaf(&e_cat, &bg2)),
                ("rep_pt", representable(&e_cat, 0).into_grpd()),
            ] {
                let r = base_change_square(&bang_to_terminal(&a_cat), &x);
                if !r.pullback {
                    return Err(format!("pullback over e fails for {name}/{pname}"));
                }
            }
            // Grothendieck construction of a constant Cat-valued presheaf
            let c = delta(1);
            let values = vec![c.clone(); a_cat.n_objects()];
            let actions = (0..a_cat.n_morphisms())
                .map(|_| FinFunctor::identity(c.clone()))
                .collect();
            let xp = CatPresheaf::new(a_cat.clone(), values, actions).unwrap();
            let g = grothendieck(&xp);
            if !is_grothendieck_fibration(&g.zeta).is_fibration {
                return Err(format!("grothendieck ζ not a fibration over {name}"));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_4_interval_suite() {
    criterion(4, "interval suite", || {
        // the Δ₁ operation table a+b-ab, exactly
        let m = testcat_core::testcat::delta1_multiplicative();
        match (&m.op, &m.interval) {
            (testcat_core::presheaf::IntervalOp::Cat(op), Interval::Cat { .. }) => {
                let ps = op.dom().product_structure().unwrap().clone();
                let expect = [((0, 0), 0), ((0, 1), 1), ((1, 0), 1), ((1, 1), 1)];
                for ((x, y), want) in expect {
                    if op.on_obj(ps.obj_of_pair(x, y)) != want {
                        return Err(format!("Δ₁ table wrong at ({x},{y})"));
                    }
                }
            }
            _ => return Err("unexpected interval shape".into()),
        }
        if !verify_multiplicative(&m).ok() {
            return Err("Δ₁ multiplicative laws fail".into());
        }
        for (name, a_cat) in corpus() {
            let (mult, _) = canonical_multiplicative_interval(&a_cat, &mut counter())
                .map_err(|e| format!("{name}: {e}"))?;
            let r = verify_multiplicative(&mult);
            if !r.ok() {
                return Err(format!("I*(Δ₁) multiplicative fails on {name}: {:?}", r.failure));
            }
            let (sep, witness) = is_strongly_separating(&mult.interval);
            if !sep {
                return Err(format!("I*(Δ₁) not strongly separating on {name}: {witness:?}"));
            }
            let s = sieve_classifier(&mult.interval, &mut counter())
                .map_err(|e| format!("sieve on {name}: {e}"))?;
            if !s.sieve_ok || !s.endpoints_ok {
                return Err(format!("sieve classifier unverified on {name}"));
            }
        }
        // a strongly separating interval that is not of the I*(Δ₁) shape
        let e_cat = terminal();
        let two = FinGroupoid::discrete(vec!["x".into(), "y".into()]);
        let interval =
            Interval::in_presheaves(constant_presheaf(&e_cat, &two), vec![0], vec![1]).unwrap();
        let s = sieve_classifier(&interval, &mut counter()).map_err(|e| e.to_string())?;
        if !s.sieve_ok || !s.endpoints_ok {
            return Err("sieve classifier fails on the discrete two-point interval".into());
        }
        Ok(())
    });
}

#[test]
fn criterion_5_homology() {
    criterion(5, "homology and Smith normal form", || {
        // Δₙ has the homology of a point for n ≤ 3
        for n in 0..=3 {
            let h = homology(&delta(n), 3);
            if h.degree(0).betti != 1 || !h.degree(0).torsion.is_empty() {
                return Err(format!("H₀(Δ{n}) wrong"));
            }
            for k in 1..=3 {
                if h.degree(k).betti != 0 || !h.degree(k).torsion.is_empty() {
                    return Err(format!("H{k}(Δ{n}) nonzero"));
                }
            }
        }
        // BG(2): boundary alternation 0, ×2 gives (Z, Z/2, 0, Z/2)
        let h = homology(&cyclic_group(2), 3);
        let want: [(usize, &[&str]); 4] = [(1, &[]), (0, &["2"]), (0, &[]), (0, &["2"])];
        for (k, (betti, torsion)) in want.into_iter().enumerate() {
            let d = h.degree(k);
            let torsion: Vec<String> = torsion.iter().map(|s| s.to_string()).collect();
            if d.betti != betti || d.torsion != torsion {
                return Err(format!("H{k}(BG2) = ({}, {:?})", d.betti, d.torsion));
            }
        }
        // 1000 random integer matrices up to 8×8 with entries in [-9, 9]
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_5EED);
        for trial in 0..1000 {
            let rows = rng.gen_range(1..=8);
            let cols = rng.gen_range(1..=8);
            let data: Vec<Vec<i64>> = (0..rows)
                .map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect())
                .collect();
            let m = IntMatrix::from_rows(&data);
            let s = smith_normal_form(&m);
            if !s.verify(&m) {
                return Err(format!("SNF verification fails on trial {trial}"));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_6_w1_verdicts() {
    criterion(6, "W₁ verdicts and 2-out-of-3", || {
        let cases = [
            ("delta1", Answer::Yes),
            ("bg2", Answer::No),
            ("idem2", Answer::Yes),
            ("j", Answer::Yes),
        ];
        for (name, want) in cases {
            let a_cat = testcat_core::corpus::corpus_entry(name).unwrap();
            let v = w1_class(&bang_to_terminal(&a_cat), BUDGET);
            if v.answer != want {
                return Err(format!("w1({name} -> e) = {:?}, want {want:?}", v.answer));
            }
        }
        // 2-out-of-3 across all composable pairs of the generated family
        let mut family: Vec<(String, FinFunctor)> = Vec::new();
        for (name, a_cat) in corpus() {
            family.push((format!("id_{name}"), FinFunctor::identity(a_cat.clone())));
            family.push((format!("bang_{name}"), bang_to_terminal(&a_cat)));
            family.push((format!("pt_{name}"), point_at_min(&a_cat)));
        }
        let verdicts: Vec<Answer> =
            family.iter().map(|(_, f)| w1_class(f, BUDGET).answer).collect();
        for (i, (ni, u)) in family.iter().enumerate() {
            for (j, (nj, v)) in family.iter().enumerate() {
                if !u.cod().same_table(v.dom()) {
                    continue;
                }
                let vu = FinFunctor::compose(v, u).expect("composable");
                let w = w1_class(&vu, BUDGET).answer;
                let trio = [verdicts[i], verdicts[j], w];
                let yes = trio.iter().filter(|&&a| a == Answer::Yes).count();
                if yes >= 2 && trio.contains(&Answer::No) {
                    return Err(format!("2-out-of-3 fails on ({ni}, {nj}): {trio:?}"));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_7_terminal_category_example() {
    criterion(7, "terminal-category example at W₁", || {
        let e_cat = terminal();
        let r = check_hierarchy(
            &e_cat,
            &w1(),
            &testcat_core::testcat::default_catalog(),
            &mut counter(),
        )
        .map_err(|e| e.to_string())?;
        if r.aspherical.answer != Answer::Yes {
            return Err("e must be W₁-aspherical".into());
        }
        if r.local_test.answer != Answer::No {
            return Err("e must fail local test at W₁".into());
        }
        let catalog = vec![("e".to_string(), terminal()), ("delta1".to_string(), delta(1))];
        let v = weak_test_evidence(&e_cat, &catalog, &w1(), &mut counter())
            .map_err(|e| e.to_string())?;
        if v.answer != Answer::No {
            return Err("weak-test evidence against {e, Δ₁} must be No".into());
        }
        // structural equality I*(Δ₁) = i*(Δ₁) over every corpus base
        let d1 = delta(1);
        for (name, a_cat) in corpus() {
            let diagram = slice_diagram(&a_cat);
            let grpd = i_star(&diagram, &d1, false, &mut counter()).map_err(|e| e.to_string())?;
            let set = i_star(&diagram, &d1, true, &mut counter()).map_err(|e| e.to_string())?;
            if !grpd.presheaf.same_structure(&set.presheaf) {
                return Err(format!("I*(Δ₁) differs from i*(Δ₁) over {name}"));
            }
        }
        Ok(())
    });
}

fn constant_cat_presheaf(base: &Arc<FinCategory>, c: &Arc<FinCategory>) -> CatPresheaf {
    let values = vec![c.clone(); base.n_objects()];
    let actions = (0..base.n_morphisms()).map(|_| FinFunctor::identity(c.clone())).collect();
    CatPresheaf::new(base.clone(), values, actions).expect("constant presheaf")
}

#[test]
fn criterion_8_thomason_consistency() {
    criterion(8, "pointwise-to-total localizer consistency", || {
        let loc = w1();
        let bases: Vec<Arc<FinCategory>> = corpus().into_iter().map(|(_, c)| c).collect();
        let cs = [
            terminal(),
            delta(1),
            delta(2),
            cyclic_group(2),
            testcat_core::fincat::free_iso(),
            testcat_core::corpus::corpus_entry("disc2").unwrap(),
        ];
        let ts = [
            terminal(),
            delta(1),
            delta(2),
            testcat_core::fincat::free_iso(),
            testcat_core::corpus::corpus_entry("idem2").unwrap(),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(0xC8C8_0808);
        for trial in 0..200 {
            let (phi, label) = if trial % 5 == 4 {
                // non-constant source: (representable at min) × const J -> representable
                let base = bases[rng.gen_range(0..bases.len())].clone();
                let min = (0..base.n_objects())
                    .min_by(|&x, &y| base.object_id(x).cmp(base.object_id(y)))
                    .unwrap();
                let y = representable(&base, min).into_grpd();
                let j = FinGroupoid::new(testcat_core::fincat::free_iso()).unwrap();
                let t = constant_presheaf(&base, &j);
                let x = testcat_core::presheaf::product_presheaf(&y, &t);
                let (proj, _) = testcat_core::presheaf::product_projections(&x, &y, &t);
                let components: Vec<FinFunctor> =
                    (0..base.n_objects()).map(|a| proj.component(a).clone()).collect();
                (
                    CatPresheafMorphism::new(x.to_cat(), y.to_cat(), components).unwrap(),
                    format!("rep×J projection (trial {trial})"),
                )
            } else if trial % 4 == 3 {
                // a genuine equivalence over the point base
                let e_cat = terminal();
                let funcs: Vec<(FinFunctor, &str)> = vec![
                    (FinFunctor::identity(cyclic_group(2)), "id_bg2"),
                    (point_at_min(&testcat_core::fincat::free_iso()), "pt_into_j"),
                    (
                        FinFunctor::new(
                            cyclic_group(3),
                            cyclic_group(3),
                            vec![0],
                            vec![0, 2, 1],
                        )
                        .unwrap(),
                        "inversion_bg3",
                    ),
                ];
                let (f, label) = &funcs[rng.gen_range(0..funcs.len())];
                let src = constant_cat_presheaf(&e_cat, f.dom());
                let tgt = constant_cat_presheaf(&e_cat, f.cod());
                (
                    CatPresheafMorphism::new(src, tgt, vec![f.clone()]).unwrap(),
                    label.to_string(),
                )
            } else {
                // projection C×T -> C, constant over a random corpus base
                let base = bases[rng.gen_range(0..bases.len())].clone();
                let c = cs[rng.gen_range(0..cs.len())].clone();
                let t = ts[rng.gen_range(0..ts.len())].clone();
                let p = product(&c, &t);
                let ps = p.product_structure().unwrap().clone();
                let omap: Vec<usize> = ps.obj_pairs.iter().map(|&(l, _)| l).collect();
                let mmap: Vec<usize> = ps.mor_pairs.iter().map(|&(l, _)| l).collect();
                let proj = FinFunctor::new(p.clone(), c.clone(), omap, mmap).unwrap();
                let src = constant_cat_presheaf(&base, &p);
                let tgt = constant_cat_presheaf(&base, &c);
                let comps = vec![proj; base.n_objects()];
                (
                    CatPresheafMorphism::new(src, tgt, comps).unwrap(),
                    format!("proj over base (trial {trial})"),
                )
            };
            let rec = thomason_check(&phi, &loc);
            let all_yes = rec.pointwise.iter().all(|(_, v)| v.answer == Answer::Yes);
            if !all_yes {
                return Err(format!("trial {trial} ({label}): pointwise not decided Yes"));
            }
            if !rec.consistent || rec.total.answer == Answer::No {
                return Err(format!(
                    "trial {trial} ({label}): pointwise Yes but total {:?}",
                    rec.total.answer
                ));
            }
        }
        Ok(())
    });
}

fn strip_timings(v: &mut serde_json::Value) {
    match v {
        serde_json::Value::Object(map) => {
            map.remove("timing_ms");
            for (_, val) in map.iter_mut() {
                strip_timings(val);
            }
        }
        serde_json::Value::Array(arr) => {
            for val in arr.iter_mut() {
                strip_timings(val);
            }
        }
        _ => {}
    }
}

#[test]
fn criterion_9_determinism() {
    criterion(9, "byte-identical reports modulo timings", || {
        use testcat_cli::run::{load_input, run_check_hierarchy, run_homology, run_w1, RunOptions};
        let opts = || RunOptions {
            localizer: w1(),
            limits: testcat_core::Limits::default(),
            catalog_path: None,
            dim: 3,
        };
        let run_all = || -> Result<String, String> {
            let mut blobs = Vec::new();
            for (name, _) in corpus() {
                let input = load_input(&format!("corpus:{name}")).map_err(|e| e.to_string())?;
                let r = run_check_hierarchy(&input, &opts()).map_err(|e| e.to_string())?;
                let mut v: serde_json::Value =
                    serde_json::from_str(&r.to_json()).map_err(|e| e.to_string())?;
                strip_timings(&mut v);
                blobs.push(serde_json::to_string(&v).unwrap());
                let h = run_homology(&input, &opts()).map_err(|e| e.to_string())?;
                let mut v: serde_json::Value =
                    serde_json::from_str(&h.to_json()).map_err(|e| e.to_string())?;
                strip_timings(&mut v);
                blobs.push(serde_json::to_string(&v).unwrap());
            }
            // a functor check through the same pipeline
            let tmp = tempfile::NamedTempFile::new().map_err(|e| e.to_string())?;
            std::fs::write(
                tmp.path(),
                r#"{"kind":"functor","body":{"dom":"delta1","cod":"e",
                    "omap":{"0":"pt","1":"pt"},"mmap":{"d0_1":"id_pt"}}}"#,
            )
            .map_err(|e| e.to_string())?;
            let input =
                load_input(tmp.path().to_str().unwrap()).map_err(|e| e.to_string())?;
            let w = run_w1(&input, &opts()).map_err(|e| e.to_string())?;
            let mut v: serde_json::Value =
                serde_json::from_str(&w.to_json()).map_err(|e| e.to_string())?;
            strip_timings(&mut v);
            // the input name is the temp path; normalize it out
            if let Some(arr) = v.get_mut("inputs").and_then(|i| i.as_array_mut()) {
                for item in arr {
                    if let Some(obj) = item.as_object_mut() {
                        obj.insert("name".into(), serde_json::Value::String("<input>".into()));
                    }
                }
            }
            blobs.push(serde_json::to_string(&v).unwrap());
            Ok(blobs.join("\n"))
        };
        let first = run_all()?;
        let second = run_all()?;
        if first != second {
            return Err("reports differ between consecutive runs".into());
        }
        Ok(())
    });
}
