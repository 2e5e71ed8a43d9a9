//! Benchmarks for the data-parallel fan-out paths. Run with the default
//! features for the rayon-backed numbers and with `--no-default-features`
//! for the sequential fallback:
//!
//!   cargo bench -p testcat-core
//!   cargo bench -p testcat-core --no-default-features

use criterion::{criterion_group, criterion_main, Criterion};

use testcat_core::fincat::{delta, product, terminal, FinFunctor};
use testcat_core::homology::{homology, is_aspherical_morphism, LocalizerSpec};
use testcat_core::limits::Counter;
use testcat_core::testcat::{check_hierarchy, is_totally_aspherical};

fn bench_homology_small(c: &mut Criterion) {
    let square = product(&delta(2), &delta(2));
    c.bench_function("homology delta2x2 dim 3", |b| {
        b.iter(|| homology(&square, 3));
    });
}

fn bench_homology_large(c: &mut Criterion) {
    let big = product(&delta(3), &delta(3));
    let mut group = c.benchmark_group("heavy");
    group.sample_size(10);
    group.bench_function("homology delta3x3 dim 2", |b| {
        b.iter(|| homology(&big, 2));
    });
    group.finish();
}

fn bench_aspherical_morphism(c: &mut Criterion) {
    let square = product(&delta(2), &delta(2));
    let loc = LocalizerSpec::WinftyEvidence { dim: 2, pi1_budget: 10_000 };
    let id = FinFunctor::identity(square.clone());
    c.bench_function("aspherical morphism winf on delta2x2 slices", |b| {
        b.iter(|| is_aspherical_morphism(&id, &loc));
    });
}

fn bench_totally_aspherical(c: &mut Criterion) {
    let square = product(&delta(1), &delta(1));
    let loc = LocalizerSpec::w1_default();
    c.bench_function("totally aspherical w1 on delta1x1", |b| {
        b.iter(|| is_totally_aspherical(&square, &loc));
    });
}

fn bench_hierarchy(c: &mut Criterion) {
    let base = delta(1);
    let loc = LocalizerSpec::w1_default();
    let catalog = vec![("e".to_string(), terminal()), ("delta1".to_string(), delta(1))];
    c.bench_function("hierarchy w1 on delta1", |b| {
        b.iter(|| {
            let mut counter = Counter::new(10_000_000, "bench");
            check_hierarchy(&base, &loc, &catalog, &mut counter).unwrap()
        });
    });
}

criterion_group!(
    benches,
    bench_homology_small,
    bench_homology_large,
    bench_aspherical_morphism,
    bench_totally_aspherical,
    bench_hierarchy
);
criterion_main!(benches);
