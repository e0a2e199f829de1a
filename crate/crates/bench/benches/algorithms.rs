use c4clique::harness::{run_suite, Suite, SuiteConfig};
use c4clique::{
    cycle_power, extract_general, extract_regular, extract_triple, find_induced_c4,
    max_clique_exact, naive_find_induced_c4,
};
use c4clique_bench::random_fixtures;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

fn c4_detection(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_induced_c4");
    for (n, g) in random_fixtures(&[16, 64, 256], 1) {
        group.bench_with_input(BenchmarkId::new("pair-scan", n), &g, |b, g| {
            b.iter(|| find_induced_c4(black_box(g)))
        });
    }
    for (n, g) in random_fixtures(&[16, 32], 1) {
        group.bench_with_input(BenchmarkId::new("naive", n), &g, |b, g| {
            b.iter(|| naive_find_induced_c4(black_box(g)))
        });
    }
    group.finish();
}

fn exact_clique(c: &mut Criterion) {
    let mut group = c.benchmark_group("max_clique_exact");
    for (n, g) in random_fixtures(&[16, 32, 48], 2) {
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| max_clique_exact(black_box(g), 48))
        });
    }
    group.finish();
}

fn extractors(c: &mut Criterion) {
    let mut group = c.benchmark_group("extract");
    for (n, g) in random_fixtures(&[32, 128, 512], 3) {
        group.bench_with_input(BenchmarkId::new("general", n), &g, |b, g| {
            b.iter(|| extract_general(black_box(g)))
        });
        group.bench_with_input(BenchmarkId::new("triple", n), &g, |b, g| {
            b.iter(|| extract_triple(black_box(g)))
        });
    }
    for k in [2, 6, 20] {
        let g = cycle_power(k).expect("k >= 1");
        group.bench_with_input(BenchmarkId::new("regular", 4 * k + 1), &g, |b, g| {
            b.iter(|| extract_regular(black_box(g)))
        });
    }
    group.finish();
}

fn suites(c: &mut Criterion) {
    let mut group = c.benchmark_group("run_suite");
    group.sample_size(10);
    for suite in [Suite::BoundsGeneral, Suite::Structure] {
        let config = SuiteConfig::new(suite, 0, 50, 40);
        group.bench_function(suite.name(), |b| b.iter(|| run_suite(black_box(&config))));
    }
    group.finish();
}

criterion_group!(benches, c4_detection, exact_clique, extractors, suites);
criterion_main!(benches);
