use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use romdom::enumerate::{
    enumerate_minimal_prdf, enumerate_minimal_rdf, enumerate_urrdf, enumerate_urrdf_split,
};
use romdom::graph::families::{cycle, matching, path, split_family};
use romdom::graph::recognize_split;
use romdom::solvers::{extend_prdf, solve_ur_split};
use romdom::RomanFunction;

fn urrdf(c: &mut Criterion) {
    let mut group = c.benchmark_group("urrdf");
    for t in [4, 6, 8] {
        let g = matching(t);
        group.bench_with_input(BenchmarkId::new("matching", t), &g, |b, g| {
            b.iter(|| enumerate_urrdf(black_box(g)).unwrap().solutions.len())
        });
    }
    for n in [10, 16, 22] {
        let g = path(n);
        group.bench_with_input(BenchmarkId::new("path", n), &g, |b, g| {
            b.iter(|| enumerate_urrdf(black_box(g)).unwrap().solutions.len())
        });
    }
    group.finish();
}

fn urrdf_split(c: &mut Criterion) {
    let mut group = c.benchmark_group("urrdf_split");
    for t in [4, 8, 12] {
        let g = split_family(t);
        let p = recognize_split(&g).unwrap();
        group.bench_with_input(BenchmarkId::new("general", t), &g, |b, g| {
            b.iter(|| enumerate_urrdf(black_box(g)).unwrap().solutions.len())
        });
        group.bench_with_input(BenchmarkId::new("split", t), &g, |b, g| {
            b.iter(|| enumerate_urrdf_split(black_box(g), &p).unwrap().solutions.len())
        });
    }
    group.finish();
}

fn minimal(c: &mut Criterion) {
    let mut group = c.benchmark_group("minimal");
    for n in [8, 12, 16] {
        let g = cycle(n);
        group.bench_with_input(BenchmarkId::new("rdf_cycle", n), &g, |b, g| {
            b.iter(|| enumerate_minimal_rdf(black_box(g)).solutions.len())
        });
        group.bench_with_input(BenchmarkId::new("prdf_cycle", n), &g, |b, g| {
            b.iter(|| enumerate_minimal_prdf(black_box(g)).solutions.len())
        });
    }
    group.finish();
}

fn solvers(c: &mut Criterion) {
    let g = split_family(40);
    let p = recognize_split(&g).unwrap();
    c.bench_function("solve_ur_split/40", |b| {
        b.iter(|| solve_ur_split(black_box(&g), &p).unwrap().optimum)
    });
    let g = path(60);
    let f = RomanFunction::constant(60, 0);
    c.bench_function("extend_prdf/path60", |b| {
        b.iter(|| extend_prdf(black_box(&g), &f).unwrap().is_some())
    });
}

criterion_group!(benches, urrdf, urrdf_split, minimal, solvers);
criterion_main!(benches);
