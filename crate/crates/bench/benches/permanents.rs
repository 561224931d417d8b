//! Polynomial computation: the factorial-time expansion against the
//! structured evaluators it anchors.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use muperm_bench::{banded, dense, star, tree};
use muperm_core::{
    mu_permanent_laplace, mu_permanent_naive, mu_permanent_star, mu_permanent_tree,
    mu_permanent_tridiagonal, Axis,
};
use std::hint::black_box;

fn bench_naive(c: &mut Criterion) {
    let mut group = c.benchmark_group("direct-expansion");
    for n in [6usize, 7, 8] {
        let a = dense(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &a, |b, a| {
            b.iter(|| mu_permanent_naive(black_box(a)).unwrap())
        });
    }
    group.finish();
}

fn bench_laplace(c: &mut Criterion) {
    let a = dense(6);
    c.bench_function("row-expansion/6", |b| {
        b.iter(|| mu_permanent_laplace(black_box(&a), Axis::Row, 0).unwrap())
    });
}

fn bench_structured(c: &mut Criterion) {
    let mut group = c.benchmark_group("structured");
    for n in [16usize, 64] {
        let a = banded(n);
        group.bench_with_input(BenchmarkId::new("band", n), &a, |b, a| {
            b.iter(|| mu_permanent_tridiagonal(black_box(a)).unwrap())
        });
    }
    let a = star(64);
    group.bench_with_input(BenchmarkId::new("star", 64), &a, |b, a| {
        b.iter(|| mu_permanent_star(black_box(a)).unwrap())
    });
    let a = tree(64);
    group.bench_with_input(BenchmarkId::new("tree", 64), &a, |b, a| {
        b.iter(|| mu_permanent_tree(black_box(a)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_naive, bench_laplace, bench_structured);
criterion_main!(benches);
