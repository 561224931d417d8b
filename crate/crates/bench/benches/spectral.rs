//! Permutation-indexed matrices, eigensolves, and exact root certification.

use criterion::{criterion_group, criterion_main, Criterion};
use muperm_bench::definite;
use muperm_core::algebra::rational::rat;
use muperm_core::algebra::roots::{is_strictly_positive_on, Bound};
use muperm_core::schur::{averaging_identity, gamma_mu_float, jacobi_eigensystem, pi_mu};
use muperm_core::{check_gamma_psd, epsilon_threshold, mu_permanent_naive};
use std::hint::black_box;

fn bench_hadamard(c: &mut Criterion) {
    let a = definite(4);
    c.bench_function("hadamard-product/4", |b| {
        b.iter(|| pi_mu(black_box(&a)).unwrap())
    });
    c.bench_function("averaging-identity/4", |b| {
        b.iter(|| averaging_identity(black_box(&a)).unwrap())
    });
}

fn bench_eigensolve(c: &mut Criterion) {
    let gamma = gamma_mu_float(4, 0.5).unwrap();
    c.bench_function("jacobi-kernel/24x24", |b| {
        b.iter(|| jacobi_eigensystem(black_box(&gamma)))
    });
    c.bench_function("kernel-psd-grid/4", |b| {
        let grid: Vec<f64> = (0..21).map(|k| -1.0 + k as f64 * 0.1).collect();
        b.iter(|| check_gamma_psd(4, black_box(&grid)).unwrap())
    });
}

fn bench_certification(c: &mut Criterion) {
    let a = definite(5);
    let d = mu_permanent_naive(&a).unwrap().derivative();
    let (lo, hi) = (Bound::Finite(rat(-1, 1)), Bound::Finite(rat(1, 1)));
    c.bench_function("root-certify-derivative/5", |b| {
        b.iter(|| is_strictly_positive_on(black_box(&d), &lo, &hi).unwrap())
    });
    c.bench_function("threshold-isolation/5", |b| {
        b.iter(|| epsilon_threshold(black_box(&a)).unwrap())
    });
}

criterion_group!(benches, bench_hadamard, bench_eigensolve, bench_certification);
criterion_main!(benches);
