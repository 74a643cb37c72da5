use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use pml_bench::{bivector_pair, gcd_pair, so3, solvable_4d};
use pml_core::structures::casimir_basis;
use pml_core::{poly_gcd, schouten};

fn gcd(c: &mut Criterion) {
    let mut group = c.benchmark_group("gcd");
    for dim in [1usize, 2, 3] {
        let (a, b) = gcd_pair(dim, 3, 42);
        group.bench_with_input(BenchmarkId::from_parameter(dim), &(a, b), |bench, (a, b)| {
            bench.iter(|| poly_gcd(black_box(a), black_box(b)).unwrap())
        });
    }
    group.finish();
}

fn schouten_bracket(c: &mut Criterion) {
    let mut group = c.benchmark_group("schouten");
    for dim in [3usize, 4, 5] {
        let (u, v) = bivector_pair(dim, 7);
        group.bench_with_input(BenchmarkId::from_parameter(dim), &(u, v), |bench, (u, v)| {
            bench.iter(|| schouten(black_box(u), black_box(v)).unwrap())
        });
    }
    group.finish();
}

fn casimirs(c: &mut Criterion) {
    let mut group = c.benchmark_group("casimir_basis");
    let so3 = so3();
    let s4 = solvable_4d();
    for d in [2u32, 4] {
        group.bench_with_input(BenchmarkId::new("so3", d), &d, |bench, &d| {
            bench.iter(|| casimir_basis(black_box(&so3), d).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("solvable-4", d), &d, |bench, &d| {
            bench.iter(|| casimir_basis(black_box(&s4), d).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, gcd, schouten_bracket, casimirs);
criterion_main!(benches);
