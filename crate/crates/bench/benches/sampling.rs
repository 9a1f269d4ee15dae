use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use subfbm_bench::{reference_call, reference_params, unit_grid};
use subfbm_core::stochastic::{sample_stable_increment, simulate_fbm_at_times, simulate_inverse_subordinator};
use subfbm_core::{hedge_step_experiment, RngStream, SubordinatorConfig};

fn stable(c: &mut Criterion) {
    let mut rng = RngStream::new(1, 0).generator();
    c.bench_function("stable_increment", |b| {
        b.iter(|| sample_stable_increment(black_box(0.9), black_box(1e-3), &mut rng).unwrap())
    });
}

fn inverse_subordinator(c: &mut Criterion) {
    let mut group = c.benchmark_group("inverse_subordinator");
    for n in [100, 500] {
        let grid = unit_grid(n);
        let cfg = SubordinatorConfig::for_grid(0.9, &grid).unwrap();
        let stream = RngStream::new(2, 0);
        group.bench_with_input(BenchmarkId::from_parameter(n), &grid, |b, grid| {
            b.iter(|| simulate_inverse_subordinator(&cfg, grid, &stream).unwrap())
        });
    }
    group.finish();
}

fn fbm(c: &mut Criterion) {
    let mut group = c.benchmark_group("fbm_cholesky");
    group.sample_size(10);
    for n in [100, 500] {
        let grid = unit_grid(n);
        let mut rng = RngStream::new(3, 0).generator();
        group.bench_with_input(BenchmarkId::from_parameter(n), &grid, |b, grid| {
            b.iter(|| simulate_fbm_at_times(0.8, grid.times(), &mut rng).unwrap())
        });
    }
    group.finish();
}

fn hedge(c: &mut Criterion) {
    let contract = reference_call();
    let params = reference_params();
    let mut group = c.benchmark_group("hedge_step");
    group.sample_size(10);
    group.bench_function("10000_paths", |b| {
        b.iter(|| hedge_step_experiment(&contract, &params, 10_000, &RngStream::new(4, 0)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, stable, inverse_subordinator, fbm, hedge);
criterion_main!(benches);
