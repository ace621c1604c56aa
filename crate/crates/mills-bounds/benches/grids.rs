//! Parallel vs sequential throughput on the grid-heavy operations.
//!
//! `cargo bench -p mills-bounds` (the `parallel` feature is on by default;
//! the `*_seq` entry points give the single-thread baseline).

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use mills_bounds::analysis;
use mills_bounds::families::{BoundId, Family};
use mills_bounds::grid::GridSpec;
use mills_bounds::oracle;

fn bench_scan_max(c: &mut Criterion) {
    let bound = BoundId::new(Family::ExpStar, 4);
    let mut g = c.benchmark_group("scan_max_10k");
    g.sample_size(10);
    g.bench_function("parallel", |b| {
        b.iter(|| analysis::scan_max(black_box(bound), 0.0).unwrap())
    });
    g.bench_function("sequential", |b| {
        b.iter(|| analysis::scan_max_seq(black_box(bound), 0.0).unwrap())
    });
    g.finish();
}

fn bench_table(c: &mut Criterion) {
    let mut g = c.benchmark_group("reference_table");
    g.sample_size(10);
    g.bench_function("parallel", |b| b.iter(analysis::reproduce_table1));
    g.bench_function("sequential", |b| b.iter(analysis::reproduce_table1_seq));
    g.finish();
}

fn bench_curve(c: &mut Criterion) {
    let bounds: Vec<BoundId> = (0..=9).map(|k| BoundId::new(Family::SqrtStar, k)).collect();
    let spec = GridSpec::log(1e-3, 10.0, 2000).unwrap();
    let mut g = c.benchmark_group("curve_2000x10");
    g.sample_size(10);
    g.bench_function("parallel", |b| {
        b.iter(|| analysis::curve_table(black_box(&bounds), &spec).unwrap())
    });
    g.bench_function("sequential", |b| {
        b.iter(|| analysis::curve_table_seq(black_box(&bounds), &spec).unwrap())
    });
    g.finish();
}

fn bench_oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle");
    g.bench_function("tail_series_x1", |b| {
        b.iter(|| oracle::upper_tail_series(black_box(1.0)))
    });
    g.bench_function("tail_cf_x5", |b| b.iter(|| oracle::upper_tail_cf(black_box(5.0))));
    g.finish();
}

criterion_group!(benches, bench_scan_max, bench_table, bench_curve, bench_oracle);
criterion_main!(benches);
