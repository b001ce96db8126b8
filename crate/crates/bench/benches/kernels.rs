//! Benchmarks for the hot paths: field table construction, generator
//! products, the multiplier scan, and both distance searches.

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use tcw_bench::{family, field};
use tcw_core::bounds::delta_max;
use tcw_core::codes::weight_pair_set;
use tcw_core::distance::{bounded_weight_search, exhaustive_min_distance};
use tcw_core::{CyclicCode, FieldSpec, SearchBudget, WeightPair};

fn bench_field_build(c: &mut Criterion) {
    c.bench_function("field_build_gf3_9", |b| {
        b.iter(|| FieldSpec::new(black_box(3), black_box(9)).unwrap())
    });
}

fn bench_generator(c: &mut Criterion) {
    let f = field(3, 7);
    let pair = WeightPair::new(0, 3).unwrap();
    c.bench_function("generator_m7", |b| {
        b.iter(|| CyclicCode::from_pair(std::sync::Arc::clone(&f), black_box(pair)).unwrap())
    });
}

fn bench_delta_max(c: &mut Criterion) {
    let set = weight_pair_set(WeightPair::new(0, 3).unwrap(), 3, 5).unwrap();
    c.bench_function("delta_max_m5", |b| {
        b.iter(|| delta_max(black_box(&set)).unwrap())
    });
}

fn bench_exhaustive(c: &mut Criterion) {
    let code = family(3, 3, 0, 3);
    let budget = SearchBudget::default();
    let mut group = c.benchmark_group("distance");
    group.sample_size(20);
    group.bench_function("exhaustive_m3", |b| {
        b.iter(|| exhaustive_min_distance(black_box(&code), &budget).unwrap())
    });
    group.finish();
}

fn bench_bounded(c: &mut Criterion) {
    let code = family(5, 3, 2, 3);
    let budget = SearchBudget::default();
    c.bench_function("bounded_w3_q5", |b| {
        b.iter(|| bounded_weight_search(black_box(&code), 3, &budget).unwrap())
    });
}

criterion_group!(
    kernels,
    bench_field_build,
    bench_generator,
    bench_delta_max,
    bench_exhaustive,
    bench_bounded
);
criterion_main!(kernels);
