use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tower_bench::{commutator_of_length, n4, relator_product};
use tower_core::catalog;
use tower_core::whitehead::{minimize, standard_basis};
use tower_core::word::is_genus_one_commutator;
use tower_core::{GroupModel, Word};

fn dehn(c: &mut Criterion) {
    let model = GroupModel::from_presentation(&n4()).unwrap();
    let mut group = c.benchmark_group("dehn");
    for depth in [2, 8, 32] {
        let w = relator_product(depth);
        group.bench_with_input(BenchmarkId::from_parameter(w.len()), &w, |b, w| {
            b.iter(|| black_box(model.is_trivial(w).unwrap()))
        });
    }
    group.finish();
}

fn wicks(c: &mut Criterion) {
    let mut group = c.benchmark_group("wicks");
    for n in [2, 8, 32] {
        let w = commutator_of_length(n);
        group.bench_with_input(BenchmarkId::from_parameter(w.len()), &w, |b, w| {
            b.iter(|| black_box(is_genus_one_commutator(w)))
        });
    }
    group.finish();
}

fn whitehead(c: &mut Criterion) {
    let basis = standard_basis(3);
    let w = Word::parse("x1 x2 x1 x2 x3 x1^-1 x2 x2 x3 x3 x1 x2^-1 x3").unwrap();
    c.bench_function("whitehead minimize rank 3", |b| b.iter(|| black_box(minimize(std::slice::from_ref(&w), &basis))));
}

fn catalog_all(c: &mut Criterion) {
    let mut group = c.benchmark_group("catalog");
    group.sample_size(10);
    group.bench_function("run_all", |b| b.iter(|| black_box(catalog::run_all().all_passed())));
    group.finish();
}

criterion_group!(benches, dehn, wicks, whitehead, catalog_all);
criterion_main!(benches);
