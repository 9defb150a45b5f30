use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use megs_core::{
    class_concurrence, enumerate_megs, full_report, kron, states, ClassLabel, ComplexMatrix, Config,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn catalog(c: &mut Criterion) {
    let cfg = Config::default();
    let mut group = c.benchmark_group("enumerate_megs");
    for m in [4, 10, 16, 20] {
        group.bench_with_input(BenchmarkId::from_parameter(m), &m, |b, &m| {
            b.iter(|| enumerate_megs(black_box(m), &cfg).unwrap())
        });
    }
    group.finish();
}

fn reports(c: &mut Criterion) {
    let cfg = Config::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let cases = [
        ("ghz4", states::ghz(4).unwrap()),
        ("w5", states::w(5).unwrap()),
        ("random_3x3x3", states::random(&[3, 3, 3], &mut rng).unwrap()),
        ("random_2^6", states::random(&[2; 6], &mut rng).unwrap()),
    ];
    let mut group = c.benchmark_group("full_report");
    group.sample_size(20);
    for (name, state) in &cases {
        group.bench_function(*name, |b| b.iter(|| full_report(black_box(state), &cfg).unwrap()));
    }
    group.finish();

    let state = states::random(&[3, 3], &mut rng).unwrap();
    let label = ClassLabel::epr(0, 1).unwrap();
    c.bench_function("class_concurrence/epr_3x3", |b| {
        b.iter(|| class_concurrence(black_box(&state), label, &cfg).unwrap())
    });
}

fn kronecker(c: &mut Criterion) {
    let a = ComplexMatrix::identity(16);
    let b = ComplexMatrix::from_real_rows(&[[0.0, 1.0], [1.0, 0.0]]);
    c.bench_function("kron/16x2", |bch| bch.iter(|| kron(black_box(&a), black_box(&b), 4096).unwrap()));
}

criterion_group!(benches, catalog, reports, kronecker);
criterion_main!(benches);
