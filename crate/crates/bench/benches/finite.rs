use criterion::{criterion_group, criterion_main, Criterion};

use dlv_core::hermitian::{count_dl_points, count_isotropic_lines, DEFAULT_BUDGET};

fn bench_finite(c: &mut Criterion) {
    c.bench_function("count_isotropic_lines n=5 q=2", |b| {
        b.iter(|| count_isotropic_lines(std::hint::black_box(5), 2, DEFAULT_BUDGET).unwrap())
    });
    c.bench_function("count_dl_points d=2 q=2", |b| {
        b.iter(|| count_dl_points(std::hint::black_box(2), 2, DEFAULT_BUDGET).unwrap())
    });
}

criterion_group!(benches, bench_finite);
criterion_main!(benches);
