use criterion::{criterion_group, criterion_main, Criterion};

use dlv_core::multipoly::{build_coeff_poly, degree_via_coeff};
use dlv_core::qseries::q_double_factorial;
use dlv_core::schubert::{degree_via_schubert, dl_class};

fn bench_degree(c: &mut Criterion) {
    c.bench_function("q_double_factorial d=8", |b| {
        b.iter(|| q_double_factorial(std::hint::black_box(8)))
    });
    c.bench_function("build_coeff_poly d=3", |b| {
        b.iter(|| build_coeff_poly(std::hint::black_box(3)))
    });
    c.bench_function("degree_via_coeff d=3", |b| {
        b.iter(|| degree_via_coeff(std::hint::black_box(3)))
    });
    c.bench_function("dl_class d=3", |b| {
        b.iter(|| dl_class(std::hint::black_box(3)))
    });
    c.bench_function("degree_via_schubert d=4", |b| {
        b.iter(|| degree_via_schubert(std::hint::black_box(4)))
    });
}

criterion_group!(benches, bench_degree);
criterion_main!(benches);
