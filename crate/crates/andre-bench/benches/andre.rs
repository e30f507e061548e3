use andre_bench::andre1;
use andre_core::bijections::phi;
use andre_core::perm::brute_force;
use andre_core::seidel::twin_seidel;
use andre_core::series::{elementary_series, Elementary};
use andre_core::{generate, Family};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    for n in [8, 10] {
        g.bench_with_input(BenchmarkId::new("generate", n), &n, |b, &n| {
            b.iter(|| generate(Family::Andre1, black_box(n)).len())
        });
    }
    g.bench_function("filter/8", |b| {
        b.iter(|| brute_force(Family::Andre1, black_box(8)).len())
    });
    g.finish();
}

fn twin(c: &mut Criterion) {
    c.bench_function("twin_seidel/15", |b| {
        b.iter(|| twin_seidel(black_box(15)).unwrap())
    });
}

fn phi_all(c: &mut Criterion) {
    let words = andre1(8);
    c.bench_function("phi/and8", |b| {
        b.iter(|| {
            words.iter().for_each(|w| {
                black_box(phi(w).unwrap());
            })
        })
    });
}

fn division(c: &mut Criterion) {
    let mut g = c.benchmark_group("series_div");
    for d in [8u32, 12] {
        let num = elementary_series(Elementary::Sin, [1, 1, 1], 3, d);
        let den = elementary_series(Elementary::Cos, [1, -1, 1], 3, d);
        g.bench_with_input(BenchmarkId::from_parameter(d), &d, |b, _| {
            b.iter(|| num.div(&den).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, enumeration, twin, phi_all, division);
criterion_main!(benches);
