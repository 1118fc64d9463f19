use criterion::{black_box, criterion_group, criterion_main, Criterion};

use umbra::explicit::{self, zero_terms};
use umbra::numerics::precision::with_digits;
use umbra::par;
use umbra::special::zeta;
use umbra::Complex;

fn zeta_row(c: &mut Criterion) {
    let points: Vec<Complex> = (0..32).map(|k| Complex::from_f64(0.5, 10.0 + k as f64)).collect();
    let mut g = c.benchmark_group("zeta-critical-line");
    g.sample_size(10);
    g.bench_function("par::map", |b| {
        b.iter(|| with_digits(30, || par::map(&points, |s| zeta(black_box(s), 0).unwrap())).unwrap())
    });
    g.bench_function("sequential", |b| {
        b.iter(|| with_digits(30, || par::map_sequential(&points, |s| zeta(black_box(s), 0).unwrap())).unwrap())
    });
    g.finish();
}

fn explicit_zero_terms(c: &mut Criterion) {
    let zeros = explicit::reference_zeros();
    let ords = &zeros.ordinates()[..50];
    let mut g = c.benchmark_group("explicit-zero-terms");
    g.sample_size(10);
    g.bench_function("par::map", |b| b.iter(|| zero_terms(black_box(20.0), ords).unwrap()));
    g.finish();
}

criterion_group!(benches, zeta_row, explicit_zero_terms);
criterion_main!(benches);
