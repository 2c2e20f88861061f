use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use trace_horizon::penner::{curve_system, penner_matrix};
use trace_horizon::poly::power_sums;
use trace_horizon::spectral::house;
use trace_horizon::{find_nu, IntMatrix};
use trace_horizon_bench::{lehmer, random_sl};

fn char_poly(c: &mut Criterion) {
    let mut group = c.benchmark_group("char_poly");
    for m in [8, 16, 32] {
        let a = random_sl(m, 7);
        group.bench_with_input(BenchmarkId::from_parameter(m), &a, |b, a| {
            b.iter(|| black_box(a.char_poly()))
        });
    }
    group.finish();
}

fn traces(c: &mut Criterion) {
    let mut group = c.benchmark_group("traces");
    let a = random_sl(12, 11);
    let q = a.char_poly();
    group.bench_function("power_sums_200", |b| {
        b.iter(|| black_box(power_sums(&q, 200).unwrap()))
    });
    group.bench_function("direct_power_200", |b| {
        b.iter(|| black_box(a.trace_power_direct(200).unwrap()))
    });
    let rot = IntMatrix::from_rows(&[vec![0, -1], vec![1, 0]]).unwrap();
    group.bench_function("find_nu_periodic_failure", |b| {
        b.iter(|| black_box(find_nu(&rot, 2, 0.5).unwrap()))
    });
    let lehmer_companion = IntMatrix::companion(&lehmer()).unwrap();
    group.bench_function("find_nu_lehmer", |b| {
        b.iter(|| black_box(find_nu(&lehmer_companion, 2, 1.0).unwrap()))
    });
    group.bench_function("house_lehmer", |b| {
        b.iter(|| black_box(house(&lehmer(), 1e-9).unwrap()))
    });
    group.finish();
}

fn penner(c: &mut Criterion) {
    let mut group = c.benchmark_group("penner_matrix");
    group.sample_size(20);
    for (g, n) in [(2, 0), (4, 3), (10, 126)] {
        let cs = curve_system(g, n).unwrap();
        group.bench_with_input(BenchmarkId::new("g_n", format!("{g}_{n}")), &cs, |b, cs| {
            b.iter(|| black_box(penner_matrix(cs).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, char_poly, traces, penner);
criterion_main!(benches);
