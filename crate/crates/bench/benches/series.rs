use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use qpart_core::builders::{pochhammer_infinite, slater_lhs, theta_product};
use qpart_core::{Sign, TruncatedSeries};

fn pseudo_random(order: usize, seed: i64) -> TruncatedSeries {
    let v: Vec<i64> = (0..order as i64).map(|k| ((k * 7919 + seed) % 19) - 9).collect();
    TruncatedSeries::from_i64s(&v)
}

fn arithmetic(c: &mut Criterion) {
    let mut g = c.benchmark_group("series");
    for order in [100, 300, 1000] {
        let (a, b) = (pseudo_random(order, 3), pseudo_random(order, 11));
        g.bench_with_input(BenchmarkId::new("mul", order), &order, |bench, _| bench.iter(|| black_box(&a * &b)));
        let euler = pochhammer_infinite(Sign::Minus, 1, 1, order).unwrap();
        g.bench_with_input(BenchmarkId::new("invert_euler", order), &order, |bench, _| {
            bench.iter(|| black_box(euler.invert().unwrap()))
        });
    }
    g.finish();
}

fn identities(c: &mut Criterion) {
    let mut g = c.benchmark_group("identities");
    for k in [2, 5, 9] {
        g.bench_with_input(BenchmarkId::new("slater_lhs_300", k), &k, |bench, &k| {
            bench.iter(|| black_box(slater_lhs(k, 300).unwrap()))
        });
    }
    g.bench_function("theta_product_16_5_300", |bench| {
        bench.iter(|| black_box(theta_product(16, 5, Sign::Minus, 300).unwrap()))
    });
    g.finish();
}

criterion_group!(benches, arithmetic, identities);
criterion_main!(benches);
