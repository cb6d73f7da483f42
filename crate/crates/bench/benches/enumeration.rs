use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qrv_core::{enumerate_weights, qr_family, EnumerationConfig, QrCode, WeightKind};

fn bench_family_construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("qr_family");
    for (p, q) in [(2u32, 23u32), (5, 19), (17, 19)] {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("p{p}_q{q}")),
            &(p, q),
            |b, &(p, q)| b.iter(|| qr_family(p, q).unwrap()),
        );
    }
    group.finish();
}

fn bench_binary_enumeration(c: &mut Criterion) {
    let fam = qr_family(2, 17).unwrap();
    let ext = fam.extend(QrCode::Q1).unwrap();
    let cfg = EnumerationConfig {
        budget: 1 << 28,
        workers: 1,
    };
    let mut group = c.benchmark_group("enumerate_q17_ext");
    group.sample_size(20);
    for kind in [WeightKind::Lee, WeightKind::Hamming, WeightKind::Bachoc] {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{kind}")),
            &kind,
            |b, &kind| b.iter(|| enumerate_weights(&ext, kind, &cfg).unwrap()),
        );
    }
    group.finish();
}

fn bench_ternary_enumeration(c: &mut Criterion) {
    let fam = qr_family(3, 11).unwrap();
    let code = fam.code(QrCode::Q1);
    let cfg = EnumerationConfig {
        budget: 1 << 28,
        workers: 1,
    };
    c.bench_function("enumerate_q11_ternary_lee", |b| {
        b.iter(|| enumerate_weights(&code, WeightKind::Lee, &cfg).unwrap())
    });
}

criterion_group!(
    benches,
    bench_family_construction,
    bench_binary_enumeration,
    bench_ternary_enumeration
);
criterion_main!(benches);
