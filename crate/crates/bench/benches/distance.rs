use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qrv_core::{min_distance, qr_family, EnumerationConfig, QrCode, Strategy, WeightKind};

fn bench_infoset_search(c: &mut Criterion) {
    let cfg = EnumerationConfig {
        budget: 1 << 28,
        workers: 1,
    };
    let mut group = c.benchmark_group("infoset_lee_distance");
    for (p, q) in [(3u32, 11u32), (5, 11), (3, 13)] {
        let fam = qr_family(p, q).unwrap();
        let ext = fam.extend(QrCode::Q1).unwrap();
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("ext_p{p}_q{q}")),
            &ext,
            |b, code| {
                b.iter(|| min_distance(code, WeightKind::Lee, Strategy::InfoSet, &cfg).unwrap())
            },
        );
    }
    group.finish();
}

fn bench_exhaustive_distance(c: &mut Criterion) {
    let cfg = EnumerationConfig {
        budget: 1 << 28,
        workers: 1,
    };
    let fam = qr_family(2, 17).unwrap();
    let ext = fam.extend(QrCode::Q1).unwrap();
    let mut group = c.benchmark_group("exhaustive_distance");
    group.sample_size(20);
    group.bench_function("q17_ext_bachoc", |b| {
        b.iter(|| min_distance(&ext, WeightKind::Bachoc, Strategy::Exhaustive, &cfg).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_infoset_search, bench_exhaustive_distance);
criterion_main!(benches);
