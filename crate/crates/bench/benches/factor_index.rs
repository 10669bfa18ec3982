use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use subshift::sturmian::{mechanical_window, MechanicalParams};
use subshift::{ComplexityProfile, FactorIndex};
use subshift_bench::random_window;

fn build(c: &mut Criterion) {
    let mut group = c.benchmark_group("factor_index");
    for len in [10_000, 100_000, 1_000_000] {
        let w = mechanical_window(&MechanicalParams::golden(), 0, len).unwrap();
        group.bench_with_input(BenchmarkId::new("sturmian_profile", len), &w, |b, w| {
            b.iter(|| ComplexityProfile::from_index(&FactorIndex::build(w, 200).unwrap(), 200).unwrap())
        });
        let r = random_window(len as usize, 4, 7);
        group.bench_with_input(BenchmarkId::new("random4_profile", len), &r, |b, r| {
            b.iter(|| ComplexityProfile::from_index(&FactorIndex::build(r, 64).unwrap(), 64).unwrap())
        });
    }
    group.finish();
}

fn right_special(c: &mut Criterion) {
    let w = mechanical_window(&MechanicalParams::golden(), 0, 100_000).unwrap();
    let idx = FactorIndex::build(&w, 500).unwrap();
    c.bench_function("right_special_n100", |b| b.iter(|| idx.right_special(100).unwrap()));
}

criterion_group!(benches, build, right_special);
criterion_main!(benches);
