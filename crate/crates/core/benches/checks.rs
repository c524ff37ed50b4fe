use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use polymon::analysis::{
    assoc_p_sampled, assoc_s_sampled, congruence_suite, isomorphism_report, oracle_suite,
    product_report, translation_report, DEFAULT_SEED,
};
use polymon::Exec;

fn bench_checks(c: &mut Criterion) {
    let mut group = c.benchmark_group("checks");
    group.sample_size(10);
    for exec in Exec::all() {
        let label = format!("{exec:?}");
        group.bench_with_input(BenchmarkId::new("oracle_len3", &label), &exec, |b, &e| {
            b.iter(|| black_box(oracle_suite(3, e)))
        });
        group.bench_with_input(BenchmarkId::new("assoc_p_10k", &label), &exec, |b, &e| {
            b.iter(|| black_box(assoc_p_sampled(6, 10_000, DEFAULT_SEED, e)))
        });
        group.bench_with_input(BenchmarkId::new("assoc_s_10k", &label), &exec, |b, &e| {
            b.iter(|| black_box(assoc_s_sampled(10_000, DEFAULT_SEED, e)))
        });
        group.bench_with_input(
            BenchmarkId::new("translations_len4", &label),
            &exec,
            |b, &e| b.iter(|| black_box(translation_report(4, e))),
        );
        group.bench_with_input(BenchmarkId::new("products_len5", &label), &exec, |b, &e| {
            b.iter(|| black_box(product_report(5, e)))
        });
        group.bench_with_input(
            BenchmarkId::new("isomorphism_30", &label),
            &exec,
            |b, &e| b.iter(|| black_box(isomorphism_report(30, e))),
        );
        group.bench_with_input(
            BenchmarkId::new("congruence_len1", &label),
            &exec,
            |b, &e| b.iter(|| black_box(congruence_suite(1, 8, 3, e))),
        );
    }
    group.finish();
}

criterion_group!(benches, bench_checks);
criterion_main!(benches);
