use coincide_core::engine::{evaluate_batch_sequential, PairKind, PairQuery, Quantifier};
use coincide_core::manifold::ManifoldDescriptor as M;
use coincide_core::tables::HomotopyTables;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use std::hint::black_box;

fn sweep() -> Vec<PairQuery> {
    let mut manifolds = Vec::new();
    for n in 2..=12 {
        manifolds.push(M::sphere(n).unwrap());
        manifolds.push(M::rp(n).unwrap());
    }
    for (r, k) in [(4, 2), (5, 2), (6, 2), (6, 3), (7, 2), (8, 2)] {
        manifolds.push(M::grassmann(r, k).unwrap());
    }
    let mut out = Vec::new();
    for desc in &manifolds {
        for m in 2..=20 {
            for kind in [PairKind::SelfPair, PairKind::Root, PairKind::General] {
                for q in [Quantifier::Forall, Quantifier::Exists] {
                    out.push(PairQuery::new(desc.clone(), m, kind, q));
                }
            }
        }
    }
    out
}

fn batch(c: &mut Criterion) {
    let tables = HomotopyTables::bundled();
    let queries = sweep();
    let mut group = c.benchmark_group("evaluate_batch");
    group.throughput(Throughput::Elements(queries.len() as u64));
    group.bench_with_input(BenchmarkId::new("sequential", queries.len()), &queries, |b, qs| {
        b.iter(|| black_box(evaluate_batch_sequential(qs, tables)))
    });
    #[cfg(feature = "parallel")]
    group.bench_with_input(BenchmarkId::new("parallel", queries.len()), &queries, |b, qs| {
        b.iter(|| black_box(coincide_core::engine::evaluate_batch_parallel(qs, tables)))
    });
    group.finish();
}

criterion_group!(benches, batch);
criterion_main!(benches);
