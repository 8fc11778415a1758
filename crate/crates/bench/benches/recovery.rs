// SPDX-License-Identifier: MIT

use chaingraph::{pattern_of, recover_largest, recover_pattern, CgModel};
use chaingraph_bench::graphs;
use criterion::{criterion_group, criterion_main, BatchSize, BenchmarkId, Criterion};

fn recovery(c: &mut Criterion) {
    let mut group = c.benchmark_group("recovery");
    group.sample_size(20);
    for n in [5, 6, 7] {
        let gs = graphs(n, 10, 0.4, 3);
        // fresh models each batch so the memo does not carry over
        group.bench_with_input(BenchmarkId::new("pattern", n), &n, |b, _| {
            b.iter_batched(
                || {
                    gs.iter()
                        .map(|g| CgModel::new(g.clone()).unwrap())
                        .collect::<Vec<_>>()
                },
                |models| {
                    for m in &models {
                        recover_pattern(m).unwrap();
                    }
                },
                BatchSize::SmallInput,
            )
        });
        let patterns: Vec<_> = gs.iter().map(|g| pattern_of(g).unwrap()).collect();
        group.bench_with_input(BenchmarkId::new("largest", n), &n, |b, _| {
            b.iter(|| {
                for p in &patterns {
                    recover_largest(p).unwrap();
                }
            })
        });
    }
    group.finish();
}

criterion_group!(benches, recovery);
criterion_main!(benches);
