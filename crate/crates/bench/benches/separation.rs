// SPDX-License-Identifier: MIT

use chaingraph::separation::{c_represented, moralization_represented};
use chaingraph_bench::{graphs, pair_triplets};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn criteria(c: &mut Criterion) {
    let mut group = c.benchmark_group("separation");
    for n in [6, 8, 10] {
        let gs = graphs(n, 20, 0.35, 1);
        let ts = pair_triplets(n, 20, 2);
        group.bench_with_input(BenchmarkId::new("c_separation", n), &n, |b, _| {
            b.iter(|| {
                gs.iter()
                    .zip(&ts)
                    .filter(|(g, t)| c_represented(g, t).unwrap())
                    .count()
            })
        });
        group.bench_with_input(BenchmarkId::new("moralization", n), &n, |b, _| {
            b.iter(|| {
                gs.iter()
                    .zip(&ts)
                    .filter(|(g, t)| moralization_represented(g, t).unwrap())
                    .count()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, criteria);
criterion_main!(benches);
