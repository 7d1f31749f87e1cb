//! Sequential against parallel search on small dense instances.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use xing_crossings::{CrossingType, TypeSet};
use xing_graph::Graph;
use xing_solver::{solve, SolveOptions};

fn cases() -> Vec<(&'static str, Graph, TypeSet)> {
    let mut k6e = Graph::complete(6);
    k6e.remove_edge(0, 1);
    vec![
        ("k6-full", Graph::complete(6), TypeSet::single(CrossingType::Full)),
        ("k6-e-almost-full", k6e, TypeSet::single(CrossingType::AlmostFull)),
        ("k3,4-bowtie", Graph::complete_bipartite(3, 4), TypeSet::single(CrossingType::Bowtie)),
    ]
}

fn bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve");
    group.sample_size(10);
    for (name, g, s) in cases() {
        for parallel in [false, true] {
            let label = if parallel { "parallel" } else { "sequential" };
            group.bench_with_input(BenchmarkId::new(label, name), &g, |b, g| {
                b.iter(|| solve(g, s, SolveOptions { parallel, ..SolveOptions::default() }).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
