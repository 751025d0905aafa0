use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use essgraph::{build_graph, eigen::DEFAULT_CLUSTER_TOL, indices, spectral};
use essgraph_bench::workload;

fn bench_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_graph");
    for (label, n) in workload() {
        group.bench_with_input(BenchmarkId::from_parameter(label), &n, |b, &n| {
            b.iter(|| build_graph(black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn bench_spectral(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectral");
    for (label, n) in workload() {
        let g = build_graph(n).unwrap();
        group.bench_with_input(BenchmarkId::new("jacobi", label), &g, |b, g| {
            b.iter(|| spectral::eigenvalues_numeric(g, DEFAULT_CLUSTER_TOL).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("charpoly", label), &g, |b, g| {
            b.iter(|| spectral::char_poly_exact(g).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("nullity", label), &g, |b, g| {
            b.iter(|| spectral::nullity_exact(g))
        });
    }
    group.finish();
}

fn bench_indices(c: &mut Criterion) {
    let mut group = c.benchmark_group("indices");
    for (label, n) in workload() {
        let g = build_graph(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(label), &g, |b, g| {
            b.iter(|| {
                let d = indices::all_pairs_distances(g).unwrap();
                (indices::wiener(&d), indices::hyper_wiener(&d))
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_build, bench_spectral, bench_indices);
criterion_main!(benches);
