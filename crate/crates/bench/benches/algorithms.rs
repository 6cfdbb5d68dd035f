use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use sachs_core::critical_structure::{critical_difference, fast_critical_difference};
use sachs_core::criticality::{is_k_sachs_critical, is_minimal_k_sachs_critical};
use sachs_core::graph::named::{complete, complete_bipartite, cycle, petersen};
use sachs_core::graph::{canonical_form, enumerate_graphs};
use sachs_core::matching::{max_bipartite_matching, max_matching_general};
use sachs_core::planarity::is_planar;
use sachs_core::sachs::{double_cover, has_factor, has_one_two_factor};
use sachs_core::Graph;

fn matching(c: &mut Criterion) {
    let mut group = c.benchmark_group("matching");
    for g in [petersen(), complete(12), cycle(40)] {
        let id = format!("n{}m{}", g.order(), g.size());
        group.bench_with_input(BenchmarkId::new("blossom", &id), &g, |b, g| b.iter(|| max_matching_general(black_box(g))));
        let cover = double_cover(&g);
        group.bench_with_input(BenchmarkId::new("hopcroft_karp_cover", &id), &cover, |b, cover| {
            b.iter(|| max_bipartite_matching(black_box(cover)))
        });
    }
    group.finish();
}

fn factor(c: &mut Criterion) {
    let mut group = c.benchmark_group("factor");
    let g = petersen();
    group.bench_function("certified_petersen", |b| b.iter(|| has_one_two_factor(black_box(&g))));
    group.bench_function("mask_petersen", |b| b.iter(|| has_factor(black_box(&g))));
    group.bench_function("critical_difference_petersen", |b| b.iter(|| critical_difference(black_box(&g))));
    group.bench_function("fast_critical_difference_petersen", |b| {
        b.iter(|| fast_critical_difference(black_box(&g)))
    });
    group.finish();
}

fn planarity(c: &mut Criterion) {
    let mut group = c.benchmark_group("planarity");
    let graphs: [(&str, Graph); 4] = [
        ("petersen", petersen()),
        ("k33", complete_bipartite(3, 3)),
        ("k5", complete(5)),
        ("c30", cycle(30)),
    ];
    for (name, g) in &graphs {
        group.bench_with_input(BenchmarkId::from_parameter(name), g, |b, g| b.iter(|| is_planar(black_box(g))));
    }
    group.finish();
}

fn canonical(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical");
    let g = petersen();
    group.bench_function("petersen", |b| b.iter(|| canonical_form(black_box(&g))));
    let sevens = enumerate_graphs(7).expect("n = 7 is within the enumeration limit");
    group.bench_function("all_order_7", |b| {
        b.iter(|| sevens.iter().map(|g| canonical_form(g).unwrap().len()).sum::<usize>())
    });
    group.finish();
}

fn criticality(c: &mut Criterion) {
    let mut group = c.benchmark_group("criticality");
    for n in [6, 8, 10] {
        let g = complete(n);
        group.bench_with_input(BenchmarkId::new("critical_k_n_minus_2", n), &g, |b, g| {
            b.iter(|| is_k_sachs_critical(black_box(g), n - 2))
        });
    }
    let k6 = complete(6);
    group.bench_function("minimal_k6_level3", |b| b.iter(|| is_minimal_k_sachs_critical(black_box(&k6), 3)));
    group.finish();
}

criterion_group!(benches, matching, factor, planarity, canonical, criticality);
criterion_main!(benches);
