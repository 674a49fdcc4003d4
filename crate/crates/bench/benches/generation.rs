use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use cagegen::canonical::{automorphism_group, is_canonical};
use cagegen::expansions::enumerate_expansion_sites;
use cagegen::generator::count;
use cagegen::oracle::canonical_form;
use cagegen::GenerationTask;
use cagegen_bench::{c60, children};

fn full_runs(c: &mut Criterion) {
    let mut g = c.benchmark_group("generate");
    g.sample_size(10);
    for n in [40, 50, 60] {
        g.bench_with_input(BenchmarkId::new("all", n), &n, |b, &n| b.iter(|| count(&GenerationTask::new(n)).unwrap()));
    }
    g.bench_function("ipr 60..76", |b| b.iter(|| count(&GenerationTask::with_range(60, 76).ipr()).unwrap()));
    g.finish();
}

fn kernels(c: &mut Criterion) {
    let c60 = c60();
    let children = children(&c60, 3);
    c.bench_function("is_canonical C60 children", |b| {
        b.iter(|| children.iter().filter(|(h, t)| is_canonical(h, t).accepted).count())
    });
    c.bench_function("automorphism_group C60", |b| b.iter(|| automorphism_group(black_box(&c60)).order()));
    c.bench_function("sites C60", |b| b.iter(|| enumerate_expansion_sites(black_box(&c60), 5).len()));
    c.bench_function("oracle canonical_form C60", |b| b.iter(|| canonical_form(black_box(&c60))));
}

criterion_group!(benches, full_runs, kernels);
criterion_main!(benches);
