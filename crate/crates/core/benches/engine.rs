use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use fincat::catalog;
use fincat::cover::{homotopic_distance, ls_category_space, topological_complexity};
use fincat::harness::{run_suite, SuiteConfig};
use fincat::poset::Product;
use fincat::Settings;

fn modes() -> [(&'static str, Settings); 2] {
    [("parallel", Settings::default()), ("sequential", Settings::sequential())]
}

fn invariants(c: &mut Criterion) {
    let s = catalog::pseudocircle();
    let s2 = catalog::pseudocircle_squared();
    let p = Product::new(&s, &s).unwrap();
    let mut g = c.benchmark_group("invariants");
    for (mode, st) in modes() {
        g.bench_with_input(BenchmarkId::new("cat S×S", mode), &st, |b, st| {
            b.iter(|| ls_category_space(black_box(&s2), false, st).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("TC S", mode), &st, |b, st| {
            b.iter(|| topological_complexity(black_box(&s), false, st).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("D(pr1,pr2) S", mode), &st, |b, st| {
            b.iter(|| homotopic_distance(&p.pr1(), &p.pr2(), false, st).unwrap())
        });
    }
    g.finish();
}

fn suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("suite");
    g.sample_size(10);
    for (mode, st) in modes() {
        let cfg = SuiteConfig {
            instances: 20,
            settings: st,
            ..SuiteConfig::default()
        };
        g.bench_with_input(BenchmarkId::new("catalog x20", mode), &cfg, |b, cfg| {
            b.iter(|| run_suite(cfg).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, invariants, suite);
criterion_main!(benches);
