use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ncmono::algebra::operators::Algebra;
use ncmono::parallel::with_threads;
use ncmono::sector::build_sector;
use ncmono::verify::{run_suite, RunConfig, Suite};

fn threads() -> [(&'static str, usize); 2] {
    [("sequential", 1), ("pool", 0)]
}

fn product(c: &mut Criterion) {
    let alg = Algebra::new(build_sector(2, 16, 1.0).unwrap());
    let (x, y) = (alg.s(0, 4).clone(), alg.s(1, 5).clone());
    let mut g = c.benchmark_group("superop_product");
    for (name, n) in threads() {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| with_threads(n, || x.commutator(&y)))
        });
    }
    g.finish();
}

fn suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("velocity_suite");
    g.sample_size(10);
    for (name, n) in threads() {
        let cfg = RunConfig {
            suite: Suite::Velocity,
            kappas: vec![-1, 0, 1],
            n_max: 8,
            jobs: n,
            timing: false,
            ..RunConfig::default()
        };
        g.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| run_suite(&cfg).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, product, suite);
criterion_main!(benches);
