use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use stw_bench::{pn_fixtures, spherical_fixtures};
use stw_core::module::{hom_space, strip_projectives};
use stw_core::stable::syzygy;
use stw_core::Module;

fn hom(c: &mut Criterion) {
    let mut g = c.benchmark_group("hom_space");
    for f in spherical_fixtures().into_iter().chain(pn_fixtures()) {
        let t = f.ctx.t().clone();
        let ot = syzygy(&t);
        g.bench_with_input(BenchmarkId::from_parameter(f.name), &(ot, t), |b, (m, n)| {
            b.iter(|| hom_space(m, n).unwrap().dim())
        });
    }
    g.finish();
}

fn strip(c: &mut Criterion) {
    let mut g = c.benchmark_group("strip_projectives");
    for f in spherical_fixtures().into_iter().chain(pn_fixtures()) {
        let m = f.padded_t();
        g.bench_with_input(BenchmarkId::from_parameter(f.name), &m, |b, m| {
            b.iter(|| {
                let fresh = Module::new(m.algebra().clone(), m.actions().to_vec()).unwrap();
                strip_projectives(&fresh).free_rank
            })
        });
    }
    g.finish();
}

fn spherical(c: &mut Criterion) {
    let mut g = c.benchmark_group("spherical_twist");
    g.sample_size(20);
    for f in spherical_fixtures() {
        g.bench_function(BenchmarkId::from_parameter(f.name), |b| {
            b.iter(|| f.ctx.spherical_twist_power(&f.simple, 2).unwrap().dim())
        });
    }
    g.finish();
}

fn pn(c: &mut Criterion) {
    let mut g = c.benchmark_group("pn_twist");
    g.sample_size(10);
    for f in pn_fixtures() {
        g.bench_function(BenchmarkId::from_parameter(f.name), |b| b.iter(|| f.ctx.pn_twist(&f.simple).unwrap().dim()));
    }
    g.finish();
}

criterion_group!(engine, hom, strip, spherical, pn);
criterion_main!(engine);
