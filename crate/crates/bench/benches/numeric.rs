use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use susyext_bench::{cubic, cubic_family};
use susyext_core::eop::eop_sequence;
use susyext_core::numerics::{self, gram_matrix, GaussLaguerre, SolverConfig};
use susyext_core::susy::Convention;

fn spectra(c: &mut Criterion) {
    let pot = cubic().v2(Convention::Partner);
    let mut group = c.benchmark_group("eig_solve/cubic");
    group.sample_size(10);
    for n_points in [1000usize, 4000] {
        let cfg = SolverConfig {
            n_points,
            ..SolverConfig::default()
        };
        group.bench_with_input(BenchmarkId::from_parameter(n_points), &cfg, |b, cfg| {
            b.iter(|| numerics::eig_solve(&pot, black_box(cfg)).unwrap())
        });
    }
    group.finish();
}

fn quadrature(c: &mut Criterion) {
    let mut group = c.benchmark_group("gauss_laguerre");
    for n in [40usize, 150, 300] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| GaussLaguerre::new(black_box(n), 1.5).unwrap())
        });
    }
    group.finish();

    let fam = cubic_family();
    let ys = eop_sequence(&fam, 7).unwrap();
    c.bench_function("gram_matrix/cubic/7", |b| b.iter(|| gram_matrix(&fam, &ys, 150).unwrap()));
}

criterion_group!(benches, spectra, quadrature);
criterion_main!(benches);
