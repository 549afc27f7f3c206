use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use susyext_bench::{cubic, cubic_family, extension, label, spec, INSTANCES};
use susyext_core::eop::{eop_solve, reduction_check, Reduction};
use susyext_core::exactmath::{laguerre, rat, wronskian};
use susyext_core::golden::{golden_check, GoldenForm};
use susyext_core::susy::{build_extension, wronskian3_identities};

fn construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_extension");
    for (case, l, m1, m2) in INSTANCES {
        let s = spec(case, l, m1, m2);
        group.bench_with_input(BenchmarkId::from_parameter(label(case, l, m1, m2)), &s, |b, s| {
            b.iter(|| build_extension(black_box(s)).unwrap())
        });
    }
    group.finish();
}

fn polynomials(c: &mut Criterion) {
    let a = rat(7, 2);
    c.bench_function("laguerre/n=10", |b| b.iter(|| laguerre(black_box(10), &a)));
    let fs: Vec<_> = (1..=3).map(|n| laguerre(n, &a).compose_neg()).collect();
    c.bench_function("wronskian/k=3", |b| b.iter(|| wronskian(black_box(&fs))));
}

fn exceptional(c: &mut Criterion) {
    let fam = cubic_family();
    let mut group = c.benchmark_group("eop_solve/cubic");
    for nu in [0usize, 5, 10] {
        group.bench_with_input(BenchmarkId::from_parameter(nu), &nu, |b, &nu| {
            b.iter(|| eop_solve(&fam, fam.mu + nu).unwrap())
        });
    }
    group.finish();
}

fn identities(c: &mut Criterion) {
    let pot = cubic();
    c.bench_function("ssusy_check/cubic", |b| b.iter(|| pot.ssusy_check().unwrap()));
    let pot = extension(INSTANCES[0].0, INSTANCES[0].1, INSTANCES[0].2, INSTANCES[0].3);
    c.bench_function("seed_wronskian_check/case-i", |b| b.iter(|| pot.seed_wronskian_check().unwrap()));
    let a = rat(5, 2);
    c.bench_function("reduction_check/e", |b| b.iter(|| reduction_check(Reduction::E, &a).unwrap()));
    c.bench_function("wronskian3_identities", |b| b.iter(|| wronskian3_identities(&a).unwrap()));
    let w = rat(2, 1);
    c.bench_function("golden_check/new-cubic", |b| b.iter(|| golden_check(GoldenForm::NewCubic, 3, &w)));
}

criterion_group!(benches, construction, polynomials, exceptional, identities);
criterion_main!(benches);
