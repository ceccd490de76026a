//! Sweep throughput: rayon pool vs the sequential fallback, at two range
//! sizes, plus single-case costs for the two dominant kernels.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use jacobi_sums::ff::FieldCtx;
use jacobi_sums::jacobi::jacobi_sum;
use jacobi_sums::sums::SumContext;
use jacobi_sums::sweep::{run_sweep_sequential, SweepSpec};
use jacobi_sums::theorems::{verify, VerifyOptions};

fn bench_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep-3-5");
    group.sample_size(10);
    for q_max in [500u64, 2000] {
        let spec = SweepSpec::new(3, 5, 2, q_max);
        group.bench_with_input(BenchmarkId::new("sequential", q_max), &spec, |b, spec| {
            b.iter(|| run_sweep_sequential(spec).unwrap())
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", q_max), &spec, |b, spec| {
            b.iter(|| jacobi_sums::sweep::run_sweep_parallel(spec).unwrap())
        });
    }
    group.finish();
}

fn bench_single_case(c: &mut Criterion) {
    let ctx = FieldCtx::new(4999, None).unwrap();
    c.bench_function("verify-q4999-ell3-f2", |b| {
        b.iter(|| verify(&ctx, 3, 2, VerifyOptions::default()).unwrap())
    });
    c.bench_function("jacobi-sum-q4999", |b| {
        b.iter(|| jacobi_sum(&ctx, 3, 2, 3, 2).unwrap())
    });
    let params = ctx.derive_param_set(3, 2).unwrap();
    c.bench_function("char-sum-q4999", |b| {
        b.iter(|| {
            let sc = SumContext::new(&ctx, &params);
            sc.s(1, 1)
        })
    });
}

criterion_group!(benches, bench_sweep, bench_single_case);
criterion_main!(benches);
