use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use recog::algebra::transition_monoid;
use recog_bench::{inflate, sliding_window_dfa};

fn bench_minimize(c: &mut Criterion) {
    let mut group = c.benchmark_group("minimize");
    for k in [6u32, 8, 10] {
        let input = inflate(&sliding_window_dfa(k));
        group.bench_with_input(BenchmarkId::new("hopcroft", input.state_count()), &input, |b, d| {
            b.iter(|| black_box(d.minimize()))
        });
        group.bench_with_input(BenchmarkId::new("moore", input.state_count()), &input, |b, d| {
            b.iter(|| black_box(d.minimize_moore()))
        });
    }
    group.finish();
}

fn bench_monoid_closure(c: &mut Criterion) {
    let mut group = c.benchmark_group("transition_monoid");
    for k in [5u32, 7, 8] {
        let dfa = sliding_window_dfa(k);
        group.bench_with_input(BenchmarkId::from_parameter(dfa.state_count()), &dfa, |b, d| {
            b.iter(|| black_box(transition_monoid(d).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(kernels, bench_minimize, bench_monoid_closure);
criterion_main!(kernels);
