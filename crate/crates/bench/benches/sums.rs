use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dedekind_core::analytic::zeta_even_check;
use dedekind_core::reciprocity::{check_cor43, check_thm31, check_thm41};
use dedekind_core::sums::{classical_s, count_ladder, hwz_s};
use dedekind_core::{bernoulli_function, Rational};

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn bench_rational(c: &mut Criterion) {
    let (x, y) = (q("-7/3"), q("11/12"));
    c.bench_function("rational/mul_add", |b| {
        b.iter(|| black_box(&x) * black_box(&y) + black_box(&x))
    });
    let big = q("123456789012345678901234567890/7");
    c.bench_function("rational/mul_big", |b| b.iter(|| black_box(&big) * black_box(&y)));
}

fn bench_bernoulli(c: &mut Criterion) {
    let x = q("5/7");
    let mut group = c.benchmark_group("bernoulli_function");
    for n in [2u32, 8, 16] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| bernoulli_function(n, black_box(&x)))
        });
    }
    group.finish();
}

fn bench_sums(c: &mut Criterion) {
    let mut group = c.benchmark_group("classical_s");
    for modulus in [13i64, 101, 1009] {
        group.bench_with_input(BenchmarkId::from_parameter(modulus), &modulus, |b, &m| {
            b.iter(|| classical_s(black_box(5), m).unwrap())
        });
    }
    group.finish();

    let (x, y, z) = (q("1/2"), q("-1/3"), q("2/5"));
    let mut group = c.benchmark_group("hwz_s");
    for modulus in [7i64, 31, 127] {
        group.bench_with_input(BenchmarkId::from_parameter(modulus), &modulus, |b, &m| {
            b.iter(|| hwz_s(3, 2, black_box(4), 5, m, &x, &y, &z).unwrap())
        });
    }
    group.finish();

    c.bench_function("count_ladder/1009", |b| {
        b.iter(|| count_ladder(black_box(12), 18, 1009, &x, &y, &z).unwrap())
    });
}

fn bench_checks(c: &mut Criterion) {
    let (x, y, z) = (q("1/3"), q("1/5"), q("1/7"));
    c.bench_function("check/thm31", |b| {
        b.iter(|| check_thm31(black_box(2), 3, 2, -3, &x, &y, &z).unwrap())
    });
    c.bench_function("check/thm41", |b| {
        b.iter(|| check_thm41(black_box(2), 2, 3, -4, 5, &x, &y, &z).unwrap())
    });
    c.bench_function("check/cor43", |b| {
        b.iter(|| check_cor43(black_box(5), 2, 6, 8, 9).unwrap())
    });
}

fn bench_analytic(c: &mut Criterion) {
    c.bench_function("analytic/zeta_even_1e5", |b| {
        b.iter(|| zeta_even_check(black_box(1), 100_000).unwrap())
    });
}

criterion_group!(arith, bench_rational, bench_bernoulli);
criterion_group!(sums, bench_sums);
criterion_group!(checks, bench_checks, bench_analytic);
criterion_main!(arith, sums, checks);
