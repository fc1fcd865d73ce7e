use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use lexcone::{conelab, generators, lattice, TensorSpace};
use lexcone_bench::{forest, pointed_cone, poset, positive, vector};

fn membership(c: &mut Criterion) {
    let mut group = c.benchmark_group("is_positive");
    for n in [8, 32, 128] {
        let p = poset(n, 1);
        let f = vector(&p, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &f, |b, f| {
            b.iter(|| black_box(f).is_positive())
        });
    }
    group.finish();
}

fn decompose(c: &mut Criterion) {
    let mut group = c.benchmark_group("decompose");
    for n in [8, 32] {
        let p = poset(n, 2);
        let f = positive(&p, 2);
        group.bench_with_input(BenchmarkId::from_parameter(n), &f, |b, f| {
            b.iter(|| generators::decompose(black_box(f)).unwrap())
        });
    }
    group.finish();
}

fn suprema(c: &mut Criterion) {
    let p = forest(32, 3);
    let f = vector(&p, 3);
    c.bench_function("sup_with_zero/forest32", |b| {
        b.iter(|| lattice::sup_with_zero(black_box(&f)).unwrap())
    });
}

fn tensor(c: &mut Criterion) {
    let space = TensorSpace::new(poset(4, 4), poset(4, 5));
    let u = positive(&Arc::clone(&space.product), 4);
    c.bench_function("kp_decompose/4x4", |b| {
        b.iter(|| space.kp_decompose(black_box(&u)).unwrap())
    });
}

fn cones(c: &mut Criterion) {
    let mut group = c.benchmark_group("finite_cones");
    for d in [2, 4] {
        let cone = pointed_cone(d, 6);
        let v = cone
            .generators()
            .iter()
            .fold(vec![lexcone::rational::zero(); d], |acc, g| {
                acc.iter().zip(g).map(|(a, b)| a + b).collect()
            });
        group.bench_with_input(BenchmarkId::new("lex_embed", d), &cone, |b, cone| {
            b.iter(|| cone.lex_embed().unwrap())
        });
        group.bench_with_input(BenchmarkId::new("cone_member", d), &cone, |b, cone| {
            b.iter(|| cone.cone_member(black_box(&v)).unwrap())
        });
    }
    let x = pointed_cone(3, 7);
    let y = pointed_cone(3, 8);
    group.bench_function("kp_pointedness_check/3x3", |b| {
        b.iter(|| conelab::kp_pointedness_check(&x, &y, 10, 0).unwrap())
    });
    group.finish();
}

criterion_group!(benches, membership, decompose, suprema, tensor, cones);
criterion_main!(benches);
