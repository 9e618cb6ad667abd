use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use supersym::groupoid::atypicality;
use supersym::supersym::{decompose, super_schur};
use supersym::Block;
use supersym_bench::{dense_atypical_point, partition, power_sum_mix, staircase_monomial};

fn alternation(c: &mut Criterion) {
    for k in [4, 6] {
        let f = staircase_monomial(k);
        c.bench_function(&format!("alternate_staircase_{k}"), |b| b.iter(|| black_box(&f).alternate(Block::X).unwrap()));
    }
}

fn schur(c: &mut Criterion) {
    let lam = partition(&[4, 3, 2, 1]);
    c.bench_function("super_schur_4321_2_2", |b| b.iter(|| super_schur(black_box(&lam), 2, 2).unwrap()));
}

fn decomposition(c: &mut Criterion) {
    let f = power_sum_mix();
    c.bench_function("decompose_power_sum_mix", |b| b.iter(|| decompose(black_box(&f)).unwrap()));
}

fn matching(c: &mut Criterion) {
    let p = dense_atypical_point();
    c.bench_function("atypicality_4_4", |b| b.iter(|| atypicality(black_box(&p))));
}

criterion_group!(kernels, alternation, schur, decomposition, matching);
criterion_main!(kernels);
