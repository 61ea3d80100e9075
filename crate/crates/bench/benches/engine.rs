use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use pgx_bench::fixtures;
use pgx_core::constructions::NamedGroup;
use pgx_core::dmax::{census, is_d_maximal, Method};
use pgx_core::group::{all_subgroups, is_isomorphic};
use pgx_core::pc::{check_consistency, expand};
use pgx_core::ActionSet;

fn pc(c: &mut Criterion) {
    let pres = NamedGroup::Cp2StarS { p: 5 }.presentation().unwrap();
    c.bench_function("expand cp2_star_s:5 (625)", |b| b.iter(|| expand(black_box(&pres)).unwrap()));
    let bb = NamedGroup::Blackburn32.presentation().unwrap();
    c.bench_function("consistency blackburn32", |b| b.iter(|| check_consistency(black_box(&bb))));
}

fn lattice(c: &mut Criterion) {
    for (name, g) in fixtures() {
        c.bench_function(&format!("all_subgroups {name}"), |b| b.iter(|| all_subgroups(black_box(&g)).unwrap()));
    }
}

fn dmax(c: &mut Criterion) {
    let none = ActionSet::trivial();
    for (name, g) in fixtures().into_iter().filter(|(_, g)| g.prime() == 2) {
        c.bench_function(&format!("dmax exhaustive {name}"), |b| {
            b.iter(|| is_d_maximal(black_box(&g), &none, Method::Exhaustive).unwrap())
        });
        c.bench_function(&format!("dmax reduced {name}"), |b| {
            b.iter(|| is_d_maximal(black_box(&g), &none, Method::Reduced).unwrap())
        });
    }
}

fn iso(c: &mut Criterion) {
    let f = fixtures();
    let (_, bb) = &f[2];
    c.bench_function("iso blackburn32 self", |b| b.iter(|| is_isomorphic(black_box(bb), bb).unwrap()));
    let (_, e) = &f[4];
    let (_, bx) = &f[3];
    c.bench_function("iso e64 vs blackburn32xc2", |b| b.iter(|| is_isomorphic(black_box(e), bx).unwrap()));
}

fn census_bench(c: &mut Criterion) {
    let groups: Vec<_> = fixtures().into_iter().map(|(_, g)| g).filter(|g| g.prime() == 2).collect();
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    for workers in [1, 2] {
        group.bench_function(format!("fixtures workers={workers}"), |b| b.iter(|| census(black_box(&groups), workers)));
    }
    group.finish();
}

criterion_group!(benches, pc, lattice, dmax, iso, census_bench);
criterion_main!(benches);
