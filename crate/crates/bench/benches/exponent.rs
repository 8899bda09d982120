use std::hint::black_box;

use burnside_core::{
    artin_exponent, build, verify_main_theorem, BurnsideRing, FamilySpec, GroupSpec, SubgroupLattice,
    DEFAULT_LATTICE_CAP, DEFAULT_ORDER_CAP,
};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn exponent(c: &mut Criterion) {
    let mut group = c.benchmark_group("artin_exponent");
    for name in ["Q16", "SD32", "M64", "ES-(5)", "C4xC4xC2"] {
        let g = build(&name.parse::<GroupSpec>().unwrap(), DEFAULT_ORDER_CAP).unwrap();
        let lattice = SubgroupLattice::new(g, DEFAULT_LATTICE_CAP).unwrap();
        // a fresh ring per iteration so the marks table and congruences are rebuilt
        group.bench_with_input(BenchmarkId::from_parameter(name), &lattice, |b, l| {
            b.iter(|| artin_exponent(&BurnsideRing::new(black_box(l)), FamilySpec::ElementaryAbelian).exponent)
        });
    }
    group.finish();
}

fn verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_main_theorem");
    group.sample_size(10);
    group.bench_function("max_order_64", |b| {
        b.iter(|| {
            verify_main_theorem(black_box(64), DEFAULT_LATTICE_CAP)
                .unwrap()
                .rows
                .len()
        })
    });
    group.finish();
}

criterion_group!(benches, exponent, verify);
criterion_main!(benches);
