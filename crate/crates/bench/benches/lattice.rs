use std::hint::black_box;

use burnside_core::{build, table_of_marks, GroupSpec, SubgroupLattice, DEFAULT_LATTICE_CAP, DEFAULT_ORDER_CAP};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const GROUPS: &[&str] = &["D16", "SD32", "EA(2,5)", "ES+(3)xC3", "D8xQ8"];

fn enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_subgroups");
    for name in GROUPS {
        let g = build(&name.parse::<GroupSpec>().unwrap(), DEFAULT_ORDER_CAP).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| SubgroupLattice::new(black_box(g.clone()), DEFAULT_LATTICE_CAP).unwrap())
        });
    }
    group.finish();
}

fn marks(c: &mut Criterion) {
    let mut group = c.benchmark_group("table_of_marks");
    for name in GROUPS {
        let g = build(&name.parse::<GroupSpec>().unwrap(), DEFAULT_ORDER_CAP).unwrap();
        let lattice = SubgroupLattice::new(g, DEFAULT_LATTICE_CAP).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(name), &lattice, |b, l| {
            b.iter(|| table_of_marks(black_box(l)))
        });
    }
    group.finish();
}

criterion_group!(benches, enumerate, marks);
criterion_main!(benches);
