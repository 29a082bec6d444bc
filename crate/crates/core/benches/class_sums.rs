use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use weylstab::molien::ClassTraces;
use weylstab::oracle::{verify_class_formulas_with, OracleLimits};
use weylstab::repstab::multiplicity_table_with;
use weylstab::{Execution, SpaceKind, SpaceRecipe, WeylFamily, WeylFamilyDescriptor};

const STRATEGIES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn class_traces(c: &mut Criterion) {
    let mut group = c.benchmark_group("class_traces");
    for r in [6, 9] {
        let desc = WeylFamilyDescriptor::new(WeylFamily::B, r).unwrap();
        for (name, exec) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, r), &desc, |b, desc| {
                b.iter(|| {
                    let traces = ClassTraces::new(desc, 24, exec).unwrap();
                    black_box(traces.series(SpaceRecipe::fixed(SpaceKind::Comm)).unwrap())
                })
            });
        }
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle_b4");
    group.sample_size(10);
    for (name, exec) in STRATEGIES {
        group.bench_function(name, |b| {
            b.iter(|| {
                black_box(verify_class_formulas_with(WeylFamily::B, 4, 8, OracleLimits::default(), exec).unwrap())
            })
        });
    }
    group.finish();
}

fn multiplicities(c: &mut Criterion) {
    let mut group = c.benchmark_group("multiplicity_table_b6");
    group.sample_size(10);
    for (name, exec) in STRATEGIES {
        group.bench_function(name, |b| {
            b.iter(|| black_box(multiplicity_table_with(WeylFamily::B, 6, 2, 2, exec).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, class_traces, oracle, multiplicities);
criterion_main!(benches);
