use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use fgc_core::generators::{apollonian_iterative, ext_hanoi};
use fgc_core::oracle::{count_perfect_matchings, max_matching_search, min_domination_search, OracleConfig};
use fgc_core::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn matching(c: &mut Criterion) {
    let mut group = c.benchmark_group("max_matching");
    for n in [3, 4] {
        let g = apollonian_iterative(n).unwrap();
        for (name, exec) in MODES {
            let cfg = OracleConfig::default().with_exec(exec);
            group.bench_with_input(BenchmarkId::new(name, format!("A{n}")), &g, |b, g| {
                b.iter(|| max_matching_search(black_box(g), &[], &cfg).unwrap())
            });
        }
    }
    group.finish();
}

fn perfect(c: &mut Criterion) {
    let mut group = c.benchmark_group("perfect_matchings");
    let g = ext_hanoi(3).unwrap();
    for (name, exec) in MODES {
        let cfg = OracleConfig::default().with_exec(exec);
        group.bench_function(BenchmarkId::new(name, "S+3"), |b| {
            b.iter(|| count_perfect_matchings(black_box(&g), &cfg).unwrap())
        });
    }
    group.finish();
}

fn domination(c: &mut Criterion) {
    let mut group = c.benchmark_group("min_domination");
    let graphs = [
        ("A4", apollonian_iterative(4).unwrap()),
        ("A5", apollonian_iterative(5).unwrap()),
        ("S+3", ext_hanoi(3).unwrap()),
    ];
    for (label, g) in &graphs {
        for (name, exec) in MODES {
            let cfg = OracleConfig::default().with_exec(exec);
            group.bench_with_input(BenchmarkId::new(name, label), g, |b, g| {
                b.iter(|| min_domination_search(black_box(g), &[], &cfg).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, matching, perfect, domination);
criterion_main!(benches);
