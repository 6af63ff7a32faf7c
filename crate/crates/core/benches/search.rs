use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use lcd_core::search::{search_lcd, search_lck, Execution, SearchOptions, SearchSpec};

fn options(execution: Execution) -> SearchOptions {
    SearchOptions {
        execution,
        ..SearchOptions::default()
    }
}

fn lcd_cells(c: &mut Criterion) {
    let mut group = c.benchmark_group("search_lcd");
    group.sample_size(10);
    for (n, k) in [(10, 4), (11, 5), (12, 7)] {
        for (label, exec) in [
            ("sequential", Execution::Sequential),
            ("parallel", Execution::Parallel),
        ] {
            group.bench_with_input(
                BenchmarkId::new(label, format!("{n},{k}")),
                &(n, k),
                |b, &(n, k)| {
                    b.iter(|| {
                        search_lcd(&SearchSpec::max_distance(n, k).with_options(options(exec)))
                            .unwrap()
                    })
                },
            );
        }
    }
    group.finish();
}

fn lck_cells(c: &mut Criterion) {
    let mut group = c.benchmark_group("search_lck");
    group.sample_size(10);
    for (n, d) in [(10, 3), (11, 4)] {
        for (label, exec) in [
            ("sequential", Execution::Sequential),
            ("parallel", Execution::Parallel),
        ] {
            group.bench_with_input(
                BenchmarkId::new(label, format!("{n},{d}")),
                &(n, d),
                |b, &(n, d)| b.iter(|| search_lck(n, d, &options(exec), None).unwrap()),
            );
        }
    }
    group.finish();
}

criterion_group!(benches, lcd_cells, lck_cells);
criterion_main!(benches);
