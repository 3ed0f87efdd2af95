use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use zfgrundy::enumeration::{self, labeled_graph_count, labeled_masks};
use zfgrundy::par::{self, Execution};
use zfgrundy::sequences::{grundy_value_masks, SequenceKind};
use zfgrundy::zero_forcing::zero_forcing_number_masks;
use zfgrundy::{recognizers, Graph};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

/// Counts duality violations over every labeled graph on `n` vertices.
fn duality_sweep(n: usize, exec: Execution) -> u64 {
    par::count(labeled_graph_count(n), exec, |i| {
        let m = labeled_masks(n, i);
        grundy_value_masks(&m, SequenceKind::Z) + zero_forcing_number_masks(&m, 0) != n
    })
}

fn bench_sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("duality_sweep");
    group.sample_size(10);
    for n in [5usize, 6] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| b.iter(|| duality_sweep(n, exec)));
        }
    }
    group.finish();

    let mut group = c.benchmark_group("cross_validate");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, "iso-unique-zf-forest/9"), |b| {
            b.iter(|| enumeration::cross_validate("iso-unique-zf-forest", 9, Duration::from_secs(600), exec).unwrap())
        });
    }
    group.finish();
}

fn caterpillar(spine: usize, legs: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
    let mut next = spine;
    for s in 0..spine {
        for _ in 0..legs {
            edges.push((s, next));
            next += 1;
        }
    }
    Graph::from_edges(next, edges).unwrap()
}

fn bench_kernels(c: &mut Criterion) {
    let mut group = c.benchmark_group("kernels");
    let c14 = Graph::cycle(14);
    let masks = c14.masks().unwrap().to_vec();
    for kind in SequenceKind::ALL {
        group.bench_function(BenchmarkId::new("grundy_c14", kind.name()), |b| {
            b.iter(|| grundy_value_masks(black_box(&masks), kind))
        });
    }
    group.bench_function("zero_forcing_c14", |b| b.iter(|| zero_forcing_number_masks(black_box(&masks), 0)));
    for spine in [250usize, 500] {
        let t = caterpillar(spine, 2);
        group.bench_with_input(BenchmarkId::new("iso_unique_zf_caterpillar", t.n()), &t, |b, t| {
            b.iter(|| recognizers::recognize_iso_unique_zf_forest(t).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_sweeps, bench_kernels);
criterion_main!(benches);
