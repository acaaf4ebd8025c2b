//! Wall-clock comparison of the three episode matching solvers on built
//! reduction instances. The DP is the headline; the greedy and exhaustive
//! solvers are included at sizes where they finish in reasonable time.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use std::hint::black_box;

use epimatch_bench::balanced_instance;
use epimatch_core::{episode_bruteforce, episode_dp, episode_per_start_greedy, AlphabetKind};

fn bench_dp(c: &mut Criterion) {
    let mut group = c.benchmark_group("episode_dp");
    group.sample_size(10);
    // The binary construction is a d^2 factor bigger, so it gets smaller n.
    let grids = [
        (AlphabetKind::Four, &[16usize, 32, 64, 128][..]),
        (AlphabetKind::Binary, &[8, 16, 32][..]),
    ];
    for (kind, sizes) in grids {
        for &n in sizes {
            let r = balanced_instance(kind, n, 8);
            group.throughput(Throughput::Elements((r.s().len() * r.p().len()) as u64));
            group.bench_with_input(
                BenchmarkId::new(kind.to_string(), n),
                &r,
                |b, r| b.iter(|| black_box(episode_dp(r.s(), r.p()).unwrap())),
            );
        }
    }
    group.finish();
}

fn bench_greedy(c: &mut Criterion) {
    let mut group = c.benchmark_group("episode_per_start_greedy");
    for n in [16usize, 32, 64] {
        let r = balanced_instance(AlphabetKind::Four, n, 8);
        group.bench_with_input(BenchmarkId::from_parameter(n), &r, |b, r| {
            b.iter(|| black_box(episode_per_start_greedy(r.s(), r.p()).unwrap()))
        });
    }
    group.finish();
}

fn bench_bruteforce(c: &mut Criterion) {
    let mut group = c.benchmark_group("episode_bruteforce");
    group.sample_size(10);
    for n in [4usize, 8] {
        let r = balanced_instance(AlphabetKind::Four, n, 4);
        group.bench_with_input(BenchmarkId::from_parameter(n), &r, |b, r| {
            b.iter(|| black_box(episode_bruteforce(r.s(), r.p()).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_dp, bench_greedy, bench_bruteforce);
criterion_main!(benches);
