//! Compares the rayon-backed folds against their sequential fallbacks.

use criterion::{criterion_group, criterion_main, Criterion};

use wsym_core::enumeration::{orbit_census, orbit_census_seq, zhg, zhg_seq};
use wsym_core::groups::{induced_edge_group, PermGroup, DEFAULT_MAX_ORDER};

fn bench_orbit_census(c: &mut Criterion) {
    let g = induced_edge_group(4, None).unwrap();
    let mut group = c.benchmark_group("orbit_census_edge4_k2");
    group.bench_function("parallel", |b| {
        b.iter(|| orbit_census(&g, 2, None).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| orbit_census_seq(&g, 2, None).unwrap())
    });
    group.finish();
}

fn bench_zhg(c: &mut Criterion) {
    let h = PermGroup::closure(
        &[wsym_core::combinat::Permutation::new(vec![2, 3, 1]).unwrap()],
        DEFAULT_MAX_ORDER,
    )
    .unwrap();
    let g = PermGroup::symmetric(5);
    let mut group = c.benchmark_group("zhg_c3_s5");
    group.sample_size(20);
    group.bench_function("parallel", |b| b.iter(|| zhg(&h, &g).unwrap()));
    group.bench_function("sequential", |b| b.iter(|| zhg_seq(&h, &g).unwrap()));
    group.finish();
}

criterion_group!(benches, bench_orbit_census, bench_zhg);
criterion_main!(benches);
