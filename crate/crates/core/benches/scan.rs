use criterion::{criterion_group, criterion_main, Criterion};
use parallelotope::constructions::sum_cell24;
use parallelotope::exec;
use parallelotope::polytope_core::venkov_parallelotope;

const MASKS: std::ops::Range<u32> = 0..256;

fn scan_one(m: u32) -> bool {
    venkov_parallelotope(&sum_cell24(m as u16).expect("sum builds")).is_parallelotope()
}

fn scan(c: &mut Criterion) {
    let mut g = c.benchmark_group("sum-scan-256");
    g.sample_size(10);
    g.bench_function("sequential", |b| b.iter(|| MASKS.map(scan_one).filter(|&x| x).count()));
    g.bench_function("pool-1-thread", |b| {
        b.iter(|| exec::with_jobs(Some(1), || exec::map_range(MASKS, scan_one)).into_iter().filter(|&x| x).count())
    });
    g.bench_function("pool-default", |b| {
        b.iter(|| exec::map_range(MASKS, scan_one).into_iter().filter(|&x| x).count())
    });
    g.finish();
}

criterion_group!(benches, scan);
criterion_main!(benches);
