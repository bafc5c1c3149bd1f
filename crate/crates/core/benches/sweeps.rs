use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use tollwalk_core::harness::{corpus_up_to, sweep_graphs, GraphSource, TheoremId};
use tollwalk_core::nondef::build_g_d_prime;
use tollwalk_core::tollwalk::toll_transit_with;
use tollwalk_core::Exec;

fn exec_modes() -> [(&'static str, Exec); 2] {
    [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)]
}

fn theorem_sweep(c: &mut Criterion) {
    let corpus = corpus_up_to(6, GraphSource::Builtin, Exec::Parallel).unwrap();
    let ids = [TheoremId::ThmJcChordal, TheoremId::CorB1pAtfree];
    let mut group = c.benchmark_group("sweep_n6");
    for (name, exec) in exec_modes() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| sweep_graphs(&ids, &corpus, exec).unwrap())
        });
    }
    group.finish();
}

fn gadget_transit(c: &mut Criterion) {
    let g = build_g_d_prime(6).unwrap();
    let mut group = c.benchmark_group("toll_transit_gp6");
    for (name, exec) in exec_modes() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| toll_transit_with(&g, exec).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, theorem_sweep, gadget_transit);
criterion_main!(benches);
