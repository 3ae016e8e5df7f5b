use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use crorder::enumerate::{Enumeration, Execution};
use crorder::{CartanType, RootSystem};

fn modes() -> Vec<(&'static str, Execution)> {
    vec![
        ("sequential", Execution::Sequential),
        #[cfg(feature = "parallel")]
        ("parallel", Execution::Parallel),
    ]
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    for (t, r) in [(CartanType::B, 3), (CartanType::C, 3), (CartanType::D, 4)] {
        let e = Enumeration::new(Arc::new(RootSystem::build(t, r).unwrap()), None);
        for (name, exec) in modes() {
            group.bench_with_input(BenchmarkId::new(name, format!("{t}{r}")), &exec, |b, &exec| {
                b.iter(|| black_box(e.run(exec)).len())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, enumeration);
criterion_main!(benches);
