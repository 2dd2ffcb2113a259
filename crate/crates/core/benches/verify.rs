use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rsinsdel::code::{construct_code, ConstructionKind, DeltaOrder};
use rsinsdel::field::{BaseField, Field};
use rsinsdel::verify::{verify_code_with, VerifyMode, VerifyOptions};
use rsinsdel::Execution;

fn verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for (p, e, kind, n) in [
        (13, 1, ConstructionKind::SquareGamma, 12),
        (2, 4, ConstructionKind::InverseGamma, 15),
        (23, 1, ConstructionKind::SquareGamma, 22),
    ] {
        let base = BaseField::new(p, e, None).unwrap();
        let code = construct_code(&base, n, kind, &DeltaOrder::Canonical).unwrap();
        for execution in [Execution::Sequential, Execution::Parallel] {
            let options = VerifyOptions {
                mode: VerifyMode::FirstWitness,
                execution,
            };
            let id = BenchmarkId::new(
                format!("{execution:?}"),
                format!("GF({})/n={n}", base.order()),
            );
            group.bench_with_input(id, &code, |b, code| {
                b.iter(|| black_box(verify_code_with(code, options)))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, verify);
criterion_main!(benches);
