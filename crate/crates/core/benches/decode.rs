use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rsinsdel::channel::{apply_edits, random_edit_script};
use rsinsdel::code::{construct_code, ConstructionKind, DeltaOrder};
use rsinsdel::decode::{decode_k2_with, BruteForceOracle};
use rsinsdel::field::BaseField;
use rsinsdel::Execution;

fn decode(c: &mut Criterion) {
    let mut group = c.benchmark_group("decode");
    for (p, n) in [(11, 10), (17, 16)] {
        let base = BaseField::prime(p).unwrap();
        let code = construct_code(
            &base,
            n,
            ConstructionKind::SquareGamma,
            &DeltaOrder::Canonical,
        )
        .unwrap();
        let f = code.message_from_index(12345);
        let word = code.encode(&f).unwrap().into_symbols();
        let t = n - 3;
        let script = random_edit_script(n, t / 2, t - t / 2, 1, code.tower()).unwrap();
        let received = apply_edits(&word, &script).unwrap();
        for exec in [Execution::Sequential, Execution::Parallel] {
            let id = BenchmarkId::new(format!("{exec:?}"), format!("n={n}"));
            group.bench_with_input(id, &received, |b, y| {
                b.iter(|| black_box(decode_k2_with(&code, y, exec).unwrap()))
            });
        }
    }
    group.finish();

    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    let base = BaseField::prime(5).unwrap();
    let code = construct_code(
        &base,
        4,
        ConstructionKind::SquareGamma,
        &DeltaOrder::Canonical,
    )
    .unwrap();
    let oracle = BruteForceOracle::new(&code).unwrap();
    let received = code
        .encode(&code.message_from_index(999))
        .unwrap()
        .into_symbols();
    for exec in [Execution::Sequential, Execution::Parallel] {
        group.bench_function(
            BenchmarkId::new(format!("{exec:?}"), "decode GF(5)/n=4"),
            |b| b.iter(|| black_box(oracle.decode(&received, exec).unwrap())),
        );
    }
    group.finish();
}

criterion_group!(benches, decode);
criterion_main!(benches);
