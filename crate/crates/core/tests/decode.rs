use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rsinsdel::channel::{apply_edits, random_edit_script, EditOp, EditScript};
use rsinsdel::code::{construct_code, ConstructionKind, DeltaOrder, RsCode};
use rsinsdel::decode::{decode_k2, decode_k2_with, oracle_decode, BruteForceOracle, DecodeResult};
use rsinsdel::field::{BaseField, Field, TowerElement, TowerField};
use rsinsdel::Execution;

fn square(p: u64, n: usize) -> RsCode {
    let b = BaseField::prime(p).unwrap();
    construct_code(&b, n, ConstructionKind::SquareGamma, &DeltaOrder::Canonical).unwrap()
}

fn random_word(t: &TowerField, len: usize, rng: &mut ChaCha8Rng) -> Vec<TowerElement> {
    (0..len)
        .map(|_| t.decode(rng.random_range(0..t.order())).unwrap())
        .collect()
}

/// Outcomes on arbitrary received words, including ones far from the code.
#[test]
fn decoder_matches_oracle_on_random_words() {
    let code = square(5, 4);
    let t = code.tower();
    let oracle = BruteForceOracle::new(&code).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut decoded = 0;
    for round in 0..400 {
        let y = if round % 2 == 0 {
            random_word(t, rng.random_range(0..8), &mut rng)
        } else {
            // a codeword with a few random edits, often beyond the radius
            let f = code.message_from_index(rng.random_range(0..code.message_count()));
            let w = code.encode(&f).unwrap().into_symbols();
            let script = random_edit_script(
                4,
                rng.random_range(0..3),
                rng.random_range(0..3),
                rng.random(),
                t,
            )
            .unwrap();
            apply_edits(&w, &script).unwrap()
        };
        let fast = decode_k2(&code, &y).unwrap();
        assert_eq!(
            fast,
            oracle.decode(&y, Execution::Sequential).unwrap(),
            "{y:?}"
        );
        decoded += usize::from(matches!(fast, DecodeResult::Decoded(_)));
    }
    assert!(decoded > 50 && decoded < 400, "{decoded}");
}

/// On codes that fail verification the decoder and the oracle report the
/// same ambiguity.
#[test]
fn ambiguity_on_broken_codes_matches_oracle() {
    let t = TowerField::new(BaseField::prime(3).unwrap()).unwrap();
    let code = RsCode::new(
        t.clone(),
        2,
        (0..5).map(|v| t.decode(v * 3 + 1).unwrap()).collect(),
    )
    .unwrap();
    let oracle = BruteForceOracle::new(&code).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut ambiguous = 0;
    for _ in 0..300 {
        let y = random_word(&t, rng.random_range(2..6), &mut rng);
        let fast = decode_k2(&code, &y).unwrap();
        assert_eq!(fast, oracle.decode(&y, Execution::Sequential).unwrap());
        ambiguous += usize::from(matches!(fast, DecodeResult::AmbiguityDetected(_)));
    }
    assert!(ambiguous > 0);
}

#[test]
fn every_deletion_pattern_on_the_gf7_code() {
    let code = square(7, 6);
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..10 {
        let f = code.message_from_index(rng.random_range(0..code.message_count()));
        let w = code.encode(&f).unwrap().into_symbols();
        for mask in 0u32..1 << 6 {
            if mask.count_ones() > 3 {
                continue;
            }
            let ops = (0..6)
                .rev()
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| EditOp::Delete(b + 1));
            let y = apply_edits(&w, &EditScript::new(ops.collect())).unwrap();
            assert_eq!(
                decode_k2(&code, &y).unwrap(),
                DecodeResult::Decoded(f.clone())
            );
        }
    }
}

#[test]
fn parallel_and_sequential_agree() {
    let code = square(13, 12);
    let t = code.tower();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..20 {
        let y = random_word(t, rng.random_range(3..14), &mut rng);
        assert_eq!(
            decode_k2_with(&code, &y, Execution::Sequential).unwrap(),
            decode_k2_with(&code, &y, Execution::Parallel).unwrap()
        );
    }
}

#[test]
fn beyond_the_radius() {
    // two deletions from a length-4 codeword leave a word at distance at
    // least 2 from every codeword, so nothing is within radius 1
    let code = square(5, 4);
    let f = code.message_from_index(4321);
    let w = code.encode(&f).unwrap().into_symbols();
    let y = apply_edits(
        &w,
        &EditScript::new(vec![EditOp::Delete(1), EditOp::Delete(1)]),
    )
    .unwrap();
    assert_eq!(decode_k2(&code, &y).unwrap(), DecodeResult::TooManyErrors);
    assert_eq!(
        oracle_decode(&code, &y).unwrap(),
        DecodeResult::TooManyErrors
    );
    // with n - 2 mixed edits the transmitted message may be lost, but the
    // decoder still reports exactly what lies within the radius
    let big = square(7, 6);
    let oracle = BruteForceOracle::new(&big).unwrap();
    for seed in 0..40 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = big.message_from_index(rng.random_range(0..big.message_count()));
        let w = big.encode(&f).unwrap().into_symbols();
        let script = random_edit_script(6, 2, 2, seed, big.tower()).unwrap();
        let y = apply_edits(&w, &script).unwrap();
        assert_eq!(
            decode_k2(&big, &y).unwrap(),
            oracle.decode(&y, Execution::Sequential).unwrap()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn recovers_within_radius(
        which in 0usize..3,
        msg in any::<u64>(),
        t_del in 0usize..10,
        t_ins in 0usize..10,
        seed in any::<u64>(),
    ) {
        let code = [square(7, 6), square(11, 10), square(13, 12)][which].clone();
        let radius = code.n() - 3;
        let t_del = t_del.min(radius);
        let t_ins = t_ins.min(radius - t_del);
        let f = code.message_from_index(u128::from(msg) % code.message_count());
        let w = code.encode(&f).unwrap().into_symbols();
        let script = random_edit_script(code.n(), t_del, t_ins, seed, code.tower()).unwrap();
        let y = apply_edits(&w, &script).unwrap();
        prop_assert_eq!(decode_k2(&code, &y).unwrap(), DecodeResult::Decoded(f));
    }
}
