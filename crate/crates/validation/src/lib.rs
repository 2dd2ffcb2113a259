//! Independent checks shared by the acceptance gate: exhaustive and sampled
//! field-axiom suites, adversarial code builders, and a small result sheet
//! for criteria made of several sub-checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rsinsdel::code::RsCode;
use rsinsdel::field::{Field, TowerElement, TowerField};

/// Outcome of one named sub-check.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Sub-checks collected for one criterion.
#[derive(Debug, Default)]
pub struct Sheet {
    pub checks: Vec<Check>,
}

impl Sheet {
    pub fn check(
        &mut self,
        name: impl Into<String>,
        passed: bool,
        detail: impl Into<String>,
    ) -> bool {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
        passed
    }

    pub fn eq<T: PartialEq + std::fmt::Debug>(
        &mut self,
        name: impl Into<String>,
        got: T,
        want: T,
    ) -> bool {
        let detail = format!("got {got:?}, want {want:?}");
        self.check(name, got == want, detail)
    }

    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }
}

/// Addition and multiplication tables of a small field, indexed by
/// canonical integers and filled from the field's own operations.
struct Tables {
    size: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
}

impl Tables {
    fn new<F: Field>(f: &F) -> Self {
        let size = f.order() as usize;
        assert!(
            size <= 1 << 16,
            "table suite is for fields of at most 2^16 elements"
        );
        let els: Vec<F::Element> = f.elements().collect();
        let mut add = vec![0; size * size];
        let mut mul = vec![0; size * size];
        for (i, &a) in els.iter().enumerate() {
            for (j, &b) in els.iter().enumerate() {
                add[i * size + j] = f.encode(f.add(a, b)) as u16;
                mul[i * size + j] = f.encode(f.mul(a, b)) as u16;
            }
        }
        Tables { size, add, mul }
    }

    #[inline]
    fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }
}

/// Every field axiom over every element, pair and triple. Pairwise results
/// come from the field's operations directly; triple identities are checked
/// on tables of those results, which covers the same operations without
/// recomputing them. Returns the first failure.
pub fn exhaustive_axioms<F: Field>(f: &F) -> Result<u64, String> {
    let q = f.order();
    let els: Vec<F::Element> = f.elements().collect();
    if els.len() as u64 != q {
        return Err(format!("enumerated {} elements, expected {q}", els.len()));
    }
    let (zero, one) = (f.zero(), f.one());
    if f.encode(zero) != 0 || f.encode(one) != 1 {
        return Err("zero and one must encode as 0 and 1".into());
    }
    if f.decode(q).is_ok() {
        return Err(format!("decode accepted out-of-range value {q}"));
    }
    if f.inv(zero).is_ok() {
        return Err("zero has an inverse".into());
    }
    let p = f.characteristic();
    for (v, &a) in els.iter().enumerate() {
        let ctx = |what: &str| format!("{what} fails at {v}");
        if f.encode(a) != v as u64 || f.decode(v as u64) != Ok(a) {
            return Err(ctx("encoding roundtrip"));
        }
        if f.add(a, zero) != a || f.mul(a, one) != a || f.mul(a, zero) != zero {
            return Err(ctx("identity"));
        }
        if f.add(a, f.neg(a)) != zero {
            return Err(ctx("additive inverse"));
        }
        if a != zero {
            let inv = f.inv(a).map_err(|e| ctx(&e.to_string()))?;
            if f.mul(a, inv) != one || f.pow(a, q - 1) != one {
                return Err(ctx("multiplicative inverse"));
            }
        }
        let mut sum = zero;
        for _ in 0..p {
            sum = f.add(sum, a);
        }
        if sum != zero {
            return Err(ctx("characteristic"));
        }
    }
    for (i, &a) in els.iter().enumerate() {
        for (j, &b) in els.iter().enumerate() {
            let ctx = |what: &str| format!("{what} fails at ({i}, {j})");
            if f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a) {
                return Err(ctx("commutativity"));
            }
            if f.add(f.sub(a, b), b) != a {
                return Err(ctx("subtraction"));
            }
            if b != zero && f.mul(f.div(a, b).map_err(|e| ctx(&e.to_string()))?, b) != a {
                return Err(ctx("division"));
            }
            if a != zero && b != zero && f.mul(a, b) == zero {
                return Err(ctx("zero divisor"));
            }
            if f.pow(f.add(a, b), p) != f.add(f.pow(a, p), f.pow(b, p)) {
                return Err(ctx("Frobenius"));
            }
        }
    }
    let t = Tables::new(f);
    let n = t.size;
    for a in 0..n {
        for b in 0..n {
            let (ab_add, ab_mul) = (t.add(a, b), t.mul(a, b));
            for c in 0..n {
                if t.add(ab_add, c) != t.add(a, t.add(b, c)) {
                    return Err(format!("additive associativity fails at ({a}, {b}, {c})"));
                }
                if t.mul(ab_mul, c) != t.mul(a, t.mul(b, c)) {
                    return Err(format!(
                        "multiplicative associativity fails at ({a}, {b}, {c})"
                    ));
                }
                if t.mul(a, t.add(b, c)) != t.add(ab_mul, t.mul(a, c)) {
                    return Err(format!("distributivity fails at ({a}, {b}, {c})"));
                }
            }
        }
    }
    Ok((n as u64).pow(3))
}

/// Field axioms on `count` random triples drawn from a seeded stream.
pub fn sampled_axioms<F: Field>(f: &F, count: usize, seed: u64) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = f.order();
    let (zero, one) = (f.zero(), f.one());
    for round in 0..count {
        let mut draw = || f.decode(rng.random_range(0..q)).expect("in range");
        let (a, b, c) = (draw(), draw(), draw());
        let ctx = |what: &str| format!("{what} fails on sample {round}: {a:?} {b:?} {c:?}");
        let checks = [
            (
                "additive associativity",
                f.add(f.add(a, b), c) == f.add(a, f.add(b, c)),
            ),
            (
                "multiplicative associativity",
                f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)),
            ),
            (
                "commutativity",
                f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a),
            ),
            (
                "distributivity",
                f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)),
            ),
            ("identity", f.add(a, zero) == a && f.mul(a, one) == a),
            ("additive inverse", f.add(a, f.neg(a)) == zero),
            ("encoding roundtrip", f.decode(f.encode(a)) == Ok(a)),
        ];
        if let Some((what, _)) = checks.iter().find(|(_, ok)| !ok) {
            return Err(ctx(what));
        }
        if a != zero {
            let inv = f.inv(a).map_err(|e| ctx(&e.to_string()))?;
            if f.mul(a, inv) != one {
                return Err(ctx("multiplicative inverse"));
            }
            if f.div(f.mul(b, a), a) != Ok(b) {
                return Err(ctx("division"));
            }
        }
    }
    Ok(count)
}

/// `α_i = a + b·i` for `i = 1..=n`: three consecutive points are collinear
/// in every sense the determinant test can see.
pub fn progression_code(tower: &TowerField, n: usize, a: TowerElement, b: TowerElement) -> RsCode {
    let alpha = (1..=n as u64)
        .map(|i| {
            let scalar = tower
                .decode(i % tower.characteristic())
                .expect("prime subfield");
            tower.add(a, tower.mul(b, scalar))
        })
        .collect();
    RsCode::new(tower.clone(), 2, alpha).expect("distinct points while n < p")
}

/// Four points where the last one is solved for so that the pair
/// `I = (1,2,3)`, `J = (2,3,4)` has a vanishing determinant:
/// `α_4 = α_3 - (α_2 - α_3)^2 / (α_1 - α_2)`. Seeds that give repeated
/// points are skipped.
pub fn forced_collision_code(tower: &TowerField, seed: u64) -> RsCode {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut draw = || {
            tower
                .decode(rng.random_range(0..tower.order()))
                .expect("in range")
        };
        let (a1, a2, a3) = (draw(), draw(), draw());
        if a1 == a2 {
            continue;
        }
        let d23 = tower.sub(a2, a3);
        let a4 = tower.sub(
            a3,
            tower
                .div(tower.mul(d23, d23), tower.sub(a1, a2))
                .expect("a1 != a2"),
        );
        if let Ok(code) = RsCode::new(tower.clone(), 2, vec![a1, a2, a3, a4]) {
            return code;
        }
    }
}

/// Distinct uniformly random evaluation points.
pub fn random_code(tower: &TowerField, n: usize, seed: u64) -> RsCode {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut alpha: Vec<TowerElement> = Vec::with_capacity(n);
    while alpha.len() < n {
        let x = tower
            .decode(rng.random_range(0..tower.order()))
            .expect("in range");
        if !alpha.contains(&x) {
            alpha.push(x);
        }
    }
    RsCode::new(tower.clone(), 2, alpha).expect("distinct points")
}
