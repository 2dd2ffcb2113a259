use proptest::prelude::*;
use rsinsdel::field::{poly, prime_power, BaseField, Field, TowerField};

fn base(p: u64, e: u32) -> BaseField {
    BaseField::new(p, e, None).unwrap()
}

/// Axioms over all pairs and triples; only for very small fields.
fn brute_force_axioms<F: Field>(f: &F) {
    let els: Vec<_> = f.elements().collect();
    assert_eq!(els.len() as u64, f.order());
    for &a in &els {
        assert_eq!(f.add(a, f.neg(a)), f.zero());
        if a != f.zero() {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        }
        for &b in &els {
            assert_eq!(f.mul(a, b), f.mul(b, a));
            for &c in &els {
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
    }
}

#[test]
fn tiny_fields_and_towers() {
    for (p, e) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
        let b = base(p, e);
        brute_force_axioms(&b);
        brute_force_axioms(&TowerField::new(b).unwrap());
    }
}

#[test]
fn multiplicative_group_is_cyclic() {
    // some element must have order exactly q - 1
    for (p, e) in [(7, 1), (2, 4), (3, 3), (13, 1)] {
        let t = TowerField::new(base(p, e)).unwrap();
        let m = t.order() - 1;
        let factors: Vec<u64> = (2..=m)
            .filter(|d| m % d == 0 && prime_power(*d).is_some_and(|(r, x)| x == 1 && r == *d))
            .collect();
        let generator = t
            .elements()
            .skip(1)
            .find(|&g| factors.iter().all(|&r| t.pow(g, m / r) != t.one()));
        assert!(generator.is_some(), "GF({}) has no generator", t.order());
    }
}

#[test]
fn irreducible_cubic_count() {
    // (q^3 - q) / 3 monic irreducible cubics, counted by a root scan
    for (p, e) in [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (3, 2)] {
        let b = base(p, e);
        let q = b.order();
        let els: Vec<_> = b.elements().collect();
        let mut count = 0;
        let mut first = None;
        for c2 in &els {
            for c1 in &els {
                for c0 in &els {
                    let f = [*c0, *c1, *c2, b.one()];
                    if els.iter().all(|&x| poly::eval(&b, &f, x) != b.zero()) {
                        count += 1;
                        first.get_or_insert(f.to_vec());
                    }
                }
            }
        }
        assert_eq!(count, (q * q * q - q) / 3, "GF({q})");
        assert_eq!(
            poly::canonical_irreducible(&b, 3).unwrap(),
            first.unwrap(),
            "GF({q})"
        );
    }
}

#[test]
fn frobenius_permutes_the_roots_of_the_cubic() {
    for (p, e) in [(5, 1), (2, 3), (3, 2)] {
        let t = TowerField::new(base(p, e)).unwrap();
        let q = t.base().order();
        let g = t.gamma();
        let conj = [g, t.pow(g, q), t.pow(g, q * q)];
        assert_eq!(t.pow(g, q * q * q), g);
        assert!(conj[0] != conj[1] && conj[1] != conj[2] && conj[0] != conj[2]);
        let min: Vec<_> = t
            .min_poly()
            .iter()
            .map(|&c| t.embed(t.base().decode(c).unwrap()))
            .collect();
        for r in conj {
            assert_eq!(poly::eval(&t, &min, r), t.zero());
        }
    }
}

#[test]
fn subfield_embedding_is_fixed_by_frobenius() {
    let t = TowerField::new(base(3, 2)).unwrap();
    let q = t.base().order();
    for a in t.base().elements() {
        assert_eq!(t.pow(t.embed(a), q), t.embed(a));
    }
}

fn towers() -> Vec<TowerField> {
    [(31, 1), (2, 8), (3, 5), (101, 1)]
        .into_iter()
        .map(|(p, e)| TowerField::new(base(p, e)).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn tower_ring_laws(which in 0usize..4, x in any::<u64>(), y in any::<u64>(), z in any::<u64>()) {
        let t = &towers()[which];
        let q = t.order();
        let (a, b, c) = (t.decode(x % q).unwrap(), t.decode(y % q).unwrap(), t.decode(z % q).unwrap());
        prop_assert_eq!(t.mul(t.mul(a, b), c), t.mul(a, t.mul(b, c)));
        prop_assert_eq!(t.add(t.add(a, b), c), t.add(a, t.add(b, c)));
        prop_assert_eq!(t.mul(a, t.add(b, c)), t.add(t.mul(a, b), t.mul(a, c)));
        prop_assert_eq!(t.sub(t.add(a, b), b), a);
        prop_assert_eq!(t.decode(t.encode(a)).unwrap(), a);
        if b != t.zero() {
            prop_assert_eq!(t.mul(t.div(a, b).unwrap(), b), a);
            prop_assert_eq!(t.pow(b, q - 1), t.one());
        }
    }

    #[test]
    fn base_field_laws(which in 0usize..5, x in any::<u64>(), y in any::<u64>(), z in any::<u64>()) {
        let (p, e) = [(2, 16), (3, 9), (65_521, 1), (7, 5), (4_294_967_291, 1)][which];
        let f = base(p, e);
        let q = f.order();
        let (a, b, c) = (f.decode(x % q).unwrap(), f.decode(y % q).unwrap(), f.decode(z % q).unwrap());
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        if a != f.zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        }
        prop_assert_eq!(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
    }
}
