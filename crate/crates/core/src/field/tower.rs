use std::fmt;

use super::{poly, BaseElement, BaseField, Field};
use crate::error::{Error, Result};

/// Element `c0 + c1*γ + c2*γ^2` of GF(q^3).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TowerElement {
    c: [BaseElement; 3],
}

impl TowerElement {
    /// Coordinates `(c0, c1, c2)` in the basis `{1, γ, γ^2}`.
    pub fn coeffs(self) -> [BaseElement; 3] {
        self.c
    }
}

impl fmt::Debug for TowerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},{:?},{:?})", self.c[0], self.c[1], self.c[2])
    }
}

/// The cubic extension GF(q^3) = GF(q)[γ] of a base field, where γ is a
/// root of a monic irreducible cubic over GF(q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerField {
    base: BaseField,
    /// `(c0, c1, c2)` of `x^3 + c2 x^2 + c1 x + c0`.
    min_poly: [BaseElement; 3],
    /// `γ^3 = reduce[0] + reduce[1] γ + reduce[2] γ^2`.
    reduce: [BaseElement; 3],
}

impl TowerField {
    /// Tower over `base` generated by a root of the canonical irreducible cubic.
    pub fn new(base: BaseField) -> Result<Self> {
        if base.order().checked_pow(3).is_none() {
            return Err(Error::TowerTooLarge(base.order()));
        }
        let cubic = poly::canonical_irreducible(&base, 3)?;
        Self::from_cubic(base, [cubic[0], cubic[1], cubic[2]])
    }

    /// Tower generated by a root of the given monic cubic, passed as
    /// canonical integers low degree first (`[c0, c1, c2, 1]` or `[c0, c1, c2]`).
    pub fn with_min_poly(base: BaseField, coeffs: &[u64]) -> Result<Self> {
        let low = match coeffs {
            [c0, c1, c2] | [c0, c1, c2, 1] => [*c0, *c1, *c2],
            _ => {
                return Err(Error::MalformedModulus(format!(
                    "{coeffs:?} is not a monic cubic"
                )))
            }
        };
        let mut c = [BaseElement::default(); 3];
        for (slot, &v) in c.iter_mut().zip(&low) {
            *slot = base.decode(v)?;
        }
        Self::from_cubic(base, c)
    }

    fn from_cubic(base: BaseField, c: [BaseElement; 3]) -> Result<Self> {
        if base.order().checked_pow(3).is_none() {
            return Err(Error::TowerTooLarge(base.order()));
        }
        let cubic = [c[0], c[1], c[2], base.one()];
        if !poly::is_irreducible(&base, &cubic) {
            return Err(Error::ReducibleModulus(poly::format(&base, &cubic)));
        }
        let reduce = [base.neg(c[0]), base.neg(c[1]), base.neg(c[2])];
        Ok(TowerField {
            base,
            min_poly: c,
            reduce,
        })
    }

    pub fn base(&self) -> &BaseField {
        &self.base
    }

    /// Minimal polynomial of γ as canonical integers, low degree first,
    /// including the leading `1`.
    pub fn min_poly(&self) -> [u64; 4] {
        [
            self.min_poly[0].value(),
            self.min_poly[1].value(),
            self.min_poly[2].value(),
            1,
        ]
    }

    pub fn min_poly_string(&self) -> String {
        let m = self.min_poly;
        poly::format(&self.base, &[m[0], m[1], m[2], self.base.one()])
    }

    /// The generator γ.
    pub fn gamma(&self) -> TowerElement {
        self.from_coeffs(self.base.zero(), self.base.one(), self.base.zero())
    }

    pub fn from_coeffs(&self, c0: BaseElement, c1: BaseElement, c2: BaseElement) -> TowerElement {
        TowerElement { c: [c0, c1, c2] }
    }

    /// The ring embedding `a -> (a, 0, 0)`.
    pub fn embed(&self, a: BaseElement) -> TowerElement {
        self.from_coeffs(a, self.base.zero(), self.base.zero())
    }

    fn scale(&self, a: TowerElement, s: BaseElement) -> TowerElement {
        let b = &self.base;
        TowerElement {
            c: [b.mul(a.c[0], s), b.mul(a.c[1], s), b.mul(a.c[2], s)],
        }
    }
}

impl Field for TowerField {
    type Element = TowerElement;

    fn order(&self) -> u64 {
        self.base.order().pow(3)
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn zero(&self) -> TowerElement {
        TowerElement::default()
    }

    fn one(&self) -> TowerElement {
        self.embed(self.base.one())
    }

    #[inline]
    fn add(&self, a: TowerElement, b: TowerElement) -> TowerElement {
        let f = &self.base;
        TowerElement {
            c: [
                f.add(a.c[0], b.c[0]),
                f.add(a.c[1], b.c[1]),
                f.add(a.c[2], b.c[2]),
            ],
        }
    }

    #[inline]
    fn sub(&self, a: TowerElement, b: TowerElement) -> TowerElement {
        let f = &self.base;
        TowerElement {
            c: [
                f.sub(a.c[0], b.c[0]),
                f.sub(a.c[1], b.c[1]),
                f.sub(a.c[2], b.c[2]),
            ],
        }
    }

    #[inline]
    fn neg(&self, a: TowerElement) -> TowerElement {
        let f = &self.base;
        TowerElement {
            c: [f.neg(a.c[0]), f.neg(a.c[1]), f.neg(a.c[2])],
        }
    }

    #[inline]
    fn mul(&self, a: TowerElement, b: TowerElement) -> TowerElement {
        let f = &self.base;
        let [a0, a1, a2] = a.c;
        let [b0, b1, b2] = b.c;
        let mut r0 = f.mul(a0, b0);
        let mut r1 = f.add(f.mul(a0, b1), f.mul(a1, b0));
        let mut r2 = f.add(f.add(f.mul(a0, b2), f.mul(a1, b1)), f.mul(a2, b0));
        let mut r3 = f.add(f.mul(a1, b2), f.mul(a2, b1));
        let r4 = f.mul(a2, b2);
        let [g0, g1, g2] = self.reduce;
        // γ^4 = γ * γ^3
        if r4 != f.zero() {
            r1 = f.add(r1, f.mul(r4, g0));
            r2 = f.add(r2, f.mul(r4, g1));
            r3 = f.add(r3, f.mul(r4, g2));
        }
        if r3 != f.zero() {
            r0 = f.add(r0, f.mul(r3, g0));
            r1 = f.add(r1, f.mul(r3, g1));
            r2 = f.add(r2, f.mul(r3, g2));
        }
        TowerElement { c: [r0, r1, r2] }
    }

    /// Extended Euclid on the coordinate polynomial modulo the minimal cubic.
    fn inv(&self, a: TowerElement) -> Result<TowerElement> {
        if a == self.zero() {
            return Err(Error::DivisionByZero);
        }
        let f = &self.base;
        let m = [
            self.min_poly[0],
            self.min_poly[1],
            self.min_poly[2],
            f.one(),
        ];
        let inv = poly::inv_mod(f, &a.c, &m).expect("minimal polynomial is irreducible");
        let mut c = [f.zero(); 3];
        c[..inv.len()].copy_from_slice(&inv);
        Ok(TowerElement { c })
    }

    fn div(&self, a: TowerElement, b: TowerElement) -> Result<TowerElement> {
        // division by a base-field scalar skips the Euclid round trip
        if b.c[1] == self.base.zero() && b.c[2] == self.base.zero() {
            let s = self.base.inv(b.c[0])?;
            return Ok(self.scale(a, s));
        }
        Ok(self.mul(a, self.inv(b)?))
    }

    fn encode(&self, a: TowerElement) -> u64 {
        let q = self.base.order();
        a.c[0].value() + q * (a.c[1].value() + q * a.c[2].value())
    }

    fn decode(&self, value: u64) -> Result<TowerElement> {
        let q = self.base.order();
        let order = self.order();
        if value >= order {
            return Err(Error::ElementOutOfRange { value, order });
        }
        let b = &self.base;
        Ok(TowerElement {
            c: [
                b.decode(value % q)?,
                b.decode(value / q % q)?,
                b.decode(value / (q * q))?,
            ],
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tower(p: u64, e: u32) -> TowerField {
        TowerField::new(BaseField::new(p, e, None).unwrap()).unwrap()
    }

    fn t(field: &TowerField, c: [u64; 3]) -> TowerElement {
        let b = field.base();
        field.from_coeffs(
            b.decode(c[0]).unwrap(),
            b.decode(c[1]).unwrap(),
            b.decode(c[2]).unwrap(),
        )
    }

    #[test]
    fn canonical_towers() {
        let t7 = tower(7, 1);
        assert_eq!(t7.order(), 343);
        assert_eq!(t7.min_poly(), [2, 0, 0, 1]);
        assert_eq!(t7.min_poly_string(), "x^3+2");
        let g = t7.gamma();
        assert_eq!(t7.pow(g, 3), t(&t7, [5, 0, 0]));
        let t2 = tower(2, 1);
        assert_eq!(t2.order(), 8);
        assert_eq!(t2.min_poly_string(), "x^3+x+1");
    }

    #[test]
    fn gamma_is_a_root_of_its_minimal_polynomial() {
        for (p, e) in [(2, 1), (7, 1), (2, 3), (3, 2), (31, 1)] {
            let f = tower(p, e);
            let m = f.min_poly();
            let g = f.gamma();
            let b = f.base();
            let coeffs: Vec<_> = m.iter().map(|&c| f.embed(b.decode(c).unwrap())).collect();
            assert_eq!(poly::eval(&f, &coeffs, g), f.zero());
        }
    }

    #[test]
    fn tower_examples() {
        let f = tower(7, 1);
        assert_eq!(f.add(t(&f, [1, 2, 3]), t(&f, [6, 5, 4])), f.zero());
        assert_eq!(f.encode(t(&f, [1, 2, 3])), 162);
        assert_eq!(f.decode(162).unwrap(), t(&f, [1, 2, 3]));
        assert!(f.decode(343).is_err());
        assert_eq!(f.inv(f.zero()), Err(Error::DivisionByZero));
        let a = t(&f, [3, 1, 4]);
        assert_eq!(f.pow(a, 342), f.one());
        assert_eq!(f.pow(f.zero(), 0), f.one());
    }

    #[test]
    fn embedding_is_a_ring_homomorphism() {
        let f = tower(2, 3);
        let b = f.base().clone();
        assert_eq!(f.embed(b.zero()), f.zero());
        assert_eq!(f.embed(b.one()), f.one());
        for x in b.elements() {
            for y in b.elements() {
                assert_eq!(f.mul(f.embed(x), f.embed(y)), f.embed(b.mul(x, y)));
                assert_eq!(f.add(f.embed(x), f.embed(y)), f.embed(b.add(x, y)));
            }
        }
    }

    #[test]
    fn inversion_routes_agree() {
        let f = tower(5, 1);
        for a in f.elements().skip(1) {
            let inv = f.inv(a).unwrap();
            assert_eq!(f.mul(a, inv), f.one());
            assert_eq!(inv, f.pow(a, f.order() - 2));
            assert_eq!(f.div(a, a).unwrap(), f.one());
        }
    }

    #[test]
    fn custom_minimal_polynomials() {
        let b = BaseField::prime(7).unwrap();
        // x^3+3 also has no root: cubes mod 7 are {0,1,6}
        let f = TowerField::with_min_poly(b.clone(), &[3, 0, 0, 1]).unwrap();
        assert_eq!(f.min_poly_string(), "x^3+3");
        assert!(matches!(
            TowerField::with_min_poly(b.clone(), &[1, 0, 0, 1]),
            Err(Error::ReducibleModulus(_))
        ));
        assert!(TowerField::with_min_poly(b.clone(), &[3, 0, 0, 2]).is_err());
        assert!(TowerField::with_min_poly(b, &[9, 0, 0]).is_err());
    }

    #[test]
    fn oversized_tower_rejected() {
        let b = BaseField::prime(4_294_967_311).unwrap();
        assert!(matches!(TowerField::new(b), Err(Error::TowerTooLarge(_))));
    }
}
