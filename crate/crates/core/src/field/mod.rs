//! Finite field arithmetic: prime and extension base fields GF(p^e) and
//! their cubic towers GF(q^3).
//!
//! Elements are plain `Copy` values that do not carry their field; every
//! operation goes through the field context. Values obtained from
//! [`Field::decode`] are validated, everything else is assumed to already
//! belong to the context it is used with.

mod base;
pub mod poly;
mod tower;

use std::fmt::Debug;
use std::hash::Hash;

pub use base::{BaseElement, BaseField};
pub use tower::{TowerElement, TowerField};

use crate::error::Result;

/// A finite field context.
pub trait Field: Clone + Debug + Send + Sync {
    type Element: Copy + Eq + Ord + Hash + Debug + Send + Sync;

    /// Number of elements.
    fn order(&self) -> u64;
    fn characteristic(&self) -> u64;

    fn zero(&self) -> Self::Element;
    fn one(&self) -> Self::Element;

    fn add(&self, a: Self::Element, b: Self::Element) -> Self::Element;
    fn neg(&self, a: Self::Element) -> Self::Element;
    fn mul(&self, a: Self::Element, b: Self::Element) -> Self::Element;
    /// Multiplicative inverse; fails on zero.
    fn inv(&self, a: Self::Element) -> Result<Self::Element>;

    fn sub(&self, a: Self::Element, b: Self::Element) -> Self::Element {
        self.add(a, self.neg(b))
    }

    fn div(&self, a: Self::Element, b: Self::Element) -> Result<Self::Element> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply exponentiation. `0^0` is defined as `1`.
    fn pow(&self, a: Self::Element, mut exp: u64) -> Self::Element {
        let mut acc = self.one();
        let mut base = a;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    fn is_zero(&self, a: Self::Element) -> bool {
        a == self.zero()
    }

    /// Canonical integer encoding in `0..order()`.
    fn encode(&self, a: Self::Element) -> u64;
    /// Inverse of [`Field::encode`]; rejects out-of-range integers.
    fn decode(&self, value: u64) -> Result<Self::Element>;

    /// All elements in canonical-integer order.
    fn elements(&self) -> Box<dyn Iterator<Item = Self::Element> + '_> {
        Box::new((0..self.order()).map(move |v| self.decode(v).expect("in range")))
    }
}

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d = 5u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= n) {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Distinct prime factors in ascending order.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= n) {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// If `n` is a prime power `p^e`, returns `(p, e)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let factors = prime_factors(n);
    if factors.len() != 1 {
        return None;
    }
    let p = factors[0];
    let mut e = 0;
    let mut m = n;
    while m > 1 {
        m /= p;
        e += 1;
    }
    Some((p, e))
}
