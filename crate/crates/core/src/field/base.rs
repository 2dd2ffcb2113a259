use std::fmt;
use std::sync::Arc;

use super::{is_prime, poly, prime_factors, Field};
use crate::error::{Error, Result};

/// Element of GF(p^e), stored as its canonical integer `sum(c_i * p^i)`,
/// where `c_i` is the coefficient of `x^i` in the residue class modulo the
/// field's defining polynomial.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BaseElement(u64);

impl BaseElement {
    /// Canonical integer encoding.
    pub fn value(self) -> u64 {
        self.0
    }
}

impl fmt::Debug for BaseElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for BaseElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Fields up to this order get log/antilog tables for multiplication.
const TABLE_LIMIT: u64 = 1 << 16;
/// Odd-characteristic extension fields up to this order get an addition table.
const ADD_TABLE_LIMIT: u64 = 256;

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
    add: Option<Vec<u32>>,
}

/// The field GF(p^e), realised as GF(p)[x] modulo a monic irreducible of
/// degree `e` (no modulus for prime fields).
#[derive(Clone)]
pub struct BaseField {
    p: u64,
    e: u32,
    q: u64,
    /// Low degree first, monic, length `e + 1`; empty when `e == 1`.
    modulus: Vec<u64>,
    tables: Option<Arc<Tables>>,
}

impl fmt::Debug for BaseField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BaseField")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for BaseField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}

impl Eq for BaseField {}

impl BaseField {
    /// The prime field GF(p).
    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// GF(p^e). When `modulus` is `None` and `e > 1`, the canonical
    /// irreducible of degree `e` over GF(p) is used. A supplied modulus is
    /// given low degree first with its leading `1` and must be irreducible.
    pub fn new(p: u64, e: u32, modulus: Option<&[u64]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = p.checked_pow(e).ok_or(Error::FieldTooLarge { p, e })?;
        let prime = BaseField {
            p,
            e: 1,
            q: p,
            modulus: Vec::new(),
            tables: None,
        };
        if e == 1 {
            return match modulus {
                None | Some([]) => Ok(prime),
                Some(_) => Err(Error::MalformedModulus(
                    "prime fields take no modulus".into(),
                )),
            };
        }
        let modulus = match modulus {
            Some(m) => {
                if m.len() != e as usize + 1 || m[e as usize] != 1 || m.iter().any(|&c| c >= p) {
                    return Err(Error::MalformedModulus(format!(
                        "{m:?} is not a monic degree-{e} polynomial over GF({p})"
                    )));
                }
                let as_poly: Vec<BaseElement> = m.iter().map(|&c| BaseElement(c)).collect();
                if !poly::is_irreducible(&prime, &as_poly) {
                    return Err(Error::ReducibleModulus(poly::format(&prime, &as_poly)));
                }
                m.to_vec()
            }
            None => poly::canonical_irreducible(&prime, e as usize)?
                .into_iter()
                .map(|c| c.0)
                .collect(),
        };
        let mut field = BaseField {
            p,
            e,
            q,
            modulus,
            tables: None,
        };
        if q <= TABLE_LIMIT {
            field.tables = Some(Arc::new(field.build_tables()));
        }
        Ok(field)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// Defining polynomial, low degree first with leading `1`; empty for
    /// prime fields.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Defining polynomial in `x^3+x+1` notation (`x` for prime fields).
    pub fn modulus_string(&self) -> String {
        if self.e == 1 {
            return "x".to_string();
        }
        let prime = BaseField::prime(self.p).expect("p is prime");
        let m: Vec<BaseElement> = self.modulus.iter().map(|&c| BaseElement(c)).collect();
        poly::format(&prime, &m)
    }

    /// Coefficients of `a` over GF(p), low degree first, length `e`.
    pub fn coeffs(&self, a: BaseElement) -> Vec<u64> {
        let mut v = a.0;
        (0..self.e)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<BaseElement> {
        if coeffs.len() != self.e as usize {
            return Err(Error::DimensionMismatch {
                expected: self.e as usize,
                found: coeffs.len(),
            });
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.p) {
            return Err(Error::ElementOutOfRange {
                value: c,
                order: self.p,
            });
        }
        Ok(BaseElement(
            coeffs.iter().rev().fold(0u64, |acc, &c| acc * self.p + c),
        ))
    }

    /// Nonzero elements in canonical-integer order.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = BaseElement> + '_ {
        (1..self.q).map(BaseElement)
    }

    fn digits(&self, mut v: u64, out: &mut [u64; 64]) {
        for d in out.iter_mut().take(self.e as usize) {
            *d = v % self.p;
            v /= self.p;
        }
    }

    fn undigits(&self, d: &[u64]) -> u64 {
        d.iter().rev().fold(0u64, |acc, &c| acc * self.p + c)
    }

    #[inline]
    fn mul_mod_p(&self, a: u64, b: u64) -> u64 {
        if self.p <= u32::MAX as u64 {
            a * b % self.p
        } else {
            ((a as u128 * b as u128) % self.p as u128) as u64
        }
    }

    #[inline]
    fn add_mod_p(&self, a: u64, b: u64) -> u64 {
        let (s, overflow) = a.overflowing_add(b);
        if overflow || s >= self.p {
            s.wrapping_sub(self.p)
        } else {
            s
        }
    }

    fn add_digits(&self, a: u64, b: u64) -> u64 {
        let (mut da, mut db) = ([0u64; 64], [0u64; 64]);
        self.digits(a, &mut da);
        self.digits(b, &mut db);
        for i in 0..self.e as usize {
            da[i] = self.add_mod_p(da[i], db[i]);
        }
        self.undigits(&da[..self.e as usize])
    }

    fn neg_digits(&self, a: u64) -> u64 {
        let mut d = [0u64; 64];
        self.digits(a, &mut d);
        for x in d.iter_mut().take(self.e as usize) {
            *x = (self.p - *x) % self.p;
        }
        self.undigits(&d[..self.e as usize])
    }

    /// Schoolbook product of the coefficient vectors reduced by the modulus.
    /// Reference route that the table-driven multiplication is checked against.
    pub(crate) fn mul_poly(&self, a: u64, b: u64) -> u64 {
        if self.e == 1 {
            return self.mul_mod_p(a, b);
        }
        let e = self.e as usize;
        let (mut da, mut db) = ([0u64; 64], [0u64; 64]);
        self.digits(a, &mut da);
        self.digits(b, &mut db);
        let mut prod = [0u64; 128];
        for i in 0..e {
            if da[i] == 0 {
                continue;
            }
            for j in 0..e {
                prod[i + j] = self.add_mod_p(prod[i + j], self.mul_mod_p(da[i], db[j]));
            }
        }
        for top in (e..2 * e - 1).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            // x^top = x^(top-e) * x^e and x^e = -(m_0 + ... + m_{e-1} x^{e-1})
            for (i, &m) in self.modulus[..e].iter().enumerate() {
                let t = self.mul_mod_p(c, m);
                let slot = &mut prod[top - e + i];
                *slot = self.add_mod_p(*slot, (self.p - t) % self.p);
            }
        }
        self.undigits(&prod[..e])
    }

    fn pow_poly(&self, a: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        let mut base = a;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_poly(acc, base);
            }
            base = self.mul_poly(base, base);
            exp >>= 1;
        }
        acc
    }

    fn build_tables(&self) -> Tables {
        let order = self.q - 1;
        let factors = prime_factors(order);
        let generator = (1..self.q)
            .find(|&g| factors.iter().all(|&r| self.pow_poly(g, order / r) != 1))
            .expect("the multiplicative group is cyclic");
        let mut exp = Vec::with_capacity(2 * order as usize);
        let mut log = vec![0u32; self.q as usize];
        let mut x = 1u64;
        for i in 0..order {
            exp.push(x as u32);
            log[x as usize] = i as u32;
            x = self.mul_poly(x, generator);
        }
        exp.extend_from_within(..);
        let add = (self.p != 2 && self.q <= ADD_TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity((self.q * self.q) as usize);
            for a in 0..self.q {
                for b in 0..self.q {
                    t.push(self.add_digits(a, b) as u32);
                }
            }
            t
        });
        Tables { exp, log, add }
    }

    fn inv_prime(&self, a: u64) -> u64 {
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i128, a as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        s0.rem_euclid(self.p as i128) as u64
    }
}

impl Field for BaseField {
    type Element = BaseElement;

    fn order(&self) -> u64 {
        self.q
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    #[inline]
    fn zero(&self) -> BaseElement {
        BaseElement(0)
    }

    #[inline]
    fn one(&self) -> BaseElement {
        BaseElement(1)
    }

    #[inline]
    fn add(&self, a: BaseElement, b: BaseElement) -> BaseElement {
        if self.e == 1 {
            return BaseElement(self.add_mod_p(a.0, b.0));
        }
        if self.p == 2 {
            return BaseElement(a.0 ^ b.0);
        }
        if let Some(add) = self.tables.as_ref().and_then(|t| t.add.as_ref()) {
            return BaseElement(add[(a.0 * self.q + b.0) as usize] as u64);
        }
        BaseElement(self.add_digits(a.0, b.0))
    }

    #[inline]
    fn neg(&self, a: BaseElement) -> BaseElement {
        if self.e == 1 {
            return BaseElement(if a.0 == 0 { 0 } else { self.p - a.0 });
        }
        if self.p == 2 {
            return a;
        }
        BaseElement(self.neg_digits(a.0))
    }

    #[inline]
    fn sub(&self, a: BaseElement, b: BaseElement) -> BaseElement {
        if self.e == 1 {
            return BaseElement(if a.0 >= b.0 {
                a.0 - b.0
            } else {
                self.p - (b.0 - a.0)
            });
        }
        self.add(a, self.neg(b))
    }

    #[inline]
    fn mul(&self, a: BaseElement, b: BaseElement) -> BaseElement {
        if self.e == 1 {
            return BaseElement(self.mul_mod_p(a.0, b.0));
        }
        if let Some(t) = &self.tables {
            if a.0 == 0 || b.0 == 0 {
                return BaseElement(0);
            }
            let i = t.log[a.0 as usize] + t.log[b.0 as usize];
            return BaseElement(t.exp[i as usize] as u64);
        }
        BaseElement(self.mul_poly(a.0, b.0))
    }

    fn inv(&self, a: BaseElement) -> Result<BaseElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        if self.e == 1 {
            return Ok(BaseElement(self.inv_prime(a.0)));
        }
        if let Some(t) = &self.tables {
            let order = (self.q - 1) as u32;
            let i = (order - t.log[a.0 as usize]) % order;
            return Ok(BaseElement(t.exp[i as usize] as u64));
        }
        Ok(BaseElement(self.pow_poly(a.0, self.q - 2)))
    }

    fn encode(&self, a: BaseElement) -> u64 {
        a.0
    }

    fn decode(&self, value: u64) -> Result<BaseElement> {
        if value >= self.q {
            return Err(Error::ElementOutOfRange {
                value,
                order: self.q,
            });
        }
        Ok(BaseElement(value))
    }
}
