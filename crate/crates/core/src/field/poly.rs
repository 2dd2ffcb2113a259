//! Dense univariate polynomials over a [`Field`], stored low degree first.
//!
//! Used for base-field moduli, tower minimal polynomials, tower inversion and
//! the canonical irreducible search. Results are always trimmed (no trailing
//! zero coefficients); the zero polynomial is the empty vector.

use super::{prime_factors, Field};
use crate::error::{Error, Result};

pub fn trim<F: Field>(field: &F, p: &mut Vec<F::Element>) {
    while p.last().is_some_and(|&c| field.is_zero(c)) {
        p.pop();
    }
}

pub fn degree<F: Field>(field: &F, p: &[F::Element]) -> Option<usize> {
    p.iter().rposition(|&c| !field.is_zero(c))
}

/// Horner evaluation.
pub fn eval<F: Field>(field: &F, p: &[F::Element], x: F::Element) -> F::Element {
    p.iter()
        .rev()
        .fold(field.zero(), |acc, &c| field.add(field.mul(acc, x), c))
}

pub fn sub<F: Field>(field: &F, a: &[F::Element], b: &[F::Element]) -> Vec<F::Element> {
    let len = a.len().max(b.len());
    let mut out: Vec<_> = (0..len)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(field.zero());
            let y = b.get(i).copied().unwrap_or(field.zero());
            field.sub(x, y)
        })
        .collect();
    trim(field, &mut out);
    out
}

pub fn mul<F: Field>(field: &F, a: &[F::Element], b: &[F::Element]) -> Vec<F::Element> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if field.is_zero(x) {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = field.add(out[i + j], field.mul(x, y));
        }
    }
    trim(field, &mut out);
    out
}

/// Quotient and remainder.
pub type DivRem<E> = (Vec<E>, Vec<E>);

/// Quotient and remainder of `a` by nonzero `b`.
pub fn div_rem<F: Field>(
    field: &F,
    a: &[F::Element],
    b: &[F::Element],
) -> Result<DivRem<F::Element>> {
    let db = degree(field, b).ok_or(Error::DivisionByZero)?;
    let lead_inv = field.inv(b[db])?;
    let mut rem = a.to_vec();
    trim(field, &mut rem);
    if rem.len() <= db {
        return Ok((Vec::new(), rem));
    }
    let mut quot = vec![field.zero(); rem.len() - db];
    while rem.len() > db {
        let shift = rem.len() - 1 - db;
        let c = field.mul(*rem.last().unwrap(), lead_inv);
        quot[shift] = c;
        for (i, &y) in b[..=db].iter().enumerate() {
            rem[shift + i] = field.sub(rem[shift + i], field.mul(c, y));
        }
        trim(field, &mut rem);
    }
    trim(field, &mut quot);
    Ok((quot, rem))
}

pub fn rem<F: Field>(field: &F, a: &[F::Element], m: &[F::Element]) -> Result<Vec<F::Element>> {
    Ok(div_rem(field, a, m)?.1)
}

pub fn mul_mod<F: Field>(
    field: &F,
    a: &[F::Element],
    b: &[F::Element],
    m: &[F::Element],
) -> Result<Vec<F::Element>> {
    rem(field, &mul(field, a, b), m)
}

pub fn pow_mod<F: Field>(
    field: &F,
    a: &[F::Element],
    mut exp: u64,
    m: &[F::Element],
) -> Result<Vec<F::Element>> {
    let mut acc = rem(field, &[field.one()], m)?;
    let mut base = rem(field, a, m)?;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(field, &acc, &base, m)?;
        }
        base = mul_mod(field, &base, &base, m)?;
        exp >>= 1;
    }
    Ok(acc)
}

/// Monic greatest common divisor (empty when both inputs are zero).
pub fn gcd<F: Field>(field: &F, a: &[F::Element], b: &[F::Element]) -> Vec<F::Element> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(field, &mut x);
    trim(field, &mut y);
    while !y.is_empty() {
        let r = rem(field, &x, &y).expect("divisor is nonzero");
        x = y;
        y = r;
    }
    make_monic(field, &x)
}

pub fn make_monic<F: Field>(field: &F, p: &[F::Element]) -> Vec<F::Element> {
    match degree(field, p) {
        None => Vec::new(),
        Some(d) => {
            let inv = field.inv(p[d]).expect("leading coefficient is nonzero");
            p[..=d].iter().map(|&c| field.mul(c, inv)).collect()
        }
    }
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm, or `None`
/// when they are not coprime.
pub fn inv_mod<F: Field>(field: &F, a: &[F::Element], m: &[F::Element]) -> Option<Vec<F::Element>> {
    let mut r0 = m.to_vec();
    trim(field, &mut r0);
    let mut r1 = rem(field, a, m).ok()?;
    let mut s0: Vec<F::Element> = Vec::new();
    let mut s1 = vec![field.one()];
    while !r1.is_empty() {
        let (q, r) = div_rem(field, &r0, &r1).ok()?;
        let s = sub(field, &s0, &mul(field, &q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if degree(field, &r0) != Some(0) {
        return None;
    }
    let c = field.inv(r0[0]).ok()?;
    let scaled: Vec<_> = s0.iter().map(|&x| field.mul(x, c)).collect();
    rem(field, &scaled, m).ok()
}

/// Whether `p` has a root in the field (exhaustive scan).
pub fn has_root<F: Field>(field: &F, p: &[F::Element]) -> bool {
    field.elements().any(|x| field.is_zero(eval(field, p, x)))
}

/// Irreducibility test. Degrees 2 and 3 use exhaustive root testing; higher
/// degrees use Rabin's test: `x^(q^d) = x mod f` and
/// `gcd(x^(q^(d/r)) - x, f) = 1` for every prime `r | d`.
pub fn is_irreducible<F: Field>(field: &F, p: &[F::Element]) -> bool {
    let Some(d) = degree(field, p) else {
        return false;
    };
    match d {
        0 => false,
        1 => true,
        2 | 3 => !has_root(field, p),
        _ => rabin(field, &make_monic(field, p), d),
    }
}

fn rabin<F: Field>(field: &F, f: &[F::Element], d: usize) -> bool {
    let q = field.order();
    let x = vec![field.zero(), field.one()];
    // frob[i] = x^(q^i) mod f
    let mut frob = vec![rem(field, &x, f).expect("f nonzero")];
    for i in 1..=d {
        let next = pow_mod(field, &frob[i - 1], q, f).expect("f nonzero");
        frob.push(next);
    }
    if !sub(field, &frob[d], &frob[0]).is_empty() {
        return false;
    }
    prime_factors(d as u64).into_iter().all(|r| {
        let h = sub(field, &frob[d / r as usize], &frob[0]);
        degree(field, &gcd(field, &h, f)) == Some(0)
    })
}

/// The first monic irreducible polynomial of the given degree, scanning the
/// coefficient tuples `(a_{d-1}, ..., a_0)` in ascending lexicographic order
/// of their canonical integers. Returned low degree first, including the
/// leading `1`.
pub fn canonical_irreducible<F: Field>(field: &F, degree: usize) -> Result<Vec<F::Element>> {
    if degree < 2 {
        return Err(Error::DegreeTooSmall { degree, min: 2 });
    }
    let q = field.order();
    // digits[i] is the canonical integer of the coefficient of x^i; the tuple
    // is incremented as a base-q counter with a_0 as the least significant
    // digit, which is exactly lexicographic order on (a_{d-1}, ..., a_0).
    let mut digits = vec![0u64; degree];
    loop {
        let mut poly: Vec<F::Element> = digits
            .iter()
            .map(|&v| field.decode(v).expect("digit in range"))
            .collect();
        poly.push(field.one());
        if is_irreducible(field, &poly) {
            return Ok(poly);
        }
        let mut i = 0;
        loop {
            digits[i] += 1;
            if digits[i] < q {
                break;
            }
            digits[i] = 0;
            i += 1;
            if i == degree {
                unreachable!("an irreducible polynomial of every degree exists");
            }
        }
    }
}

/// Textual notation such as `x^3+x+1`; coefficients are printed as their
/// canonical integers.
pub fn format<F: Field>(field: &F, p: &[F::Element]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in p.iter().enumerate().rev() {
        if field.is_zero(c) {
            continue;
        }
        let v = field.encode(c);
        let mono = match i {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        };
        terms.push(match (v, i) {
            (_, 0) => v.to_string(),
            (1, _) => mono,
            _ => format!("{v}{mono}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}
