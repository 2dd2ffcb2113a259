//! Reed-Solomon codes over the cubic tower GF(q^3) and the two explicit
//! two-dimensional constructions:
//!
//! * [`ConstructionKind::InverseGamma`]: points `δ + δ⁻¹γ`, any characteristic,
//!   with no two elements of the δ-set negatives of each other;
//! * [`ConstructionKind::SquareGamma`]: points `δ + δ²γ`, odd characteristic.
//!
//! Either way the code has length up to `q - 1` (or `(q - 1)/2` for the
//! inverse construction in odd characteristic), lives in a field of size
//! `q^3`, and corrects `n - 3` insertions and deletions for every ordering of
//! the points.

pub mod serial;

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{poly, prime_power, BaseElement, BaseField, Field, TowerElement, TowerField};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstructionKind {
    /// `α = δ + δ⁻¹γ`.
    InverseGamma,
    /// `α = δ + δ²γ`.
    SquareGamma,
}

impl ConstructionKind {
    pub fn name(self) -> &'static str {
        match self {
            ConstructionKind::InverseGamma => "inverse",
            ConstructionKind::SquareGamma => "square",
        }
    }
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "inverse" | "inverse-gamma" => Ok(ConstructionKind::InverseGamma),
            "square" | "square-gamma" => Ok(ConstructionKind::SquareGamma),
            other => Err(format!("unknown construction kind `{other}`")),
        }
    }
}

/// The base-field set the evaluation points are generated from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaSet {
    elements: Vec<BaseElement>,
    kind: ConstructionKind,
}

impl DeltaSet {
    pub fn elements(&self) -> &[BaseElement] {
        &self.elements
    }

    pub fn kind(&self) -> ConstructionKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Longest code the construction supports over `base`.
pub fn max_length(base: &BaseField, kind: ConstructionKind) -> usize {
    let q = base.order();
    let odd = base.characteristic() != 2;
    let max = match (kind, odd) {
        (ConstructionKind::InverseGamma, true) => (q - 1) / 2,
        (ConstructionKind::InverseGamma, false) => q - 1,
        (ConstructionKind::SquareGamma, true) => q - 1,
        (ConstructionKind::SquareGamma, false) => 0,
    };
    usize::try_from(max).unwrap_or(usize::MAX)
}

/// The first `n` admissible nonzero elements in canonical-integer order.
///
/// For the inverse construction in odd characteristic only the member of
/// each pair `{δ, -δ}` with the smaller canonical integer is admissible.
pub fn select_delta_set(base: &BaseField, n: usize, kind: ConstructionKind) -> Result<DeltaSet> {
    if kind == ConstructionKind::SquareGamma && base.characteristic() == 2 {
        return Err(Error::UnsupportedCharacteristic);
    }
    if n < 3 {
        return Err(Error::LengthTooSmall { n, min: 3 });
    }
    let max = max_length(base, kind);
    if n > max {
        return Err(Error::LengthExceeded {
            n,
            max,
            kind: kind.name(),
            q: base.order(),
        });
    }
    let pair_rule = kind == ConstructionKind::InverseGamma && base.characteristic() != 2;
    let elements = base
        .nonzero_elements()
        .filter(|&d| !pair_rule || d.value() < base.neg(d).value())
        .take(n)
        .collect();
    Ok(DeltaSet { elements, kind })
}

/// Checks an arbitrary δ-set against the construction's requirements:
/// nonzero, pairwise distinct, odd characteristic for the square
/// construction, and no `δ' = -δ` pairs for the inverse construction.
pub fn check_admissible(
    base: &BaseField,
    kind: ConstructionKind,
    deltas: &[BaseElement],
) -> Result<()> {
    if kind == ConstructionKind::SquareGamma && base.characteristic() == 2 {
        return Err(Error::UnsupportedCharacteristic);
    }
    for (i, &d) in deltas.iter().enumerate() {
        if d == base.zero() {
            return Err(Error::DivisionByZero);
        }
        let neg = base.neg(d);
        for (j, &other) in deltas[..i].iter().enumerate() {
            let opposite = kind == ConstructionKind::InverseGamma && other == neg;
            if other == d || opposite {
                return Err(Error::DuplicateEvaluationPoint(j + 1, i + 1));
            }
        }
    }
    Ok(())
}

/// `δ + δ⁻¹γ` or `δ + δ²γ` for nonzero `δ`.
pub fn evaluation_point(
    tower: &TowerField,
    kind: ConstructionKind,
    delta: BaseElement,
) -> Result<TowerElement> {
    let b = tower.base();
    let coeff = match kind {
        ConstructionKind::InverseGamma => b.inv(delta)?,
        ConstructionKind::SquareGamma => {
            if delta == b.zero() {
                return Err(Error::DivisionByZero);
            }
            b.mul(delta, delta)
        }
    };
    Ok(tower.from_coeffs(delta, coeff, b.zero()))
}

/// How the δ-set is laid out along the evaluation vector.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum DeltaOrder {
    /// Canonical-integer order.
    #[default]
    Canonical,
    /// `α_i` uses the `perm[i]`-th element (0-based) of the canonical δ-set.
    Permutation(Vec<usize>),
    /// A uniformly random permutation drawn from a ChaCha8 stream seeded with
    /// the given value.
    Shuffled(u64),
}

impl DeltaOrder {
    fn permutation(&self, n: usize) -> Result<Vec<usize>> {
        match self {
            DeltaOrder::Canonical => Ok((0..n).collect()),
            DeltaOrder::Permutation(perm) => {
                let mut seen = vec![false; n];
                if perm.len() != n {
                    return Err(Error::InvalidPermutation(n));
                }
                for &i in perm {
                    if i >= n || std::mem::replace(&mut seen[i], true) {
                        return Err(Error::InvalidPermutation(n));
                    }
                }
                Ok(perm.clone())
            }
            DeltaOrder::Shuffled(seed) => {
                let mut perm: Vec<usize> = (0..n).collect();
                perm.shuffle(&mut ChaCha8Rng::seed_from_u64(*seed));
                Ok(perm)
            }
        }
    }
}

/// Where a constructed code's evaluation points came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub kind: ConstructionKind,
    /// `deltas[i]` generates `α_i`.
    pub deltas: Vec<BaseElement>,
    /// Index of each `deltas[i]` within the canonical δ-set.
    pub ordering: Vec<usize>,
}

/// An `[n, k]` Reed-Solomon code over a tower field, given by its evaluation
/// vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RsCode {
    tower: TowerField,
    k: usize,
    alpha: Vec<TowerElement>,
    provenance: Option<Provenance>,
}

impl RsCode {
    /// A code with an arbitrary evaluation vector of distinct points.
    pub fn new(tower: TowerField, k: usize, alpha: Vec<TowerElement>) -> Result<Self> {
        if k == 0 {
            return Err(Error::UnsupportedDimension(0));
        }
        if alpha.len() < k {
            return Err(Error::LengthTooSmall {
                n: alpha.len(),
                min: k,
            });
        }
        for (i, a) in alpha.iter().enumerate() {
            if let Some(j) = alpha[..i].iter().position(|b| b == a) {
                return Err(Error::DuplicateEvaluationPoint(j + 1, i + 1));
            }
        }
        Ok(RsCode {
            tower,
            k,
            alpha,
            provenance: None,
        })
    }

    /// A `k = 2` code from a δ-set laid out in the given order. The
    /// provenance is checked against the construction formula.
    pub fn from_deltas(
        tower: TowerField,
        kind: ConstructionKind,
        deltas: Vec<BaseElement>,
        ordering: Vec<usize>,
    ) -> Result<Self> {
        check_admissible(tower.base(), kind, &deltas)?;
        let alpha = deltas
            .iter()
            .map(|&d| evaluation_point(&tower, kind, d))
            .collect::<Result<Vec<_>>>()?;
        let mut code = RsCode::new(tower, 2, alpha)?;
        code.provenance = Some(Provenance {
            kind,
            deltas,
            ordering,
        });
        Ok(code)
    }

    pub fn tower(&self) -> &TowerField {
        &self.tower
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &[TowerElement] {
        &self.alpha
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    /// Number of messages `|F|^k`, saturating.
    pub fn message_count(&self) -> u128 {
        (self.tower.order() as u128).saturating_pow(self.k as u32)
    }

    /// Maximal number of correctable insertions and deletions, `n - 2k + 1`.
    pub fn radius(&self) -> Result<usize> {
        decoding_radius(self.n(), self.k)
    }

    /// Evaluations `(f(α_1), ..., f(α_n))`.
    pub fn encode(&self, msg: &MessagePoly) -> Result<Codeword> {
        if msg.coeffs.len() != self.k {
            return Err(Error::DimensionMismatch {
                expected: self.k,
                found: msg.coeffs.len(),
            });
        }
        Ok(Codeword {
            symbols: self
                .alpha
                .iter()
                .map(|&a| poly::eval(&self.tower, &msg.coeffs, a))
                .collect(),
        })
    }

    /// The message whose coefficients are the base-`|F|` digits of `index`,
    /// low degree first. Enumerates all messages as `index` runs over
    /// `0..message_count()`.
    pub fn message_from_index(&self, mut index: u128) -> MessagePoly {
        let order = self.tower.order() as u128;
        let coeffs = (0..self.k)
            .map(|_| {
                let d = (index % order) as u64;
                index /= order;
                self.tower.decode(d).expect("digit in range")
            })
            .collect();
        MessagePoly { coeffs }
    }
}

/// Builds the `[n, 2]` code of the given kind over the canonical tower of `base`.
pub fn construct_code(
    base: &BaseField,
    n: usize,
    kind: ConstructionKind,
    order: &DeltaOrder,
) -> Result<RsCode> {
    // check the cheap preconditions before searching for the cubic
    select_delta_set(base, n, kind)?;
    construct_code_over(&TowerField::new(base.clone())?, n, kind, order)
}

/// Builds the `[n, 2]` code of the given kind over a caller-chosen tower, so
/// that any irreducible cubic can serve as the minimal polynomial of γ.
pub fn construct_code_over(
    tower: &TowerField,
    n: usize,
    kind: ConstructionKind,
    order: &DeltaOrder,
) -> Result<RsCode> {
    let set = select_delta_set(tower.base(), n, kind)?;
    let perm = order.permutation(n)?;
    let deltas = perm.iter().map(|&i| set.elements[i]).collect();
    RsCode::from_deltas(tower.clone(), kind, deltas, perm)
}

/// A message polynomial of degree below `k`, coefficients low degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MessagePoly {
    coeffs: Vec<TowerElement>,
}

impl MessagePoly {
    pub fn new(coeffs: Vec<TowerElement>) -> Self {
        MessagePoly { coeffs }
    }

    pub fn coeffs(&self) -> &[TowerElement] {
        &self.coeffs
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Codeword {
    symbols: Vec<TowerElement>,
}

impl Codeword {
    pub fn symbols(&self) -> &[TowerElement] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<TowerElement> {
        self.symbols
    }
}

/// Field sizes for length-`n` codes correcting `n - 3` insdel errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldSizeBounds {
    /// `(n+1)^3`, reached by the constructions when `n + 1` is a prime power.
    pub upper: u128,
    /// `C(n,3) - 1`, below which no such `[n, 2]` RS code exists.
    pub lower: u128,
}

impl FieldSizeBounds {
    pub fn ratio(&self) -> f64 {
        self.upper as f64 / self.lower as f64
    }
}

pub fn field_size_bounds(n: u64) -> Result<FieldSizeBounds> {
    if n < 3 {
        return Err(Error::LengthTooSmall {
            n: n as usize,
            min: 3,
        });
    }
    let n = n as u128;
    Ok(FieldSizeBounds {
        upper: (n + 1).pow(3),
        lower: n * (n - 1) * (n - 2) / 6 - 1,
    })
}

/// `n - 2k + 1`, the most insertions and deletions an `[n, k]` linear code
/// can correct.
pub fn decoding_radius(n: usize, k: usize) -> Result<usize> {
    let min = (2 * k).saturating_sub(1);
    if n < min {
        return Err(Error::LengthTooSmall { n, min });
    }
    Ok(n + 1 - 2 * k)
}

/// Smallest prime power `q >= n + 1`; a base field of this order supports a
/// length-`n` code (square construction for odd `q`, inverse construction for
/// even `q`).
pub fn smallest_base_order(n: u64) -> u64 {
    (n + 1..)
        .find(|&q| prime_power(q).is_some())
        .expect("prime powers are unbounded")
}
