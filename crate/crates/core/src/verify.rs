//! Exhaustive check of the determinant condition certifying that a
//! Reed-Solomon code corrects `n - 2k + 1` insertions and deletions.
//!
//! For increasing index vectors `I, J` of length `2k - 1` over `1..=n`,
//! `V_{I,J}` is the square matrix whose row `t` is
//!
//! ```text
//! (1, α_{I_t}, ..., α_{I_t}^{k-1}, α_{J_t}, ..., α_{J_t}^{k-1})
//! ```
//!
//! If `det V_{I,J} != 0` for every pair agreeing in at most `k - 1`
//! positions, the code corrects `n - 2k + 1` insdel errors. Agreement is
//! positional (`I_t = J_t` at the same `t`), not set intersection. Pairs are
//! enumerated as ordered pairs, lexicographically by `I` and then `J`, so the
//! first reported witness does not depend on the execution strategy.
//!
//! All indices here are 1-based.

use std::fmt;
use std::time::{Duration, Instant};

use crate::code::{ConstructionKind, RsCode};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::field::{BaseElement, Field, TowerElement, TowerField};

/// Number of positions where two equal-length index vectors coincide.
pub fn agreement_count(i: &[usize], j: &[usize]) -> Result<usize> {
    if i.len() != j.len() {
        return Err(Error::LengthMismatch(i.len(), j.len()));
    }
    Ok(agreement(i, j))
}

#[inline]
fn agreement(i: &[usize], j: &[usize]) -> usize {
    i.iter().zip(j).filter(|(a, b)| a == b).count()
}

/// Two strictly increasing index vectors with their positional agreement.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexVectorPair {
    i: Vec<usize>,
    j: Vec<usize>,
    agreement: usize,
}

impl IndexVectorPair {
    pub fn new(i: Vec<usize>, j: Vec<usize>) -> Result<Self> {
        for v in [&i, &j] {
            if v.first() == Some(&0) || v.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::NotIncreasing(v.clone()));
            }
        }
        let agreement = agreement_count(&i, &j)?;
        Ok(IndexVectorPair { i, j, agreement })
    }

    pub fn i(&self) -> &[usize] {
        &self.i
    }

    pub fn j(&self) -> &[usize] {
        &self.j
    }

    pub fn agreement(&self) -> usize {
        self.agreement
    }
}

fn tuple(v: &[usize]) -> String {
    let parts: Vec<_> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

impl fmt::Display for IndexVectorPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "I={} J={}", tuple(&self.i), tuple(&self.j))
    }
}

/// All strictly increasing vectors of the given length over `1..=n`, in
/// lexicographic order.
pub fn increasing_vectors(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if len > n {
        return out;
    }
    let mut cur: Vec<usize> = (1..=len).collect();
    loop {
        out.push(cur.clone());
        // bump the rightmost coordinate that still has room
        let Some(pos) = (0..len).rev().find(|&p| cur[p] < n - (len - 1 - p)) else {
            return out;
        };
        cur[pos] += 1;
        for q in pos + 1..len {
            cur[q] = cur[q - 1] + 1;
        }
    }
}

/// Square matrix over the tower field, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionMatrix {
    order: usize,
    entries: Vec<TowerElement>,
}

impl ConditionMatrix {
    pub fn from_rows(rows: Vec<Vec<TowerElement>>) -> Self {
        let order = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == order),
            "matrix must be square"
        );
        ConditionMatrix {
            order,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> TowerElement {
        self.entries[row * self.order + col]
    }

    pub fn row(&self, row: usize) -> &[TowerElement] {
        &self.entries[row * self.order..(row + 1) * self.order]
    }
}

/// `V_{I,J}` evaluated at the code's points. Columns are ordered
/// `1; α_I^1..α_I^{k-1}; α_J^1..α_J^{k-1}`.
pub fn build_condition_matrix(code: &RsCode, pair: &IndexVectorPair) -> Result<ConditionMatrix> {
    let k = code.k();
    let size = 2 * k - 1;
    let n = code.n();
    if pair.i.len() != size {
        return Err(Error::DimensionMismatch {
            expected: size,
            found: pair.i.len(),
        });
    }
    if let Some(&index) = pair.i.iter().chain(&pair.j).find(|&&x| x > n) {
        return Err(Error::IndexOutOfRange { index, n });
    }
    let t = code.tower();
    let alpha = code.alpha();
    let mut entries = Vec::with_capacity(size * size);
    for (&a, &b) in pair.i.iter().zip(&pair.j) {
        entries.push(t.one());
        for point in [alpha[a - 1], alpha[b - 1]] {
            let mut x = t.one();
            for _ in 1..k {
                x = t.mul(x, point);
                entries.push(x);
            }
        }
    }
    Ok(ConditionMatrix {
        order: size,
        entries,
    })
}

/// Determinant over the tower field.
pub fn determinant(tower: &TowerField, m: &ConditionMatrix) -> TowerElement {
    determinant_of(tower, m.order, m.entries.clone())
}

/// Fraction-free (Bareiss) elimination with nonzero pivot search over any
/// field; `entries` is a row-major `order x order` matrix.
pub fn determinant_of<F: Field>(field: &F, order: usize, mut a: Vec<F::Element>) -> F::Element {
    assert_eq!(a.len(), order * order, "matrix must be square");
    if order == 0 {
        return field.one();
    }
    let idx = |r: usize, c: usize| r * order + c;
    let mut negate = false;
    let mut prev = field.one();
    for k in 0..order - 1 {
        if field.is_zero(a[idx(k, k)]) {
            let Some(r) = (k + 1..order).find(|&r| !field.is_zero(a[idx(r, k)])) else {
                return field.zero();
            };
            for c in 0..order {
                a.swap(idx(k, c), idx(r, c));
            }
            negate = !negate;
        }
        let pivot = a[idx(k, k)];
        let prev_inv = field.inv(prev).expect("previous pivot is nonzero");
        for i in k + 1..order {
            let lead = a[idx(i, k)];
            for j in k + 1..order {
                let num = field.sub(
                    field.mul(pivot, a[idx(i, j)]),
                    field.mul(lead, a[idx(k, j)]),
                );
                a[idx(i, j)] = field.mul(num, prev_inv);
            }
            a[idx(i, k)] = field.zero();
        }
        prev = pivot;
    }
    let det = a[idx(order - 1, order - 1)];
    if negate {
        field.neg(det)
    } else {
        det
    }
}

/// Cofactor expansion of a row-major 3x3 matrix.
pub fn determinant_3x3<F: Field>(field: &F, m: &[F::Element; 9]) -> F::Element {
    let minor = |a: usize, b: usize, c: usize, d: usize| {
        field.sub(field.mul(m[a], m[d]), field.mul(m[b], m[c]))
    };
    let t0 = field.mul(m[0], minor(4, 5, 7, 8));
    let t1 = field.mul(m[1], minor(3, 5, 6, 8));
    let t2 = field.mul(m[2], minor(3, 4, 6, 7));
    field.add(field.sub(t0, t1), t2)
}

/// Stop at the first violation, or count every violation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VerifyMode {
    #[default]
    FirstWitness,
    CountAll,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VerifyOptions {
    pub mode: VerifyMode,
    pub execution: Execution,
}

/// A qualifying pair whose determinant vanishes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub pair: IndexVectorPair,
    pub determinant: TowerElement,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub passed: bool,
    /// Qualifying pairs whose determinant was evaluated. In
    /// [`VerifyMode::FirstWitness`] this counts up to and including the
    /// witness in enumeration order.
    pub pairs_checked: u64,
    /// Violations found: at most 1 in first-witness mode.
    pub violations: u64,
    /// Lexicographically first violation.
    pub violation: Option<Violation>,
    pub elapsed: Duration,
}

impl VerificationReport {
    /// `key=value` lines. Timing is opt-in so that records are reproducible
    /// byte for byte.
    pub fn to_record(&self, tower: &TowerField, with_timing: bool) -> String {
        let mut out = format!(
            "passed={}\npairs_checked={}\nviolations={}\n",
            self.passed, self.pairs_checked, self.violations
        );
        if let Some(v) = &self.violation {
            out.push_str(&format!(
                "witness_i={}\nwitness_j={}\nwitness_det={}\n",
                join(v.pair.i()),
                join(v.pair.j()),
                tower.encode(v.determinant)
            ));
        }
        if with_timing {
            out.push_str(&format!("elapsed_ms={}\n", self.elapsed.as_millis()));
        }
        out
    }
}

fn join(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Row-by-row enumeration of the qualifying pairs of one code.
struct PairScanner<'a> {
    code: &'a RsCode,
    vectors: Vec<Vec<usize>>,
    max_agreement: usize,
    /// For `k = 2`: `V_{I,J}` reduces to `u_I v_J - u_J v_I` with
    /// `u_T = α_{T1} - α_{T2}` and `v_T = α_{T2} - α_{T3}`.
    differences: Option<(Vec<TowerElement>, Vec<TowerElement>)>,
}

struct RowScan {
    checked: u64,
    violations: u64,
    found: Vec<(usize, TowerElement)>,
}

impl<'a> PairScanner<'a> {
    fn new(code: &'a RsCode) -> Self {
        let k = code.k();
        let vectors = increasing_vectors(code.n(), 2 * k - 1);
        let t = code.tower();
        let differences = (k == 2).then(|| {
            let a = code.alpha();
            vectors
                .iter()
                .map(|v| {
                    (
                        t.sub(a[v[0] - 1], a[v[1] - 1]),
                        t.sub(a[v[1] - 1], a[v[2] - 1]),
                    )
                })
                .unzip()
        });
        PairScanner {
            code,
            vectors,
            max_agreement: k - 1,
            differences,
        }
    }

    fn rows(&self) -> usize {
        self.vectors.len()
    }

    #[inline]
    fn qualifies(&self, a: usize, b: usize) -> bool {
        agreement(&self.vectors[a], &self.vectors[b]) <= self.max_agreement
    }

    #[inline]
    fn det(&self, a: usize, b: usize) -> TowerElement {
        let t = self.code.tower();
        match &self.differences {
            Some((u, v)) => t.sub(t.mul(u[a], v[b]), t.mul(u[b], v[a])),
            None => {
                let pair = self.pair(a, b);
                let m = build_condition_matrix(self.code, &pair).expect("indices in range");
                determinant(t, &m)
            }
        }
    }

    fn pair(&self, a: usize, b: usize) -> IndexVectorPair {
        IndexVectorPair::new(self.vectors[a].clone(), self.vectors[b].clone())
            .expect("enumerated vectors are increasing")
    }

    fn violation(&self, a: usize, b: usize, det: TowerElement) -> Violation {
        Violation {
            pair: self.pair(a, b),
            determinant: det,
        }
    }

    /// Scans row `a`, recording up to `keep` violations and stopping once
    /// `stop_after` violations have been seen.
    fn scan_row(&self, a: usize, keep: usize, stop_after: u64) -> RowScan {
        let zero = self.code.tower().zero();
        let mut scan = RowScan {
            checked: 0,
            violations: 0,
            found: Vec::new(),
        };
        for b in 0..self.rows() {
            if !self.qualifies(a, b) {
                continue;
            }
            scan.checked += 1;
            let det = self.det(a, b);
            if det == zero {
                scan.violations += 1;
                if scan.found.len() < keep {
                    scan.found.push((b, det));
                }
                if scan.violations >= stop_after {
                    break;
                }
            }
        }
        scan
    }

    fn qualifying_in_row(&self, a: usize) -> u64 {
        (0..self.rows()).filter(|&b| self.qualifies(a, b)).count() as u64
    }
}

/// Checks the determinant condition with default options (first witness,
/// parallel when the feature is enabled).
pub fn verify_code(code: &RsCode) -> VerificationReport {
    verify_code_with(code, VerifyOptions::default())
}

pub fn verify_code_with(code: &RsCode, options: VerifyOptions) -> VerificationReport {
    let start = Instant::now();
    if code.n() < 2 * code.k() - 1 {
        // no index vectors of the required length, so the condition holds vacuously
        return VerificationReport {
            passed: true,
            pairs_checked: 0,
            violations: 0,
            violation: None,
            elapsed: start.elapsed(),
        };
    }
    let scanner = PairScanner::new(code);
    let exec = options.execution;
    let (pairs_checked, violations, violation) = match options.mode {
        VerifyMode::FirstWitness => {
            let hit = exec.find_map_first(scanner.rows(), |a| {
                let scan = scanner.scan_row(a, 1, 1);
                scan.found
                    .first()
                    .map(|&(b, det)| (a, b, det, scan.checked))
            });
            match hit {
                Some((a, b, det, checked_in_row)) => {
                    let before: u64 = exec
                        .map_collect(a, |r| scanner.qualifying_in_row(r))
                        .into_iter()
                        .sum();
                    (
                        before + checked_in_row,
                        1,
                        Some(scanner.violation(a, b, det)),
                    )
                }
                None => {
                    let total = exec
                        .map_collect(scanner.rows(), |r| scanner.qualifying_in_row(r))
                        .into_iter()
                        .sum();
                    (total, 0, None)
                }
            }
        }
        VerifyMode::CountAll => {
            let rows = exec.map_collect(scanner.rows(), |a| scanner.scan_row(a, 1, u64::MAX));
            let checked = rows.iter().map(|r| r.checked).sum();
            let violations = rows.iter().map(|r| r.violations).sum();
            let first = rows.iter().enumerate().find_map(|(a, r)| {
                r.found
                    .first()
                    .map(|&(b, det)| scanner.violation(a, b, det))
            });
            (checked, violations, first)
        }
    };
    VerificationReport {
        passed: violation.is_none(),
        pairs_checked,
        violations,
        violation,
        elapsed: start.elapsed(),
    }
}

/// Up to `limit` violations in lexicographic `(I, J)` order; empty exactly
/// when [`verify_code`] passes.
pub fn enumerate_violations(code: &RsCode, limit: usize) -> Result<Vec<Violation>> {
    enumerate_violations_with(code, limit, Execution::default())
}

pub fn enumerate_violations_with(
    code: &RsCode,
    limit: usize,
    exec: Execution,
) -> Result<Vec<Violation>> {
    if limit == 0 {
        return Err(Error::InvalidLimit);
    }
    if code.n() < 2 * code.k() - 1 {
        return Ok(Vec::new());
    }
    let scanner = PairScanner::new(code);
    let rows = exec.map_collect(scanner.rows(), |a| scanner.scan_row(a, limit, limit as u64));
    Ok(rows
        .iter()
        .enumerate()
        .flat_map(|(a, r)| r.found.iter().map(move |&(b, det)| (a, b, det)))
        .take(limit)
        .map(|(a, b, det)| scanner.violation(a, b, det))
        .collect())
}

/// Coordinates `(p0, p1, p2)` of `det V_{I,J}` in the basis `{1, γ, γ^2}`,
/// computed directly from the δ values of a constructed `k = 2` code.
///
/// With `β_t = δ_t + ε_t γ` (`ε = δ⁻¹` or `δ²`) for the three `I` points
/// followed by the three `J` points, the determinant is
/// `(β1-β2)(β5-β6) - (β2-β3)(β4-β5)`, which expands to
///
/// ```text
/// p0 = (δ1-δ2)(δ5-δ6) - (δ2-δ3)(δ4-δ5)
/// p1 = (δ1-δ2)(ε5-ε6) + (ε1-ε2)(δ5-δ6) - (ε2-ε3)(δ4-δ5) - (δ2-δ3)(ε4-ε5)
/// p2 = (ε1-ε2)(ε5-ε6) - (ε2-ε3)(ε4-ε5)
/// ```
pub fn coefficient_decomposition(
    code: &RsCode,
    pair: &IndexVectorPair,
) -> Result<[BaseElement; 3]> {
    if code.k() != 2 {
        return Err(Error::UnsupportedDimension(code.k()));
    }
    let prov = code.provenance().ok_or(Error::MissingProvenance)?;
    if pair.i.len() != 3 || pair.j.len() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: pair.i.len(),
        });
    }
    let n = code.n();
    if let Some(&index) = pair.i.iter().chain(&pair.j).find(|&&x| x > n) {
        return Err(Error::IndexOutOfRange { index, n });
    }
    let f = code.tower().base();
    let mut d = [f.zero(); 6];
    let mut e = [f.zero(); 6];
    for (slot, &idx) in pair.i.iter().chain(&pair.j).enumerate() {
        let delta = prov.deltas[idx - 1];
        d[slot] = delta;
        e[slot] = match prov.kind {
            ConstructionKind::InverseGamma => f.inv(delta)?,
            ConstructionKind::SquareGamma => f.mul(delta, delta),
        };
    }
    // 0-based: positions 0..3 are δ1..δ3, 3..6 are δ4..δ6
    let diff = |v: &[BaseElement; 6], a: usize, b: usize| f.sub(v[a], v[b]);
    let (d12, d23, d45, d56) = (
        diff(&d, 0, 1),
        diff(&d, 1, 2),
        diff(&d, 3, 4),
        diff(&d, 4, 5),
    );
    let (e12, e23, e45, e56) = (
        diff(&e, 0, 1),
        diff(&e, 1, 2),
        diff(&e, 3, 4),
        diff(&e, 4, 5),
    );
    let p0 = f.sub(f.mul(d12, d56), f.mul(d23, d45));
    let p1 = f.sub(
        f.add(f.mul(d12, e56), f.mul(e12, d56)),
        f.add(f.mul(e23, d45), f.mul(d23, e45)),
    );
    let p2 = f.sub(f.mul(e12, e56), f.mul(e23, e45));
    Ok([p0, p1, p2])
}
