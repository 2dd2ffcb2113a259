//! Unique decoding of `[n, 2]` codes from up to `n - 3` insertions and
//! deletions, plus brute-force oracles over the whole message space.
//!
//! The decoder interpolates candidate lines through every pair of symbol
//! agreements and keeps the candidates within insdel distance `n - 3`. This
//! finds every codeword in the ball: if `d(c, y) <= n - 3` with `|y| = m`,
//! then `lcs(c, y) >= (m + 3) / 2`, and since `lcs <= m` this forces
//! `m >= 3` and `lcs >= 3`. So any such codeword agrees with `y` on at least
//! two ordered positions `s < t` in `y` matched to `i < j` in the codeword,
//! and the line through `(α_i, y_s)`, `(α_j, y_t)` is exactly its message.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::channel::{insdel_distance, lcs};
use crate::code::{MessagePoly, RsCode};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::field::{Field, TowerElement, TowerField};
use crate::verify::increasing_vectors;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecodeResult {
    /// The unique message within the decoding radius.
    Decoded(MessagePoly),
    /// No message within the decoding radius.
    TooManyErrors,
    /// Several messages within the radius, ordered by their canonical
    /// coefficient integers with `f0` compared first. Cannot happen
    /// for a code passing the determinant check when the radius is respected.
    AmbiguityDetected(Vec<MessagePoly>),
}

impl DecodeResult {
    fn from_candidates(tower: &TowerField, mut found: Vec<MessagePoly>) -> Self {
        found.sort_by_cached_key(|f| {
            f.coeffs()
                .iter()
                .map(|&c| tower.encode(c))
                .collect::<Vec<_>>()
        });
        match found.len() {
            0 => DecodeResult::TooManyErrors,
            1 => DecodeResult::Decoded(found.pop().expect("one candidate")),
            _ => DecodeResult::AmbiguityDetected(found),
        }
    }
}

/// Decodes a received word of a `k = 2` code.
pub fn decode_k2(code: &RsCode, received: &[TowerElement]) -> Result<DecodeResult> {
    decode_k2_with(code, received, Execution::default())
}

pub fn decode_k2_with(
    code: &RsCode,
    received: &[TowerElement],
    exec: Execution,
) -> Result<DecodeResult> {
    if code.k() != 2 {
        return Err(Error::UnsupportedDimension(code.k()));
    }
    let radius = code.radius()?;
    let n = code.n();
    let m = received.len();
    if m < 2 {
        return Ok(DecodeResult::TooManyErrors);
    }
    let t = code.tower();
    let alpha = code.alpha();
    // d(c, y) <= radius  <=>  lcs(c, y) >= (n + m - radius) / 2
    let need = (n + m).saturating_sub(radius).div_ceil(2);
    let mut inv_gaps = vec![t.zero(); n * n];
    for i in 0..n {
        for j in i + 1..n {
            inv_gaps[i * n + j] = t.inv(t.sub(alpha[j], alpha[i]))?;
        }
    }
    // each worker takes one first agreement position s and dedups locally
    let per_start = exec.map_collect(m - 1, |s| {
        let mut seen: HashSet<(TowerElement, TowerElement)> = HashSet::new();
        let mut accepted = Vec::new();
        let mut word = vec![t.zero(); n];
        for u in s + 1..m {
            let rise = t.sub(received[u], received[s]);
            for i in 0..n {
                for j in i + 1..n {
                    let slope = t.mul(rise, inv_gaps[i * n + j]);
                    let intercept = t.sub(received[s], t.mul(slope, alpha[i]));
                    if !seen.insert((intercept, slope)) {
                        continue;
                    }
                    for (w, &a) in word.iter_mut().zip(alpha) {
                        *w = t.add(intercept, t.mul(slope, a));
                    }
                    if lcs(&word, received) >= need {
                        accepted.push((intercept, slope));
                    }
                }
            }
        }
        accepted
    });
    let found: BTreeSet<_> = per_start.into_iter().flatten().collect();
    Ok(DecodeResult::from_candidates(
        t,
        found
            .into_iter()
            .map(|(f0, f1)| MessagePoly::new(vec![f0, f1]))
            .collect(),
    ))
}

/// Largest message space the brute-force oracles will enumerate.
pub const ORACLE_LIMIT: u128 = 1_000_000;

const CHUNK: usize = 1024;

/// Every codeword of a small code, precomputed for exhaustive searches.
pub struct BruteForceOracle<'a> {
    code: &'a RsCode,
    /// Row-major `count x n` table of canonical symbol integers.
    codewords: Vec<u64>,
    count: usize,
}

impl<'a> BruteForceOracle<'a> {
    pub fn new(code: &'a RsCode) -> Result<Self> {
        let size = code.message_count();
        if size > ORACLE_LIMIT {
            return Err(Error::SearchSpaceTooLarge {
                size,
                limit: ORACLE_LIMIT,
            });
        }
        let count = size as usize;
        let t = code.tower();
        let mut codewords = Vec::with_capacity(count * code.n());
        for idx in 0..count {
            let c = code.encode(&code.message_from_index(idx as u128))?;
            codewords.extend(c.symbols().iter().map(|&s| t.encode(s)));
        }
        Ok(BruteForceOracle {
            code,
            codewords,
            count,
        })
    }

    pub fn message_count(&self) -> usize {
        self.count
    }

    fn codeword(&self, idx: usize) -> &[u64] {
        let n = self.code.n();
        &self.codewords[idx * n..(idx + 1) * n]
    }

    /// Scores every message against `received` and returns the unique one
    /// within insdel distance `n - 2k + 1`, if any.
    pub fn decode(&self, received: &[TowerElement], exec: Execution) -> Result<DecodeResult> {
        let radius = self.code.radius()?;
        let t = self.code.tower();
        let y: Vec<u64> = received.iter().map(|&s| t.encode(s)).collect();
        let chunks = self.count.div_ceil(CHUNK);
        let hits = exec.map_collect(chunks, |c| {
            (c * CHUNK..((c + 1) * CHUNK).min(self.count))
                .filter(|&idx| insdel_distance(self.codeword(idx), &y) <= radius)
                .collect::<Vec<_>>()
        });
        Ok(DecodeResult::from_candidates(
            t,
            hits.into_iter()
                .flatten()
                .map(|idx| self.code.message_from_index(idx as u128))
                .collect(),
        ))
    }

    /// Whether all pairs of distinct codewords satisfy `lcs < n - t`,
    /// i.e. insdel distance above `2t`, checked pair by pair.
    pub fn confusability(&self, t: usize, exec: Execution) -> Confusability {
        let n = self.code.n();
        let threshold = n.saturating_sub(t);
        let witness = exec.find_map_first(self.count, |a| {
            let ca = self.codeword(a);
            (a + 1..self.count)
                .find(|&b| lcs(ca, self.codeword(b)) >= threshold)
                .map(|b| (a, b))
        });
        self.verdict(witness)
    }

    /// Same verdict as [`BruteForceOracle::confusability`], found by hashing
    /// every length-`(n - t)` subsequence of every codeword: two codewords
    /// have `lcs >= n - t` exactly when they share such a subsequence. Linear
    /// in the number of messages, so it reaches codes the pairwise scan
    /// cannot. The witness is the first collision in message order, which
    /// may differ from the pairwise scan's witness.
    pub fn confusability_by_subsequences(&self, t: usize) -> Confusability {
        let n = self.code.n();
        if t >= n {
            // even the empty subsequence is shared
            return self.verdict((self.count > 1).then_some((0, 1)));
        }
        let positions = increasing_vectors(n, n - t);
        let mut owner: HashMap<Vec<u64>, usize> = HashMap::new();
        for idx in 0..self.count {
            let c = self.codeword(idx);
            for pos in &positions {
                let key: Vec<u64> = pos.iter().map(|&p| c[p - 1]).collect();
                match owner.get(&key) {
                    Some(&other) if other != idx => return self.verdict(Some((other, idx))),
                    Some(_) => {}
                    None => {
                        owner.insert(key, idx);
                    }
                }
            }
        }
        self.verdict(None)
    }

    fn verdict(&self, witness: Option<(usize, usize)>) -> Confusability {
        Confusability {
            correctable: witness.is_none(),
            witness: witness.map(|(a, b)| {
                (
                    self.code.message_from_index(a as u128),
                    self.code.message_from_index(b as u128),
                )
            }),
        }
    }
}

/// Whether the radius-`t` insdel balls around all codewords are disjoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Confusability {
    pub correctable: bool,
    /// Two distinct messages whose codewords are within distance `2t`.
    pub witness: Option<(MessagePoly, MessagePoly)>,
}

/// Exhaustive decoder over all `|F|^k` messages.
pub fn oracle_decode(code: &RsCode, received: &[TowerElement]) -> Result<DecodeResult> {
    BruteForceOracle::new(code)?.decode(received, Execution::default())
}

/// Whether the code corrects every pattern of `t` insertions and deletions,
/// decided by pairwise LCS over all codeword pairs. Balls of radius `t` are
/// disjoint exactly when every pair is more than `2t` apart: a word within
/// `t` of both gives a path of length at most `2t`, and a path of length at
/// most `2t` can be cut at its midpoint.
pub fn confusability_check(code: &RsCode, t: usize) -> Result<Confusability> {
    Ok(BruteForceOracle::new(code)?.confusability(t, Execution::default()))
}
