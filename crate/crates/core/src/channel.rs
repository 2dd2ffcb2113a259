//! Insertion/deletion channel: edit scripts, their application, and the
//! LCS-based insdel metric.

use std::fmt;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{Field, TowerElement, TowerField};

/// One edit. Positions are 1-based and refer to the word as it stands when
/// the edit is applied: `Delete(p)` removes the `p`-th symbol, `Insert(p, s)`
/// places `s` so that it becomes the `p`-th symbol (`p` up to `len + 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EditOp<S = TowerElement> {
    Delete(usize),
    Insert(usize, S),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct EditScript<S = TowerElement> {
    ops: Vec<EditOp<S>>,
}

impl<S> EditScript<S> {
    pub fn new(ops: Vec<EditOp<S>>) -> Self {
        EditScript { ops }
    }

    pub fn ops(&self) -> &[EditOp<S>] {
        &self.ops
    }

    pub fn deletions(&self) -> usize {
        self.ops
            .iter()
            .filter(|op| matches!(op, EditOp::Delete(_)))
            .count()
    }

    pub fn insertions(&self) -> usize {
        self.ops.len() - self.deletions()
    }

    /// Number of edits `t`.
    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }
}

impl EditScript<TowerElement> {
    /// `D p` / `I p sym` tokens joined by `;`, symbols as canonical integers.
    pub fn to_text(&self, tower: &TowerField) -> String {
        self.ops
            .iter()
            .map(|op| match *op {
                EditOp::Delete(p) => format!("D {p}"),
                EditOp::Insert(p, s) => format!("I {p} {}", tower.encode(s)),
            })
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn parse(text: &str, tower: &TowerField) -> Result<Self> {
        let bad = |tok: &str| Error::Parse {
            line: 1,
            msg: format!("malformed edit `{tok}`"),
        };
        let mut ops = Vec::new();
        for tok in text.split(';').map(str::trim).filter(|t| !t.is_empty()) {
            let parts: Vec<_> = tok.split_whitespace().collect();
            let num = |s: &str| s.parse::<u64>().map_err(|_| bad(tok));
            let op = match parts.as_slice() {
                ["D", p] => EditOp::Delete(num(p)? as usize),
                ["I", p, s] => EditOp::Insert(num(p)? as usize, tower.decode(num(s)?)?),
                _ => return Err(bad(tok)),
            };
            ops.push(op);
        }
        Ok(EditScript { ops })
    }
}

impl<S: fmt::Display> fmt::Display for EditScript<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, op) in self.ops.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            match op {
                EditOp::Delete(p) => write!(f, "D {p}")?,
                EditOp::Insert(p, s) => write!(f, "I {p} {s}")?,
            }
        }
        Ok(())
    }
}

/// Applies the edits in order.
pub fn apply_edits<S: Clone>(word: &[S], script: &EditScript<S>) -> Result<Vec<S>> {
    let mut out = word.to_vec();
    for op in &script.ops {
        match op {
            EditOp::Delete(p) => {
                if *p == 0 || *p > out.len() {
                    return Err(Error::InvalidEditPosition {
                        position: *p,
                        len: out.len(),
                    });
                }
                out.remove(p - 1);
            }
            EditOp::Insert(p, s) => {
                if *p == 0 || *p > out.len() + 1 {
                    return Err(Error::InvalidEditPosition {
                        position: *p,
                        len: out.len(),
                    });
                }
                out.insert(p - 1, s.clone());
            }
        }
    }
    Ok(out)
}

/// A seeded random script for a word of length `n`: `t_del` distinct
/// positions of the original word are deleted (emitted right to left so each
/// position is still valid when applied), then `t_ins` symbols drawn
/// uniformly from the tower are inserted at uniform positions.
///
/// The stream is ChaCha8 (`rand_chacha`) seeded via `seed_from_u64`, so a
/// seed always reproduces the same script.
pub fn random_edit_script(
    n: usize,
    t_del: usize,
    t_ins: usize,
    seed: u64,
    tower: &TowerField,
) -> Result<EditScript> {
    if t_del > n {
        return Err(Error::TooManyDeletions { t_del, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut positions = index::sample(&mut rng, n, t_del).into_vec();
    positions.sort_unstable_by(|a, b| b.cmp(a));
    let mut ops: Vec<EditOp> = positions
        .into_iter()
        .map(|p| EditOp::Delete(p + 1))
        .collect();
    for len in n - t_del..n - t_del + t_ins {
        let p = rng.random_range(1..=len + 1);
        let s = tower.decode(rng.random_range(0..tower.order()))?;
        ops.push(EditOp::Insert(p, s));
    }
    Ok(EditScript { ops })
}

const STACK_ROW: usize = 64;

/// Length of a longest common subsequence, by the quadratic dynamic program
/// over a single rolling row.
pub fn lcs<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    if b.len() < STACK_ROW {
        let mut row = [0u32; STACK_ROW];
        lcs_row(a, b, &mut row[..=b.len()])
    } else {
        lcs_row(a, b, &mut vec![0u32; b.len() + 1])
    }
}

#[inline]
fn lcs_row<T: PartialEq>(a: &[T], b: &[T], row: &mut [u32]) -> usize {
    for x in a {
        // row[j] holds the value for the current prefix of `a`, row[j + 1]
        // still the previous one until overwritten
        let mut diag = 0;
        for (j, y) in b.iter().enumerate() {
            let up = row[j + 1];
            row[j + 1] = if x == y { diag + 1 } else { up.max(row[j]) };
            diag = up;
        }
    }
    row[b.len()] as usize
}

/// `|a| + |b| - 2 lcs(a, b)`: the fewest insertions and deletions turning
/// `a` into `b`.
pub fn insdel_distance<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    a.len() + b.len() - 2 * lcs(a, b)
}
