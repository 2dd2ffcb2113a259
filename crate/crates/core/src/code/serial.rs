//! Line-oriented `key=value` text format for codes.
//!
//! ```text
//! format=rsinsdel-code/1
//! p=7
//! e=1
//! modulus=
//! gamma_min_poly=2,0,0,1
//! k=2
//! n=6
//! kind=square
//! alpha=50,198,13,...
//! delta=1,2,3,4,5,6
//! ```
//!
//! * `modulus`: base-field defining polynomial over GF(p), low degree first
//!   with the leading `1`; empty for prime fields.
//! * `gamma_min_poly`: minimal cubic of γ over the base field, low degree
//!   first, coefficients as canonical base-field integers.
//! * `alpha`: evaluation points as canonical tower integers
//!   `c0 + c1*q + c2*q^2`.
//! * `kind`: `square`, `inverse`, or `none` for codes without construction
//!   provenance. `delta` lists the generating base-field elements aligned
//!   with `alpha` and must be empty when `kind=none`.
//!
//! Blank lines and lines starting with `#` are ignored.

use std::collections::HashMap;

use super::{ConstructionKind, RsCode};
use crate::error::{Error, Result};
use crate::field::{BaseField, Field, TowerField};

pub const FORMAT_TAG: &str = "rsinsdel-code/1";

const KEYS: [&str; 10] = [
    "format",
    "p",
    "e",
    "modulus",
    "gamma_min_poly",
    "k",
    "n",
    "kind",
    "alpha",
    "delta",
];

fn join(values: impl IntoIterator<Item = u64>) -> String {
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Serializes `code` as a code record.
pub fn to_record(code: &RsCode) -> String {
    let tower = code.tower();
    let base = tower.base();
    let (kind, delta) = match code.provenance() {
        Some(p) => (p.kind.name(), join(p.deltas.iter().map(|d| d.value()))),
        None => ("none", String::new()),
    };
    let lines = [
        ("format", FORMAT_TAG.to_string()),
        ("p", base.p().to_string()),
        ("e", base.e().to_string()),
        ("modulus", join(base.modulus().iter().copied())),
        ("gamma_min_poly", join(tower.min_poly())),
        ("k", code.k().to_string()),
        ("n", code.n().to_string()),
        ("kind", kind.to_string()),
        ("alpha", join(code.alpha().iter().map(|&a| tower.encode(a)))),
        ("delta", delta),
    ];
    lines.iter().map(|(k, v)| format!("{k}={v}\n")).collect()
}

struct Record<'a> {
    fields: HashMap<&'a str, (usize, &'a str)>,
}

impl<'a> Record<'a> {
    fn parse(text: &'a str) -> Result<Self> {
        let mut fields = HashMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| Error::Parse {
                line: line_no,
                msg: format!("expected key=value, got `{line}`"),
            })?;
            let key = key.trim();
            if !KEYS.contains(&key) {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("unknown key `{key}`"),
                });
            }
            if fields.insert(key, (line_no, value.trim())).is_some() {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("duplicate key `{key}`"),
                });
            }
        }
        Ok(Record { fields })
    }

    fn get(&self, key: &str) -> Result<(usize, &'a str)> {
        self.fields.get(key).copied().ok_or_else(|| Error::Parse {
            line: 0,
            msg: format!("missing key `{key}`"),
        })
    }

    fn int<T: std::str::FromStr>(&self, key: &str) -> Result<(usize, T)> {
        let (line, v) = self.get(key)?;
        let parsed = v.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("`{key}` must be a non-negative integer, got `{v}`"),
        })?;
        Ok((line, parsed))
    }

    fn list(&self, key: &str) -> Result<(usize, Vec<u64>)> {
        let (line, v) = self.get(key)?;
        if v.is_empty() {
            return Ok((line, Vec::new()));
        }
        let items = v
            .split(',')
            .map(|s| {
                s.trim().parse::<u64>().map_err(|_| Error::Parse {
                    line,
                    msg: format!("`{key}` holds a non-integer entry `{s}`"),
                })
            })
            .collect::<Result<_>>()?;
        Ok((line, items))
    }
}

fn at(line: usize) -> impl Fn(Error) -> Error {
    move |e| match e {
        e @ Error::Parse { .. } => e,
        other => Error::Parse {
            line,
            msg: other.to_string(),
        },
    }
}

/// Parses and validates a code record.
pub fn from_record(text: &str) -> Result<RsCode> {
    let rec = Record::parse(text)?;
    let (line, tag) = rec.get("format")?;
    if tag != FORMAT_TAG {
        return Err(Error::Parse {
            line,
            msg: format!("unsupported format `{tag}`, expected `{FORMAT_TAG}`"),
        });
    }
    let (_, p) = rec.int::<u64>("p")?;
    let (line_e, e) = rec.int::<u32>("e")?;
    let (_, modulus) = rec.list("modulus")?;
    let modulus = (!modulus.is_empty()).then_some(modulus.as_slice());
    let base = BaseField::new(p, e, modulus).map_err(at(line_e))?;
    let (line_g, gamma) = rec.list("gamma_min_poly")?;
    let tower = TowerField::with_min_poly(base, &gamma).map_err(at(line_g))?;
    let (line_k, k) = rec.int::<usize>("k")?;
    let (line_n, n) = rec.int::<usize>("n")?;
    let (line_a, alpha) = rec.list("alpha")?;
    if alpha.len() != n {
        return Err(Error::Parse {
            line: line_n,
            msg: format!("n={n} but alpha lists {} points", alpha.len()),
        });
    }
    let alpha = alpha
        .iter()
        .map(|&v| tower.decode(v))
        .collect::<Result<Vec<_>>>()
        .map_err(at(line_a))?;
    let (line_kind, kind) = rec.get("kind")?;
    let (line_d, delta) = rec.list("delta")?;
    if kind == "none" {
        if !delta.is_empty() {
            return Err(Error::Parse {
                line: line_d,
                msg: "delta must be empty when kind=none".into(),
            });
        }
        return RsCode::new(tower, k, alpha).map_err(at(line_a));
    }
    let kind: ConstructionKind = kind.parse().map_err(|msg| Error::Parse {
        line: line_kind,
        msg,
    })?;
    if k != 2 {
        return Err(Error::Parse {
            line: line_k,
            msg: format!("constructed codes have k=2, got k={k}"),
        });
    }
    if delta.len() != n {
        return Err(Error::Parse {
            line: line_d,
            msg: format!("n={n} but delta lists {} elements", delta.len()),
        });
    }
    let deltas = delta
        .iter()
        .map(|&v| tower.base().decode(v))
        .collect::<Result<Vec<_>>>()
        .map_err(at(line_d))?;
    // ordering relative to the δ-set sorted by canonical integer
    let mut sorted = deltas.clone();
    sorted.sort();
    let ordering = deltas
        .iter()
        .map(|d| sorted.binary_search(d).expect("present"))
        .collect();
    let code = RsCode::from_deltas(tower, kind, deltas, ordering).map_err(at(line_d))?;
    if code.alpha() != alpha.as_slice() {
        return Err(Error::Parse {
            line: line_a,
            msg: format!("alpha does not match the {kind} construction applied to delta"),
        });
    }
    Ok(code)
}
