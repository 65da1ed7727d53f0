//! Partitions with bounded parts and the anti-graded lex order.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::StarParams;

/// A non-increasing sequence of positive integers `[d_1, …, d_t]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidParams(format!(
                "partition parts must be positive, got {parts:?}"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParams(format!(
                "partition parts must be non-increasing, got {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok());
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `d_j`, 1-based.
    pub fn part(&self, j: usize) -> usize {
        self.0[j - 1]
    }

    /// Number of parts `t`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn last(&self) -> usize {
        *self.0.last().expect("partitions are nonempty")
    }

    /// Anti-graded lex: fewer parts is larger; equal length falls back to lex.
    pub fn alex_cmp(&self, other: &Partition) -> Ordering {
        other
            .0
            .len()
            .cmp(&self.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("]")
    }
}

/// Partitions of `m` into parts at most `c`, optionally of exact length `t`,
/// listed from the alex-largest down.
pub fn enumerate_partitions(params: &StarParams, t: Option<usize>) -> Result<Vec<Partition>> {
    let (m, c) = (params.m(), params.c());
    let lengths: Vec<usize> = match t {
        Some(t) => {
            params.check_length(t)?;
            vec![t]
        }
        None => (params.min_length()..=m).collect(),
    };
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(m);
    for len in lengths {
        fill(m, c, len, &mut buf, &mut out);
    }
    Ok(out)
}

/// Appends every length-`len` partition of `rest` with parts `≤ cap`, lex-descending.
fn fill(rest: usize, cap: usize, len: usize, buf: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if len == 0 {
        if rest == 0 {
            out.push(Partition(buf.clone()));
        }
        return;
    }
    if rest < len || rest > cap * len {
        return;
    }
    let hi = cap.min(rest - (len - 1));
    let lo = rest.div_ceil(len);
    for d in (lo..=hi).rev() {
        buf.push(d);
        fill(rest - d, d, len - 1, buf, out);
        buf.pop();
    }
}
