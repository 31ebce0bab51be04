//! p-restricted partitions (Jordan types).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing list of positive parts. The empty partition is the Jordan
/// type of the zero module.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sorts the parts and drops zeros.
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Like [`Partition::from_parts`] but rejects parts larger than `p`.
    pub fn restricted(parts: Vec<usize>, p: u32) -> Result<Self> {
        let part = Self::from_parts(parts);
        if part.parts.first().is_some_and(|&m| m > p as usize) {
            return Err(Error::Range(format!("part {} exceeds p = {p}", part.parts[0])));
        }
        Ok(part)
    }

    /// `[a][a]...` repeated `count` times.
    pub fn uniform(part: usize, count: usize) -> Self {
        Self::from_parts(vec![part; count])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.parts.iter().filter(|&&x| x == i).count()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().filter(|&&x| x >= c).count())
            .collect();
        Partition { parts }
    }

    /// Jordan type from the ranks `rank T^0, rank T^1, ...` of the powers of a
    /// nilpotent operator: the column lengths are the successive differences.
    pub fn from_rank_sequence(ranks: &[usize]) -> Result<Self> {
        let mut columns = Vec::with_capacity(ranks.len());
        for w in ranks.windows(2) {
            if w[1] > w[0] {
                return Err(Error::Range(format!("rank sequence {ranks:?} is not decreasing")));
            }
            columns.push(w[0] - w[1]);
        }
        for w in columns.windows(2) {
            if w[1] > w[0] {
                return Err(Error::Range(format!(
                    "rank differences {columns:?} are not a partition"
                )));
            }
        }
        Ok(Self::from_parts(columns).conjugate())
    }

    /// Multiset union.
    pub fn union(&self, other: &Self) -> Self {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Self::from_parts(parts)
    }

    /// Parses exponential notation such as `[3][2]^2[1]`; `[]` is the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "[]" || s.is_empty() {
            return Ok(Self::empty());
        }
        let mut parts = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('[')
                .ok_or_else(|| Error::Parse(format!("expected '[' in {s:?}")))?;
            let close = inner
                .find(']')
                .ok_or_else(|| Error::Parse(format!("unclosed '[' in {s:?}")))?;
            let part: usize = inner[..close]
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad part in {s:?}")))?;
            rest = &inner[close + 1..];
            let mut count = 1;
            if let Some(r) = rest.strip_prefix('^') {
                let end = r.find('[').unwrap_or(r.len());
                count = r[..end]
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in {s:?}")))?;
                rest = &r[end..];
            }
            parts.extend(std::iter::repeat_n(part, count));
        }
        Ok(Self::from_parts(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "[]");
        }
        let mut i = 0;
        while i < self.parts.len() {
            let part = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&x| x == part).count();
            write!(f, "[{part}]")?;
            if run > 1 {
                write!(f, "^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}
