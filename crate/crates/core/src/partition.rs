//! Integer partitions: Jordan types and Green's partitions.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let n = parts.iter().sum();
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(format!("{parts:?}"), n));
        }
        Ok(Self(parts))
    }

    /// Sorts `parts` decreasingly and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    /// `(1, 1, …, 1)`.
    pub fn ones(n: usize) -> Self {
        Self(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `μ_k` = number of parts `≥ k`.
    pub fn conjugate(&self) -> Self {
        let top = self.0.first().copied().unwrap_or(0);
        Self((1..=top).map(|k| self.0.iter().filter(|&&p| p >= k).count()).collect())
    }

    /// Dominance order; `None` when the partitions are incomparable or have
    /// different sizes.
    pub fn dominance_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.size() != other.size() {
            return None;
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        let (mut le, mut ge) = (true, true);
        for k in 0..len {
            a += self.0.get(k).copied().unwrap_or(0);
            b += other.0.get(k).copied().unwrap_or(0);
            le &= a <= b;
            ge &= a >= b;
        }
        match (le, ge) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }

    pub fn dominated_by(&self, other: &Self) -> bool {
        matches!(self.dominance_cmp(other), Some(Ordering::Less | Ordering::Equal))
    }

    /// Every even part occurs an even number of times.
    pub fn even_parts_have_even_multiplicity(&self) -> bool {
        self.0
            .iter()
            .filter(|&&p| p % 2 == 0)
            .all(|&p| self.0.iter().filter(|&&q| q == p).count() % 2 == 0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join("+"))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `3+2+1`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split('+')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidArgument(format!("cannot parse partition {s:?}")))?;
        Self::new(parts)
    }
}

/// All partitions of `n`, largest first in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
