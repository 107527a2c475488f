//! Integer partitions, three-block shape expressions and standard Young
//! tableau counts.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numbers::factorial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<u32>),
}

/// A weakly decreasing tuple of positive integers.
///
/// Parts are stored densely. The derived ordering is lexicographic on the
/// parts, which is the order used for deterministic output everywhere.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, silently dropping zero parts.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self, PartitionError> {
        let mut parts: Vec<u32> = parts.into();
        parts.retain(|&p| p != 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row shape `(m)`.
    pub fn row(m: u32) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Partition(vec![m])
        }
    }

    /// The one-column shape `(1^m)`.
    pub fn column(m: u32) -> Self {
        Partition(vec![1; m as usize])
    }

    /// The hook `(arm, 1^legs)`. Requires `arm >= 1` unless `legs == 0`.
    pub fn hook(arm: u32, legs: u32) -> Option<Self> {
        ShapeExpr::new(arm as i64, 0, legs as i64).normalize()
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn is_hook(&self) -> bool {
        self.0.iter().skip(1).all(|&p| p == 1)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let mut cols = vec![0u32; width];
        for &p in &self.0 {
            for c in cols.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition(cols)
    }

    /// One hook length per cell, listed row by row.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size() as usize);
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row - j as u32 - 1;
                let leg = conj.part(j) - i as u32 - 1;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }

    /// Number of standard Young tableaux, by the hook-length formula.
    pub fn dim_syt(&self) -> BigInt {
        let prod: BigInt = self
            .hook_lengths()
            .into_iter()
            .fold(BigInt::one(), |acc, h| acc * h);
        factorial(self.size()) / prod
    }

    /// `sum_i (i - 1) * lambda_i` over rows numbered from 1.
    pub fn n_stat(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p as u64)
            .sum()
    }

    /// Shapes obtained by deleting one removable corner, in row order.
    pub fn remove_one_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.0.len() {
            if self.part(i) > self.part(i + 1) {
                let mut parts = self.0.clone();
                parts[i] -= 1;
                if parts[i] == 0 {
                    parts.pop();
                }
                out.push(Partition(parts));
            }
        }
        out
    }

    /// Shapes obtained by adding one box, in row order.
    pub fn add_one_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.0.len() {
            if i == 0 || self.part(i - 1) > self.part(i) {
                let mut parts = self.0.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition(parts));
            }
        }
        out
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]) && !parts.contains(&0));
        Partition(parts)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All partitions of `n` in reverse lexicographic order, starting at `(n)`.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// The shape `(head, 2^twos, 1^ones)` with possibly negative multiplicities.
///
/// Only shapes of this form occur in the uniform and paving formulas; a
/// shape that is not a valid partition stands for the zero representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShapeExpr {
    pub head: i64,
    pub twos: i64,
    pub ones: i64,
}

impl ShapeExpr {
    pub fn new(head: i64, twos: i64, ones: i64) -> Self {
        ShapeExpr { head, twos, ones }
    }

    pub fn normalize(&self) -> Option<Partition> {
        let ShapeExpr { head, twos, ones } = *self;
        if twos < 0 || ones < 0 || head < 0 {
            return None;
        }
        if twos > 0 && head < 2 {
            return None;
        }
        if head == 0 {
            return (twos == 0 && ones == 0).then(Partition::empty);
        }
        let mut parts = Vec::with_capacity(1 + (twos + ones) as usize);
        parts.push(head as u32);
        parts.extend(std::iter::repeat_n(2, twos as usize));
        parts.extend(std::iter::repeat_n(1, ones as usize));
        Some(Partition(parts))
    }
}

/// Shorthand for building partitions in tests and examples.
#[macro_export]
macro_rules! partition {
    () => { $crate::partition::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partition::Partition::new(vec![$($p as u32),+]).expect("valid partition")
    };
}
