//! Partitions and compositions: the labels that index every basis.
//!
//! Partitions are stored weakly decreasing and ordered lexicographically.
//! Compositions keep their part order and are ordered by the "sorted shape
//! first, then lexicographic" total order (written ◁ in the docs below).
//! Run-length notation such as `(2,1²)` is only used for display.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Lexicographic comparison of part sequences.
///
/// A missing part compares smaller than any positive part, so the comparator
/// is total even on sequences of different lengths.
pub fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

fn fmt_parts(parts: &[u32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

/// Run-length rendering, e.g. `(2,1^2)` for `(2,1,1)`.
pub fn abbreviate(parts: &[u32]) -> String {
    let mut out = String::from("(");
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        if i > 0 {
            out.push(',');
        }
        out.push_str(&parts[i].to_string());
        if j - i > 1 {
            out.push('^');
            out.push_str(&(j - i).to_string());
        }
        i = j;
    }
    out.push(')');
    out
}

/// An integer partition, parts weakly decreasing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition { parts });
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The single-column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The conjugate partition: `λ'_i = #{j : λ_j ≥ i}`.
    pub fn transpose(&self) -> Partition {
        let max = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=max)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_cmp(&self.parts, &other.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.parts, f)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition")?;
        fmt_parts(&self.parts, f)
    }
}

/// An integer composition: positive parts in a fixed order.
///
/// `Ord` is the ◁ order: compare the sorted partitions lexicographically,
/// break ties by comparing the compositions lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition { parts });
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `λ(α)`: the parts reordered into weakly decreasing order.
    pub fn sort_to_partition(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Partial sums `{α₁, α₁+α₂, …, α₁+⋯+α_{k−1}} ⊆ [n−1]`.
    pub fn set_of(&self) -> BTreeSet<u32> {
        let mut acc = 0;
        let k = self.parts.len();
        self.parts
            .iter()
            .take(k.saturating_sub(1))
            .map(|p| {
                acc += p;
                acc
            })
            .collect()
    }

    /// Inverse of [`Composition::set_of`] for compositions of `n`.
    pub fn from_set(set: &BTreeSet<u32>, n: u32) -> Result<Self> {
        if n == 0 {
            return match set.iter().next() {
                Some(&element) => Err(Error::InvalidSubset { element, max: 0 }),
                None => Ok(Composition { parts: Vec::new() }),
            };
        }
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for &s in set {
            if s == 0 || s >= n {
                return Err(Error::InvalidSubset {
                    element: s,
                    max: n - 1,
                });
            }
            parts.push(s - prev);
            prev = s;
        }
        parts.push(n - prev);
        Ok(Composition { parts })
    }

    /// True iff `coarser` is obtained from `self` by nontrivially merging
    /// adjacent parts, i.e. `set_of(coarser) ⊊ set_of(self)`.
    pub fn properly_refines(&self, coarser: &Composition) -> bool {
        if self.size() != coarser.size() || self.parts.len() <= coarser.parts.len() {
            return false;
        }
        // Walk both part lists and check every boundary of `coarser` is a
        // boundary of `self`.
        let mut fine = self.parts.iter();
        for &target in &coarser.parts {
            let mut acc = 0;
            while acc < target {
                match fine.next() {
                    Some(p) => acc += p,
                    None => return false,
                }
            }
            if acc != target {
                return false;
            }
        }
        true
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_to_partition()
            .cmp(&other.sort_to_partition())
            .then_with(|| lex_cmp(&self.parts, &other.parts))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_parts(&self.parts, f)
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Composition")?;
        fmt_parts(&self.parts, f)
    }
}

/// All partitions of `n` in ascending lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in 1..=remaining.min(max) {
            prefix.push(first);
            go(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All compositions of `n` in ascending ◁ order.
pub fn compositions_of(n: u32) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition { parts: Vec::new() }];
    }
    let mut out: Vec<Composition> = (0u64..1 << (n - 1))
        .map(|mask| {
            let set: BTreeSet<u32> = (1..n).filter(|s| mask >> (s - 1) & 1 == 1).collect();
            Composition::from_set(&set, n).expect("subset of [n-1]")
        })
        .collect();
    out.sort();
    out
}
