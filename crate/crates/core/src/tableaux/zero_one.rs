//! (0,1)-matrices with prescribed row and column sums.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::check_sizes;
use crate::combinatorics::{partitions_of, Partition};
use crate::error::{Error, Result};

/// A rectangular 0/1 grid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZeroOneMatrix {
    entries: Vec<Vec<bool>>,
}

impl ZeroOneMatrix {
    pub fn new(entries: Vec<Vec<bool>>) -> Result<Self> {
        if let Some(first) = entries.first() {
            if let Some(bad) = entries.iter().find(|r| r.len() != first.len()) {
                return Err(Error::DimensionMismatch {
                    expected: first.len(),
                    actual: bad.len(),
                });
            }
        }
        Ok(ZeroOneMatrix { entries })
    }

    pub fn entries(&self) -> &[Vec<bool>] {
        &self.entries
    }

    pub fn row_sums(&self) -> Vec<u32> {
        self.entries
            .iter()
            .map(|r| r.iter().filter(|&&b| b).count() as u32)
            .collect()
    }

    pub fn col_sums(&self) -> Vec<u32> {
        let width = self.entries.first().map_or(0, Vec::len);
        (0..width)
            .map(|c| self.entries.iter().filter(|r| r[c]).count() as u32)
            .collect()
    }

    pub fn swap_columns(&mut self, a: usize, b: usize) {
        for row in &mut self.entries {
            row.swap(a, b);
        }
    }
}

/// `M_{λμ}`: number of (0,1)-matrices with row sums λ and column sums μ.
pub fn zero_one_count(row_sums: &Partition, col_sums: &Partition) -> Result<BigUint> {
    check_sizes(row_sums.size(), col_sums.size())?;
    Ok(count_zero_one(row_sums.parts(), col_sums.parts()))
}

/// `ℳ_λ = Σ_{μ ⊢ n} M_{λμ}`.
pub fn zero_one_row_sum(row_sums: &Partition) -> BigUint {
    partitions_of(row_sums.size())
        .iter()
        .map(|mu| count_zero_one(row_sums.parts(), mu.parts()))
        .sum()
}

/// Row-by-row count. Columns are interchangeable apart from their remaining
/// capacity, so the state is the sorted multiset of capacities.
pub(crate) fn count_zero_one(rows: &[u32], cols: &[u32]) -> BigUint {
    if rows.iter().sum::<u32>() != cols.iter().sum::<u32>() {
        return BigUint::zero();
    }
    let mut caps = cols.to_vec();
    caps.sort_unstable_by(|a, b| b.cmp(a));
    let mut memo = HashMap::new();
    place_rows(rows, caps, &mut memo)
}

fn place_rows(
    rows: &[u32],
    caps: Vec<u32>,
    memo: &mut HashMap<(usize, Vec<u32>), BigUint>,
) -> BigUint {
    let Some((&need, rest)) = rows.split_first() else {
        return if caps.iter().all(|&c| c == 0) {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    };
    let key = (rows.len(), caps);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    // Group equal positive capacities: (capacity, multiplicity).
    let mut groups: Vec<(u32, u32)> = Vec::new();
    for &c in key.1.iter().filter(|&&c| c > 0) {
        match groups.last_mut() {
            Some((v, m)) if *v == c => *m += 1,
            _ => groups.push((c, 1)),
        }
    }
    let zeros = key.1.iter().filter(|&&c| c == 0).count();
    let mut total = BigUint::zero();
    let mut takes = vec![0u32; groups.len()];
    choose_columns(&groups, 0, need, &mut takes, &mut |takes| {
        let mut ways = BigUint::one();
        let mut next = Vec::with_capacity(key.1.len());
        for ((cap, mult), &t) in groups.iter().zip(takes) {
            ways *= binomial(*mult, t);
            next.extend(std::iter::repeat_n(cap - 1, t as usize));
            next.extend(std::iter::repeat_n(*cap, (mult - t) as usize));
        }
        next.extend(std::iter::repeat_n(0, zeros));
        next.sort_unstable_by(|a, b| b.cmp(a));
        total += ways * place_rows(rest, next, memo);
    });
    memo.insert(key, total.clone());
    total
}

fn choose_columns(
    groups: &[(u32, u32)],
    idx: usize,
    need: u32,
    takes: &mut Vec<u32>,
    visit: &mut dyn FnMut(&[u32]),
) {
    if idx == groups.len() {
        if need == 0 {
            visit(takes);
        }
        return;
    }
    for t in 0..=groups[idx].1.min(need) {
        takes[idx] = t;
        choose_columns(groups, idx + 1, need - t, takes, visit);
    }
    takes[idx] = 0;
}

fn binomial(n: u32, k: u32) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
