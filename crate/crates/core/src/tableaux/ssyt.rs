//! Kostka numbers.
//!
//! An SSYT of shape λ and content μ is a chain of shapes
//! `∅ ⊂ λ¹ ⊂ ⋯ ⊂ λ^ℓ = λ` where `λ^k / λ^{k−1}` is a horizontal strip of
//! size `μ_k` (the boxes holding entry `k`). Counting peels strips off the
//! outer shape, memoized on the intermediate shape.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::check_sizes;
use crate::combinatorics::{partitions_of, Partition};
use crate::error::Result;

/// `K_{λμ}`: the number of SSYT of shape `shape` and content `content`.
pub fn kostka(shape: &Partition, content: &Partition) -> Result<BigUint> {
    check_sizes(shape.size(), content.size())?;
    Ok(count_ssyt(shape.parts(), content.parts()))
}

/// Number of SSYT of the given shape whose content is exactly `content`
/// (a weak composition is allowed).
pub(crate) fn count_ssyt(shape: &[u32], content: &[u32]) -> BigUint {
    if shape.iter().sum::<u32>() != content.iter().sum::<u32>() {
        return BigUint::zero();
    }
    let mut memo = HashMap::new();
    peel(shape.to_vec(), content.len(), content, &mut memo)
}

fn peel(
    shape: Vec<u32>,
    k: usize,
    content: &[u32],
    memo: &mut HashMap<(Vec<u32>, usize), BigUint>,
) -> BigUint {
    if k == 0 {
        return if shape.is_empty() {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    // Column strictness: a column of height h needs h distinct values.
    if shape.len() > k {
        return BigUint::zero();
    }
    let key = (shape, k);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let shape = &key.0;
    let mut total = BigUint::zero();
    let mut inner = shape.clone();
    remove_strip(shape, 0, content[k - 1], &mut inner, &mut |nu| {
        let mut nu = nu.to_vec();
        while nu.last() == Some(&0) {
            nu.pop();
        }
        total += peel(nu, k - 1, content, memo);
    });
    memo.insert(key, total.clone());
    total
}

/// Enumerates inner shapes ν with `shape/ν` a horizontal strip of `size`
/// boxes: `shape[i+1] ≤ ν[i] ≤ shape[i]`.
fn remove_strip(
    shape: &[u32],
    row: usize,
    size: u32,
    inner: &mut Vec<u32>,
    visit: &mut dyn FnMut(&[u32]),
) {
    if row == shape.len() {
        if size == 0 {
            visit(inner);
        }
        return;
    }
    let floor = shape.get(row + 1).copied().unwrap_or(0);
    let max_take = (shape[row] - floor).min(size);
    for take in 0..=max_take {
        inner[row] = shape[row] - take;
        remove_strip(shape, row + 1, size - take, inner, visit);
    }
    inner[row] = shape[row];
}

/// `𝒦_λ = Σ_{μ ⊢ n} K_{λμ}`: SSYT of shape λ with partition content.
pub fn kostka_row_sum(shape: &Partition) -> BigUint {
    partitions_of(shape.size())
        .iter()
        .map(|mu| count_ssyt(shape.parts(), mu.parts()))
        .sum()
}

/// `ℰ_λ = Σ_{μ ⊢ n} K_{μλ}`: SSYT of any shape with content λ.
pub fn kostka_col_sum(content: &Partition) -> BigUint {
    partitions_of(content.size())
        .iter()
        .map(|mu| count_ssyt(mu.parts(), content.parts()))
        .sum()
}
