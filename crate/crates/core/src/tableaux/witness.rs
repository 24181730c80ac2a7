//! Explicit pairs of distinct objects that bound a count from below by 2.
//!
//! Each function returns `None` exactly on the shape for which the count is 1.

use super::{Shape, TableauFilling, ZeroOneMatrix};
use crate::combinatorics::{Composition, Partition};

fn rows_filled_with_index(parts: &[u32]) -> Vec<Vec<u32>> {
    parts
        .iter()
        .enumerate()
        .map(|(i, &len)| vec![i as u32 + 1; len as usize])
        .collect()
}

/// Two SSYT of shape λ with partition content, for λ ≠ (1ⁿ): the row
/// reading `1..n`, and row `i` filled with `i`.
pub fn ssyt_shape_witnesses(shape: &Partition) -> Option<[TableauFilling; 2]> {
    if shape.parts().iter().all(|&p| p == 1) {
        return None;
    }
    let mut next = 0;
    let reading = shape
        .parts()
        .iter()
        .map(|&len| {
            (0..len)
                .map(|_| {
                    next += 1;
                    next
                })
                .collect()
        })
        .collect();
    let young = Shape::Young(shape.clone());
    Some([
        TableauFilling::new(young.clone(), reading).ok()?,
        TableauFilling::new(young, rows_filled_with_index(shape.parts())).ok()?,
    ])
}

/// Two SSYT with content λ, for λ ≠ (n): row `i` filled with `i`, and the
/// same tableau with the last box of the bottom row moved to the end of row 1.
pub fn ssyt_content_witnesses(content: &Partition) -> Option<[TableauFilling; 2]> {
    if content.len() < 2 {
        return None;
    }
    let first = TableauFilling::new(
        Shape::Young(content.clone()),
        rows_filled_with_index(content.parts()),
    )
    .ok()?;
    let k = content.len();
    let mut rows = rows_filled_with_index(content.parts());
    let moved = rows[k - 1].pop()?;
    rows[0].push(moved);
    if rows[k - 1].is_empty() {
        rows.pop();
    }
    let parts = rows.iter().map(|r| r.len() as u32).collect();
    let second = TableauFilling::new(Shape::Young(Partition::new(parts).ok()?), rows).ok()?;
    Some([first, second])
}

/// Two (0,1)-matrices with row sums λ and column sums (1ⁿ), for λ ≠ (n):
/// columns are assigned to rows in blocks of λ₁, λ₂, …, then columns λ₁ and
/// λ₁+1 are swapped.
pub fn zero_one_witnesses(row_sums: &Partition) -> Option<[ZeroOneMatrix; 2]> {
    if row_sums.len() < 2 {
        return None;
    }
    let n = row_sums.size() as usize;
    let mut entries = vec![vec![false; n]; row_sums.len()];
    let mut col = 0;
    for (r, &len) in row_sums.parts().iter().enumerate() {
        for _ in 0..len {
            entries[r][col] = true;
            col += 1;
        }
    }
    let first = ZeroOneMatrix::new(entries).ok()?;
    let mut second = first.clone();
    let split = row_sums.parts()[0] as usize;
    second.swap_columns(split - 1, split);
    Some([first, second])
}

/// Two SSCT of shape α with composition content, for α ≠ (1ⁿ): the
/// standard filling with `n, n−1, …` read from the bottom row upward, and
/// row `i` filled with `i`.
pub fn ssct_shape_witnesses(shape: &Composition) -> Option<[TableauFilling; 2]> {
    if shape.parts().iter().all(|&p| p == 1) {
        return None;
    }
    let mut next = shape.size() + 1;
    let mut standard: Vec<Vec<u32>> = shape
        .parts()
        .iter()
        .rev()
        .map(|&len| {
            (0..len)
                .map(|_| {
                    next -= 1;
                    next
                })
                .collect()
        })
        .collect();
    standard.reverse();
    let comp = Shape::Composition(shape.clone());
    Some([
        TableauFilling::new(comp.clone(), standard).ok()?,
        TableauFilling::new(comp, rows_filled_with_index(shape.parts())).ok()?,
    ])
}
