//! Semistandard and standard composition tableaux.
//!
//! Fillings are built box by box in row-major order. Every constraint that
//! involves a box only looks at boxes above it or to its left, so each
//! placement can be checked on the spot.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;

use super::{check_sizes, Shape, TableauFilling};
use crate::combinatorics::{compositions_of, Composition};
use crate::error::Result;

struct Search<'a> {
    shape: &'a [u32],
    cells: Vec<(usize, usize)>,
    rows: Vec<Vec<u32>>,
    remaining: Vec<u32>,
}

impl<'a> Search<'a> {
    fn new(shape: &'a [u32], content: &[u32]) -> Self {
        let cells = shape
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
            .collect();
        Search {
            shape,
            cells,
            rows: shape
                .iter()
                .map(|&l| Vec::with_capacity(l as usize))
                .collect(),
            remaining: content.to_vec(),
        }
    }

    fn admissible(&self, r: usize, c: usize, v: u32) -> bool {
        if c > 0 && v > self.rows[r][c - 1] {
            return false;
        }
        if c == 0 && r > 0 && v <= self.rows[r - 1][0] {
            return false;
        }
        if c > 0 {
            for i in 0..r {
                if (self.shape[i] as usize) < c {
                    continue;
                }
                if v <= self.rows[i][c - 1] {
                    let ok = (self.shape[i] as usize) > c && v < self.rows[i][c];
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, idx: usize, visit: &mut dyn FnMut(&[Vec<u32>])) {
        if idx == self.cells.len() {
            visit(&self.rows);
            return;
        }
        let (r, c) = self.cells[idx];
        for v in 1..=self.remaining.len() as u32 {
            if self.remaining[v as usize - 1] == 0 || !self.admissible(r, c, v) {
                continue;
            }
            self.remaining[v as usize - 1] -= 1;
            self.rows[r].push(v);
            self.run(idx + 1, visit);
            self.rows[r].pop();
            self.remaining[v as usize - 1] += 1;
        }
    }
}

fn for_each_ssct(shape: &[u32], content: &[u32], visit: &mut dyn FnMut(&[Vec<u32>])) {
    if shape.iter().sum::<u32>() != content.iter().sum::<u32>() {
        return;
    }
    Search::new(shape, content).run(0, visit);
}

/// `K^c_{αβ}`: SSCT of shape α with content β.
pub fn ssct_count(shape: &Composition, content: &Composition) -> Result<BigUint> {
    check_sizes(shape.size(), content.size())?;
    let mut count = 0u64;
    for_each_ssct(shape.parts(), content.parts(), &mut |_| count += 1);
    Ok(BigUint::from(count))
}

/// `𝒦^c_α`: SSCT of shape α with composition content.
pub fn ssct_row_sum(shape: &Composition) -> BigUint {
    compositions_of(shape.size())
        .iter()
        .map(|beta| ssct_count(shape, beta).expect("sizes agree"))
        .sum()
}

/// All standard composition tableaux of shape α.
pub fn standard_composition_tableaux(shape: &Composition) -> Vec<TableauFilling> {
    let n = shape.size() as usize;
    let mut out = Vec::new();
    for_each_ssct(shape.parts(), &vec![1; n], &mut |rows| {
        out.push(
            TableauFilling::new(Shape::Composition(shape.clone()), rows.to_vec())
                .expect("rows follow the shape"),
        );
    });
    out
}

/// `{i : i+1 is weakly right of i}`, reading "weakly right" as
/// `column(i+1) ≥ column(i)`. Expects a standard filling.
pub fn descent_set(tableau: &TableauFilling) -> BTreeSet<u32> {
    let n = tableau.shape().size() as usize;
    let mut column = vec![0usize; n + 1];
    for row in tableau.rows() {
        for (c, &v) in row.iter().enumerate() {
            column[v as usize] = c;
        }
    }
    (1..n as u32)
        .filter(|&i| column[i as usize + 1] >= column[i as usize])
        .collect()
}

pub fn descent_composition(tableau: &TableauFilling) -> Composition {
    Composition::from_set(&descent_set(tableau), tableau.shape().size())
        .expect("descent set lies in [n-1]")
}

/// SCT of shape α grouped by descent composition.
pub fn sct_descent_tally(shape: &Composition) -> BTreeMap<Composition, BigUint> {
    let mut tally: BTreeMap<Composition, u64> = BTreeMap::new();
    for t in standard_composition_tableaux(shape) {
        *tally.entry(descent_composition(&t)).or_default() += 1;
    }
    tally
        .into_iter()
        .map(|(k, v)| (k, BigUint::from(v)))
        .collect()
}

/// `d_{αβ}`: SCT of shape α with descent composition β.
pub fn sct_count(shape: &Composition, descent: &Composition) -> Result<BigUint> {
    check_sizes(shape.size(), descent.size())?;
    Ok(sct_descent_tally(shape).remove(descent).unwrap_or_default())
}

/// `𝒟_α`: all SCT of shape α.
pub fn sct_total(shape: &Composition) -> BigUint {
    BigUint::from(standard_composition_tableaux(shape).len())
}

/// True iff α = (m, 1^{ε₁}, 2, 1^{ε₂}, …, 2, 1^{ε_k}) with m ≥ 0, k ≥ 0,
/// ε_i ≥ 1 for i < k and ε_k ≥ 0 (m = 0 meaning the part is absent).
/// These are exactly the shapes with a single standard composition tableau.
pub fn is_single_sct_shape(shape: &Composition) -> bool {
    // After the optional leading m, the tail must use only 1s and 2s, and
    // every 2 must directly follow a 1.
    fn tail_ok(tail: &[u32]) -> bool {
        let mut prev_one = false;
        for &p in tail {
            match p {
                1 => prev_one = true,
                2 if prev_one => prev_one = false,
                _ => return false,
            }
        }
        true
    }
    let parts = shape.parts();
    tail_ok(parts) || tail_ok(&parts[1.min(parts.len())..])
}
