//! Tableau fillings and the counts that make up every transition matrix.
//!
//! - [`ssyt`]: Kostka numbers and their row/column sums.
//! - [`zero_one`]: (0,1)-matrices with prescribed row and column sums.
//! - [`composition`]: semistandard and standard composition tableaux.
//! - [`witness`]: explicit pairs of distinct objects showing a count is at least 2.

pub mod composition;
pub mod ssyt;
pub mod witness;
pub mod zero_one;

use std::fmt;

use crate::combinatorics::{Composition, Partition};
use crate::error::{Error, Result};

pub use composition::{
    descent_composition, descent_set, is_single_sct_shape, sct_count, sct_descent_tally, sct_total,
    ssct_count, ssct_row_sum, standard_composition_tableaux,
};
pub use ssyt::{kostka, kostka_col_sum, kostka_row_sum};
pub use zero_one::{zero_one_count, zero_one_row_sum, ZeroOneMatrix};

/// The diagram a filling lives on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Shape {
    Young(Partition),
    Composition(Composition),
}

impl Shape {
    pub fn row_lengths(&self) -> &[u32] {
        match self {
            Shape::Young(p) => p.parts(),
            Shape::Composition(c) => c.parts(),
        }
    }

    pub fn size(&self) -> u32 {
        self.row_lengths().iter().sum()
    }
}

/// Multiplicities `(c₁, …, c_max)` of the entries of a filling.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Content(Vec<u32>);

impl Content {
    pub fn counts(&self) -> &[u32] {
        &self.0
    }

    /// Some(μ) when the counts are weakly decreasing and nonzero.
    pub fn as_partition(&self) -> Option<Partition> {
        Partition::new(self.0.clone()).ok()
    }

    /// Some(β) when every count is nonzero.
    pub fn as_composition(&self) -> Option<Composition> {
        Composition::new(self.0.clone()).ok()
    }
}

/// A shape together with a grid of positive entries, one row per part.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TableauFilling {
    shape: Shape,
    rows: Vec<Vec<u32>>,
}

impl TableauFilling {
    pub fn new(shape: Shape, rows: Vec<Vec<u32>>) -> Result<Self> {
        let lengths = shape.row_lengths();
        if lengths.len() != rows.len() {
            return Err(Error::DimensionMismatch {
                expected: lengths.len(),
                actual: rows.len(),
            });
        }
        for (len, row) in lengths.iter().zip(&rows) {
            if *len as usize != row.len() {
                return Err(Error::DimensionMismatch {
                    expected: *len as usize,
                    actual: row.len(),
                });
            }
            if row.contains(&0) {
                return Err(Error::Malformed("tableau entries must be positive".into()));
            }
        }
        Ok(TableauFilling { shape, rows })
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry in row `r`, column `c` (0-indexed), if that box exists.
    pub fn get(&self, r: usize, c: usize) -> Option<u32> {
        self.rows.get(r).and_then(|row| row.get(c)).copied()
    }

    pub fn content(&self) -> Content {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0; max];
        for &v in self.rows.iter().flatten() {
            counts[v as usize - 1] += 1;
        }
        Content(counts)
    }

    /// Rows weakly increase, columns strictly increase. Young shapes only.
    pub fn is_ssyt(&self) -> bool {
        if !matches!(self.shape, Shape::Young(_)) {
            return false;
        }
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self.rows.windows(2).all(|pair| {
            pair[1]
                .iter()
                .zip(&pair[0])
                .all(|(below, above)| below > above)
        });
        rows_ok && cols_ok
    }

    /// Rows weakly decrease, the first column strictly increases, and the
    /// triple rule holds. Composition shapes only.
    pub fn is_ssct(&self) -> bool {
        if !matches!(self.shape, Shape::Composition(_)) {
            return false;
        }
        if !self.rows.iter().all(|r| r.windows(2).all(|w| w[0] >= w[1])) {
            return false;
        }
        if !self.rows.windows(2).all(|pair| pair[0][0] < pair[1][0]) {
            return false;
        }
        // Triple rule: for i < j and m ≥ 1 with τ(j,m) and τ(i,m-1) present,
        // τ(j,m) ≤ τ(i,m-1) forces τ(i,m) to exist with τ(j,m) < τ(i,m).
        for j in 0..self.rows.len() {
            for m in 1..self.rows[j].len() {
                let low = self.rows[j][m];
                for i in 0..j {
                    let Some(left) = self.get(i, m - 1) else {
                        continue;
                    };
                    if low <= left {
                        match self.get(i, m) {
                            Some(top) if low < top => {}
                            _ => return false,
                        }
                    }
                }
            }
        }
        true
    }

    /// Each of `1..=n` appears exactly once.
    pub fn is_standard(&self) -> bool {
        let n = self.shape.size() as usize;
        let content = self.content();
        content.0.len() == n && content.0.iter().all(|&c| c == 1)
    }
}

impl fmt::Debug for TableauFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TableauFilling")
            .field("shape", &self.shape)
            .field("rows", &self.rows)
            .finish()
    }
}

impl fmt::Display for TableauFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

pub(crate) fn check_sizes(left: u32, right: u32) -> Result<()> {
    if left != right {
        return Err(Error::SizeMismatch { left, right });
    }
    Ok(())
}
