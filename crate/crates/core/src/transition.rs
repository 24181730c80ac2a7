//! Unitriangular transition matrices `A_j = Σ_{i≤j} a_i^{(j)} B_i`.
//!
//! Row `j` holds the expansion of `A_j` in the `B` basis. Assembly computes
//! every entry, including those above the diagonal, and then asserts the
//! unit diagonal and lower triangularity under the stored orders.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::combinatorics::{compositions_of, partitions_of, Composition, Partition};
use crate::error::{Error, Result, TriangularityViolation};
use crate::exec::Execution;
use crate::tableaux::{sct_descent_tally, ssct_count, ssyt::count_ssyt, zero_one::count_zero_one};

/// The basis changes covered by the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisPair {
    /// Schur in monomial symmetric functions.
    SchurInMonomial,
    /// Complete homogeneous in Schur.
    HomogeneousInSchur,
    /// Elementary in Schur.
    ElementaryInSchur,
    /// Elementary in monomial symmetric functions.
    ElementaryInMonomial,
    /// Quasisymmetric Schur in monomial quasisymmetric.
    QuasiSchurInMonomial,
    /// Quasisymmetric Schur in fundamental quasisymmetric.
    QuasiSchurInFundamental,
    /// Fundamental in monomial quasisymmetric.
    FundamentalInMonomial,
}

impl BasisPair {
    pub const ALL: [BasisPair; 7] = [
        BasisPair::SchurInMonomial,
        BasisPair::HomogeneousInSchur,
        BasisPair::ElementaryInSchur,
        BasisPair::ElementaryInMonomial,
        BasisPair::QuasiSchurInMonomial,
        BasisPair::QuasiSchurInFundamental,
        BasisPair::FundamentalInMonomial,
    ];

    /// Short name used on the command line and in JSON.
    pub fn as_str(self) -> &'static str {
        match self {
            BasisPair::SchurInMonomial => "s/m",
            BasisPair::HomogeneousInSchur => "h/s",
            BasisPair::ElementaryInSchur => "e/s",
            BasisPair::ElementaryInMonomial => "e/m",
            BasisPair::QuasiSchurInMonomial => "qs/M",
            BasisPair::QuasiSchurInFundamental => "qs/F",
            BasisPair::FundamentalInMonomial => "F/M",
        }
    }

    /// Partition-indexed (symmetric) as opposed to composition-indexed.
    pub fn is_partition_indexed(self) -> bool {
        matches!(
            self,
            BasisPair::SchurInMonomial
                | BasisPair::HomogeneousInSchur
                | BasisPair::ElementaryInSchur
                | BasisPair::ElementaryInMonomial
        )
    }
}

impl fmt::Display for BasisPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BasisPair {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BasisPair::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::UnknownPair(s.to_string()))
    }
}

/// Where a matrix came from. Every probability carries this along.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Provenance {
    Pair(BasisPair),
    Custom(String),
}

impl Provenance {
    pub fn pair(&self) -> Option<BasisPair> {
        match self {
            Provenance::Pair(p) => Some(*p),
            Provenance::Custom(_) => None,
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Pair(p) => write!(f, "{p}"),
            Provenance::Custom(name) => f.write_str(name),
        }
    }
}

/// Index of a basis element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Label {
    Partition(Partition),
    Composition(Composition),
    /// Plain position, for user-supplied matrices.
    Index(usize),
}

impl Label {
    pub fn parts(&self) -> Option<&[u32]> {
        match self {
            Label::Partition(p) => Some(p.parts()),
            Label::Composition(c) => Some(c.parts()),
            Label::Index(_) => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Partition(p) => write!(f, "{p}"),
            Label::Composition(c) => write!(f, "{c}"),
            Label::Index(i) => write!(f, "#{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitionMatrix {
    provenance: Provenance,
    n: u32,
    row_labels: Vec<Label>,
    col_labels: Vec<Label>,
    rows: Vec<Vec<BigUint>>,
}

impl TransitionMatrix {
    pub fn build(pair: BasisPair, n: u32) -> Result<Self> {
        Self::build_with(pair, n, Execution::default())
    }

    pub fn build_with(pair: BasisPair, n: u32, exec: Execution) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDegree(n));
        }
        let (row_labels, col_labels, rows) = match pair {
            BasisPair::SchurInMonomial => {
                let lex = partitions_of(n);
                let rows = exec.map(&lex, |lambda| {
                    lex.iter()
                        .map(|mu| count_ssyt(lambda.parts(), mu.parts()))
                        .collect()
                });
                (partition_labels(&lex), partition_labels(&lex), rows)
            }
            BasisPair::HomogeneousInSchur => {
                let revlex = revlex_partitions(n);
                // h_λ = Σ_μ K_{μλ} s_μ
                let rows = exec.map(&revlex, |lambda| {
                    revlex
                        .iter()
                        .map(|mu| count_ssyt(mu.parts(), lambda.parts()))
                        .collect()
                });
                (partition_labels(&revlex), partition_labels(&revlex), rows)
            }
            BasisPair::ElementaryInSchur => {
                let revlex = revlex_partitions(n);
                let transposed: Vec<Partition> = revlex.iter().map(Partition::transpose).collect();
                // e_λ = ω(h_λ) = Σ_μ K_{μλ} s_{μ'}; column i is s_{λ_i'}.
                let rows = exec.map(&revlex, |lambda| {
                    revlex
                        .iter()
                        .map(|mu| count_ssyt(mu.parts(), lambda.parts()))
                        .collect()
                });
                (
                    partition_labels(&revlex),
                    partition_labels(&transposed),
                    rows,
                )
            }
            BasisPair::ElementaryInMonomial => {
                let revlex = revlex_partitions(n);
                // Column i is m_{λ_i'}: transpose of the revlex order.
                let transposed: Vec<Partition> = revlex.iter().map(Partition::transpose).collect();
                let rows = exec.map(&revlex, |lambda| {
                    transposed
                        .iter()
                        .map(|mu| count_zero_one(lambda.parts(), mu.parts()))
                        .collect()
                });
                (
                    partition_labels(&revlex),
                    partition_labels(&transposed),
                    rows,
                )
            }
            BasisPair::QuasiSchurInMonomial => {
                let comps = compositions_of(n);
                let rows = exec.map(&comps, |alpha| {
                    comps
                        .iter()
                        .map(|beta| ssct_count(alpha, beta).expect("sizes agree"))
                        .collect()
                });
                (composition_labels(&comps), composition_labels(&comps), rows)
            }
            BasisPair::QuasiSchurInFundamental => {
                let comps = compositions_of(n);
                let rows = exec.map(&comps, |alpha| {
                    let mut tally = sct_descent_tally(alpha);
                    comps
                        .iter()
                        .map(|beta| tally.remove(beta).unwrap_or_default())
                        .collect()
                });
                (composition_labels(&comps), composition_labels(&comps), rows)
            }
            BasisPair::FundamentalInMonomial => {
                let comps = compositions_of(n);
                let rows = exec.map(&comps, |alpha| {
                    comps
                        .iter()
                        .map(|beta| {
                            if beta == alpha || beta.properly_refines(alpha) {
                                BigUint::one()
                            } else {
                                BigUint::zero()
                            }
                        })
                        .collect()
                });
                (composition_labels(&comps), composition_labels(&comps), rows)
            }
        };
        let matrix = TransitionMatrix {
            provenance: Provenance::Pair(pair),
            n,
            row_labels,
            col_labels,
            rows,
        };
        matrix.check_unitriangular()?;
        Ok(matrix)
    }

    /// A user-supplied square matrix; row `j` is the expansion of `A_j`.
    pub fn from_rows(name: impl Into<String>, rows: Vec<Vec<BigUint>>) -> Result<Self> {
        let dim = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: bad.len(),
            });
        }
        let labels: Vec<Label> = (0..dim).map(Label::Index).collect();
        let matrix = TransitionMatrix {
            provenance: Provenance::Custom(name.into()),
            n: 0,
            row_labels: labels.clone(),
            col_labels: labels,
            rows,
        };
        matrix.check_unitriangular()?;
        Ok(matrix)
    }

    /// The `dim × dim` identity, under a custom name.
    pub fn identity(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|j| {
                (0..dim)
                    .map(|i| {
                        if i == j {
                            BigUint::one()
                        } else {
                            BigUint::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_rows(format!("identity-{dim}"), rows).expect("identity is unitriangular")
    }

    pub(crate) fn from_parts(
        provenance: Provenance,
        n: u32,
        row_labels: Vec<Label>,
        col_labels: Vec<Label>,
        rows: Vec<Vec<BigUint>>,
    ) -> Result<Self> {
        let dim = rows.len();
        if row_labels.len() != dim || col_labels.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: row_labels.len().max(col_labels.len()),
            });
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: bad.len(),
            });
        }
        let matrix = TransitionMatrix {
            provenance,
            n,
            row_labels,
            col_labels,
            rows,
        };
        matrix.check_unitriangular()?;
        Ok(matrix)
    }

    fn check_unitriangular(&self) -> Result<()> {
        for (j, row) in self.rows.iter().enumerate() {
            for (i, a) in row.iter().enumerate() {
                let expected = match i.cmp(&j) {
                    std::cmp::Ordering::Equal => BigUint::one(),
                    std::cmp::Ordering::Greater => BigUint::zero(),
                    std::cmp::Ordering::Less => continue,
                };
                if *a != expected {
                    return Err(Error::Triangularity(Box::new(TriangularityViolation {
                        context: format!("{} at n = {}", self.provenance, self.n),
                        row: j,
                        col: i,
                        row_label: self.row_labels[j].to_string(),
                        col_label: self.col_labels[i].to_string(),
                        value: a.to_string(),
                        expected: expected.to_string(),
                    })));
                }
            }
        }
        Ok(())
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn pair(&self) -> Option<BasisPair> {
        self.provenance.pair()
    }

    /// Degree; 0 for user-supplied matrices.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of basis elements, `d + 1`.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Labels of the `A` basis, one per row.
    pub fn row_labels(&self) -> &[Label] {
        &self.row_labels
    }

    /// Labels of the `B` basis, one per column.
    pub fn col_labels(&self) -> &[Label] {
        &self.col_labels
    }

    pub fn rows(&self) -> &[Vec<BigUint>] {
        &self.rows
    }

    /// `a_i^{(j)}`: coefficient of `B_i` in `A_j`.
    pub fn coefficient(&self, j: usize, i: usize) -> &BigUint {
        &self.rows[j][i]
    }

    /// `Σ_{i≤j} a_i^{(j)}` for each `j`.
    pub fn coefficient_sums(&self) -> Vec<BigUint> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }
}

/// Partitions of `n` in reverse lexicographic order, starting at `(n)`.
pub fn revlex_partitions(n: u32) -> Vec<Partition> {
    let mut parts = partitions_of(n);
    parts.reverse();
    parts
}

fn partition_labels(parts: &[Partition]) -> Vec<Label> {
    parts.iter().cloned().map(Label::Partition).collect()
}

fn composition_labels(comps: &[Composition]) -> Vec<Label> {
    comps.iter().cloned().map(Label::Composition).collect()
}
