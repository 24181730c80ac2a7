//! Independent checks of the product formula.
//!
//! Two routes that never look at the row-sum product:
//!
//! - the slice volume ratio, as a ratio of exact rational determinants of the
//!   edge vectors of the two simplices, expressed in ambient `B`-coordinates;
//! - Monte Carlo: uniform points of the `B`-simplex, each classified exactly
//!   by solving for its `A`-coordinates.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::probability::probability;
use crate::transition::{Provenance, TransitionMatrix};

/// Generator used for sampling; recorded in every report.
pub const RNG_NAME: &str = "ChaCha8Rng(seed_from_u64(seed), stream = worker index)";

pub const DEFAULT_WORKERS: usize = 4;

/// Edge vectors of the two slice simplices, in `B`-coordinates of length `d + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceGeometry {
    dimension: usize,
    b_edges: Vec<Vec<BigRational>>,
    a_edges: Vec<Vec<BigRational>>,
}

impl SliceGeometry {
    pub fn new(matrix: &TransitionMatrix) -> Self {
        let size = matrix.dim();
        let d = size.saturating_sub(1);
        let sums = matrix.coefficient_sums();
        let vertex = |j: usize| -> Vec<BigRational> {
            let s = BigInt::from(sums[j].clone());
            matrix.rows()[j]
                .iter()
                .map(|a| BigRational::new(BigInt::from(a.clone()), s.clone()))
                .collect()
        };
        let unit = |i: usize| -> Vec<BigRational> {
            (0..size)
                .map(|k| {
                    if k == i {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        };
        let origin_b = unit(0);
        let origin_a = vertex(0);
        let sub = |x: Vec<BigRational>, y: &[BigRational]| -> Vec<BigRational> {
            x.into_iter().zip(y).map(|(a, b)| a - b).collect()
        };
        SliceGeometry {
            dimension: d,
            b_edges: (1..size).map(|i| sub(unit(i), &origin_b)).collect(),
            a_edges: (1..size).map(|j| sub(vertex(j), &origin_a)).collect(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// `v_i = B_i − B_0`.
    pub fn b_edges(&self) -> &[Vec<BigRational>] {
        &self.b_edges
    }

    /// `w_j = A_j / (Σ_i a_i^{(j)}) − A_0`.
    pub fn a_edges(&self) -> &[Vec<BigRational>] {
        &self.a_edges
    }

    /// `|det(w)| / |det(v)|` in the chart that drops coordinate 0. Both
    /// simplices lie in the hyperplane of coordinate sum 1, which projects
    /// onto that chart with the same scale factor for each.
    pub fn volume_ratio(&self) -> BigRational {
        if self.dimension == 0 {
            return BigRational::one();
        }
        let chart = |edges: &[Vec<BigRational>]| -> Vec<Vec<BigRational>> {
            (1..=self.dimension)
                .map(|k| edges.iter().map(|e| e[k].clone()).collect())
                .collect()
        };
        let a = determinant(chart(&self.a_edges)).abs();
        let b = determinant(chart(&self.b_edges)).abs();
        a / b
    }
}

/// Determinant by Gaussian elimination with row pivoting over the rationals.
pub fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let size = m.len();
    let mut det = BigRational::one();
    for col in 0..size {
        let Some(pivot) = (col..size).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..size {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            let (top, bottom) = m.split_at_mut(r);
            for (x, y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= &factor * y;
            }
        }
    }
    det
}

/// Volume of the `A`-positive slice over the volume of the `B`-simplex.
pub fn volume_ratio_by_determinant(matrix: &TransitionMatrix) -> BigRational {
    SliceGeometry::new(matrix).volume_ratio()
}

/// Solves `b_i = Σ_{j≥i} a_i^{(j)} x_j` for the `A`-coordinates `x` by back
/// substitution.
pub fn a_coordinates(matrix: &TransitionMatrix, b: &[BigRational]) -> Result<Vec<BigRational>> {
    let size = matrix.dim();
    if b.len() != size {
        return Err(Error::DimensionMismatch {
            expected: size,
            actual: b.len(),
        });
    }
    let mut x = vec![BigRational::zero(); size];
    for i in (0..size).rev() {
        let mut acc = b[i].clone();
        for (j, xj) in x.iter().enumerate().skip(i + 1) {
            let a = matrix.coefficient(j, i);
            if !a.is_zero() {
                acc -= BigRational::from(BigInt::from(a.clone())) * xj;
            }
        }
        x[i] = acc;
    }
    Ok(x)
}

/// True iff `Σ b_i B_i` is `A`-positive.
pub fn membership(matrix: &TransitionMatrix, b: &[BigRational]) -> Result<bool> {
    Ok(a_coordinates(matrix, b)?.iter().all(|x| !x.is_negative()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonteCarloReport {
    pub provenance: Provenance,
    pub n: u32,
    pub samples: u64,
    pub seed: u64,
    pub workers: usize,
    pub hits: u64,
    pub estimate: f64,
    pub standard_error: f64,
    pub exact: BigRational,
    pub rng: &'static str,
}

impl MonteCarloReport {
    /// `|estimate − exact| ≤ k · standard_error`.
    pub fn within(&self, k: f64) -> bool {
        let exact = self.exact.to_f64().unwrap_or(0.0);
        (self.estimate - exact).abs() <= k * self.standard_error
    }
}

pub fn monte_carlo(matrix: &TransitionMatrix, samples: u64, seed: u64) -> Result<MonteCarloReport> {
    monte_carlo_with(matrix, samples, seed, DEFAULT_WORKERS, Execution::default())
}

/// Samples the `B`-simplex uniformly and counts `A`-positive points.
///
/// Points are normalized unit exponentials. Membership is invariant under
/// positive scaling, so the exponentials are used unnormalized, each
/// truncated to a dyadic rational with 64 fractional bits and classified in
/// exact integer arithmetic. Worker `w` draws its share of the samples from
/// stream `w` of the seeded generator, so results depend on `(seed, workers)`
/// only, never on the execution strategy.
pub fn monte_carlo_with(
    matrix: &TransitionMatrix,
    samples: u64,
    seed: u64,
    workers: usize,
    exec: Execution,
) -> Result<MonteCarloReport> {
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    if workers == 0 {
        return Err(Error::InvalidArgument("workers must be at least 1".into()));
    }
    let classifier = Classifier::new(matrix);
    let shares: Vec<(usize, u64)> = (0..workers)
        .map(|w| {
            let base = samples / workers as u64;
            let extra = u64::from((w as u64) < samples % workers as u64);
            (w, base + extra)
        })
        .collect();
    let hits: u64 = exec
        .map(&shares, |&(worker, count)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(worker as u64);
            let mut point = vec![0i128; matrix.dim()];
            let mut hits = 0u64;
            for _ in 0..count {
                for coord in point.iter_mut() {
                    let e: f64 = rng.sample(Exp1);
                    *coord = (e * TWO_POW_64).floor() as i128;
                }
                if classifier.is_hit(&point) {
                    hits += 1;
                }
            }
            hits
        })
        .into_iter()
        .sum();
    let estimate = hits as f64 / samples as f64;
    let standard_error = (estimate * (1.0 - estimate) / samples as f64).sqrt();
    Ok(MonteCarloReport {
        provenance: matrix.provenance().clone(),
        n: matrix.n(),
        samples,
        seed,
        workers,
        hits,
        estimate,
        standard_error,
        exact: probability(matrix).value().clone(),
        rng: RNG_NAME,
    })
}

const TWO_POW_64: f64 = 18_446_744_073_709_551_616.0;

/// Exact back substitution on integer points, with an `i128` fast path.
struct Classifier {
    small: Option<Vec<Vec<i128>>>,
    big: Vec<Vec<BigInt>>,
}

impl Classifier {
    fn new(matrix: &TransitionMatrix) -> Self {
        // Column-major: entry [i][j] is the coefficient of B_i in A_j.
        let size = matrix.dim();
        let big: Vec<Vec<BigInt>> = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| BigInt::from(matrix.coefficient(j, i).clone()))
                    .collect()
            })
            .collect();
        let small = big
            .iter()
            .map(|col| col.iter().map(|v| v.to_i128()).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>();
        Classifier { small, big }
    }

    fn is_hit(&self, b: &[i128]) -> bool {
        if let Some(small) = &self.small {
            if let Some(hit) = solve_small(small, b) {
                return hit;
            }
        }
        let b: Vec<BigInt> = b.iter().map(|&v| BigInt::from(v)).collect();
        solve_big(&self.big, &b)
    }
}

fn solve_small(coeffs: &[Vec<i128>], b: &[i128]) -> Option<bool> {
    let size = b.len();
    let mut x = vec![0i128; size];
    for i in (0..size).rev() {
        let mut acc = b[i];
        for j in i + 1..size {
            let a = coeffs[i][j];
            if a != 0 {
                acc = acc.checked_sub(a.checked_mul(x[j])?)?;
            }
        }
        if acc < 0 {
            return Some(false);
        }
        x[i] = acc;
    }
    Some(true)
}

fn solve_big(coeffs: &[Vec<BigInt>], b: &[BigInt]) -> bool {
    let size = b.len();
    let mut x = vec![BigInt::zero(); size];
    for i in (0..size).rev() {
        let mut acc = b[i].clone();
        for j in i + 1..size {
            if !coeffs[i][j].is_zero() {
                acc -= &coeffs[i][j] * &x[j];
            }
        }
        if acc.is_negative() {
            return false;
        }
        x[i] = acc;
    }
    true
}

/// Coordinates of `A_j` in the `B` basis, as rationals.
pub fn expansion_of(matrix: &TransitionMatrix, j: usize) -> Vec<BigRational> {
    matrix.rows()[j]
        .iter()
        .map(|a: &BigUint| BigRational::from(BigInt::from(a.clone())))
        .collect()
}
