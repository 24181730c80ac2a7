//! Exact positivity probabilities from transition-matrix row sums.
//!
//! For a unitriangular nonnegative change of basis the probability that a
//! `B`-positive element is `A`-positive is `Π_j (Σ_i a_i^{(j)})⁻¹`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::{compositions_of, partitions_of};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::tableaux::is_single_sct_shape;
use crate::transition::{BasisPair, Label, Provenance, TransitionMatrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbabilityResult {
    value: BigRational,
    factors: Vec<BigUint>,
    labels: Vec<Label>,
    provenance: Provenance,
    n: u32,
}

impl ProbabilityResult {
    /// Reduced exact value.
    pub fn value(&self) -> &BigRational {
        &self.value
    }

    /// Coefficient sum of each `A_j`, in matrix order.
    pub fn factors(&self) -> &[BigUint] {
        &self.factors
    }

    /// Label of the `A` element behind each factor.
    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `p/q` in lowest terms, or just `p` when `q = 1`.
    pub fn fraction(&self) -> String {
        self.value.to_string()
    }

    /// Six significant figures.
    pub fn decimal(&self) -> String {
        decimal(&self.value, 6)
    }
}

/// Evaluates the product formula on a validated matrix.
pub fn probability(matrix: &TransitionMatrix) -> ProbabilityResult {
    let factors = matrix.coefficient_sums();
    let denominator: BigUint = factors.iter().product();
    let value = BigRational::new(BigInt::one(), BigInt::from(denominator));
    ProbabilityResult {
        value,
        factors,
        labels: matrix.row_labels().to_vec(),
        provenance: matrix.provenance().clone(),
        n: matrix.n(),
    }
}

/// Builds the matrix for `pair` at degree `n` and evaluates it.
pub fn probability_of(pair: BasisPair, n: u32) -> Result<ProbabilityResult> {
    Ok(probability(&TransitionMatrix::build(pair, n)?))
}

/// Closed form of the fundamental-in-monomial probability.
///
/// The row sum for `F_α` counts the compositions refining α, which is
/// `2^{n−1−|set(α)|}`. Multiplying over all subsets of `[n−1]` gives
/// `2^{(n−1)·2^{n−2}}`, so the probability is `2^{−(n−1)·2^{n−2}}`
/// (and 1 at `n = 1`).
pub fn fm_closed_form(n: u32) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::InvalidDegree(n));
    }
    if n == 1 {
        return Ok(BigRational::one());
    }
    let exponent = (n as usize - 1) << (n - 2);
    Ok(reciprocal_power_of_two(exponent))
}

/// `1 / 2^{p(n)−1}`: upper bound on the Schur-in-monomial probability, since
/// every shape other than `(1ⁿ)` has at least two SSYT of partition content.
pub fn schur_monomial_upper_bound(n: u32) -> BigRational {
    let count = partitions_of(n).len();
    reciprocal_power_of_two(count.saturating_sub(1))
}

/// `1 / 2^{2^{n−1}−1}`: upper bound on the quasisymmetric Schur-in-monomial
/// probability.
pub fn quasi_schur_monomial_upper_bound(n: u32) -> BigRational {
    let count = compositions_of(n).len();
    reciprocal_power_of_two(count.saturating_sub(1))
}

/// Compositions of `n` with more than one standard composition tableau,
/// recognised by pattern.
pub fn multi_sct_shapes(n: u32) -> Vec<crate::combinatorics::Composition> {
    compositions_of(n)
        .into_iter()
        .filter(|a| !is_single_sct_shape(a))
        .collect()
}

/// `1 / 2^{|𝒜_n|}` where `𝒜_n` are the compositions with more than one SCT.
pub fn quasi_schur_fundamental_upper_bound(n: u32) -> BigRational {
    reciprocal_power_of_two(multi_sct_shapes(n).len())
}

fn reciprocal_power_of_two(exponent: usize) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << exponent)
}

/// Enumeration limits, by index type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_partition_n: u32,
    pub max_composition_n: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_partition_n: 12,
            max_composition_n: 8,
        }
    }
}

impl Budget {
    /// The same cap for both index types.
    pub fn uniform(max_n: u32) -> Self {
        Budget {
            max_partition_n: max_n,
            max_composition_n: max_n,
        }
    }

    pub fn limit(&self, pair: BasisPair) -> u32 {
        if pair.is_partition_indexed() {
            self.max_partition_n
        } else {
            self.max_composition_n
        }
    }

    pub fn check(&self, pair: BasisPair, n: u32) -> Result<()> {
        let max = self.limit(pair);
        if n > max {
            return Err(Error::BudgetExceeded {
                pair: pair.to_string(),
                n,
                max,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecayRow {
    pub n: u32,
    pub result: Result<ProbabilityResult>,
}

pub fn decay_table(pair: BasisPair, n_max: u32, budget: &Budget) -> Vec<DecayRow> {
    decay_table_with(pair, n_max, budget, Execution::default())
}

/// Probabilities for `n = 1..=n_max`. Degrees over budget are reported as
/// errors in their own rows.
pub fn decay_table_with(
    pair: BasisPair,
    n_max: u32,
    budget: &Budget,
    exec: Execution,
) -> Vec<DecayRow> {
    let degrees: Vec<u32> = (1..=n_max).collect();
    exec.map(&degrees, |&n| DecayRow {
        n,
        result: budget.check(pair, n).and_then(|_| probability_of(pair, n)),
    })
}

/// True when the successful rows, from the first value below 1 onward, are
/// strictly decreasing, and no value exceeds its predecessor before that.
pub fn is_decaying(rows: &[DecayRow]) -> bool {
    let values: Vec<&BigRational> = rows
        .iter()
        .filter_map(|r| r.result.as_ref().ok().map(ProbabilityResult::value))
        .collect();
    let one = BigRational::one();
    let Some(start) = values.iter().position(|v| **v < one) else {
        return values.iter().all(|v| **v == one);
    };
    values[..start].iter().all(|v| **v == one) && values[start..].windows(2).all(|w| w[1] < w[0])
}

/// Decimal rendering with `sig` significant figures, like C's `%g`:
/// fixed notation for exponents in `[-5, sig)`, scientific otherwise.
/// Works for values far below the `f64` range.
pub fn decimal(value: &BigRational, sig: usize) -> String {
    if value.is_zero() {
        return "0".to_string();
    }
    let sign = if value.is_negative() { "-" } else { "" };
    let num = value.numer().abs();
    let den = value.denom().clone();
    let ten = BigInt::from(10);

    // Find e with 10^e ≤ |value| < 10^{e+1}.
    let mut e = num.to_string().len() as i64 - den.to_string().len() as i64;
    let scaled_ge = |e: i64| -> bool {
        if e >= 0 {
            num >= &den * ten.pow(e as u32)
        } else {
            &num * ten.pow((-e) as u32) >= den
        }
    };
    while !scaled_ge(e) {
        e -= 1;
    }
    while scaled_ge(e + 1) {
        e += 1;
    }

    // digits = round(|value| · 10^{sig−1−e})
    let shift = sig as i64 - 1 - e;
    let (n2, d2) = if shift >= 0 {
        (&num * ten.pow(shift as u32), den.clone())
    } else {
        (num.clone(), &den * ten.pow((-shift) as u32))
    };
    let (q, r) = n2.div_rem(&d2);
    let mut digits = if &r * 2 >= d2 { q + 1 } else { q };
    if digits.to_string().len() > sig {
        digits /= 10;
        e += 1;
    }
    let digits = digits.to_string();

    if e < -5 || e >= sig as i64 {
        let mantissa = trim_fraction(&format!("{}.{}", &digits[..1], &digits[1..]));
        format!("{sign}{mantissa}e{e}")
    } else if e >= 0 {
        let split = e as usize + 1;
        trim_fraction(&format!("{sign}{}.{}", &digits[..split], &digits[split..]))
    } else {
        let zeros = "0".repeat((-e - 1) as usize);
        trim_fraction(&format!("{sign}0.{zeros}{digits}"))
    }
}

fn trim_fraction(s: &str) -> String {
    if !s.contains('.') {
        return s.to_string();
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}
