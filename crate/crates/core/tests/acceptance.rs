//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! Run with `cargo test -p posprob --test acceptance -- --nocapture --test-threads=1`.

mod common;

use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use posprob::combinatorics::{compositions_of, partitions_of, Composition};
use posprob::geometry::{monte_carlo_with, volume_ratio_by_determinant, DEFAULT_WORKERS};
use posprob::probability::{
    decay_table, is_decaying, multi_sct_shapes, probability, schur_monomial_upper_bound, Budget,
};
use posprob::tableaux::{
    is_single_sct_shape, kostka, kostka_col_sum, kostka_row_sum, sct_count, sct_total, ssct_count,
    ssct_row_sum, zero_one_count, zero_one_row_sum,
};
use posprob::{BasisPair, Execution, Partition, TransitionMatrix};

struct Criterion {
    id: &'static str,
    title: &'static str,
    limit: Duration,
    started: Instant,
    failures: Vec<String>,
    checks: usize,
}

impl Criterion {
    fn start(id: &'static str, title: &'static str, limit_secs: u64) -> Self {
        Criterion {
            id,
            title,
            limit: Duration::from_secs(limit_secs),
            started: Instant::now(),
            failures: Vec::new(),
            checks: 0,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(mut self) {
        let elapsed = self.started.elapsed();
        if elapsed > self.limit {
            self.failures
                .push(format!("took {elapsed:?}, limit {:?}", self.limit));
        }
        let status = if self.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "[{status}] criterion {} ({}): {} checks, {:.2?}",
            self.id, self.title, self.checks, elapsed
        );
        for f in &self.failures {
            println!("       - {f}");
        }
        assert!(self.failures.is_empty(), "criterion {} failed", self.id);
    }
}

fn frac(p: u64, q: u64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn prob(pair: BasisPair, n: u32) -> BigRational {
    probability(&TransitionMatrix::build(pair, n).unwrap())
        .value()
        .clone()
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

#[test]
fn criterion_1_reference_values() {
    let mut c = Criterion::start("1", "worked-example probabilities at n = 3", 1);
    let expected = [
        (BasisPair::SchurInMonomial, frac(1, 9)),
        (BasisPair::HomogeneousInSchur, frac(1, 8)),
        (BasisPair::ElementaryInSchur, frac(1, 8)),
        (BasisPair::ElementaryInMonomial, frac(1, 40)),
        (BasisPair::QuasiSchurInMonomial, frac(1, 16)),
        (BasisPair::QuasiSchurInFundamental, frac(1, 1)),
        (BasisPair::FundamentalInMonomial, frac(1, 4)),
    ];
    for (pair, want) in expected {
        let got = prob(pair, 3);
        c.check(got == want, || {
            format!("P_3({pair}) = {got}, expected {want}")
        });
    }
    c.finish();
}

#[test]
fn criterion_2_intermediate_counts() {
    let mut c = Criterion::start("2", "row/column sums at n = 3", 1);
    let parts = partitions_of(3); // (1,1,1), (2,1), (3)
    let k: Vec<_> = parts.iter().rev().map(kostka_row_sum).collect();
    c.check(k == [big(3), big(3), big(1)], || format!("K = {k:?}"));
    let e: Vec<_> = parts.iter().rev().map(kostka_col_sum).collect();
    c.check(e == [big(1), big(2), big(4)], || format!("E = {e:?}"));
    let m: Vec<_> = parts.iter().rev().map(zero_one_row_sum).collect();
    c.check(m == [big(1), big(4), big(10)], || format!("M = {m:?}"));

    let comp = |p: &[u32]| Composition::new(p.to_vec()).unwrap();
    let order = [comp(&[3]), comp(&[2, 1]), comp(&[1, 2]), comp(&[1, 1, 1])];
    let kc: Vec<_> = order.iter().map(ssct_row_sum).collect();
    c.check(kc == [big(4), big(2), big(2), big(1)], || {
        format!("Kc = {kc:?}")
    });
    let d: Vec<_> = order.iter().map(sct_total).collect();
    c.check(d == [big(1), big(1), big(1), big(1)], || {
        format!("D = {d:?}")
    });
    c.finish();
}

#[test]
fn criterion_3_fundamental_closed_form() {
    let mut c = Criterion::start("3", "P_n(F|M) = 1/((n-1) 2^(n-2)) for 2 <= n <= 10", 10);
    for n in 2..=10u32 {
        let got = prob(BasisPair::FundamentalInMonomial, n);
        let want = frac(1, (n as u64 - 1) << (n - 2));
        c.check(got == want, || {
            let denom = got.denom().to_string();
            let shown = if denom.len() > 20 {
                format!("1/2^{}", got.denom().bits() - 1)
            } else {
                got.to_string()
            };
            format!("n = {n}: matrix product {shown}, stated closed form {want}")
        });
    }
    c.finish();
}

#[test]
fn criterion_4_determinant_oracle() {
    let mut c = Criterion::start(
        "4",
        "determinant volume ratio equals the product formula",
        30,
    );
    for pair in BasisPair::ALL {
        let max = if pair.is_partition_indexed() { 8 } else { 5 };
        for n in 1..=max {
            let t = TransitionMatrix::build(pair, n).unwrap();
            let det = volume_ratio_by_determinant(&t);
            let product = probability(&t).value().clone();
            c.check(det == product, || {
                format!("{pair} n = {n}: determinant {det}, product {product}")
            });
        }
    }
    c.finish();
}

#[test]
fn criterion_5_monte_carlo_oracle() {
    let mut c = Criterion::start("5", "Monte Carlo within 3 standard errors", 60);
    for pair in BasisPair::ALL {
        for n in [3, 4] {
            let t = TransitionMatrix::build(pair, n).unwrap();
            let run = |seed| {
                monte_carlo_with(&t, 100_000, seed, DEFAULT_WORKERS, Execution::Parallel).unwrap()
            };
            let first = run(7);
            let report = if first.within(3.0) { first } else { run(8) };
            c.check(report.within(3.0), || {
                format!(
                    "{pair} n = {n} seed {}: estimate {} ± {}, exact {}",
                    report.seed, report.estimate, report.standard_error, report.exact
                )
            });
        }
    }
    c.finish();
}

#[test]
fn criterion_6_brute_force_equivalence() {
    let mut c = Criterion::start("6", "counts match generate-and-filter oracles, n <= 5", 60);
    for n in 1..=5u32 {
        let kostka_table = common::naive_kostka_table(n);
        let ssct_table = common::naive_ssct_table(n);
        let sct_table = common::naive_sct_table(n);
        let lookup =
            |t: &std::collections::HashMap<(Vec<u32>, Vec<u32>), u64>, a: &[u32], b: &[u32]| {
                big(t.get(&(a.to_vec(), b.to_vec())).copied().unwrap_or(0))
            };
        for lambda in partitions_of(n) {
            let (mut row, mut col, mut ones) = (big(0), big(0), big(0));
            for mu in partitions_of(n) {
                let k = lookup(&kostka_table, lambda.parts(), mu.parts());
                row += &k;
                col += lookup(&kostka_table, mu.parts(), lambda.parts());
                let got = kostka(&lambda, &mu).unwrap();
                c.check(got == k, || {
                    format!("K_{{{lambda},{mu}}} = {got}, oracle {k}")
                });
                let z = big(common::naive_zero_one(lambda.parts(), mu.parts()));
                ones += &z;
                let got = zero_one_count(&lambda, &mu).unwrap();
                c.check(got == z, || {
                    format!("M_{{{lambda},{mu}}} = {got}, oracle {z}")
                });
            }
            c.check(kostka_row_sum(&lambda) == row, || {
                format!("K row sum {lambda}")
            });
            c.check(kostka_col_sum(&lambda) == col, || {
                format!("K column sum {lambda}")
            });
            c.check(zero_one_row_sum(&lambda) == ones, || {
                format!("M row sum {lambda}")
            });
        }
        for alpha in compositions_of(n) {
            let (mut kc, mut d) = (big(0), big(0));
            for beta in compositions_of(n) {
                let want = lookup(&ssct_table, alpha.parts(), beta.parts());
                kc += &want;
                let got = ssct_count(&alpha, &beta).unwrap();
                c.check(got == want, || {
                    format!("Kc_{{{alpha},{beta}}} = {got}, oracle {want}")
                });
                let want = lookup(&sct_table, alpha.parts(), beta.parts());
                d += &want;
                let got = sct_count(&alpha, &beta).unwrap();
                c.check(got == want, || {
                    format!("d_{{{alpha},{beta}}} = {got}, oracle {want}")
                });
            }
            c.check(ssct_row_sum(&alpha) == kc, || format!("Kc row sum {alpha}"));
            c.check(sct_total(&alpha) == d, || format!("D total {alpha}"));
        }
    }
    c.finish();
}

#[test]
fn criterion_7_finite_bounds() {
    let mut c = Criterion::start("7", "finite-n bounds and decay", 120);
    let two = big(2);
    for n in 1..=7u32 {
        for lambda in partitions_of(n) {
            if lambda != Partition::column(n) {
                let k = kostka_row_sum(&lambda);
                c.check(k >= two, || format!("K_{lambda} = {k}"));
            }
            if lambda != Partition::row(n) {
                let e = kostka_col_sum(&lambda);
                c.check(e >= two, || format!("E_{lambda} = {e}"));
                let m = zero_one_row_sum(&lambda);
                c.check(m >= two, || format!("M_{lambda} = {m}"));
            }
        }
        for alpha in compositions_of(n) {
            if alpha.parts().iter().any(|&p| p > 1) {
                let k = ssct_row_sum(&alpha);
                c.check(k >= two, || format!("Kc_{alpha} = {k}"));
            }
            let single = sct_total(&alpha).is_one();
            c.check(single == is_single_sct_shape(&alpha), || {
                format!("D_{alpha} = 1 is {single}, pattern disagrees")
            });
        }
        let p = prob(BasisPair::SchurInMonomial, n);
        let bound = schur_monomial_upper_bound(n);
        c.check(p <= bound, || format!("P_{n}(s|m) = {p} > {bound}"));
    }
    let a4: Vec<_> = multi_sct_shapes(4);
    let want = vec![
        Composition::new(vec![2, 2]).unwrap(),
        Composition::new(vec![1, 3]).unwrap(),
    ];
    c.check(a4 == want, || format!("A_4 = {a4:?}"));
    for n in 5..=9u32 {
        let size = multi_sct_shapes(n).len();
        c.check(size >= 1 << (n - 3), || format!("|A_{n}| = {size}"));
    }
    for pair in BasisPair::ALL {
        let rows = decay_table(pair, 7, &Budget::default());
        c.check(is_decaying(&rows[1..]), || {
            let values: Vec<String> = rows
                .iter()
                .map(|r| r.result.as_ref().map(|p| p.fraction()).unwrap_or_default())
                .collect();
            format!("{pair} does not decay over n = 2..7: {values:?}")
        });
    }
    c.finish();
}

#[test]
fn criterion_8_structure() {
    let mut c = Criterion::start("8", "unitriangularity, shared Kostka matrix, omega", 60);
    for pair in BasisPair::ALL {
        let max = if pair.is_partition_indexed() { 8 } else { 7 };
        for n in 1..=max {
            let built = TransitionMatrix::build(pair, n);
            c.check(built.is_ok(), || {
                format!("{pair} n = {n}: {:?}", built.as_ref().err())
            });
        }
    }
    for n in 1..=6 {
        let s = TransitionMatrix::build(BasisPair::SchurInMonomial, n).unwrap();
        let h = TransitionMatrix::build(BasisPair::HomogeneousInSchur, n).unwrap();
        let last = s.dim() - 1;
        let transposed = (0..h.dim()).all(|j| {
            (0..h.dim()).all(|i| h.coefficient(j, i) == s.coefficient(last - i, last - j))
        });
        c.check(transposed, || {
            format!("n = {n}: h/s is not the relabelled transpose of s/m")
        });
        let ph = prob(BasisPair::HomogeneousInSchur, n);
        let pe = prob(BasisPair::ElementaryInSchur, n);
        c.check(ph == pe, || {
            format!("n = {n}: P(h|s) = {ph}, P(e|s) = {pe}")
        });
    }
    c.finish();
}
