use std::io::{self, Write};

use posprob::geometry::{monte_carlo_with, volume_ratio_by_determinant};
use posprob::probability::{decimal, probability};
use posprob::wire::{MonteCarloJson, ProbabilityJson, TransitionMatrixJson};
use posprob::{BasisPair, Budget, Error, Execution, ProbabilityResult, TransitionMatrix};
use serde_json::json;

use crate::render;
use crate::{status_for, OutputFormat, Status};

#[derive(Debug)]
pub enum Failure {
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<Status, Failure>;

fn build(pair: BasisPair, n: u32, budget: &Budget) -> Result<TransitionMatrix, Error> {
    budget.check(pair, n)?;
    TransitionMatrix::build(pair, n)
}

fn probability_json(r: &ProbabilityResult) -> serde_json::Value {
    serde_json::to_value(ProbabilityJson::from(r)).expect("serializable")
}

pub fn prob(
    out: &mut dyn Write,
    pair: BasisPair,
    n: u32,
    budget: &Budget,
    format: OutputFormat,
) -> Outcome {
    let result = probability(&build(pair, n, budget)?);
    let factors: Vec<(String, String)> = result
        .labels()
        .iter()
        .zip(result.factors())
        .map(|(label, f)| (label.to_string(), f.to_string()))
        .collect();
    match format {
        OutputFormat::Plain => {
            writeln!(out, "P_{n}({pair}) = {}", result.fraction())?;
            writeln!(out, "decimal: {}", result.decimal())?;
            writeln!(out, "factors:")?;
            let rows: Vec<Vec<String>> = factors
                .into_iter()
                .map(|(label, f)| vec![format!("  {label}"), f])
                .collect();
            render::table(out, &rows)?;
        }
        OutputFormat::Json => render::json(out, &probability_json(&result))?,
        OutputFormat::Csv => {
            let records: Vec<Vec<String>> = factors
                .into_iter()
                .map(|(label, f)| {
                    vec![
                        pair.to_string(),
                        n.to_string(),
                        result.fraction(),
                        result.decimal(),
                        label,
                        f,
                    ]
                })
                .collect();
            render::csv(
                out,
                &["pair", "n", "probability", "decimal", "label", "factor"],
                &records,
            )?;
        }
    }
    Ok(Status::Ok)
}

pub fn coeff(
    out: &mut dyn Write,
    pair: BasisPair,
    n: u32,
    budget: &Budget,
    format: OutputFormat,
) -> Outcome {
    let t = build(pair, n, budget)?;
    let mut header = vec![String::new()];
    header.extend(t.col_labels().iter().map(ToString::to_string));
    let body: Vec<Vec<String>> = t
        .row_labels()
        .iter()
        .zip(t.rows())
        .map(|(label, row)| {
            let mut cells = vec![label.to_string()];
            cells.extend(row.iter().map(ToString::to_string));
            cells
        })
        .collect();
    match format {
        OutputFormat::Plain => {
            writeln!(out, "{pair}, n = {n}: row A_j = sum of a_ij B_i")?;
            let mut rows = vec![header];
            rows.extend(body);
            render::table(out, &rows)?;
        }
        OutputFormat::Json => {
            let value = serde_json::to_value(TransitionMatrixJson::from(&t)).expect("serializable");
            render::json(out, &value)?;
        }
        OutputFormat::Csv => {
            let mut names = vec!["label"];
            names.extend(header[1..].iter().map(String::as_str));
            render::csv(out, &names, &body)?;
        }
    }
    Ok(Status::Ok)
}

pub struct VerifyRequest {
    pub pair: BasisPair,
    pub n: u32,
    pub samples: u64,
    pub seed: u64,
    pub workers: usize,
}

/// Monte Carlo agreement tolerance, in standard errors.
const SIGMAS: f64 = 3.0;

pub fn verify(
    out: &mut dyn Write,
    req: &VerifyRequest,
    budget: &Budget,
    format: OutputFormat,
) -> Outcome {
    let t = build(req.pair, req.n, budget)?;
    let exact = probability(&t);
    let det = volume_ratio_by_determinant(&t);
    let mc = monte_carlo_with(&t, req.samples, req.seed, req.workers, Execution::default())?;
    let exact_agrees = det == *exact.value();
    let mc_agrees = mc.within(SIGMAS);
    let agree = exact_agrees && mc_agrees;
    let verdict = |ok: bool| if ok { "agree" } else { "DISAGREE" };
    match format {
        OutputFormat::Plain => {
            writeln!(out, "{}, n = {}", req.pair, req.n)?;
            let rows = vec![
                vec![
                    "product formula".to_string(),
                    exact.fraction(),
                    exact.decimal(),
                ],
                vec![
                    "determinant".to_string(),
                    det.to_string(),
                    decimal(&det, 6),
                    verdict(exact_agrees).to_string(),
                ],
                vec![
                    "monte carlo".to_string(),
                    format!("{}/{}", mc.hits, mc.samples),
                    format!("{:.6} ± {:.3e}", mc.estimate, mc.standard_error),
                    verdict(mc_agrees).to_string(),
                ],
            ];
            render::table(out, &rows)?;
            writeln!(
                out,
                "seed {}, workers {}, rng {}",
                mc.seed, mc.workers, mc.rng
            )?;
            writeln!(out, "{}", if agree { "OK" } else { "MISMATCH" })?;
        }
        OutputFormat::Json => {
            let value = json!({
                "exact": probability_json(&exact),
                "determinant": det.to_string(),
                "monte_carlo": serde_json::to_value(MonteCarloJson::from(&mc)).expect("serializable"),
                "sigmas": SIGMAS,
                "agree": agree,
            });
            render::json(out, &value)?;
        }
        OutputFormat::Csv => {
            let record = vec![
                req.pair.to_string(),
                req.n.to_string(),
                exact.fraction(),
                det.to_string(),
                mc.samples.to_string(),
                mc.seed.to_string(),
                mc.workers.to_string(),
                mc.hits.to_string(),
                mc.estimate.to_string(),
                mc.standard_error.to_string(),
                agree.to_string(),
            ];
            render::csv(
                out,
                &[
                    "pair",
                    "n",
                    "exact",
                    "determinant",
                    "samples",
                    "seed",
                    "workers",
                    "hits",
                    "estimate",
                    "stderr",
                    "agree",
                ],
                &[record],
            )?;
        }
    }
    if !agree {
        eprintln!("verification failed for {} at n = {}", req.pair, req.n);
        return Ok(Status::Disagree);
    }
    Ok(Status::Ok)
}

pub fn decay(
    out: &mut dyn Write,
    pair: BasisPair,
    n_max: u32,
    budget: &Budget,
    format: OutputFormat,
) -> Outcome {
    let rows = posprob::decay_table(pair, n_max, budget);
    let mut status = Status::Ok;
    for row in &rows {
        if let Err(e) = &row.result {
            eprintln!("n = {}: {e}", row.n);
            let s = status_for(e);
            if status == Status::Ok {
                status = s;
            }
        }
    }
    let cells = |r: &posprob::DecayRow| -> Vec<String> {
        match &r.result {
            Ok(p) => vec![r.n.to_string(), p.fraction(), p.decimal()],
            Err(e) => vec![r.n.to_string(), String::new(), String::new(), e.to_string()],
        }
    };
    match format {
        OutputFormat::Plain => {
            writeln!(out, "{pair}")?;
            let mut table = vec![vec![
                "n".to_string(),
                "P_n".to_string(),
                "decimal".to_string(),
            ]];
            table.extend(rows.iter().map(cells));
            render::table(out, &table)?;
        }
        OutputFormat::Json => {
            let list: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| match &r.result {
                    Ok(p) => json!({"n": r.n, "result": probability_json(p)}),
                    Err(e) => json!({"n": r.n, "error": e.to_string()}),
                })
                .collect();
            render::json(out, &serde_json::Value::Array(list))?;
        }
        OutputFormat::Csv => {
            let records: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    let mut c = cells(r);
                    c.resize(4, String::new());
                    c
                })
                .collect();
            render::csv(out, &["n", "probability", "decimal", "error"], &records)?;
        }
    }
    Ok(status)
}
