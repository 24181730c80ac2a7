//! JSON wire formats. Big integers travel as decimal strings.

use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{Composition, Partition};
use crate::error::{Error, Result};
use crate::geometry::MonteCarloReport;
use crate::probability::ProbabilityResult;
use crate::transition::{BasisPair, Label, Provenance, TransitionMatrix};

/// A basis label: the part list, or the position for custom matrices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LabelJson {
    Parts(Vec<u32>),
    Index(usize),
}

impl From<&Label> for LabelJson {
    fn from(label: &Label) -> Self {
        match label {
            Label::Partition(p) => LabelJson::Parts(p.parts().to_vec()),
            Label::Composition(c) => LabelJson::Parts(c.parts().to_vec()),
            Label::Index(i) => LabelJson::Index(*i),
        }
    }
}

/// `labels` are the `A` (row) labels; `column_labels` the `B` labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionMatrixJson {
    pub pair: String,
    pub n: u32,
    pub labels: Vec<LabelJson>,
    pub column_labels: Vec<LabelJson>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbabilityJson {
    pub pair: String,
    pub n: u32,
    pub numerator: String,
    pub denominator: String,
    pub factors: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloJson {
    pub pair: String,
    pub n: u32,
    pub samples: u64,
    pub seed: u64,
    pub workers: usize,
    pub hits: u64,
    pub estimate: f64,
    pub stderr: f64,
    pub exact: String,
    pub rng: String,
}

impl From<&TransitionMatrix> for TransitionMatrixJson {
    fn from(t: &TransitionMatrix) -> Self {
        TransitionMatrixJson {
            pair: t.provenance().to_string(),
            n: t.n(),
            labels: t.row_labels().iter().map(LabelJson::from).collect(),
            column_labels: t.col_labels().iter().map(LabelJson::from).collect(),
            rows: t
                .rows()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
        }
    }
}

fn parse_big(s: &str) -> Result<BigUint> {
    BigUint::from_str(s).map_err(|_| Error::Malformed(format!("not a decimal integer: {s:?}")))
}

fn to_label(json: &LabelJson, pair: Option<BasisPair>) -> Result<Label> {
    match (json, pair) {
        (LabelJson::Index(i), None) => Ok(Label::Index(*i)),
        (LabelJson::Parts(parts), Some(p)) if p.is_partition_indexed() => {
            Ok(Label::Partition(Partition::new(parts.clone())?))
        }
        (LabelJson::Parts(parts), Some(_)) => {
            Ok(Label::Composition(Composition::new(parts.clone())?))
        }
        _ => Err(Error::Malformed(
            "label kind does not match the pair".into(),
        )),
    }
}

impl TryFrom<&TransitionMatrixJson> for TransitionMatrix {
    type Error = Error;

    fn try_from(json: &TransitionMatrixJson) -> Result<Self> {
        let pair = json.pair.parse::<BasisPair>().ok();
        let provenance = match pair {
            Some(p) => Provenance::Pair(p),
            None => Provenance::Custom(json.pair.clone()),
        };
        let labels = |list: &[LabelJson]| -> Result<Vec<Label>> {
            list.iter().map(|l| to_label(l, pair)).collect()
        };
        let rows = json
            .rows
            .iter()
            .map(|r| r.iter().map(|s| parse_big(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        TransitionMatrix::from_parts(
            provenance,
            json.n,
            labels(&json.labels)?,
            labels(&json.column_labels)?,
            rows,
        )
    }
}

impl From<&ProbabilityResult> for ProbabilityJson {
    fn from(r: &ProbabilityResult) -> Self {
        ProbabilityJson {
            pair: r.provenance().to_string(),
            n: r.n(),
            numerator: r.value().numer().to_string(),
            denominator: r.value().denom().to_string(),
            factors: r.factors().iter().map(ToString::to_string).collect(),
        }
    }
}

impl From<&MonteCarloReport> for MonteCarloJson {
    fn from(r: &MonteCarloReport) -> Self {
        MonteCarloJson {
            pair: r.provenance.to_string(),
            n: r.n,
            samples: r.samples,
            seed: r.seed,
            workers: r.workers,
            hits: r.hits,
            estimate: r.estimate,
            stderr: r.standard_error,
            exact: r.exact.to_string(),
            rng: r.rng.to_string(),
        }
    }
}

pub fn matrix_to_json(t: &TransitionMatrix) -> String {
    serde_json::to_string(&TransitionMatrixJson::from(t)).expect("serializable")
}

pub fn matrix_from_json(s: &str) -> Result<TransitionMatrix> {
    let json: TransitionMatrixJson =
        serde_json::from_str(s).map_err(|e| Error::Malformed(e.to_string()))?;
    TransitionMatrix::try_from(&json)
}

pub fn probability_to_json(r: &ProbabilityResult) -> String {
    serde_json::to_string(&ProbabilityJson::from(r)).expect("serializable")
}
