use std::collections::BTreeMap;
use std::fmt;

use exact_linalg::{rat_to_string, Rat};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};
use tensor_category::laws::Law;

/// The checks known to the verifier, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckId {
    RankFormula,
    KeyLemma,
    KeySteps,
    Theorem,
    CorollaryCt,
    P2,
    FormalHypotheses,
    FdpCorollaries,
    Structural,
    SelfTest,
}

impl CheckId {
    pub const ALL: [CheckId; 10] = [
        CheckId::RankFormula,
        CheckId::KeyLemma,
        CheckId::KeySteps,
        CheckId::Theorem,
        CheckId::CorollaryCt,
        CheckId::P2,
        CheckId::FormalHypotheses,
        CheckId::FdpCorollaries,
        CheckId::Structural,
        CheckId::SelfTest,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::RankFormula => "rank_formula",
            CheckId::KeyLemma => "key_lemma",
            CheckId::KeySteps => "key_steps",
            CheckId::Theorem => "theorem",
            CheckId::CorollaryCt => "corollary_ct",
            CheckId::P2 => "p2",
            CheckId::FormalHypotheses => "formal_hypotheses",
            CheckId::FdpCorollaries => "fdp_corollaries",
            CheckId::Structural => "structural",
            CheckId::SelfTest => "self_test",
        }
    }

    pub fn parse(name: &str) -> Option<CheckId> {
        CheckId::ALL.into_iter().find(|c| c.as_str() == name)
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Where a check was evaluated: the model, the dimensions of `V`, the
/// flavor, and the named degrees (`g`, `i`, `k`, `m`, `part`, `case`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Params {
    pub model: String,
    pub even: usize,
    pub odd: usize,
    pub flavor: Option<String>,
    pub degrees: BTreeMap<String, usize>,
}

impl Params {
    pub fn with(mut self, name: &str, value: usize) -> Params {
        self.degrees.insert(name.to_string(), value);
        self
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}|{}", self.model, self.even, self.odd)?;
        if let Some(flavor) = &self.flavor {
            write!(f, " {flavor}")?;
        }
        for (k, v) in &self.degrees {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped(String),
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped(_) => "SKIP",
        }
    }
}

fn serialize_rat<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rat_to_string(r))
}

/// A named exact scalar recorded by a check, such as an extracted constant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub name: String,
    #[serde(serialize_with = "serialize_rat")]
    pub value: Rat,
}

impl Witness {
    pub fn new(name: impl Into<String>, value: Rat) -> Witness {
        Witness {
            name: name.into(),
            value,
        }
    }
}

/// The outcome of one check. `residual` is the largest absolute numerator
/// of `lhs - rhs` over all evaluated diagrams, so a pass has residual "0".
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: CheckId,
    pub params: Params,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    pub residual: String,
    pub note: Option<String>,
}

impl CheckResult {
    pub fn skipped(id: CheckId, params: Params, reason: impl Into<String>) -> CheckResult {
        CheckResult {
            id,
            params,
            status: Status::Skipped(reason.into()),
            witnesses: Vec::new(),
            residual: "0".into(),
            note: None,
        }
    }

    pub fn errored(id: CheckId, params: Params, error: impl fmt::Display) -> CheckResult {
        CheckResult {
            id,
            params,
            status: Status::Fail,
            witnesses: Vec::new(),
            residual: "error".into(),
            note: Some(format!("evaluation error: {error}")),
        }
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self.status, Status::Skipped(_))
    }
}

/// Accumulates diagrams and side conditions for one check.
#[derive(Default)]
pub(crate) struct Evaluation {
    laws: Vec<Law>,
    conditions: Vec<(String, bool)>,
    witnesses: Vec<Witness>,
}

impl Evaluation {
    pub fn law(&mut self, law: Law) {
        self.laws.push(law);
    }

    pub fn laws(&mut self, laws: impl IntoIterator<Item = Law>) {
        self.laws.extend(laws);
    }

    /// A condition that is not an equation of morphisms, such as invertibility.
    pub fn condition(&mut self, name: impl Into<String>, holds: bool) {
        self.conditions.push((name.into(), holds));
    }

    pub fn witness(&mut self, name: impl Into<String>, value: Rat) {
        self.witnesses.push(Witness::new(name, value));
    }

    pub fn finish(self, id: CheckId, params: Params) -> CheckResult {
        let mut worst = BigInt::zero();
        let mut failed = Vec::new();
        let mut mismatched = false;
        for law in &self.laws {
            match law.residual() {
                Some(r) => {
                    for (_, _, v) in r.entries() {
                        worst = worst.max(v.numer().abs());
                    }
                    if !r.is_zero() {
                        failed.push(law.name.clone());
                    }
                }
                None => {
                    mismatched = true;
                    failed.push(law.name.clone());
                }
            }
        }
        let mut broken_conditions = 0usize;
        for (name, holds) in &self.conditions {
            if !holds {
                broken_conditions += 1;
                failed.push(name.clone());
            }
        }
        let residual = if mismatched {
            "shape mismatch".to_string()
        } else if broken_conditions > 0 && worst.is_zero() {
            format!("{broken_conditions} condition(s)")
        } else {
            worst.to_string()
        };
        CheckResult {
            id,
            params,
            status: if failed.is_empty() { Status::Pass } else { Status::Fail },
            witnesses: self.witnesses,
            residual,
            note: (!failed.is_empty()).then(|| format!("failed: {}", failed.join(", "))),
        }
    }
}
