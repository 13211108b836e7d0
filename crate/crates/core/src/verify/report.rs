use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// The smallest failing instance: its parameters and both sides of the
/// mismatched relation, rendered as decimal integers, reduced fractions,
/// or ascending coefficient lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub params: BTreeMap<String, i64>,
    pub relation: String,
    pub lhs: String,
    pub rhs: String,
}

impl Counterexample {
    pub fn new(params: &[(&str, i64)], relation: impl Into<String>, lhs: impl ToString, rhs: impl ToString) -> Self {
        Counterexample {
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            relation: relation.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    pub fn param(&self, name: &str) -> Option<i64> {
        self.params.get(name).copied()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub range: String,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
    pub instances_checked: u64,
    pub elapsed_ms: u64,
    /// Quotient polynomial of a single-instance divisibility check.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quotient: Option<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        let mut line = format!(
            "{} {} [{}] {} instance(s), {} ms",
            self.status.to_string().to_uppercase(),
            self.claim_id,
            self.range,
            self.instances_checked,
            self.elapsed_ms
        );
        if let Some(q) = &self.quotient {
            line.push_str(&format!("; quotient {}", truncate(q)));
        }
        if let Some(cx) = &self.counterexample {
            let params: Vec<String> = cx.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            line.push_str(&format!(
                "; first failure at {}: {} (lhs {} vs rhs {})",
                params.join(", "),
                cx.relation,
                truncate(&cx.lhs),
                truncate(&cx.rhs)
            ));
        }
        line
    }
}

fn truncate(s: &str) -> String {
    const MAX: usize = 60;
    if s.len() <= MAX {
        s.to_string()
    } else {
        format!("{}...({} chars)", &s[..MAX], s.len())
    }
}

/// Outcome of one instance check.
pub type Instance = Result<Option<Counterexample>>;

/// Runs `check` over `params` and reports the first failure in
/// ascending order. Instances run in parallel; later instances past a
/// failure are still evaluated but do not affect the report, so the
/// witness is the same as a sequential scan.
pub fn sweep<P, F>(claim_id: &str, range: String, params: &[P], check: F) -> Result<VerificationReport>
where
    P: Sync,
    F: Fn(&P) -> Instance + Sync,
{
    let start = Instant::now();
    let outcomes: Vec<Instance> = params.par_iter().map(&check).collect();
    finish(claim_id, range, outcomes, start.elapsed())
}

/// Sequential variant for sweeps whose instances share incremental state.
pub fn sweep_sequential<P, F>(claim_id: &str, range: String, params: &[P], mut check: F) -> Result<VerificationReport>
where
    F: FnMut(&P) -> Instance,
{
    let start = Instant::now();
    let mut outcomes = Vec::with_capacity(params.len());
    for p in params {
        let outcome = check(p);
        let stop = !matches!(outcome, Ok(None));
        outcomes.push(outcome);
        if stop {
            break;
        }
    }
    finish(claim_id, range, outcomes, start.elapsed())
}

fn finish(claim_id: &str, range: String, outcomes: Vec<Instance>, elapsed: Duration) -> Result<VerificationReport> {
    let mut checked = 0u64;
    let mut counterexample = None;
    for outcome in outcomes {
        checked += 1;
        if let Some(cx) = outcome? {
            counterexample = Some(cx);
            break;
        }
    }
    Ok(VerificationReport {
        claim_id: claim_id.to_string(),
        range,
        status: if counterexample.is_some() { Status::Fail } else { Status::Pass },
        counterexample,
        instances_checked: checked,
        elapsed_ms: elapsed.as_millis() as u64,
        quotient: None,
    })
}

/// Returns a counterexample when `lhs != rhs`.
pub fn expect_eq<T: PartialEq + fmt::Display>(
    params: &[(&str, i64)],
    relation: &str,
    lhs: &T,
    rhs: &T,
) -> Option<Counterexample> {
    (lhs != rhs).then(|| Counterexample::new(params, relation, lhs, rhs))
}
