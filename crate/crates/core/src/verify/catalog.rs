//! Claim selectors, their default ranges, and dispatch to the checks.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::certificate::{check_certificate, check_certificate_sweep, CertificateId, CertificateSpec};
use super::identities::{check_identity, Identity};
use super::lemmas;
use super::recurrences::{check_recurrence, Recurrence};
use super::report::VerificationReport;
use super::theorems;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClaimId {
    Thm11,
    Thm12,
    Thm13,
    Lem21,
    Lem22,
    Lem23,
    Lem31,
    Lem32,
    Lem33,
    Lem34,
    Lem35,
    Lem36,
    Lem41,
    Lem42,
    Cert(CertificateId),
    Rec(Recurrence),
    Xdef(Identity),
}

/// What a claim sweeps over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    N,
    EvenN,
    Prime,
    /// `(j, n)` with `0 <= j < n`.
    Pairs,
    J,
}

impl ClaimId {
    /// Every claim in catalog (and output) order.
    pub fn all() -> Vec<ClaimId> {
        use ClaimId::*;
        let mut ids =
            vec![Thm11, Thm12, Thm13, Lem21, Lem22, Lem23, Lem31, Lem32, Lem33, Lem34, Lem35, Lem36, Lem41, Lem42];
        ids.extend(CertificateId::ALL.map(Cert));
        ids.extend(Recurrence::ALL.map(Rec));
        ids.extend(Identity::ALL.map(Xdef));
        ids
    }

    pub fn as_str(self) -> &'static str {
        use ClaimId::*;
        match self {
            Thm11 => theorems::THM_1_1,
            Thm12 => theorems::THM_1_2,
            Thm13 => theorems::THM_1_3,
            Lem21 => lemmas::LEM_2_1,
            Lem22 => lemmas::LEM_2_2,
            Lem23 => lemmas::LEM_2_3,
            Lem31 => lemmas::LEM_3_1,
            Lem32 => lemmas::LEM_3_2,
            Lem33 => lemmas::LEM_3_3,
            Lem34 => lemmas::LEM_3_4,
            Lem35 => lemmas::LEM_3_5,
            Lem36 => lemmas::LEM_3_6,
            Lem41 => lemmas::LEM_4_1,
            Lem42 => lemmas::LEM_4_2,
            Cert(c) => c.as_str(),
            Rec(r) => r.claim_id(),
            Xdef(i) => i.claim_id(),
        }
    }

    pub fn param_kind(self) -> ParamKind {
        use ClaimId::*;
        match self {
            Thm12 | Lem23 | Lem36 => ParamKind::Prime,
            Thm13 | Lem42 | Xdef(Identity::SEven) => ParamKind::EvenN,
            Lem32 | Lem34 => ParamKind::Pairs,
            Lem35 => ParamKind::J,
            _ => ParamKind::N,
        }
    }

    /// Upper bound of the default sweep (`n`, `p` or `j`).
    pub fn default_max(self) -> u64 {
        use ClaimId::*;
        match self {
            Thm11 => 400,
            Thm12 | Lem23 | Lem36 => 1000,
            Thm13 => 200,
            Lem21 | Lem22 => 300,
            Lem31 | Lem33 | Lem35 => 200,
            Lem32 | Lem34 => 60,
            Lem41 | Lem42 => 120,
            Cert(CertificateId::F4) => 60,
            Cert(_) => 100,
            Rec(Recurrence::SPoly) => 200,
            Rec(_) => 400,
            Xdef(i) if i.is_polynomial() => 100,
            Xdef(_) => 500,
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ClaimId::all().into_iter().find(|c| c.as_str() == s).ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

/// Range overrides; `None` means the claim's default.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeRequest {
    pub n_max: Option<u64>,
    /// A single `n` (single-instance check, hypotheses enforced).
    pub n: Option<u64>,
    pub p_min: Option<u64>,
    pub p_max: Option<u64>,
    /// A single prime (hypotheses enforced).
    pub p: Option<u64>,
    pub j_max: Option<u64>,
}

impl RangeRequest {
    pub fn validate(&self) -> Result<()> {
        let positive = [("--nmax", self.n_max), ("--n", self.n), ("--pmax", self.p_max), ("--p", self.p)];
        for (flag, v) in positive {
            if v == Some(0) {
                return Err(Error::InvalidArgument(format!("{flag} must be positive")));
            }
        }
        if let (Some(lo), Some(hi)) = (self.p_min, self.p_max) {
            if lo > hi {
                return Err(Error::InvalidArgument(format!("--pmin {lo} exceeds --pmax {hi}")));
            }
        }
        Ok(())
    }
}

fn single_prime(id: ClaimId, p: u64) -> Result<VerificationReport> {
    match id {
        ClaimId::Thm12 => theorems::check_theorem_1_2(p),
        ClaimId::Lem23 => lemmas::check_prime_values(p),
        ClaimId::Lem36 => lemmas::check_lemma_3_6(p),
        _ => unreachable!("not a prime-indexed claim"),
    }
}

fn prime_sweep(id: ClaimId, lo: u64, hi: u64) -> Result<VerificationReport> {
    match id {
        ClaimId::Thm12 => theorems::check_theorem_1_2_sweep(lo..=hi),
        ClaimId::Lem23 => lemmas::check_prime_values_sweep(lo..=hi),
        ClaimId::Lem36 => lemmas::check_lemma_3_6_sweep(lo..=hi),
        _ => unreachable!("not a prime-indexed claim"),
    }
}

fn with_quotient(checked: Result<(VerificationReport, Option<crate::poly::IntPoly>)>) -> Result<VerificationReport> {
    let (mut report, quotient) = checked?;
    report.quotient = quotient.map(|q| q.to_string());
    Ok(report)
}

/// Runs one claim. `cert` replaces the shipped certificate with the same id.
pub fn run_claim(id: ClaimId, req: &RangeRequest, cert: Option<&CertificateSpec>) -> Result<VerificationReport> {
    req.validate()?;
    let report = dispatch(id, req, cert)?;
    if report.instances_checked == 0 {
        return Err(Error::InvalidArgument(format!("{id}: no admissible parameters in the requested range")));
    }
    Ok(report)
}

fn dispatch(id: ClaimId, req: &RangeRequest, cert: Option<&CertificateSpec>) -> Result<VerificationReport> {
    use ClaimId::*;
    let n_hi = req.n_max.unwrap_or(id.default_max());
    let n_range = match req.n {
        Some(n) => n..=n,
        None => 1..=n_hi,
    };
    match id.param_kind() {
        ParamKind::Prime => {
            if let Some(p) = req.p {
                return single_prime(id, p);
            }
            let hi = req.p_max.unwrap_or(id.default_max());
            prime_sweep(id, req.p_min.unwrap_or(2), hi)
        }
        ParamKind::J => {
            let hi = req.j_max.or(req.n_max).unwrap_or(id.default_max());
            lemmas::check_lemma_3_5(0..=hi)
        }
        ParamKind::Pairs => {
            let j_max = req.j_max.unwrap_or(n_range.end().saturating_sub(1));
            if id == Lem32 {
                lemmas::check_lemma_3_2(j_max, n_range)
            } else {
                lemmas::check_lemma_3_4(j_max, n_range)
            }
        }
        ParamKind::EvenN => match (id, req.n) {
            (Thm13, Some(n)) => with_quotient(theorems::check_theorem_1_3(n)),
            (Lem42, Some(n)) => with_quotient(lemmas::check_lemma_4_2(n)),
            (Thm13, None) => theorems::check_theorem_1_3_sweep(n_range),
            (Lem42, None) => lemmas::check_lemma_4_2_sweep(n_range),
            (Xdef(_), Some(n)) if n % 2 == 1 => Err(Error::OddN(n)),
            (Xdef(i), _) => check_identity(i, n_range),
            _ => unreachable!("not an even-indexed claim"),
        },
        ParamKind::N => match id {
            Thm11 => theorems::check_theorem_1_1(n_range),
            Lem21 => lemmas::check_lemma_2_1(n_range),
            Lem22 => lemmas::check_lemma_2_2(n_range),
            Lem31 => lemmas::check_lemma_3_1(n_range),
            Lem33 => lemmas::check_lemma_3_3(n_range),
            Lem41 => lemmas::check_lemma_4_1(n_range),
            Cert(c) => {
                let shipped;
                let spec = match cert.filter(|s| s.id == c) {
                    Some(s) => s,
                    None => {
                        shipped = CertificateSpec::shipped(c);
                        &shipped
                    }
                };
                match req.n {
                    Some(n) => check_certificate(spec, n),
                    None => check_certificate_sweep(spec, n_range),
                }
            }
            Rec(r) => {
                if let Some(n) = req.n {
                    if n < r.min_n() {
                        return Err(Error::InvalidArgument(format!("{r} needs n >= {} (one full step)", r.min_n())));
                    }
                }
                check_recurrence(r, n_range)
            }
            Xdef(i) => check_identity(i, n_range),
            _ => unreachable!("not an n-indexed claim"),
        },
    }
}

/// Re-runs a failing report's claim at its counterexample's parameters.
pub fn reproduce(report: &VerificationReport, cert: Option<&CertificateSpec>) -> Result<VerificationReport> {
    let id: ClaimId = report.claim_id.parse()?;
    let cx =
        report.counterexample.as_ref().ok_or_else(|| Error::InvalidArgument("report has no counterexample".into()))?;
    let get = |name: &str| cx.param(name).map(|v| v as u64);
    let req = match id.param_kind() {
        ParamKind::Prime => RangeRequest { p: get("p"), ..Default::default() },
        ParamKind::J => RangeRequest { j_max: get("j"), ..Default::default() },
        ParamKind::Pairs => RangeRequest { n: get("n"), j_max: get("j"), ..Default::default() },
        ParamKind::N | ParamKind::EvenN => RangeRequest { n: get("n"), ..Default::default() },
    };
    run_claim(id, &req, cert)
}
