//! Three-term recurrences for the telescoping bindings and for `s_k(x)`.
//!
//! Values come from the defining sums, not from the recurrence-built
//! tables, so a check here is independent of the generators it protects.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::report::{sweep, Counterexample, Instance, VerificationReport};
use super::span;
use crate::error::{Error, Result};
use crate::families::little_schroder_poly;
use crate::poly::IntPoly;
use crate::sequences::{delannoy_direct, little_schroder_direct, sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Recurrence {
    /// `a_k = (-1)^(n-k) D_k`: `(k+2) a_{k+2} = -3(2k+3) a_{k+1} - (k+1) a_k`
    AltDelannoy,
    /// `b_k = D_{k-1}`: `(k+1) b_{k+2} = 3(2k+1) b_{k+1} - k b_k`
    ShiftedDelannoyB,
    /// `a_k = D_{k-1}`: `(k+1) a_{k+2} = 3(2k+1) a_{k+1} - k a_k`
    ShiftedDelannoyA,
    /// `b_k = (-1)^(n-k) s_k`: `(k+3) b_{k+2} = -3(2k+3) b_{k+1} - k b_k`
    AltLittleSchroder,
    /// `(k+3) s_{k+2}(x) = (2k+3)(1+2x) s_{k+1}(x) - k s_k(x)`
    SPoly,
}

impl Recurrence {
    pub const ALL: [Recurrence; 5] = [
        Recurrence::AltDelannoy,
        Recurrence::ShiftedDelannoyB,
        Recurrence::ShiftedDelannoyA,
        Recurrence::AltLittleSchroder,
        Recurrence::SPoly,
    ];

    pub fn claim_id(self) -> &'static str {
        match self {
            Recurrence::AltDelannoy => "rec-a2",
            Recurrence::ShiftedDelannoyB => "rec-b2",
            Recurrence::ShiftedDelannoyA => "rec-a2b",
            Recurrence::AltLittleSchroder => "rec-b2b",
            Recurrence::SPoly => "rec-s",
        }
    }

    /// Bindings whose sign depends on the outer `n`.
    pub fn alternates(self) -> bool {
        matches!(self, Recurrence::AltDelannoy | Recurrence::AltLittleSchroder)
    }

    /// Smallest `k` for which every referenced value is defined.
    fn min_k(self) -> u64 {
        match self {
            Recurrence::AltDelannoy => 0,
            _ => 1,
        }
    }

    /// Smallest instance parameter `n` with at least one step.
    pub fn min_n(self) -> u64 {
        self.min_k() + 2
    }
}

impl fmt::Display for Recurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.claim_id())
    }
}

impl FromStr for Recurrence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Recurrence::ALL.into_iter().find(|r| r.claim_id() == s).ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

/// `D_0..=D_max` and `s_0..=s_max` (with `s_0 = 1`) from the defining sums.
struct DirectValues {
    d: Vec<BigInt>,
    s: Vec<BigInt>,
}

impl DirectValues {
    fn new(max: u64) -> Result<Self> {
        let d = (0..=max).into_par_iter().map(delannoy_direct).collect();
        let s = (0..=max)
            .into_par_iter()
            .map(|n| if n == 0 { Ok(BigInt::from(1)) } else { little_schroder_direct(n) })
            .collect::<Result<_>>()?;
        Ok(DirectValues { d, s })
    }

    fn d(&self, i: u64) -> &BigInt {
        &self.d[i as usize]
    }

    fn s(&self, i: u64) -> &BigInt {
        &self.s[i as usize]
    }

    /// The binding `k -> value` for the integer recurrences at outer `n`.
    fn binding(&self, which: Recurrence, n: u64, k: u64) -> BigInt {
        let alt = sign(n as i64 - k as i64);
        match which {
            Recurrence::AltDelannoy => alt * self.d(k),
            Recurrence::ShiftedDelannoyB | Recurrence::ShiftedDelannoyA => self.d(k - 1).clone(),
            Recurrence::AltLittleSchroder => alt * self.s(k),
            Recurrence::SPoly => unreachable!("polynomial recurrence has no integer binding"),
        }
    }
}

/// `(lhs, rhs)` of an integer recurrence at step `k` for outer `n`.
fn integer_step(values: &DirectValues, which: Recurrence, n: u64, k: u64) -> (BigInt, BigInt) {
    let v = |i| values.binding(which, n, i);
    let kb = |c: u64| BigInt::from(c);
    let (v0, v1, v2) = (v(k), v(k + 1), v(k + 2));
    match which {
        Recurrence::AltDelannoy => (kb(k + 2) * v2, kb(3 * (2 * k + 3)) * -v1 - kb(k + 1) * v0),
        Recurrence::ShiftedDelannoyB | Recurrence::ShiftedDelannoyA => {
            (kb(k + 1) * v2, kb(3 * (2 * k + 1)) * v1 - kb(k) * v0)
        }
        Recurrence::AltLittleSchroder => (kb(k + 3) * v2, kb(3 * (2 * k + 3)) * -v1 - kb(k) * v0),
        Recurrence::SPoly => unreachable!(),
    }
}

fn poly_step(s: &[IntPoly], k: u64) -> (IntPoly, IntPoly) {
    let i = k as usize;
    let lhs = s[i + 2].scale(&BigInt::from(k + 3));
    let rhs = (&IntPoly::from_i64s(&[1, 2]) * &s[i + 1]).scale(&BigInt::from(2 * k + 3)) - s[i].scale(&BigInt::from(k));
    (lhs, rhs)
}

fn relation(which: Recurrence) -> &'static str {
    match which {
        Recurrence::AltDelannoy => "(k+2)a_{k+2} = -3(2k+3)a_{k+1} - (k+1)a_k, a_k = (-1)^(n-k) D_k",
        Recurrence::ShiftedDelannoyB => "(k+1)b_{k+2} = 3(2k+1)b_{k+1} - k b_k, b_k = D_{k-1}",
        Recurrence::ShiftedDelannoyA => "(k+1)a_{k+2} = 3(2k+1)a_{k+1} - k a_k, a_k = D_{k-1}",
        Recurrence::AltLittleSchroder => "(k+3)b_{k+2} = -3(2k+3)b_{k+1} - k b_k, b_k = (-1)^(n-k) s_k",
        Recurrence::SPoly => "(k+3)s_{k+2}(x) = (2k+3)(1+2x)s_{k+1}(x) - k s_k(x)",
    }
}

/// Steps checked by instance `n`: every valid `k <= n-2` for the
/// alternating bindings (whose values depend on `n`), otherwise only the
/// step that produces index `n`.
fn steps(which: Recurrence, n: u64) -> RangeInclusive<u64> {
    if which.alternates() {
        which.min_k()..=n - 2
    } else {
        n - 2..=n - 2
    }
}

/// Sweep over `n` in `range` (clamped below to the first index with a step).
pub fn check_recurrence(which: Recurrence, range: RangeInclusive<u64>) -> Result<VerificationReport> {
    let lo = (*range.start()).max(which.min_n());
    let hi = *range.end();
    let params: Vec<u64> = (lo..=hi).collect();
    let label = span("n", lo, hi);
    if which == Recurrence::SPoly {
        let s = (0..=hi.max(2))
            .into_par_iter()
            .map(|n| if n == 0 { Ok(IntPoly::one()) } else { little_schroder_poly(n) })
            .collect::<Result<Vec<_>>>()?;
        return sweep(which.claim_id(), label, &params, |&n| {
            for k in steps(which, n) {
                let (lhs, rhs) = poly_step(&s, k);
                if lhs != rhs {
                    return Ok(Some(step_counterexample(which, n, k, lhs, rhs)));
                }
            }
            Ok(None)
        });
    }
    let values = DirectValues::new(hi.max(2))?;
    sweep(which.claim_id(), label, &params, |&n| -> Instance {
        for k in steps(which, n) {
            let (lhs, rhs) = integer_step(&values, which, n, k);
            if lhs != rhs {
                return Ok(Some(step_counterexample(which, n, k, lhs, rhs)));
            }
        }
        Ok(None)
    })
}

fn step_counterexample(which: Recurrence, n: u64, k: u64, lhs: impl ToString, rhs: impl ToString) -> Counterexample {
    Counterexample::new(&[("k", k as i64), ("n", n as i64)], relation(which), lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn selectors_round_trip() {
        for r in Recurrence::ALL {
            assert_eq!(r.claim_id().parse::<Recurrence>().unwrap(), r);
        }
        assert!("rec-x".parse::<Recurrence>().is_err());
    }

    #[test]
    fn shifted_delannoy_first_step() {
        // 2 D_2 = 9 D_1 - D_0: 26 = 27 - 1
        let values = DirectValues::new(4).unwrap();
        assert_eq!(integer_step(&values, Recurrence::ShiftedDelannoyB, 3, 1), (b(26), b(26)));
    }

    #[test]
    fn alt_delannoy_at_n_4_k_1() {
        // a_k = (-1)^(4-k) D_k: 3 a_3 = -15 a_2 - 2 a_1
        let values = DirectValues::new(4).unwrap();
        let (lhs, rhs) = integer_step(&values, Recurrence::AltDelannoy, 4, 1);
        assert_eq!(lhs, b(3 * -63));
        assert_eq!(rhs, b(-15 * 13 - 2 * -3));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn s_poly_first_step() {
        // 4 s_3(x) = 9 (1+2x)(2x+1) - 1
        let s: Vec<IntPoly> =
            (0..=3).map(|n| if n == 0 { IntPoly::one() } else { little_schroder_poly(n).unwrap() }).collect();
        let (lhs, rhs) = poly_step(&s, 1);
        assert_eq!(lhs, IntPoly::from_i64s(&[4, 20, 20]));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn all_recurrences_hold_on_small_ranges() {
        for r in Recurrence::ALL {
            let report = check_recurrence(r, 3..=40).unwrap();
            assert!(report.passed(), "{}", report.summary());
            assert_eq!(report.instances_checked, 40 - r.min_n().max(3) + 1);
        }
    }

    #[test]
    fn alternating_bindings_cover_both_parities() {
        // instances n = 4 and n = 5 flip every sign; both must pass
        for r in [Recurrence::AltDelannoy, Recurrence::AltLittleSchroder] {
            assert!(check_recurrence(r, 4..=4).unwrap().passed());
            assert!(check_recurrence(r, 5..=5).unwrap().passed());
        }
    }

    #[test]
    fn a_wrong_sign_would_fail() {
        // The unsigned Delannoy values do not satisfy the alternating recurrence.
        let values = DirectValues::new(5).unwrap();
        let (lhs, rhs) = integer_step(&values, Recurrence::ShiftedDelannoyA, 4, 1);
        assert_eq!(lhs, rhs);
        let unsigned_lhs = b(3) * values.d(3);
        let unsigned_rhs = b(-15) * values.d(2) - b(2) * values.d(1);
        assert_ne!(unsigned_lhs, unsigned_rhs);
    }
}
