//! One check per theorem, lemma, recurrence, identity and telescoping
//! certificate. Each returns a [`VerificationReport`]; a failing report
//! carries the first counterexample in ascending parameter order.
//!
//! Parameters outside a claim's hypothesis (odd `n`, `p <= 3`, composite
//! `p`) are errors when requested explicitly. Range sweeps restrict
//! themselves to the admissible parameters inside the range.

pub mod catalog;
pub mod certificate;
pub mod identities;
pub mod lemmas;
pub mod quantities;
pub mod recurrences;
pub mod report;
pub mod theorems;

use std::ops::RangeInclusive;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::modular::{is_prime_u64, primes_in_u64};

pub use report::{Counterexample, Status, VerificationReport};

pub(crate) fn span(name: &str, lo: u64, hi: u64) -> String {
    format!("{name}={lo}..={hi}")
}

pub(crate) fn even_params(range: &RangeInclusive<u64>) -> Vec<u64> {
    ((*range.start()).max(2)..=*range.end()).filter(|n| n % 2 == 0).collect()
}

pub(crate) fn even_span(range: &RangeInclusive<u64>) -> String {
    format!("n=even {}..={}", (*range.start()).max(2), range.end())
}

pub(crate) fn primes_above(range: &RangeInclusive<u64>, bound: u64) -> Vec<u64> {
    primes_in_u64((*range.start()).max(bound + 1), *range.end())
}

pub(crate) fn primes_above_3(range: &RangeInclusive<u64>) -> Vec<u64> {
    primes_above(range, 3)
}

/// Short prime lists are spelled out; long ones are described by bounds.
pub(crate) fn prime_span(range: &RangeInclusive<u64>, primes: &[u64]) -> String {
    if primes.len() <= 8 {
        let list: Vec<String> = primes.iter().map(u64::to_string).collect();
        format!("p in {{{}}}", list.join(", "))
    } else {
        format!("p=prime {}..={}", range.start(), range.end())
    }
}

pub(crate) fn require_prime_above(p: u64, bound: u64) -> Result<()> {
    if !is_prime_u64(p) {
        return Err(Error::NotAPrime(BigInt::from(p)));
    }
    if p <= bound {
        return Err(Error::PrimeTooSmall { p: BigInt::from(p), bound });
    }
    Ok(())
}

pub(crate) fn require_prime_above_3(p: u64) -> Result<()> {
    require_prime_above(p, 3)
}
