use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::Zero;

use super::quantities::{compute_a_with, compute_b_with, AMethod, BMethod};
use super::report::{sweep, sweep_sequential, Counterexample, Instance, VerificationReport};
use super::{even_params, require_prime_above_3, span};
use crate::error::{Error, Result};
use crate::families::little_schroder_poly_table;
use crate::modular::{residue, Residue};
use crate::poly::IntPoly;
use crate::sequences::{is_positive_odd, sign, Tables};

pub const THM_1_1: &str = "thm1.1";
pub const THM_1_2: &str = "thm1.2";
pub const THM_1_3: &str = "thm1.3";

fn route_check<M: Copy + std::fmt::Debug>(
    n: u64,
    name: &str,
    methods: &[M],
    eval: impl Fn(M) -> Result<BigInt>,
) -> Instance {
    let params = [("n", n as i64)];
    let mut values = Vec::with_capacity(methods.len());
    for &m in methods {
        match eval(m) {
            Ok(v) => values.push(v),
            Err(Error::InexactDivision { dividend, divisor, .. }) => {
                return Ok(Some(Counterexample::new(
                    &params,
                    format!("{name} via {m:?} is an exact quotient"),
                    dividend,
                    divisor,
                )))
            }
            Err(e) => return Err(e),
        }
    }
    for (m, v) in methods.iter().zip(&values).skip(1) {
        if v != &values[0] {
            return Ok(Some(Counterexample::new(
                &params,
                format!("{name} via {:?} equals {name} via {m:?}", methods[0]),
                &values[0],
                v,
            )));
        }
    }
    if !is_positive_odd(&values[0]) {
        return Ok(Some(Counterexample::new(
            &params,
            format!("{name} is a positive odd integer"),
            &values[0],
            "positive odd",
        )));
    }
    Ok(None)
}

/// `A_n` and `B_n` are positive odd integers, every route agreeing.
pub fn check_theorem_1_1(range: RangeInclusive<u64>) -> Result<VerificationReport> {
    let lo = (*range.start()).max(1);
    let hi = *range.end();
    let tables = Tables::new(hi + 1)?;
    let params: Vec<u64> = (lo..=hi).collect();
    sweep(THM_1_1, span("n", lo, hi), &params, |&n| {
        if let Some(cx) = route_check(n, "A_n", &AMethod::ALL, |m| compute_a_with(&tables, n, m))? {
            return Ok(Some(cx));
        }
        route_check(n, "B_n", &BMethod::ALL, |m| compute_b_with(&tables, n, m))
    })
}

/// The two exact (unreduced) sums at a prime `p`:
/// `sum_{k=1..p-1} (-1)^k k^2 D_k D_{k-1}` and
/// `sum_{k=1..p} (-1)^k (4k^2+2k-1) D_{k-1} s_k`.
pub fn theorem_1_2_sums(tables: &Tables, p: u64) -> (BigInt, BigInt) {
    let mut first = BigInt::zero();
    for k in 1..p {
        first += sign(k as i64) * BigInt::from(k * k) * tables.d(k) * tables.d(k - 1);
    }
    let mut second = BigInt::zero();
    for k in 1..=p {
        second += sign(k as i64) * BigInt::from(4 * k * k + 2 * k - 1) * tables.d(k - 1) * tables.s(k);
    }
    (first, second)
}

fn theorem_1_2_instance(tables: &Tables, p: u64) -> Instance {
    let params = [("p", p as i64)];
    let pb = BigInt::from(p);
    let p2 = &pb * &pb;
    let (first, second) = theorem_1_2_sums(tables, p);
    let lhs1 = residue(&first, &p2)?;
    let rhs1 = Residue::ratio(&(&pb * -5), &BigInt::from(6), &p2)?;
    if lhs1 != rhs1 {
        return Ok(Some(Counterexample::new(
            &params,
            "sum_{k<p} (-1)^k k^2 D_k D_{k-1} = -5p/6 (mod p^2)",
            lhs1.value(),
            rhs1.value(),
        )));
    }
    let lhs2 = residue(&second, &p2)?;
    let rhs2 = residue(&(&pb * -4), &p2)?;
    if lhs2 != rhs2 {
        return Ok(Some(Counterexample::new(
            &params,
            "sum_{k<=p} (-1)^k (4k^2+2k-1) D_{k-1} s_k = -4p (mod p^2)",
            lhs2.value(),
            rhs2.value(),
        )));
    }
    Ok(None)
}

/// Both mod `p^2` congruences at one prime `p > 3`.
pub fn check_theorem_1_2(p: u64) -> Result<VerificationReport> {
    require_prime_above_3(p)?;
    let tables = Tables::new(p + 1)?;
    sweep(THM_1_2, format!("p={p}"), &[p], |&p| theorem_1_2_instance(&tables, p))
}

/// Every prime `p > 3` in `range`.
pub fn check_theorem_1_2_sweep(range: RangeInclusive<u64>) -> Result<VerificationReport> {
    let primes = super::primes_above_3(&range);
    let tables = Tables::new(*range.end() + 1)?;
    sweep(THM_1_2, super::prime_span(&range, &primes), &primes, |&p| theorem_1_2_instance(&tables, p))
}

/// `4 * total / (n(n+1)(n+2)(1+2x)^3)` in `Z[x]`, where `total` is
/// `sum_{k=1..n} k(k+1)(k+2) s_k(x) s_{k+1}(x)`.
pub fn theorem_1_3_quotient(total: &IntPoly, n: u64) -> Result<IntPoly> {
    let scaled = total.scale(&BigInt::from(4));
    let by_n = scaled.div_scalar_exact(&BigInt::from(n * (n + 1) * (n + 2)))?;
    by_n.exact_div(&IntPoly::from_i64s(&[1, 2]).pow(3))
}

fn theorem_1_3_term(s: &[IntPoly], k: u64) -> IntPoly {
    (&s[k as usize] * &s[k as usize + 1]).scale(&BigInt::from(k * (k + 1) * (k + 2)))
}

fn quotient_instance(total: &IntPoly, n: u64) -> Instance {
    let params = [("n", n as i64)];
    match theorem_1_3_quotient(total, n) {
        Ok(_) => Ok(None),
        Err(Error::NotDivisible { remainder }) => {
            Ok(Some(Counterexample::new(&params, "(1+2x)^3 divides 4 sum / (n(n+1)(n+2))", remainder, "0")))
        }
        Err(Error::NotIntegral { degree, coefficient }) => Ok(Some(Counterexample::new(
            &params,
            format!("quotient coefficient of x^{degree} is an integer"),
            coefficient,
            "integer",
        ))),
        Err(e) => Err(e),
    }
}

/// Single even `n`; returns the quotient polynomial alongside the report.
pub fn check_theorem_1_3(n: u64) -> Result<(VerificationReport, Option<IntPoly>)> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 2".into()));
    }
    if n % 2 == 1 {
        return Err(Error::OddN(n));
    }
    let s = little_schroder_poly_table(n + 1)?;
    let total: IntPoly = (1..=n).map(|k| theorem_1_3_term(&s, k)).sum();
    let report = sweep_sequential(THM_1_3, format!("n={n}"), &[n], |&n| quotient_instance(&total, n))?;
    let quotient = report.passed().then(|| theorem_1_3_quotient(&total, n)).transpose()?;
    Ok((report, quotient))
}

/// Every even `n` in `range`, carrying the partial sum forward.
pub fn check_theorem_1_3_sweep(range: RangeInclusive<u64>) -> Result<VerificationReport> {
    let params = even_params(&range);
    let hi = *range.end();
    let s = little_schroder_poly_table(hi.max(1) + 1)?;
    let mut total = IntPoly::zero();
    let mut summed_to = 0u64;
    sweep_sequential(THM_1_3, super::even_span(&range), &params, |&n| {
        while summed_to < n {
            summed_to += 1;
            total = &total + &theorem_1_3_term(&s, summed_to);
        }
        quotient_instance(&total, n)
    })
}
