use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::quantities::{lemma_2_1_numerator, lemma_2_2_expression};
use super::report::{expect_eq, sweep, Counterexample, Instance, VerificationReport};
use super::{even_params, even_span, prime_span, primes_above, require_prime_above, span};
use crate::error::{Error, Result};
use crate::families::little_schroder_poly_table;
use crate::poly::{IntPoly, Rational};
use crate::sequences::{binomial, catalan, is_positive_odd, sign, weight_w, Tables};

pub const LEM_2_1: &str = "lem2.1";
pub const LEM_2_2: &str = "lem2.2";
pub const LEM_2_3: &str = "lem2.3";
pub const LEM_3_1: &str = "lem3.1";
pub const LEM_3_2: &str = "lem3.2";
pub const LEM_3_3: &str = "lem3.3";
pub const LEM_3_4: &str = "lem3.4";
pub const LEM_3_5: &str = "lem3.5";
pub const LEM_3_6: &str = "lem3.6";
pub const LEM_4_1: &str = "lem4.1";
pub const LEM_4_2: &str = "lem4.2";

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

fn positive_range(range: &RangeInclusive<u64>) -> (u64, u64, Vec<u64>) {
    let lo = (*range.start()).max(1);
    let hi = *range.end();
    (lo, hi, (lo..=hi).collect())
}

/// `(j, n)` pairs with `0 <= j < n`, `lo <= n <= hi`, `j <= j_max`,
/// ordered by `n` then `j`.
fn pairs(range: &RangeInclusive<u64>, j_max: u64) -> Vec<(u64, u64)> {
    let (_, _, ns) = positive_range(range);
    ns.into_iter().flat_map(|n| (0..n.min(j_max.saturating_add(1))).map(move |j| (j, n))).collect()
}

fn pair_span(range: &RangeInclusive<u64>, j_max: u64) -> String {
    format!("0<=j<n, j<={j_max}, {}", span("n", (*range.start()).max(1), *range.end()))
}

/// The bracket `2j + 1 - j(j+1)(2n+1)/(n(n+1))`.
fn bracket(j: u64, n: u64) -> Rational {
    Rational::from_integer(big(2 * j + 1)) - Rational::new(big(j * (j + 1) * (2 * n + 1)), big(n * (n + 1)))
}

/// `D_n(D_{n+1} - 3D_n) + D_{n-1}(D_n + 3D_{n+1})` is `54` times a
/// positive odd integer.
pub fn check_lemma_2_1(range: RangeInclusive<u64>) -> Result<VerificationReport> {
    let (lo, hi, params) = positive_range(&range);
    let tables = Tables::new(hi + 1)?;
    sweep(LEM_2_1, span("n", lo, hi), &params, |&n| {
        let p = [("n", n as i64)];
        let x = lemma_2_1_numerator(&tables, n);
        let (q, r) = x.div_rem(&big(54));
        if !r.is_zero() {
            return Ok(Some(Counterexample::new(&p, "numerator mod 54 = 0", r, 0)));
        }
        Ok((!is_positive_odd(&q)).then(|| Counterexample::new(&p, "numerator / 54 is positive odd", q, "positive odd")))
    })
}

/// `(n+1) D_n s_n + (n+2) D_{n-1} s_{n+1} = 0 (mod 3)` together with
/// `D_{n-1} = D_{n+1} - 4(2n+1) s_n`.
pub fn check_lemma_2_2(range: RangeInclusive<u64>) -> Result<VerificationReport> {
    let (lo, hi, params) = positive_range(&range);
    let tables = Tables::new(hi + 1)?;
    sweep(LEM_2_2, span("n", lo, hi), &params, |&n| {
        let p = [("n", n as i64)];
        let r = lemma_2_2_expression(&tables, n).mod_floor(&big(3));
        if !r.is_zero() {
            return Ok(Some(Counterexample::new(&p, "(n+1)D_n s_n + (n+2)D_{n-1}s_{n+1} mod 3 = 0", r, 0)));
        }
        let rhs = tables.d(n + 1) - big(4 * (2 * n + 1)) * tables.s(n);
        Ok(expect_eq(&p, "D_{n-1} = D_{n+1} - 4(2n+1)s_n", tables.d(n - 1), &rhs))
    })
}

/// `s_p`, `s_{p+1}`, `D_{p-1}`, `D_p` reduced mod `p`.
pub fn prime_values(tables: &Tables, p: u64) -> [BigInt; 4] {
    let m = big(p);
    [tables.s(p).mod_floor(&m), tables.s(p + 1).mod_floor(&m), tables.d(p - 1).mod_floor(&m), tables.d(p).mod_floor(&m)]
}

fn prime_values_instance(tables: &Tables, p: u64) -> Instance {
    let params = [("p", p as i64)];
    let [sp, sp1, dp1, dp] = prime_values(tables, p);
    let mut checks = vec![("s_p = 2 (mod p)", sp, 2u64), ("s_{p+1} = 3 (mod p)", sp1, 3)];
    // The Delannoy congruences are only claimed for p > 3; at p = 3 they
    // are computed above but not part of the verdict.
    if p > 3 {
        checks.push(("D_{p-1} = 1 (mod p)", dp1, 1));
        checks.push(("D_p = 3 (mod p)", dp, 3));
    }
    for (relation, lhs, rhs) in checks {
        let rhs = big(rhs).mod_floor(&big(p));
        if lhs != rhs {
            return Ok(Some(Counterexample::new(&params, relation, lhs, rhs)));
        }
    }
    Ok(None)
}

/// Congruences for `s_p`, `s_{p+1}` (any odd prime) and `D_{p-1}`, `D_p`
/// (asserted for `p > 3`).
pub fn check_prime_values(p: u64) -> Result<VerificationReport> {
    require_prime_above(p, 2)?;
    let tables = Tables::new(p + 1)?;
    sweep(LEM_2_3, format!("p={p}"), &[p], |&p| prime_values_instance(&tables, p))
}

pub fn check_prime_values_sweep(range: RangeInclusive<u64>) -> Result<VerificationReport> {
    let primes = primes_above(&range, 2);
    let tables = Tables::new(*range.end() + 1)?;
    sweep(LEM_2_3, prime_span(&range, &primes), &primes, |&p| prime_values_instance(&tables, p))
}

/// `n D_n D_{n-1} = 3 sum_{j<n} (n-j) C(n+j,2j) C(2j,j)^2 2^j`.
pub fn check_lemma_3_1(range: RangeInclusive<u64>) -> Result<VerificationReport> {
    let (lo, hi, params) = positive_range(&range);
    let tables = Tables::new(hi)?;
    sweep(LEM_3_1, span("n", lo, hi), &params, |&n| {
        let lhs = big(n) * tables.d(n) * tables.d(n - 1);
        let ni = n as i64;
        let sum: BigInt = (0..ni)
            .map(|j| {
                let c = binomial(2 * j, j);
                (big((ni - j) as u64) * binomial(ni + j, 2 * j) * &c * &c) << j as usize
            })
            .sum();
        Ok(expect_eq(&[("n", ni)], "n D_n D_{n-1} = 3 sum_j (n-j) C(n+j,2j) C(2j,j)^2 2^j", &lhs, &(sum * 3)))
    })
}

/// Left side of the alternating binomial sum at `(j, n)`:
/// `sum_{k=j+1..n} (-1)^(n-k) k (k-j) C(k+j,2j)`.
pub fn lemma_3_2_lhs(j: u64, n: u64) -> BigInt {
    (j + 1..=n).map(|k| sign((n - k) as i64) * big(k * (k - j)) * binomial((k + j) as i64, 2 * j as i64)).sum()
}

fn lemma_3_2_instance(j: u64, n: u64) -> Instance {
    let params = [("j", j as i64), ("n", n as i64)];
    let (ji, ni) = (j as i64, n as i64);
    let numerator = binomial(ni + ji + 1, ji) * binomial(ni - 1, ji) * big(n * (n + 1));
    let divisor = binomial(2 * ji, ji) * 2;
    let (rhs, rem) = numerator.div_rem(&divisor);
    if !rem.is_zero() {
        return Ok(Some(Counterexample::new(&params, "2 C(2j,j) divides C(n+j+1,j) C(n-1,j) n(n+1)", rem, 0)));
    }
    Ok(expect_eq(
        &params,
        "sum_k (-1)^(n-k) k(k-j) C(k+j,2j) = C(n+j+1,j) C(n-1,j) n(n+1) / (2 C(2j,j))",
        &lemma_3_2_lhs(j, n),
        &rhs,
    ))
}

pub fn check_lemma_3_2(j_max: u64, range: RangeInclusive<u64>) -> Result<VerificationReport> {
    let params = pairs(&range, j_max);
    sweep(LEM_3_2, pair_span(&range, j_max), &params, |&(j, n)| lemma_3_2_instance(j, n))
}

/// `sum_{j<n} C(n+j,2j) C_j^2 (2j+1 - j(j+1)(2n+1)/(n(n+1))) 2^j`.
pub fn lemma_3_3_sum(n: u64) -> Rational {
    let ni = n as i64;
    let mut total = Rational::zero();
    for j in 0..n {
        let c = catalan(j);
        let weight = (binomial(ni + j as i64, 2 * j as i64) * &c * &c) << j as usize;
        total += Rational::from_integer(weight) * bracket(j, n);
    }
    total
}

/// `D_{n-1} s_n` equals the bracketed `j`-sum, which must be an integer.
pub fn check_lemma_3_3(range: RangeInclusive<u64>) -> Result<VerificationReport> {
    let (lo, hi, params) = positive_range(&range);
    let tables = Tables::new(hi)?;
    sweep(LEM_3_3, span("n", lo, hi), &params, |&n| {
        let lhs = Rational::from_integer(tables.d(n - 1) * tables.s(n));
        let rhs = lemma_3_3_sum(n);
        Ok(expect_eq(&[("n", n as i64)], "D_{n-1} s_n = sum_j C(n+j,2j) C_j^2 [bracket] 2^j", &lhs, &rhs))
    })
}

/// Left side at `(j, n)`:
/// `sum_{k=j+1..n} (-1)^(n-k) (4k^2+2k-1) C(k+j,2j) (2j+1 - j(j+1)(2k+1)/(k(k+1)))`.
pub fn lemma_3_4_lhs(j: u64, n: u64) -> Rational {
    let mut total = Rational::zero();
    for k in j + 1..=n {
        let coeff = sign((n - k) as i64) * big(4 * k * k + 2 * k - 1) * binomial((k + j) as i64, 2 * j as i64);
        total += Rational::from_integer(coeff) * bracket(j, k);
    }
    total
}

/// Right side `w(n,j+1) n ((4j+2)n + 4j+3) / C_j`. Not always an integer,
/// so both sides are compared as rationals.
pub fn lemma_3_4_rhs(j: u64, n: u64) -> Result<Rational> {
    let top = weight_w(n, j + 1)? * big(n) * big((4 * j + 2) * n + 4 * j + 3);
    Ok(Rational::new(top, catalan(j)))
}

pub fn check_lemma_3_4(j_max: u64, range: RangeInclusive<u64>) -> Result<VerificationReport> {
    let params = pairs(&range, j_max);
    sweep(LEM_3_4, pair_span(&range, j_max), &params, |&(j, n)| {
        Ok(expect_eq(
            &[("j", j as i64), ("n", n as i64)],
            "alternating (4k^2+2k-1)-weighted sum = w(n,j+1) n ((4j+2)n+4j+3) / C_j",
            &lemma_3_4_lhs(j, n),
            &lemma_3_4_rhs(j, n)?,
        ))
    })
}

/// `(4j+3) C_j = 2 C(2j,j) + C(2j+1,j+1)` for `j` in `range`.
pub fn check_lemma_3_5(range: RangeInclusive<u64>) -> Result<VerificationReport> {
    let (lo, hi) = (*range.start(), *range.end());
    let params: Vec<u64> = range.collect();
    sweep(LEM_3_5, span("j", lo, hi), &params, |&j| {
        let ji = j as i64;
        let lhs = big(4 * j + 3) * catalan(j);
        let rhs = binomial(2 * ji, ji) * 2 + binomial(2 * ji + 1, ji + 1);
        Ok(expect_eq(&[("j", ji)], "(4j+3) C_j = 2 C(2j,j) + C(2j+1,j+1)", &lhs, &rhs))
    })
}

/// The three exact sums over `j = 0..=p-2`:
/// `C(2j,j)(-2)^j`, `C(2j+1,j+1)(-2)^j` and `j C(2j,j)(-2)^j`.
pub fn lemma_3_6_sums(p: u64) -> [BigInt; 3] {
    let mut sums = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
    let mut central = BigInt::one();
    let mut power = BigInt::one();
    for j in 0..p.saturating_sub(1) {
        if j > 0 {
            central = central * big(2 * (2 * j - 1)) / big(j);
            power *= -2;
        }
        // C(2j+1, j+1) = C(2j,j) (2j+1) / (j+1)
        let odd = &central * big(2 * j + 1) / big(j + 1);
        sums[0] += &central * &power;
        sums[1] += odd * &power;
        sums[2] += &central * &power * big(j);
    }
    sums
}

fn lemma_3_6_instance(p: u64) -> Instance {
    let params = [("p", p as i64)];
    let m = big(p);
    // -4/9 mod p
    let minus_four_ninths = crate::modular::Residue::ratio(&BigInt::from(-4), &BigInt::from(9), &m)?;
    let targets = [BigInt::one(), BigInt::zero(), minus_four_ninths.value().clone()];
    let relations = [
        "sum_{j<=p-2} C(2j,j)(-2)^j = 1 (mod p)",
        "sum_{j<=p-2} C(2j+1,j+1)(-2)^j = 0 (mod p)",
        "sum_{j<=p-2} j C(2j,j)(-2)^j = -4/9 (mod p)",
    ];
    for ((sum, target), relation) in lemma_3_6_sums(p).iter().zip(&targets).zip(relations) {
        let lhs = sum.mod_floor(&m);
        if &lhs != target {
            return Ok(Some(Counterexample::new(&params, relation, lhs, target)));
        }
    }
    Ok(None)
}

pub fn check_lemma_3_6(p: u64) -> Result<VerificationReport> {
    require_prime_above(p, 3)?;
    sweep(LEM_3_6, format!("p={p}"), &[p], |&p| lemma_3_6_instance(p))
}

pub fn check_lemma_3_6_sweep(range: RangeInclusive<u64>) -> Result<VerificationReport> {
    let primes = primes_above(&range, 3);
    sweep(LEM_3_6, prime_span(&range, &primes), &primes, |&p| lemma_3_6_instance(p))
}

fn x_squared_plus_x() -> IntPoly {
    IntPoly::from_i64s(&[0, 1, 1])
}

fn one_plus_2x() -> IntPoly {
    IntPoly::from_i64s(&[1, 2])
}

/// `(s_{n+1} - (1+2x)s_n) / (x^2+x)` and `(s_n - (1+2x)s_{n+1}) / (x^2+x)`
/// given `s` indexed from 0 with at least `n + 2` entries.
pub fn lemma_4_1_quotients(s: &[IntPoly], n: u64) -> Result<(IntPoly, IntPoly)> {
    let (cur, next) = (&s[n as usize], &s[n as usize + 1]);
    let first = (next - &(&one_plus_2x() * cur)).exact_div(&x_squared_plus_x())?;
    let second = (cur - &(&one_plus_2x() * next)).exact_div(&x_squared_plus_x())?;
    Ok((first, second))
}

fn division_failure(params: &[(&str, i64)], relation: &str, err: Error) -> Instance {
    match err {
        Error::NotDivisible { remainder } => {
            Ok(Some(Counterexample::new(params, format!("{relation}: zero remainder"), remainder, "0")))
        }
        Error::NotIntegral { degree, coefficient } => Ok(Some(Counterexample::new(
            params,
            format!("{relation}: integer coefficient of x^{degree}"),
            coefficient,
            "integer",
        ))),
        other => Err(other),
    }
}

pub fn check_lemma_4_1(range: RangeInclusive<u64>) -> Result<VerificationReport> {
    let (lo, hi, params) = positive_range(&range);
    let s = little_schroder_poly_table(hi + 1)?;
    sweep(LEM_4_1, span("n", lo, hi), &params, |&n| {
        let p = [("n", n as i64)];
        match lemma_4_1_quotients(&s, n) {
            Ok(_) => Ok(None),
            Err(e) => division_failure(&p, "(x^2+x) divides s_{n+1} - (1+2x)s_n and s_n - (1+2x)s_{n+1}", e),
        }
    })
}

/// `((1+2x)(2+n) s_{n+1}^2 + s_n s_{n+1}) / (1+2x)^3`.
pub fn lemma_4_2_quotient(s: &[IntPoly], n: u64) -> Result<IntPoly> {
    let (cur, next) = (&s[n as usize], &s[n as usize + 1]);
    let numerator = (&one_plus_2x() * &(next * next)).scale(&big(n + 2)) + &(cur * next);
    numerator.exact_div(&one_plus_2x().pow(3))
}

fn lemma_4_2_instance(s: &[IntPoly], n: u64) -> Instance {
    match lemma_4_2_quotient(s, n) {
        Ok(_) => Ok(None),
        Err(e) => division_failure(&[("n", n as i64)], "(1+2x)^3 divides (1+2x)(2+n)s_{n+1}^2 + s_n s_{n+1}", e),
    }
}

/// Single even `n`; returns the quotient alongside the report.
pub fn check_lemma_4_2(n: u64) -> Result<(VerificationReport, Option<IntPoly>)> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 2".into()));
    }
    if n % 2 == 1 {
        return Err(Error::OddN(n));
    }
    let s = little_schroder_poly_table(n + 1)?;
    let report = sweep(LEM_4_2, format!("n={n}"), &[n], |&n| lemma_4_2_instance(&s, n))?;
    let quotient = report.passed().then(|| lemma_4_2_quotient(&s, n)).transpose()?;
    Ok((report, quotient))
}

pub fn check_lemma_4_2_sweep(range: RangeInclusive<u64>) -> Result<VerificationReport> {
    let params = even_params(&range);
    let s = little_schroder_poly_table(range.end().max(&1) + 1)?;
    sweep(LEM_4_2, even_span(&range), &params, |&n| lemma_4_2_instance(&s, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn lemma_2_1_small_quotients() {
        let t = Tables::new(4).unwrap();
        assert_eq!(lemma_2_1_numerator(&t, 1), b(54));
        assert_eq!(lemma_2_1_numerator(&t, 2), b(918));
        let r = check_lemma_2_1(1..=30).unwrap();
        assert!(r.passed());
        assert_eq!(r.instances_checked, 30);
    }

    #[test]
    fn lemma_2_2_examples() {
        let t = Tables::new(4).unwrap();
        assert_eq!(lemma_2_2_expression(&t, 1), b(15));
        assert_eq!(t.d(3) - b(4 * 5) * t.s(2), b(3));
        assert!(check_lemma_2_2(1..=30).unwrap().passed());
    }

    #[test]
    fn prime_values_at_five_and_seven() {
        let t = Tables::new(8).unwrap();
        assert_eq!(prime_values(&t, 5), [b(2), b(3), b(1), b(3)]);
        assert!(check_prime_values(5).unwrap().passed());
        assert!(check_prime_values(7).unwrap().passed());
    }

    #[test]
    fn prime_values_at_three_only_gate_the_schroder_part() {
        let t = Tables::new(4).unwrap();
        // s_3 = 11 = 2 and s_4 = 45 = 3 = 0 (mod 3); D_2 = 13 = 1, D_3 = 63 = 0
        assert_eq!(prime_values(&t, 3), [b(2), b(0), b(1), b(0)]);
        assert!(check_prime_values(3).unwrap().passed());
        assert!(matches!(check_prime_values(2), Err(Error::PrimeTooSmall { .. })));
        assert!(matches!(check_prime_values(9), Err(Error::NotAPrime(_))));
    }

    #[test]
    fn lemma_3_1_examples() {
        let r = check_lemma_3_1(1..=2).unwrap();
        assert!(r.passed());
        // n = 2: 2 * 13 * 3 = 78
        let t = Tables::new(3).unwrap();
        assert_eq!(b(2) * t.d(2) * t.d(1), b(78));
    }

    #[test]
    fn lemma_3_2_examples() {
        assert_eq!(lemma_3_2_lhs(0, 1), b(1));
        assert_eq!(lemma_3_2_lhs(1, 3), b(30));
        assert_eq!(lemma_3_2_lhs(1, 2), b(6));
        assert_eq!(lemma_3_2_instance(1, 3).unwrap(), None);
        let r = check_lemma_3_2(10, 1..=12).unwrap();
        assert!(r.passed());
        // pairs with j <= min(n-1, 10)
        let expected: u64 = (1..=12u64).map(|n| n.min(11)).sum();
        assert_eq!(r.instances_checked, expected);
    }

    #[test]
    fn lemma_3_3_examples() {
        assert_eq!(lemma_3_3_sum(1), Rational::from_integer(b(1)));
        assert_eq!(lemma_3_3_sum(2), Rational::from_integer(b(9)));
        assert!(check_lemma_3_3(1..=25).unwrap().passed());
    }

    #[test]
    fn lemma_3_4_examples() {
        assert_eq!(lemma_3_4_lhs(0, 2), Rational::from_integer(b(14)));
        assert_eq!(lemma_3_4_rhs(0, 2).unwrap(), Rational::from_integer(b(14)));
        assert_eq!(lemma_3_4_lhs(0, 1), Rational::from_integer(b(5)));
        assert_eq!(lemma_3_4_lhs(1, 2), lemma_3_4_rhs(1, 2).unwrap());
        assert!(check_lemma_3_4(8, 1..=10).unwrap().passed());
    }

    #[test]
    fn lemma_3_4_right_side_is_not_always_integral() {
        let non_integral = (1..=20u64)
            .flat_map(|n| (0..n).map(move |j| (j, n)))
            .filter(|&(j, n)| !lemma_3_4_rhs(j, n).unwrap().is_integer())
            .count();
        assert!(non_integral > 0);
    }

    #[test]
    fn lemma_3_5_examples() {
        let r = check_lemma_3_5(0..=4).unwrap();
        assert!(r.passed());
        assert_eq!(r.instances_checked, 5);
    }

    #[test]
    fn lemma_3_6_at_five() {
        assert_eq!(lemma_3_6_sums(5), [b(-139), b(-245), b(-436)]);
        assert!(check_lemma_3_6(5).unwrap().passed());
        assert!(matches!(check_lemma_3_6(3), Err(Error::PrimeTooSmall { .. })));
        assert!(check_lemma_3_6_sweep(1..=100).unwrap().passed());
    }

    #[test]
    fn lemma_4_1_examples() {
        let s = little_schroder_poly_table(4).unwrap();
        let (first, second) = lemma_4_1_quotients(&s, 1).unwrap();
        assert_eq!(first, IntPoly::zero());
        assert_eq!(second, IntPoly::from_i64s(&[-4]));
        let (first, _) = lemma_4_1_quotients(&s, 2).unwrap();
        assert_eq!(first, IntPoly::one());
        assert!(check_lemma_4_1(1..=20).unwrap().passed());
    }

    #[test]
    fn lemma_4_2_examples() {
        let (r, q) = check_lemma_4_2(2).unwrap();
        assert!(r.passed());
        assert_eq!(q.unwrap(), IntPoly::from_i64s(&[5, 25, 25]));
        assert!(matches!(check_lemma_4_2(3), Err(Error::OddN(3))));
        assert!(check_lemma_4_2(4).unwrap().0.passed());
        let r = check_lemma_4_2_sweep(1..=20).unwrap();
        assert!(r.passed());
        assert_eq!(r.instances_checked, 10);
    }
}
