//! Cross-definition checks: every sequence and polynomial family computed
//! by independent routes, and the identities linking the families.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigInt;

use super::report::{expect_eq, sweep, Instance, VerificationReport};
use super::{even_params, even_span, span};
use crate::error::{Error, Result};
use crate::families::{
    delannoy_poly, large_schroder_poly, little_schroder_poly, little_schroder_poly_table,
    little_schroder_poly_trinomial_form,
};
use crate::poly::IntPoly;
use crate::sequences::{
    delannoy_direct, delannoy_second_form, large_schroder, little_schroder_direct, trinomial, Tables,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// Defining sum, second sum form, `T_n(3,2)` and the recurrence table.
    Delannoy,
    /// `S_n = 2 s_n`, with `s_n` by definition and by recurrence.
    Schroder,
    /// `D_{n+1}(x) - D_{n-1}(x) = 2x(2n+1) S_n(x)`
    PolyDelannoy,
    /// `(x+1) s_n(x) = S_n(x)`
    PolySchroder,
    /// The trinomial-style expansion of `s_n(x)` against the definition.
    SForm,
    /// `(1+2x)` divides `s_n(x)` for even `n`.
    SEven,
    /// Every polynomial family at `x = 1` against the integer sequences,
    /// and the recurrence-built `s_n(x)` table against the definition.
    Evaluation,
}

impl Identity {
    pub const ALL: [Identity; 7] = [
        Identity::Delannoy,
        Identity::Schroder,
        Identity::PolyDelannoy,
        Identity::PolySchroder,
        Identity::SForm,
        Identity::SEven,
        Identity::Evaluation,
    ];

    pub fn claim_id(self) -> &'static str {
        match self {
            Identity::Delannoy => "xdef-delannoy",
            Identity::Schroder => "xdef-schroder",
            Identity::PolyDelannoy => "xdef-poly-d",
            Identity::PolySchroder => "xdef-poly-s",
            Identity::SForm => "xdef-s-form",
            Identity::SEven => "xdef-s-even",
            Identity::Evaluation => "xdef-eval",
        }
    }

    pub fn is_polynomial(self) -> bool {
        !matches!(self, Identity::Delannoy | Identity::Schroder)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.claim_id())
    }
}

impl FromStr for Identity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL.into_iter().find(|i| i.claim_id() == s).ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

fn delannoy_instance(tables: &Tables, n: u64) -> Instance {
    let p = [("n", n as i64)];
    let direct = delannoy_direct(n);
    let routes = [
        ("D_n: defining sum = sum C(n+k,2k) C(2k,k)", delannoy_second_form(n)),
        ("D_n: defining sum = T_n(3,2)", trinomial(n, &BigInt::from(3), &BigInt::from(2))),
        ("D_n: defining sum = recurrence table", tables.d(n).clone()),
    ];
    Ok(routes.iter().find_map(|(relation, v)| expect_eq(&p, relation, &direct, v)))
}

fn schroder_instance(tables: &Tables, n: u64) -> Instance {
    let p = [("n", n as i64)];
    let s = little_schroder_direct(n)?;
    if let Some(cx) = expect_eq(&p, "s_n: defining sum = recurrence table", &s, tables.s(n)) {
        return Ok(Some(cx));
    }
    Ok(expect_eq(&p, "S_n = 2 s_n", &large_schroder(n)?, &(s * 2)))
}

fn poly_delannoy_instance(n: u64) -> Instance {
    let lhs = &delannoy_poly(n + 1) - &delannoy_poly(n - 1);
    let rhs = (&IntPoly::from_i64s(&[0, 2]) * &large_schroder_poly(n)?).scale(&BigInt::from(2 * n + 1));
    Ok(expect_eq(&[("n", n as i64)], "D_{n+1}(x) - D_{n-1}(x) = 2x(2n+1) S_n(x)", &lhs, &rhs))
}

fn poly_schroder_instance(n: u64) -> Instance {
    let lhs = &IntPoly::from_i64s(&[1, 1]) * &little_schroder_poly(n)?;
    Ok(expect_eq(&[("n", n as i64)], "(x+1) s_n(x) = S_n(x)", &lhs, &large_schroder_poly(n)?))
}

fn s_form_instance(n: u64) -> Instance {
    // the expansion indexed by n produces s_{n+1}
    Ok(expect_eq(
        &[("n", n as i64)],
        "s_{n+1}(x) = sum_k C(n,2k) C_k (2x+1)^(n-2k) (x(x+1))^k",
        &little_schroder_poly(n + 1)?,
        &little_schroder_poly_trinomial_form(n + 1)?,
    ))
}

fn s_even_instance(n: u64) -> Instance {
    match little_schroder_poly(n)?.exact_div(&IntPoly::from_i64s(&[1, 2])) {
        Ok(_) => Ok(None),
        Err(Error::NotDivisible { remainder }) => Ok(Some(super::report::Counterexample::new(
            &[("n", n as i64)],
            "(1+2x) divides s_n(x) for even n",
            remainder,
            "0",
        ))),
        Err(Error::NotIntegral { degree, coefficient }) => Ok(Some(super::report::Counterexample::new(
            &[("n", n as i64)],
            format!("s_n(x)/(1+2x) has an integer coefficient of x^{degree}"),
            coefficient,
            "integer",
        ))),
        Err(e) => Err(e),
    }
}

fn evaluation_instance(tables: &Tables, s_table: &[IntPoly], n: u64) -> Instance {
    let p = [("n", n as i64)];
    let one = BigInt::from(1);
    let s_def = little_schroder_poly(n)?;
    let checks = [
        ("D_n(1) = D_n", delannoy_poly(n).eval(&one), tables.d(n).clone()),
        ("S_n(1) = S_n", large_schroder_poly(n)?.eval(&one), large_schroder(n)?),
        ("s_n(1) = s_n", s_def.eval(&one), tables.s(n).clone()),
    ];
    if let Some(cx) = checks.iter().find_map(|(r, l, v)| expect_eq(&p, r, l, v)) {
        return Ok(Some(cx));
    }
    Ok(expect_eq(&p, "s_n(x): definition = recurrence table", &s_def, &s_table[n as usize]))
}

/// Sweep `which` over `n` in `range` (`n >= 1`; even `n >= 2` for
/// [`Identity::SEven`]).
pub fn check_identity(which: Identity, range: RangeInclusive<u64>) -> Result<VerificationReport> {
    let id = which.claim_id();
    let lo = (*range.start()).max(1);
    let hi = *range.end();
    let params: Vec<u64> = (lo..=hi).collect();
    let label = span("n", lo, hi);
    match which {
        Identity::Delannoy => {
            let tables = Tables::new(hi)?;
            sweep(id, label, &params, |&n| delannoy_instance(&tables, n))
        }
        Identity::Schroder => {
            let tables = Tables::new(hi)?;
            sweep(id, label, &params, |&n| schroder_instance(&tables, n))
        }
        Identity::PolyDelannoy => sweep(id, label, &params, |&n| poly_delannoy_instance(n)),
        Identity::PolySchroder => sweep(id, label, &params, |&n| poly_schroder_instance(n)),
        Identity::SForm => sweep(id, label, &params, |&n| s_form_instance(n)),
        Identity::SEven => sweep(id, even_span(&range), &even_params(&range), |&n| s_even_instance(n)),
        Identity::Evaluation => {
            let tables = Tables::new(hi)?;
            let s_table = little_schroder_poly_table(hi.max(1))?;
            sweep(id, label, &params, |&n| evaluation_instance(&tables, &s_table, n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selectors_round_trip() {
        for i in Identity::ALL {
            assert_eq!(i.claim_id().parse::<Identity>().unwrap(), i);
        }
    }

    #[test]
    fn all_identities_hold_on_small_ranges() {
        for i in Identity::ALL {
            let r = check_identity(i, 1..=30).unwrap();
            assert!(r.passed(), "{}", r.summary());
        }
    }

    #[test]
    fn even_identity_counts_even_n_only() {
        let r = check_identity(Identity::SEven, 1..=10).unwrap();
        assert_eq!(r.instances_checked, 5);
    }

    #[test]
    fn odd_index_is_not_divisible() {
        // s_3(x) = 5x^2 + 5x + 1 at x = -1/2 is -1/4
        assert!(s_even_instance(3).unwrap().is_some());
    }
}
