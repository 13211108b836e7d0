//! Delannoy and Schröder polynomials in `Z[x]`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::sequences::{binomial, catalan, div_exact, narayana};

/// `D_n(x) = sum_k C(n,k) C(n+k,k) x^k`.
pub fn delannoy_poly(n: u64) -> IntPoly {
    let n = n as i64;
    IntPoly::new((0..=n).map(|k| binomial(n, k) * binomial(n + k, k)).collect())
}

/// `S_n(x) = sum_k C(n,k) C(n+k,k) x^k / (k+1)`.
pub fn large_schroder_poly(n: u64) -> Result<IntPoly> {
    let n = n as i64;
    let coeffs = (0..=n)
        .map(|k| {
            div_exact(
                &(binomial(n, k) * binomial(n + k, k)),
                &BigInt::from(k + 1),
                "large Schröder polynomial coefficient",
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPoly::new(coeffs))
}

/// `s_n(x) = sum_{k=1..n} N(n,k) x^(k-1) (x+1)^(n-k)` for `n >= 1`.
pub fn little_schroder_poly(n: u64) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument("little Schröder polynomials are defined for n >= 1".into()));
    }
    let x_plus_1 = IntPoly::from_i64s(&[1, 1]);
    // (x+1)^(n-k) for k = n, n-1, ..., 1
    let mut powers = Vec::with_capacity(n as usize);
    powers.push(IntPoly::one());
    for _ in 1..n {
        let next = powers.last().unwrap() * &x_plus_1;
        powers.push(next);
    }
    let mut total = IntPoly::zero();
    for k in 1..=n {
        let term = IntPoly::monomial(narayana(n, k as i64)?, (k - 1) as usize);
        total = total + &(&term * &powers[(n - k) as usize]);
    }
    Ok(total)
}

/// `s_m(x)` through the central-trinomial-style expansion
/// `s_{n+1}(x) = sum_k C(n,2k) C_k (2x+1)^(n-2k) (x(x+1))^k`, with `n = m - 1`.
pub fn little_schroder_poly_trinomial_form(m: u64) -> Result<IntPoly> {
    if m == 0 {
        return Err(Error::InvalidArgument("little Schröder polynomials are defined for n >= 1".into()));
    }
    let n = (m - 1) as i64;
    let two_x_1 = IntPoly::from_i64s(&[1, 2]);
    let x_x_1 = IntPoly::from_i64s(&[0, 1, 1]);
    let mut odd_powers = vec![IntPoly::one()];
    for _ in 0..n {
        let next = odd_powers.last().unwrap() * &two_x_1;
        odd_powers.push(next);
    }
    let mut total = IntPoly::zero();
    let mut xx_pow = IntPoly::one();
    for k in 0..=n / 2 {
        let c = binomial(n, 2 * k) * catalan(k as u64);
        let term = (&odd_powers[(n - 2 * k) as usize] * &xx_pow).scale(&c);
        total = total + term;
        xx_pow = &xx_pow * &x_x_1;
    }
    Ok(total)
}

/// `s_0(x)..=s_{n_max}(x)` from
/// `(k+3) s_{k+2}(x) = (2k+3)(1+2x) s_{k+1}(x) - k s_k(x)`,
/// seeds `s_1 = 1`, `s_2 = 2x + 1`. Index 0 holds the `s_0(x) = 1` convention.
pub fn little_schroder_poly_table(n_max: u64) -> Result<Vec<IntPoly>> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("little_schroder_poly_table requires n_max >= 1".into()));
    }
    let one_2x = IntPoly::from_i64s(&[1, 2]);
    let mut table = vec![IntPoly::one(), IntPoly::one()];
    if n_max >= 2 {
        table.push(one_2x.clone());
    }
    for k in 1..n_max.saturating_sub(1) {
        let i = k as usize;
        let rhs = &(&one_2x * &table[i + 1]).scale(&BigInt::from(2 * k + 3)) - &table[i].scale(&BigInt::from(k));
        let next = rhs.div_scalar_exact(&BigInt::from(k + 3)).map_err(|e| match e {
            Error::NotIntegral { degree, .. } => Error::InexactDivision {
                context: format!("s(x) recurrence at k = {k}, coefficient of x^{degree}"),
                dividend: rhs.coeff(degree),
                divisor: BigInt::from(k + 3),
            },
            other => other,
        })?;
        table.push(next);
    }
    Ok(table)
}
