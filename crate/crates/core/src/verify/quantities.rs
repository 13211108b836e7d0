//! The two normalized alternating sums
//!
//! ```text
//! A_n = 2/(3n(n+1)) * sum_{k=1..n} (-1)^(n-k) k^2 D_k D_{k-1}
//! B_n = 1/n         * sum_{k=1..n} (-1)^(n-k) (4k^2+2k-1) D_{k-1} s_k
//! ```
//!
//! each computed by three independent routes: the normalized alternating
//! sum, a closed form in neighbouring sequence values, and a single
//! binomial sum. A transcription error in any one route breaks agreement.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::sequences::{div_exact, sign, Tables};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AMethod {
    NormalizedSum,
    /// `(D_n(D_{n+1} - 3D_n) + D_{n-1}(D_n + 3D_{n+1})) / 54`
    ClosedFormD,
    /// `sum_{j<n} C(2j,j) C(n+j+1,j) C(n-1,j) 2^j`
    SingleSum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BMethod {
    NormalizedSum,
    /// `((n+1) D_n s_n + (n+2) D_{n-1} s_{n+1}) / 3`
    ClosedFormDs,
    /// `2n + 3 + sum_{j=1..n-1} C_j w(n,j+1) ((4j+2)n + 4j+3) 2^j`
    SingleSum,
}

impl AMethod {
    pub const ALL: [AMethod; 3] = [AMethod::NormalizedSum, AMethod::ClosedFormD, AMethod::SingleSum];
}

impl BMethod {
    pub const ALL: [BMethod; 3] = [BMethod::NormalizedSum, BMethod::ClosedFormDs, BMethod::SingleSum];
}

fn require_positive(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    Ok(())
}

/// Standalone entry point; builds its own tables.
pub fn compute_a(n: u64, method: AMethod) -> Result<BigInt> {
    require_positive(n)?;
    compute_a_with(&Tables::new(n + 1)?, n, method)
}

pub fn compute_b(n: u64, method: BMethod) -> Result<BigInt> {
    require_positive(n)?;
    compute_b_with(&Tables::new(n + 1)?, n, method)
}

/// `sum_{k=1..n} (-1)^(n-k) k^2 D_k D_{k-1}`
pub fn alternating_sum_a(tables: &Tables, n: u64) -> BigInt {
    let mut total = BigInt::zero();
    for k in 1..=n {
        let term = BigInt::from(k * k) * tables.d(k) * tables.d(k - 1);
        total += sign(n as i64 - k as i64) * term;
    }
    total
}

/// `sum_{k=1..n} (-1)^(n-k) (4k^2+2k-1) D_{k-1} s_k`
pub fn alternating_sum_b(tables: &Tables, n: u64) -> BigInt {
    let mut total = BigInt::zero();
    for k in 1..=n {
        let term = BigInt::from(4 * k * k + 2 * k - 1) * tables.d(k - 1) * tables.s(k);
        total += sign(n as i64 - k as i64) * term;
    }
    total
}

/// `D_n(D_{n+1} - 3D_n) + D_{n-1}(D_n + 3D_{n+1})`
pub fn lemma_2_1_numerator(tables: &Tables, n: u64) -> BigInt {
    let (prev, cur, next) = (tables.d(n - 1), tables.d(n), tables.d(n + 1));
    cur * (next - cur * 3) + prev * (cur + next * 3)
}

/// `(n+1) D_n s_n + (n+2) D_{n-1} s_{n+1}`
pub fn lemma_2_2_expression(tables: &Tables, n: u64) -> BigInt {
    BigInt::from(n + 1) * tables.d(n) * tables.s(n) + BigInt::from(n + 2) * tables.d(n - 1) * tables.s(n + 1)
}

/// Walks `j = 0, 1, ...` yielding `(C(2j,j), C(n+j+1,j), C(n-1,j))`,
/// each updated by an exact ratio step.
struct ColumnBinomials {
    n: u64,
    j: u64,
    central: BigInt,
    upper: BigInt,
    lower: BigInt,
}

impl ColumnBinomials {
    fn new(n: u64) -> Self {
        ColumnBinomials { n, j: 0, central: BigInt::from(1), upper: BigInt::from(1), lower: BigInt::from(1) }
    }

    fn advance(&mut self) {
        self.j += 1;
        let (n, j) = (self.n, self.j);
        self.central *= 2 * (2 * j - 1);
        self.central /= j;
        self.upper *= n + j + 1;
        self.upper /= j;
        self.lower *= n - j;
        self.lower /= j;
    }
}

pub fn compute_a_with(tables: &Tables, n: u64, method: AMethod) -> Result<BigInt> {
    require_positive(n)?;
    match method {
        AMethod::NormalizedSum => {
            let sum = alternating_sum_a(tables, n) * 2;
            div_exact(&sum, &BigInt::from(3 * n * (n + 1)), "A_n normalization")
        }
        AMethod::ClosedFormD => div_exact(&lemma_2_1_numerator(tables, n), &BigInt::from(54), "A_n closed form"),
        AMethod::SingleSum => {
            let mut cols = ColumnBinomials::new(n);
            let mut total = BigInt::zero();
            for j in 0..n {
                if j > 0 {
                    cols.advance();
                }
                total += (&cols.central * &cols.upper * &cols.lower) << j as usize;
            }
            Ok(total)
        }
    }
}

pub fn compute_b_with(tables: &Tables, n: u64, method: BMethod) -> Result<BigInt> {
    require_positive(n)?;
    match method {
        BMethod::NormalizedSum => div_exact(&alternating_sum_b(tables, n), &BigInt::from(n), "B_n normalization"),
        BMethod::ClosedFormDs => div_exact(&lemma_2_2_expression(tables, n), &BigInt::from(3), "B_n closed form"),
        BMethod::SingleSum => {
            let mut cols = ColumnBinomials::new(n);
            let mut total = BigInt::from(2 * n + 3);
            for j in 1..n {
                cols.advance();
                let jp1 = BigInt::from(j + 1);
                let catalan = div_exact(&cols.central, &jp1, "Catalan number")?;
                let w = div_exact(&(&cols.lower * &cols.upper), &jp1, "w(n, j+1)")?;
                let weight = BigInt::from((4 * j + 2) * n + 4 * j + 3);
                total += (catalan * w * weight) << j as usize;
            }
            Ok(total)
        }
    }
}

fn all_agree(quantity: &'static str, n: u64, values: Vec<BigInt>) -> Result<BigInt> {
    if values.windows(2).all(|w| w[0] == w[1]) {
        Ok(values.into_iter().next().expect("three routes"))
    } else {
        let rendered: Vec<String> = values.iter().map(|v| v.to_string()).collect();
        Err(Error::MethodMismatch { quantity, n, values: rendered.join(" / ") })
    }
}

/// `A_n` by all three routes; `MethodMismatch` unless they agree.
pub fn compute_a_all(tables: &Tables, n: u64) -> Result<BigInt> {
    let values = AMethod::ALL.iter().map(|&m| compute_a_with(tables, n, m)).collect::<Result<Vec<_>>>()?;
    all_agree("A", n, values)
}

pub fn compute_b_all(tables: &Tables, n: u64) -> Result<BigInt> {
    let values = BMethod::ALL.iter().map(|&m| compute_b_with(tables, n, m)).collect::<Result<Vec<_>>>()?;
    all_agree("B", n, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::{binomial, catalan, weight_w};

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn a_examples() {
        assert_eq!(compute_a(1, AMethod::ClosedFormD).unwrap(), big(1));
        for m in AMethod::ALL {
            assert_eq!(compute_a(1, m).unwrap(), big(1), "{m:?}");
            assert_eq!(compute_a(2, m).unwrap(), big(17), "{m:?}");
        }
    }

    #[test]
    fn b_examples() {
        for m in BMethod::ALL {
            assert_eq!(compute_b(1, m).unwrap(), big(5), "{m:?}");
            assert_eq!(compute_b(2, m).unwrap(), big(83), "{m:?}");
        }
        assert_eq!(compute_b(3, BMethod::SingleSum).unwrap(), compute_b(3, BMethod::NormalizedSum).unwrap());
    }

    #[test]
    fn zero_is_rejected() {
        assert!(compute_a(0, AMethod::SingleSum).is_err());
        assert!(compute_b(0, BMethod::SingleSum).is_err());
    }

    // Single sums spelled out with independent binomial calls.
    fn a_single_sum_naive(n: i64) -> BigInt {
        (0..n).map(|j| (binomial(2 * j, j) * binomial(n + j + 1, j) * binomial(n - 1, j)) << j as usize).sum()
    }

    fn b_single_sum_naive(n: u64) -> BigInt {
        (0..n)
            .map(|j| {
                (catalan(j) * weight_w(n, j + 1).unwrap() * BigInt::from((4 * j + 2) * n + 4 * j + 3)) << j as usize
            })
            .sum()
    }

    #[test]
    fn incremental_binomials_match_naive_sums() {
        let tables = Tables::new(41).unwrap();
        for n in 1..=40u64 {
            assert_eq!(compute_a_with(&tables, n, AMethod::SingleSum).unwrap(), a_single_sum_naive(n as i64));
            assert_eq!(compute_b_with(&tables, n, BMethod::SingleSum).unwrap(), b_single_sum_naive(n));
        }
    }

    #[test]
    fn routes_agree_and_values_are_positive_odd() {
        let tables = Tables::new(121).unwrap();
        for n in 1..=120 {
            let a = compute_a_all(&tables, n).unwrap();
            let b = compute_b_all(&tables, n).unwrap();
            assert!(crate::sequences::is_positive_odd(&a), "A_{n}");
            assert!(crate::sequences::is_positive_odd(&b), "B_{n}");
        }
    }

    #[test]
    fn mismatch_is_reported() {
        let err = all_agree("A", 4, vec![big(1), big(1), big(3)]).unwrap_err();
        match err {
            Error::MethodMismatch { quantity, n, values } => {
                assert_eq!((quantity, n), ("A", 4));
                assert_eq!(values, "1 / 1 / 3");
            }
            other => panic!("{other:?}"),
        }
    }
}
