//! Integer sequences: binomials, Catalan and Narayana numbers, generalized
//! central trinomial coefficients, central Delannoy numbers and the little
//! and large Schröder numbers.
//!
//! Every sequence has a direct-sum evaluator and a recurrence-driven table.
//! The direct sums are O(n) per call and never cached; they exist as oracles
//! for the tables, which are the fast path for sweeps.
//!
//! Conventions:
//! - `binomial(n, k)` is 0 when `k < 0`, `k > n`, or `n < 0`.
//! - `s_0 = 1`. The defining sum is empty at `n = 0`; the value is a library
//!   convention so that tables can be indexed from 0. No certificate depends
//!   on it.

use std::fmt;
use std::fs;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact division that refuses to truncate.
pub fn div_exact(dividend: &BigInt, divisor: &BigInt, context: &str) -> Result<BigInt> {
    if divisor.is_zero() {
        return Err(Error::InexactDivision {
            context: context.to_string(),
            dividend: dividend.clone(),
            divisor: divisor.clone(),
        });
    }
    let (q, r) = dividend.div_rem(divisor);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InexactDivision {
            context: context.to_string(),
            dividend: dividend.clone(),
            divisor: divisor.clone(),
        })
    }
}

/// `C(n, k)`, zero outside `0 <= k <= n`. Negative `n` also yields zero; no
/// claim here needs the generalized (upper-negation) value.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc = C(n, i) here, so the division below is exact.
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn catalan(j: u64) -> BigInt {
    let j = j as i64;
    // C(2j, j) is always divisible by j + 1.
    binomial(2 * j, j) / BigInt::from(j + 1)
}

/// Narayana number `N(n, k) = C(n,k) C(n,k-1) / n`; zero for `k <= 0` or `k > n`.
pub fn narayana(n: u64, k: i64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidArgument("narayana requires n >= 1".into()));
    }
    let ni = n as i64;
    if k <= 0 || k > ni {
        return Ok(BigInt::zero());
    }
    let num = binomial(ni, k) * binomial(ni, k - 1);
    div_exact(&num, &BigInt::from(n), "narayana")
}

/// `T_n(b, c) = sum_k C(n,2k) C(2k,k) b^(n-2k) c^k`.
pub fn trinomial(n: u64, b: &BigInt, c: &BigInt) -> BigInt {
    let n = n as i64;
    let mut total = BigInt::zero();
    let mut c_pow = BigInt::one();
    for k in 0..=n / 2 {
        let b_pow = num_traits::pow(b.clone(), (n - 2 * k) as usize);
        total += binomial(n, 2 * k) * binomial(2 * k, k) * b_pow * &c_pow;
        c_pow *= c;
    }
    total
}

/// `D_n = sum_k C(n,k) C(n+k,k)`.
pub fn delannoy_direct(n: u64) -> BigInt {
    let n = n as i64;
    (0..=n).map(|k| binomial(n, k) * binomial(n + k, k)).sum()
}

/// `D_n = sum_k C(n+k,2k) C(2k,k)`, the second defining form.
pub fn delannoy_second_form(n: u64) -> BigInt {
    let n = n as i64;
    (0..=n).map(|k| binomial(n + k, 2 * k) * binomial(2 * k, k)).sum()
}

/// `s_n = sum_{k=1..n} N(n,k) 2^(n-k)` for `n >= 1`.
pub fn little_schroder_direct(n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::InvalidArgument("little Schröder numbers are defined for n >= 1".into()));
    }
    let mut total = BigInt::zero();
    for k in 1..=n {
        total += narayana(n, k as i64)? << (n - k) as usize;
    }
    Ok(total)
}

/// `S_n = sum_k C(n,k) C(n+k,k) / (k+1)`, each term exact.
pub fn large_schroder(n: u64) -> Result<BigInt> {
    let n = n as i64;
    let mut total = BigInt::zero();
    for k in 0..=n {
        let term = binomial(n, k) * binomial(n + k, k);
        total += div_exact(&term, &BigInt::from(k + 1), "large Schröder term")?;
    }
    Ok(total)
}

/// `w(n, k) = C(n-1,k-1) C(n+k,k-1) / k`.
pub fn weight_w(n: u64, k: u64) -> Result<BigInt> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidArgument("w(n, k) requires n, k >= 1".into()));
    }
    let (n, k) = (n as i64, k as i64);
    let num = binomial(n - 1, k - 1) * binomial(n + k, k - 1);
    div_exact(&num, &BigInt::from(k), "w(n, k)")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SequenceKind {
    Delannoy,
    LittleSchroder,
    LargeSchroder,
}

impl SequenceKind {
    pub const ALL: [SequenceKind; 3] =
        [SequenceKind::Delannoy, SequenceKind::LittleSchroder, SequenceKind::LargeSchroder];

    pub fn as_str(self) -> &'static str {
        match self {
            SequenceKind::Delannoy => "delannoy",
            SequenceKind::LittleSchroder => "little_schroder",
            SequenceKind::LargeSchroder => "large_schroder",
        }
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SequenceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SequenceKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown sequence kind `{s}`")))
    }
}

/// Values `0..=max_index` of one sequence. Index 0 of the little Schröder
/// table holds the `s_0 = 1` convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    kind: SequenceKind,
    values: Vec<BigInt>,
}

impl SequenceTable {
    pub fn build(kind: SequenceKind, n_max: u64) -> Result<Self> {
        match kind {
            SequenceKind::Delannoy => delannoy_table(n_max),
            SequenceKind::LittleSchroder => little_schroder_table(n_max),
            SequenceKind::LargeSchroder => large_schroder_table(n_max),
        }
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    pub fn max_index(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn get(&self, index: u64) -> Option<&BigInt> {
        self.values.get(index as usize)
    }

    /// Header line `kind n_max`, then one decimal value per line.
    pub fn write_cache<W: Write>(&self, mut out: W) -> Result<()> {
        writeln!(out, "{} {}", self.kind, self.max_index())?;
        for v in &self.values {
            writeln!(out, "{v}")?;
        }
        Ok(())
    }

    pub fn read_cache<R: BufRead>(input: R) -> Result<Self> {
        let mut lines = input.lines();
        let header = lines.next().ok_or_else(|| Error::Cache("empty file".into()))??;
        let (kind, n_max) = header.split_once(' ').ok_or_else(|| Error::Cache(format!("bad header `{header}`")))?;
        let kind: SequenceKind = kind.parse().map_err(|_| Error::Cache(format!("unknown kind `{kind}`")))?;
        let n_max: u64 = n_max.parse().map_err(|_| Error::Cache(format!("bad n_max `{n_max}`")))?;
        let mut values = Vec::with_capacity(n_max as usize + 1);
        for line in lines {
            let line = line?;
            let v = line.parse::<BigInt>().map_err(|_| Error::Cache(format!("bad value `{line}`")))?;
            values.push(v);
        }
        if values.len() as u64 != n_max + 1 {
            return Err(Error::Cache(format!("header declares {} values, found {}", n_max + 1, values.len())));
        }
        Ok(SequenceTable { kind, values })
    }

    /// Reuses `<dir>/<kind>.txt` when it covers `n_max`, otherwise builds
    /// the table and (re)writes the file.
    pub fn load_or_build(kind: SequenceKind, n_max: u64, dir: &Path) -> Result<Self> {
        let path = cache_path(dir, kind);
        if let Ok(file) = fs::File::open(&path) {
            let cached = Self::read_cache(std::io::BufReader::new(file))?;
            if cached.kind == kind && cached.max_index() >= n_max {
                return Ok(cached.truncated(n_max));
            }
        }
        let table = Self::build(kind, n_max)?;
        fs::create_dir_all(dir)?;
        let mut buf = Vec::new();
        table.write_cache(&mut buf)?;
        fs::write(&path, buf)?;
        Ok(table)
    }

    fn truncated(mut self, n_max: u64) -> Self {
        self.values.truncate(n_max as usize + 1);
        self
    }
}

pub fn cache_path(dir: &Path, kind: SequenceKind) -> PathBuf {
    dir.join(format!("{kind}.txt"))
}

/// `D_0..=D_{n_max}` from `(k+1) D_{k+1} = 3(2k+1) D_k - k D_{k-1}`.
pub fn delannoy_table(n_max: u64) -> Result<SequenceTable> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("delannoy_table requires n_max >= 1".into()));
    }
    let mut values = vec![BigInt::one(), BigInt::from(3)];
    for k in 1..n_max {
        let kb = BigInt::from(k);
        let rhs = BigInt::from(3 * (2 * k + 1)) * &values[k as usize] - &kb * &values[k as usize - 1];
        values.push(div_exact(&rhs, &(kb + 1), "Delannoy recurrence")?);
    }
    Ok(SequenceTable { kind: SequenceKind::Delannoy, values })
}

/// `s_0..=s_{n_max}` from `(k+3) s_{k+2} = 3(2k+3) s_{k+1} - k s_k`.
pub fn little_schroder_table(n_max: u64) -> Result<SequenceTable> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("little_schroder_table requires n_max >= 1".into()));
    }
    let mut values = vec![BigInt::one(), BigInt::one()];
    if n_max >= 2 {
        values.push(BigInt::from(3));
    }
    for k in 1..n_max.saturating_sub(1) {
        let kb = BigInt::from(k);
        let rhs = BigInt::from(3 * (2 * k + 3)) * &values[k as usize + 1] - &kb * &values[k as usize];
        values.push(div_exact(&rhs, &(kb + 3), "little Schröder recurrence")?);
    }
    Ok(SequenceTable { kind: SequenceKind::LittleSchroder, values })
}

/// `S_0 = 1`, `S_n = 2 s_n` for `n >= 1`.
pub fn large_schroder_table(n_max: u64) -> Result<SequenceTable> {
    let little = little_schroder_table(n_max.max(1))?;
    let mut values: Vec<BigInt> = little.values.iter().map(|v| v << 1usize).collect();
    values[0] = BigInt::one();
    values.truncate(n_max as usize + 1);
    Ok(SequenceTable { kind: SequenceKind::LargeSchroder, values })
}

/// Read-only `D` and `s` tables shared by the verifiers.
#[derive(Debug, Clone)]
pub struct Tables {
    delannoy: Vec<BigInt>,
    little: Vec<BigInt>,
}

impl Tables {
    pub fn new(n_max: u64) -> Result<Self> {
        let n_max = n_max.max(2);
        Ok(Tables { delannoy: delannoy_table(n_max)?.values, little: little_schroder_table(n_max)?.values })
    }

    pub fn capacity(&self) -> u64 {
        self.delannoy.len() as u64 - 1
    }

    /// `D_n`. Panics beyond the table; callers size the tables up front.
    pub fn d(&self, n: u64) -> &BigInt {
        &self.delannoy[n as usize]
    }

    /// `s_n`, with `s_0 = 1`.
    pub fn s(&self, n: u64) -> &BigInt {
        &self.little[n as usize]
    }
}

/// `(-1)^e` for a possibly negative exponent.
pub fn sign(e: i64) -> BigInt {
    if e.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

pub fn is_odd(v: &BigInt) -> bool {
    v.is_odd()
}

pub fn is_positive_odd(v: &BigInt) -> bool {
    v.is_positive() && v.is_odd()
}
