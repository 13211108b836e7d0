//! Residues modulo `m`, modular inverses, and deterministic primality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A value reduced into `[0, modulus)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Residue {
    value: BigInt,
    modulus: BigInt,
}

impl Residue {
    pub fn new(value: &BigInt, modulus: &BigInt) -> Result<Self> {
        if modulus <= &BigInt::one() {
            return Err(Error::BadModulus(modulus.clone()));
        }
        Ok(Residue { value: value.mod_floor(modulus), modulus: modulus.clone() })
    }

    /// `num * den^{-1}` modulo `modulus`.
    pub fn ratio(num: &BigInt, den: &BigInt, modulus: &BigInt) -> Result<Self> {
        let n = Residue::new(num, modulus)?;
        let d = Residue::new(den, modulus)?;
        Ok(&n * &d.inverse()?)
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn inverse(&self) -> Result<Residue> {
        let eg = self.value.extended_gcd(&self.modulus);
        if !eg.gcd.is_one() {
            return Err(Error::NotInvertible { value: self.value.clone(), modulus: self.modulus.clone() });
        }
        Residue::new(&eg.x, &self.modulus)
    }

    fn same_modulus(&self, other: &Residue) {
        assert_eq!(self.modulus, other.modulus, "residue arithmetic requires equal moduli");
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// Canonical reduction of `value` modulo `modulus`.
pub fn residue(value: &BigInt, modulus: &BigInt) -> Result<Residue> {
    Residue::new(value, modulus)
}

pub fn mod_inverse(a: &Residue) -> Result<Residue> {
    a.inverse()
}

impl Add for &Residue {
    type Output = Residue;
    fn add(self, rhs: &Residue) -> Residue {
        self.same_modulus(rhs);
        Residue { value: (&self.value + &rhs.value).mod_floor(&self.modulus), modulus: self.modulus.clone() }
    }
}

impl Sub for &Residue {
    type Output = Residue;
    fn sub(self, rhs: &Residue) -> Residue {
        self.same_modulus(rhs);
        Residue { value: (&self.value - &rhs.value).mod_floor(&self.modulus), modulus: self.modulus.clone() }
    }
}

impl Mul for &Residue {
    type Output = Residue;
    fn mul(self, rhs: &Residue) -> Residue {
        self.same_modulus(rhs);
        Residue { value: (&self.value * &rhs.value).mod_floor(&self.modulus), modulus: self.modulus.clone() }
    }
}

impl Neg for &Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        Residue { value: (-&self.value).mod_floor(&self.modulus), modulus: self.modulus.clone() }
    }
}

// The first 13 primes are a deterministic Miller-Rabin witness set below
// 3,317,044,064,679,887,385,961,981 (covers all of u64).
const WITNESSES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
const EXTRA_WITNESSES: [u64; 12] = [43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic for every `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn strong_probable_prime(n: &BigInt, a: u64) -> bool {
    let one = BigInt::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut x = BigInt::from(a).modpow(&d, n);
    if x == one || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x).mod_floor(n);
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

/// Primality. Exact below 3.3 * 10^24; above that bound this is a strong
/// probable-prime test over the first 25 prime bases.
pub fn is_prime(n: &BigInt) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if n < &BigInt::zero() {
        return false;
    }
    for &p in WITNESSES.iter().chain(&EXTRA_WITNESSES) {
        if (n % p).is_zero() {
            return false;
        }
    }
    WITNESSES.iter().chain(&EXTRA_WITNESSES).all(|&a| strong_probable_prime(n, a))
}

const SIEVE_BASE_LIMIT: u64 = 10_000_000;

/// Primes in `[lo, hi]`, ascending.
pub fn primes_in(lo: &BigInt, hi: &BigInt) -> Vec<BigInt> {
    if lo > hi {
        return Vec::new();
    }
    match (lo.to_u64().or(if lo < &BigInt::zero() { Some(0) } else { None }), hi.to_u64()) {
        (Some(l), Some(h)) if h.sqrt() <= SIEVE_BASE_LIMIT && h - l <= 100_000_000 => {
            segmented_sieve(l, h).into_iter().map(BigInt::from).collect()
        }
        _ => {
            let mut out = Vec::new();
            let mut n = lo.clone().max(BigInt::from(2));
            while &n <= hi {
                if is_prime(&n) {
                    out.push(n.clone());
                }
                n += 1u32;
            }
            out
        }
    }
}

pub fn primes_in_u64(lo: u64, hi: u64) -> Vec<u64> {
    if lo > hi {
        return Vec::new();
    }
    if hi.sqrt() <= SIEVE_BASE_LIMIT && hi - lo <= 100_000_000 {
        segmented_sieve(lo, hi)
    } else {
        (lo..=hi).filter(|&n| is_prime_u64(n)).collect()
    }
}

fn small_primes(limit: u64) -> Vec<u64> {
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

fn segmented_sieve(lo: u64, hi: u64) -> Vec<u64> {
    let lo = lo.max(2);
    if lo > hi {
        return Vec::new();
    }
    let base = small_primes(hi.sqrt());
    let len = (hi - lo + 1) as usize;
    let mut composite = vec![false; len];
    for &p in &base {
        let start = (p * p).max(lo.div_ceil(p) * p);
        let mut m = start;
        while m <= hi {
            composite[(m - lo) as usize] = true;
            m += p;
        }
    }
    composite.iter().enumerate().filter(|(_, &c)| !c).map(|(i, _)| lo + i as u64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn trial_division(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn residue_examples() {
        assert_eq!(residue(&big(-3), &big(5)).unwrap().value(), &big(2));
        assert_eq!(residue(&big(316350), &big(25)).unwrap().value(), &big(0));
        assert_eq!(residue(&big(25), &big(25)).unwrap().value(), &big(0));
        assert!(matches!(residue(&big(3), &big(1)), Err(Error::BadModulus(_))));
        assert!(matches!(residue(&big(3), &big(-7)), Err(Error::BadModulus(_))));
    }

    #[test]
    fn inverse_examples() {
        let six = residue(&big(6), &big(25)).unwrap();
        assert_eq!(mod_inverse(&six).unwrap().value(), &big(21));
        let one = residue(&big(1), &big(97)).unwrap();
        assert_eq!(mod_inverse(&one).unwrap().value(), &big(1));
        let five = residue(&big(5), &big(25)).unwrap();
        assert!(matches!(mod_inverse(&five), Err(Error::NotInvertible { .. })));
    }

    #[test]
    fn ratio_reads_rational_constants() {
        // -5/6 * 5 modulo 25
        let r = Residue::ratio(&big(-25), &big(6), &big(25)).unwrap();
        assert!(r.is_zero());
        // -4/9 modulo 5 is 4
        assert_eq!(Residue::ratio(&big(-4), &big(9), &big(5)).unwrap().value(), &big(4));
    }

    #[test]
    #[should_panic(expected = "equal moduli")]
    fn mixed_moduli_panic() {
        let _ = &residue(&big(1), &big(5)).unwrap() + &residue(&big(1), &big(7)).unwrap();
    }

    #[test]
    fn primality_examples() {
        assert!(is_prime(&big(2)));
        assert!(!is_prime(&big(25)));
        assert!(is_prime(&big(997)));
        assert!(!is_prime(&big(0)));
        assert!(!is_prime(&big(1)));
        assert!(!is_prime(&big(-7)));
        // strong pseudoprime to bases 2..37 below 2^64
        assert!(!is_prime_u64(3_825_123_056_546_413_051));
        assert!(is_prime_u64(18_446_744_073_709_551_557));
        // Mersenne prime 2^89 - 1 and a composite neighbour, past u64
        let m89 = (BigInt::one() << 89usize) - 1;
        assert!(is_prime(&m89));
        assert!(!is_prime(&(&m89 + 2)));
    }

    #[test]
    fn primes_in_examples() {
        assert_eq!(primes_in(&big(4), &big(12)), vec![big(5), big(7), big(11)]);
        assert!(primes_in(&big(24), &big(28)).is_empty());
        assert_eq!(primes_in(&big(3), &big(3)), vec![big(3)]);
        assert!(primes_in(&big(10), &big(3)).is_empty());
        assert_eq!(primes_in(&big(-10), &big(5)), vec![big(2), big(3), big(5)]);
    }

    #[test]
    fn primes_in_agrees_with_is_prime() {
        let sieved = primes_in_u64(2, 10_000);
        let filtered: Vec<u64> = (2..=10_000).filter(|&n| is_prime(&BigInt::from(n))).collect();
        assert_eq!(sieved, filtered);
        let trial: Vec<u64> = (2..=10_000).filter(|&n| trial_division(n)).collect();
        assert_eq!(sieved, trial);
    }

    proptest! {
        #[test]
        fn inverse_times_value_is_one(a in -10_000i64..10_000, m in 2i64..5_000) {
            let r = residue(&big(a), &big(m)).unwrap();
            if let Ok(inv) = mod_inverse(&r) {
                prop_assert!((&r * &inv).value().is_one());
            } else {
                prop_assert!(!big(a).gcd(&big(m)).is_one());
            }
        }

        #[test]
        fn negation_cancels(a in any::<i64>(), m in 2i64..1_000_000) {
            let x = residue(&big(a), &big(m)).unwrap();
            let minus_x = residue(&-big(a), &big(m)).unwrap();
            prop_assert!((&x + &minus_x).is_zero());
            prop_assert_eq!(-&x, minus_x);
        }

        #[test]
        fn miller_rabin_matches_trial_division(n in 0u64..2_000_000) {
            prop_assert_eq!(is_prime_u64(n), trial_division(n));
        }
    }
}
