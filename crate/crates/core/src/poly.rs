//! Dense univariate polynomials over `Z` and `Q`.
//!
//! Coefficients are stored in ascending degree order with no trailing zero;
//! the zero polynomial is the empty vector. The text form is the ascending
//! coefficient list joined by commas (`"1,5,5"` is `1 + 5x + 5x^2`), with
//! `"0"` for the zero polynomial.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Coefficient ring. Reference-based arithmetic keeps big-number clones out
/// of the inner loops.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One {
    fn add_ref(&mut self, rhs: &Self);
    fn sub_ref(&mut self, rhs: &Self);
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

macro_rules! impl_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn add_ref(&mut self, rhs: &Self) {
                *self += rhs;
            }
            fn sub_ref(&mut self, rhs: &Self) {
                *self -= rhs;
            }
            fn mul_ref(&self, rhs: &Self) -> Self {
                self * rhs
            }
            fn neg_ref(&self) -> Self {
                -self
            }
        }
    };
}

impl_scalar!(BigInt);
impl_scalar!(BigRational);

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type IntPoly = Poly<BigInt>;
pub type RatPoly = Poly<BigRational>;

impl<T: Scalar> Poly<T> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, degree: usize) -> T {
        self.coeffs.get(degree).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(at);
            acc.add_ref(c);
        }
        acc
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), T::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            a.add_ref(b);
        }
        self.trim();
    }

    fn sub_assign_ref(&mut self, rhs: &Self) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), T::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            a.sub_ref(b);
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl IntPoly {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn to_rational(&self) -> RatPoly {
        Poly { coeffs: self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect() }
    }

    /// Coefficient-wise division by an integer; fails unless every
    /// coefficient is divisible.
    pub fn div_scalar_exact(&self, d: &BigInt) -> Result<IntPoly> {
        if d.is_zero() {
            return Err(Error::InvalidArgument("division by zero".into()));
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (degree, c) in self.coeffs.iter().enumerate() {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(Error::NotIntegral {
                    degree,
                    coefficient: BigRational::new(c.clone(), d.clone()).to_string(),
                });
            }
            out.push(q);
        }
        Ok(Poly::new(out))
    }

    /// `num / den` in `Z[x]`.
    ///
    /// Long division runs over `Q`; a nonzero remainder is `NotDivisible`,
    /// and an exact quotient with a fractional coefficient is `NotIntegral`.
    pub fn exact_div(&self, den: &IntPoly) -> Result<IntPoly> {
        let (q, r) = self.to_rational().div_rem(&den.to_rational())?;
        if !r.is_zero() {
            return Err(Error::NotDivisible { remainder: r.to_string() });
        }
        q.to_integer()
    }
}

impl RatPoly {
    /// Euclidean division: `self = q * den + r` with `deg r < deg den`.
    pub fn div_rem(&self, den: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        let Some(den_deg) = den.degree() else {
            return Err(Error::InvalidArgument("polynomial division by zero".into()));
        };
        let lead = den.leading().expect("nonzero divisor").clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= den_deg {
            return Ok((RatPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - den_deg];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + den_deg];
            if top.is_zero() {
                continue;
            }
            let factor = top / &lead;
            for (i, d) in den.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[shift + i] -= &factor * d;
                }
            }
            quot[shift] = factor;
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Succeeds iff every coefficient is an integer.
    pub fn to_integer(&self) -> Result<IntPoly> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (degree, c) in self.coeffs.iter().enumerate() {
            if !c.is_integer() {
                return Err(Error::NotIntegral { degree, coefficient: c.to_string() });
            }
            out.push(c.to_integer());
        }
        Ok(Poly::new(out))
    }
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Poly::new(out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly { coeffs: self.coeffs.iter().map(|c| c.neg_ref()).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
        impl<T: Scalar> $tr<&Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: &Poly<T>) -> Poly<T> {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Scalar> std::iter::Sum for Poly<T> {
    fn sum<I: Iterator<Item = Poly<T>>>(iter: I) -> Self {
        let mut acc = Poly::zero();
        for p in iter {
            acc.add_assign_ref(&p);
        }
        acc
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{self}]")
    }
}

impl<T: Scalar + FromStr> FromStr for Poly<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|c| c.trim().parse::<T>().map_err(|_| Error::InvalidArgument(format!("bad coefficient `{c}`"))))
            .collect::<Result<Vec<T>>>()?;
        Ok(Poly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn arithmetic_examples() {
        let one_2x = p(&[1, 2]);
        assert_eq!(&one_2x * &one_2x, p(&[1, 4, 4]));
        assert_eq!(&p(&[0, 1, 1]) + &IntPoly::zero(), p(&[0, 1, 1]));
        assert_eq!(one_2x.pow(3), p(&[1, 6, 12, 8]));
        assert_eq!(one_2x.pow(0), IntPoly::one());
        assert_eq!(one_2x.scale(&BigInt::from(3)), p(&[3, 6]));
        assert_eq!(&one_2x - &one_2x, IntPoly::zero());
        assert_eq!(one_2x.scale(&BigInt::zero()), IntPoly::zero());
    }

    #[test]
    fn normalization_drops_trailing_zeros() {
        let q = p(&[1, 2, 0, 0]);
        assert_eq!(q.coeffs().len(), 2);
        assert_eq!(q.degree(), Some(1));
        assert_eq!(p(&[0, 0]).degree(), None);
        assert_eq!(&p(&[1, 1]) - &p(&[0, 1]), p(&[1]));
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(p(&[0, 4, 4]).exact_div(&p(&[0, 1, 1])).unwrap(), p(&[4]));
        let num = p(&[1, 2]).pow(3).scale(&BigInt::from(30));
        assert_eq!(num.exact_div(&p(&[1, 2]).pow(3)).unwrap(), p(&[30]));
        match p(&[1, 0, 1]).exact_div(&p(&[1, 1])) {
            Err(Error::NotDivisible { remainder }) => assert_eq!(remainder, "2"),
            other => panic!("expected NotDivisible, got {other:?}"),
        }
    }

    #[test]
    fn exact_div_distinguishes_non_integral_quotient() {
        // (x + 1) / (2x + 2) = 1/2
        match p(&[1, 1]).exact_div(&p(&[2, 2])) {
            Err(Error::NotIntegral { degree, coefficient }) => {
                assert_eq!(degree, 0);
                assert_eq!(coefficient, "1/2");
            }
            other => panic!("expected NotIntegral, got {other:?}"),
        }
    }

    #[test]
    fn exact_div_by_zero_is_an_error() {
        assert!(p(&[1]).exact_div(&IntPoly::zero()).is_err());
    }

    #[test]
    fn div_scalar_exact_reports_first_bad_coefficient() {
        assert_eq!(p(&[6, 12]).div_scalar_exact(&BigInt::from(6)).unwrap(), p(&[1, 2]));
        match p(&[6, 13]).div_scalar_exact(&BigInt::from(6)) {
            Err(Error::NotIntegral { degree: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn serialization() {
        assert_eq!(p(&[1, 5, 5]).to_string(), "1,5,5");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!("1,5,5".parse::<IntPoly>().unwrap(), p(&[1, 5, 5]));
        assert_eq!("0".parse::<IntPoly>().unwrap(), IntPoly::zero());
        assert!("1,x".parse::<IntPoly>().is_err());
        let r: RatPoly = "1/2,-3/4".parse().unwrap();
        assert_eq!(r.to_string(), "1/2,-3/4");
    }

    #[test]
    fn eval_uses_horner() {
        assert_eq!(p(&[1, 5, 5]).eval(&BigInt::from(1)), BigInt::from(11));
        assert_eq!(p(&[1, 5, 5]).eval(&BigInt::from(-2)), BigInt::from(11));
        assert_eq!(IntPoly::zero().eval(&BigInt::from(7)), BigInt::zero());
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        prop::collection::vec(-50i64..50, 0..8).prop_map(|c| IntPoly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn exact_div_round_trip(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
        }

        #[test]
        fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            prop_assert_eq!(a.to_string().parse::<IntPoly>().unwrap(), a);
        }

        #[test]
        fn eval_is_a_ring_homomorphism(a in small_poly(), b in small_poly(), x in -5i64..5) {
            let x = BigInt::from(x);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
        }
    }
}
