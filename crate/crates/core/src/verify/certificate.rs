//! Telescoping certificates.
//!
//! A certificate is data: two sequence bindings `a_k`, `b_k`, a summand
//! `c * prod_i p_i(k) * q(x) * a_k b_k`, and `F(k) = pre(k) * sum_t term_t(k)`
//! with each term `c_t * prod_i p_ti(k) * q_t(x) * a_{k+sa} b_{k+sb}`.
//! The check is `summand(k) = F(k+1) - F(k)` for `1 <= k <= n`, `F(1) = 0`,
//! and the hard-coded partial-sum closed forms for the three shipped ids.
//!
//! Values outside a binding's domain (`D_{-1}`, `s_0`) are never invented.
//! `F(1)` is evaluated twice with such values replaced by `0` and by `1`;
//! both must vanish. For `k >= 2` a reference to one is a failure.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::report::{expect_eq, sweep, Counterexample, Instance, VerificationReport};
use super::span;
use crate::error::{Error, Result};
use crate::families::little_schroder_poly_table;
use crate::poly::{IntPoly, Poly, Rational, Scalar};
use crate::sequences::{sign, Tables};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CertificateId {
    #[serde(rename = "cert-f2")]
    F2,
    #[serde(rename = "cert-g2")]
    G2,
    #[serde(rename = "cert-f4")]
    F4,
}

impl CertificateId {
    pub const ALL: [CertificateId; 3] = [CertificateId::F2, CertificateId::G2, CertificateId::F4];

    pub fn as_str(self) -> &'static str {
        match self {
            CertificateId::F2 => "cert-f2",
            CertificateId::G2 => "cert-g2",
            CertificateId::F4 => "cert-f4",
        }
    }

    fn shipped_json(self) -> &'static str {
        match self {
            CertificateId::F2 => include_str!("../../certificates/f2.json"),
            CertificateId::G2 => include_str!("../../certificates/g2.json"),
            CertificateId::F4 => include_str!("../../certificates/f4.json"),
        }
    }
}

impl fmt::Display for CertificateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CertificateId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CertificateId::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

/// Sequence bound to `a_k` or `b_k`. The alternating bindings carry the
/// sign `(-1)^(n-k)` of the outer summation bound `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Binding {
    /// `(-1)^(n-k) D_k`, `k >= 0`
    AltDelannoy,
    /// `D_{k-1}`, `k >= 1`
    ShiftedDelannoy,
    /// `(-1)^(n-k) s_k`, `k >= 1`
    AltLittleSchroder,
    /// `s_k(x)`, `k >= 1`
    SchroderPoly,
    /// `s_{k+1}(x)`, `k >= 0`
    SchroderPolyNext,
}

impl Binding {
    pub fn depends_on_n(self) -> bool {
        matches!(self, Binding::AltDelannoy | Binding::AltLittleSchroder)
    }

    fn min_index(self) -> i64 {
        match self {
            Binding::AltDelannoy | Binding::SchroderPolyNext => 0,
            _ => 1,
        }
    }
}

fn default_x_poly() -> Vec<i64> {
    vec![1]
}

/// `coeff * prod k_factors(k) * x_poly(x)`; each k-factor is an
/// ascending coefficient list in `k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Factor {
    pub coeff: String,
    pub k_factors: Vec<Vec<i64>>,
    #[serde(default = "default_x_poly")]
    pub x_poly: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: String,
    pub k_factors: Vec<Vec<i64>>,
    #[serde(default = "default_x_poly")]
    pub x_poly: Vec<i64>,
    pub a_shift: i64,
    pub b_shift: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateSpec {
    pub id: CertificateId,
    pub a: Binding,
    pub b: Binding,
    pub summand: Factor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prefactor: Option<Factor>,
    pub terms: Vec<Term>,
}

impl CertificateSpec {
    pub fn shipped(id: CertificateId) -> CertificateSpec {
        Self::from_json(id.shipped_json()).expect("shipped certificate specs are well formed")
    }

    pub fn from_json(text: &str) -> Result<CertificateSpec> {
        let spec: CertificateSpec = serde_json::from_str(text).map_err(|e| Error::CertificateSpec(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec serializes")
    }

    pub fn depends_on_n(&self) -> bool {
        self.a.depends_on_n() || self.b.depends_on_n()
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::CertificateSpec(msg));
        if self.terms.is_empty() {
            return bad("no certificate terms".into());
        }
        let factors = std::iter::once((&self.summand.coeff, &self.summand.k_factors))
            .chain(self.prefactor.iter().map(|p| (&p.coeff, &p.k_factors)))
            .chain(self.terms.iter().map(|t| (&t.coeff, &t.k_factors)));
        for (coeff, k_factors) in factors {
            parse_rational(coeff)?;
            if k_factors.iter().any(|f| f.is_empty()) {
                return bad("empty k-factor".into());
            }
        }
        for t in &self.terms {
            if !(-1..=1).contains(&t.a_shift) || !(-1..=1).contains(&t.b_shift) {
                return bad(format!("shifts must lie in -1..=1, got ({}, {})", t.a_shift, t.b_shift));
            }
        }
        Ok(())
    }

    /// Least common multiple of every denominator in `F` (prefactor folded
    /// in) and in the summand: the scale of the integer fast path.
    pub fn scale(&self) -> BigInt {
        let pre = self.prefactor.as_ref().map_or_else(Rational::one, |p| parse_rational(&p.coeff).unwrap());
        let mut l = parse_rational(&self.summand.coeff).unwrap().denom().clone();
        for t in &self.terms {
            let c = &pre * parse_rational(&t.coeff).unwrap();
            l = l.lcm(c.denom());
        }
        l
    }
}

fn parse_rational(s: &str) -> Result<Rational> {
    let r: Rational =
        s.trim().parse().map_err(|_| Error::CertificateSpec(format!("bad rational coefficient `{s}`")))?;
    Ok(r)
}

/// Arithmetic carrier: exact rationals, or integers after scaling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertPath {
    Rational,
    ScaledInteger,
}

trait Coeff: Scalar {
    fn from_big(v: &BigInt) -> Self;
    fn from_rational(r: &Rational) -> Self;
}

impl Coeff for BigInt {
    fn from_big(v: &BigInt) -> Self {
        v.clone()
    }
    fn from_rational(r: &Rational) -> Self {
        assert!(r.is_integer(), "scaled coefficient {r} is not an integer");
        r.to_integer()
    }
}

impl Coeff for Rational {
    fn from_big(v: &BigInt) -> Self {
        Rational::from_integer(v.clone())
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

fn lift<T: Coeff>(p: &IntPoly) -> Poly<T> {
    Poly::new(p.coeffs().iter().map(T::from_big).collect())
}

fn lift_i64s<T: Coeff>(c: &[i64]) -> Poly<T> {
    lift(&IntPoly::from_i64s(c))
}

struct CompiledTerm<T> {
    coeff: T,
    k_factors: Vec<Vec<i64>>,
    x_poly: Poly<T>,
    a_shift: i64,
    b_shift: i64,
}

impl<T: Coeff> CompiledTerm<T> {
    /// `coeff * prod k_factors(k) * x_poly` without the sequence values.
    fn weight(&self, k: i64) -> Poly<T> {
        let mut c = self.coeff.clone();
        for f in &self.k_factors {
            let v: BigInt = f.iter().rev().fold(BigInt::zero(), |acc, &a| acc * k + a);
            c = c.mul_ref(&T::from_big(&v));
        }
        self.x_poly.scale(&c)
    }
}

struct Compiled<T> {
    summand: CompiledTerm<T>,
    prefactor: Option<CompiledTerm<T>>,
    terms: Vec<CompiledTerm<T>>,
}

fn compile<T: Coeff>(spec: &CertificateSpec, path: CertPath) -> Compiled<T> {
    let r = |s: &str| parse_rational(s).expect("validated");
    let (scale, pre) = match path {
        CertPath::Rational => (Rational::one(), Rational::one()),
        CertPath::ScaledInteger => {
            (Rational::from_integer(spec.scale()), spec.prefactor.as_ref().map_or_else(Rational::one, |p| r(&p.coeff)))
        }
    };
    let term = |coeff: Rational, k_factors: &Vec<Vec<i64>>, x: &[i64], a_shift, b_shift| CompiledTerm {
        coeff: T::from_rational(&coeff),
        k_factors: k_factors.clone(),
        x_poly: lift_i64s(x),
        a_shift,
        b_shift,
    };
    let s = &spec.summand;
    let prefactor = spec.prefactor.as_ref().map(|p| {
        // The scaled path folds the prefactor constant into each term.
        let c = match path {
            CertPath::Rational => r(&p.coeff),
            CertPath::ScaledInteger => Rational::one(),
        };
        term(c, &p.k_factors, &p.x_poly, 0, 0)
    });
    Compiled {
        summand: term(r(&s.coeff) * &scale, &s.k_factors, &s.x_poly, 0, 0),
        prefactor,
        terms: spec
            .terms
            .iter()
            .map(|t| term(r(&t.coeff) * &pre * &scale, &t.k_factors, &t.x_poly, t.a_shift, t.b_shift))
            .collect(),
    }
}

/// Read-only sequence data for every binding up to a given bound.
pub struct Sources {
    tables: Tables,
    polys: Vec<IntPoly>,
}

impl Sources {
    /// Enough data for outer bounds `n <= n_max`.
    pub fn new(n_max: u64, needs_polys: bool) -> Result<Sources> {
        let polys = if needs_polys { little_schroder_poly_table(n_max + 3)? } else { Vec::new() };
        Ok(Sources { tables: Tables::new(n_max + 3)?, polys })
    }

    /// Value of `binding` at index `i` for outer bound `n`; `None` outside
    /// its domain.
    fn value(&self, binding: Binding, i: i64, n: u64) -> Option<IntPoly> {
        if i < binding.min_index() {
            return None;
        }
        let u = i as u64;
        let alt = || sign(n as i64 - i);
        Some(match binding {
            Binding::AltDelannoy => IntPoly::constant(alt() * self.tables.d(u)),
            Binding::ShiftedDelannoy => IntPoly::constant(self.tables.d(u - 1).clone()),
            Binding::AltLittleSchroder => IntPoly::constant(alt() * self.tables.s(u)),
            Binding::SchroderPoly => self.polys[u as usize].clone(),
            Binding::SchroderPolyNext => self.polys[u as usize + 1].clone(),
        })
    }
}

/// An out-of-domain reference at `k`.
struct Undefined {
    side: char,
    index: i64,
}

struct Evaluator<'a, T> {
    spec: &'a CertificateSpec,
    compiled: Compiled<T>,
    sources: &'a Sources,
}

impl<'a, T: Coeff> Evaluator<'a, T> {
    fn new(spec: &'a CertificateSpec, path: CertPath, sources: &'a Sources) -> Self {
        Evaluator { spec, compiled: compile(spec, path), sources }
    }

    fn lookup(&self, side: char, i: i64, n: u64, probe: Option<i64>) -> std::result::Result<Poly<T>, Undefined> {
        let binding = if side == 'a' { self.spec.a } else { self.spec.b };
        match (self.sources.value(binding, i, n), probe) {
            (Some(v), _) => Ok(lift(&v)),
            (None, Some(p)) => Ok(lift_i64s(&[p])),
            (None, None) => Err(Undefined { side, index: i }),
        }
    }

    fn summand(&self, k: i64, n: u64) -> std::result::Result<Poly<T>, Undefined> {
        let a = self.lookup('a', k, n, None)?;
        let b = self.lookup('b', k, n, None)?;
        Ok(&(&self.compiled.summand.weight(k) * &a) * &b)
    }

    fn f(&self, k: i64, n: u64, probe: Option<i64>) -> std::result::Result<Poly<T>, Undefined> {
        let mut total = Poly::zero();
        for t in &self.compiled.terms {
            let a = self.lookup('a', k + t.a_shift, n, probe)?;
            let b = self.lookup('b', k + t.b_shift, n, probe)?;
            total = total + &(&(&t.weight(k) * &a) * &b);
        }
        Ok(match &self.compiled.prefactor {
            Some(p) => &p.weight(k) * &total,
            None => total,
        })
    }

    /// Telescoping for `k` in `ks`, and `F(1) = 0` first when `1` is among them.
    fn telescoping(&self, n: u64, ks: RangeInclusive<u64>) -> Option<Counterexample> {
        let undefined = |k: u64, u: Undefined| {
            Counterexample::new(
                &[("k", k as i64), ("n", n as i64)],
                "certificate references only defined sequence values",
                format!("{}_{}", u.side, u.index),
                "defined",
            )
        };
        let start = *ks.start();
        let mut prev = if start == 1 {
            let mut at_one = None;
            for probe in [0, 1] {
                let f1 = match self.f(1, n, Some(probe)) {
                    Ok(v) => v,
                    Err(u) => return Some(undefined(1, u)),
                };
                if !f1.is_zero() {
                    return Some(Counterexample::new(
                        &[("n", n as i64), ("probe", probe)],
                        "F(1) = 0 for any value of the out-of-domain boundary terms",
                        f1,
                        0,
                    ));
                }
                at_one.get_or_insert(f1);
            }
            at_one.expect("two probes ran")
        } else {
            match self.f(start as i64, n, None) {
                Ok(v) => v,
                Err(u) => return Some(undefined(start, u)),
            }
        };
        for k in ks {
            let next = match self.f(k as i64 + 1, n, None) {
                Ok(v) => v,
                Err(u) => return Some(undefined(k + 1, u)),
            };
            let summand = match self.summand(k as i64, n) {
                Ok(v) => v,
                Err(u) => return Some(undefined(k, u)),
            };
            let delta = &next - &prev;
            if summand != delta {
                return Some(Counterexample::new(
                    &[("k", k as i64), ("n", n as i64)],
                    "summand(k) = F(k+1) - F(k)",
                    summand,
                    delta,
                ));
            }
            prev = next;
        }
        None
    }
}

/// Partial-sum closed forms and boundary facts for the shipped ids,
/// computed from the sequence tables independently of any spec data.
pub fn closed_form_instance(id: CertificateId, sources: &Sources, n: u64) -> Option<Counterexample> {
    let p = [("n", n as i64)];
    let t = &sources.tables;
    let big = |v: u64| BigInt::from(v);
    match id {
        CertificateId::F2 => {
            let a = |k: u64| sign(n as i64 - k as i64) * t.d(k);
            let b = |k: u64| t.d(k - 1).clone();
            // 3 a_0 + a_1 vanishes, so F(1) does not depend on b_0
            let boundary: BigInt = a(0) * 3 + a(1);
            if !boundary.is_zero() {
                return Some(Counterexample::new(&p, "3a_0 + a_1 = 0", boundary, 0));
            }
            let sum: BigInt = (1..=n).map(|k| big(k * k) * a(k) * b(k)).sum();
            let form = big(n) * a(n) * b(n) - big(6 * n * (n + 1)) * a(n + 1) * b(n)
                + big(3 * (2 * n * n + 2 * n + 1)) * a(n) * b(n + 1)
                + big(n + 1) * a(n + 1) * b(n + 1);
            if let Some(cx) = expect_eq(&p, "72 sum k^2 a_k b_k = 72 F(n+1) in a_n, b_n", &(&sum * 72), &form) {
                return Some(cx);
            }
            let (dn, dn1) = (t.d(n), t.d(n + 1));
            let d_only =
                big(n + 1) * (big(3 * (n + 1)) * dn * dn + big(8 + 18 * n) * dn1 * dn - big(3 * (n + 1)) * dn1 * dn1);
            let (q, r) = d_only.div_rem(&big(36));
            if !r.is_zero() {
                return Some(Counterexample::new(&p, "36 divides the D-only closed form", r, 0));
            }
            expect_eq(&p, "sum (-1)^(n-k) k^2 D_k D_{k-1} = D-only closed form / 36", &sum, &q)
        }
        CertificateId::G2 => {
            let a = |k: u64| t.d(k - 1).clone();
            let b = |k: u64| sign(n as i64 - k as i64) * t.s(k);
            let sum: BigInt = (1..=n).map(|k| big(4 * k * k + 2 * k - 1) * a(k) * b(k)).sum();
            let form = big(n) * (big(n + 1) * a(n + 1) * b(n) - big(n + 2) * a(n) * b(n + 1));
            expect_eq(&p, "3 sum (4k^2+2k-1) a_k b_k = n((n+1)a_{n+1}b_n - (n+2)a_n b_{n+1})", &(sum * 3), &form)
        }
        CertificateId::F4 => {
            let s = |i: u64| &sources.polys[i as usize];
            let u = IntPoly::from_i64s(&[1, 2]);
            let c = |v: i64| IntPoly::constant(BigInt::from(v));
            let ni = n as i64;
            let mut sum = IntPoly::zero();
            for k in 1..=n {
                sum = sum + (s(k) * s(k + 1)).scale(&big(k * (k + 1) * (k + 2)));
            }
            let lhs = (&sum * &IntPoly::from_i64s(&[0, 1, 1])).scale(&big(8));
            let (sn, sn1, sn2) = (s(n), s(n + 1), s(n + 2));
            let e1 = sn1 * &(&(sn2 * &c(ni * ni + 7 * ni + 12)) - &(&(&u * sn1) * &c(ni * ni + 9 * ni + 12)))
                + (sn * &(&(sn1 * &c(5 + ni)) - &(&(&u * sn2) * &c(ni + 3)))).scale(&big(n));
            let e2 = (sn2 * &(sn1 - &(&u * sn))).scale(&big(n + 3)) + (sn1 * &(sn - &(&u * sn1))).scale(&big(n + 1));
            let e3 = (&u * &(sn1 * sn1)).scale(&big(n + 2)) + (sn * sn1)
                - (&(&u * &u) * &(sn * sn1)).scale(&big(2 * n + 3))
                + (&u * &(sn * sn)).scale(&big(n));
            let forms = [
                ("8 sum (x^2+x)k(k+1)(k+2)s_k s_{k+1} = -(n+1)(n+2) E1", e1.scale(&-big((n + 1) * (n + 2)))),
                ("8 sum (x^2+x)k(k+1)(k+2)s_k s_{k+1} = -n(n+1)(n+2) E2", e2.scale(&-big(n * (n + 1) * (n + 2)))),
                ("8 sum (x^2+x)k(k+1)(k+2)s_k s_{k+1} = -n(n+1)(n+2) E3", e3.scale(&-big(n * (n + 1) * (n + 2)))),
            ];
            forms.iter().find_map(|(relation, rhs)| expect_eq(&p, relation, &lhs, rhs))
        }
    }
}

fn instance<T: Coeff>(ev: &Evaluator<'_, T>, n: u64, ks: RangeInclusive<u64>) -> Instance {
    if let Some(cx) = ev.telescoping(n, ks) {
        return Ok(Some(cx));
    }
    Ok(closed_form_instance(ev.spec.id, ev.sources, n))
}

fn run<T: Coeff + Send + Sync>(
    spec: &CertificateSpec,
    path: CertPath,
    range: RangeInclusive<u64>,
    single: bool,
) -> Result<VerificationReport> {
    let lo = (*range.start()).max(1);
    let hi = *range.end();
    let needs_polys = [spec.a, spec.b].iter().any(|b| matches!(b, Binding::SchroderPoly | Binding::SchroderPolyNext));
    let sources = Sources::new(hi, needs_polys)?;
    let ev = Evaluator::<T>::new(spec, path, &sources);
    let label = if single { format!("n={hi}") } else { span("n", lo, hi) };
    let params: Vec<u64> = (lo..=hi).collect();
    // Bindings that ignore n give the same identity at every n, so each
    // sweep instance only adds its new step k = n.
    let full = spec.depends_on_n();
    sweep(spec.id.as_str(), label, &params, |&n| {
        let ks = if full || n == lo { 1..=n } else { n..=n };
        instance(&ev, n, ks)
    })
}

/// Every `1 <= k <= n` at a single outer bound `n`.
pub fn check_certificate(spec: &CertificateSpec, n: u64) -> Result<VerificationReport> {
    check_certificate_with(spec, n, CertPath::Rational)
}

pub fn check_certificate_with(spec: &CertificateSpec, n: u64, path: CertPath) -> Result<VerificationReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be >= 1".into()));
    }
    match path {
        CertPath::Rational => run::<Rational>(spec, path, n..=n, true),
        CertPath::ScaledInteger => run::<BigInt>(spec, path, n..=n, true),
    }
}

/// Every outer bound `n` in `range`, ascending.
pub fn check_certificate_sweep(spec: &CertificateSpec, range: RangeInclusive<u64>) -> Result<VerificationReport> {
    check_certificate_sweep_with(spec, range, CertPath::Rational)
}

pub fn check_certificate_sweep_with(
    spec: &CertificateSpec,
    range: RangeInclusive<u64>,
    path: CertPath,
) -> Result<VerificationReport> {
    match path {
        CertPath::Rational => run::<Rational>(spec, path, range, false),
        CertPath::ScaledInteger => run::<BigInt>(spec, path, range, false),
    }
}
