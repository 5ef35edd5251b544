//! Exact scalars and polynomials.
//!
//! Integers are `BigInt`, rationals are canonical `BigRational`. Polynomials
//! are dense with ascending coefficients and no trailing zeros; Laurent
//! polynomials are sparse maps from exponent to coefficient.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

pub fn int(n: i64) -> Integer {
    BigInt::from(n)
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: &Integer) -> Rational {
    Rational::from_integer(n.clone())
}

/// Render `p/q`, or `p` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parse_int = |t: &str| {
        BigInt::from_str(t.trim())
            .map_err(|_| Error::InvalidArgument(format!("not a rational: {s:?}")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return invalid(format!("zero denominator in {s:?}"));
            }
            Ok(Rational::new(parse_int(p)?, q))
        }
        None => Ok(Rational::from_integer(parse_int(s)?)),
    }
}

/// Integer part of a rational known to be integral.
pub fn to_integer(r: &Rational) -> Option<Integer> {
    r.is_integer().then(|| r.to_integer())
}

pub fn factorial(n: u64) -> Integer {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn ipow(base: i64, e: u32) -> Integer {
    num_traits::pow(BigInt::from(base), e as usize)
}

pub fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Generalized binomial coefficient.
///
/// For `k >= 0` this is `n(n-1)...(n-k+1)/k!` for any integer `n`. For `k < 0`
/// the value is zero, except `C(-1, -1) = 1`.
pub fn binomial(n: i64, k: i64) -> Integer {
    if k < 0 {
        return if n == -1 && k == -1 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if n >= 0 && k > n {
        return BigInt::zero();
    }
    let k = if n >= 0 { k.min(n - k) } else { k };
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Falling factorial `r(r-1)...(r-k+1)`.
pub fn falling_factorial(r: i64, k: i64) -> Result<Integer> {
    if k < 0 {
        return invalid(format!("falling factorial with negative length {k}"));
    }
    Ok((0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(r - i)))
}

/// Dense univariate polynomial over the rationals.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<String>", try_from = "Vec<String>")]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn from_integers(coeffs: &[Integer]) -> Self {
        Self::new(coeffs.iter().map(rat_int).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Rational, deg: usize) -> Self {
        let mut v = vec![Rational::zero(); deg + 1];
        v[deg] = c;
        Self::new(v)
    }

    /// The linear polynomial `x + a`.
    pub fn shifted_x(a: i64) -> Self {
        Self::from_ints(&[a, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&rat(x))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Composition `self(s(x))`.
    pub fn compose(&self, s: &UniPoly) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * s) + &Self::constant(c.clone()))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    /// Quotient and remainder of long division.
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = match d.degree() {
            Some(k) => k,
            None => return invalid("division by the zero polynomial"),
        };
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![Rational::zero(); rem.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &rem[i + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            q[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(q), Self::new(rem)))
    }

    /// Exact quotient, failing with `NonDivisible` on a nonzero remainder.
    pub fn exact_div(&self, d: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonDivisible)
        }
    }

    /// `x^hint * p(1/x)`; requires `hint >= deg p`.
    pub fn reversed(&self, hint: usize) -> Result<UniPoly> {
        if let Some(d) = self.degree() {
            if d > hint {
                return invalid(format!("reversal hint {hint} below degree {d}"));
            }
        }
        let mut v = vec![Rational::zero(); hint + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[hint - i] = c.clone();
        }
        Ok(Self::new(v))
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn integer_coeffs(&self) -> Option<Vec<Integer>> {
        self.coeffs.iter().map(to_integer).collect()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{}", format_rational(&a))?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{}", if show_coeff { "*" } else { "" }, i)?,
            }
        }
        Ok(())
    }
}

impl From<UniPoly> for Vec<String> {
    fn from(p: UniPoly) -> Self {
        p.coeffs.iter().map(format_rational).collect()
    }
}

impl TryFrom<Vec<String>> for UniPoly {
    type Error = Error;
    fn try_from(v: Vec<String>) -> Result<Self> {
        Ok(UniPoly::new(
            v.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?,
        ))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::new(v)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, o: UniPoly) -> UniPoly { (&self).$m(&o) }
        }
        impl $tr<&UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $m(self, o: &UniPoly) -> UniPoly { (&self).$m(o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

/// `C(x + a, k)` as a polynomial in `x`.
pub fn binomial_poly(a: i64, k: u32) -> UniPoly {
    let mut p = UniPoly::one();
    for i in 0..k as i64 {
        p = &p * &UniPoly::shifted_x(a - i);
    }
    p.scale(&Rational::new(BigInt::one(), factorial(k as u64)))
}

/// Falling factorial `x(x-1)...(x-k+1)` as a polynomial.
pub fn falling_poly(k: u32) -> UniPoly {
    (0..k as i64).fold(UniPoly::one(), |acc, i| &acc * &UniPoly::shifted_x(-i))
}

/// Rising factorial `x(x+1)...(x+k-1)` as a polynomial.
pub fn rising_poly(k: u32) -> UniPoly {
    (0..k as i64).fold(UniPoly::one(), |acc, i| &acc * &UniPoly::shifted_x(i))
}

/// Sparse Laurent polynomial over the rationals.
#[derive(Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(
    into = "BTreeMap<String, String>",
    try_from = "BTreeMap<String, String>"
)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: Rational) {
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> &BTreeMap<i64, Rational> {
        &self.terms
    }

    pub fn coeff(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn exponents(&self) -> impl Iterator<Item = i64> + '_ {
        self.terms.keys().copied()
    }

    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        if x.is_zero() && self.terms.keys().any(|&e| e < 0) {
            return Err(Error::Pole("negative power at x = 0".into()));
        }
        let mut acc = Rational::zero();
        for (&e, c) in &self.terms {
            let p = if e >= 0 {
                num_traits::pow(x.clone(), e as usize)
            } else {
                num_traits::pow(x.recip(), (-e) as usize)
            };
            acc += c * p;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, a)| (e, a * c)))
    }
}

impl From<&UniPoly> for LaurentPoly {
    fn from(p: &UniPoly) -> Self {
        LaurentPoly::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64, c.clone())),
        )
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut r = self.clone();
        for (&e, c) in &o.terms {
            r.add_term(e, c.clone());
        }
        r
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| format!("{}*x^{}", format_rational(c), e))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl From<LaurentPoly> for BTreeMap<String, String> {
    fn from(p: LaurentPoly) -> Self {
        p.terms
            .iter()
            .map(|(e, c)| (e.to_string(), format_rational(c)))
            .collect()
    }
}

impl TryFrom<BTreeMap<String, String>> for LaurentPoly {
    type Error = Error;
    fn try_from(m: BTreeMap<String, String>) -> Result<Self> {
        let mut p = LaurentPoly::zero();
        for (e, c) in m {
            let e: i64 = e
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad exponent {e:?}")))?;
            p.add_term(e, parse_rational(&c)?);
        }
        Ok(p)
    }
}

/// Named integer triangles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TriangleKind {
    Stirling1,
    Stirling2,
    S1Shifted,
    LegendreStirling1,
    LegendreStirling2,
    GenStirling1,
    CentralFactorial2,
}

impl TriangleKind {
    pub const ALL: [TriangleKind; 7] = [
        TriangleKind::Stirling1,
        TriangleKind::Stirling2,
        TriangleKind::S1Shifted,
        TriangleKind::LegendreStirling1,
        TriangleKind::LegendreStirling2,
        TriangleKind::GenStirling1,
        TriangleKind::CentralFactorial2,
    ];
}

/// Lower-triangular integer array; row `k` has `k + 1` entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Triangle {
    pub kind: TriangleKind,
    pub rows: Vec<Vec<Integer>>,
}

impl Triangle {
    /// Entry `(k, r)`, zero outside the triangle.
    pub fn get(&self, k: usize, r: usize) -> Integer {
        self.rows
            .get(k)
            .and_then(|row| row.get(r))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }
}

/// Convert a small integer-valued rational to `i64`.
pub fn rational_to_i64(r: &Rational) -> Option<i64> {
    to_integer(r).and_then(|i| i.to_i64())
}

/// Exact integer division, `None` when `d` does not divide `n`.
pub fn divide_exact(n: &Integer, d: &Integer) -> Option<Integer> {
    if d.is_zero() {
        return None;
    }
    let (q, r) = n.div_rem(d);
    r.is_zero().then_some(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), int(6));
        assert_eq!(binomial(-1, -1), int(1));
        assert_eq!(binomial(-3, 2), int(6));
        assert_eq!(binomial(-2, 3), int(-4));
        assert_eq!(binomial(3, 5), int(0));
        assert_eq!(binomial(0, -1), int(0));
        assert_eq!(binomial(-1, -2), int(0));
        assert_eq!(binomial(10, 7), int(120));
    }

    #[test]
    fn pascal_rule() {
        for n in -10..=10 {
            for k in 0..=10 {
                if n == 0 && k == 0 {
                    // C(-1, -1) = 1 breaks the rule only here
                    assert_eq!(binomial(-1, -1) + binomial(-1, 0), int(2));
                    continue;
                }
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn upper_negation_symmetry() {
        for n in 0..8i64 {
            for m in 0..8i64 {
                let l = int(sign(m)) * binomial(-n - 1, m);
                let r = int(sign(n)) * binomial(-m - 1, n);
                assert_eq!(l, r);
            }
        }
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(5, 3).unwrap(), int(60));
        assert_eq!(falling_factorial(3, 5).unwrap(), int(0));
        assert_eq!(falling_factorial(7, 0).unwrap(), int(1));
        assert!(falling_factorial(3, -1).is_err());
    }

    #[test]
    fn exact_division_example() {
        let num = UniPoly::new(vec![rat(0), ratio(1, 6), ratio(1, 2), ratio(1, 3)]);
        let den = UniPoly::new(vec![rat(0), ratio(1, 2), ratio(1, 2)]);
        let q = num.exact_div(&den).unwrap();
        assert_eq!(q, UniPoly::new(vec![ratio(1, 3), ratio(2, 3)]));
        let bad = UniPoly::from_ints(&[1, 0, 1]);
        assert_eq!(bad.exact_div(&UniPoly::x()), Err(Error::NonDivisible));
    }

    #[test]
    fn compose_and_reverse() {
        let p = UniPoly::from_ints(&[1, 0, 1]);
        let s = UniPoly::shifted_x(1);
        assert_eq!(p.compose(&s), UniPoly::from_ints(&[2, 2, 1]));
        let q = UniPoly::from_ints(&[0, 1, 2]);
        assert_eq!(q.reversed(2).unwrap(), UniPoly::from_ints(&[2, 1]));
        assert_eq!(q.reversed(2).unwrap().reversed(2).unwrap(), q);
        assert!(q.reversed(1).is_err());
    }

    #[test]
    fn rational_text() {
        assert_eq!(format_rational(&ratio(6, 4)), "3/2");
        assert_eq!(format_rational(&ratio(-4, 2)), "-2");
        assert_eq!(parse_rational("-3/6").unwrap(), ratio(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = UniPoly::new(vec![ratio(1, 2), rat(0), rat(-3)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"["1/2","0","-3"]"#);
        assert_eq!(serde_json::from_str::<UniPoly>(&s).unwrap(), p);
        let l = LaurentPoly::from_terms([(-1, rat(6)), (3, ratio(1, 2))]);
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), l);
        assert_eq!(serde_json::to_string(&UniPoly::zero()).unwrap(), "[]");
    }

    #[test]
    fn laurent_eval() {
        let l = LaurentPoly::from_terms([(-1, rat(6)), (1, rat(1))]);
        assert_eq!(l.eval(&rat(3)).unwrap(), rat(5));
        assert!(l.eval(&rat(0)).is_err());
    }

    #[test]
    fn binomial_poly_matches_scalar() {
        for a in -3..4 {
            for k in 0..6u32 {
                let p = binomial_poly(a, k);
                for x in -5..6 {
                    assert_eq!(p.eval_int(x), rat_int(&binomial(x + a, k as i64)));
                }
            }
        }
    }

    fn small_poly() -> impl Strategy<Value = UniPoly> {
        proptest::collection::vec((-20i64..20, 1i64..5), 0..6).prop_map(|v| {
            UniPoly::new(v.into_iter().map(|(n, d)| ratio(n, d)).collect())
        })
    }

    proptest! {
        #[test]
        fn prop_div_rem_reconstructs(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree().is_none_or(|d| d < b.degree().unwrap()));
        }

        #[test]
        fn prop_product_divides(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        }

        #[test]
        fn prop_compose_evaluates(a in small_poly(), b in small_poly(), x in -6i64..6) {
            let lhs = a.compose(&b).eval_int(x);
            let rhs = a.eval(&b.eval_int(x));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn prop_no_trailing_zero(a in small_poly(), b in small_poly()) {
            let s = &a - &b;
            prop_assert!(s.coeffs().last().is_none_or(|c| !c.is_zero()));
        }
    }
}
