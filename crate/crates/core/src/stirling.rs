//! Stirling-type triangles and the Stirling/Bernoulli relations.
//!
//! Each triangle is generated from its triangular recurrence; the suites
//! rebuild the rows along independent routes (products, explicit sums,
//! convolutions, matrix inverses).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Error, Result};
use crate::exact::{
    binomial, binomial_poly, factorial, falling_poly, int, ipow, rat, rat_int, ratio, sign, Integer, Rational,
    Triangle, TriangleKind, UniPoly,
};
use crate::powersum::{bernoulli, bernoulli_numbers, faulhaber, Parity};
use crate::report::IdentityReport;

impl fmt::Display for TriangleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TriangleKind::Stirling1 => "Stirling1",
            TriangleKind::Stirling2 => "Stirling2",
            TriangleKind::S1Shifted => "S1Shifted",
            TriangleKind::LegendreStirling1 => "LegendreStirling1",
            TriangleKind::LegendreStirling2 => "LegendreStirling2",
            TriangleKind::GenStirling1 => "GenStirling1",
            TriangleKind::CentralFactorial2 => "CentralFactorial2",
        };
        f.write_str(s)
    }
}

impl FromStr for TriangleKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace(['-', '_'], "");
        let alias = match key.as_str() {
            "s" | "stirlingfirst" => Some(TriangleKind::Stirling1),
            "stirlingsecond" => Some(TriangleKind::Stirling2),
            "s1" => Some(TriangleKind::S1Shifted),
            "ps" => Some(TriangleKind::LegendreStirling1),
            "ps2" => Some(TriangleKind::LegendreStirling2),
            "genstirling" | "scripts" => Some(TriangleKind::GenStirling1),
            "centralfactorial" | "scriptt" | "t" => Some(TriangleKind::CentralFactorial2),
            _ => None,
        };
        alias
            .or_else(|| {
                TriangleKind::ALL
                    .into_iter()
                    .find(|k| k.to_string().to_ascii_lowercase() == key)
            })
            .ok_or_else(|| Error::InvalidArgument(format!("unknown triangle {s:?}")))
    }
}

fn build(k_max: usize, first: Vec<Vec<Integer>>, step: impl Fn(&[Integer], usize, usize) -> Integer) -> Vec<Vec<Integer>> {
    let mut rows = first;
    rows.truncate(k_max + 1);
    while rows.len() <= k_max {
        let k = rows.len();
        let prev = &rows[k - 1];
        let row: Vec<Integer> = (0..=k).map(|r| step(prev, k, r)).collect();
        rows.push(row);
    }
    rows
}

fn at(row: &[Integer], r: usize) -> Integer {
    row.get(r).cloned().unwrap_or_else(BigInt::zero)
}

fn below(row: &[Integer], r: usize) -> Integer {
    if r == 0 {
        BigInt::zero()
    } else {
        at(row, r - 1)
    }
}

/// Rows `0..=k_max` of a triangle.
pub fn triangle(kind: TriangleKind, k_max: usize) -> Triangle {
    let one = || vec![vec![BigInt::one()]];
    let rows = match kind {
        TriangleKind::Stirling1 => build(k_max, one(), |p, k, r| below(p, r) - int(k as i64 - 1) * at(p, r)),
        TriangleKind::Stirling2 => build(k_max, one(), |p, _, r| below(p, r) + int(r as i64) * at(p, r)),
        TriangleKind::S1Shifted => build(
            k_max,
            vec![vec![int(1)], vec![int(1), int(1)]],
            |p, k, r| below(p, r) - int(k as i64 - 1) * at(p, r),
        ),
        TriangleKind::LegendreStirling1 => {
            build(k_max, one(), |p, k, r| below(p, r) - int((k * (k - 1)) as i64) * at(p, r))
        }
        TriangleKind::LegendreStirling2 => {
            build(k_max, one(), |p, _, r| below(p, r) + int((r * (r + 1)) as i64) * at(p, r))
        }
        TriangleKind::GenStirling1 => {
            build(k_max, one(), |p, k, r| below(p, r) - int(((k - 1) * (k - 1)) as i64) * at(p, r))
        }
        TriangleKind::CentralFactorial2 => {
            build(k_max, one(), |p, _, r| below(p, r) + int((r * r) as i64) * at(p, r))
        }
    };
    Triangle { kind, rows }
}

fn canonical_pair(a: TriangleKind, b: TriangleKind) -> Option<(TriangleKind, TriangleKind)> {
    use TriangleKind::*;
    let pairs = [
        (LegendreStirling1, LegendreStirling2),
        (GenStirling1, CentralFactorial2),
        (Stirling1, Stirling2),
    ];
    pairs
        .into_iter()
        .find(|&(x, y)| (x, y) == (a, b) || (y, x) == (a, b))
}

/// Check that the product of two triangles is the identity matrix.
pub fn triangle_inverse_check(a: TriangleKind, b: TriangleKind, k_max: usize) -> Result<IdentityReport> {
    if canonical_pair(a, b).is_none() {
        return invalid(format!("{a} and {b} are not an inverse pair"));
    }
    let ta = triangle(a, k_max);
    let tb = triangle(b, k_max);
    let mut rep = IdentityReport::new("triangle-inverse");
    for i in 0..=k_max {
        for j in 0..=k_max {
            let s: Integer = (0..=k_max).map(|t| ta.get(i, t) * tb.get(t, j)).sum();
            let e = if i == j { int(1) } else { int(0) };
            rep.check(&format!("{a} x {b} = I"), || format!("i={i} j={j}"), &s, &e);
        }
    }
    Ok(rep)
}

/// `prod_{r=0}^{k-1} (x - f(r))` as a polynomial.
fn product_poly(k: usize, f: impl Fn(i64) -> i64) -> UniPoly {
    (0..k as i64).fold(UniPoly::one(), |acc, r| &acc * &UniPoly::shifted_x(-f(r)))
}

fn row_poly(t: &Triangle, k: usize) -> UniPoly {
    UniPoly::from_integers(&t.rows[k])
}

/// Legendre-Stirling second kind from its explicit alternating sum.
pub fn legendre_stirling2_explicit(k: i64, r: i64) -> Rational {
    if k == 0 {
        return if r == 0 { rat(1) } else { rat(0) };
    }
    let mut s = Rational::zero();
    for i in 1..=r {
        let num = int(2 * i + 1) * num_traits::pow(int(i * i + i), k as usize);
        let den = factorial((i + r + 1) as u64) * factorial((r - i) as u64);
        s += rat(sign(i + r)) * Rational::new(num, den);
    }
    s
}

/// Central factorial number of the second kind from its explicit sum.
pub fn central_factorial2_explicit(n: i64, k: i64) -> Rational {
    let mut s = Integer::zero();
    for j in 0..=2 * k {
        s += int(sign(j)) * binomial(2 * k, j) * num_traits::pow(int(k - j), (2 * n) as usize);
    }
    Rational::new(s, factorial((2 * k) as u64))
}

/// Cross-route checks for every triangle, rows `0..=k_max`.
pub fn triangle_cross_suite(k_max: usize) -> Result<IdentityReport> {
    use TriangleKind::*;
    let mut rep = IdentityReport::new("triangle-cross");
    let s1 = triangle(Stirling1, 2 * k_max);
    let s2 = triangle(Stirling2, k_max);
    let sh = triangle(S1Shifted, k_max);
    let ps = triangle(LegendreStirling1, k_max);
    let ps2 = triangle(LegendreStirling2, k_max);
    let gs = triangle(GenStirling1, k_max);
    let cf = triangle(CentralFactorial2, k_max);
    for k in 0..=k_max {
        let ki = k as i64;
        let kp = || format!("k={k}");
        rep.check("falling factorial = sum s(k,r) x^r", kp, &falling_poly(k as u32), &row_poly(&s1, k));
        for r in 0..=k {
            let p = || format!("k={k} r={r}");
            let ri = r as i64;
            let mut explicit = Integer::zero();
            for i in 0..=ri {
                explicit += int(sign(ri - i)) * binomial(ri, i) * ipow(i, k as u32);
            }
            rep.check("S(k,r) explicit sum", p, &rat_int(&s2.get(k, r)), &Rational::new(explicit, factorial(r as u64)));
            rep.check("s1(k,r) = s(k,r+1) + s(k,r)", p, &sh.get(k, r), &(s1.get(k, r + 1) + s1.get(k, r)));
            rep.check("PS explicit sum", p, &rat_int(&ps2.get(k, r)), &legendre_stirling2_explicit(ki, ri));
            rep.check("central factorial explicit sum", p, &rat_int(&cf.get(k, r)), &central_factorial2_explicit(ki, ri));
            let via_ps: Integer = (0..=k).map(|i| binomial(i as i64, 2 * i as i64 - 2 * ri) * ps.get(k, i)).sum();
            rep.check("ScriptS = sum_i C(i, 2i-2r) Ps", p, &gs.get(k, r), &via_ps);
            if k >= 1 {
                let conv: Integer = (0..=2 * r)
                    .map(|i| int(sign(ki + i as i64)) * s1.get(k, i) * s1.get(k, 2 * r - i))
                    .sum();
                rep.check("ScriptS as signed Stirling convolution", p, &gs.get(k, r), &conv);
                // c(k,r) from the Stirling-numbers relation
                let mut c6 = Integer::zero();
                for i in (r + 1)..=k {
                    c6 -= binomial(i as i64, 2 * i as i64 - 2 * ri) * ps.get(k, i);
                }
                for i in 0..=(2 * k - 2 * r) {
                    c6 += binomial((2 * r + i) as i64, i as i64) * s1.get(2 * k, 2 * r + i) * ipow(ki, i as u32);
                }
                rep.check("Ps from Stirling numbers of the first kind", p, &ps.get(k, r), &c6);
            }
        }
        rep.check("Ps horizontal generating product", kp, &row_poly(&ps, k), &product_poly(k, |r| r * (r + 1)));
        rep.check("ScriptS generating product", kp, &row_poly(&gs, k), &product_poly(k, |t| t * t));
        let t = UniPoly::x();
        let mut rev = UniPoly::zero();
        let mut rev_alt = UniPoly::zero();
        for r in 0..=k {
            let mono = UniPoly::monomial(rat_int(&ps.get(k, r)), k - r);
            rev = &rev + &mono;
            rev_alt = &rev_alt + &mono.scale(&rat(sign((k + r) as i64)));
        }
        let prod_minus = (0..ki).fold(UniPoly::one(), |a, r| &a * &(&UniPoly::one() - &t.scale(&rat(r * (r + 1)))));
        let prod_plus = (0..ki).fold(UniPoly::one(), |a, r| &a * &(&UniPoly::one() + &t.scale(&rat(r * (r + 1)))));
        rep.check("sum Ps t^(k-r) = prod (1 - r(r+1)t)", kp, &rev, &prod_minus);
        rep.check("sum (-1)^(k+r) Ps t^(k-r) = prod (1 + r(r+1)t)", kp, &rev_alt, &prod_plus);
        let sym = falling_poly(2 * k as u32).compose(&UniPoly::shifted_x(ki));
        match crate::interp::u_basis_convert(&sym) {
            Ok(coeffs) => {
                let want: Vec<Rational> = (0..=k).map(|r| rat_int(&ps.get(k, r))).collect();
                let mut got = coeffs;
                got.resize(k + 1, Rational::zero());
                rep.check("(m+k) falling 2k in powers of m(m+1)", kp, &got, &want);
            }
            Err(e) => rep.record_error("(m+k) falling 2k in powers of m(m+1)", kp, &e),
        }
        let mut basis_sum = UniPoly::zero();
        for r in 0..=k {
            basis_sum = &basis_sum + &product_poly(r, |t| t * (t + 1)).scale(&rat_int(&ps2.get(k, r)));
        }
        rep.check("x^k = sum PS <x>_r", kp, &basis_sum, &UniPoly::monomial(rat(1), k));
        let row_sum: Integer = gs.rows[k].iter().sum();
        let abs_sum: Integer = gs.rows[k].iter().map(|c| c.abs()).sum();
        let want_sum: Integer = (0..ki).map(|t| int(1 - t * t)).product();
        let want_abs: Integer = (0..ki).map(|t| int(1 + t * t)).product();
        rep.check("ScriptS row sum", kp, &row_sum, &want_sum);
        rep.check("ScriptS absolute row sum", kp, &abs_sum, &want_abs);
        if k >= 1 {
            rep.check("ScriptS_k^(k) = 1", kp, &gs.get(k, k), &int(1));
            rep.check("ScriptS_k^(1) = (-1)^(k-1) ((k-1)!)^2", kp, &gs.get(k, 1), &(int(sign(ki - 1)) * num_traits::pow(factorial(k as u64 - 1), 2)));
            let sub = Rational::new(int(-(2 * ki - 1)), int(3)) * rat_int(&binomial(ki, 2));
            rep.check("ScriptS_k^(k-1) = -((2k-1)/3) C(k,2)", kp, &rat_int(&gs.get(k, k - 1)), &sub);
            rep.check("Ps_k^(k-1) = -2 C(k+1,3)", kp, &ps.get(k, k - 1), &(int(-2) * binomial(ki + 1, 3)));
            rep.check("Ps_k^(1) = (-1)^(k+1) k!(k-1)!", kp, &ps.get(k, 1), &(int(sign(ki + 1)) * factorial(k as u64) * factorial(k as u64 - 1)));
        }
        if k >= 2 {
            let f1 = factorial(k as u64 - 1);
            let c2 = int(sign(ki)) * &f1 * (factorial(k as u64) - &f1);
            rep.check("Ps_k^(2) = (-1)^k (k-1)!(k! - (k-1)!)", kp, &ps.get(k, 2), &c2);
        }
    }
    Ok(rep)
}

/// `sum n^m = sum_k S(m,k) (n+1)^(k+1 falling) / (k+1)`.
pub fn lemma41_sum(m: u32) -> UniPoly {
    let s2 = triangle(TriangleKind::Stirling2, m as usize);
    let mut acc = UniPoly::zero();
    for k in 1..=m as usize {
        let term = falling_poly(k as u32 + 1).compose(&UniPoly::shifted_x(1));
        acc = &acc + &term.scale(&(rat_int(&s2.get(m as usize, k)) / rat(k as i64 + 1)));
    }
    if m == 0 {
        return UniPoly::x();
    }
    acc
}

/// The Stirling/Bernoulli relations, both directions.
pub fn theorem6_check(m_max: usize) -> IdentityReport {
    let mut rep = IdentityReport::new("theorem6");
    let s1 = triangle(TriangleKind::Stirling1, m_max + 1);
    let s2 = triangle(TriangleKind::Stirling2, m_max);
    let sh = triangle(TriangleKind::S1Shifted, m_max);
    let b = bernoulli_numbers(m_max);
    for m in 0..=m_max {
        let mi = m as i64;
        rep.check("sum n^m via S(m,k) and falling factorials", || format!("m={m}"), &lemma41_sum(m as u32), &faulhaber(m));
        for k in 0..=m {
            let ki = k as i64;
            let lhs = rat(sign(mi - ki)) / rat(mi + 1) * rat_int(&binomial(mi + 1, mi - ki)) * &b[m - k];
            let rhs: Rational = (k..=m)
                .map(|l| rat_int(&s2.get(m, l)) / rat(l as i64 + 1) * rat_int(&(s1.get(l, k + 1) + s1.get(l, k))))
                .sum();
            rep.check("Bernoulli from S(m,l) and s(l,k)", || format!("m={m} k={k}"), &lhs, &rhs);
        }
        for j in 0..=m {
            let ji = j as i64;
            let s: Rational = (j..=m)
                .map(|k| {
                    let kk = k as i64;
                    rat_int(&s1.get(m, k)) / rat(kk + 1)
                        * rat(sign(kk - ji))
                        * rat_int(&binomial(kk + 1, kk - ji))
                        * &b[k - j]
                })
                .sum();
            rep.check("s1(m,j) from s(m,k) and Bernoulli numbers", || format!("m={m} j={j}"), &(rat(mi + 1) * s), &rat_int(&sh.get(m, j)));
        }
    }
    rep
}

/// Faulhaber sum expanded over central factorial numbers.
pub fn central_factorial_sum(m: u32, parity: Parity) -> Result<UniPoly> {
    if m < 1 {
        return invalid("central factorial sum needs m >= 1");
    }
    let t = triangle(TriangleKind::CentralFactorial2, m as usize);
    let mut acc = UniPoly::zero();
    for k in 1..=m as i64 {
        let w = rat_int(&(factorial((2 * k - 1) as u64) * t.get(m as usize, k as usize)));
        let base = binomial_poly(k, 2 * k as u32);
        let term = match parity {
            Parity::Odd => base.scale(&w),
            Parity::Even => (&base * &UniPoly::from_ints(&[1, 2])).scale(&(w * ratio(k, 2 * k + 1))),
        };
        acc = &acc + &term;
    }
    Ok(acc)
}

/// `B_2k` from central factorial numbers.
pub fn bernoulli_from_cf(k: u32) -> Result<Rational> {
    if k < 1 {
        return invalid("needs k >= 1");
    }
    let t = triangle(TriangleKind::CentralFactorial2, k as usize);
    let mut s = Rational::zero();
    for r in 1..=k as i64 {
        let w = Rational::new(factorial(r as u64 - 1) * factorial(r as u64), int(2 * r + 1));
        s += rat(sign(r + 1)) * w * rat_int(&t.get(k as usize, r as usize));
    }
    Ok(s / rat(2))
}

/// `g(k,i) = ((k-2i+1)/(k-i+1)) C(k,i)`.
pub fn g_coeff(k: i64, i: i64) -> Result<Integer> {
    if i < 0 || i > k {
        return invalid(format!("need 0 <= i <= k, got k={k} i={i}"));
    }
    let v = Rational::new(int(k - 2 * i + 1) * binomial(k, i), int(k - i + 1));
    crate::exact::to_integer(&v).ok_or_else(|| Error::InvalidArgument("non-integral g".into()))
}

/// The triangular-exponent polynomial `sum_m (-1)^m C(2r,m) x^((r-m)(r+1-m)/2)`.
///
/// This is the tabulated `(2r)! p_r(x)`. Its exact divisibility by `(x-1)^r`
/// is checked on construction.
pub fn p_r_poly(r: u32) -> Result<UniPoly> {
    let ri = r as i64;
    let mut acc = UniPoly::zero();
    for m in 0..=2 * ri {
        let e = ((ri - m) * (ri + 1 - m) / 2) as usize;
        acc = &acc + &UniPoly::monomial(rat(sign(m)) * rat_int(&binomial(2 * ri, m)), e);
    }
    let x1 = UniPoly::shifted_x(-1).pow(r);
    acc.exact_div(&x1)?;
    Ok(acc)
}

/// `p_r_poly(r) / (x-1)^r`, of degree `r(r-1)/2`.
pub fn p_r_reduced(r: u32) -> Result<UniPoly> {
    p_r_poly(r)?.exact_div(&UniPoly::shifted_x(-1).pow(r))
}

/// Closed form `sum_i (-1)^(r+i) g(2r, r-i) x^(i(i+1)/2)`.
pub fn p_r_closed(r: u32) -> Result<UniPoly> {
    let ri = r as i64;
    let mut acc = UniPoly::zero();
    for i in 0..=ri {
        let c = rat(sign(ri + i)) * rat_int(&g_coeff(2 * ri, ri - i)?);
        acc = &acc + &UniPoly::monomial(c, (i * (i + 1) / 2) as usize);
    }
    Ok(acc)
}

/// Central-factorial expansions of the power sums and of `B_2k`.
pub fn central_factorial_suite(m_max: u32) -> Result<IdentityReport> {
    let mut rep = IdentityReport::new("central-factorial");
    for m in 1..=m_max {
        let p = || format!("m={m}");
        rep.check("odd power sum over central factorials", p, &central_factorial_sum(m, Parity::Odd)?, &faulhaber((2 * m - 1) as usize));
        rep.check("even power sum over central factorials", p, &central_factorial_sum(m, Parity::Even)?, &faulhaber((2 * m) as usize));
        rep.check("B_2k from central factorials", p, &bernoulli_from_cf(m)?, &bernoulli((2 * m) as usize));
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rows(v: &[&[i64]]) -> Vec<Vec<Integer>> {
        v.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn small_rows() {
        assert_eq!(triangle(TriangleKind::Stirling1, 3).rows, rows(&[&[1], &[0, 1], &[0, -1, 1], &[0, 2, -3, 1]]));
        assert_eq!(triangle(TriangleKind::Stirling2, 3).rows, rows(&[&[1], &[0, 1], &[0, 1, 1], &[0, 1, 3, 1]]));
        assert_eq!(triangle(TriangleKind::S1Shifted, 2).rows, rows(&[&[1], &[1, 1], &[-1, 0, 1]]));
        assert_eq!(triangle(TriangleKind::LegendreStirling1, 0).rows, rows(&[&[1]]));
    }

    #[test]
    fn cross_routes() {
        let rep = triangle_cross_suite(9).unwrap();
        assert!(rep.passed(), "{:?}", rep.first_failure);
    }

    #[test]
    fn inverse_pairs() {
        use TriangleKind::*;
        for (a, b) in [(LegendreStirling1, LegendreStirling2), (CentralFactorial2, GenStirling1), (Stirling1, Stirling2)] {
            assert!(triangle_inverse_check(a, b, 10).unwrap().passed());
        }
        assert!(triangle_inverse_check(Stirling1, GenStirling1, 3).is_err());
    }

    #[test]
    fn printed_sign_of_ps_sum_fails() {
        // (-1)^(i+k) instead of (-1)^(i+r) gives PS_2^(1) = -2
        let k = 2i64;
        let r = 1i64;
        let wrong: Rational = (1..=r)
            .map(|i| {
                rat(sign(i + k))
                    * Rational::new(int(2 * i + 1) * num_traits::pow(int(i * i + i), k as usize), factorial((i + r + 1) as u64) * factorial((r - i) as u64))
            })
            .sum();
        assert_eq!(wrong, rat(-2));
        assert_eq!(legendre_stirling2_explicit(2, 1), rat(2));
    }

    #[test]
    fn stirling_bernoulli() {
        assert!(theorem6_check(12).passed());
        assert!(central_factorial_suite(8).unwrap().passed());
    }

    #[test]
    fn knuth_seventh_power() {
        let want = [(4, 5040), (3, 1680), (2, 126), (1, 1)]
            .iter()
            .fold(UniPoly::zero(), |a, &(k, c)| &a + &binomial_poly(k, 2 * k as u32).scale(&rat(c)));
        assert_eq!(central_factorial_sum(4, Parity::Odd).unwrap(), want);
    }

    #[test]
    fn g_values() {
        assert_eq!(g_coeff(6, 3).unwrap(), int(5));
        assert_eq!(g_coeff(6, 2).unwrap(), int(9));
        assert!(g_coeff(3, 4).is_err());
    }

    #[test]
    fn p_r_table_and_closed_form() {
        let table: [&[(usize, i64)]; 7] = [
            &[(0, 1)],
            &[(1, 1), (0, -1)],
            &[(3, 1), (1, -3), (0, 2)],
            &[(6, 1), (3, -5), (1, 9), (0, -5)],
            &[(10, 1), (6, -7), (3, 20), (1, -28), (0, 14)],
            &[(15, 1), (10, -9), (6, 35), (3, -75), (1, 90), (0, -42)],
            &[(21, 1), (15, -11), (10, 54), (6, -154), (3, 275), (1, -297), (0, 132)],
        ];
        for (r, terms) in table.iter().enumerate() {
            let want = terms.iter().fold(UniPoly::zero(), |a, &(e, c)| &a + &UniPoly::monomial(rat(c), e));
            assert_eq!(p_r_poly(r as u32).unwrap(), want, "r={r}");
            assert_eq!(p_r_closed(r as u32).unwrap(), want, "r={r}");
        }
        for r in 1..=8u32 {
            let p = p_r_poly(r).unwrap();
            assert!(p.eval_int(1).is_zero());
            assert_eq!(p.eval_int(-1), rat_int(&ipow(-2, r)));
            let cat = rat(sign(r as i64)) * rat_int(&binomial(2 * r as i64, r as i64)) / rat(r as i64 + 1);
            assert_eq!(p.eval_int(0), cat);
            assert_eq!(p_r_reduced(r).unwrap().degree(), Some((r * (r - 1) / 2) as usize));
        }
    }

    proptest! {
        #[test]
        fn prop_rows_have_unit_diagonal(k in 0usize..12, kind in proptest::sample::select(TriangleKind::ALL.to_vec())) {
            let t = triangle(kind, k);
            prop_assert_eq!(t.rows[k].len(), k + 1);
            prop_assert_eq!(t.get(k, k), int(1));
        }

        #[test]
        fn prop_ps_product(k in 0usize..10, m in -20i64..20) {
            let t = triangle(TriangleKind::LegendreStirling1, k);
            let lhs: Integer = (0..=k).map(|r| t.get(k, r) * ipow(m, r as u32)).sum();
            let rhs: Integer = (0..k as i64).map(|r| int(m - r * (r + 1))).product();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
