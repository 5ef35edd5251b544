//! Faulhaber sums, Bernoulli numbers and iterated (r-fold) summation.
//!
//! `sum_operator` is built on rising factorials so that it is independent of
//! Faulhaber's formula; the two routes are compared in the tests.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::exact::{binomial, binomial_poly, rat, rat_int, ratio, rising_poly, sign, Rational, UniPoly};
use crate::polyfam::{family_poly, FamilyTag};
use crate::report::IdentityReport;

/// `B_0 ..= B_n` with `B_1 = -1/2`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        if k == 0 {
            b.push(Rational::one());
            continue;
        }
        let s: Rational = (0..k)
            .map(|j| rat_int(&binomial(k as i64 + 1, j as i64)) * &b[j])
            .sum();
        b.push(-s / rat(k as i64 + 1));
    }
    b
}

pub fn bernoulli(k: usize) -> Rational {
    bernoulli_numbers(k).pop().unwrap()
}

/// `B_m(x) = sum_k C(m,k) B_k x^(m-k)`.
pub fn bernoulli_poly(m: usize) -> UniPoly {
    let b = bernoulli_numbers(m);
    let mut coeffs = vec![Rational::zero(); m + 1];
    for (k, bk) in b.iter().enumerate() {
        coeffs[m - k] = rat_int(&binomial(m as i64, k as i64)) * bk;
    }
    UniPoly::new(coeffs)
}

/// `sum_{t=1}^n t^m` from Faulhaber's Bernoulli form.
pub fn faulhaber(m: usize) -> UniPoly {
    let b = bernoulli_numbers(m);
    let mut coeffs = vec![Rational::zero(); m + 2];
    for (j, bj) in b.iter().enumerate() {
        coeffs[m + 1 - j] =
            rat(sign(j as i64)) * rat_int(&binomial(m as i64 + 1, j as i64)) * bj / rat(m as i64 + 1);
    }
    UniPoly::new(coeffs)
}

/// `(B_{m+1}(n+1) - B_{m+1}(0)) / (m+1)`, which sums `t^m` from `t = 0`;
/// it agrees with `faulhaber(m)` for `m >= 1`.
pub fn faulhaber_jacobi(m: usize) -> UniPoly {
    let bp = bernoulli_poly(m + 1);
    let shifted = bp.compose(&UniPoly::shifted_x(1));
    (&shifted - &UniPoly::constant(bp.coeff(0))).scale(&ratio(1, m as i64 + 1))
}

/// The unique `S` with `S(0) = 0` and `S(n) - S(n-1) = p(n)`.
pub fn sum_operator(p: &UniPoly) -> UniPoly {
    let mut acc = UniPoly::zero();
    let mut rest = p.clone();
    let mut k: i64 = 0;
    while !rest.is_zero() {
        let c = rest.eval_int(-k);
        let tail = &rest - &UniPoly::constant(c.clone());
        rest = tail
            .exact_div(&UniPoly::shifted_x(k))
            .expect("root removed before division");
        // sum_{t=1}^n t^(k rising) = n^(k+1 rising) / (k+1)
        acc = &acc + &rising_poly(k as u32 + 1).scale(&(c / rat(k + 1)));
        k += 1;
    }
    acc
}

fn iterate_sum(p: &UniPoly, r: u32) -> UniPoly {
    (0..r).fold(p.clone(), |acc, _| sum_operator(&acc))
}

/// `r`-fold iterated sum of `n^m`.
pub fn rfold_sum(m: u32, r: u32) -> UniPoly {
    iterate_sum(&UniPoly::monomial(rat(1), m as usize), r)
}

/// `rfold_sum(m, r) / C(n+r, r+1)`.
pub fn g_poly(m: u32, r: u32) -> Result<UniPoly> {
    if m < 1 {
        return invalid("G polynomial needs m >= 1");
    }
    rfold_sum(m, r).exact_div(&binomial_poly(r as i64, r + 1))
}

/// A-coefficient `A_j^(m)` for `0 <= j <= m`; `A_m^(m)` is the extended value.
pub fn faulhaber_a_entry(m: i64, j: i64) -> Rational {
    if j < 0 || j > m || m < 0 {
        return Rational::zero();
    }
    let b = bernoulli_numbers((2 * m) as usize);
    let mut s = Rational::zero();
    for i in 0..=(m - j) {
        let bern = &b[(m + j + i) as usize];
        if bern.is_zero() {
            continue;
        }
        let factor = if m - j + i == 0 {
            // 0/0 at j = m, i = 0; the limit along j < m is 1
            rat(1)
        } else {
            ratio(m - j - i, m - j + i)
        };
        s += rat_int(&(binomial(2 * m, m - j - i) * binomial(m - j + i, i))) * factor * bern;
    }
    rat(sign(m - j)) * s
}

/// `A_0^(m) ..= A_{m-1}^(m)`.
pub fn faulhaber_a(m: i64) -> Result<Vec<Rational>> {
    if m < 1 {
        return invalid(format!("A-coefficients need m >= 1, got {m}"));
    }
    Ok((0..m).map(|j| faulhaber_a_entry(m, j)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parity {
    Odd,
    Even,
}

/// The u-polynomial factor of the Faulhaber sum, `u = n(n+1)`.
///
/// Odd: `sum n^(2m-1) = (1/2m) sum_j A_j^(m) u^(m-j)`.
/// Even: `sum n^(2m) = (2n+1)/((2m+1)(2m+2)) * sum_j (m+1-j) A_j^(m+1) u^(m-j)`;
/// only the trailing sum is returned.
pub fn faulhaber_uform(m: i64, parity: Parity) -> Result<UniPoly> {
    if m < 1 {
        return invalid(format!("u-form needs m >= 1, got {m}"));
    }
    let mut coeffs = vec![Rational::zero(); m as usize + 1];
    match parity {
        Parity::Odd => {
            for j in 0..m {
                coeffs[(m - j) as usize] = faulhaber_a_entry(m, j) / rat(2 * m);
            }
        }
        Parity::Even => {
            for j in 0..=m {
                coeffs[(m - j) as usize] = rat(m + 1 - j) * faulhaber_a_entry(m + 1, j);
            }
        }
    }
    Ok(UniPoly::new(coeffs))
}

/// `u = x(x+1)`.
pub fn u_poly() -> UniPoly {
    UniPoly::from_ints(&[0, 1, 1])
}

/// Faulhaber sum rebuilt from its u-form.
pub fn faulhaber_from_uform(m: i64, parity: Parity) -> Result<UniPoly> {
    let f = faulhaber_uform(m, parity)?.compose(&u_poly());
    Ok(match parity {
        Parity::Odd => f,
        Parity::Even => (&f * &UniPoly::from_ints(&[1, 2])).scale(&ratio(1, (2 * m + 1) * (2 * m + 2))),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CpKind {
    P,
    Q,
    NP,
    NQ,
}

impl fmt::Display for CpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CpKind::P => "P",
            CpKind::Q => "Q",
            CpKind::NP => "nP",
            CpKind::NQ => "nQ",
        };
        f.write_str(s)
    }
}

impl FromStr for CpKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "p" => Ok(CpKind::P),
            "q" => Ok(CpKind::Q),
            "np" => Ok(CpKind::NP),
            "nq" => Ok(CpKind::NQ),
            _ => invalid(format!("unknown summand kind {s:?}")),
        }
    }
}

fn cp_summand(kind: CpKind, m: i64) -> Result<UniPoly> {
    Ok(match kind {
        CpKind::P => family_poly(FamilyTag::P, m)?,
        CpKind::Q => family_poly(FamilyTag::Q, m)?,
        CpKind::NP => &UniPoly::x() * &family_poly(FamilyTag::P, m)?,
        CpKind::NQ => &UniPoly::x() * &family_poly(FamilyTag::Q, m)?,
    })
}

/// `r`-fold sum with `Sigma^0 C_m(n)` equal to `P_m(n)`, `Q_m(n)`, `nP_m(n)` or `nQ_m(n)`.
pub fn cp_rfold(kind: CpKind, m: i64, r: u32) -> Result<UniPoly> {
    Ok(iterate_sum(&cp_summand(kind, m)?, r))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum InnerKind {
    LowerP,
    LowerQ,
    LowerU,
    LowerV,
}

/// Inner polynomial after removing the binomial factor.
///
/// `p`, `q`: `cp_rfold(P|Q) / C(n+r-1, r)`; `u`, `v`: `cp_rfold(nP|nQ) / C(n+r, r+1)`.
pub fn inner_poly(kind: InnerKind, m: i64, r: u32) -> Result<UniPoly> {
    let (ck, div) = match kind {
        InnerKind::LowerP => (CpKind::P, binomial_poly(r as i64 - 1, r)),
        InnerKind::LowerQ => (CpKind::Q, binomial_poly(r as i64 - 1, r)),
        InnerKind::LowerU => (CpKind::NP, binomial_poly(r as i64, r + 1)),
        InnerKind::LowerV => (CpKind::NQ, binomial_poly(r as i64, r + 1)),
    };
    cp_rfold(ck, m, r)?.exact_div(&div)
}

/// `sum_j (-1)^j C(2m+1, j) Sigma^r C^P_{m-j, q(n)}`, equal to `Sigma^r q(n)^m`.
pub fn theorem1_rfold(q: &UniPoly, m: i64, r: u32) -> Result<UniPoly> {
    if q.degree().unwrap_or(0) < 1 {
        return invalid("Theorem 1 needs a non-constant polynomial q");
    }
    if m < 0 {
        return invalid(format!("m must be >= 0, got {m}"));
    }
    let mut acc = UniPoly::zero();
    for j in 0..=m {
        let inner = iterate_sum(&family_poly(FamilyTag::P, m - j)?.compose(q), r);
        acc = &acc + &inner.scale(&(rat(sign(j)) * rat_int(&binomial(2 * m + 1, j))));
    }
    Ok(acc)
}

/// `n^e * p((n+1)/n^2)` as a polynomial; errors if a negative power survives.
pub fn homogenize_v(p: &UniPoly, e: usize) -> Result<UniPoly> {
    let mut acc = UniPoly::zero();
    let n1 = UniPoly::shifted_x(1);
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if 2 * k > e {
            return invalid(format!("power n^{e} does not clear (n+1)^{k}/n^{}", 2 * k));
        }
        let term = &n1.pow(k as u32) * &UniPoly::monomial(c.clone(), e - 2 * k);
        acc = &acc + &term;
    }
    Ok(acc)
}

/// The four reversed-family forms of the odd and even Faulhaber sums and
/// their two-fold analogues.
pub fn theorem5_suite(m_max: i64) -> Result<IdentityReport> {
    let mut rep = IdentityReport::new("theorem5");
    let b = bernoulli_numbers((2 * m_max + 2) as usize);
    let u = u_poly();
    let two_n1 = UniPoly::from_ints(&[1, 2]);
    let n2 = UniPoly::shifted_x(2);
    let f = |t, n| family_poly(t, n);
    use FamilyTag::*;
    for m in 1..=m_max {
        let c = |a: i64, k: i64| rat_int(&binomial(a, k));
        let ps = || format!("m={m}");

        let mut odd = UniPoly::zero();
        let mut odd2 = UniPoly::zero();
        for j in 1..=m {
            let bo = &b[(2 * m - 2 * j + 1) as usize];
            let be = &b[(2 * m - 2 * j) as usize];
            let pinv = f(PInv, j - 1)?;
            let qinv = f(QInv, j)?;
            odd = &odd + &pinv.compose(&u).scale(&(c(2 * m, 2 * j - 1) * bo));
            odd = &odd + &qinv.compose(&u).scale(&(c(2 * m, 2 * j) * be));
            let e = (2 * j - 1) as usize;
            odd2 = &odd2 + &homogenize_v(&pinv, e)?.scale(&(c(2 * m, 2 * j - 1) * bo));
            let sq = &(&n2 * &homogenize_v(&f(ScriptQInv, j)?, e)?) + &faulhaber((2 * j) as usize).scale(&rat(2));
            odd2 = &odd2 + &sq.scale(&(c(2 * m, 2 * j) * be));
        }
        let lhs = faulhaber((2 * m - 1) as usize).scale(&rat(4 * m));
        rep.check("4m sum n^(2m-1) in PInv/QInv of u", ps, &lhs, &odd);
        let lhs2 = rfold_sum((2 * m - 1) as u32, 2).scale(&rat(4 * m));
        rep.check("4m sum^2 n^(2m-1) in PInv/ScriptQInv of v", ps, &lhs2, &odd2);

        let mut even = UniPoly::zero();
        let mut even2 = UniPoly::zero();
        for j in 1..=(m + 1) {
            let bb = &b[(2 * m - 2 * j + 2) as usize];
            let sp = f(ScriptPInv, j - 1)?;
            even = &even + &(&two_n1 * &sp.compose(&u)).scale(&(c(2 * m + 1, 2 * j - 1) * bb));
            let e = (2 * j - 1) as usize;
            let t = &homogenize_v(&f(PInv, j - 1)?, e)? + &faulhaber((2 * j - 1) as usize).scale(&rat(2));
            even2 = &even2 + &t.scale(&(c(2 * m + 1, 2 * j - 1) * bb));
        }
        for j in 1..=m {
            let bb = &b[(2 * m - 2 * j + 1) as usize];
            let sq = f(ScriptQInv, j)?;
            even = &even + &(&two_n1 * &sq.compose(&u)).scale(&(c(2 * m + 1, 2 * j) * bb));
            let t = &n2 * &homogenize_v(&sq, (2 * j - 1) as usize)?;
            even2 = &even2 + &t.scale(&(c(2 * m + 1, 2 * j) * bb));
        }
        let lhs = faulhaber((2 * m) as usize).scale(&rat(4 * m + 2));
        rep.check("(4m+2) sum n^(2m) in ScriptPInv/ScriptQInv of u", ps, &lhs, &even);
        let lhs2 = rfold_sum((2 * m) as u32, 2).scale(&rat(4 * m + 2));
        rep.check("(4m+2) sum^2 n^(2m) in PInv/ScriptQInv of v", ps, &lhs2, &even2);
    }
    Ok(rep)
}

/// Half-step identities between `Sigma^r` and `Sigma^(r+1)` and their G forms.
pub fn corollary_suite(m_max: i64, r_max: u32) -> Result<IdentityReport> {
    let mut rep = IdentityReport::new("corollary");
    let b = bernoulli_numbers((2 * m_max + 2) as usize);
    let half = ratio(1, 2);
    for m in 1..=m_max {
        for r in 0..=r_max {
            let ps = || format!("m={m} r={r}");
            let c = |a: i64, k: i64| rat_int(&binomial(a, k));
            let mut lhs7 = UniPoly::zero();
            let mut g7 = UniPoly::zero();
            for j in 1..=(m + 1) {
                let w = c(2 * m + 1, 2 * j - 1) * &b[(2 * m + 2 - 2 * j) as usize] / rat(2 * m + 1);
                lhs7 = &lhs7 + &rfold_sum((2 * j - 1) as u32, r).scale(&w);
                g7 = &g7 + &g_poly((2 * j - 1) as u32, r)?.scale(&w);
            }
            let e = (2 * m) as u32;
            let rhs7 = &rfold_sum(e, r + 1) - &rfold_sum(e, r).scale(&half);
            rep.check("even half-step", ps, &lhs7, &rhs7);
            let grow = UniPoly::shifted_x(r as i64 + 1).scale(&ratio(1, r as i64 + 2));
            let grhs7 = &(&grow * &g_poly(e, r + 1)?) - &g_poly(e, r)?.scale(&half);
            rep.check("even half-step, G form", ps, &g7, &grhs7);

            let mut lhs8 = UniPoly::zero();
            let mut g8 = UniPoly::zero();
            for j in 1..=m {
                let w = c(2 * m, 2 * j) * &b[(2 * m - 2 * j) as usize] / rat(2 * m);
                lhs8 = &lhs8 + &rfold_sum((2 * j) as u32, r).scale(&w);
                g8 = &g8 + &g_poly((2 * j) as u32, r)?.scale(&w);
            }
            let o = (2 * m - 1) as u32;
            let rhs8 = &rfold_sum(o, r + 1) - &rfold_sum(o, r).scale(&half);
            rep.check("odd half-step", ps, &lhs8, &rhs8);
            let grhs8 = &(&grow * &g_poly(o, r + 1)?) - &g_poly(o, r)?.scale(&half);
            rep.check("odd half-step, G form", ps, &g8, &grhs8);
        }
    }
    Ok(rep)
}

/// Cross-route and recursion checks for the Faulhaber sums and A-coefficients.
pub fn faulhaber_suite(m_max: i64, r_max: u32, n_max: i64) -> Result<IdentityReport> {
    let mut rep = IdentityReport::new("faulhaber");
    for m in 0..=(2 * m_max) as usize {
        let f = faulhaber(m);
        let ps = || format!("m={m}");
        if m >= 1 {
            rep.check("Bernoulli form = Jacobi form", ps, &f, &faulhaber_jacobi(m));
        }
        rep.check("Bernoulli form = sum operator", ps, &f, &sum_operator(&UniPoly::monomial(rat(1), m)));
        if m >= 1 {
            let d = f.derivative();
            // this identity takes B_1 = +1/2
            let b_plus = rat(sign(m as i64)) * bernoulli(m);
            let rhs = &faulhaber(m - 1).scale(&rat(m as i64)) + &UniPoly::constant(b_plus);
            rep.check("d/dn sum n^m = m sum n^(m-1) + B_m", ps, &d, &rhs);
        }
    }
    for m in 1..=m_max {
        let ps = || format!("m={m}");
        rep.check("odd u-form", ps, &faulhaber_from_uform(m, Parity::Odd)?, &faulhaber((2 * m - 1) as usize));
        rep.check("even u-form", ps, &faulhaber_from_uform(m, Parity::Even)?, &faulhaber((2 * m) as usize));
    }
    let a = |m: i64, j: i64| faulhaber_a_entry(m, j);
    for m in 1..=m_max {
        for j in 0..m {
            let lhs = rat(2 * (m - j) * (2 * m - 2 * j - 1)) * a(m, j) + rat((m - j + 1) * (m - j)) * a(m, j - 1);
            let rhs = rat(2 * m * (2 * m - 1)) * a(m - 1, j);
            rep.check("A-coefficient recurrence", || format!("m={m} j={j}"), &lhs, &rhs);
        }
        rep.check("A_0 = 1", || format!("m={m}"), &a(m, 0), &rat(1));
        rep.check("A_m^(m) = B_2m", || format!("m={m}"), &a(m, m), &bernoulli((2 * m) as usize));
        for k in 1..m {
            let s: Rational = (0..=k).map(|i| rat_int(&binomial(m - i, 2 * k + 1 - 2 * i)) * a(m, i)).sum();
            rep.check("Knuth A recurrence", || format!("m={m} k={k}"), &s, &Rational::zero());
        }
        if m >= 2 {
            rep.check("A_{m-2}^(m) = C(2m,2) B_{2m-2}", || format!("m={m}"), &a(m, m - 2), &(rat_int(&binomial(2 * m, 2)) * bernoulli((2 * m - 2) as usize)));
        }
        rep.check("2A_{m-1}^(m+1) = (2m+1)(2m+2)A_m^(m)", || format!("m={m}"), &(rat(2) * a(m + 1, m - 1)), &(rat((2 * m + 1) * (2 * m + 2)) * a(m, m)));
    }
    // numeric recursion: Sigma^r n^m at n equals the running sum of Sigma^(r-1)
    let mm = m_max.min(6) as u32;
    for m in 0..=mm {
        for r in 1..=r_max {
            let cur = rfold_sum(m, r);
            let prev = rfold_sum(m, r - 1);
            let mut run = Rational::zero();
            for n in 1..=n_max {
                run += prev.eval_int(n);
                rep.check("numeric r-fold recursion", || format!("m={m} r={r} n={n}"), &cur.eval_int(n), &run);
            }
        }
    }
    for r in 0..=r_max {
        rep.check("sum^r n = C(n+r, r+1)", || format!("r={r}"), &rfold_sum(1, r), &binomial_poly(r as i64, r + 1));
        let sq = &UniPoly::from_ints(&[r as i64, 2]).scale(&ratio(1, r as i64 + 2)) * &binomial_poly(r as i64, r + 1);
        rep.check("sum^r n^2 = (2n+r)/(r+2) C(n+r, r+1)", || format!("r={r}"), &rfold_sum(2, r), &sq);
    }
    Ok(rep)
}

/// Divisibility, leading coefficients and difference relations of the inner polynomials.
pub fn inner_poly_suite(m_max: i64, r_max: u32) -> Result<IdentityReport> {
    let mut rep = IdentityReport::new("inner-poly");
    use InnerKind::*;
    for r in 0..=r_max {
        let ip = |k, m| inner_poly(k, m, r);
        for m in 0..=m_max {
            let ps = || format!("m={m} r={r}");
            for k in [LowerP, LowerQ, LowerU, LowerV] {
                let p = ip(k, m)?;
                rep.check("inner polynomial degree m", || format!("{k:?} m={m} r={r}"), &p.degree(), &Some(m as usize));
            }
            let lead = ratio(1, 1) / rat_int(&binomial(m + r as i64, r as i64));
            rep.check("leading coefficient of p is 1/C(m+r, r)", ps, &ip(LowerP, m)?.leading(), &lead);
            let n_r = UniPoly::shifted_x(r as i64).scale(&ratio(1, r as i64 + 1));
            rep.check("((n+r)/(r+1)) u_m = q_{m+1} - q_m", ps, &(&n_r * &ip(LowerU, m)?), &(&ip(LowerQ, m + 1)? - &ip(LowerQ, m)?));
            if m >= 1 {
                rep.check("q_m = p_m - p_{m-1}", ps, &ip(LowerQ, m)?, &(&ip(LowerP, m)? - &ip(LowerP, m - 1)?));
                let second = &(&ip(LowerP, m + 1)? - &ip(LowerP, m)?.scale(&rat(2))) + &ip(LowerP, m - 1)?;
                rep.check("((n+r)/(r+1)) u_m = p_{m+1} - 2p_m + p_{m-1}", ps, &(&n_r * &ip(LowerU, m)?), &second);
                let vq = &(&ip(LowerQ, m + 1)? - &ip(LowerQ, m)?.scale(&rat(2))) + &ip(LowerQ, m - 1)?;
                rep.check("((n+r)/(r+1)) v_m = q_{m+1} - 2q_m + q_{m-1}", ps, &(&n_r * &ip(LowerV, m)?), &vq);
                let cq = &cp_rfold(CpKind::P, m, r)? - &cp_rfold(CpKind::P, m - 1, r)?;
                rep.check("Sigma^r C^Q_m = Sigma^r C^P_m - Sigma^r C^P_{m-1}", ps, &cp_rfold(CpKind::Q, m, r)?, &cq);
            }
            if m >= 2 {
                let third = &(&(&ip(LowerP, m + 1)? - &ip(LowerP, m)?.scale(&rat(3))) + &ip(LowerP, m - 1)?.scale(&rat(3))) - &ip(LowerP, m - 2)?;
                rep.check("((n+r)/(r+1)) v_m = p_{m+1} - 3p_m + 3p_{m-1} - p_{m-2}", ps, &(&n_r * &ip(LowerV, m)?), &third);
            }
            let cnp = &cp_rfold(CpKind::Q, m + 1, r)? - &cp_rfold(CpKind::Q, m, r)?;
            rep.check("Sigma^r C^nP_m = Sigma^r C^Q_{m+1} - Sigma^r C^Q_m", ps, &cp_rfold(CpKind::NP, m, r)?, &cnp);
        }
    }
    Ok(rep)
}

/// Theorem 1 against the direct iterated sum of `q(n)^m`.
pub fn theorem1_suite(m_max: i64, r_max: u32) -> Result<IdentityReport> {
    let mut rep = IdentityReport::new("theorem1");
    let qs = [
        UniPoly::x(),
        UniPoly::from_ints(&[0, 1, 1]),
        UniPoly::from_ints(&[0, 0, 1]),
        UniPoly::from_ints(&[0, 2, 0, 1]),
        UniPoly::from_ints(&[3, 1]),
    ];
    for q in &qs {
        for m in 0..=m_max {
            for r in 0..=r_max {
                let lhs = theorem1_rfold(q, m, r)?;
                let rhs = iterate_sum(&q.pow(m as u32), r);
                rep.check("Theorem 1", || format!("q={q} m={m} r={r}"), &lhs, &rhs);
            }
        }
    }
    Ok(rep)
}
