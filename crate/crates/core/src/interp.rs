//! Binomial coefficients through the Legendre-Stirling and generalized
//! Stirling triangles, the `x(x+1)` basis, and the principal polynomials
//! that interpolate `a^k`.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::exact::{
    binomial, factorial, format_rational, rat, rat_int, sign, LaurentPoly, Rational, TriangleKind, UniPoly,
};
use crate::polyfam::{family_poly, FamilyTag};
use crate::powersum::{sum_operator, u_poly};
use crate::report::IdentityReport;
use crate::stirling::triangle;

/// `C(m+k, 2k)` from Legendre-Stirling numbers, or `C(m+k-1, 2k-1)` from
/// generalized Stirling numbers.
pub fn binom_via_triangle(m: i64, k: i64, kind: TriangleKind) -> Result<Rational> {
    if k < 0 {
        return invalid(format!("k must be >= 0, got {k}"));
    }
    let t = triangle(kind, k as usize);
    match kind {
        TriangleKind::LegendreStirling1 => {
            let u = rat(m * (m + 1));
            let s: Rational = (0..=k as usize)
                .map(|r| rat_int(&t.get(k as usize, r)) * num_traits::pow(u.clone(), r))
                .sum();
            Ok(s / rat_int(&factorial(2 * k as u64)))
        }
        TriangleKind::GenStirling1 => {
            if k < 1 {
                return invalid("generalized Stirling route needs k >= 1");
            }
            let s: Rational = (1..=k as usize)
                .map(|r| rat_int(&t.get(k as usize, r)) * num_traits::pow(rat(m), 2 * r - 1))
                .sum();
            Ok(s / rat_int(&factorial(2 * k as u64 - 1)))
        }
        _ => invalid(format!("{kind} does not expand a binomial coefficient")),
    }
}

/// Coefficients `a_0..a_n` with `p = sum a_r (x(x+1))^r`.
pub fn u_basis_convert(p: &UniPoly) -> Result<Vec<Rational>> {
    let deg = match p.degree() {
        None => return Ok(Vec::new()),
        Some(d) => d,
    };
    if deg % 2 == 1 {
        return Err(Error::NotInV(format!("odd degree {deg}")));
    }
    let u = u_poly();
    let mut rest = p.clone();
    let mut out = vec![Rational::zero(); deg / 2 + 1];
    while let Some(d) = rest.degree() {
        if d % 2 == 1 {
            return Err(Error::NotInV(format!("residual of odd degree {d}")));
        }
        let c = rest.leading();
        rest = &rest - &u.pow((d / 2) as u32).scale(&c);
        out[d / 2] = c;
    }
    Ok(out)
}

/// Coefficient of `x^t` in `sum a_r (x(x+1))^r`, by the even/odd closed forms.
pub fn coeff_from_u_basis(a: &[Rational], t: usize) -> Rational {
    let n = a.len() as i64 - 1;
    let mut s = Rational::zero();
    if t.is_multiple_of(2) {
        let rho = (t / 2) as i64;
        for tau in 0..=(n - rho).min(rho).max(-1) {
            s += &a[(rho + tau) as usize] * rat_int(&binomial(rho + tau, rho - tau));
        }
    } else {
        let rho = t.div_ceil(2) as i64;
        for tau in 0..=(n - rho).min(rho - 1).max(-1) {
            s += &a[(rho + tau) as usize] * rat_int(&binomial(rho + tau, rho - tau - 1));
        }
    }
    s
}

/// Interpolating polynomial `f` with `f(floor(k/2)) = a^k`.
///
/// Odd `k = 2m+1`: `f = sum alpha_r (x(x+1))^r`, the leading `+1` folded into
/// `alpha_0`. Even `k = 2m`: `f = (-1)^(a-1) + sum beta_r x^(2r-1)`, kept as a
/// separate constant and a body in odd powers (including `x^-1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalPoly {
    pub a: i64,
    pub k: u32,
    pub u_coeffs: Vec<Rational>,
    pub constant: Rational,
    pub body: LaurentPoly,
}

#[derive(Serialize)]
struct PrincipalPolyJson {
    a: i64,
    k: u32,
    u_coeffs: Vec<String>,
    constant: String,
    body: LaurentPoly,
}

impl Serialize for PrincipalPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PrincipalPolyJson {
            a: self.a,
            k: self.k,
            u_coeffs: self.u_coeffs.iter().map(format_rational).collect(),
            constant: format_rational(&self.constant),
            body: self.body.clone(),
        }
        .serialize(s)
    }
}

impl PrincipalPoly {
    pub fn eval(&self, x: &Rational) -> Result<Rational> {
        Ok(&self.constant + self.body.eval(x)?)
    }

    /// The point where `f` reproduces `a^k`.
    pub fn node(&self) -> i64 {
        (self.k / 2) as i64
    }
}

fn alt_sum(a: i64, p: u32) -> Rational {
    (1..a)
        .map(|j| rat(sign(j + a - 1)) * num_traits::pow(rat(j * (j + 1)), p as usize))
        .sum()
}

fn plain_sum(a: i64, p: u32) -> Rational {
    (1..a).map(|j| num_traits::pow(rat(j * (j + 1)), p as usize)).sum()
}

pub fn principal_poly(a: i64, k: u32) -> Result<PrincipalPoly> {
    if k < 1 {
        return invalid("k must be >= 1");
    }
    if a < 1 {
        return invalid(format!("a must be >= 1, got {a}"));
    }
    let m = (k / 2) as usize;
    if k % 2 == 1 {
        let ps = triangle(TriangleKind::LegendreStirling1, m);
        let mut alpha = vec![Rational::zero(); m + 1];
        for (r, slot) in alpha.iter_mut().enumerate() {
            let mut ar = Rational::zero();
            for kk in r..=m {
                let w = rat_int(&ps.get(kk, r)) / rat_int(&factorial(2 * kk as u64 + 1));
                ar += w * plain_sum(a, (m - kk) as u32);
            }
            *slot = rat(2 * m as i64 + 1) * ar;
        }
        alpha[0] += rat(1);
        let expanded = alpha
            .iter()
            .enumerate()
            .fold(UniPoly::zero(), |acc, (r, c)| &acc + &u_poly().pow(r as u32).scale(c));
        Ok(PrincipalPoly {
            a,
            k,
            u_coeffs: alpha,
            constant: Rational::zero(),
            body: LaurentPoly::from(&expanded),
        })
    } else {
        let gs = triangle(TriangleKind::GenStirling1, m);
        let mut body = LaurentPoly::zero();
        for r in 0..=m {
            let mut br = Rational::zero();
            for kk in r..=m {
                let w = rat_int(&gs.get(kk, r)) / rat_int(&factorial(2 * kk as u64));
                br += w * alt_sum(a, (m - kk) as u32);
            }
            body.add_term(2 * r as i64 - 1, rat(2 * m as i64) * br);
        }
        Ok(PrincipalPoly {
            a,
            k,
            u_coeffs: Vec::new(),
            constant: rat(sign(a - 1)),
            body,
        })
    }
}

/// Odd-`k` coefficients `alpha_r` as polynomials in `a`.
pub fn odd_principal_coeffs_in_a(m: usize) -> Vec<UniPoly> {
    let ps = triangle(TriangleKind::LegendreStirling1, m);
    // sum_{j=1}^{a-1} (j(j+1))^p as a polynomial in a
    let power_sum = |p: u32| sum_operator(&u_poly().pow(p)).compose(&UniPoly::shifted_x(-1));
    let mut out = Vec::with_capacity(m + 1);
    for r in 0..=m {
        let mut ar = UniPoly::zero();
        for kk in r..=m {
            let w = rat_int(&ps.get(kk, r)) / rat_int(&factorial(2 * kk as u64 + 1));
            ar = &ar + &power_sum((m - kk) as u32).scale(&w);
        }
        let mut alpha = ar.scale(&rat(2 * m as i64 + 1));
        if r == 0 {
            alpha = &alpha + &UniPoly::one();
        }
        out.push(alpha);
    }
    out
}

/// Power expansions of `a^(2m+1)` and `a^(2m)` and the reversed families
/// written over the triangles.
pub fn power_expansion_check(a_max: i64, m_max: u32) -> Result<IdentityReport> {
    let mut rep = IdentityReport::new("power-expansion");
    for m in 1..=m_max {
        let mi = m as i64;
        let mu = m as usize;
        let ps = triangle(TriangleKind::LegendreStirling1, mu);
        let gs = triangle(TriangleKind::GenStirling1, mu);
        for a in 1..=a_max {
            let p = || format!("a={a} m={m}");
            let mut odd = Rational::zero();
            for r in 0..=mu {
                let mut inner = Rational::zero();
                for k in r..=mu {
                    inner += rat_int(&ps.get(k, r)) / rat_int(&factorial(2 * k as u64 + 1)) * plain_sum(a, (mu - k) as u32);
                }
                odd += num_traits::pow(rat(mi * (mi + 1)), r) * inner;
            }
            let odd = rat(1) + rat(2 * mi + 1) * odd;
            rep.check("a^(2m+1) over Legendre-Stirling numbers", p, &odd, &num_traits::pow(rat(a), 2 * mu + 1));
            let mut even = Rational::zero();
            for r in 0..=mu {
                let mut inner = Rational::zero();
                for k in r..=mu {
                    inner += rat_int(&gs.get(k, r)) / rat_int(&factorial(2 * k as u64)) * alt_sum(a, (mu - k) as u32);
                }
                let pw = if r == 0 { rat(1) / rat(mi) } else { num_traits::pow(rat(mi), 2 * r - 1) };
                even += pw * inner;
            }
            let even = rat(sign(a - 1)) + rat(2 * mi) * even;
            rep.check("a^(2m) over generalized Stirling numbers", p, &even, &num_traits::pow(rat(a), 2 * mu));
            for k in [2 * m, 2 * m + 1] {
                let f = principal_poly(a, k)?;
                rep.check("principal polynomial at its node", || format!("a={a} k={k}"), &f.eval(&rat(f.node()))?, &num_traits::pow(rat(a), k as usize));
            }
        }
        let mut pinv = UniPoly::zero();
        let mut qinv = UniPoly::zero();
        for k in 0..=mu {
            let cps: Rational = (0..=k).map(|r| rat_int(&ps.get(k, r)) * num_traits::pow(rat(mi * (mi + 1)), r)).sum();
            pinv = &pinv + &UniPoly::monomial(rat(2 * mi + 1) * cps / rat_int(&factorial(2 * k as u64 + 1)), mu - k);
            let cgs: Rational = (0..=k)
                .map(|r| {
                    let pw = if r == 0 { rat(1) / rat(mi) } else { num_traits::pow(rat(mi), 2 * r - 1) };
                    rat_int(&gs.get(k, r)) * pw
                })
                .sum();
            qinv = &qinv + &UniPoly::monomial(rat(2 * mi) * cgs / rat_int(&factorial(2 * k as u64)), mu - k);
        }
        rep.check("PInv_m over Legendre-Stirling numbers", || format!("m={m}"), &pinv, &family_poly(FamilyTag::PInv, mi)?);
        rep.check("QInv_m over generalized Stirling numbers", || format!("m={m}"), &qinv, &family_poly(FamilyTag::QInv, mi)?);
    }
    Ok(rep)
}

/// Binomials via triangles and the `x(x+1)` basis closed forms.
pub fn u_basis_suite(k_max: i64, m_range: i64) -> Result<IdentityReport> {
    let mut rep = IdentityReport::new("u-basis");
    for k in 0..=k_max {
        for m in -m_range..=m_range {
            let p = || format!("m={m} k={k}");
            rep.check("C(m+k, 2k) via Legendre-Stirling", p, &binom_via_triangle(m, k, TriangleKind::LegendreStirling1)?, &rat_int(&binomial(m + k, 2 * k)));
            if k >= 1 {
                rep.check("C(m+k-1, 2k-1) via generalized Stirling", p, &binom_via_triangle(m, k, TriangleKind::GenStirling1)?, &rat_int(&binomial(m + k - 1, 2 * k - 1)));
            }
        }
    }
    for n in 0..=k_max as usize {
        let a: Vec<Rational> = (0..=n).map(|r| rat((r as i64 * 7 + 3) % 11 - 5)).collect();
        let p = a
            .iter()
            .enumerate()
            .fold(UniPoly::zero(), |acc, (r, c)| &acc + &u_poly().pow(r as u32).scale(c));
        for t in 0..=2 * n {
            rep.check("x^t coefficient closed form", || format!("n={n} t={t}"), &coeff_from_u_basis(&a, t), &p.coeff(t));
        }
        let mut back = u_basis_convert(&p)?;
        back.resize(n + 1, Rational::zero());
        rep.check("u-basis round trip", || format!("n={n}"), &back, &a);
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;
    use proptest::prelude::*;

    #[test]
    fn binomials_via_triangles() {
        assert_eq!(binom_via_triangle(5, 2, TriangleKind::LegendreStirling1).unwrap(), rat(35));
        assert_eq!(binom_via_triangle(5, 2, TriangleKind::GenStirling1).unwrap(), rat(20));
        assert!(binom_via_triangle(5, 2, TriangleKind::Stirling1).is_err());
    }

    #[test]
    fn u_basis_rejects_odd() {
        assert!(matches!(u_basis_convert(&UniPoly::x()), Err(Error::NotInV(_))));
        assert!(matches!(u_basis_convert(&UniPoly::from_ints(&[0, 0, 1])), Err(Error::NotInV(_))));
        assert_eq!(u_basis_convert(&UniPoly::from_ints(&[3, 2, 2])).unwrap(), vec![rat(3), rat(2)]);
        assert!(u_basis_convert(&UniPoly::zero()).unwrap().is_empty());
    }

    #[test]
    fn principal_examples() {
        let f = principal_poly(7, 5).unwrap();
        assert_eq!(f.u_coeffs, vec![rat(5 * 3248 + 1), ratio(5 * 557, 30), ratio(5, 20)]);
        assert_eq!(f.eval(&rat(2)).unwrap(), rat(16807));
        let g = principal_poly(7, 6).unwrap();
        assert_eq!(g.constant, rat(1));
        assert_eq!(g.body, LaurentPoly::from_terms([(3, rat(6)), (1, rat(6 * 575)), (-1, rat(6 * 53568))]));
        assert_eq!(g.eval(&rat(3)).unwrap(), rat(117649));
        assert!(g.eval(&rat(0)).is_err());
        let one = principal_poly(1, 4).unwrap();
        assert_eq!(one.eval(&rat(2)).unwrap(), rat(1));
        assert!(one.body.terms().is_empty());
        assert_eq!(principal_poly(1, 5).unwrap().u_coeffs, vec![rat(1), rat(0), rat(0)]);
        assert!(principal_poly(0, 3).is_err());
        assert!(principal_poly(3, 0).is_err());
    }

    #[test]
    fn odd_coefficients_in_a() {
        let c = odd_principal_coeffs_in_a(2);
        // alpha_1(a) = (a-1)(10a^2 + 10a - 3)/36
        let want = (&UniPoly::shifted_x(-1) * &UniPoly::from_ints(&[-3, 10, 10])).scale(&ratio(1, 36));
        assert_eq!(c[1], want);
        assert_eq!(c[2], UniPoly::shifted_x(-1).scale(&ratio(1, 24)));
        for a in 1..10 {
            let f = principal_poly(a, 5).unwrap();
            for (r, p) in c.iter().enumerate() {
                assert_eq!(p.eval_int(a), f.u_coeffs[r]);
            }
        }
    }

    #[test]
    fn suites_pass() {
        assert!(power_expansion_check(8, 5).unwrap().passed());
        let rep = u_basis_suite(8, 10).unwrap();
        assert!(rep.passed(), "{:?}", rep.first_failure);
    }

    proptest! {
        #[test]
        fn prop_even_body_odd_exponents(a in 1i64..30, m in 1u32..6) {
            let f = principal_poly(a, 2 * m).unwrap();
            prop_assert!(f.body.exponents().all(|e| e.rem_euclid(2) == 1));
            prop_assert_eq!(f.eval(&rat(m as i64)).unwrap(), num_traits::pow(rat(a), 2 * m as usize));
        }

        #[test]
        fn prop_odd_interpolates(a in 1i64..30, m in 0u32..6) {
            let f = principal_poly(a, 2 * m + 1).unwrap();
            prop_assert_eq!(f.eval(&rat(m as i64)).unwrap(), num_traits::pow(rat(a), 2 * m as usize + 1));
        }
    }
}
