//! Monomials expressed in the family bases, and the recurrences linking the
//! four families.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::exact::{binomial, format_rational, int, rat, rat_int, ratio, sign, Rational, UniPoly};
use crate::polyfam::{family_poly, FamilyTag};
use crate::report::IdentityReport;

/// `constant + sum_i coeffs[i] * family(i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisExpansion {
    pub family: FamilyTag,
    pub constant: Rational,
    pub coeffs: Vec<Rational>,
}

#[derive(Serialize)]
struct BasisExpansionJson {
    family: String,
    constant: String,
    coeffs: Vec<String>,
}

impl Serialize for BasisExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BasisExpansionJson {
            family: self.family.to_string(),
            constant: format_rational(&self.constant),
            coeffs: self.coeffs.iter().map(format_rational).collect(),
        }
        .serialize(s)
    }
}

impl BasisExpansion {
    pub fn reconstruct(&self) -> Result<UniPoly> {
        let mut p = UniPoly::constant(self.constant.clone());
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                p = &p + &family_poly(self.family, i as i64)?.scale(c);
            }
        }
        Ok(p)
    }

    pub fn is_integral(&self) -> bool {
        self.constant.is_integer() && self.coeffs.iter().all(|c| c.is_integer())
    }

    fn add_scaled(&mut self, other: &BasisExpansion, c: &Rational) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Rational::zero());
        }
        for (i, a) in other.coeffs.iter().enumerate() {
            self.coeffs[i] += a * c;
        }
        self.constant += &other.constant * c;
    }
}

fn require_base(family: FamilyTag) -> Result<()> {
    if family.is_inverse() {
        invalid(format!("{family} is not a basis family"))
    } else {
        Ok(())
    }
}

/// `x^n` as a combination of `family(0..=n)`.
pub fn monomial_expansion(n: i64, family: FamilyTag) -> Result<BasisExpansion> {
    require_base(family)?;
    if n < 0 {
        return invalid(format!("monomial degree must be >= 0, got {n}"));
    }
    let mut coeffs = vec![Rational::zero(); n as usize + 1];
    let mut constant = Rational::zero();
    match family {
        FamilyTag::P => {
            for j in 0..=n {
                coeffs[(n - j) as usize] = rat_int(&(int(sign(j)) * binomial(2 * n + 1, j)));
            }
        }
        FamilyTag::Q => {
            constant = rat_int(&(int(sign(n)) * binomial(2 * n, n)));
            for j in 0..n {
                coeffs[(n - j) as usize] = rat_int(&(int(sign(j)) * binomial(2 * n, j)));
            }
        }
        FamilyTag::ScriptP => {
            for j in 0..=n {
                coeffs[(n - j) as usize] = rat(sign(j))
                    * rat_int(&binomial(2 * n + 1, j))
                    * ratio(2 * n + 1 - 2 * j, 2 * n + 1);
            }
        }
        FamilyTag::ScriptQ => {
            if n == 0 {
                coeffs[0] = rat(1);
            }
            for j in 0..n {
                coeffs[(n - j) as usize] = rat(sign(j))
                    * rat_int(&binomial(2 * n, j))
                    * ratio(2 * n - 2 * j, 2 * n);
            }
        }
        _ => unreachable!(),
    }
    Ok(BasisExpansion {
        family,
        constant,
        coeffs,
    })
}

/// Rewrite `p` in the basis of `family`.
pub fn to_family_basis(p: &UniPoly, family: FamilyTag) -> Result<BasisExpansion> {
    require_base(family)?;
    let mut acc = BasisExpansion {
        family,
        constant: Rational::zero(),
        coeffs: Vec::new(),
    };
    for (i, c) in p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            acc.add_scaled(&monomial_expansion(i as i64, family)?, c);
        }
    }
    while acc.coeffs.last().is_some_and(Zero::is_zero) {
        acc.coeffs.pop();
    }
    Ok(acc)
}

/// `r`-th forward difference, `(Δf)(x) = f(x+1) - f(x)`.
pub fn finite_difference(f: &UniPoly, r: u32) -> UniPoly {
    let shift = UniPoly::shifted_x(1);
    let mut p = f.clone();
    for _ in 0..r {
        p = &p.compose(&shift) - &p;
    }
    p
}

/// `sum_{j=0}^r (-1)^j C(r,j) (x+2)^(r-j) fam_{m-r-j}`, which equals `fam_m`.
pub fn shifted_expansion(family: FamilyTag, m: i64, r: i64) -> Result<UniPoly> {
    require_base(family)?;
    if r < 0 || m < 2 * r {
        return invalid(format!("need 0 <= 2r <= m, got m={m} r={r}"));
    }
    let y = UniPoly::shifted_x(2);
    let mut acc = UniPoly::zero();
    for j in 0..=r {
        let c = rat(sign(j)) * rat_int(&binomial(r, j));
        let term = &y.pow((r - j) as u32) * &family_poly(family, m - r - j)?;
        acc = &acc + &term.scale(&c);
    }
    Ok(acc)
}

/// Lemma-level recurrences among the four families.
pub fn verify_family_recurrences(n_max: i64) -> Result<IdentityReport> {
    if n_max < 2 {
        return invalid(format!("n_max must be >= 2, got {n_max}"));
    }
    let mut rep = IdentityReport::new("family-recurrences");
    let x = UniPoly::x();
    let y = UniPoly::shifted_x(2);
    let f = |t, n| family_poly(t, n).unwrap();
    use FamilyTag::*;
    for m in 1..=n_max {
        let ps = || format!("m={m}");
        rep.check("xP_{m-1}=Q_m-Q_{m-1}", ps, &(&x * &f(P, m - 1)), &(&f(Q, m) - &f(Q, m - 1)));
        rep.check("Q_m=P_m-P_{m-1}", ps, &f(Q, m), &(&f(P, m) - &f(P, m - 1)));
        rep.check("ScriptQ_m=ScriptP_m-ScriptP_{m-1}", ps, &f(ScriptQ, m), &(&f(ScriptP, m) - &f(ScriptP, m - 1)));
        if m >= 2 {
            rep.check(
                "xScriptP_{m-1}=ScriptQ_m-ScriptQ_{m-1}",
                ps,
                &(&x * &f(ScriptP, m - 1)),
                &(&f(ScriptQ, m) - &f(ScriptQ, m - 1)),
            );
        }
    }
    for m in 0..=n_max {
        for t in FamilyTag::BASE {
            if t == ScriptQ && m == 0 {
                continue;
            }
            let lhs = f(t, m + 2);
            let rhs = &(&y * &f(t, m + 1)) - &f(t, m);
            rep.check("fam_{m+2}=(x+2)fam_{m+1}-fam_m", || format!("{t} m={m}"), &lhs, &rhs);
        }
    }
    for m in 0..=n_max {
        for r in 0..=3.min(m / 2) {
            for t in [P, Q, ScriptP] {
                let rhs = shifted_expansion(t, m, r)?;
                rep.check("fam_m=sum_j (-1)^j C(r,j)(x+2)^(r-j) fam_{m-r-j}", || format!("{t} m={m} r={r}"), &f(t, m), &rhs);
            }
        }
    }
    for n in 0..=n_max {
        for t in FamilyTag::BASE {
            let e = monomial_expansion(n, t)?;
            rep.check("monomial reconstruction", || format!("{t} n={n}"), &e.reconstruct()?, &x.pow(n as u32));
            if matches!(t, P | Q) {
                rep.check_true("integral P/Q expansion", || format!("{t} n={n}"), e.is_integral());
            }
        }
    }
    Ok(rep)
}
