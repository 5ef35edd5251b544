//! Fibonacci and Lucas polynomials and the eight families derived from them.
//!
//! `P_n`, `Q_n`, `ScriptP_n`, `ScriptQ_n` have coefficients given by the `T`
//! and `U` numbers and by two binomial sequences; the `Inv` variants are
//! coefficient reversals padded to degree `n`.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::exact::{binomial, rat, rat_int, ratio, Integer, Rational, UniPoly};
use crate::report::IdentityReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyTag {
    P,
    Q,
    ScriptP,
    ScriptQ,
    PInv,
    QInv,
    ScriptPInv,
    ScriptQInv,
}

impl FamilyTag {
    pub const BASE: [FamilyTag; 4] = [
        FamilyTag::P,
        FamilyTag::Q,
        FamilyTag::ScriptP,
        FamilyTag::ScriptQ,
    ];
    pub const ALL: [FamilyTag; 8] = [
        FamilyTag::P,
        FamilyTag::Q,
        FamilyTag::ScriptP,
        FamilyTag::ScriptQ,
        FamilyTag::PInv,
        FamilyTag::QInv,
        FamilyTag::ScriptPInv,
        FamilyTag::ScriptQInv,
    ];

    pub fn is_inverse(self) -> bool {
        matches!(
            self,
            FamilyTag::PInv | FamilyTag::QInv | FamilyTag::ScriptPInv | FamilyTag::ScriptQInv
        )
    }

    /// The non-inverse family underlying this tag.
    pub fn base(self) -> FamilyTag {
        match self {
            FamilyTag::PInv => FamilyTag::P,
            FamilyTag::QInv => FamilyTag::Q,
            FamilyTag::ScriptPInv => FamilyTag::ScriptP,
            FamilyTag::ScriptQInv => FamilyTag::ScriptQ,
            t => t,
        }
    }

    pub fn inverse(self) -> FamilyTag {
        match self {
            FamilyTag::P => FamilyTag::PInv,
            FamilyTag::Q => FamilyTag::QInv,
            FamilyTag::ScriptP => FamilyTag::ScriptPInv,
            FamilyTag::ScriptQ => FamilyTag::ScriptQInv,
            t => t,
        }
    }

    /// True for the families built on odd Lucas/Fibonacci indices.
    pub fn is_p_kind(self) -> bool {
        matches!(self.base(), FamilyTag::P | FamilyTag::ScriptP)
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyTag::P => "P",
            FamilyTag::Q => "Q",
            FamilyTag::ScriptP => "ScriptP",
            FamilyTag::ScriptQ => "ScriptQ",
            FamilyTag::PInv => "PInv",
            FamilyTag::QInv => "QInv",
            FamilyTag::ScriptPInv => "ScriptPInv",
            FamilyTag::ScriptQInv => "ScriptQInv",
        };
        f.write_str(s)
    }
}

impl FromStr for FamilyTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace(['-', '_'], "");
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.to_string().to_ascii_lowercase() == key)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family {s:?}")))
    }
}

/// `F_0 .. F_len` with `F_0 = 0`, `F_1 = 1`, `F_{n+1} = x F_n + F_{n-1}`.
fn fibonacci_seq(len: usize) -> Vec<UniPoly> {
    two_term_seq(UniPoly::zero(), UniPoly::one(), len)
}

/// `L_0 .. L_len` with `L_0 = 2`, `L_1 = x`.
fn lucas_seq(len: usize) -> Vec<UniPoly> {
    two_term_seq(UniPoly::from_ints(&[2]), UniPoly::x(), len)
}

fn two_term_seq(a: UniPoly, b: UniPoly, len: usize) -> Vec<UniPoly> {
    let mut v = vec![a, b];
    while v.len() <= len {
        let n = v.len();
        let next = &(&UniPoly::x() * &v[n - 1]) + &v[n - 2];
        v.push(next);
    }
    v.truncate(len + 1);
    v
}

/// Fibonacci polynomial `F_n`, `n >= 1`.
pub fn fibonacci_poly(n: i64) -> Result<UniPoly> {
    if n < 1 {
        return invalid(format!("Fibonacci index must be >= 1, got {n}"));
    }
    Ok(fibonacci_seq(n as usize).pop().unwrap())
}

/// Lucas polynomial `L_n`, `n >= 1`.
pub fn lucas_poly(n: i64) -> Result<UniPoly> {
    if n < 1 {
        return invalid(format!("Lucas index must be >= 1, got {n}"));
    }
    Ok(lucas_seq(n as usize).pop().unwrap())
}

/// `F_n` from the binomial sum over `C(n-j-1, j) x^(n-2j-1)`.
pub fn fibonacci_explicit(n: i64) -> Result<UniPoly> {
    if n < 1 {
        return invalid(format!("Fibonacci index must be >= 1, got {n}"));
    }
    let mut p = UniPoly::zero();
    for j in 0..=((n - 1) / 2) {
        p = &p + &UniPoly::monomial(rat_int(&binomial(n - j - 1, j)), (n - 2 * j - 1) as usize);
    }
    Ok(p)
}

/// `L_n` from the sum over `n/(n-j) C(n-j, j) x^(n-2j)`.
pub fn lucas_explicit(n: i64) -> Result<UniPoly> {
    if n < 1 {
        return invalid(format!("Lucas index must be >= 1, got {n}"));
    }
    let mut p = UniPoly::zero();
    for j in 0..=(n / 2) {
        let c = ratio(n, n - j) * rat_int(&binomial(n - j, j));
        p = &p + &UniPoly::monomial(c, (n - 2 * j) as usize);
    }
    Ok(p)
}

/// `L^Inv_n(x) = x^n L_n(1/x)`.
pub fn lucas_inv(n: i64) -> Result<UniPoly> {
    lucas_poly(n)?.reversed(n as usize)
}

/// `F^Inv_n(x) = x^(n-1) F_n(1/x)`.
pub fn fibonacci_inv(n: i64) -> Result<UniPoly> {
    fibonacci_poly(n)?.reversed(n as usize - 1)
}

/// `T_k(n) = C(n+k+1, 2k+1) + C(n+k, 2k+1)`.
pub fn t_coeff(k: i64, n: i64) -> Integer {
    binomial(n + k + 1, 2 * k + 1) + binomial(n + k, 2 * k + 1)
}

/// `U_k(n) = C(n+k, 2k) + C(n+k-1, 2k)`; `U_0(n) = 2`.
pub fn u_coeff(k: i64, n: i64) -> Integer {
    binomial(n + k, 2 * k) + binomial(n + k - 1, 2 * k)
}

/// `T_k(n) = (2n+1)/(2k+1) C(n+k, 2k)`.
pub fn t_coeff_closed(k: i64, n: i64) -> Rational {
    ratio(2 * n + 1, 2 * k + 1) * rat_int(&binomial(n + k, 2 * k))
}

/// `U_k(n) = (n/k) C(n+k-1, 2k-1)` for `k >= 1`, and 2 at `k = 0`.
pub fn u_coeff_closed(k: i64, n: i64) -> Rational {
    if k == 0 {
        rat(2)
    } else {
        ratio(n, k) * rat_int(&binomial(n + k - 1, 2 * k - 1))
    }
}

fn base_family(tag: FamilyTag, n: i64) -> UniPoly {
    let coeffs: Vec<Integer> = (0..=n)
        .map(|k| match tag {
            FamilyTag::P => t_coeff(k, n),
            FamilyTag::Q => u_coeff(k, n),
            FamilyTag::ScriptP => binomial(n + k, 2 * k),
            FamilyTag::ScriptQ => binomial(n + k - 1, 2 * k - 1),
            _ => unreachable!(),
        })
        .collect();
    UniPoly::from_integers(&coeffs)
}

/// Member `n >= 0` of a family.
pub fn family_poly(tag: FamilyTag, n: i64) -> Result<UniPoly> {
    if n < 0 {
        return invalid(format!("family index must be >= 0, got {n}"));
    }
    let p = base_family(tag.base(), n);
    if tag.is_inverse() {
        p.reversed(n as usize)
    } else {
        Ok(p)
    }
}

/// Reversal of `p` padded to degree `hint`.
pub fn inverse_variant(p: &UniPoly, hint: usize) -> Result<UniPoly> {
    p.reversed(hint)
}

/// Family member read off a Lucas or Fibonacci polynomial.
///
/// `x P_n(x^2) = L_{2n+1}`, `Q_n(x^2) = L_{2n}`, `ScriptP_n(x^2) = F_{2n+1}`
/// and `ScriptQ_n(x^2) = x F_{2n}` (the last for `n >= 1`).
pub fn family_via_lucas(tag: FamilyTag, n: i64) -> Result<UniPoly> {
    if n < 0 {
        return invalid(format!("family index must be >= 0, got {n}"));
    }
    let nn = n as usize;
    let (src, offset) = match tag.base() {
        FamilyTag::P => (lucas_seq(2 * nn + 1)[2 * nn + 1].clone(), 1),
        FamilyTag::Q => (lucas_seq(2 * nn)[2 * nn].clone(), 0),
        FamilyTag::ScriptP => (fibonacci_seq(2 * nn + 1)[2 * nn + 1].clone(), 0),
        FamilyTag::ScriptQ => {
            if n == 0 {
                return invalid("ScriptQ_0 is a convention, not a Fibonacci image");
            }
            (&UniPoly::x() * &fibonacci_seq(2 * nn)[2 * nn], 0)
        }
        _ => unreachable!(),
    };
    let coeffs: Vec<Rational> = (0..=nn).map(|k| src.coeff(2 * k + offset)).collect();
    let p = UniPoly::new(coeffs);
    if tag.is_inverse() {
        p.reversed(nn)
    } else {
        Ok(p)
    }
}

fn square_arg(p: &UniPoly) -> UniPoly {
    p.compose(&UniPoly::from_ints(&[0, 0, 1]))
}

/// Check the Lucas/Fibonacci links and their reversed analogues.
pub fn verify_lucas_links(n_max: i64) -> IdentityReport {
    let mut rep = IdentityReport::new("lucas-links");
    let x = UniPoly::x();
    let luc = lucas_seq(2 * n_max.max(0) as usize + 1);
    let fib = fibonacci_seq(2 * n_max.max(0) as usize + 1);
    for n in 0..=n_max {
        let nn = n as usize;
        let fam = |t| family_poly(t, n).unwrap();
        let ps = || format!("n={n}");
        rep.check("xP_n(x^2)=L_{2n+1}", ps, &(&x * &square_arg(&fam(FamilyTag::P))), &luc[2 * nn + 1]);
        rep.check("Q_n(x^2)=L_{2n}", ps, &square_arg(&fam(FamilyTag::Q)), &luc[2 * nn]);
        rep.check("ScriptP_n(x^2)=F_{2n+1}", ps, &square_arg(&fam(FamilyTag::ScriptP)), &fib[2 * nn + 1]);
        let linv = |i: usize| luc[i].reversed(i).unwrap();
        let finv = |i: usize| fib[i].reversed(i - 1).unwrap();
        rep.check("PInv_n(x^2)=LInv_{2n+1}", ps, &square_arg(&fam(FamilyTag::PInv)), &linv(2 * nn + 1));
        rep.check("ScriptPInv_n(x^2)=FInv_{2n+1}", ps, &square_arg(&fam(FamilyTag::ScriptPInv)), &finv(2 * nn + 1));
        if n >= 1 {
            rep.check("QInv_n(x^2)=LInv_{2n}", ps, &square_arg(&fam(FamilyTag::QInv)), &linv(2 * nn));
            rep.check("ScriptQ_n(x^2)=xF_{2n}", ps, &square_arg(&fam(FamilyTag::ScriptQ)), &(&x * &fib[2 * nn]));
            rep.check("ScriptQInv_n(x^2)=FInv_{2n}", ps, &square_arg(&fam(FamilyTag::ScriptQInv)), &finv(2 * nn));
        }
        for tag in FamilyTag::ALL {
            if n == 0 && tag.base() == FamilyTag::ScriptQ {
                continue;
            }
            rep.check("family coefficients agree across routes", || format!("{tag} n={n}"), &fam(tag), &family_via_lucas(tag, n).unwrap());
        }
    }
    rep
}

/// Exact coefficient list of a family member as integers.
pub fn family_integer_coeffs(tag: FamilyTag, n: i64) -> Result<Vec<Integer>> {
    let p = family_poly(tag, n)?;
    p.integer_coeffs()
        .ok_or_else(|| Error::InvalidArgument("non-integral family coefficients".into()))
}

/// True when every coefficient of `p` is a nonnegative integer.
pub fn has_natural_coeffs(p: &UniPoly) -> bool {
    p.coeffs()
        .iter()
        .all(|c| c.is_integer() && (c.is_zero() || c > &Rational::zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fp(tag: FamilyTag, n: i64) -> UniPoly {
        family_poly(tag, n).unwrap()
    }

    #[test]
    fn fibonacci_and_lucas_examples() {
        assert_eq!(fibonacci_poly(5).unwrap(), UniPoly::from_ints(&[1, 0, 3, 0, 1]));
        assert_eq!(fibonacci_poly(6).unwrap().eval_int(1), rat(8));
        assert_eq!(lucas_poly(3).unwrap(), UniPoly::from_ints(&[0, 3, 0, 1]));
        assert_eq!(lucas_poly(4).unwrap().eval_int(1), rat(7));
        assert!(fibonacci_poly(0).is_err());
        assert!(lucas_poly(0).is_err());
    }

    #[test]
    fn explicit_sums_match_recurrence() {
        for n in 1..=20 {
            assert_eq!(fibonacci_explicit(n).unwrap(), fibonacci_poly(n).unwrap());
            assert_eq!(lucas_explicit(n).unwrap(), lucas_poly(n).unwrap());
        }
    }

    #[test]
    fn family_examples() {
        assert_eq!(fp(FamilyTag::P, 3), UniPoly::from_ints(&[7, 14, 7, 1]));
        assert_eq!(fp(FamilyTag::PInv, 3), UniPoly::from_ints(&[1, 7, 14, 7]));
        assert_eq!(fp(FamilyTag::Q, 3), UniPoly::from_ints(&[2, 9, 6, 1]));
        assert_eq!(fp(FamilyTag::QInv, 3), UniPoly::from_ints(&[1, 6, 9, 2]));
        assert_eq!(fp(FamilyTag::P, 2), UniPoly::from_ints(&[5, 5, 1]));
        assert_eq!(fp(FamilyTag::P, 1), UniPoly::from_ints(&[3, 1]));
        assert_eq!(fp(FamilyTag::ScriptP, 2), UniPoly::from_ints(&[1, 3, 1]));
        assert_eq!(fp(FamilyTag::ScriptQ, 0), UniPoly::one());
        assert_eq!(fp(FamilyTag::Q, 0), UniPoly::from_ints(&[2]));
        assert_eq!(fp(FamilyTag::QInv, 0), UniPoly::from_ints(&[2]));
        assert!(family_poly(FamilyTag::P, -1).is_err());
    }

    #[test]
    fn script_q_inverse_degree() {
        for n in 1..=10 {
            assert_eq!(fp(FamilyTag::ScriptQInv, n).degree(), Some(n as usize - 1));
        }
    }

    #[test]
    fn t_u_closed_forms_and_differences() {
        for n in 0..=15i64 {
            for k in 0..=n {
                assert_eq!(rat_int(&t_coeff(k, n)), t_coeff_closed(k, n));
                assert_eq!(rat_int(&u_coeff(k, n)), u_coeff_closed(k, n));
                if n >= 1 {
                    assert_eq!(t_coeff(k, n) - t_coeff(k, n - 1), u_coeff(k, n));
                    if k >= 1 {
                        assert_eq!(u_coeff(k, n) - u_coeff(k, n - 1), t_coeff(k - 1, n - 1));
                    }
                }
            }
        }
        assert_eq!(u_coeff(0, 0), crate::exact::int(2));
    }

    #[test]
    fn lucas_links_hold() {
        let rep = verify_lucas_links(12);
        assert!(rep.passed(), "{:?}", rep.first_failure);
    }

    #[test]
    fn tag_parsing() {
        for t in FamilyTag::ALL {
            assert_eq!(t.to_string().parse::<FamilyTag>().unwrap(), t);
        }
        assert!("R".parse::<FamilyTag>().is_err());
    }

    proptest! {
        #[test]
        fn prop_inverse_is_involution(tag in proptest::sample::select(FamilyTag::BASE.to_vec()), n in 0i64..20) {
            let p = fp(tag, n);
            let inv = fp(tag.inverse(), n);
            prop_assert_eq!(inverse_variant(&inv, n as usize).unwrap(), p.clone());
            prop_assert_eq!(inverse_variant(&p, n as usize).unwrap(), inv);
        }

        #[test]
        fn prop_natural_coefficients(tag in proptest::sample::select(FamilyTag::ALL.to_vec()), n in 0i64..20) {
            prop_assert!(has_natural_coeffs(&fp(tag, n)));
        }
    }
}
