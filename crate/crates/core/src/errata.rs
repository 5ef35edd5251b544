//! Catalogue of discrepancies between the published formulas and the values
//! this library computes, each with an executable evidence check.

use num_traits::Zero;
use serde::Serialize;

use crate::basis::shifted_expansion;
use crate::exact::{binomial, factorial, format_rational, int, ipow, rat, rat_int, ratio, sign, Rational, UniPoly};
use crate::fermat::{telescoped_power, theorem3_value, TelescopeKind, Theorem3Kind};
use crate::interp::{odd_principal_coeffs_in_a, principal_poly};
use crate::polyfam::{family_poly, FamilyTag};
use crate::powersum::{bernoulli, cp_rfold, faulhaber, inner_poly, rfold_sum, CpKind, InnerKind};
use crate::stirling::{g_coeff, legendre_stirling2_explicit, p_r_closed, p_r_poly, p_r_reduced};

/// Outcome of an evidence check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub confirmed: bool,
    pub detail: String,
}

/// One published statement that does not hold as written.
#[derive(Debug, Clone, Serialize)]
pub struct Erratum {
    pub id: &'static str,
    pub topic: &'static str,
    pub printed: &'static str,
    pub corrected: &'static str,
    #[serde(skip)]
    pub check: fn() -> Evidence,
}

impl Erratum {
    pub fn evidence(&self) -> Evidence {
        (self.check)()
    }
}

fn fam(tag: FamilyTag, n: i64) -> UniPoly {
    family_poly(tag, n).expect("non-negative index")
}

fn ev(confirmed: bool, detail: String) -> Evidence {
    Evidence { confirmed, detail }
}

fn telescoped_total() -> Evidence {
    let parts: Vec<Rational> = [6, 12, 20, 30].iter().map(|&u| fam(FamilyTag::PInv, 2).eval_int(u)).collect();
    let total: Rational = parts.iter().sum();
    let closed = telescoped_power(TelescopeKind::OddDiff, 2, 6, 2);
    let detail = format!(
        "PInv_2 at 6, 12, 20, 30 = {}; sum = {}; 6^5 - 2^5 = {}",
        parts.iter().map(format_rational).collect::<Vec<_>>().join(", "),
        format_rational(&total),
        ipow(6, 5) - ipow(2, 5)
    );
    ev(total == rat(7744) && total != rat(7433) && closed == Ok(int(7744)), detail)
}

fn q0_inverse() -> Evidence {
    let q0 = fam(FamilyTag::Q, 0);
    let q0inv = fam(FamilyTag::QInv, 0);
    let sum_form = theorem3_value(Theorem3Kind::EvenSum, 0, 5);
    let detail = format!(
        "Q_0 = {q0}; reversal = {q0inv}; (a+1)^0 + a^0 at a = 5 gives {}",
        sum_form.as_ref().map(|v| v.to_string()).unwrap_or_else(|e| e.to_string())
    );
    ev(q0inv == UniPoly::from_ints(&[2]) && sum_form == Ok(int(2)), detail)
}

fn q_inverse_exponent() -> Evidence {
    let printed_example = UniPoly::from_ints(&[1, 6, 9, 2]);
    let q3inv = fam(FamilyTag::QInv, 3);
    let by_reversal = fam(FamilyTag::Q, 3).reversed(3).expect("degree 3");
    ev(
        q3inv == printed_example && by_reversal == printed_example,
        format!("sum_k U_k(3) x^(3-k) = {q3inv}, matching the worked example; with a free m the definition has no fixed degree"),
    )
}

fn pr_closed_sign() -> Evidence {
    let mut mismatched = Vec::new();
    let mut ok = true;
    for r in 1..=6u32 {
        let ri = r as i64;
        let printed = (0..=ri).fold(UniPoly::zero(), |acc, i| {
            let c = rat(sign(ri)) * rat_int(&g_coeff(2 * ri, ri - i).expect("in range"));
            &acc + &UniPoly::monomial(c, (i * (i + 1) / 2) as usize)
        });
        let table = p_r_poly(r).expect("divisible");
        if printed != table {
            mismatched.push(r);
        }
        ok &= p_r_closed(r).ok() == Some(table);
    }
    ev(
        ok && mismatched.len() == 6,
        format!("uniform sign (-1)^r disagrees with the table for r = {mismatched:?}; (-1)^(r+i) agrees for r = 1..6"),
    )
}

fn pr_at_minus_one() -> Evidence {
    let vals: Vec<(u32, Rational)> = (1..=8u32).map(|r| (r, p_r_poly(r).expect("divisible").eval_int(-1))).collect();
    let all_signed = vals.iter().all(|(r, v)| *v == rat_int(&ipow(-2, *r)));
    let even_fail = vals.iter().filter(|(r, _)| r % 2 == 0).all(|(r, v)| *v != -rat_int(&ipow(2, *r)));
    let detail = vals.iter().map(|(r, v)| format!("r={r}: {}", format_rational(v))).collect::<Vec<_>>().join(", ");
    ev(all_signed && even_fail, format!("tabulated polynomial at -1: {detail}"))
}

fn pr_table_undivided() -> Evidence {
    let mut ok = true;
    let mut degs = Vec::new();
    for r in 1..=6u32 {
        let n = p_r_poly(r).expect("divisible");
        let q = p_r_reduced(r).expect("divisible");
        degs.push((r, n.degree().unwrap_or(0), q.degree().unwrap_or(0)));
        ok &= n.degree() == Some((r * (r + 1) / 2) as usize) && q.degree() == Some((r * (r - 1) / 2) as usize);
    }
    ev(ok, format!("(r, tabulated degree, quotient degree): {degs:?}"))
}

fn alternating_argument() -> Evidence {
    let (m, a, b) = (1i64, 4i64, 1i64);
    let literal_odd: Rational = (b..a)
        .map(|j| rat(sign(a + j - 1)) * rat(2 * j + 1) * fam(FamilyTag::ScriptPInv, m).eval_int(a * (a + 1)))
        .sum();
    let literal_even: Rational = (b..a).map(|j| rat(sign(a + j - 1)) * fam(FamilyTag::QInv, m).eval_int(a * (a + 1))).sum();
    let want_odd = int(64) + int(sign(a + b - 1));
    let want_even = int(16) + int(sign(a + b - 1));
    let fixed_odd = telescoped_power(TelescopeKind::OddAlt, m, a, b);
    let fixed_even = telescoped_power(TelescopeKind::EvenAlt, m, a, b);
    ev(
        literal_odd != rat_int(&want_odd) && literal_even != rat_int(&want_even) && fixed_odd == Ok(want_odd.clone()) && fixed_even == Ok(want_even.clone()),
        format!(
            "m=1 a=4 b=1: argument a(a+1) gives {} and {}; argument j(j+1) gives {want_odd} and {want_even}",
            format_rational(&literal_odd),
            format_rational(&literal_even)
        ),
    )
}

fn ps_explicit_sign() -> Evidence {
    let (k, r) = (2i64, 1i64);
    let printed: Rational = (1..=r)
        .map(|i| {
            rat(sign(i + k)) * Rational::new(int(2 * i + 1) * num_traits::pow(int(i * i + i), k as usize), factorial((i + r + 1) as u64) * factorial((r - i) as u64))
        })
        .sum();
    let fixed = legendre_stirling2_explicit(k, r);
    ev(printed == rat(-2) && fixed == rat(2), format!("PS(2,1): sign (-1)^(i+k) gives {}, (-1)^(i+r) gives {}", format_rational(&printed), format_rational(&fixed)))
}

fn shifted_sign() -> Evidence {
    let (m, r) = (4i64, 1i64);
    let y = UniPoly::shifted_x(2);
    let printed = (0..=r).fold(UniPoly::zero(), |acc, j| {
        let c = rat(sign(r)) * rat_int(&binomial(r, j));
        &acc + &(&y.pow((r - j) as u32) * &fam(FamilyTag::P, m - r - j)).scale(&c)
    });
    let fixed = shifted_expansion(FamilyTag::P, m, r).expect("m >= 2r");
    let want = fam(FamilyTag::P, m);
    ev(printed != want && fixed == want, format!("m=4 r=1: sign (-1)^r gives {printed}, (-1)^j gives {fixed}, P_4 = {want}"))
}

fn cp_relation_signs() -> Evidence {
    let (m, r) = (2i64, 1u32);
    let cp = |k, m| cp_rfold(k, m, r).expect("valid");
    let np = cp(CpKind::NP, m);
    let q = cp(CpKind::Q, m);
    let plus_np = &cp(CpKind::Q, m + 1) + &cp(CpKind::Q, m);
    let minus_np = &cp(CpKind::Q, m + 1) - &cp(CpKind::Q, m);
    let plus_q = &cp(CpKind::P, m) + &cp(CpKind::P, m - 1);
    let minus_q = &cp(CpKind::P, m) - &cp(CpKind::P, m - 1);
    ev(
        np != plus_np && np == minus_np && q != plus_q && q == minus_q,
        format!("m=2 r=1: sums with '+' fail, with '-' hold; Sigma C^nP_2 = {np}"),
    )
}

fn third_difference_index() -> Evidence {
    let (m, r) = (3i64, 1u32);
    let p = |k: i64| inner_poly(InnerKind::LowerP, k, r).expect("valid");
    let n_r = UniPoly::shifted_x(r as i64).scale(&ratio(1, r as i64 + 1));
    let lhs = &n_r * &inner_poly(InnerKind::LowerV, m, r).expect("valid");
    let third = |t: i64| &(&(&p(t + 1) - &p(t).scale(&rat(3))) + &p(t - 1).scale(&rat(3))) - &p(t - 2);
    let printed = third(m + 1);
    let fixed = third(m);
    ev(lhs != printed && lhs == fixed, "m=3 r=1: p_{m+2}-3p_{m+1}+3p_m-p_{m-1} fails; p_{m+1}-3p_m+3p_{m-1}-p_{m-2} holds".to_string())
}

fn two_fold_odd_display() -> Evidence {
    let (m, n) = (2i64, 3i64);
    let nn = rat(n);
    let v = ratio(n + 1, n * n);
    let npow = |e: i64| num_traits::pow(nn.clone(), e as usize);
    let lhs = rat(4 * m) * rfold_sum((2 * m - 1) as u32, 2).eval_int(n);
    let rhs_with = |tag: FamilyTag| {
        let mut s = Rational::zero();
        for j in 1..=m {
            s += rat_int(&binomial(2 * m, 2 * j - 1)) * npow(2 * j - 1) * fam(FamilyTag::PInv, j - 1).eval(&v) * bernoulli((2 * m - 2 * j + 1) as usize);
            let inner = rat(n + 2) * npow(2 * j - 1) * fam(tag, j).eval(&v) + rat(2) * faulhaber((2 * j) as usize).eval_int(n);
            s += rat_int(&binomial(2 * m, 2 * j)) * inner * bernoulli((2 * m - 2 * j) as usize);
        }
        s
    };
    let printed = rhs_with(FamilyTag::QInv);
    let fixed = rhs_with(FamilyTag::ScriptQInv);
    ev(
        printed != lhs && fixed == lhs,
        format!(
            "m=2 n=3: 4m Sigma^2 n^3 = {}; with QInv {}; with ScriptQInv {}",
            format_rational(&lhs),
            format_rational(&printed),
            format_rational(&fixed)
        ),
    )
}

fn alpha1_numerator() -> Evidence {
    let alpha = odd_principal_coeffs_in_a(2);
    let am1 = UniPoly::shifted_x(-1);
    let fixed = (&am1 * &UniPoly::from_ints(&[-3, 10, 10])).scale(&ratio(1, 36));
    let printed = (&am1 * &UniPoly::from_ints(&[3, -13, 10])).scale(&ratio(1, 36));
    let a7 = alpha[1].eval_int(7);
    ev(
        alpha[1] == fixed && alpha[1] != printed && a7 == ratio(557, 6),
        format!("alpha_1 = {}; at a = 7 this is {} = 5 * 557/30", alpha[1], format_rational(&a7)),
    )
}

fn even_principal_constant() -> Evidence {
    let f = principal_poly(7, 6).expect("a, k >= 1");
    let at3 = f.eval(&rat(3)).expect("x = 3 is not a pole");
    let folded = &f.body.eval(&rat(3)).expect("not a pole") + &(f.constant.clone() / rat(3));
    let want = rat_int(&ipow(7, 6));
    ev(
        at3 == want && folded != want,
        format!(
            "f_7^(6)(3) with standalone constant = {}; with the constant on x^-1 = {}",
            format_rational(&at3),
            format_rational(&folded)
        ),
    )
}

fn central_binomial_product() -> Evidence {
    let (m, k) = (3i64, 2i64);
    let prod: i64 = m * (1..k).map(|t| m * m - t * t).product::<i64>();
    let c = binomial(m + k - 1, 2 * k - 1);
    ev(
        int(prod) != c && int(prod) == &c * factorial((2 * k - 1) as u64),
        format!("m=3 k=2: C(4,3) = {c}, m(m^2-1) = {prod} = 3! * {c}"),
    )
}

fn script_q_boundary() -> Evidence {
    let x = UniPoly::x();
    let link = &x * &fam(FamilyTag::ScriptP, 0) == &fam(FamilyTag::ScriptQ, 1) - &fam(FamilyTag::ScriptQ, 0);
    let rec = fam(FamilyTag::ScriptQ, 2) == &(&UniPoly::shifted_x(2) * &fam(FamilyTag::ScriptQ, 1)) - &fam(FamilyTag::ScriptQ, 0);
    let even_diff = rat(11) * fam(FamilyTag::ScriptQInv, 0).eval_int(30) == rat(0);
    ev(
        !link && !rec && !even_diff,
        "with ScriptQ_0 = 1: xScriptP_0 != ScriptQ_1 - ScriptQ_0, the three-term recurrence fails at m = 0, and (2a+1) ScriptQInv_0 != 0".to_string(),
    )
}

/// Every recorded discrepancy.
pub fn errata() -> Vec<Erratum> {
    vec![
        Erratum {
            id: "telescoped-total",
            topic: "worked example: sum of PInv_2(j(j+1)) for j = 2..5",
            printed: "7433",
            corrected: "7744 = 6^5 - 2^5",
            check: telescoped_total,
        },
        Erratum {
            id: "q0-inverse",
            topic: "value of QInv_0",
            printed: "QInv_0 = 1",
            corrected: "QInv_0 = 2",
            check: q0_inverse,
        },
        Erratum {
            id: "q-inverse-exponent",
            topic: "definition of QInv_n",
            printed: "sum_k U_k(n) x^(m-k)",
            corrected: "sum_k U_k(n) x^(n-k)",
            check: q_inverse_exponent,
        },
        Erratum {
            id: "pr-closed-sign",
            topic: "closed form of p_r via g(2r, r-i)",
            printed: "(-1)^r sum_i g(2r, r-i) x^(i(i+1)/2)",
            corrected: "sum_i (-1)^(r+i) g(2r, r-i) x^(i(i+1)/2)",
            check: pr_closed_sign,
        },
        Erratum {
            id: "pr-at-minus-one",
            topic: "value of the tabulated p_r polynomial at x = -1",
            printed: "-2^r",
            corrected: "(-2)^r",
            check: pr_at_minus_one,
        },
        Erratum {
            id: "pr-table-undivided",
            topic: "tabulated (2r)! p_r(x)",
            printed: "degree r(r-1)/2",
            corrected: "table lists (x-1)^r (2r)! p_r(x), degree r(r+1)/2",
            check: pr_table_undivided,
        },
        Erratum {
            id: "alternating-argument",
            topic: "alternating telescoped sums",
            printed: "family evaluated at a(a+1)",
            corrected: "family evaluated at j(j+1)",
            check: alternating_argument,
        },
        Erratum {
            id: "ps-explicit-sign",
            topic: "explicit sum for Legendre-Stirling numbers of the second kind",
            printed: "(-1)^(i+k)",
            corrected: "(-1)^(i+r)",
            check: ps_explicit_sign,
        },
        Erratum {
            id: "shifted-expansion-sign",
            topic: "expansion of P_m over (x+2)^(r-j) P_(m-r-j)",
            printed: "(-1)^r",
            corrected: "(-1)^j",
            check: shifted_sign,
        },
        Erratum {
            id: "cp-relation-signs",
            topic: "relations between the r-fold C^P, C^Q and C^nP sums",
            printed: "C^nP_m = C^Q_(m+1) + C^Q_m and C^Q_m = C^P_m + C^P_(m-1)",
            corrected: "C^nP_m = C^Q_(m+1) - C^Q_m and C^Q_m = C^P_m - C^P_(m-1)",
            check: cp_relation_signs,
        },
        Erratum {
            id: "third-difference-index",
            topic: "v_m as a third difference of p",
            printed: "p_(m+2) - 3p_(m+1) + 3p_m - p_(m-1)",
            corrected: "p_(m+1) - 3p_m + 3p_(m-1) - p_(m-2)",
            check: third_difference_index,
        },
        Erratum {
            id: "two-fold-odd-display",
            topic: "4m Sigma^2 n^(2m-1) in the reversed families of v",
            printed: "QInv_j(v)",
            corrected: "ScriptQInv_j(v)",
            check: two_fold_odd_display,
        },
        Erratum {
            id: "alpha1-numerator",
            topic: "x(x+1) coefficient of the fifth-power principal polynomial",
            printed: "(a-1)(10a^2-13a+3)/36",
            corrected: "(a-1)(10a^2+10a-3)/36",
            check: alpha1_numerator,
        },
        Erratum {
            id: "even-principal-constant",
            topic: "constant of the even-power principal polynomial",
            printed: "(-1)^(a-1) added to the x^-1 coefficient",
            corrected: "(-1)^(a-1) is a standalone constant",
            check: even_principal_constant,
        },
        Erratum {
            id: "central-binomial-product",
            topic: "C(m+k-1, 2k-1) as a product",
            printed: "m prod_(t<k) (m^2 - t^2)",
            corrected: "m prod_(t<k) (m^2 - t^2) / (2k-1)!",
            check: central_binomial_product,
        },
        Erratum {
            id: "script-q-zero-boundary",
            topic: "identities involving ScriptQ_0 = 1",
            printed: "stated for all m >= 0 (or m >= 1)",
            corrected: "first-order link needs m >= 2, recurrence and even difference forms need m >= 1",
            check: script_q_boundary,
        },
    ]
}
