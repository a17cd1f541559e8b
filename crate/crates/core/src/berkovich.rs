//! Nonarchimedean seminorms on `k[T]` extending the trivial absolute value of
//! ℚ, and their restriction to the monomials of the line `T1 + T2 + 1 = 0`.

use std::fmt;

use serde::Serialize;

use crate::poly::{FieldPolynomial, MonoidSignature, Monomial};
use crate::scalar::{Rational, TropValue};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub enum SeminormDescriptor {
    /// `w_0(g) = 1` for `g != 0`.
    TrivialNorm,
    /// `w_{f,r}(f^i g) = r^i` for `g` prime to `f`, `0 < r < 1`.
    FAdic { f: FieldPolynomial, r: Rational },
    /// `w_{f,0}(g) = 0` if `f | g`, else 1.
    FAdicZero { f: FieldPolynomial },
    /// `w_{∞,r}(g) = r^(-deg g)`, `0 < r < 1`.
    InfinityAdic { r: Rational },
}

fn check_radius(r: &Rational) -> Result<()> {
    if r.is_zero() || r.is_negative() || *r >= Rational::one() {
        return Err(Error::InvalidDescriptor(format!("radius {r} outside (0, 1)")));
    }
    Ok(())
}

fn check_center(f: &FieldPolynomial) -> Result<()> {
    if f.sig().num_vars != 1 || f.sig().laurent {
        return Err(Error::InvalidDescriptor("center must be a polynomial in one variable".into()));
    }
    match f.leading() {
        Some((m, c)) if m.degree() >= 1 && c.is_one() => Ok(()),
        _ => Err(Error::InvalidDescriptor(format!("center {f} must be monic and nonconstant"))),
    }
}

impl SeminormDescriptor {
    pub fn f_adic(f: FieldPolynomial, r: Rational) -> Result<Self> {
        check_center(&f)?;
        check_radius(&r)?;
        Ok(SeminormDescriptor::FAdic { f, r })
    }

    pub fn f_adic_zero(f: FieldPolynomial) -> Result<Self> {
        check_center(&f)?;
        Ok(SeminormDescriptor::FAdicZero { f })
    }

    pub fn infinity_adic(r: Rational) -> Result<Self> {
        check_radius(&r)?;
        Ok(SeminormDescriptor::InfinityAdic { r })
    }

    pub fn label(&self) -> String {
        match self {
            SeminormDescriptor::TrivialNorm => "w_0".into(),
            SeminormDescriptor::FAdic { f, r } => format!("w_{{{f},{r}}}"),
            SeminormDescriptor::FAdicZero { f } => format!("w_{{{f},0}}"),
            SeminormDescriptor::InfinityAdic { r } => format!("w_{{inf,{r}}}"),
        }
    }
}

impl fmt::Display for SeminormDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl fmt::Debug for SeminormDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Largest `i` with `f^i | g`; `g` must be nonzero.
pub fn multiplicity(f: &FieldPolynomial, g: &FieldPolynomial) -> Result<u32> {
    let mut g = g.clone();
    let mut i = 0;
    loop {
        let (q, rem) = g.div_rem_univariate(f)?;
        if !rem.is_zero() {
            return Ok(i);
        }
        g = q;
        i += 1;
    }
}

pub fn eval_seminorm(w: &SeminormDescriptor, g: &FieldPolynomial) -> Result<TropValue> {
    if g.is_zero() {
        return Ok(TropValue::zero());
    }
    match w {
        SeminormDescriptor::TrivialNorm => Ok(TropValue::one()),
        SeminormDescriptor::FAdic { f, r } => TropValue::new(r.pow(i64::from(multiplicity(f, g)?))?),
        SeminormDescriptor::FAdicZero { f } => {
            Ok(if multiplicity(f, g)? > 0 { TropValue::zero() } else { TropValue::one() })
        }
        SeminormDescriptor::InfinityAdic { r } => {
            let deg = g.degree().expect("nonzero polynomial");
            TropValue::new(r.pow(-deg)?)
        }
    }
}

/// `w(g / h) = w(g) / w(h)`; `h` must not be killed by `w`.
pub fn eval_rational_function(w: &SeminormDescriptor, g: &FieldPolynomial, h: &FieldPolynomial) -> Result<TropValue> {
    let denom = eval_seminorm(w, h)?;
    if denom.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(&eval_seminorm(w, g)? * &denom.recip()?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolyViolation {
    pub axiom: &'static str,
    pub g: String,
    pub h: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SeminormCheck {
    pub checked: usize,
    pub violations: Vec<PolyViolation>,
}

impl SeminormCheck {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Exact multiplicativity and ultrametric checks on polynomial pairs, plus
/// `w(c) = 1` on the nonzero constants that appear.
pub fn check_is_seminorm(
    w: &SeminormDescriptor,
    samples: &[(FieldPolynomial, FieldPolynomial)],
) -> Result<SeminormCheck> {
    let mut report = SeminormCheck::default();
    let mut fail = |axiom, g: &FieldPolynomial, h: &FieldPolynomial| {
        report.violations.push(PolyViolation { axiom, g: g.to_string(), h: h.to_string() })
    };
    for (g, h) in samples {
        let (wg, wh) = (eval_seminorm(w, g)?, eval_seminorm(w, h)?);
        if eval_seminorm(w, &g.mul(h))? != &wg * &wh {
            fail("multiplicative", g, h);
        }
        if eval_seminorm(w, &g.add(h))? > wg.clone().max(wh) {
            fail("ultrametric", g, h);
        }
        let c = FieldPolynomial::constant(g.sig(), g.coeff(&Monomial::one(1)));
        if !c.is_zero() && !eval_seminorm(w, &c)?.is_one() {
            fail("extends trivial absolute value", &c, &c);
        }
    }
    report.checked = samples.len();
    Ok(report)
}

/// Verdict of the degree ≤ 3 irreducibility lint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum IrreducibilityLint {
    Irreducible,
    Reducible,
    /// Degree above 3 without a rational root: not decided.
    Undecided,
}

/// Rational-root test: decisive up to degree 3, a hint beyond.
pub fn irreducibility_lint(f: &FieldPolynomial) -> Result<IrreducibilityLint> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};

    let deg = f.degree().unwrap_or(0);
    if deg <= 0 {
        return Ok(IrreducibilityLint::Reducible);
    }
    if deg == 1 {
        return Ok(IrreducibilityLint::Irreducible);
    }
    // Clear denominators, then candidates p/q with p | a_0 and q | a_n.
    let lcm = f.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let ints = f.scale(&Rational::from_integer(lcm));
    let a0 = ints.coeff(&Monomial::one(1)).numer().abs();
    if a0.is_zero() {
        return Ok(IrreducibilityLint::Reducible);
    }
    let an = ints.leading().expect("nonzero").1.numer().abs();
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let mut out = Vec::new();
        let mut d = BigInt::one();
        while &d * &d <= *n {
            if (n % &d).is_zero() {
                out.push(d.clone());
                out.push(n / &d);
            }
            d += 1;
        }
        out
    };
    for p in divisors(&a0) {
        for q in divisors(&an) {
            for sign in [1, -1] {
                let x = Rational::new(&p * sign, q.clone())?;
                if f.eval_univariate(&x)?.is_zero() {
                    return Ok(IrreducibilityLint::Reducible);
                }
            }
        }
    }
    Ok(if deg <= 3 { IrreducibilityLint::Irreducible } else { IrreducibilityLint::Undecided })
}

/// The seminorm restricted to the monomials `T1^e1 T2^e2` of
/// `R = k[T1, T2] / (T1 + T2 + 1)`, identified with `k[T]` via
/// `T1 -> T`, `T2 -> -T - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LineTropImage {
    pub descriptor: String,
    pub nontrivial: bool,
    pub formula: String,
    /// `(e1, e2, w(T^e1 (-T-1)^e2))` for `0 <= e1, e2 <= 3`.
    pub table: Vec<(u32, u32, TropValue)>,
}

pub fn line_monomial_image(e1: u32, e2: u32) -> FieldPolynomial {
    let sig = MonoidSignature::polynomial(1);
    let t = FieldPolynomial::from_terms(sig, [(Monomial::new(vec![1]), Rational::one())]).expect("valid");
    let t2 = t.add(&FieldPolynomial::constant(sig, Rational::one())).neg();
    t.pow(e1).mul(&t2.pow(e2))
}

fn power_formula(r: &Rational, k1: i64, k2: i64) -> String {
    let exponent = match (k1, k2) {
        (0, 0) => return "1".into(),
        (k, 0) => scaled("e1", k),
        (0, k) => scaled("e2", k),
        (a, b) => format!("{}{}{}", scaled("e1", a), if b < 0 { "" } else { "+" }, scaled("e2", b)),
    };
    format!("({r})^({exponent})")
}

fn scaled(var: &str, k: i64) -> String {
    match k {
        1 => var.into(),
        -1 => format!("-{var}"),
        k => format!("{k}*{var}"),
    }
}

pub fn line_trop_image(w: &SeminormDescriptor) -> Result<LineTropImage> {
    let mut table = Vec::new();
    for e1 in 0..=3 {
        for e2 in 0..=3 {
            table.push((e1, e2, eval_seminorm(w, &line_monomial_image(e1, e2))?));
        }
    }
    let nontrivial = table.iter().any(|(_, _, v)| !v.is_one());
    let formula = match w {
        SeminormDescriptor::TrivialNorm => "1".to_string(),
        SeminormDescriptor::FAdic { f, r } => {
            let k1 = multiplicity(f, &line_monomial_image(1, 0))?;
            let k2 = multiplicity(f, &line_monomial_image(0, 1))?;
            power_formula(r, k1.into(), k2.into())
        }
        SeminormDescriptor::FAdicZero { f } => {
            let k1 = multiplicity(f, &line_monomial_image(1, 0))? > 0;
            let k2 = multiplicity(f, &line_monomial_image(0, 1))? > 0;
            match (k1, k2) {
                (false, false) => "1".into(),
                (true, false) => "0 if e1 > 0 else 1".into(),
                (false, true) => "0 if e2 > 0 else 1".into(),
                (true, true) => "0 if e1 + e2 > 0 else 1".into(),
            }
        }
        SeminormDescriptor::InfinityAdic { r } => power_formula(r, -1, -1),
    };
    Ok(LineTropImage { descriptor: w.label(), nontrivial, formula, table })
}

/// The descriptors reported by the analytification table.
pub fn default_catalog() -> Vec<SeminormDescriptor> {
    let sig = MonoidSignature::polynomial(1);
    let poly = |s: &str| crate::poly::parse_polynomial(s, sig).expect("catalog literal");
    let half = Rational::ratio(1, 2);
    let mut out = vec![SeminormDescriptor::TrivialNorm];
    for f in ["T1", "T1 + 1", "T1 - 2", "T1^2 + 1", "T1^2 + T1 + 1"] {
        out.push(SeminormDescriptor::f_adic(poly(f), half.clone()).expect("catalog entry"));
    }
    for f in ["T1", "T1 + 1", "T1 - 2"] {
        out.push(SeminormDescriptor::f_adic_zero(poly(f)).expect("catalog entry"));
    }
    out.push(SeminormDescriptor::infinity_adic(half).expect("catalog entry"));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn p(s: &str) -> FieldPolynomial {
        parse_polynomial(s, MonoidSignature::polynomial(1)).unwrap()
    }

    #[test]
    fn catalog_values() {
        let w = SeminormDescriptor::f_adic(p("T1"), Rational::ratio(1, 2)).unwrap();
        assert_eq!(eval_seminorm(&w, &p("T1^3 + T1^2")).unwrap(), TropValue::ratio(1, 4));
        let w0 = SeminormDescriptor::TrivialNorm;
        assert_eq!(eval_seminorm(&w0, &p("5*T1^7 - 3")).unwrap(), TropValue::one());
        assert_eq!(
            eval_seminorm(&w0, &FieldPolynomial::zero(MonoidSignature::polynomial(1))).unwrap(),
            TropValue::zero()
        );
        let inf = SeminormDescriptor::infinity_adic(Rational::ratio(1, 2)).unwrap();
        assert_eq!(eval_seminorm(&inf, &p("T1^3")).unwrap(), TropValue::from(8));
        let zero = SeminormDescriptor::f_adic_zero(p("T1 + 1")).unwrap();
        assert_eq!(eval_seminorm(&zero, &p("T1^2 - 1")).unwrap(), TropValue::zero());
        assert_eq!(eval_seminorm(&zero, &p("T1^2 + 1")).unwrap(), TropValue::one());
    }

    #[test]
    fn descriptor_guards() {
        assert!(SeminormDescriptor::f_adic(p("T1"), Rational::ratio(3, 2)).is_err());
        assert!(SeminormDescriptor::f_adic(p("T1"), Rational::one()).is_err());
        assert!(SeminormDescriptor::f_adic(p("2*T1"), Rational::ratio(1, 2)).is_err());
        assert!(SeminormDescriptor::f_adic(p("3"), Rational::ratio(1, 2)).is_err());
        assert!(SeminormDescriptor::infinity_adic(Rational::zero()).is_err());
    }

    #[test]
    fn rational_functions() {
        let w = SeminormDescriptor::f_adic(p("T1"), Rational::ratio(1, 3)).unwrap();
        assert_eq!(eval_rational_function(&w, &p("T1 + 1"), &p("T1^2")).unwrap(), TropValue::from(9));
        let z = SeminormDescriptor::f_adic_zero(p("T1")).unwrap();
        assert!(eval_rational_function(&z, &p("1"), &p("T1")).is_err());
    }

    #[test]
    fn lint() {
        assert_eq!(irreducibility_lint(&p("T1^2 + 1")).unwrap(), IrreducibilityLint::Irreducible);
        assert_eq!(irreducibility_lint(&p("T1^2 - 1/4")).unwrap(), IrreducibilityLint::Reducible);
        assert_eq!(irreducibility_lint(&p("T1^3 - 2")).unwrap(), IrreducibilityLint::Irreducible);
        assert_eq!(irreducibility_lint(&p("T1^4 + 4")).unwrap(), IrreducibilityLint::Undecided);
        assert_eq!(irreducibility_lint(&p("T1^2 + T1")).unwrap(), IrreducibilityLint::Reducible);
    }

    #[test]
    fn line_images() {
        let half = Rational::ratio(1, 2);
        let t = line_trop_image(&SeminormDescriptor::f_adic(p("T1"), half.clone()).unwrap()).unwrap();
        assert!(t.nontrivial);
        assert_eq!(t.formula, "(1/2)^(e1)");
        assert!(t.table.iter().all(|(e1, _, v)| *v == TropValue::ratio(1, 2).pow(i64::from(*e1)).unwrap()));

        let c = line_trop_image(&SeminormDescriptor::f_adic(p("T1^2 + T1 + 1"), half.clone()).unwrap()).unwrap();
        assert!(!c.nontrivial);

        let inf = line_trop_image(&SeminormDescriptor::infinity_adic(half.clone()).unwrap()).unwrap();
        assert!(inf.nontrivial);
        assert_eq!(inf.formula, "(1/2)^(-e1-e2)");
        assert!(inf.table.iter().all(|(e1, e2, v)| *v == TropValue::from(2).pow(i64::from(e1 + e2)).unwrap()));

        let t2 = line_trop_image(&SeminormDescriptor::f_adic(p("T1 + 1"), half).unwrap()).unwrap();
        assert_eq!(t2.formula, "(1/2)^(e2)");
    }
}
