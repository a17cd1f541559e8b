//! Text grammar for polynomials.
//!
//! ```text
//! sum      := [sign] term { sign term }
//! sign     := '+' | '-'
//! term     := coeff [ ['*'] factor { ['*'] factor } ] | factor { ['*'] factor }
//! coeff    := int [ '/' int ] | '(' ['-'] int [ '/' int ] ')'
//! factor   := var [ '^' exponent ]
//! exponent := ['-'] int | '(' ['-'] int ')'
//! var      := 'T' int | 'x' | 'y' | 'z'
//! ```
//!
//! `x, y, z` stand for `T1, T2, T3` when the signature has at most three variables.

use num_bigint::BigInt;

use super::formal_sum::{FormalSum, Term, TropFormalSum};
use super::{FieldPolynomial, MonoidSignature, Monomial};
use crate::scalar::Rational;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("integer {n}"),
            Tok::Var(v) => format!("variable {v}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            c if c.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push((Tok::Int(digits.parse().expect("ascii digits")), start));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Var(chars[start..i].iter().collect()), start));
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    position: start,
                    message: format!("unexpected character {other:?}"),
                    expected: "a term, sign, or operator".into(),
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, chars.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    sig: MonoidSignature,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Syntax {
            position: self.offset(),
            message: format!("unexpected {}", self.peek().describe()),
            expected: expected.into(),
        })
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.bump() {
            Tok::Int(n) => Ok(n),
            _ => {
                self.pos -= 1;
                self.fail("an integer")
            }
        }
    }

    fn sum(&mut self) -> Result<Vec<(Rational, Monomial)>> {
        let mut terms = Vec::new();
        let mut negative = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let (c, m) = self.term()?;
            terms.push((if negative { -c } else { c }, m));
            negative = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                Tok::End => break,
                _ => return self.fail("'+', '-' or end of input"),
            };
            self.bump();
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<(Rational, Monomial)> {
        let mut coeff = Rational::one();
        let mut exps = vec![0i64; self.sig.num_vars];
        match self.peek() {
            Tok::Int(_) => {
                coeff = self.rational_literal()?;
            }
            Tok::LParen => {
                self.bump();
                let neg = matches!(self.peek(), Tok::Minus);
                if neg {
                    self.bump();
                }
                let q = self.rational_literal()?;
                coeff = if neg { -q } else { q };
                self.expect(Tok::RParen, "')'")?;
            }
            Tok::Var(_) => {}
            _ => return self.fail("a coefficient or a variable"),
        }
        loop {
            let star = matches!(self.peek(), Tok::Star);
            if star {
                self.bump();
            }
            match self.peek().clone() {
                Tok::Var(name) => {
                    let at = self.offset();
                    self.bump();
                    let index = self.var_index(&name, at)?;
                    let e = self.exponent()?;
                    exps[index] += e;
                }
                _ if star => return self.fail("a variable"),
                _ => break,
            }
        }
        Ok((coeff, Monomial::new(exps)))
    }

    fn rational_literal(&mut self) -> Result<Rational> {
        let num = self.int()?;
        if matches!(self.peek(), Tok::Slash) {
            self.bump();
            let at = self.offset();
            let den = self.int()?;
            return Rational::new(num, den).map_err(|_| Error::Syntax {
                position: at,
                message: "zero denominator".into(),
                expected: "a nonzero integer".into(),
            });
        }
        Ok(Rational::from_integer(num))
    }

    fn exponent(&mut self) -> Result<i64> {
        if !matches!(self.peek(), Tok::Caret) {
            return Ok(1);
        }
        self.bump();
        let at = self.offset();
        let paren = matches!(self.peek(), Tok::LParen);
        if paren {
            self.bump();
        }
        let neg = matches!(self.peek(), Tok::Minus);
        if neg {
            self.bump();
        }
        let n = self.int()?;
        if paren {
            self.expect(Tok::RParen, "')'")?;
        }
        let n: i64 = n.try_into().map_err(|_| Error::Syntax {
            position: at,
            message: "exponent out of range".into(),
            expected: "a small integer".into(),
        })?;
        let e = if neg { -n } else { n };
        if e < 0 && !self.sig.laurent {
            return Err(Error::NegativeExponent { position: at });
        }
        Ok(e)
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.fail(what)
        }
    }

    fn var_index(&self, name: &str, position: usize) -> Result<usize> {
        let unknown = || Error::UnknownVariable { name: name.to_string(), position };
        let n = self.sig.num_vars;
        let index = match name {
            "x" if n <= 3 => 0,
            "y" if n <= 3 => 1,
            "z" if n <= 3 => 2,
            _ => {
                let digits = name.strip_prefix('T').ok_or_else(unknown)?;
                let k: usize = digits.parse().map_err(|_| unknown())?;
                k.checked_sub(1).ok_or_else(unknown)?
            }
        };
        if index < n {
            Ok(index)
        } else {
            Err(unknown())
        }
    }
}

fn parse_terms(text: &str, sig: MonoidSignature) -> Result<Vec<(Rational, Monomial)>> {
    let mut p = Parser { toks: lex(text)?, pos: 0, sig };
    p.sum()
}

/// Parses a polynomial over ℚ; like terms are collected.
pub fn parse_polynomial(text: &str, sig: MonoidSignature) -> Result<FieldPolynomial> {
    let terms = parse_terms(text, sig)?;
    FieldPolynomial::from_terms(sig, terms.into_iter().map(|(c, m)| (m, c)))
}

/// Parses a formal sum, keeping repeated terms. `0` is the empty sum.
pub fn parse_formal_sum<C: super::Coefficient>(text: &str, sig: MonoidSignature) -> Result<FormalSum<C>> {
    let terms = parse_terms(text, sig)?;
    let terms = terms.into_iter().map(|(c, m)| Ok(Term::new(C::from_rational(c)?, m))).collect::<Result<Vec<_>>>()?;
    Ok(FormalSum::from_terms(terms))
}

pub fn parse_trop_sum(text: &str, sig: MonoidSignature) -> Result<TropFormalSum> {
    parse_formal_sum(text, sig)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig2() -> MonoidSignature {
        MonoidSignature::polynomial(2)
    }

    #[test]
    fn guiding_line() {
        let p = parse_polynomial("T1 + T2 + 1", sig2()).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.coeff(&Monomial::var(2, 0)), Rational::one());
        assert_eq!(p.coeff(&Monomial::one(2)), Rational::one());
        assert_eq!(p.to_string(), "T1 + T2 + 1");
    }

    #[test]
    fn coefficients_and_powers() {
        let p = parse_polynomial("3*T1^2 - 1/2", sig2()).unwrap();
        assert_eq!(p.coeff(&Monomial::new(vec![2, 0])), Rational::from(3));
        assert_eq!(p.coeff(&Monomial::one(2)), Rational::ratio(-1, 2));
        assert_eq!(p.num_terms(), 2);
    }

    #[test]
    fn laurent_exponents() {
        let sig = MonoidSignature::new(1, true).unwrap();
        let p = parse_polynomial("T1^-1", sig).unwrap();
        assert_eq!(p.coeff(&Monomial::new(vec![-1])), Rational::one());
        assert!(matches!(
            parse_polynomial("T1^-1", MonoidSignature::polynomial(1)),
            Err(Error::NegativeExponent { position: 3 })
        ));
    }

    #[test]
    fn aliases_and_juxtaposition() {
        let p = parse_polynomial("2x y^2 - (1/3)*x + z", MonoidSignature::polynomial(3)).unwrap();
        assert_eq!(p.coeff(&Monomial::new(vec![1, 2, 0])), Rational::from(2));
        assert_eq!(p.coeff(&Monomial::new(vec![1, 0, 0])), Rational::ratio(-1, 3));
        assert!(parse_polynomial("x", MonoidSignature::polynomial(4)).is_err());
        let q = parse_polynomial("T1T2", sig2()).unwrap();
        assert_eq!(q.coeff(&Monomial::new(vec![1, 1])), Rational::one());
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(parse_polynomial("T1 + T3", sig2()), Err(Error::UnknownVariable { position: 5, .. })));
        match parse_polynomial("T1 + + T2", sig2()) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_polynomial("T1 *", sig2()), Err(Error::Syntax { position: 4, .. })));
        assert!(matches!(parse_polynomial("1/0", sig2()), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("T1 $", sig2()), Err(Error::Syntax { position: 3, .. })));
        assert!(parse_polynomial("", sig2()).is_err());
    }

    #[test]
    fn formal_sums_keep_multiplicity() {
        let s = parse_trop_sum("T1 + T1 + 1/3", sig2()).unwrap();
        assert_eq!(s.len(), 3);
        assert!(parse_trop_sum("0", sig2()).unwrap().is_empty());
        assert!(parse_trop_sum("-T1", sig2()).is_err());
    }
}
