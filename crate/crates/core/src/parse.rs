//! Text syntax for scalars and algebra elements.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*          juxtaposition multiplies
//! factor := atom ['^' ['-'] int]
//! atom   := int | int '/' int | 'i' | 'q' | generator | '(' expr ')'
//! ```
//!
//! Generators are `a`, `a*`, `g`, `g*` for `C[SU_q(2)]` and `y`, `z`, `z*`
//! for the disk. A `*` written directly after a generator letter is its
//! adjoint, so `a*g` means `α*γ`; write `a * g` or `a g` for `αγ`. Negative
//! powers are allowed only for nonzero scalar monomials such as `q^-2`.
//!
//! The `Display` output of elements and scalars parses back to the same
//! value.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::disk::{DiskElement, DiskLetter, DiskMonomial};
use crate::element::{Basis, Element};
use crate::error::{Error, Result};
use crate::scalar::{GaussianRational, QScalar};
use crate::suq2::{SuElement, SuLetter, SuMonomial};

/// A basis whose algebra has named generators in the expression grammar.
pub trait Generators: Basis {
    fn generator(name: &str) -> Option<Self>;
}

impl Generators for SuMonomial {
    fn generator(name: &str) -> Option<Self> {
        let l = match name {
            "a" => SuLetter::Alpha,
            "a*" => SuLetter::AlphaStar,
            "g" => SuLetter::Gamma,
            "g*" => SuLetter::GammaStar,
            _ => return None,
        };
        Some(l.monomial())
    }
}

impl Generators for DiskMonomial {
    fn generator(name: &str) -> Option<Self> {
        let l = match name {
            "y" => DiskLetter::Y,
            "z" => DiskLetter::Z,
            "z*" => DiskLetter::ZStar,
            _ => return None,
        };
        Some(l.monomial())
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ratio(BigInt, BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    let digits = |mut p: usize| {
        while p < bytes.len() && bytes[p].is_ascii_digit() {
            p += 1;
        }
        p
    };
    while pos < bytes.len() {
        let c = bytes[pos];
        let start = pos;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                pos += 1;
                continue;
            }
            b'0'..=b'9' => {
                let end = digits(pos);
                let num: BigInt = text[pos..end].parse().expect("ascii digits");
                if end + 1 < bytes.len() && bytes[end] == b'/' && bytes[end + 1].is_ascii_digit() {
                    let dend = digits(end + 1);
                    let den: BigInt = text[end + 1..dend].parse().expect("ascii digits");
                    if den.is_zero() {
                        return Err(Error::parse(end + 1, "zero denominator"));
                    }
                    out.push((start, Tok::Ratio(num, den)));
                    pos = dend;
                } else if end < bytes.len() && bytes[end] == b'/' {
                    return Err(Error::parse(end, "'/' must join two integer literals, as in 3/2"));
                } else {
                    out.push((start, Tok::Int(num)));
                    pos = end;
                }
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                let mut name = (c as char).to_string();
                pos += 1;
                if matches!(c, b'a' | b'g' | b'z') && pos < bytes.len() && bytes[pos] == b'*' {
                    name.push('*');
                    pos += 1;
                }
                out.push((start, Tok::Name(name)));
            }
            b'+' => {
                out.push((start, Tok::Plus));
                pos += 1;
            }
            b'-' => {
                out.push((start, Tok::Minus));
                pos += 1;
            }
            b'*' => {
                out.push((start, Tok::Star));
                pos += 1;
            }
            b'^' => {
                out.push((start, Tok::Caret));
                pos += 1;
            }
            b'(' => {
                out.push((start, Tok::LParen));
                pos += 1;
            }
            b')' => {
                out.push((start, Tok::RParen));
                pos += 1;
            }
            _ => {
                let ch = text[pos..].chars().next().expect("in bounds");
                return Err(Error::parse(pos, format!("unexpected character '{ch}'")));
            }
        }
    }
    Ok(out)
}

struct Parser<B> {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    end: usize,
    _basis: std::marker::PhantomData<B>,
}

impl<B: Generators> Parser<B> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.idx).map_or(self.end, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(_, t)| t.clone());
        self.idx += 1;
        t
    }

    fn expr(&mut self) -> Result<Element<B>> {
        let negate = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Int(_) | Tok::Ratio(..) | Tok::Name(_) | Tok::LParen)
        )
    }

    fn term(&mut self) -> Result<Element<B>> {
        let mut acc = self.factor()?;
        loop {
            if matches!(self.peek(), Some(Tok::Star)) {
                self.bump();
                acc = &acc * &self.factor()?;
            } else if self.starts_factor() {
                acc = &acc * &self.factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Element<B>> {
        let base = self.atom()?;
        if !matches!(self.peek(), Some(Tok::Caret)) {
            return Ok(base);
        }
        self.bump();
        let negative = if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            true
        } else {
            false
        };
        let at = self.offset();
        let e = match self.bump() {
            Some(Tok::Int(n)) => n,
            _ => return Err(Error::parse(at, "expected an integer exponent")),
        };
        let e = e
            .to_u32()
            .ok_or_else(|| Error::parse(at, "exponent too large"))?;
        if !negative {
            return Ok(base.pow(e));
        }
        let inv = invert_scalar_monomial(&base)
            .ok_or_else(|| Error::parse(at, "negative powers need a nonzero scalar monomial such as q"))?;
        Ok(inv.pow(e))
    }

    fn atom(&mut self) -> Result<Element<B>> {
        let at = self.offset();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Element::scalar(QScalar::constant(GaussianRational::new(
                BigRational::from_integer(n),
                BigRational::zero(),
            )))),
            Some(Tok::Ratio(n, d)) => Ok(Element::scalar(QScalar::constant(GaussianRational::new(
                BigRational::new(n, d),
                BigRational::zero(),
            )))),
            Some(Tok::Name(name)) => match name.as_str() {
                "q" => Ok(Element::scalar(QScalar::q_pow(1))),
                "i" => Ok(Element::scalar(QScalar::imaginary_unit())),
                _ => B::generator(&name)
                    .map(Element::basis)
                    .ok_or_else(|| Error::parse(at, format!("unknown generator '{name}' in this context"))),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                let close = self.offset();
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(Error::parse(close, "expected ')'")),
                }
            }
            Some(t) => Err(Error::parse(at, format!("unexpected {}", describe(&t)))),
            None => Err(Error::parse(at, "unexpected end of input")),
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Caret => "'^'",
        Tok::RParen => "')'",
        Tok::LParen => "'('",
        Tok::Int(_) | Tok::Ratio(..) => "number",
        Tok::Name(_) => "name",
    }
}

fn invert_scalar_monomial<B: Basis>(e: &Element<B>) -> Option<Element<B>> {
    let mut terms = e.terms();
    let (b, c) = terms.next()?;
    if terms.next().is_some() || !b.is_one() || c.len() != 1 {
        return None;
    }
    let (exp, coeff) = c.terms().next()?;
    let inv = coeff.inv()?;
    Some(Element::scalar(QScalar::monomial(inv, -exp)))
}

/// Parses and normalizes an element of the algebra with basis `B`.
pub fn parse_element<B: Generators>(text: &str) -> Result<Element<B>> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::parse(0, "empty expression"));
    }
    let mut p: Parser<B> = Parser {
        toks,
        idx: 0,
        end: text.len(),
        _basis: std::marker::PhantomData,
    };
    let e = p.expr()?;
    if p.idx < p.toks.len() {
        let at = p.offset();
        let t = p.bump().expect("in bounds");
        return Err(Error::parse(at, format!("unexpected {}", describe(&t))));
    }
    Ok(e)
}

pub fn parse_su(text: &str) -> Result<SuElement> {
    parse_element::<SuMonomial>(text)
}

pub fn parse_disk(text: &str) -> Result<DiskElement> {
    parse_element::<DiskMonomial>(text)
}

/// Parses a scalar (no generators).
pub fn parse_scalar(text: &str) -> Result<QScalar> {
    let e = parse_su(text)?;
    if e.monomials().any(|m| !m.is_one()) {
        return Err(Error::parse(0, "expected a scalar expression without generators"));
    }
    Ok(e.coefficient(&SuMonomial::one()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disk::{y, z, z_star};
    use crate::suq2::{alpha, gamma};

    fn q(e: i64) -> QScalar {
        QScalar::q_pow(e)
    }

    #[test]
    fn commutation_input() {
        assert_eq!(parse_su("g a").unwrap(), (&alpha() * &gamma()).scale(&q(-1)));
        assert_eq!(parse_su("g*a").unwrap(), parse_su("g* a").unwrap());
        assert_eq!(parse_su("a * g").unwrap(), &alpha() * &gamma());
        assert_eq!(parse_disk("z z*").unwrap(), &DiskElement::one() - &y().pow(2));
    }

    #[test]
    fn scalars() {
        let e = parse_disk("(1/2 + i) * y^2").unwrap();
        let c = QScalar::constant(GaussianRational::new(
            BigRational::new(1.into(), 2.into()),
            BigRational::from_integer(1.into()),
        ));
        assert_eq!(e, y().pow(2).scale(&c));
        assert_eq!(parse_scalar("q^-2").unwrap(), q(-2));
        assert_eq!(parse_scalar("(2*q)^-1").unwrap(), QScalar::monomial(GaussianRational::ratio(1, 2), -1));
        assert_eq!(parse_scalar("3/6").unwrap(), QScalar::constant(GaussianRational::ratio(1, 2)));
        assert_eq!(parse_scalar("-i + i").unwrap(), QScalar::zero());
    }

    #[test]
    fn errors_carry_offsets() {
        match parse_su("a + y") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("{other:?}"),
        }
        match parse_disk("y + (z") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 6),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_su("a ^ -1"), Err(Error::Parse { offset: 5, .. })));
        assert!(matches!(parse_su("1/0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_su("a $ g"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_su(""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(parse_su("a )"), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_scalar("a"), Err(Error::Parse { .. })));
    }

    #[test]
    fn printed_forms_reparse() {
        for text in ["g a", "a a* a", "(1 - 2*i)*q^3 g* - 3/2 a*^2 g", "0", "q^-1 + q"] {
            let e = parse_su(text).unwrap();
            assert_eq!(parse_su(&e.to_string()).unwrap(), e, "{text} -> {e}");
        }
        let d = &(&z() * &z_star()) + &y().scale(&q(-3));
        assert_eq!(parse_disk(&d.to_string()).unwrap(), d);
    }
}
