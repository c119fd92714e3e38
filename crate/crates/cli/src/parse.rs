//! Recursive-descent parsing of polynomial and trigonometric expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/' | <implicit>) unary)*
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' INT)?
//! atom   := INT | 'x' | '(' expr ')' | ('cos' | 'sin') '(' INT? '*'? ('t' | 'theta') ')'
//! ```
//!
//! `x` is only valid in polynomial mode, `cos`/`sin` only in trigonometric
//! mode. Division is by nonzero constants only.

use std::fmt;

use num_traits::{One, Zero};
use riccati_core::qpoly::{Poly, Rational};
use riccati_core::trigring::TrigPoly;

const MAX_EXPONENT: u64 = 1000;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub struct SyntaxError {
    /// Byte offset into the source.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at byte {}: {}", self.offset, self.message)
    }
}

type PResult<T> = Result<T, SyntaxError>;

fn err<T>(offset: usize, message: impl Into<String>) -> PResult<T> {
    Err(SyntaxError { offset, message: message.into() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn lex(src: &str) -> PResult<Vec<(Tok, usize)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                match src[start..i].parse::<u64>() {
                    Ok(v) => {
                        out.push((Tok::Int(v), start));
                        continue;
                    }
                    Err(_) => return err(start, "integer literal too large"),
                }
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                out.push((Tok::Ident(src[start..i].to_string()), start));
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = src[start..].chars().next().unwrap_or('?');
                return err(start, format!("unexpected character '{ch}'"));
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

/// The two coefficient rings the grammar can build.
trait Ring: Clone + Sized {
    const TRIG: bool;
    fn constant(c: Rational) -> Self;
    fn variable() -> Option<Self>;
    fn harmonic(cosine: bool, k: usize) -> Option<Self>;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn as_constant(&self) -> Option<Rational>;
    fn scale(&self, c: &Rational) -> Self;
}

impl Ring for Poly {
    const TRIG: bool = false;
    fn constant(c: Rational) -> Self {
        Poly::constant(c)
    }
    fn variable() -> Option<Self> {
        Some(Poly::x())
    }
    fn harmonic(_: bool, _: usize) -> Option<Self> {
        None
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.coeff(0))
    }
    fn scale(&self, c: &Rational) -> Self {
        Poly::scale(self, c)
    }
}

impl Ring for TrigPoly {
    const TRIG: bool = true;
    fn constant(c: Rational) -> Self {
        TrigPoly::constant(c)
    }
    fn variable() -> Option<Self> {
        None
    }
    fn harmonic(cosine: bool, k: usize) -> Option<Self> {
        Some(if cosine {
            TrigPoly::cos_term(Rational::one(), k)
        } else {
            TrigPoly::sin_term(Rational::one(), k)
        })
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.a0().clone())
    }
    fn scale(&self, c: &Rational) -> Self {
        TrigPoly::scale(self, c)
    }
}

struct Parser<R> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    _ring: std::marker::PhantomData<R>,
}

impl<R: Ring> Parser<R> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if t.0 != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> PResult<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            err(self.offset(), format!("expected {what}"))
        }
    }

    fn expr(&mut self) -> PResult<R> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Tok::Int(_) | Tok::Ident(_) | Tok::LParen)
    }

    fn term(&mut self) -> PResult<R> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = acc.mul(&self.unary()?);
                }
                Tok::Slash => {
                    self.bump();
                    let at = self.offset();
                    let divisor = self.power()?;
                    match divisor.as_constant() {
                        Some(c) if !c.is_zero() => acc = acc.scale(&(Rational::one() / c)),
                        Some(_) => return err(at, "division by zero"),
                        None => return err(at, "can only divide by a constant"),
                    }
                }
                _ if self.starts_atom() => acc = acc.mul(&self.power()?),
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> PResult<R> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> PResult<R> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump().0 {
            Tok::Int(e) if e <= MAX_EXPONENT => {
                let mut out = R::constant(Rational::one());
                for _ in 0..e {
                    out = out.mul(&base);
                }
                Ok(out)
            }
            Tok::Int(_) => err(at, format!("exponent exceeds {MAX_EXPONENT}")),
            _ => err(at, "expected a nonnegative integer exponent"),
        }
    }

    fn atom(&mut self) -> PResult<R> {
        let (tok, at) = self.bump();
        match tok {
            Tok::Int(v) => Ok(R::constant(Rational::from_integer(v.into()))),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            Tok::Ident(name) => match name.as_str() {
                "x" => match R::variable() {
                    Some(v) => Ok(v),
                    None => err(at, "'x' is not allowed in a trigonometric expression; use cos(kt) and sin(kt)"),
                },
                "cos" | "sin" if R::TRIG => {
                    self.expect(Tok::LParen, "'(' after trigonometric function")?;
                    let k = self.harmonic_index()?;
                    self.expect(Tok::RParen, "')'")?;
                    Ok(R::harmonic(name == "cos", k).expect("trigonometric ring"))
                }
                "t" | "theta" if R::TRIG => err(at, "bare angle variable; only cos(kt) and sin(kt) are allowed"),
                _ => err(at, format!("unknown identifier '{name}'")),
            },
            Tok::End => err(at, "unexpected end of input"),
            _ => err(at, "expected a number, variable or '('"),
        }
    }

    fn harmonic_index(&mut self) -> PResult<usize> {
        let mut k = 1u64;
        if let Tok::Int(v) = *self.peek() {
            let at = self.offset();
            self.bump();
            if v == 0 {
                return err(at, "harmonic must be at least 1");
            }
            k = v;
            if *self.peek() == Tok::Star {
                self.bump();
            }
        }
        let at = self.offset();
        match self.bump().0 {
            Tok::Ident(n) if n == "t" || n == "theta" => Ok(k as usize),
            _ => err(at, "expected an integer multiple of t"),
        }
    }
}

fn parse<R: Ring>(src: &str) -> PResult<R> {
    let toks = lex(src)?;
    let mut p = Parser::<R> { toks, pos: 0, _ring: std::marker::PhantomData };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return err(p.offset(), "unexpected trailing input");
    }
    Ok(out)
}

pub fn parse_poly_expr(src: &str) -> Result<Poly, SyntaxError> {
    parse::<Poly>(src)
}

pub fn parse_trig_expr(src: &str) -> Result<TrigPoly, SyntaxError> {
    parse::<TrigPoly>(src)
}

#[cfg(test)]
mod tests {
    use super::*;
    use riccati_core::qpoly::{frac, rat};

    #[test]
    fn poly_examples() {
        assert_eq!(
            parse_poly_expr("x^2 - 3/2x + 1").unwrap(),
            Poly::from_coeffs(vec![rat(1), frac(-3, 2), rat(1)])
        );
        assert_eq!(parse_poly_expr("-(x-1)*(x-2)*(x-3)").unwrap(), Poly::from_i64(&[6, -11, 6, -1]));
        assert_eq!(parse_poly_expr("2x(x+1)").unwrap(), Poly::from_i64(&[0, 2, 2]));
        assert_eq!(parse_poly_expr(" 0 ").unwrap(), Poly::zero());
    }

    #[test]
    fn poly_errors() {
        assert_eq!(parse_poly_expr("x^^2").unwrap_err().offset, 2);
        assert_eq!(parse_poly_expr("x^1.5").unwrap_err().offset, 3);
        assert_eq!(parse_poly_expr("x^-1").unwrap_err().offset, 2);
        assert_eq!(parse_poly_expr("(x+1").unwrap_err().offset, 4);
        assert_eq!(parse_poly_expr("").unwrap_err().offset, 0);
        assert_eq!(parse_poly_expr("x/x").unwrap_err().offset, 2);
        assert_eq!(parse_poly_expr("cos(t)").unwrap_err().offset, 0);
    }

    #[test]
    fn trig_examples() {
        assert_eq!(parse_trig_expr("5sin(t)+8sin(2t)+5sin(3t)").unwrap(), TrigPoly::from_i64(0, &[], &[5, 8, 5]));
        assert_eq!(
            parse_trig_expr("cos(t)^2").unwrap(),
            TrigPoly::new(frac(1, 2), vec![rat(0), frac(1, 2)], vec![])
        );
        assert_eq!(parse_trig_expr("sin(2*theta)").unwrap(), TrigPoly::from_i64(0, &[], &[0, 1]));
    }

    #[test]
    fn trig_errors() {
        assert_eq!(parse_trig_expr("cos(1.5t)").unwrap_err().offset, 5);
        assert!(parse_trig_expr("cos(0t)").is_err());
        assert!(parse_trig_expr("x + 1").is_err());
        assert!(parse_trig_expr("t").is_err());
    }

    #[test]
    fn display_round_trip() {
        let p = Poly::from_coeffs(vec![frac(1, 3), rat(0), frac(-7, 2), rat(1)]);
        assert_eq!(parse_poly_expr(&p.to_string()).unwrap(), p);
        let t = TrigPoly::new(frac(-1, 2), vec![rat(3), rat(0), frac(2, 5)], vec![rat(0), rat(-1)]);
        assert_eq!(parse_trig_expr(&t.to_string()).unwrap(), t);
    }
}
