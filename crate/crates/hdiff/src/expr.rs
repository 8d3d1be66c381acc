//! Textual grammar for algebra elements and Cartan coefficients.
//!
//! Elements are sums of products: `x1^2*x3*D2*((h12+1)/h12)`. Generator
//! tokens are `x<i>` and `D<i>` for the even algebra (`d<i>` for the plain
//! derivative), `z<i>` and `Gd<i>` for the odd one. Coefficients are
//! parenthesized rational expressions in `h<i>` and `h<i><j>` with
//! `+ - * / ^` and integer literals. Printing emits the canonical normal
//! form, raising letters first with descending indices, and parses back to
//! the same element.

use crate::algebra::{normal_order, Atom, Element, MultiIndex, Parity};
use crate::coeffs::RatFunc;
use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

fn err<T>(pos: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        pos,
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Lexer {
    fn new(text: &str) -> Result<Lexer, ParseError> {
        let bytes = text.as_bytes();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            match c {
                ' ' | '\t' | '\n' | '\r' => i += 1,
                '+' => {
                    toks.push((i, Tok::Plus));
                    i += 1;
                }
                '-' => {
                    toks.push((i, Tok::Minus));
                    i += 1;
                }
                '*' => {
                    toks.push((i, Tok::Star));
                    i += 1;
                }
                '/' => {
                    toks.push((i, Tok::Slash));
                    i += 1;
                }
                '^' => {
                    toks.push((i, Tok::Caret));
                    i += 1;
                }
                '(' => {
                    toks.push((i, Tok::LParen));
                    i += 1;
                }
                ')' => {
                    toks.push((i, Tok::RParen));
                    i += 1;
                }
                '0'..='9' => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let v: BigInt = text[start..i].parse().expect("digits");
                    toks.push((start, Tok::Int(v)));
                }
                'a'..='z' | 'A'..='Z' => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                        i += 1;
                    }
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    toks.push((start, Tok::Ident(text[start..i].to_string())));
                }
                _ => return err(i, format!("unexpected character '{c}'")),
            }
        }
        Ok(Lexer {
            toks,
            pos: 0,
            end: text.len(),
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn peek_pos(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn next(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<usize, ParseError> {
        match self.next() {
            Some((p, t)) if t == tok => Ok(p),
            Some((p, _)) => err(p, format!("expected {what}")),
            None => err(self.end, format!("expected {what}, found end of input")),
        }
    }
}

/// Split an identifier into its alphabetic prefix and numeric suffix.
fn split_ident(s: &str) -> (&str, &str) {
    let k = s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len());
    (&s[..k], &s[k..])
}

/// Resolve an `h...` token to a coefficient-field value.
fn hvar_value(n: usize, digits: &str, pos: usize) -> Result<RatFunc, ParseError> {
    if digits.is_empty() {
        return err(pos, "generator 'h' needs an index");
    }
    if n <= 9 && digits.len() == 2 {
        let i = digits[0..1].parse::<usize>().unwrap();
        let j = digits[1..2].parse::<usize>().unwrap();
        if i >= 1 && i <= n && j >= 1 && j <= n && i != j {
            return Ok(RatFunc::hij(n, i, j));
        }
    }
    match digits.parse::<usize>() {
        Ok(i) if i >= 1 && i <= n => Ok(RatFunc::hvar(n, i)),
        _ => err(pos, format!("index out of range in 'h{digits}' (n = {n})")),
    }
}

fn parse_exponent(lex: &mut Lexer) -> Result<u32, ParseError> {
    match lex.next() {
        Some((_, Tok::Int(v))) => {
            use num_traits::ToPrimitive;
            v.to_u32()
                .ok_or(ParseError {
                    pos: lex.peek_pos(),
                    message: "exponent too large".into(),
                })
        }
        Some((p, _)) => err(p, "expected a nonnegative integer exponent"),
        None => err(lex.end, "expected an exponent, found end of input"),
    }
}

// rational expression grammar

fn parse_rat_expr(lex: &mut Lexer, n: usize) -> Result<RatFunc, ParseError> {
    let mut acc = parse_rat_term(lex, n)?;
    loop {
        match lex.peek() {
            Some(Tok::Plus) => {
                lex.next();
                acc = acc.add(&parse_rat_term(lex, n)?);
            }
            Some(Tok::Minus) => {
                lex.next();
                acc = acc.sub(&parse_rat_term(lex, n)?);
            }
            _ => return Ok(acc),
        }
    }
}

fn parse_rat_term(lex: &mut Lexer, n: usize) -> Result<RatFunc, ParseError> {
    let mut acc = parse_rat_unary(lex, n)?;
    loop {
        match lex.peek() {
            Some(Tok::Star) => {
                lex.next();
                acc = acc.mul(&parse_rat_unary(lex, n)?);
            }
            Some(Tok::Slash) => {
                let p = lex.peek_pos();
                lex.next();
                let d = parse_rat_unary(lex, n)?;
                acc = acc
                    .checked_div(&d)
                    .map_err(|e| ParseError {
                        pos: p,
                        message: e.to_string(),
                    })?;
            }
            _ => return Ok(acc),
        }
    }
}

fn parse_rat_unary(lex: &mut Lexer, n: usize) -> Result<RatFunc, ParseError> {
    if let Some(Tok::Minus) = lex.peek() {
        lex.next();
        return Ok(parse_rat_unary(lex, n)?.neg());
    }
    let base = parse_rat_atom(lex, n)?;
    if let Some(Tok::Caret) = lex.peek() {
        lex.next();
        let e = parse_exponent(lex)?;
        return Ok(base.powi(e as i64));
    }
    Ok(base)
}

fn parse_rat_atom(lex: &mut Lexer, n: usize) -> Result<RatFunc, ParseError> {
    match lex.next() {
        Some((_, Tok::Int(v))) => Ok(RatFunc::from_rational(n, BigRational::from_integer(v))),
        Some((p, Tok::Ident(s))) => {
            let (prefix, digits) = split_ident(&s);
            if prefix == "h" {
                hvar_value(n, digits, p)
            } else {
                err(p, format!("unknown symbol '{s}' in a coefficient"))
            }
        }
        Some((_, Tok::LParen)) => {
            let inner = parse_rat_expr(lex, n)?;
            lex.expect(Tok::RParen, "')'")?;
            Ok(inner)
        }
        Some((p, _)) => err(p, "expected an integer, 'h' generator or '('"),
        None => err(lex.end, "expected a coefficient, found end of input"),
    }
}

/// Parse a coefficient-field expression on its own.
pub fn parse_ratfunc(text: &str, n: usize) -> Result<RatFunc, ParseError> {
    let mut lex = Lexer::new(text)?;
    let v = parse_rat_expr(&mut lex, n)?;
    if let Some((p, _)) = lex.next() {
        return err(p, "unexpected trailing input");
    }
    Ok(v)
}

// element grammar

fn gen_atom(
    parity: Parity,
    n: usize,
    prefix: &str,
    digits: &str,
    pos: usize,
) -> Result<Atom, ParseError> {
    let idx: usize = match digits.parse() {
        Ok(i) => i,
        Err(_) => return err(pos, format!("generator '{prefix}' needs an index")),
    };
    if idx < 1 || idx > n {
        return err(pos, format!("index out of range in '{prefix}{digits}' (n = {n})"));
    }
    match (parity, prefix) {
        (Parity::Even, "x") => Ok(Atom::X(idx)),
        (Parity::Even, "D") => Ok(Atom::DBar(idx)),
        (Parity::Even, "d") => Ok(Atom::DPlain(idx)),
        (Parity::Odd, "z") => Ok(Atom::X(idx)),
        (Parity::Odd, "Gd") => Ok(Atom::DBar(idx)),
        _ => err(
            pos,
            format!("unknown generator '{prefix}{digits}' for this parity"),
        ),
    }
}

fn parse_element_term(
    lex: &mut Lexer,
    n: usize,
    parity: Parity,
) -> Result<Element, ParseError> {
    let mut atoms: Vec<Atom> = Vec::new();
    loop {
        match lex.next() {
            Some((p, Tok::Ident(s))) => {
                let (prefix, digits) = split_ident(&s);
                if prefix == "h" {
                    return err(p, "a bare 'h' generator must be parenthesized: (h...)");
                }
                let atom = gen_atom(parity, n, prefix, digits, p)?;
                let mut count = 1u32;
                if let Some(Tok::Caret) = lex.peek() {
                    lex.next();
                    count = parse_exponent(lex)?;
                    if parity == Parity::Odd && count > 1 {
                        return err(p, "odd generators square to zero: exponent must be 0 or 1");
                    }
                }
                for _ in 0..count {
                    atoms.push(atom.clone());
                }
            }
            Some((_, Tok::Int(v))) => {
                atoms.push(Atom::Coeff(RatFunc::from_rational(
                    n,
                    BigRational::from_integer(v),
                )));
            }
            Some((_, Tok::LParen)) => {
                let c = parse_rat_expr(lex, n)?;
                lex.expect(Tok::RParen, "')'")?;
                atoms.push(Atom::Coeff(c));
            }
            Some((p, _)) => return err(p, "expected a generator, integer or '('"),
            None => return err(lex.end, "expected a factor, found end of input"),
        }
        match lex.peek() {
            Some(Tok::Star) => {
                lex.next();
            }
            _ => break,
        }
    }
    Ok(normal_order(n, parity, &atoms))
}

/// Parse an element of the algebra in the textual grammar.
pub fn parse_expr(text: &str, n: usize, parity: Parity) -> Result<Element, ParseError> {
    let mut lex = Lexer::new(text)?;
    let mut acc = parse_element_term(&mut lex, n, parity)?;
    loop {
        match lex.next() {
            None => return Ok(acc),
            Some((_, Tok::Plus)) => {
                acc = acc.add(&parse_element_term(&mut lex, n, parity)?);
            }
            Some((p, _)) => return err(p, "expected '+' between terms"),
        }
    }
}

fn letter_tokens(parity: Parity) -> (&'static str, &'static str) {
    match parity {
        Parity::Even => ("x", "D"),
        Parity::Odd => ("z", "Gd"),
    }
}

fn push_power(out: &mut Vec<String>, token: &str, idx: usize, e: u32) {
    if e == 0 {
        return;
    }
    if e == 1 {
        out.push(format!("{token}{idx}"));
    } else {
        out.push(format!("{token}{idx}^{e}"));
    }
}

/// Canonical textual form of a term: raising letters with descending
/// indices, lowering letters with ascending indices, coefficient last.
fn term_string(parity: Parity, a: &MultiIndex, b: &MultiIndex, c: &RatFunc) -> String {
    let (xt, dt) = letter_tokens(parity);
    let n = a.len();
    let mut factors: Vec<String> = Vec::new();
    for i in (1..=n).rev() {
        push_power(&mut factors, xt, i, a.get(i - 1));
    }
    for i in 1..=n {
        push_power(&mut factors, dt, i, b.get(i - 1));
    }
    if factors.is_empty() {
        return if c.is_one() {
            "1".to_string()
        } else {
            format!("({c})")
        };
    }
    if !c.is_one() {
        factors.push(format!("({c})"));
    }
    factors.join("*")
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((a, b), c) in self.terms() {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            write!(f, "{}", term_string(self.parity(), a, b, c))?;
        }
        Ok(())
    }
}

impl fmt::Display for crate::forms::PolyModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_element())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffh;

    #[test]
    fn parse_examples() {
        let n = 2;
        // a descending word parses to a single plain term
        let e = parse_expr("x2*x1", n, Parity::Even).unwrap();
        assert_eq!(e, diffh::x(n, 2).diamond(&diffh::x(n, 1)));
        // an ascending word picks up the relation coefficient
        let e = parse_expr("x1*x2", n, Parity::Even).unwrap();
        let h = RatFunc::hij(n, 1, 2);
        let f = h
            .add(&RatFunc::from_int(n, 1))
            .checked_div(&h)
            .unwrap();
        assert_eq!(e, diffh::x(n, 2).diamond(&diffh::x(n, 1)).scale(&f));
    }

    #[test]
    fn parse_errors() {
        let e = parse_expr("x3*x1", 2, Parity::Even).unwrap_err();
        assert!(e.message.contains("out of range"), "{e}");
        assert_eq!(e.pos, 0);
        let e = parse_expr("z1^2", 2, Parity::Odd).unwrap_err();
        assert!(e.message.contains("zero"), "{e}");
        let e = parse_expr("x1*", 2, Parity::Even).unwrap_err();
        assert!(e.message.contains("end of input"), "{e}");
        let e = parse_ratfunc("1/(h12-h12)", 2).unwrap_err();
        assert!(e.message.contains("division by zero"), "{e}");
    }

    #[test]
    fn parse_coefficients() {
        let n = 2;
        let f = parse_ratfunc("(h12-1)/(h12+1)", n).unwrap();
        let h = RatFunc::hij(n, 1, 2);
        let expect = h
            .sub(&RatFunc::from_int(n, 1))
            .checked_div(&h.add(&RatFunc::from_int(n, 1)))
            .unwrap();
        assert_eq!(f, expect);
        // single indices and powers
        let f = parse_ratfunc("h1^2-2*h2+3/4", 2).unwrap();
        let expect = RatFunc::hvar(2, 1)
            .powi(2)
            .sub(&RatFunc::hvar(2, 2).mul(&RatFunc::from_int(2, 2)))
            .add(&parse_ratfunc("3/4", 2).unwrap());
        assert_eq!(f, expect);
    }

    #[test]
    fn print_parse_roundtrip_examples() {
        let n = 2;
        let u = parse_expr("x1*x2*D1*((h12-1)/h12)+d2*3", n, Parity::Even).unwrap();
        let s = u.to_string();
        let back = parse_expr(&s, n, Parity::Even).unwrap();
        assert_eq!(u, back);
        let v = parse_expr("z2*z1*Gd2+z1*(h12)", n, Parity::Odd).unwrap();
        let back = parse_expr(&v.to_string(), n, Parity::Odd).unwrap();
        assert_eq!(v, back);
    }

    #[test]
    fn plain_derivative_token() {
        let n = 2;
        // d2 converts to the modified basis
        let e = parse_expr("d2", n, Parity::Even).unwrap();
        assert_eq!(e, diffh::d_plain(n, 2));
    }
}
