//! Operator expressions: `+ - * ^ ( )`, integers, `p/q` constants and the
//! ring's identifiers. Products are taken left to right in the Weyl algebra.
//! For each position variable `x` the names `dx` (derivation) and `tx`
//! (the Euler operator `x*dx`) are recognised.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::arith::{CommPoly, Rational};
use crate::error::{Error, Result};
use crate::weyl::{WeylElement, WeylRing, H_NAME};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(src: &str, line0: usize, col0: usize) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let (mut line, mut col) = (line0, col0);
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        let (l, cc) = (line, col);
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            out.push(Token { tok: Tok::Num(s.parse().unwrap()), line: l, col: cc });
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            out.push(Token { tok: Tok::Ident(s), line: l, col: cc });
        } else if "+-*/^()".contains(c) {
            out.push(Token { tok: Tok::Op(c), line: l, col: cc });
            i += 1;
            col += 1;
        } else {
            return Err(Error::Parse { line: l, col: cc, msg: format!("unexpected character `{}`", c) });
        }
    }
    out.push(Token { tok: Tok::End, line, col });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    ring: &'a Arc<WeylRing>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        let t = self.peek();
        Err(Error::Parse { line: t.line, col: t.col, msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek().tok == Tok::Op(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<WeylElement> {
        let mut acc = if self.eat('-') {
            self.term()?.neg()
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<WeylElement> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.power()?);
            } else if self.peek().tok == Tok::Op('/') {
                self.pos += 1;
                let save = self.pos;
                let d = self.power()?;
                if !d.is_constant() || d.is_zero() {
                    self.pos = save;
                    return self.err("division only by a nonzero constant");
                }
                let c = d.terms().next().unwrap().1.clone();
                acc = acc.scale(&c.recip());
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<WeylElement> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().tok.clone() {
                Tok::Num(k) => {
                    self.pos += 1;
                    let k: u32 = k.try_into().map_err(|_| Error::Invalid("exponent too large".into()))?;
                    Ok(base.pow(k))
                }
                _ => self.err("expected a non-negative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<WeylElement> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Num(v) => {
                self.pos += 1;
                Ok(WeylElement::constant(self.ring, Rational::from_bigint(v)))
            }
            Tok::Ident(name) => {
                self.pos += 1;
                self.ident(&name).ok_or(Error::Parse {
                    line: t.line,
                    col: t.col,
                    msg: format!("unknown identifier `{}`", name),
                })
            }
            Tok::Op('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Tok::Op('-') => {
                self.pos += 1;
                Ok(self.power()?.neg())
            }
            Tok::End => self.err("unexpected end of expression"),
            Tok::Op(c) => self.err(format!("unexpected `{}`", c)),
        }
    }

    fn ident(&self, name: &str) -> Option<WeylElement> {
        let r = self.ring;
        if let Some(i) = r.x_names().iter().position(|v| v == name) {
            return Some(WeylElement::x(r, i));
        }
        if let Some(i) = r.d_names().iter().position(|v| v == name) {
            return Some(WeylElement::d(r, i));
        }
        if r.is_homogenized() && name == H_NAME {
            return Some(WeylElement::h(r));
        }
        let rest = name.strip_prefix('t')?;
        let i = r.x_names().iter().position(|v| v == rest)?;
        Some(WeylElement::theta(r, i))
    }
}

/// Parse an operator, reporting positions relative to `(line, col)`.
pub fn parse_operator_at(src: &str, ring: &Arc<WeylRing>, line: usize, col: usize) -> Result<WeylElement> {
    let toks = lex(src, line, col)?;
    let mut p = Parser { toks, pos: 0, ring };
    let e = p.expr()?;
    if p.peek().tok != Tok::End {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

pub fn parse_operator(src: &str, ring: &Arc<WeylRing>) -> Result<WeylElement> {
    parse_operator_at(src, ring, 1, 1)
}

/// Parse a polynomial in the ring's position variables.
pub fn parse_poly(src: &str, ring: &Arc<WeylRing>) -> Result<CommPoly> {
    let e = parse_operator(src, ring)?;
    to_poly(&e)
}

pub fn to_poly(e: &WeylElement) -> Result<CommPoly> {
    let n = e.ring().n();
    let mut p = CommPoly::zero(e.ring().poly_ring());
    for (k, c) in e.terms() {
        if k[n..].iter().any(|&v| v > 0) {
            return Err(Error::Invalid(format!("`{}` is not a polynomial in the position variables", e)));
        }
        p.add_term(k[..n].to_vec(), c);
    }
    Ok(p)
}
