//! Recursive-descent parser for algebraic expressions.
//!
//! ```text
//! expr   := term (("+"|"-") term)*
//! term   := factor ("*" factor)*
//! factor := "-" factor | base ("^" UINT)?
//! base   := RATIONAL | IDENT | "(" expr ")"          (+ "k[a0,a1,a2]" in kappa syntax)
//! RATIONAL := INT ("/" UINT)?
//! ```
//!
//! The same parser backs ring polynomials, series literals (over `T`) and
//! kappa expressions; an [`Algebra`] turns the syntax tree into a value.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::ExactRational;
use crate::ring::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dialect {
    /// Plain identifiers only.
    Plain,
    /// Identifiers plus `k[a0,a1,a2]` atoms and compact names like `k010`, `k-102`.
    Kappa,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Ident(String),
    Kappa([i64; 3]),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(ExactRational),
    Atom { atom: Atom, column: usize },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    /// Division; `column` is the position of the divisor.
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(ExactRational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    column: usize,
}

fn lex(text: &str, dialect: Dialect) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let (num, next) = lex_number(&chars, i);
            out.push(Token {
                tok: Tok::Num(ExactRational::from_integer(num)),
                column,
            });
            i = next;
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let mut name: String = chars[start..i].iter().collect();
            if dialect == Dialect::Kappa && name == "k" && i + 4 <= chars.len() && chars[i] == '-' {
                let digits = &chars[i + 1..i + 4];
                let boundary = chars
                    .get(i + 4)
                    .is_none_or(|ch| !(ch.is_alphanumeric() || *ch == '_'));
                if digits.iter().all(|d| d.is_ascii_digit()) && boundary {
                    name.push('-');
                    name.extend(digits);
                    i += 4;
                }
            }
            out.push(Token {
                tok: Tok::Ident(name),
                column,
            });
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            other => return Err(Error::parse(column, format!("unexpected character `{other}`"))),
        };
        out.push(Token { tok, column });
        i += 1;
    }
    Ok(out)
}

fn lex_number(chars: &[char], mut i: usize) -> (BigInt, usize) {
    let start = i;
    while i < chars.len() && chars[i].is_ascii_digit() {
        i += 1;
    }
    let s: String = chars[start..i].iter().collect();
    (s.parse().expect("digits"), i)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end_column: usize,
    dialect: Dialect,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_column, |t| t.column)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::parse(self.column(), format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let column = self.column();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?), column);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.base()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let column = self.column();
            match self.bump().map(|t| t.tok) {
                Some(Tok::Num(n)) if n.is_integer() => {
                    let e: u32 = n
                        .to_integer()
                        .try_into()
                        .map_err(|_| Error::parse(column, "exponent out of range"))?;
                    Ok(Expr::Pow(Box::new(base), e))
                }
                _ => Err(Error::parse(column, "expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<Expr> {
        let column = self.column();
        match self.bump().map(|t| t.tok) {
            Some(Tok::Num(n)) => Ok(Expr::Num(n)),
            Some(Tok::Ident(name)) => {
                if self.dialect == Dialect::Kappa && name == "k" && self.peek() == Some(&Tok::LBracket) {
                    self.pos += 1;
                    let a0 = self.signed_int()?;
                    self.expect(Tok::Comma, "`,`")?;
                    let a1 = self.signed_int()?;
                    self.expect(Tok::Comma, "`,`")?;
                    let a2 = self.signed_int()?;
                    self.expect(Tok::RBracket, "`]`")?;
                    return Ok(Expr::Atom {
                        atom: Atom::Kappa([a0, a1, a2]),
                        column,
                    });
                }
                Ok(Expr::Atom {
                    atom: Atom::Ident(name),
                    column,
                })
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Some(_) => Err(Error::parse(column, "expected a number, name or `(`")),
            None => Err(Error::parse(column, "unexpected end of input")),
        }
    }

    fn signed_int(&mut self) -> Result<i64> {
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let column = self.column();
        match self.bump().map(|t| t.tok) {
            Some(Tok::Num(n)) if n.is_integer() => {
                let v: i64 = n
                    .to_integer()
                    .try_into()
                    .map_err(|_| Error::parse(column, "index out of range"))?;
                Ok(if negative { -v } else { v })
            }
            _ => Err(Error::parse(column, "expected an integer index")),
        }
    }
}

fn parser(text: &str, dialect: Dialect) -> Result<Parser> {
    Ok(Parser {
        toks: lex(text, dialect)?,
        pos: 0,
        end_column: text.chars().count() + 1,
        dialect,
    })
}

/// Parses a complete expression.
pub fn parse_expr(text: &str, dialect: Dialect) -> Result<Expr> {
    let mut p = parser(text, dialect)?;
    let e = p.expr()?;
    if p.pos < p.toks.len() {
        return Err(Error::parse(p.column(), "unexpected trailing input"));
    }
    Ok(e)
}

/// Target of expression evaluation.
pub trait Algebra {
    type Elem: Clone;

    fn constant(&self, c: &ExactRational) -> Self::Elem;
    fn atom(&self, atom: &Atom, column: usize) -> Result<Self::Elem>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `a / b`; `column` locates `b` for error messages.
    fn div(&self, a: &Self::Elem, b: &Self::Elem, column: usize) -> Result<Self::Elem>;

    fn pow(&self, a: &Self::Elem, n: u32) -> Self::Elem {
        let mut acc = self.constant(&ExactRational::from_integer(1.into()));
        for _ in 0..n {
            acc = self.mul(&acc, a);
        }
        acc
    }
}

pub fn evaluate<A: Algebra>(expr: &Expr, alg: &A) -> Result<A::Elem> {
    Ok(match expr {
        Expr::Num(c) => alg.constant(c),
        Expr::Atom { atom, column } => alg.atom(atom, *column)?,
        Expr::Neg(a) => alg.neg(&evaluate(a, alg)?),
        Expr::Add(a, b) => alg.add(&evaluate(a, alg)?, &evaluate(b, alg)?),
        Expr::Sub(a, b) => alg.add(&evaluate(a, alg)?, &alg.neg(&evaluate(b, alg)?)),
        Expr::Mul(a, b) => alg.mul(&evaluate(a, alg)?, &evaluate(b, alg)?),
        Expr::Div(a, b, column) => alg.div(&evaluate(a, alg)?, &evaluate(b, alg)?, *column)?,
        Expr::Pow(a, n) => alg.pow(&evaluate(a, alg)?, *n),
    })
}

/// Evaluates into a ring, resolving identifiers against the ring's
/// variables and then against named bindings.
pub struct PolyAlgebra<'a> {
    pub ring: &'a Ring,
    pub bindings: Option<&'a HashMap<String, Polynomial>>,
}

impl Algebra for PolyAlgebra<'_> {
    type Elem = Polynomial;

    fn constant(&self, c: &ExactRational) -> Polynomial {
        Polynomial::constant(self.ring, c.clone())
    }

    fn atom(&self, atom: &Atom, column: usize) -> Result<Polynomial> {
        let name = match atom {
            Atom::Ident(name) => name,
            Atom::Kappa(a) => {
                return Err(Error::UnknownVariable {
                    name: format!("k[{},{},{}]", a[0], a[1], a[2]),
                    column,
                })
            }
        };
        if let Some(p) = Polynomial::var_named(self.ring, name) {
            return Ok(p);
        }
        self.bindings
            .and_then(|b| b.get(name))
            .cloned()
            .ok_or_else(|| Error::UnknownVariable {
                name: name.clone(),
                column,
            })
    }

    fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a + b
    }

    fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        a * b
    }

    fn neg(&self, a: &Polynomial) -> Polynomial {
        -a
    }

    fn div(&self, a: &Polynomial, b: &Polynomial, column: usize) -> Result<Polynomial> {
        constant_divisor(b, column).map(|c| a.scale(&c))
    }

    fn pow(&self, a: &Polynomial, n: u32) -> Polynomial {
        a.pow(n)
    }
}

/// Kappa-style names such as `k-101` are only lexed as one identifier in the
/// kappa dialect, so rings using them switch dialect.
fn dialect_for(ring: &Ring) -> Dialect {
    let kappa_name = |n: &str| n.starts_with("k-");
    if (0..ring.nvars()).any(|i| kappa_name(ring.var_name(i))) {
        Dialect::Kappa
    } else {
        Dialect::Plain
    }
}

/// Parses `text` as a polynomial of `ring`.
pub fn parse_poly(ring: &Ring, text: &str) -> Result<Polynomial> {
    let e = parse_expr(text, dialect_for(ring))?;
    evaluate(&e, &PolyAlgebra { ring, bindings: None })
}

/// Like [`parse_poly`], with extra named polynomials in scope.
pub fn parse_poly_with(
    ring: &Ring,
    text: &str,
    bindings: &HashMap<String, Polynomial>,
) -> Result<Polynomial> {
    let e = parse_expr(text, dialect_for(ring))?;
    evaluate(
        &e,
        &PolyAlgebra {
            ring,
            bindings: Some(bindings),
        },
    )
}

/// Inverse of `b` when it is a nonzero constant.
fn constant_divisor(b: &Polynomial, column: usize) -> Result<ExactRational> {
    let one = crate::monomial::Monomial::one(b.ring().nvars());
    match b.terms().iter().next() {
        Some((m, c)) if b.len() == 1 && *m == one => Ok(ExactRational::from_integer(1.into()) / c),
        None => Err(Error::parse(column, "division by zero")),
        _ => Err(Error::parse(column, "can only divide by a nonzero constant")),
    }
}
