//! Tokens and polynomial expressions shared by the library and the script
//! front end.
//!
//! Expressions use `+ - * / ^` with the usual precedence, integer literals,
//! identifiers and parentheses. Division is only allowed by nonzero
//! constants, so `1/2*x` and `x/3` are fine while `x/y` is rejected at
//! evaluation time.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::poly::{Polynomial, RingRef};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    Int(BigInt),
    Sym(&'static str),
    Eof,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub line: usize,
    pub column: usize,
}

const SYMBOLS: &[&str] = &[
    "->", "+", "-", "*", "/", "^", "(", ")", "[", "]", "{", "}", ",", ";", "=", "|", ":",
];

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

/// Splits `text` into tokens; `#` starts a comment running to the end of
/// the line.
pub fn tokenize(text: &str) -> Result<Vec<Token>> {
    tokenize_with(text, &[])
}

/// Like [`tokenize`], but the hyphenated words in `compounds` (such as
/// `verify-relation`) lex as single identifiers. Elsewhere `x-y` is three
/// tokens.
pub fn tokenize_with(text: &str, compounds: &[&str]) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let (tl, tc) = (line, col);
        if is_ident_start(c) {
            let start = i;
            i += 1;
            while i < chars.len() && is_ident_char(chars[i]) {
                i += 1;
            }
            for word in compounds {
                let w: Vec<char> = word.chars().collect();
                let end = start + w.len();
                let boundary = end >= chars.len() || !is_ident_char(chars[end]);
                if end <= chars.len() && chars[start..end] == w[..] && boundary && end > i {
                    i = end;
                    break;
                }
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            out.push(Token {
                kind: TokenKind::Ident(s),
                line: tl,
                column: tc,
            });
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            out.push(Token {
                kind: TokenKind::Int(s.parse().unwrap()),
                line: tl,
                column: tc,
            });
            continue;
        }
        let rest: String = chars[i..chars.len().min(i + 2)].iter().collect();
        match SYMBOLS.iter().find(|s| rest.starts_with(*s)) {
            Some(s) => {
                i += s.len();
                col += s.len();
                out.push(Token {
                    kind: TokenKind::Sym(s),
                    line: tl,
                    column: tc,
                });
            }
            None => {
                return Err(Error::Syntax {
                    line,
                    column: col,
                    message: format!("unexpected character `{c}`"),
                })
            }
        }
    }
    out.push(Token {
        kind: TokenKind::Eof,
        line,
        column: col,
    });
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(BigInt),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Num(_) | Expr::Var(_) => 5,
        }
    }

    /// Evaluates in `ring`; identifiers resolve to ring variables first and
    /// then to `lookup`.
    pub fn eval(&self, ring: &RingRef, lookup: &dyn Fn(&str) -> Option<Polynomial>) -> Result<Polynomial> {
        Ok(match self {
            Expr::Num(n) => Polynomial::constant(ring, ring.field().from_rational(&Scalar::from_integer(n.clone()))?),
            Expr::Var(v) => match ring.index_of(v) {
                Some(i) => Polynomial::var(ring, i),
                None => match lookup(v) {
                    Some(p) => p.embed_by_name(ring)?,
                    None => return Err(Error::UnknownVariable(v.clone())),
                },
            },
            Expr::Neg(a) => -&a.eval(ring, lookup)?,
            Expr::Add(a, b) => &a.eval(ring, lookup)? + &b.eval(ring, lookup)?,
            Expr::Sub(a, b) => &a.eval(ring, lookup)? - &b.eval(ring, lookup)?,
            Expr::Mul(a, b) => &a.eval(ring, lookup)? * &b.eval(ring, lookup)?,
            Expr::Div(a, b) => {
                let num = a.eval(ring, lookup)?;
                let den = b.eval(ring, lookup)?;
                if !den.is_constant() || den.is_zero() {
                    return Err(Error::Unsupported(format!("division by the nonconstant or zero expression {b}")));
                }
                let c = den.leading_coeff().unwrap().clone();
                num.scale(&ring.field().inv(&c))
            }
            Expr::Pow(a, e) => a.eval(ring, lookup)?.pow(*e),
        })
    }

    pub fn vars(&self, out: &mut Vec<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone())
                }
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.vars(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.vars(out);
                b.vars(out);
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn child(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
            if e.precedence() < min {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        }
        match self {
            Expr::Num(n) => write!(f, "{n}"),
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Neg(a) => {
                write!(f, "-")?;
                child(f, a, 3)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                child(f, a, 1)?;
                write!(f, "{}", if matches!(self, Expr::Add(..)) { " + " } else { " - " })?;
                child(f, b, 2)
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                child(f, a, 2)?;
                write!(f, "{}", if matches!(self, Expr::Mul(..)) { "*" } else { "/" })?;
                child(f, b, 3)
            }
            Expr::Pow(a, e) => {
                child(f, a, 5)?;
                write!(f, "^{e}")
            }
        }
    }
}

/// Cursor over a token list.
pub struct TokenStream<'a> {
    tokens: &'a [Token],
    pos: usize,
}

impl<'a> TokenStream<'a> {
    pub fn new(tokens: &'a [Token]) -> Self {
        TokenStream { tokens, pos: 0 }
    }

    pub fn peek(&self) -> &'a Token {
        &self.tokens[self.pos.min(self.tokens.len() - 1)]
    }

    pub fn peek_at(&self, k: usize) -> &'a Token {
        &self.tokens[(self.pos + k).min(self.tokens.len() - 1)]
    }

    pub fn next(&mut self) -> &'a Token {
        let t = self.peek();
        if self.pos < self.tokens.len() - 1 {
            self.pos += 1;
        }
        t
    }

    pub fn at_eof(&self) -> bool {
        self.peek().kind == TokenKind::Eof
    }

    pub fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek().kind, TokenKind::Sym(x) if x == s)
    }

    pub fn is_ident(&self, s: &str) -> bool {
        matches!(&self.peek().kind, TokenKind::Ident(x) if x == s)
    }

    pub fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        let t = self.peek();
        let found = match &t.kind {
            TokenKind::Eof => "end of input".to_string(),
            TokenKind::Ident(s) => format!("`{s}`"),
            TokenKind::Int(n) => format!("`{n}`"),
            TokenKind::Sym(s) => format!("`{s}`"),
        };
        Err(Error::Syntax {
            line: t.line,
            column: t.column,
            message: format!("{}, found {found}", message.into()),
        })
    }

    pub fn expect_sym(&mut self, s: &str) -> Result<()> {
        if self.is_sym(s) {
            self.next();
            Ok(())
        } else {
            self.error(format!("expected `{s}`"))
        }
    }

    pub fn eat_sym(&mut self, s: &str) -> bool {
        if self.is_sym(s) {
            self.next();
            true
        } else {
            false
        }
    }

    pub fn expect_ident(&mut self) -> Result<String> {
        match &self.peek().kind {
            TokenKind::Ident(s) => {
                let s = s.clone();
                self.next();
                Ok(s)
            }
            _ => self.error("expected an identifier"),
        }
    }

    pub fn expect_keyword(&mut self, kw: &str) -> Result<()> {
        if self.is_ident(kw) {
            self.next();
            Ok(())
        } else {
            self.error(format!("expected `{kw}`"))
        }
    }

    pub fn expect_int(&mut self) -> Result<BigInt> {
        match &self.peek().kind {
            TokenKind::Int(n) => {
                let n = n.clone();
                self.next();
                Ok(n)
            }
            _ => self.error("expected an integer"),
        }
    }

    pub fn parse_expr(&mut self) -> Result<Expr> {
        let mut lhs = self.parse_term()?;
        loop {
            if self.eat_sym("+") {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.parse_term()?));
            } else if self.eat_sym("-") {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.parse_term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn parse_term(&mut self) -> Result<Expr> {
        let mut lhs = self.parse_unary()?;
        loop {
            if self.eat_sym("*") {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.parse_unary()?));
            } else if self.eat_sym("/") {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.parse_unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn parse_unary(&mut self) -> Result<Expr> {
        if self.eat_sym("-") {
            return Ok(Expr::Neg(Box::new(self.parse_unary()?)));
        }
        let base = self.parse_atom()?;
        if self.eat_sym("^") {
            let e = self.expect_int()?;
            let e = u32::try_from(e).or_else(|_| self.error("exponent out of range"))?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn parse_atom(&mut self) -> Result<Expr> {
        match &self.peek().kind {
            TokenKind::Int(n) => {
                let n = n.clone();
                self.next();
                Ok(Expr::Num(n))
            }
            TokenKind::Ident(s) => {
                let s = s.clone();
                self.next();
                Ok(Expr::Var(s))
            }
            TokenKind::Sym("(") => {
                self.next();
                let e = self.parse_expr()?;
                self.expect_sym(")")?;
                Ok(e)
            }
            _ => self.error("expected an expression"),
        }
    }
}

/// Parses a single polynomial in `ring`.
pub fn parse_polynomial(ring: &RingRef, text: &str) -> Result<Polynomial> {
    let tokens = tokenize(text)?;
    let mut ts = TokenStream::new(&tokens);
    let e = ts.parse_expr()?;
    if !ts.at_eof() {
        return ts.error("expected end of expression");
    }
    e.eval(ring, &|_| None)
}

impl Expr {
    pub fn is_zero_literal(&self) -> bool {
        matches!(self, Expr::Num(n) if n.is_zero())
    }
}
