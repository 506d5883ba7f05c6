//! Expression grammar shared by the CLI, JSON files and configuration.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? INT)?
//! atom   := INT ('/' INT)? | symbol | minor | '(' expr ')'
//! symbol := IDENT ('[' INT (',' INT)* ']')? ('@' INT)*
//! minor  := '[' INT (',' INT)* '|' INT (',' INT)* ']'
//! ```
//!
//! A symbol names a generator of the active presentation (`x1`, `X[1,2]`,
//! `X[1,2]@1` in a tensor product) or a parameter (`q`, `p`, an alias).
//! `[1,2|1,3]` is the quantum minor with rows `{1,2}` and columns `{1,3}`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::pbw::{NcPoly, PbwError, Presentation};
use crate::scalar::{ParamSpace, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("lexical error at byte {pos}: {msg}")]
    Lex { pos: usize, msg: String },
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("negative power of a non-unit: `{0}`")]
    NonUnitPower(String),
    #[error("quantum minor `{0}` needs a quantum matrix algebra")]
    MinorOutsideMatrices(String),
    #[error("expected a scalar, found an expression involving generators")]
    NotScalar,
    #[error(transparent)]
    Pbw(#[from] PbwError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("{0}")]
    Minor(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// Nonnegative rational literal.
    Num(BigRational),
    /// Generator or parameter name in canonical spelling, e.g. `X[1,2]@1`.
    Symbol(String),
    Minor {
        rows: Vec<usize>,
        cols: Vec<usize>,
    },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Bar,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    At,
    End,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ExprError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                Tok::Int(text[start..i].parse().expect("digits"))
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                Tok::Ident(text[start..i].to_string())
            }
            _ => {
                i += 1;
                match c {
                    b'(' => Tok::LParen,
                    b')' => Tok::RParen,
                    b'[' => Tok::LBracket,
                    b']' => Tok::RBracket,
                    b',' => Tok::Comma,
                    b'|' => Tok::Bar,
                    b'+' => Tok::Plus,
                    b'-' => Tok::Minus,
                    b'*' => Tok::Star,
                    b'^' => Tok::Caret,
                    b'/' => Tok::Slash,
                    b'@' => Tok::At,
                    _ => {
                        let ch = text[start..].chars().next().unwrap_or('?');
                        return Err(ExprError::Lex { pos: start, msg: format!("unexpected character `{}`", ch) });
                    }
                }
            }
        };
        out.push((start, tok));
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

const MAX_DEPTH: usize = 200;

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), ExprError> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.err(format!("expected {}", what))
        }
    }

    fn small_int(&mut self, what: &str) -> Result<i64, ExprError> {
        match self.peek().clone() {
            Tok::Int(v) => {
                let pos = self.pos();
                self.bump();
                i64::try_from(v).map_err(|_| ExprError::Syntax { pos, msg: format!("{} out of range", what) })
            }
            _ => self.err(format!("expected {}", what)),
        }
    }

    fn index_list(&mut self) -> Result<Vec<usize>, ExprError> {
        let mut out = vec![self.small_int("index")? as usize];
        while *self.peek() == Tok::Comma {
            self.bump();
            out.push(self.small_int("index")? as usize);
        }
        Ok(out)
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return self.err("expression nested too deeply");
        }
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            self.depth += 1;
            if self.depth > MAX_DEPTH {
                return self.err("expression nested too deeply");
            }
            let inner = self.unary()?;
            self.depth -= 1;
            return Ok(Expr::Neg(Box::new(inner)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let neg = if *self.peek() == Tok::Minus {
                self.bump();
                true
            } else {
                false
            };
            let k = self.small_int("integer exponent")?;
            return Ok(Expr::Pow(Box::new(base), if neg { -k } else { k }));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let pos = self.pos();
                    let d = match self.bump() {
                        Tok::Int(d) => d,
                        _ => return Err(ExprError::Syntax { pos, msg: "expected denominator".into() }),
                    };
                    if d.is_zero() {
                        return Err(ExprError::Syntax { pos, msg: "zero denominator".into() });
                    }
                    Ok(Expr::Num(BigRational::new(n, d)))
                } else {
                    Ok(Expr::Num(BigRational::from_integer(n)))
                }
            }
            Tok::Ident(name) => {
                self.bump();
                let mut s = name;
                if *self.peek() == Tok::LBracket {
                    self.bump();
                    let idx = self.index_list()?;
                    self.expect(Tok::RBracket, "`]`")?;
                    let parts: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
                    s.push_str(&format!("[{}]", parts.join(",")));
                }
                while *self.peek() == Tok::At {
                    self.bump();
                    let k = self.small_int("tensor position")?;
                    s.push_str(&format!("@{}", k));
                }
                Ok(Expr::Symbol(s))
            }
            Tok::LBracket => {
                self.bump();
                let rows = self.index_list()?;
                self.expect(Tok::Bar, "`|`")?;
                let cols = self.index_list()?;
                self.expect(Tok::RBracket, "`]`")?;
                Ok(Expr::Minor { rows, cols })
            }
            Tok::LParen => {
                self.bump();
                let e = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Tok::End => self.err("unexpected end of input"),
            t => self.err(format!("unexpected token {:?}", t)),
        }
    }
}

pub fn parse_expression(text: &str) -> Result<Expr, ExprError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, depth: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.err("trailing input");
    }
    Ok(e)
}

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Num(_) | Expr::Symbol(_) | Expr::Minor { .. } => 5,
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let wrap = self.prec() < min;
        if wrap {
            write!(f, "(")?;
        }
        match self {
            Expr::Num(r) => write!(f, "{}", crate::scalar::fmt_rational(r))?,
            Expr::Symbol(s) => write!(f, "{}", s)?,
            Expr::Minor { rows, cols } => {
                let j = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
                write!(f, "[{}|{}]", j(rows), j(cols))?
            }
            Expr::Neg(a) => {
                write!(f, "-")?;
                a.write(f, 3)?;
            }
            Expr::Add(a, b) => {
                a.write(f, 1)?;
                write!(f, " + ")?;
                b.write(f, 2)?;
            }
            Expr::Sub(a, b) => {
                a.write(f, 1)?;
                write!(f, " - ")?;
                b.write(f, 2)?;
            }
            Expr::Mul(a, b) => {
                a.write(f, 2)?;
                write!(f, "*")?;
                b.write(f, 3)?;
            }
            Expr::Pow(a, k) => {
                let needs = match &**a {
                    Expr::Num(r) => !r.denom().is_one(),
                    other => other.prec() < 5,
                };
                if needs {
                    write!(f, "(")?;
                    a.write(f, 0)?;
                    write!(f, ")")?;
                } else {
                    a.write(f, 5)?;
                }
                write!(f, "^{}", k)?;
            }
        }
        if wrap {
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}

/// Where expressions are evaluated: a presentation, plus the matrix size when
/// the presentation is a quantum matrix algebra (enables `[I|J]`).
#[derive(Clone)]
pub struct EvalContext {
    pub algebra: Arc<Presentation>,
    pub matrix_size: Option<usize>,
}

impl EvalContext {
    pub fn new(algebra: &Arc<Presentation>) -> Self {
        EvalContext { algebra: algebra.clone(), matrix_size: None }
    }

    pub fn matrices(algebra: &Arc<Presentation>, n: usize) -> Self {
        EvalContext { algebra: algebra.clone(), matrix_size: Some(n) }
    }

    pub fn eval(&self, e: &Expr) -> Result<NcPoly, ExprError> {
        let alg = &self.algebra;
        Ok(match e {
            Expr::Num(r) => NcPoly::constant(alg, Scalar::constant(alg.nvars(), r.clone())),
            Expr::Symbol(s) => {
                if let Ok(g) = alg.generator_index(s) {
                    NcPoly::generator(alg, g)
                } else if let Some(c) = alg.space().lookup(s) {
                    NcPoly::constant(alg, c)
                } else {
                    return Err(ExprError::UnknownSymbol(s.clone()));
                }
            }
            Expr::Minor { rows, cols } => {
                let n = self.matrix_size.ok_or_else(|| ExprError::MinorOutsideMatrices(e.to_string()))?;
                let idx = crate::qmatrix::MinorIndex::new(rows.clone(), cols.clone(), n)
                    .map_err(|err| ExprError::Minor(err.to_string()))?;
                crate::qmatrix::qminor_in(alg, n, &idx).map_err(|err| ExprError::Minor(err.to_string()))?
            }
            Expr::Neg(a) => -&self.eval(a)?,
            Expr::Add(a, b) => &self.eval(a)? + &self.eval(b)?,
            Expr::Sub(a, b) => &self.eval(a)? - &self.eval(b)?,
            Expr::Mul(a, b) => &self.eval(a)? * &self.eval(b)?,
            Expr::Pow(a, k) => {
                let base = self.eval(a)?;
                if *k >= 0 {
                    let k = u32::try_from(*k).map_err(|_| ExprError::NonUnitPower(e.to_string()))?;
                    if k > 4096 {
                        return Err(ExprError::NonUnitPower(e.to_string()));
                    }
                    base.pow(k)
                } else {
                    let s = as_scalar(&base).ok_or_else(|| ExprError::NonUnitPower(e.to_string()))?;
                    let inv = s.inv_monomial().map_err(|_| ExprError::NonUnitPower(e.to_string()))?;
                    NcPoly::constant(alg, inv.pow(-*k).map_err(|_| ExprError::NonUnitPower(e.to_string()))?)
                }
            }
        })
    }

    pub fn parse_eval(&self, text: &str) -> Result<NcPoly, ExprError> {
        self.eval(&parse_expression(text)?)
    }
}

fn as_scalar(p: &NcPoly) -> Option<Scalar> {
    if p.terms().all(|(m, _)| m.is_one()) {
        Some(p.constant_term())
    } else {
        None
    }
}

/// Parses a scalar (no generators) over `space`.
pub fn parse_scalar(text: &str, space: &ParamSpace) -> Result<Scalar, ExprError> {
    let ground = Presentation::ground(Arc::new(space.clone()));
    let p = EvalContext::new(&ground).parse_eval(text)?;
    Ok(p.constant_term())
}

/// Parses a scalar, refusing anything that mentions generators of `alg`.
pub fn parse_scalar_in(text: &str, alg: &Arc<Presentation>) -> Result<Scalar, ExprError> {
    let p = EvalContext::new(alg).parse_eval(text)?;
    as_scalar(&p).ok_or(ExprError::NotScalar)
}
