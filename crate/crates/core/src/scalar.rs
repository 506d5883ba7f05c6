//! Exact coefficient ring: Laurent polynomials with rational coefficients in a
//! finite set of formal parameters.
//!
//! Parameters are algebraically independent, so a scalar equals `1` only when
//! it is literally the constant `1`. In particular `q^m = 1` forces `m = 0`,
//! which is how "q is not a root of unity" is encoded throughout the crate.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("scalar `{0}` is not a unit of the Laurent ring")]
    NonUnit(String),
    #[error("parameter `{0}` declared more than once")]
    DuplicateParam(String),
    #[error("unknown parameter `{0}`")]
    UnknownParam(String),
    #[error("invalid parameter name `{0}`")]
    InvalidName(String),
    #[error("parameter `{name}` cannot be given the numeric value `{value}`: parameters are formal")]
    NumericValueUnsupported { name: String, value: String },
}

/// Ordered list of formal parameter names, plus optional aliases.
///
/// An alias names a monomial in the declared parameters, e.g. `q = p^2` when
/// `p` is a chosen square root of `q`. The aliased name never becomes an
/// independent variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamSpace {
    names: Vec<String>,
    aliases: Vec<(String, Vec<i32>)>,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl ParamSpace {
    pub fn new<I, S>(names: I) -> Result<Self, ScalarError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out = ParamSpace { names: Vec::new(), aliases: Vec::new() };
        for name in names {
            let name = name.into();
            if !is_identifier(&name) {
                return Err(ScalarError::InvalidName(name));
            }
            if out.names.contains(&name) {
                return Err(ScalarError::DuplicateParam(name));
            }
            out.names.push(name);
        }
        Ok(out)
    }

    /// The single-parameter space `{q}`.
    pub fn single_q() -> Self {
        ParamSpace::new(["q"]).expect("valid name")
    }

    /// Declares `alias` as a name for the monomial `Π param_t^{exponents[t]}`.
    pub fn with_alias(mut self, alias: &str, exponents: Vec<i32>) -> Result<Self, ScalarError> {
        if !is_identifier(alias) {
            return Err(ScalarError::InvalidName(alias.to_string()));
        }
        if self.names.iter().any(|n| n == alias) || self.aliases.iter().any(|(n, _)| n == alias) {
            return Err(ScalarError::DuplicateParam(alias.to_string()));
        }
        assert_eq!(exponents.len(), self.names.len(), "alias exponent length");
        self.aliases.push((alias.to_string(), exponents));
        Ok(self)
    }

    /// Declares `square = root^2`, where `root` is an existing parameter.
    pub fn with_square_root(self, square: &str, root: &str) -> Result<Self, ScalarError> {
        let idx = self.index_of(root).ok_or_else(|| ScalarError::UnknownParam(root.to_string()))?;
        let mut exps = vec![0; self.names.len()];
        exps[idx] = 2;
        self.with_alias(square, exps)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn aliases(&self) -> impl Iterator<Item = (&str, &[i32])> {
        self.aliases.iter().map(|(n, e)| (n.as_str(), e.as_slice()))
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Resolves a parameter or alias name to its scalar.
    pub fn lookup(&self, name: &str) -> Option<Scalar> {
        if let Some(i) = self.index_of(name) {
            return Some(Scalar::param(self.len(), i));
        }
        self.aliases.iter().find(|(n, _)| n == name).map(|(_, e)| Scalar::monomial(e.clone(), BigRational::one()))
    }

    pub fn param(&self, name: &str) -> Result<Scalar, ScalarError> {
        self.lookup(name).ok_or_else(|| ScalarError::UnknownParam(name.to_string()))
    }

    /// Parameters are formal; specialization to field elements is refused.
    pub fn declare_value(&self, name: &str, value: &str) -> Result<(), ScalarError> {
        Err(ScalarError::NumericValueUnsupported { name: name.to_string(), value: value.to_string() })
    }

    pub fn into_arc(self) -> Arc<Self> {
        Arc::new(self)
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero(self.len())
    }

    pub fn one(&self) -> Scalar {
        Scalar::one(self.len())
    }

    pub fn int(&self, v: i64) -> Scalar {
        Scalar::from_int(self.len(), v)
    }
}

/// A Laurent polynomial with rational coefficients.
///
/// Terms are kept in a `BTreeMap` keyed by exponent vector, so equality and
/// hashing are structural. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, BigRational>,
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar(")?;
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*{:?}", c, e)?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

impl Scalar {
    pub fn zero(nvars: usize) -> Self {
        Scalar { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    pub fn from_int(nvars: usize, v: i64) -> Self {
        Self::constant(nvars, BigRational::from_integer(BigInt::from(v)))
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exponents: Vec<i32>, coeff: BigRational) -> Self {
        let nvars = exponents.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponents, coeff);
        }
        Scalar { nvars, terms }
    }

    pub fn param(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Self::monomial(e, BigRational::one())
    }

    /// Builds a scalar from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i32>, BigRational)>,
    {
        let mut out = Scalar::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            out.add_term(e, c);
        }
        out
    }

    fn add_term(&mut self, e: Vec<i32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[i32], &BigRational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    /// Single-term scalars are exactly the units of the Laurent ring over `Q`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    /// Constant term as a rational, if the scalar has no parameter dependence.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// The exponent vector and coefficient of a single-term scalar.
    pub fn as_unit(&self) -> Option<(&[i32], &BigRational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (e.as_slice(), c))
        } else {
            None
        }
    }

    pub fn inv_monomial(&self) -> Result<Scalar, ScalarError> {
        let (e, c) = self.as_unit().ok_or_else(|| ScalarError::NonUnit(format!("{:?}", self)))?;
        Ok(Scalar::monomial(e.iter().map(|x| -x).collect(), c.recip()))
    }

    /// Integer power; negative exponents require a unit.
    pub fn pow(&self, k: i64) -> Result<Scalar, ScalarError> {
        if k < 0 {
            let inv = self.inv_monomial()?;
            return inv.pow(-k);
        }
        let mut base = self.clone();
        let mut acc = Scalar::one(self.nvars);
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &BigRational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero(self.nvars);
        }
        Scalar { nvars: self.nvars, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    /// Rebuilds the term map from scratch. Canonical scalars are fixed points.
    pub fn renormalized(&self) -> Scalar {
        Scalar::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.clone(), c.clone())))
    }

    /// Multiplies by a unit given as an exponent vector (coefficient one).
    pub fn shift(&self, exps: &[i32]) -> Scalar {
        Scalar {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn display<'a>(&'a self, space: &'a ParamSpace) -> ScalarDisplay<'a> {
        ScalarDisplay { scalar: self, space }
    }

    /// True when printing this scalar as a product factor needs parentheses.
    pub fn needs_parens(&self) -> bool {
        self.terms.len() > 1
    }

    /// Sign of the leading (largest) term, used when printing sums.
    pub fn leading_is_negative(&self) -> bool {
        self.terms.iter().next_back().map(|(_, c)| c.is_negative()).unwrap_or(false)
    }
}

fn check_nvars(a: &Scalar, b: &Scalar) {
    assert_eq!(a.nvars, b.nvars, "scalars from different parameter spaces");
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        check_nvars(self, rhs);
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        check_nvars(self, rhs);
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c.clone());
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        check_nvars(self, rhs);
        let mut out = Scalar::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

pub(crate) fn fmt_rational(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Writes the parameter part of a monomial (`p*l1^2`); empty for the constant.
pub(crate) fn fmt_param_monomial(e: &[i32], space: &ParamSpace) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        let name = space.names().get(i).map(String::as_str).unwrap_or("?");
        if k == 1 {
            parts.push(name.to_string());
        } else {
            parts.push(format!("{}^{}", name, k));
        }
    }
    parts.join("*")
}

/// Formats `|c| * monomial`, omitting a unit coefficient.
fn fmt_abs_term(e: &[i32], c: &BigRational, space: &ParamSpace) -> String {
    let mono = fmt_param_monomial(e, space);
    let abs = c.abs();
    if mono.is_empty() {
        fmt_rational(&abs)
    } else if abs.is_one() {
        mono
    } else {
        format!("{}*{}", fmt_rational(&abs), mono)
    }
}

pub struct ScalarDisplay<'a> {
    scalar: &'a Scalar,
    space: &'a ParamSpace,
}

impl fmt::Display for ScalarDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.scalar.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.scalar.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{}", fmt_abs_term(e, c, self.space))?;
        }
        Ok(())
    }
}
