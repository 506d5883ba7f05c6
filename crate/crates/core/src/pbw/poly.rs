use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{Monomial, PbwError, Presentation};
use crate::scalar::{fmt_rational, Scalar};

type Terms = BTreeMap<Monomial, Scalar>;

fn add_into(terms: &mut Terms, m: Monomial, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += &c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Accumulates `coeff · (m · g)` in normal form.
///
/// With `u` the largest generator of `m` and `u > g`, writes `m = m'·u` and
/// uses `u·g = s·g·u + Σ c_k w_k`, so `m·g = s·(m'·g)·u + Σ c_k m'·w_k`.
/// Every step lowers the grlex order of the unsorted part, so this terminates.
fn mul_monomial_generator(alg: &Presentation, m: &Monomial, g: usize, coeff: &Scalar, out: &mut Terms) {
    let u = match m.max_generator() {
        Some(u) if u > g => u,
        _ => {
            let mut m = m.clone();
            m.bump(g, 1);
            add_into(out, m, coeff.clone());
            return;
        }
    };
    let mut rest = m.clone();
    rest.bump(u, -1);
    let rule = alg.rule(u, g);

    let mut swapped = Terms::new();
    mul_monomial_generator(alg, &rest, g, &(coeff * &rule.swap), &mut swapped);
    for (t, c) in swapped {
        mul_monomial_generator(alg, &t, u, &c, out);
    }

    for (cc, corr) in &rule.corrections {
        let mut cur = Terms::new();
        cur.insert(rest.clone(), coeff * cc);
        for letter in corr.word() {
            let mut next = Terms::new();
            for (t, c) in &cur {
                mul_monomial_generator(alg, t, letter, c, &mut next);
            }
            cur = next;
        }
        for (t, c) in cur {
            add_into(out, t, c);
        }
    }
}

/// An element of a presented algebra, stored in PBW normal form.
#[derive(Clone)]
pub struct NcPoly {
    alg: Arc<Presentation>,
    terms: Terms,
}

impl PartialEq for NcPoly {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.alg, &other.alg) && self.terms == other.terms
    }
}

impl Eq for NcPoly {}

pub(crate) fn same_algebra(a: &Arc<Presentation>, b: &Arc<Presentation>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcPoly({})", self)
    }
}

impl NcPoly {
    pub fn zero(alg: &Arc<Presentation>) -> Self {
        NcPoly { alg: alg.clone(), terms: Terms::new() }
    }

    pub fn one(alg: &Arc<Presentation>) -> Self {
        Self::constant(alg, alg.scalar_one())
    }

    pub fn constant(alg: &Arc<Presentation>, c: Scalar) -> Self {
        Self::from_monomial(alg, Monomial::one(alg.ngens()), c)
    }

    pub fn generator(alg: &Arc<Presentation>, g: usize) -> Self {
        Self::from_monomial(alg, Monomial::generator(alg.ngens(), g), alg.scalar_one())
    }

    pub fn generator_named(alg: &Arc<Presentation>, name: &str) -> Result<Self, PbwError> {
        Ok(Self::generator(alg, alg.generator_index(name)?))
    }

    /// A sorted monomial times a scalar; the monomial is taken as already normal.
    pub fn from_monomial(alg: &Arc<Presentation>, m: Monomial, c: Scalar) -> Self {
        assert_eq!(m.len(), alg.ngens(), "monomial length");
        let mut terms = Terms::new();
        add_into(&mut terms, m, c);
        NcPoly { alg: alg.clone(), terms }
    }

    /// Normal form of the raw product `g_1 · g_2 ··· g_k`.
    pub fn from_word(alg: &Arc<Presentation>, word: &[usize]) -> Self {
        let mut p = NcPoly::one(alg);
        for &g in word {
            p = p.mul_generator(g);
        }
        p
    }

    /// Normal form of a product of named generators.
    pub fn normal_form(alg: &Arc<Presentation>, names: &[&str]) -> Result<Self, PbwError> {
        let word = names.iter().map(|n| alg.generator_index(n)).collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_word(alg, &word))
    }

    /// Builds from arbitrary `(monomial, scalar)` pairs, merging duplicates.
    /// Monomials are exponent vectors, hence already sorted.
    pub fn from_terms<I>(alg: &Arc<Presentation>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut out = Terms::new();
        for (m, c) in terms {
            assert_eq!(m.len(), alg.ngens(), "monomial length");
            add_into(&mut out, m, c);
        }
        NcPoly { alg: alg.clone(), terms: out }
    }

    pub fn algebra(&self) -> &Arc<Presentation> {
        &self.alg
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| Scalar::zero(self.alg.nvars()))
    }

    /// The constant part (coefficient of the empty monomial).
    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::one(self.alg.ngens()))
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, s: &Scalar) -> NcPoly {
        let mut terms = Terms::new();
        for (m, c) in &self.terms {
            add_into(&mut terms, m.clone(), c * s);
        }
        NcPoly { alg: self.alg.clone(), terms }
    }

    /// `self · X_g`, normalized.
    pub fn mul_generator(&self, g: usize) -> NcPoly {
        let mut out = Terms::new();
        for (m, c) in &self.terms {
            mul_monomial_generator(&self.alg, m, g, c, &mut out);
        }
        NcPoly { alg: self.alg.clone(), terms: out }
    }

    fn check(&self, other: &NcPoly) -> Result<(), PbwError> {
        if same_algebra(&self.alg, &other.alg) {
            Ok(())
        } else {
            Err(PbwError::PresentationMismatch)
        }
    }

    pub fn try_add(&self, other: &NcPoly) -> Result<NcPoly, PbwError> {
        self.check(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_into(&mut terms, m.clone(), c.clone());
        }
        Ok(NcPoly { alg: self.alg.clone(), terms })
    }

    pub fn try_sub(&self, other: &NcPoly) -> Result<NcPoly, PbwError> {
        self.try_add(&-other)
    }

    /// Product in normal form: each right-hand monomial is appended letter by
    /// letter and straightened.
    pub fn try_mul(&self, other: &NcPoly) -> Result<NcPoly, PbwError> {
        self.check(other)?;
        let mut out = Terms::new();
        for (m2, c2) in &other.terms {
            let mut cur = self.terms.clone();
            for g in m2.word() {
                let mut next = Terms::new();
                for (m, c) in &cur {
                    mul_monomial_generator(&self.alg, m, g, c, &mut next);
                }
                cur = next;
            }
            for (m, c) in cur {
                add_into(&mut out, m, &c * c2);
            }
        }
        Ok(NcPoly { alg: self.alg.clone(), terms: out })
    }

    pub fn pow(&self, k: u32) -> NcPoly {
        let mut acc = NcPoly::one(&self.alg);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn commutator(&self, other: &NcPoly) -> Result<NcPoly, PbwError> {
        self.try_mul(other)?.try_sub(&other.try_mul(self)?)
    }

    /// Re-straightens every term; a normal-form polynomial is a fixed point.
    pub fn renormalized(&self) -> NcPoly {
        let mut out = NcPoly::zero(&self.alg);
        for (m, c) in &self.terms {
            out = &out + &NcPoly::from_word(&self.alg, &m.word()).scale(c);
        }
        out
    }

    /// Writes the polynomial in the expression grammar.
    pub fn to_expression(&self) -> String {
        self.to_string()
    }

    /// Term list for JSON export, largest monomial first.
    pub fn to_json(&self) -> serde_json::Value {
        let space = self.alg.space();
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let word: Vec<&str> = m.word().iter().map(|&g| self.alg.generators()[g].as_str()).collect();
                serde_json::json!({ "coeff": c.display(space).to_string(), "word": word })
            })
            .collect();
        serde_json::Value::Array(terms)
    }
}

pub(crate) fn monomial_text(alg: &Presentation, m: &Monomial) -> String {
    let parts: Vec<String> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(g, &e)| if e == 1 { alg.generators()[g].clone() } else { format!("{}^{}", alg.generators()[g], e) })
        .collect();
    parts.join("*")
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let space = self.alg.space();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono = monomial_text(&self.alg, m);
            let (neg, body) = if c.needs_parens() {
                let s = c.display(space).to_string();
                if mono.is_empty() {
                    (false, format!("({})", s))
                } else {
                    (false, format!("({})*{}", s, mono))
                }
            } else {
                let (e, r) = c.as_unit().expect("single term");
                let neg = r < &num_rational::BigRational::from_integer(0.into());
                let abs = if neg { -r.clone() } else { r.clone() };
                let pm = crate::scalar::fmt_param_monomial(e, space);
                let mut factors = Vec::new();
                if !num_traits::One::is_one(&abs) || (pm.is_empty() && mono.is_empty()) {
                    factors.push(fmt_rational(&abs));
                }
                if !pm.is_empty() {
                    factors.push(pm);
                }
                if !mono.is_empty() {
                    factors.push(mono);
                }
                (neg, factors.join("*"))
            };
            match (k, neg) {
                (0, true) => write!(f, "-{}", body)?,
                (0, false) => write!(f, "{}", body)?,
                (_, true) => write!(f, " - {}", body)?,
                (_, false) => write!(f, " + {}", body)?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a NcPoly> for &'a NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &'a NcPoly) -> NcPoly {
        self.try_add(rhs).expect("operands share a presentation")
    }
}

impl<'a> Sub<&'a NcPoly> for &'a NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &'a NcPoly) -> NcPoly {
        self.try_sub(rhs).expect("operands share a presentation")
    }
}

impl<'a> Mul<&'a NcPoly> for &'a NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &'a NcPoly) -> NcPoly {
        self.try_mul(rhs).expect("operands share a presentation")
    }
}

impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly { alg: self.alg.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}
