//! Cocycle twists of `ℤ^n`-graded commutative monomial algebras.
//!
//! A bilinear cocycle `c(α,β) = Π_t param_t^{B_t(α,β)}` twists the product of
//! a graded commutative algebra to `r ∗ s = c(α,β)·rs`. Twisting the
//! polynomial ring by a cocycle whose antisymmetrization is `q` gives the
//! quantum affine space `O_q(k^n)`.

pub mod prim_map;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use thiserror::Error;

use crate::pbw::{Monomial, NcPoly, PbwError, Presentation, QMatrix};
use crate::scalar::{ParamSpace, Scalar};
use crate::strata::{CommutationSpec, StrataError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwistError {
    #[error("degree {0:?} has the wrong length or lies outside the basis")]
    DegreeMismatch(Vec<i64>),
    #[error("product degree {0:?} exceeds the truncation bound")]
    Truncated(Vec<i64>),
    #[error("the algebra's commutation scalars do not match the cocycle at ({0}, {1})")]
    MismatchedQ(usize, usize),
    #[error("forms must be {n} × {n}, one per parameter")]
    Shape { n: usize },
    #[error("the algebra is not a quantum affine space on {0} generators")]
    NotAffine(usize),
    #[error(transparent)]
    Strata(#[from] StrataError),
    #[error(transparent)]
    Pbw(#[from] PbwError),
}

/// `c(α, β) = Π_t param_t^{αᵀ B_t β}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleSpec {
    space: Arc<ParamSpace>,
    n: usize,
    forms: Vec<Vec<Vec<i64>>>,
}

impl CocycleSpec {
    pub fn new(space: &Arc<ParamSpace>, n: usize, forms: Vec<Vec<Vec<i64>>>) -> Result<Self, TwistError> {
        let ok = forms.len() == space.len() && forms.iter().all(|b| b.len() == n && b.iter().all(|r| r.len() == n));
        if !ok {
            return Err(TwistError::Shape { n });
        }
        Ok(CocycleSpec { space: space.clone(), n, forms })
    }

    /// `c ≡ 1`.
    pub fn trivial(space: &Arc<ParamSpace>, n: usize) -> Self {
        CocycleSpec { space: space.clone(), n, forms: vec![vec![vec![0; n]; n]; space.len()] }
    }

    pub fn space(&self) -> &Arc<ParamSpace> {
        &self.space
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn forms(&self) -> &[Vec<Vec<i64>>] {
        &self.forms
    }

    fn exponents(&self, a: &[i64], b: &[i64]) -> Vec<i32> {
        self.forms
            .iter()
            .map(|f| {
                let mut s = 0i64;
                for i in 0..self.n {
                    if a[i] != 0 {
                        for j in 0..self.n {
                            s += a[i] * f[i][j] * b[j];
                        }
                    }
                }
                i32::try_from(s).expect("cocycle exponent fits i32")
            })
            .collect()
    }

    pub fn eval(&self, a: &[i64], b: &[i64]) -> Scalar {
        assert!(a.len() == self.n && b.len() == self.n, "degree length");
        Scalar::monomial(self.exponents(a, b), num_traits::One::one())
    }

    /// `c(α,β)·c(α+β,γ) = c(β,γ)·c(α,β+γ)`.
    pub fn cocycle_identity(&self, a: &[i64], b: &[i64], g: &[i64]) -> bool {
        let add = |x: &[i64], y: &[i64]| x.iter().zip(y).map(|(p, q)| p + q).collect::<Vec<_>>();
        let lhs = &self.eval(a, b) * &self.eval(&add(a, b), g);
        let rhs = &self.eval(b, g) * &self.eval(a, &add(b, g));
        lhs == rhs
    }

    /// `c(ε_i, ε_j) / c(ε_j, ε_i)`, one-based.
    pub fn antisymmetrization(&self, i: usize, j: usize) -> Scalar {
        let e = |k: usize| {
            let mut v = vec![0; self.n];
            v[k - 1] = 1;
            v
        };
        &self.eval(&e(i), &e(j)) * &self.eval(&e(j), &e(i)).inv_monomial().expect("unit")
    }

    /// `c†(α, β) = c(β, α)^{-1}`, i.e. `B ↦ -Bᵀ`.
    pub fn transpose_inverse(&self) -> Self {
        let forms =
            self.forms.iter().map(|f| (0..self.n).map(|i| (0..self.n).map(|j| -f[j][i]).collect()).collect()).collect();
        CocycleSpec { space: self.space.clone(), n: self.n, forms }
    }
}

/// The upper-triangular cocycle for `q`: `B_t(ε_i, ε_j) = E_t[i][j]` for
/// `i < j`, zero otherwise, where `q_ij = Π_t param_t^{E_t[i][j]}`.
pub fn standard_cocycle(space: &Arc<ParamSpace>, q: &QMatrix) -> Result<CocycleSpec, TwistError> {
    // the QMatrix constructor already enforced antisymmetry
    let spec = CommutationSpec::from_q_matrix(space, q)?;
    let n = q.size();
    let forms = spec
        .exponents()
        .iter()
        .map(|e| (0..n).map(|i| (0..n).map(|j| if i < j { e[i][j] } else { 0 }).collect()).collect())
        .collect();
    CocycleSpec::new(space, n, forms)
}

/// Which graded pieces are one-dimensional basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwistBasis {
    /// `k[x_1..x_n]`, degrees in `(ℤ⁺)^n`.
    Polynomial,
    /// The semigroup algebra spanned by sums of at most `bound` of the given
    /// generator degrees.
    Semigroup { generators: Vec<Vec<i64>>, bound: usize },
}

#[derive(Clone, Debug)]
pub struct TwistedAlgebra {
    cocycle: CocycleSpec,
    basis: TwistBasis,
    /// Admissible degrees in semigroup mode.
    members: Option<BTreeSet<Vec<i64>>>,
}

/// A finite sum `Σ s_α x^α` indexed by degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistElement {
    pub terms: BTreeMap<Vec<i64>, Scalar>,
}

impl TwistElement {
    pub fn zero() -> Self {
        TwistElement { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomial(degree: Vec<i64>, c: Scalar) -> Self {
        let mut e = TwistElement::zero();
        e.add_term(degree, c);
        e
    }

    pub fn add_term(&mut self, degree: Vec<i64>, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(degree.clone()).or_insert_with(|| Scalar::zero(c.nvars()));
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&degree);
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = TwistElement::zero();
        for (d, c) in &self.terms {
            out.add_term(d.clone(), c * s);
        }
        out
    }

    pub fn sub(&self, other: &TwistElement) -> Self {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), -c);
        }
        out
    }
}

impl TwistedAlgebra {
    pub fn polynomial(cocycle: CocycleSpec) -> Self {
        TwistedAlgebra { cocycle, basis: TwistBasis::Polynomial, members: None }
    }

    pub fn semigroup(cocycle: CocycleSpec, generators: Vec<Vec<i64>>, bound: usize) -> Result<Self, TwistError> {
        let n = cocycle.n;
        if let Some(g) = generators.iter().find(|g| g.len() != n) {
            return Err(TwistError::DegreeMismatch(g.clone()));
        }
        let mut members: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut frontier = vec![vec![0i64; n]];
        members.insert(vec![0; n]);
        for _ in 0..bound {
            let mut next = Vec::new();
            for d in &frontier {
                for g in &generators {
                    let s: Vec<i64> = d.iter().zip(g).map(|(a, b)| a + b).collect();
                    if members.insert(s.clone()) {
                        next.push(s);
                    }
                }
            }
            frontier = next;
        }
        Ok(TwistedAlgebra { cocycle, basis: TwistBasis::Semigroup { generators, bound }, members: Some(members) })
    }

    pub fn cocycle(&self) -> &CocycleSpec {
        &self.cocycle
    }

    pub fn basis(&self) -> &TwistBasis {
        &self.basis
    }

    fn nvars(&self) -> usize {
        self.cocycle.space.len()
    }

    fn admissible(&self, d: &[i64]) -> bool {
        d.len() == self.cocycle.n
            && match &self.members {
                None => d.iter().all(|&x| x >= 0),
                Some(m) => m.contains(d),
            }
    }

    /// The `k`-th algebra generator (zero-based): `x_k`, or the `k`-th
    /// semigroup generator.
    pub fn generator(&self, k: usize) -> TwistElement {
        let one = Scalar::one(self.nvars());
        match &self.basis {
            TwistBasis::Polynomial => {
                let mut d = vec![0; self.cocycle.n];
                d[k] = 1;
                TwistElement::monomial(d, one)
            }
            TwistBasis::Semigroup { generators, .. } => TwistElement::monomial(generators[k].clone(), one),
        }
    }

    pub fn generator_count(&self) -> usize {
        match &self.basis {
            TwistBasis::Polynomial => self.cocycle.n,
            TwistBasis::Semigroup { generators, .. } => generators.len(),
        }
    }

    pub fn one(&self) -> TwistElement {
        TwistElement::monomial(vec![0; self.cocycle.n], Scalar::one(self.nvars()))
    }

    /// `r ∗ s = Σ c(α,β) r_α s_β x^{α+β}`.
    pub fn twist_product(&self, r: &TwistElement, s: &TwistElement) -> Result<TwistElement, TwistError> {
        self.product_with(&self.cocycle, r, s)
    }

    fn product_with(&self, c: &CocycleSpec, r: &TwistElement, s: &TwistElement) -> Result<TwistElement, TwistError> {
        for d in r.terms.keys().chain(s.terms.keys()) {
            if !self.admissible(d) {
                return Err(TwistError::DegreeMismatch(d.clone()));
            }
        }
        let mut out = TwistElement::zero();
        for (a, ca) in &r.terms {
            for (b, cb) in &s.terms {
                let sum: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if !self.admissible(&sum) {
                    return Err(TwistError::Truncated(sum));
                }
                out.add_term(sum, &(&c.eval(a, b) * ca) * cb);
            }
        }
        Ok(out)
    }

    /// `q_ij = c(α_i, α_j) / c(α_j, α_i)` for generator degrees `α`.
    pub fn commutation_scalar(&self, i: usize, j: usize) -> Scalar {
        let a = self.generator(i);
        let b = self.generator(j);
        let da = a.terms.keys().next().unwrap();
        let db = b.terms.keys().next().unwrap();
        &self.cocycle.eval(da, db) * &self.cocycle.eval(db, da).inv_monomial().expect("unit")
    }

    /// `y_i ∗ y_j - q_ij · y_j ∗ y_i = 0` for every pair.
    pub fn twist_relations_hold(&self) -> Result<bool, TwistError> {
        let g = self.generator_count();
        for i in 0..g {
            for j in 0..g {
                let lhs = self.twist_product(&self.generator(i), &self.generator(j))?;
                let rhs = self.twist_product(&self.generator(j), &self.generator(i))?;
                if !lhs.sub(&rhs.scale(&self.commutation_scalar(i, j))).is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Image of the sorted monomial `x^a` under `x_i ↦ x_i`: the ordered
    /// product `x_1^{∗a_1} ∗ ··· ∗ x_n^{∗a_n}`.
    pub fn ordered_product(&self, m: &Monomial) -> Result<TwistElement, TwistError> {
        let mut acc = self.one();
        for g in m.word() {
            acc = self.twist_product(&acc, &self.generator(g))?;
        }
        Ok(acc)
    }

    /// Applies `x_i ↦ x_i` from a presentation on the same generators.
    pub fn generator_map(&self, p: &NcPoly) -> Result<TwistElement, TwistError> {
        let mut out = TwistElement::zero();
        for (m, c) in p.terms() {
            for (d, s) in self.ordered_product(m)?.terms {
                out.add_term(d, &s * c);
            }
        }
        Ok(out)
    }

    /// Checks that `x_i ↦ x_i` respects every straightening rule of `alg`.
    pub fn verify_generator_map(&self, alg: &Arc<Presentation>) -> Result<bool, TwistError> {
        if alg.ngens() != self.generator_count() || alg.space() != &self.cocycle.space {
            return Err(TwistError::NotAffine(self.generator_count()));
        }
        for ((u, v), rule) in alg.rules() {
            let uv = self.twist_product(&self.generator(u), &self.generator(v))?;
            let vu = self.twist_product(&self.generator(v), &self.generator(u))?;
            let mut residual = uv.sub(&vu.scale(&rule.swap));
            for (c, m) in &rule.corrections {
                residual = residual.sub(&self.ordered_product(m)?.scale(c));
            }
            if !residual.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_q(&self, alg: &Presentation) -> Result<(), TwistError> {
        let n = self.cocycle.n;
        if self.basis != TwistBasis::Polynomial || alg.ngens() != n || alg.space() != &self.cocycle.space {
            return Err(TwistError::NotAffine(n));
        }
        for ((u, v), rule) in alg.rules() {
            // x_u x_v = q_uv x_v x_u
            let ok = rule.corrections.is_empty() && rule.swap == self.cocycle.antisymmetrization(u + 1, v + 1);
            if !ok {
                return Err(TwistError::MismatchedQ(u + 1, v + 1));
            }
        }
        Ok(())
    }

    /// `Φ_c`: the identity on the monomial basis, from `O_q(k^n)` to the
    /// commutative polynomial ring (represented by degrees).
    pub fn phi_c(&self, p: &NcPoly) -> Result<TwistElement, TwistError> {
        self.check_q(p.algebra())?;
        let mut out = TwistElement::zero();
        for (m, c) in p.terms() {
            out.add_term(m.exponents().iter().map(|&e| e as i64).collect(), c.clone());
        }
        Ok(out)
    }

    pub fn phi_c_inverse(&self, e: &TwistElement, alg: &Arc<Presentation>) -> Result<NcPoly, TwistError> {
        self.check_q(alg)?;
        let mut terms = Vec::with_capacity(e.terms.len());
        for (d, c) in &e.terms {
            if !self.admissible(d) {
                return Err(TwistError::DegreeMismatch(d.clone()));
            }
            terms.push((Monomial::from_exponents(d.iter().map(|&x| x as u32).collect()), c.clone()));
        }
        Ok(NcPoly::from_terms(alg, terms))
    }

    /// The product transported through `Φ_c`: `Φ_c(p·r) = Φ_c(p) ∗† Φ_c(r)`
    /// with the cocycle `c†(α,β) = c(β,α)^{-1}`.
    pub fn transported_product(&self, r: &TwistElement, s: &TwistElement) -> Result<TwistElement, TwistError> {
        self.product_with(&self.cocycle.transpose_inverse(), r, s)
    }
}
