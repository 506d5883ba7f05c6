//! Centers of quantum tori and the torus-orbit strata of quantum affine space.
//!
//! With formal parameters, `x^a` is central in the quantum torus exactly when
//! `Σ_i E_t[i][j] a_i = 0` for every parameter `t` and index `j`, so the
//! center is the group algebra of an integer kernel. For each `w ⊆ {1..n}`,
//! the stratum of `⟨x_i | i ∈ w⟩` is homeomorphic to the spectrum of the
//! center of the torus on the remaining variables, a Laurent polynomial ring.
//!
//! Parameters must not be roots of unity; specialising them can enlarge the
//! center and is not modelled.

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattice::{integer_kernel, LatticeError};
use crate::pbw::{quantum_affine_multiparam, Monomial, NcPoly, PbwError, Presentation, QMatrix};
use crate::scalar::{ParamSpace, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrataError {
    #[error("exponent matrix {t} is not antisymmetric at ({i}, {j})")]
    NotAntisymmetric { t: usize, i: usize, j: usize },
    #[error("expected {expected} exponent matrices of size {n}")]
    Shape { expected: usize, n: usize },
    #[error("entry ({0}, {1}) of the q-matrix is not a parameter monomial")]
    NotMonomial(usize, usize),
    #[error("subset index {0} out of range")]
    BadSubset(usize),
    #[error("n = {0} is too large for a full strata report (limit 20)")]
    TooLarge(usize),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Pbw(#[from] PbwError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// `q_ij = Π_t params[t]^{exponents[t][i][j]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CommutationSpec {
    n: usize,
    params: Vec<String>,
    exponents: Vec<Vec<Vec<i64>>>,
}

impl CommutationSpec {
    pub fn new(n: usize, params: Vec<String>, exponents: Vec<Vec<Vec<i64>>>) -> Result<Self, StrataError> {
        let spec = CommutationSpec { n, params, exponents };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), StrataError> {
        let n = self.n;
        let shape_ok = self.exponents.len() == self.params.len()
            && self.exponents.iter().all(|e| e.len() == n && e.iter().all(|r| r.len() == n));
        if !shape_ok {
            return Err(StrataError::Shape { expected: self.params.len(), n });
        }
        for (t, e) in self.exponents.iter().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    if e[i][j].checked_neg() != Some(e[j][i]) {
                        return Err(StrataError::NotAntisymmetric { t, i: i + 1, j: j + 1 });
                    }
                }
            }
        }
        // names must form a parameter space
        ParamSpace::new(self.params.iter().cloned())?;
        Ok(())
    }

    pub fn from_json_str(text: &str) -> Result<Self, String> {
        let spec: CommutationSpec = serde_json::from_str(text).map_err(|e| e.to_string())?;
        spec.validate().map_err(|e| e.to_string())?;
        Ok(spec)
    }

    /// `q_ij = q` for `i < j`.
    pub fn single_parameter(n: usize) -> Self {
        let e = (0..n).map(|i| (0..n).map(|j| (j as i64 - i as i64).signum()).collect()).collect();
        CommutationSpec { n, params: vec!["q".into()], exponents: vec![e] }
    }

    /// All `q_ij = 1`.
    pub fn commutative(n: usize) -> Self {
        CommutationSpec { n, params: Vec::new(), exponents: Vec::new() }
    }

    /// Reads exponents off a matrix of parameter monomials. Aliases such as
    /// `q = p²` are resolved into the underlying parameters.
    pub fn from_q_matrix(space: &ParamSpace, q: &QMatrix) -> Result<Self, StrataError> {
        let n = q.size();
        let mut exponents = vec![vec![vec![0i64; n]; n]; space.len()];
        for i in 0..n {
            for j in 0..n {
                let (e, c) = q.get(i, j).as_unit().ok_or(StrataError::NotMonomial(i + 1, j + 1))?;
                if !num_traits::One::is_one(c) {
                    return Err(StrataError::NotMonomial(i + 1, j + 1));
                }
                for (t, &x) in e.iter().enumerate() {
                    exponents[t][i][j] = x as i64;
                }
            }
        }
        CommutationSpec::new(n, space.names().to_vec(), exponents)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn exponents(&self) -> &[Vec<Vec<i64>>] {
        &self.exponents
    }

    /// The spec on the zero-based indices `keep`, in the given order.
    pub fn restrict(&self, keep: &[usize]) -> Result<Self, StrataError> {
        if let Some(&bad) = keep.iter().find(|&&k| k >= self.n) {
            return Err(StrataError::BadSubset(bad + 1));
        }
        let exponents = self
            .exponents
            .iter()
            .map(|e| keep.iter().map(|&i| keep.iter().map(|&j| e[i][j]).collect()).collect())
            .collect();
        Ok(CommutationSpec { n: keep.len(), params: self.params.clone(), exponents })
    }

    pub fn param_space(&self) -> ParamSpace {
        ParamSpace::new(self.params.iter().cloned()).expect("validated names")
    }

    pub fn q_matrix(&self, space: &ParamSpace) -> QMatrix {
        let nv = space.len();
        let rows = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| {
                        let e = self.exponents.iter().map(|m| m[i][j] as i32).collect::<Vec<_>>();
                        if nv == 0 {
                            Scalar::one(0)
                        } else {
                            Scalar::monomial(e, num_traits::One::one())
                        }
                    })
                    .collect()
            })
            .collect();
        QMatrix::new(rows).expect("antisymmetric exponents")
    }

    /// The quantum affine space with these commutation scalars.
    pub fn presentation(&self) -> Result<Arc<Presentation>, StrataError> {
        let space = Arc::new(self.param_space());
        let q = self.q_matrix(&space);
        Ok(quantum_affine_multiparam(&space, &q)?)
    }
}

/// Exponents of central Laurent monomials, in row Hermite normal form.
pub fn center_lattice(c: &CommutationSpec) -> Result<Vec<Vec<i64>>, StrataError> {
    let n = c.n;
    let mut rows = Vec::with_capacity(c.exponents.len() * n);
    for e in &c.exponents {
        for j in 0..n {
            rows.push((0..n).map(|i| e[i][j]).collect());
        }
    }
    Ok(integer_kernel(&rows, n)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumReport {
    /// One-based indices of the killed variables.
    pub w: Vec<usize>,
    pub torus_rank: usize,
    pub center_rank: usize,
    /// Central exponents on the full index set, zero on `w`.
    #[serde(rename = "basis")]
    pub center_basis: Vec<Vec<i64>>,
}

/// One report per subset `w`, in bitmask order of `w`.
pub fn strata_report(c: &CommutationSpec) -> Result<Vec<StratumReport>, StrataError> {
    let n = c.n;
    if n > 20 {
        return Err(StrataError::TooLarge(n));
    }
    (0u32..1 << n)
        .into_par_iter()
        .map(|mask| {
            let w: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
            let keep: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 0).collect();
            let basis = center_lattice(&c.restrict(&keep)?)?;
            let center_basis = basis
                .into_iter()
                .map(|b| {
                    let mut full = vec![0; n];
                    for (k, &i) in keep.iter().enumerate() {
                        full[i] = b[k];
                    }
                    full
                })
                .collect::<Vec<_>>();
            Ok(StratumReport { w, torus_rank: keep.len(), center_rank: center_basis.len(), center_basis })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimitiveProfile {
    pub w: Vec<usize>,
    /// Number of Laurent variables in the center of the localized quotient.
    pub laurent_variables: usize,
    /// The stratum is a single prime, and that prime is primitive.
    pub single_prime: bool,
    pub summary: String,
}

pub fn primitive_profile(r: &StratumReport) -> PrimitiveProfile {
    let ideal = if r.w.is_empty() {
        "<0>".to_string()
    } else {
        let gens: Vec<String> = r.w.iter().map(|i| format!("x{}", i)).collect();
        format!("<{}>", gens.join(", "))
    };
    let summary = if r.center_rank == 0 {
        format!("stratum of {} is the single prime {}, which is primitive", ideal, ideal)
    } else {
        format!(
            "stratum of {} is homeomorphic to spec k[z1^±1..z{}^±1]; its primitive ideals match the maximal ideals of that ring ({}-parameter family)",
            ideal, r.center_rank, r.center_rank
        )
    };
    PrimitiveProfile { w: r.w.clone(), laurent_variables: r.center_rank, single_prime: r.center_rank == 0, summary }
}

/// Checks `x_j · x^a = x^a · x_j` in the quantum torus with pbw arithmetic.
///
/// Writing `a = a⁺ - a⁻`, the commutation scalar of `x_j` past `x^{a⁺}` and
/// past `x^{a⁻}` is read off normal forms in the affine space; `x^a` commutes
/// with `x_j` iff the two agree.
pub fn central_monomial_check(alg: &Arc<Presentation>, a: &[i64]) -> bool {
    let n = alg.ngens();
    assert_eq!(a.len(), n, "exponent length");
    let word = |e: &[u32]| -> Vec<usize> { Monomial::from_exponents(e.to_vec()).word() };
    let pos: Vec<u32> = a.iter().map(|&x| x.max(0) as u32).collect();
    let neg: Vec<u32> = a.iter().map(|&x| (-x).max(0) as u32).collect();
    let ratio = |e: &[u32], j: usize| -> Scalar {
        let mono = word(e);
        let mut left = vec![j];
        left.extend(&mono);
        let mut right = mono.clone();
        right.push(j);
        let l = NcPoly::from_word(alg, &left);
        let r = NcPoly::from_word(alg, &right);
        let (_, cl) = l.leading_term().expect("domain");
        let (_, cr) = r.leading_term().expect("domain");
        cl * &cr.inv_monomial().expect("unit")
    };
    (0..n).all(|j| ratio(&pos, j) == ratio(&neg, j))
}
