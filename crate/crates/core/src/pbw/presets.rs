//! Standard presentations: quantum plane, quantum affine spaces (single and
//! multiparameter) and quantum `n × n` matrices.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::{Monomial, PbwError, Presentation, Rule};
use crate::scalar::{ParamSpace, Scalar};

/// A multiplicatively antisymmetric matrix: `q_ii = 1`, `q_ji = q_ij^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix(Vec<Vec<Scalar>>);

impl QMatrix {
    pub fn new(rows: Vec<Vec<Scalar>>) -> Result<Self, PbwError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(PbwError::ShapeMismatch);
        }
        for i in 0..n {
            if !rows[i][i].is_one() {
                return Err(PbwError::NonAntisymmetric(i + 1, i + 1));
            }
            for j in 0..n {
                if !(&rows[i][j] * &rows[j][i]).is_one() {
                    return Err(PbwError::NonAntisymmetric(i + 1, j + 1));
                }
            }
        }
        Ok(QMatrix(rows))
    }

    /// `q_ij = q` for `i < j`.
    pub fn single(n: usize, q: &Scalar) -> Result<Self, PbwError> {
        let qi = q.inv_monomial()?;
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match i.cmp(&j) {
                        std::cmp::Ordering::Less => q.clone(),
                        std::cmp::Ordering::Equal => Scalar::one(q.nvars()),
                        std::cmp::Ordering::Greater => qi.clone(),
                    })
                    .collect()
            })
            .collect();
        QMatrix::new(rows)
    }

    /// Independent parameters `q_ij` (`i < j`) taken from [`multiparam_space`].
    pub fn generic(space: &ParamSpace, n: usize) -> Result<Self, PbwError> {
        let mut rows = vec![vec![space.one(); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let q = space.param(&multiparam_name(n, i + 1, j + 1))?;
                rows[j][i] = q.inv_monomial()?;
                rows[i][j] = q;
            }
        }
        QMatrix::new(rows)
    }

    pub fn trivial(n: usize, nvars: usize) -> Self {
        QMatrix(vec![vec![Scalar::one(nvars); n]; n])
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    /// Entry `q_ij`, zero-based.
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.0[i][j]
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.0
    }
}

pub fn multiparam_name(n: usize, i: usize, j: usize) -> String {
    if n < 10 {
        format!("q{}{}", i, j)
    } else {
        format!("q{}_{}", i, j)
    }
}

/// Parameter space `{q_ij : i < j}` for a generic multiparameter affine space.
pub fn multiparam_space(n: usize) -> ParamSpace {
    let mut names = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            names.push(multiparam_name(n, i, j));
        }
    }
    ParamSpace::new(names).expect("distinct names")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PresetKind {
    QuantumPlane,
    QuantumAffine,
    QuantumAffineMultiparam,
    QuantumMatrices,
}

impl FromStr for PresetKind {
    type Err = PbwError;
    fn from_str(s: &str) -> Result<Self, PbwError> {
        match s {
            "quantum-plane" | "plane" => Ok(PresetKind::QuantumPlane),
            "quantum-affine" | "affine" => Ok(PresetKind::QuantumAffine),
            "quantum-affine-multiparam" | "multiparam" => Ok(PresetKind::QuantumAffineMultiparam),
            "quantum-matrices" | "matrices" | "matrix" => Ok(PresetKind::QuantumMatrices),
            other => Err(PbwError::UnknownPreset(other.to_string())),
        }
    }
}

impl fmt::Display for PresetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PresetKind::QuantumPlane => "quantum-plane",
            PresetKind::QuantumAffine => "quantum-affine",
            PresetKind::QuantumAffineMultiparam => "quantum-affine-multiparam",
            PresetKind::QuantumMatrices => "quantum-matrices",
        })
    }
}

/// Commutation data for a preset: a single parameter or a full matrix.
#[derive(Clone, Debug)]
pub enum QParam {
    Single(Scalar),
    Matrix(QMatrix),
}

/// Dispatches to the individual preset constructors.
pub fn preset_algebra(
    space: &Arc<ParamSpace>,
    kind: PresetKind,
    n: usize,
    q: &QParam,
) -> Result<Arc<Presentation>, PbwError> {
    match (kind, q) {
        (PresetKind::QuantumPlane, QParam::Single(q)) => quantum_plane(space, q),
        (PresetKind::QuantumAffine, QParam::Single(q)) => quantum_affine(space, n, q),
        (PresetKind::QuantumAffineMultiparam, QParam::Matrix(m)) => {
            if m.size() != n {
                return Err(PbwError::ShapeMismatch);
            }
            quantum_affine_multiparam(space, m)
        }
        (PresetKind::QuantumAffineMultiparam, QParam::Single(q)) => {
            quantum_affine_multiparam(space, &QMatrix::single(n, q)?)
        }
        (PresetKind::QuantumMatrices, QParam::Single(q)) => quantum_matrices(space, n, q),
        (_, QParam::Matrix(_)) => Err(PbwError::UnknownPreset(format!("{} with a parameter matrix", kind))),
    }
}

fn standard_weights(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| {
            let mut w = vec![0; n];
            w[i] = 1;
            w
        })
        .collect()
}

fn skew_presentation(space: &Arc<ParamSpace>, gens: Vec<String>, q: &QMatrix) -> Result<Arc<Presentation>, PbwError> {
    let n = gens.len();
    let mut rules = BTreeMap::new();
    // x_j x_i = q_ji x_i x_j for j > i
    for j in 1..n {
        for i in 0..j {
            rules.insert((j, i), Rule::skew(q.get(j, i).clone()));
        }
    }
    Presentation::new(space.clone(), gens, rules, Some(standard_weights(n)))
}

/// `k⟨x, y | xy = q yx⟩` with `x < y`.
pub fn quantum_plane(space: &Arc<ParamSpace>, q: &Scalar) -> Result<Arc<Presentation>, PbwError> {
    skew_presentation(space, vec!["x".into(), "y".into()], &QMatrix::single(2, q)?)
}

/// `k⟨x_1..x_n | x_i x_j = q x_j x_i, i < j⟩`.
pub fn quantum_affine(space: &Arc<ParamSpace>, n: usize, q: &Scalar) -> Result<Arc<Presentation>, PbwError> {
    quantum_affine_multiparam(space, &QMatrix::single(n, q)?)
}

/// `k⟨x_1..x_n | x_i x_j = q_ij x_j x_i⟩`.
pub fn quantum_affine_multiparam(space: &Arc<ParamSpace>, q: &QMatrix) -> Result<Arc<Presentation>, PbwError> {
    let gens = (1..=q.size()).map(|i| format!("x{}", i)).collect();
    skew_presentation(space, gens, q)
}

pub fn matrix_generator_name(i: usize, j: usize) -> String {
    format!("X[{},{}]", i, j)
}

/// Index of `X_ij` (one-based `i, j`) under the row-major generator order.
pub fn matrix_generator_index(n: usize, i: usize, j: usize) -> usize {
    (i - 1) * n + (j - 1)
}

/// Quantum `n × n` matrices, generators `X[i,j]` ordered lexicographically.
///
/// For `i < l` and `j < m`, with `a = X_ij, b = X_im, c = X_lj, d = X_lm`:
/// `ab = q ba`, `ac = q ca`, `bd = q db`, `cd = q dc`, `bc = cb`,
/// `ad - da = (q - q^{-1}) bc`.
pub fn quantum_matrices(space: &Arc<ParamSpace>, n: usize, q: &Scalar) -> Result<Arc<Presentation>, PbwError> {
    let qi = q.inv_monomial()?;
    let one = Scalar::one(q.nvars());
    let diag_corr = &qi - q;
    let ngens = n * n;
    let idx = |i: usize, j: usize| matrix_generator_index(n, i, j);
    let mut rules = BTreeMap::new();
    for i in 1..=n {
        for j in 1..=n {
            for l in 1..=n {
                for m in 1..=n {
                    let (u, v) = (idx(l, m), idx(i, j));
                    if u <= v {
                        continue;
                    }
                    let rule = if i == l {
                        // same row, j < m: X_im X_ij = q^{-1} X_ij X_im
                        Rule::skew(qi.clone())
                    } else if j == m {
                        Rule::skew(qi.clone())
                    } else if m > j {
                        // X_lm X_ij = X_ij X_lm - (q - q^{-1}) X_im X_lj
                        let mut corr = Monomial::one(ngens);
                        corr.bump(idx(i, m), 1);
                        corr.bump(idx(l, j), 1);
                        Rule { swap: one.clone(), corrections: vec![(diag_corr.clone(), corr)] }
                    } else {
                        // antidiagonal pair commutes
                        Rule::skew(one.clone())
                    };
                    rules.insert((u, v), rule);
                }
            }
        }
    }
    let gens = (1..=n).flat_map(|i| (1..=n).map(move |j| matrix_generator_name(i, j))).collect();
    let weights = (1..=n)
        .flat_map(|i| {
            (1..=n).map(move |j| {
                let mut w = vec![0; 2 * n];
                w[i - 1] = 1;
                w[n + j - 1] = 1;
                w
            })
        })
        .collect();
    Presentation::new(space.clone(), gens, rules, Some(weights))
}
