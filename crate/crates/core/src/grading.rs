//! Torus actions as `ℤ^r`-gradings.
//!
//! An action of `(k^×)^r` that scales each generator by a rational character
//! is recorded by the character's exponent vector. Eigenvectors are
//! homogeneous elements; an ideal generated by homogeneous elements is stable.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

use crate::pbw::{matrix_generator_index, Monomial, NcPoly, Presentation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("grading has {expected} generator weights, algebra has {got} generators")]
    GeneratorCount { expected: usize, got: usize },
    #[error("weights of unequal length")]
    RankMismatch,
    #[error("unknown grading preset `{0}` (expected affine, matrix or sl2-style)")]
    UnknownPreset(String),
    #[error("the {0} grading needs a quantum matrix algebra")]
    NotMatrixAlgebra(GradingPreset),
    #[error("presentation carries no weights")]
    NoWeights,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank(), "weight rank mismatch");
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GradingPreset {
    /// `x_i ↦ e_i`.
    Affine,
    /// `X_ij ↦ e_i ⊕ f_j` in `ℤ^{2n}`.
    Matrix,
    /// `X_ij ↦ (3 - 2i, 3 - 2j)` in `ℤ²`.
    Sl2Style,
}

impl FromStr for GradingPreset {
    type Err = GradingError;
    fn from_str(s: &str) -> Result<Self, GradingError> {
        match s {
            "affine" => Ok(GradingPreset::Affine),
            "matrix" => Ok(GradingPreset::Matrix),
            "sl2-style" | "sl2" => Ok(GradingPreset::Sl2Style),
            other => Err(GradingError::UnknownPreset(other.to_string())),
        }
    }
}

impl fmt::Display for GradingPreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GradingPreset::Affine => "affine",
            GradingPreset::Matrix => "matrix",
            GradingPreset::Sl2Style => "sl2-style",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingSpec {
    rank: usize,
    weights: Vec<Weight>,
}

impl GradingSpec {
    pub fn new(weights: Vec<Vec<i64>>) -> Result<Self, GradingError> {
        let rank = weights.first().map_or(0, Vec::len);
        if weights.iter().any(|w| w.len() != rank) {
            return Err(GradingError::RankMismatch);
        }
        Ok(GradingSpec { rank, weights: weights.into_iter().map(Weight).collect() })
    }

    pub fn affine(n: usize) -> Self {
        let weights = (0..n)
            .map(|i| {
                let mut w = vec![0; n];
                w[i] = 1;
                w
            })
            .collect();
        GradingSpec::new(weights).expect("uniform rank")
    }

    pub fn matrix(n: usize) -> Self {
        let mut weights = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut w = vec![0; 2 * n];
                w[i] = 1;
                w[n + j] = 1;
                weights.push(w);
            }
        }
        GradingSpec::new(weights).expect("uniform rank")
    }

    pub fn sl2_style(n: usize) -> Self {
        let mut weights = vec![Vec::new(); n * n];
        for i in 1..=n {
            for j in 1..=n {
                weights[matrix_generator_index(n, i, j)] = vec![3 - 2 * i as i64, 3 - 2 * j as i64];
            }
        }
        GradingSpec::new(weights).expect("uniform rank")
    }

    /// The weights stored with a presentation.
    pub fn from_presentation(alg: &Presentation) -> Result<Self, GradingError> {
        let w = alg.weights().ok_or(GradingError::NoWeights)?;
        let spec = GradingSpec::new(w.to_vec())?;
        spec.check_algebra(alg)?;
        Ok(spec)
    }

    /// A named preset sized for `alg`. Matrix-type presets require `n²` generators.
    pub fn preset_for(preset: GradingPreset, alg: &Presentation) -> Result<Self, GradingError> {
        let g = alg.ngens();
        let spec = match preset {
            GradingPreset::Affine => GradingSpec::affine(g),
            GradingPreset::Matrix | GradingPreset::Sl2Style => {
                let n = (g as f64).sqrt().round() as usize;
                let looks_like_matrix = n * n == g
                    && alg
                        .generators()
                        .iter()
                        .enumerate()
                        .all(|(k, name)| *name == crate::pbw::matrix_generator_name(k / n + 1, k % n + 1));
                if !looks_like_matrix {
                    return Err(GradingError::NotMatrixAlgebra(preset));
                }
                if preset == GradingPreset::Matrix {
                    GradingSpec::matrix(n)
                } else {
                    GradingSpec::sl2_style(n)
                }
            }
        };
        Ok(spec)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ngens(&self) -> usize {
        self.weights.len()
    }

    pub fn generator_weight(&self, g: usize) -> &Weight {
        &self.weights[g]
    }

    pub fn check_algebra(&self, alg: &Presentation) -> Result<(), GradingError> {
        if self.ngens() != alg.ngens() {
            return Err(GradingError::GeneratorCount { expected: self.ngens(), got: alg.ngens() });
        }
        Ok(())
    }

    /// `Σ_g a_g · weight(g)`.
    pub fn weight_of(&self, m: &Monomial) -> Weight {
        let mut w = vec![0i64; self.rank];
        for (g, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                for (acc, x) in w.iter_mut().zip(&self.weights[g].0) {
                    *acc += e as i64 * x;
                }
            }
        }
        Weight(w)
    }

    /// The common weight of all terms; the zero polynomial has weight zero.
    pub fn is_homogeneous(&self, p: &NcPoly) -> Option<Weight> {
        let mut it = p.terms().map(|(m, _)| self.weight_of(m));
        let first = match it.next() {
            Some(w) => w,
            None => return Some(Weight::zero(self.rank)),
        };
        it.all(|w| w == first).then_some(first)
    }

    /// Sufficient condition for the ideal generated by `gens` to be stable:
    /// every generator is homogeneous.
    pub fn h_stable_by_generators(&self, gens: &[NcPoly]) -> bool {
        gens.iter().all(|p| self.is_homogeneous(p).is_some())
    }

    /// Every straightening rule has both sides homogeneous of the same weight,
    /// i.e. the grading defines an action by algebra automorphisms.
    pub fn relations_balanced(&self, alg: &Arc<Presentation>) -> bool {
        if self.check_algebra(alg).is_err() {
            return false;
        }
        alg.rules().all(|((u, v), r)| {
            let target = &self.weights[u] + &self.weights[v];
            r.corrections.iter().all(|(_, m)| self.weight_of(m) == target)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbw::{quantum_affine, quantum_matrices, quantum_plane};
    use crate::qmatrix::{MinorIndex, QuantumMatrices};
    use crate::scalar::ParamSpace;
    use proptest::prelude::*;

    #[test]
    fn matrix_weights() {
        let m = QuantumMatrices::generic(3);
        let g = GradingSpec::matrix(3);
        let x23 = m.x(2, 3);
        let (mono, _) = x23.leading_term().unwrap();
        assert_eq!(g.weight_of(mono), Weight(vec![0, 1, 0, 0, 0, 1]));
        assert!(g.weight_of(&Monomial::one(9)).is_zero());
    }

    #[test]
    fn qdet_is_homogeneous() {
        let m = QuantumMatrices::generic(2);
        let g = GradingSpec::matrix(2);
        let d = m.qdet();
        for (mono, _) in d.terms() {
            assert_eq!(g.weight_of(mono), Weight(vec![1, 1, 1, 1]));
        }
        assert_eq!(g.is_homogeneous(&d), Some(Weight(vec![1, 1, 1, 1])));
        let s = GradingSpec::sl2_style(2);
        assert_eq!(s.is_homogeneous(&d), Some(Weight(vec![0, 0])));
    }

    #[test]
    fn inhomogeneous_examples() {
        let space = Arc::new(ParamSpace::single_q());
        let q = space.param("q").unwrap();
        let a = quantum_plane(&space, &q).unwrap();
        let g = GradingSpec::from_presentation(&a).unwrap();
        let p = &NcPoly::generator(&a, 0) + &NcPoly::one(&a);
        assert_eq!(g.is_homogeneous(&p), None);
        assert!(!g.h_stable_by_generators(&[p]));

        let space = Arc::new(ParamSpace::new(["p", "l1", "l2", "l3"]).unwrap().with_square_root("q", "p").unwrap());
        let a = quantum_affine(&space, 3, &space.param("q").unwrap()).unwrap();
        let l = |k: &str| space.param(k).unwrap();
        let x = |i: usize| NcPoly::generator(&a, i);
        let p = &(&x(0) * &x(2)).scale(&l("l2")) - &x(1).scale(&(&(&l("p") * &l("l1")) * &l("l3")));
        assert_eq!(GradingSpec::affine(3).is_homogeneous(&p), None);
    }

    #[test]
    fn stable_generator_sets() {
        let space = Arc::new(ParamSpace::single_q());
        let a = quantum_affine(&space, 3, &space.param("q").unwrap()).unwrap();
        let g = GradingSpec::affine(3);
        for w in 0u32..8 {
            let gens: Vec<NcPoly> = (0..3).filter(|i| w >> i & 1 == 1).map(|i| NcPoly::generator(&a, i)).collect();
            assert!(g.h_stable_by_generators(&gens));
        }
        let m = QuantumMatrices::generic(3);
        let gm = GradingSpec::matrix(3);
        let minors: Vec<NcPoly> = MinorIndex::all(3, 2).iter().map(|i| m.qminor(i).unwrap()).collect();
        assert!(gm.h_stable_by_generators(&minors));
    }

    #[test]
    fn minor_weights() {
        let m = QuantumMatrices::generic(3);
        let g = GradingSpec::matrix(3);
        for t in 1..=3 {
            for idx in MinorIndex::all(3, t) {
                let mut expected = vec![0; 6];
                for &i in idx.rows() {
                    expected[i - 1] += 1;
                }
                for &j in idx.cols() {
                    expected[3 + j - 1] += 1;
                }
                assert_eq!(g.is_homogeneous(&m.qminor(&idx).unwrap()), Some(Weight(expected)));
            }
        }
    }

    #[test]
    fn presets_balance_their_relations() {
        let space = Arc::new(ParamSpace::single_q());
        let q = space.param("q").unwrap();
        for n in 1..=3 {
            let a = quantum_affine(&space, n, &q).unwrap();
            assert!(GradingSpec::affine(n).relations_balanced(&a));
            assert!(GradingSpec::from_presentation(&a).unwrap().relations_balanced(&a));
            let m = quantum_matrices(&space, n, &q).unwrap();
            assert!(GradingSpec::matrix(n).relations_balanced(&m));
            assert!(GradingSpec::sl2_style(n).relations_balanced(&m));
            assert_eq!(GradingSpec::from_presentation(&m).unwrap(), GradingSpec::matrix(n));
        }
        // the affine grading is not an action on quantum matrices
        let m = quantum_matrices(&space, 2, &q).unwrap();
        assert!(!GradingSpec::affine(4).relations_balanced(&m));
    }

    #[test]
    fn preset_lookup() {
        let space = Arc::new(ParamSpace::single_q());
        let q = space.param("q").unwrap();
        let a = quantum_affine(&space, 4, &q).unwrap();
        assert!(matches!(GradingSpec::preset_for(GradingPreset::Matrix, &a), Err(GradingError::NotMatrixAlgebra(_))));
        assert!("bogus".parse::<GradingPreset>().is_err());
        assert_eq!("sl2-style".parse::<GradingPreset>().unwrap(), GradingPreset::Sl2Style);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        // straightening never changes weight
        #[test]
        fn weight_is_multiplicative(
            which in 0usize..3,
            w1 in prop::collection::vec(0usize..9, 0..4),
            w2 in prop::collection::vec(0usize..9, 0..4),
        ) {
            let space = Arc::new(ParamSpace::single_q());
            let q = space.param("q").unwrap();
            let (alg, g) = match which {
                0 => (quantum_affine(&space, 3, &q).unwrap(), GradingSpec::affine(3)),
                1 => (quantum_matrices(&space, 2, &q).unwrap(), GradingSpec::matrix(2)),
                _ => (quantum_matrices(&space, 3, &q).unwrap(), GradingSpec::matrix(3)),
            };
            let n = alg.ngens();
            let w1: Vec<usize> = w1.into_iter().map(|x| x % n).collect();
            let w2: Vec<usize> = w2.into_iter().map(|x| x % n).collect();
            let m1 = Monomial::from_word(n, &w1);
            let m2 = Monomial::from_word(n, &w2);
            let expected = &g.weight_of(&m1) + &g.weight_of(&m2);
            let prod = &NcPoly::from_word(&alg, &w1) * &NcPoly::from_word(&alg, &w2);
            for (m, _) in prod.terms() {
                prop_assert_eq!(g.weight_of(m), expected.clone());
            }
        }
    }
}
