//! Quantum determinant, quantum minors, the bialgebra maps and the
//! comorphism of the rank variety for quantum `n × n` matrices.

use std::sync::{Arc, OnceLock};

use itertools::Itertools;
use thiserror::Error;

use crate::pbw::{
    matrix_generator_index, quantum_matrices, quotient_by_generators, tensor, tensor_square, AlgebraHom,
    GeneratorQuotient, Monomial, NcPoly, PbwError, Presentation, TensorProduct,
};
use crate::scalar::{ParamSpace, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QMatrixError {
    #[error("malformed minor index: {0}")]
    BadMinor(String),
    #[error("t = {t} is outside 1..={n}")]
    BadRank { t: usize, n: usize },
    #[error("index {0} outside 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("algebra is not a quantum matrix algebra of size {0}")]
    NotQuantumMatrices(usize),
    #[error(transparent)]
    Pbw(#[from] PbwError),
}

/// Row and column sets `I = {i_1 < ... < i_t}`, `J = {j_1 < ... < j_t}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinorIndex {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl MinorIndex {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>, n: usize) -> Result<Self, QMatrixError> {
        if rows.len() != cols.len() {
            return Err(QMatrixError::BadMinor(format!("|I| = {} but |J| = {}", rows.len(), cols.len())));
        }
        if rows.is_empty() {
            return Err(QMatrixError::BadMinor("empty index sets".into()));
        }
        for set in [&rows, &cols] {
            if set.windows(2).any(|w| w[0] >= w[1]) {
                return Err(QMatrixError::BadMinor(format!("{:?} is not strictly increasing", set)));
            }
            if let Some(&bad) = set.iter().find(|&&i| i == 0 || i > n) {
                return Err(QMatrixError::IndexOutOfRange(bad, n));
            }
        }
        Ok(MinorIndex { rows, cols })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// All `t × t` index pairs for `n × n` matrices, lexicographic.
    pub fn all(n: usize, t: usize) -> Vec<MinorIndex> {
        let sets: Vec<Vec<usize>> = (1..=n).combinations(t).collect();
        let mut out = Vec::with_capacity(sets.len() * sets.len());
        for r in &sets {
            for c in &sets {
                out.push(MinorIndex { rows: r.clone(), cols: c.clone() });
            }
        }
        out
    }
}

/// A bijection of `{1..n}`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || seen[i - 1] {
                return None;
            }
            seen[i - 1] = true;
        }
        Some(Permutation(images))
    }

    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n).permutations(n).map(Permutation)
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// Length as the number of inversions.
    pub fn length(&self) -> usize {
        let p = &self.0;
        (0..p.len()).map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count()).sum()
    }
}

/// `O_q(M_n)` together with lazily built bialgebra data.
pub struct QuantumMatrices {
    n: usize,
    q: Scalar,
    alg: Arc<Presentation>,
    square: OnceLock<(TensorProduct, AlgebraHom)>,
    counit: OnceLock<AlgebraHom>,
}

impl QuantumMatrices {
    pub fn new(space: &Arc<ParamSpace>, n: usize, q: &Scalar) -> Result<Self, QMatrixError> {
        let alg = quantum_matrices(space, n, q)?;
        Ok(QuantumMatrices { n, q: q.clone(), alg, square: OnceLock::new(), counit: OnceLock::new() })
    }

    /// Single parameter `q`.
    pub fn generic(n: usize) -> Self {
        let space = Arc::new(ParamSpace::single_q());
        let q = space.param("q").expect("q");
        Self::new(&space, n, &q).expect("valid preset")
    }

    /// Recovers `q` from an existing quantum matrix presentation.
    pub fn from_presentation(alg: &Arc<Presentation>, n: usize) -> Result<Self, QMatrixError> {
        if alg.ngens() != n * n {
            return Err(QMatrixError::NotQuantumMatrices(n));
        }
        let q =
            if n >= 2 { alg.rule(1, 0).swap.inv_monomial().map_err(PbwError::from)? } else { Scalar::one(alg.nvars()) };
        let expected = quantum_matrices(alg.space(), n, &q)?;
        if *expected != **alg {
            return Err(QMatrixError::NotQuantumMatrices(n));
        }
        Ok(QuantumMatrices { n, q, alg: alg.clone(), square: OnceLock::new(), counit: OnceLock::new() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    pub fn algebra(&self) -> &Arc<Presentation> {
        &self.alg
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        matrix_generator_index(self.n, i, j)
    }

    /// The generator `X_ij` (one-based).
    pub fn x(&self, i: usize, j: usize) -> NcPoly {
        NcPoly::generator(&self.alg, self.index(i, j))
    }

    /// `Σ_π (-q)^{ℓ(π)} X_{1,π(1)} ··· X_{n,π(n)}`. Each product is row-sorted,
    /// hence already a normal monomial.
    pub fn qdet(&self) -> NcPoly {
        let minus_q = -&self.q;
        let ngens = self.alg.ngens();
        let terms = Permutation::all(self.n).map(|pi| {
            let word: Vec<usize> = pi.images().iter().enumerate().map(|(r, &c)| self.index(r + 1, c)).collect();
            let m = Monomial::from_word(ngens, &word);
            (m, minus_q.pow(pi.length() as i64).expect("nonnegative power"))
        });
        NcPoly::from_terms(&self.alg, terms)
    }

    /// `φ_{I,J}: O_q(M_t) → O_q(M_n)`, `X_lm ↦ X_{i_l j_m}`.
    pub fn embedding(&self, idx: &MinorIndex) -> Result<(QuantumMatrices, AlgebraHom), QMatrixError> {
        let t = idx.size();
        let small = QuantumMatrices::new(self.alg.space(), t, &self.q)?;
        let mapping: Vec<usize> = (1..=t)
            .flat_map(|l| (1..=t).map(move |m| (l, m)))
            .map(|(l, m)| self.index(idx.rows[l - 1], idx.cols[m - 1]))
            .collect();
        let hom = AlgebraHom::positional(&small.alg, &self.alg, &mapping)?;
        Ok((small, hom))
    }

    /// `[I|J] = φ_{I,J}(D_q^{t×t})`.
    pub fn qminor(&self, idx: &MinorIndex) -> Result<NcPoly, QMatrixError> {
        if idx.rows.iter().chain(&idx.cols).any(|&i| i > self.n) {
            return Err(QMatrixError::BadMinor(format!("index exceeds n = {}", self.n)));
        }
        let (small, phi) = self.embedding(idx)?;
        Ok(phi.apply(&small.qdet())?)
    }

    pub fn is_central(&self, p: &NcPoly) -> Result<bool, QMatrixError> {
        is_central(p)
    }

    fn square(&self) -> &(TensorProduct, AlgebraHom) {
        self.square.get_or_init(|| {
            let aa = tensor_square(&self.alg).expect("tensor square of a valid presentation");
            let mut images = Vec::with_capacity(self.n * self.n);
            for i in 1..=self.n {
                for j in 1..=self.n {
                    let mut img = NcPoly::zero(aa.algebra());
                    for l in 1..=self.n {
                        img = &img + &aa.pure(&self.x(i, l), &self.x(l, j)).expect("tensor factors");
                    }
                    images.push(img);
                }
            }
            let delta = AlgebraHom::new(&self.alg, aa.algebra(), images).expect("image count");
            (aa, delta)
        })
    }

    pub fn tensor_square(&self) -> &TensorProduct {
        &self.square().0
    }

    /// `Δ(X_ij) = Σ_l X_il ⊗ X_lj` as an algebra map.
    pub fn delta_hom(&self) -> &AlgebraHom {
        &self.square().1
    }

    pub fn delta(&self, p: &NcPoly) -> Result<NcPoly, QMatrixError> {
        Ok(self.delta_hom().apply(p)?)
    }

    /// `ε(X_ij) = δ_ij` as an algebra map to the ground field.
    pub fn counit_hom(&self) -> &AlgebraHom {
        self.counit.get_or_init(|| {
            let ground = Presentation::ground(self.alg.space().clone());
            let images = (1..=self.n)
                .flat_map(|i| (1..=self.n).map(move |j| (i, j)))
                .map(|(i, j)| {
                    let v = if i == j { 1 } else { 0 };
                    NcPoly::constant(&ground, Scalar::from_int(self.alg.nvars(), v))
                })
                .collect();
            AlgebraHom::new(&self.alg, &ground, images).expect("image count")
        })
    }

    pub fn counit(&self, p: &NcPoly) -> Result<Scalar, QMatrixError> {
        Ok(self.counit_hom().apply(p)?.constant_term())
    }

    /// `O_q(M_n)/⟨X_ij | j ≥ t⟩` and `O_q(M_n)/⟨X_ij | i ≥ t⟩`.
    pub fn rectangular_quotients(&self, t: usize) -> Result<(GeneratorQuotient, GeneratorQuotient), QMatrixError> {
        if t == 0 || t > self.n {
            return Err(QMatrixError::BadRank { t, n: self.n });
        }
        let cells = || (1..=self.n).flat_map(|i| (1..=self.n).map(move |j| (i, j)));
        let cols: Vec<usize> = cells().filter(|&(_, j)| j >= t).map(|(i, j)| self.index(i, j)).collect();
        let rows: Vec<usize> = cells().filter(|&(i, _)| i >= t).map(|(i, j)| self.index(i, j)).collect();
        Ok((quotient_by_generators(&self.alg, &cols)?, quotient_by_generators(&self.alg, &rows)?))
    }

    /// `μ*_q = (quo ⊗ quo) ∘ Δ` into `O_q(M_{n,t-1}) ⊗ O_q(M_{t-1,n})`.
    pub fn mu_q_star_hom(&self, t: usize) -> Result<(TensorProduct, AlgebraHom), QMatrixError> {
        let (left, right) = self.rectangular_quotients(t)?;
        let target = tensor(&left.algebra, &right.algebra)?;
        let quo = self.tensor_square().map(&left.map, &right.map, &target)?;
        let mu = self.delta_hom().then(&quo)?;
        Ok((target, mu))
    }

    pub fn mu_q_star(&self, t: usize, p: &NcPoly) -> Result<NcPoly, QMatrixError> {
        let (_, mu) = self.mu_q_star_hom(t)?;
        Ok(mu.apply(p)?)
    }

    /// All `2 × 2` minors, then `X_ij` for `i ∈ rows`, then `X_ij` for `j ∈ cols`,
    /// without repeats.
    pub fn detgen_rank_le1(&self, rows: &[usize], cols: &[usize]) -> Result<Vec<NcPoly>, QMatrixError> {
        let mut out: Vec<NcPoly> = Vec::new();
        if self.n >= 2 {
            for idx in MinorIndex::all(self.n, 2) {
                out.push(self.qminor(&idx)?);
            }
        }
        for &i in rows.iter().chain(cols) {
            if i == 0 || i > self.n {
                return Err(QMatrixError::IndexOutOfRange(i, self.n));
            }
        }
        let mut push = |p: NcPoly| {
            if !out.contains(&p) {
                out.push(p);
            }
        };
        for &i in rows {
            for j in 1..=self.n {
                push(self.x(i, j));
            }
        }
        for &j in cols {
            for i in 1..=self.n {
                push(self.x(i, j));
            }
        }
        Ok(out)
    }

    /// `(Δ ⊗ id)Δ(X_ij) = (id ⊗ Δ)Δ(X_ij)` for every generator, computed in
    /// `(A ⊗ A) ⊗ (A ⊗ A)` with the triple product on the first three copies.
    pub fn coassociative_on_generators(&self) -> Result<bool, QMatrixError> {
        let (lhs, rhs) = self.coassociativity_maps()?;
        let delta = self.delta_hom();
        for g in 0..self.alg.ngens() {
            let d = delta.apply(&NcPoly::generator(&self.alg, g))?;
            if lhs.apply(&d)? != rhs.apply(&d)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The maps `Δ ⊗ id` and `id ⊗ Δ` from `A ⊗ A` into the fourfold tensor.
    pub fn coassociativity_maps(&self) -> Result<(AlgebraHom, AlgebraHom), QMatrixError> {
        let aa = self.tensor_square();
        let four = tensor_square(aa.algebra())?;
        let big = four.algebra();
        let n = self.alg.ngens();
        let delta = self.delta_hom();

        let copy = |k: usize, g: usize| NcPoly::generator(big, k * n + g);
        let shift_aa = |offset: usize| -> Result<AlgebraHom, PbwError> {
            let mapping: Vec<usize> = (0..2 * n).map(|g| g + offset).collect();
            AlgebraHom::positional(aa.algebra(), big, &mapping)
        };
        let into_first = shift_aa(0)?;
        let into_middle = shift_aa(n)?;

        let mut lhs_images = Vec::with_capacity(2 * n);
        let mut rhs_images = Vec::with_capacity(2 * n);
        for g in 0..n {
            let dg = delta.apply(&NcPoly::generator(&self.alg, g))?;
            lhs_images.push(into_first.apply(&dg)?);
            rhs_images.push(copy(0, g));
        }
        for g in 0..n {
            let dg = delta.apply(&NcPoly::generator(&self.alg, g))?;
            lhs_images.push(copy(2, g));
            rhs_images.push(into_middle.apply(&dg)?);
        }
        Ok((AlgebraHom::new(aa.algebra(), big, lhs_images)?, AlgebraHom::new(aa.algebra(), big, rhs_images)?))
    }
}

/// True iff `p` commutes with every generator of its algebra.
pub fn is_central(p: &NcPoly) -> Result<bool, QMatrixError> {
    let alg = p.algebra();
    for g in 0..alg.ngens() {
        if !p.commutator(&NcPoly::generator(alg, g))?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Quantum minor inside a presentation known to be `O_q(M_n)`.
pub fn qminor_in(alg: &Arc<Presentation>, n: usize, idx: &MinorIndex) -> Result<NcPoly, QMatrixError> {
    QuantumMatrices::from_presentation(alg, n)?.qminor(idx)
}
