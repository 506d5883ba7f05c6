//! Generator patterns of torus-invariant primes in quantum matrices.
//!
//! A set `X` of matrix generators satisfies condition (*) when every cell
//! `(i,j) ∈ X` has its whole south-west block `{(l,m) : l ≥ i, m ≤ j}` or its
//! whole north-east block `{(l,m) : l ≤ i, m ≥ j}` inside `X`. Patterns are
//! bitmasks over the `n × n` grid, bit `(i-1)·n + (j-1)` for cell `(i,j)`.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::pbw::{quotient_by_generators, NcPoly, PbwError};
use crate::qmatrix::QuantumMatrices;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("n = {n} exceeds the limit {limit} for {what}")]
    TooLarge { n: usize, limit: usize, what: &'static str },
    #[error("cell ({0}, {1}) outside the grid")]
    CellOutOfRange(usize, usize),
    #[error("invalid (I, J, f, g) data: {0}")]
    InvalidData(String),
    #[error(transparent)]
    Pbw(#[from] PbwError),
}

pub const MAX_GRID: usize = 8;
pub const MAX_EXHAUSTIVE: usize = 5;
pub const MAX_PARAMETRIZATION: usize = 4;
pub const MAX_RANK_LE1: usize = 6;

fn check_size(n: usize, limit: usize, what: &'static str) -> Result<(), PatternError> {
    if n > limit {
        return Err(PatternError::TooLarge { n, limit, what });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridPattern {
    n: usize,
    bits: u64,
}

fn bit(n: usize, i: usize, j: usize) -> u64 {
    1u64 << ((i - 1) * n + (j - 1))
}

impl GridPattern {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_GRID, "grid too large");
        GridPattern { n, bits: 0 }
    }

    pub fn full(n: usize) -> Self {
        let cells = n * n;
        GridPattern { n, bits: if cells == 64 { u64::MAX } else { (1u64 << cells) - 1 } }
    }

    pub fn from_bits(n: usize, bits: u64) -> Self {
        assert!(n <= MAX_GRID, "grid too large");
        GridPattern { n, bits: bits & GridPattern::full(n).bits }
    }

    /// One-based cells.
    pub fn from_cells(n: usize, cells: &[(usize, usize)]) -> Result<Self, PatternError> {
        check_size(n, MAX_GRID, "grid patterns")?;
        let mut bits = 0;
        for &(i, j) in cells {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(PatternError::CellOutOfRange(i, j));
            }
            bits |= bit(n, i, j);
        }
        Ok(GridPattern { n, bits })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.bits & bit(self.n, i, j) != 0
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).filter(|&(i, j)| self.contains(i, j)).collect()
    }

    /// Zero-based generator indices of `O_q(M_n)`.
    pub fn generator_indices(&self) -> Vec<usize> {
        (0..self.n * self.n).filter(|k| self.bits >> k & 1 == 1).collect()
    }

    pub fn transpose(&self) -> Self {
        let cells: Vec<(usize, usize)> = self.cells().into_iter().map(|(i, j)| (j, i)).collect();
        GridPattern::from_cells(self.n, &cells).expect("in range")
    }

    /// `•` for members, `∘` otherwise, one row per line.
    pub fn to_ascii(&self) -> String {
        (1..=self.n).map(|i| (1..=self.n).map(|j| if self.contains(i, j) { "•" } else { "∘" }).join(" ")).join("\n")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "cells": self.cells().into_iter().map(|(i, j)| [i, j]).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for GridPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

/// South-west and north-east blocks of every cell, as bitmasks.
struct Blocks {
    sw: Vec<u64>,
    ne: Vec<u64>,
}

impl Blocks {
    fn new(n: usize) -> Self {
        let mut sw = vec![0; n * n];
        let mut ne = vec![0; n * n];
        for i in 1..=n {
            for j in 1..=n {
                let k = (i - 1) * n + (j - 1);
                for l in 1..=n {
                    for m in 1..=n {
                        if l >= i && m <= j {
                            sw[k] |= bit(n, l, m);
                        }
                        if l <= i && m >= j {
                            ne[k] |= bit(n, l, m);
                        }
                    }
                }
            }
        }
        Blocks { sw, ne }
    }

    fn is_star(&self, bits: u64) -> bool {
        let mut rest = bits;
        while rest != 0 {
            let k = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if bits & self.sw[k] != self.sw[k] && bits & self.ne[k] != self.ne[k] {
                return false;
            }
        }
        true
    }
}

/// Condition (*), evaluated cell by cell.
pub fn is_star(p: &GridPattern) -> bool {
    Blocks::new(p.n).is_star(p.bits)
}

/// The closure condition for quotients by generators: for every diagonal
/// pair `X_ij, X_lm` (`i < l`, `j < m`) meeting `X`, one of `X_im, X_lj` lies
/// in `X`. This is exactly when the span of monomials through `X` is an ideal.
pub fn is_closure_consistent(p: &GridPattern) -> bool {
    let n = p.n;
    for i in 1..=n {
        for j in 1..=n {
            for l in i + 1..=n {
                for m in j + 1..=n {
                    if (p.contains(i, j) || p.contains(l, m)) && !(p.contains(i, m) || p.contains(l, j)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Every closure-consistent pattern, ordered by bitmask.
pub fn enumerate_closure_consistent(n: usize) -> Result<Vec<GridPattern>, PatternError> {
    check_size(n, MAX_EXHAUSTIVE, "exhaustive enumeration")?;
    Ok((0..1u64 << (n * n)).into_par_iter().map(|b| GridPattern { n, bits: b }).filter(is_closure_consistent).collect())
}

/// Every pattern satisfying (*), ordered by bitmask.
pub fn enumerate_star(n: usize) -> Result<Vec<GridPattern>, PatternError> {
    check_size(n, MAX_EXHAUSTIVE, "exhaustive enumeration")?;
    let blocks = Blocks::new(n);
    let total = 1u64 << (n * n);
    Ok((0..total).into_par_iter().filter(|&b| blocks.is_star(b)).map(|b| GridPattern { n, bits: b }).collect())
}

/// `(I, J, f, g)` with `f: {1..n}∖J → {2..n+1}∖I` and
/// `g: {1..n}∖I → {2..n+1}∖J` nondecreasing. Functions are listed as values on
/// their domain in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IJfgData {
    pub n: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub f: Vec<usize>,
    pub g: Vec<usize>,
}

fn complement(n: usize, s: &[usize]) -> Vec<usize> {
    (1..=n).filter(|x| !s.contains(x)).collect()
}

fn codomain(n: usize, s: &[usize]) -> Vec<usize> {
    (2..=n + 1).filter(|x| !s.contains(x)).collect()
}

impl IJfgData {
    pub fn f_domain(&self) -> Vec<usize> {
        complement(self.n, &self.cols)
    }

    pub fn g_domain(&self) -> Vec<usize> {
        complement(self.n, &self.rows)
    }

    pub fn validate(&self) -> Result<(), PatternError> {
        let n = self.n;
        let bad = |m: String| Err(PatternError::InvalidData(m));
        for (name, s) in [("I", &self.rows), ("J", &self.cols)] {
            if s.windows(2).any(|w| w[0] >= w[1]) || s.iter().any(|&x| x == 0 || x > n) {
                return bad(format!("{} = {:?} is not an increasing subset of 1..={}", name, s, n));
            }
        }
        for (name, vals, dom, cod) in [
            ("f", &self.f, self.f_domain(), codomain(n, &self.rows)),
            ("g", &self.g, self.g_domain(), codomain(n, &self.cols)),
        ] {
            if vals.len() != dom.len() {
                return bad(format!("{} has {} values on a domain of size {}", name, vals.len(), dom.len()));
            }
            if let Some(v) = vals.iter().find(|v| !cod.contains(v)) {
                return bad(format!("{} takes the value {} outside {:?}", name, v, cod));
            }
            if vals.windows(2).any(|w| w[0] > w[1]) {
                return bad(format!("{} is not nondecreasing", name));
            }
        }
        Ok(())
    }
}

/// `{X_ij | i ∈ I} ∪ {X_ij | j ∈ J} ∪ {X_ij | i ∉ I, j ∉ J, i ≥ f(j)} ∪ {X_ij | i ∉ I, j ∉ J, j ≥ g(i)}`.
pub fn pattern_from_ijfg(d: &IJfgData) -> Result<GridPattern, PatternError> {
    check_size(d.n, MAX_GRID, "grid patterns")?;
    d.validate()?;
    let n = d.n;
    let fdom = d.f_domain();
    let gdom = d.g_domain();
    let f = |j: usize| d.f[fdom.iter().position(|&x| x == j).expect("in domain")];
    let g = |i: usize| d.g[gdom.iter().position(|&x| x == i).expect("in domain")];
    let mut cells = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let in_i = d.rows.contains(&i);
            let in_j = d.cols.contains(&j);
            let member = in_i || in_j || i >= f(j) || j >= g(i);
            if member {
                cells.push((i, j));
            }
        }
    }
    GridPattern::from_cells(n, &cells)
}

fn subsets(n: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).map(|m| (1..=n).filter(|i| m >> (i - 1) & 1 == 1).collect()).collect()
}

/// Every valid `(I, J, f, g)` for size `n`.
pub fn all_ijfg(n: usize) -> Result<Vec<IJfgData>, PatternError> {
    check_size(n, MAX_PARAMETRIZATION, "the (I, J, f, g) parametrization")?;
    let mut out = Vec::new();
    for rows in subsets(n) {
        for cols in subsets(n) {
            let fdom = complement(n, &cols).len();
            let gdom = complement(n, &rows).len();
            let fcod = codomain(n, &rows);
            let gcod = codomain(n, &cols);
            let fs: Vec<Vec<usize>> = fcod.iter().copied().combinations_with_replacement(fdom).collect();
            let gs: Vec<Vec<usize>> = gcod.iter().copied().combinations_with_replacement(gdom).collect();
            for f in &fs {
                for g in &gs {
                    out.push(IJfgData { n, rows: rows.clone(), cols: cols.clone(), f: f.clone(), g: g.clone() });
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParametrizationReport {
    pub n: usize,
    pub star_count: usize,
    pub image_count: usize,
    pub data_count: usize,
    pub equal: bool,
    pub closure_consistent_count: usize,
    /// The images are exactly the closure-consistent patterns.
    pub images_equal_closure_consistent: bool,
    /// Star patterns not of the form X(I, J, f, g).
    #[serde(serialize_with = "ser_patterns")]
    pub missing: Vec<GridPattern>,
    /// Images failing (*).
    #[serde(serialize_with = "ser_patterns")]
    pub extra: Vec<GridPattern>,
}

fn ser_patterns<S: serde::Serializer>(v: &[GridPattern], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for p in v {
        seq.serialize_element(&p.to_json())?;
    }
    seq.end()
}

/// Compares the images of all `(I, J, f, g)` with the star patterns and with
/// the closure-consistent patterns.
///
/// Every star pattern is an image. The converse fails from `n = 3` on: a
/// single full middle column is an image (and generates a completely prime
/// ideal, the quotient being quantum `3 × 2` matrices) but violates (*).
pub fn verify_parametrization(n: usize) -> Result<ParametrizationReport, PatternError> {
    check_size(n, MAX_PARAMETRIZATION, "the (I, J, f, g) parametrization")?;
    let data = all_ijfg(n)?;
    let images: BTreeSet<GridPattern> = data.iter().map(pattern_from_ijfg).collect::<Result<_, _>>()?;
    let stars: BTreeSet<GridPattern> = enumerate_star(n)?.into_iter().collect();
    let closed: BTreeSet<GridPattern> = enumerate_closure_consistent(n)?.into_iter().collect();
    let missing: Vec<GridPattern> = stars.difference(&images).copied().collect();
    let extra: Vec<GridPattern> = images.difference(&stars).copied().collect();
    Ok(ParametrizationReport {
        n,
        star_count: stars.len(),
        image_count: images.len(),
        data_count: data.len(),
        equal: missing.is_empty() && extra.is_empty(),
        closure_consistent_count: closed.len(),
        images_equal_closure_consistent: images == closed,
        missing,
        extra,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankLe1Count {
    pub n: usize,
    pub count: usize,
    /// `(2^n - 1)^2 + 1`.
    pub formula: usize,
    pub note: Option<String>,
}

/// Distinct ideals `⟨2×2 minors⟩ + ⟨X_ij | i ∈ R⟩ + ⟨X_ij | j ∈ C⟩`.
///
/// Every such generator list contains the same minors, so ideals are told
/// apart by their generator cells `{(i,j) : i ∈ R or j ∈ C}`. A full row or
/// column set already yields every generator, which saturates the ideal.
pub fn rank_le1_count(n: usize) -> Result<RankLe1Count, PatternError> {
    check_size(n, MAX_RANK_LE1, "rank ≤ 1 counting")?;
    let mut seen = BTreeSet::new();
    for r in 0u64..1 << n {
        for c in 0u64..1 << n {
            let mut bits = 0u64;
            for i in 1..=n {
                for j in 1..=n {
                    if r >> (i - 1) & 1 == 1 || c >> (j - 1) & 1 == 1 {
                        bits |= bit(n, i, j);
                    }
                }
            }
            seen.insert(bits);
        }
    }
    let formula = ((1usize << n) - 1).pow(2) + 1;
    let note = (n == 1).then(|| "1×1 matrices have no 2×2 minors; the family is ⟨0⟩ and ⟨X[1,1]⟩".to_string());
    Ok(RankLe1Count { n, count: seen.len(), formula, note })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    /// Published counts, stored as data and not recomputed here.
    Literature,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankTable {
    pub rank0: usize,
    pub rank1: usize,
    pub rank2: usize,
    pub rank3: usize,
    pub total: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Catalog {
    pub provenance: Provenance,
    /// Torus-invariant primes of `O_q(M_2)`.
    pub two_by_two_total: usize,
    /// Torus-invariant primes of `O_q(M_3)` by rank.
    pub three_by_three: RankTable,
    pub four_by_four_total: usize,
}

pub fn catalog_data() -> Catalog {
    Catalog {
        provenance: Provenance::Literature,
        two_by_two_total: 14,
        three_by_three: RankTable { rank0: 1, rank1: 49, rank2: 144, rank3: 36, total: 230 },
        four_by_four_total: 6902,
    }
}

impl Catalog {
    /// Internal consistency only: the rank table sums to its total, and the
    /// recorded rank ≤ 1 part agrees with the computed rank ≤ 1 family.
    pub fn consistent(&self) -> bool {
        let t = &self.three_by_three;
        let sums = t.rank0 + t.rank1 + t.rank2 + t.rank3 == t.total;
        let rank_le1 = rank_le1_count(3).map(|r| r.count == t.rank0 + t.rank1).unwrap_or(false);
        sums && rank_le1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientCheck {
    pub survivors: usize,
    pub relations_sound: bool,
    /// No surviving generator maps to zero, and every killed one does.
    pub faithful: bool,
}

/// Builds `O_q(M_n)/⟨X⟩` and checks it.
pub fn quotient_consistency(m: &QuantumMatrices, p: &GridPattern) -> Result<QuotientCheck, PatternError> {
    if p.n() != m.n() {
        return Err(PatternError::InvalidData(format!("pattern size {} vs matrix size {}", p.n(), m.n())));
    }
    let quo = quotient_by_generators(m.algebra(), &p.generator_indices())?;
    let relations_sound = quo.algebra.rules().all(|((u, v), _)| quo.algebra.relation_residual(u, v).is_zero());
    let mut faithful = true;
    for g in 0..m.algebra().ngens() {
        let img = quo.map.apply(&NcPoly::generator(m.algebra(), g))?;
        let killed = p.bits() >> g & 1 == 1;
        if img.is_zero() != killed {
            faithful = false;
        }
    }
    Ok(QuotientCheck { survivors: quo.survivors.len(), relations_sound, faithful })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cells(n: usize, c: &[(usize, usize)]) -> GridPattern {
        GridPattern::from_cells(n, c).unwrap()
    }

    /// Literal (*) with no bitmask tricks.
    fn star_oracle(p: &GridPattern) -> bool {
        let n = p.n();
        p.cells().into_iter().all(|(i, j)| {
            let sw = (i..=n).all(|l| (1..=j).all(|m| p.contains(l, m)));
            let ne = (1..=i).all(|l| (j..=n).all(|m| p.contains(l, m)));
            sw || ne
        })
    }

    #[test]
    fn star_examples() {
        assert!(is_star(&GridPattern::empty(3)));
        assert!(is_star(&cells(2, &[(1, 2)])));
        assert!(!is_star(&cells(2, &[(1, 1)])));
        assert!(is_star(&cells(2, &[(2, 1)])));
        assert!(is_star(&GridPattern::full(4)));
    }

    #[test]
    fn star_matches_oracle() {
        for n in 1..=3 {
            for b in 0..1u64 << (n * n) {
                let p = GridPattern::from_bits(n, b);
                assert_eq!(is_star(&p), star_oracle(&p));
            }
        }
    }

    #[test]
    fn enumeration_small() {
        let one = enumerate_star(1).unwrap();
        assert_eq!(one, vec![GridPattern::empty(1), GridPattern::full(1)]);
        let two = enumerate_star(2).unwrap();
        assert_eq!(two.len(), 13);
        assert!(two.windows(2).all(|w| w[0] < w[1]));
        assert!(matches!(enumerate_star(6), Err(PatternError::TooLarge { .. })));
    }

    #[test]
    fn enumeration_closed_under_transpose() {
        for n in 1..=3 {
            let all: BTreeSet<GridPattern> = enumerate_star(n).unwrap().into_iter().collect();
            for p in &all {
                assert!(all.contains(&p.transpose()));
            }
        }
    }

    #[test]
    fn ijfg_examples() {
        let d = IJfgData { n: 3, rows: vec![], cols: vec![], f: vec![4, 4, 4], g: vec![4, 4, 4] };
        assert!(pattern_from_ijfg(&d).unwrap().is_empty());
        let d = IJfgData { n: 3, rows: vec![1, 2, 3], cols: vec![], f: vec![4, 4, 4], g: vec![] };
        assert_eq!(pattern_from_ijfg(&d).unwrap(), GridPattern::full(3));
        let d = IJfgData { n: 2, rows: vec![], cols: vec![], f: vec![2, 3], g: vec![3, 3] };
        let p = pattern_from_ijfg(&d).unwrap();
        assert_eq!(p, cells(2, &[(2, 1)]));
        assert!(is_star(&p));
    }

    #[test]
    fn ijfg_validation() {
        let bad_range = IJfgData { n: 2, rows: vec![], cols: vec![], f: vec![1, 3], g: vec![3, 3] };
        assert!(pattern_from_ijfg(&bad_range).is_err());
        let decreasing = IJfgData { n: 2, rows: vec![], cols: vec![], f: vec![3, 2], g: vec![3, 3] };
        assert!(pattern_from_ijfg(&decreasing).is_err());
        let short = IJfgData { n: 2, rows: vec![1], cols: vec![], f: vec![3, 3], g: vec![3, 3] };
        assert!(pattern_from_ijfg(&short).is_err());
        // f may not hit a row in I
        let hits_i = IJfgData { n: 2, rows: vec![2], cols: vec![], f: vec![2, 3], g: vec![3] };
        assert!(pattern_from_ijfg(&hits_i).is_err());
    }

    #[test]
    fn images_versus_star() {
        for n in 1..=2 {
            for d in all_ijfg(n).unwrap() {
                assert!(is_star(&pattern_from_ijfg(&d).unwrap()), "{:?}", d);
            }
        }
        // I = ∅, J = {2}: the middle column alone
        let d = IJfgData { n: 3, rows: vec![], cols: vec![2], f: vec![4, 4], g: vec![4, 4, 4] };
        let p = pattern_from_ijfg(&d).unwrap();
        assert_eq!(p, cells(3, &[(1, 2), (2, 2), (3, 2)]));
        assert!(!is_star(&p));
        assert!(is_closure_consistent(&p));
        let m = QuantumMatrices::generic(3);
        let check = quotient_consistency(&m, &p).unwrap();
        assert!(check.relations_sound && check.faithful);
    }

    #[test]
    fn star_implies_closure_consistent() {
        for n in 1..=3 {
            for p in enumerate_star(n).unwrap() {
                assert!(is_closure_consistent(&p));
            }
        }
    }

    #[test]
    fn parametrization_small() {
        for n in 1..=2 {
            let r = verify_parametrization(n).unwrap();
            assert!(r.equal, "{:?}", r);
            assert!(r.images_equal_closure_consistent);
        }
        assert_eq!(verify_parametrization(1).unwrap().star_count, 2);
        let r = verify_parametrization(3).unwrap();
        assert!(r.missing.is_empty());
        assert_eq!((r.star_count, r.image_count, r.closure_consistent_count), (114, 147, 147));
        assert_eq!(r.extra.len(), 33);
        assert!(r.images_equal_closure_consistent);
        assert!(!r.equal);
    }

    #[test]
    fn rank_le1_counts() {
        assert_eq!(rank_le1_count(1).unwrap().count, 2);
        assert!(rank_le1_count(1).unwrap().note.is_some());
        assert_eq!(rank_le1_count(2).unwrap().count, 10);
        assert_eq!(rank_le1_count(3).unwrap().count, 50);
        for n in 2..=6 {
            let r = rank_le1_count(n).unwrap();
            assert_eq!(r.count, r.formula);
            assert!(r.note.is_none());
        }
    }

    #[test]
    fn rank_le1_cells_match_generator_lists() {
        let m = QuantumMatrices::generic(3);
        let gens = |rows: &[usize], cols: &[usize]| -> BTreeSet<usize> {
            m.detgen_rank_le1(rows, cols)
                .unwrap()
                .into_iter()
                .filter(|p| p.len() == 1 && p.leading_term().unwrap().0.degree() == 1)
                .map(|p| p.leading_term().unwrap().0.max_generator().unwrap())
                .collect()
        };
        let a = gens(&[1], &[2]);
        let expected: BTreeSet<usize> = [0, 1, 2, 4, 7].into_iter().collect();
        assert_eq!(a, expected);
        assert_eq!(gens(&[1, 2, 3], &[]).len(), 9);
    }

    #[test]
    fn catalog() {
        let c = catalog_data();
        assert_eq!(c.provenance, Provenance::Literature);
        assert_eq!(c.two_by_two_total, 14);
        assert_eq!(c.three_by_three.total, 230);
        assert_eq!(c.four_by_four_total, 6902);
        assert!(c.consistent());
    }

    #[test]
    fn star_patterns_give_domain_quotients() {
        for n in 1..=2 {
            let m = QuantumMatrices::generic(n);
            for p in enumerate_star(n).unwrap() {
                let check = quotient_consistency(&m, &p).unwrap();
                assert!(check.relations_sound && check.faithful);
                assert_eq!(check.survivors, n * n - p.len());
            }
        }
        let m = QuantumMatrices::generic(2);
        assert!(quotient_consistency(&m, &cells(2, &[(1, 1)])).is_err());
    }

    #[test]
    fn rendering() {
        let p = cells(2, &[(1, 2)]);
        assert_eq!(p.to_ascii(), "∘ •\n∘ ∘");
        assert_eq!(p.to_json(), serde_json::json!({"n": 2, "cells": [[1, 2]]}));
        assert!(GridPattern::from_cells(2, &[(3, 1)]).is_err());
    }
}
