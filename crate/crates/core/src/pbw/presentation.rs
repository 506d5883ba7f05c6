use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{NcPoly, PbwError};
use crate::scalar::{ParamSpace, Scalar};

/// Exponent vector over the ordered generators: `X_1^{a_1} ... X_N^{a_N}`.
///
/// Ordered graded-lexicographically: total degree first, then the larger
/// exponent on the earliest generator wins.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn one(ngens: usize) -> Self {
        Monomial(vec![0; ngens])
    }

    pub fn generator(ngens: usize, g: usize) -> Self {
        let mut e = vec![0; ngens];
        e[g] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    /// Commutative exponent count of a word.
    pub fn from_word(ngens: usize, word: &[usize]) -> Self {
        let mut e = vec![0; ngens];
        for &g in word {
            e[g] += 1;
        }
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Sorted word `g_1 <= g_2 <= ...` spelling this monomial.
    pub fn word(&self) -> Vec<usize> {
        self.0.iter().enumerate().flat_map(|(g, &e)| std::iter::repeat(g).take(e as usize)).collect()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }

    pub fn contains(&self, g: usize) -> bool {
        self.0[g] > 0
    }

    pub(crate) fn bump(&mut self, g: usize, by: i64) {
        let v = self.0[g] as i64 + by;
        debug_assert!(v >= 0);
        self.0[g] = v as u32;
    }

    /// Concatenation of exponent vectors (layout of a two-factor tensor).
    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut e = self.0.clone();
        e.extend_from_slice(&other.0);
        Monomial(e)
    }
}

/// Straightening rule `u·v = swap·v·u + Σ c_k m_k` for generators `u > v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub swap: Scalar,
    pub corrections: Vec<(Scalar, Monomial)>,
}

impl Rule {
    pub fn skew(swap: Scalar) -> Self {
        Rule { swap, corrections: Vec::new() }
    }
}

/// Ordered generators with a straightening rule for every out-of-order pair.
#[derive(Clone, PartialEq, Eq)]
pub struct Presentation {
    space: Arc<ParamSpace>,
    gens: Vec<String>,
    // rules[u*(u-1)/2 + v] for u > v
    rules: Vec<Rule>,
    weights: Option<Vec<Vec<i64>>>,
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Presentation").field("gens", &self.gens).field("params", &self.space.names()).finish()
    }
}

fn pair_index(u: usize, v: usize) -> usize {
    debug_assert!(u > v);
    u * (u - 1) / 2 + v
}

/// Generator count up to which every overlap triple is checked.
pub const FULL_OVERLAP_CHECK_MAX_GENS: usize = 9;
const SAMPLED_OVERLAP_TRIPLES: usize = 256;

impl Presentation {
    /// Validates and builds a presentation.
    ///
    /// `rules` must contain an entry for every pair `(u, v)` with `u > v`.
    pub fn new(
        space: Arc<ParamSpace>,
        gens: Vec<String>,
        mut rules: BTreeMap<(usize, usize), Rule>,
        weights: Option<Vec<Vec<i64>>>,
    ) -> Result<Arc<Self>, PbwError> {
        let n = gens.len();
        for (i, g) in gens.iter().enumerate() {
            if g.is_empty() {
                return Err(PbwError::InvalidGenerator(g.clone()));
            }
            if gens[..i].contains(g) {
                return Err(PbwError::DuplicateGenerator(g.clone()));
            }
        }
        if let Some((&(u, v), _)) = rules.iter().find(|((u, v), _)| u <= v || *u >= n) {
            return Err(PbwError::InvalidRulePair(describe_pair(&gens, u, v)));
        }
        let mut flat = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 1..n {
            for v in 0..u {
                let rule =
                    rules.remove(&(u, v)).ok_or_else(|| PbwError::MissingRule(gens[u].clone(), gens[v].clone()))?;
                if !rule.swap.is_unit() || rule.swap.nvars() != space.len() {
                    return Err(PbwError::NonUnitSwap(gens[u].clone(), gens[v].clone()));
                }
                let mut vu = Monomial::one(n);
                vu.bump(u, 1);
                vu.bump(v, 1);
                for (c, m) in &rule.corrections {
                    if m.len() != n || c.nvars() != space.len() {
                        return Err(PbwError::ShapeMismatch);
                    }
                    if *m >= vu {
                        return Err(PbwError::CorrectionNotSmaller(gens[u].clone(), gens[v].clone()));
                    }
                }
                flat.push(rule);
            }
        }
        if let Some(w) = &weights {
            if w.len() != n {
                return Err(PbwError::ShapeMismatch);
            }
            if let Some(first) = w.first() {
                if w.iter().any(|x| x.len() != first.len()) {
                    return Err(PbwError::ShapeMismatch);
                }
            }
        }
        let pres = Arc::new(Presentation { space, gens, rules: flat, weights });
        pres.check_overlaps()?;
        Ok(pres)
    }

    /// The ground field `k` as a presentation with no generators.
    pub fn ground(space: Arc<ParamSpace>) -> Arc<Self> {
        Arc::new(Presentation { space, gens: Vec::new(), rules: Vec::new(), weights: None })
    }

    pub fn space(&self) -> &Arc<ParamSpace> {
        &self.space
    }

    pub fn nvars(&self) -> usize {
        self.space.len()
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    pub fn generators(&self) -> &[String] {
        &self.gens
    }

    pub fn generator_index(&self, name: &str) -> Result<usize, PbwError> {
        self.gens.iter().position(|g| g == name).ok_or_else(|| PbwError::UnknownGenerator(name.to_string()))
    }

    pub fn weights(&self) -> Option<&[Vec<i64>]> {
        self.weights.as_deref()
    }

    pub fn rule(&self, u: usize, v: usize) -> &Rule {
        &self.rules[pair_index(u, v)]
    }

    /// All rules as `((u, v), rule)` with `u > v`.
    pub fn rules(&self) -> impl Iterator<Item = ((usize, usize), &Rule)> {
        (1..self.ngens()).flat_map(move |u| (0..u).map(move |v| ((u, v), self.rule(u, v))))
    }

    pub fn scalar_one(&self) -> Scalar {
        Scalar::one(self.nvars())
    }

    /// Human-readable form of the defining relation for `(u, v)`.
    pub fn describe_rule(&self, u: usize, v: usize) -> String {
        let r = self.rule(u, v);
        let mut s = format!(
            "{}*{} = ({})*{}*{}",
            self.gens[u],
            self.gens[v],
            r.swap.display(&self.space),
            self.gens[v],
            self.gens[u]
        );
        for (c, m) in &r.corrections {
            let word: Vec<&str> = m.word().iter().map(|&g| self.gens[g].as_str()).collect();
            s.push_str(&format!(" + ({})*{}", c.display(&self.space), word.join("*")));
        }
        s
    }

    /// NF(L - R) for the rule on `(u, v)`; zero for a sound presentation.
    pub fn relation_residual(self: &Arc<Self>, u: usize, v: usize) -> NcPoly {
        let r = self.rule(u, v);
        let lhs = NcPoly::from_word(self, &[u, v]);
        let mut rhs = NcPoly::from_word(self, &[v, u]).scale(&r.swap);
        for (c, m) in &r.corrections {
            rhs = &rhs + &NcPoly::from_word(self, &m.word()).scale(c);
        }
        &lhs - &rhs
    }

    /// `(a·b)·c - a·(b·c)`, each side reduced along a different route.
    pub fn associator(self: &Arc<Self>, a: usize, b: usize, c: usize) -> NcPoly {
        let ab = NcPoly::from_word(self, &[a, b]);
        let bc = NcPoly::from_word(self, &[b, c]);
        let ga = NcPoly::generator(self, a);
        let gc = NcPoly::generator(self, c);
        &(&ab * &gc) - &(&ga * &bc)
    }

    /// Overlap triples checked at construction: exhaustive up to
    /// [`FULL_OVERLAP_CHECK_MAX_GENS`] generators, seeded sampling above.
    pub fn overlap_triples(&self) -> Vec<(usize, usize, usize)> {
        let n = self.ngens();
        if n < 3 {
            return Vec::new();
        }
        if n <= FULL_OVERLAP_CHECK_MAX_GENS {
            let mut out = Vec::new();
            for c in 2..n {
                for b in 1..c {
                    for a in 0..b {
                        out.push((c, b, a));
                    }
                }
            }
            out
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            (0..SAMPLED_OVERLAP_TRIPLES)
                .map(|_| {
                    let mut t = [rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)];
                    t.sort_unstable_by(|x, y| y.cmp(x));
                    (t[0], t[1], t[2])
                })
                .filter(|(c, b, a)| c > b && b > a)
                .collect()
        }
    }

    pub fn check_overlaps(self: &Arc<Self>) -> Result<(), PbwError> {
        for (c, b, a) in self.overlap_triples() {
            if !self.associator(c, b, a).is_zero() {
                return Err(PbwError::OverlapFailure(self.gens[c].clone(), self.gens[b].clone(), self.gens[a].clone()));
            }
        }
        Ok(())
    }
}

fn describe_pair(gens: &[String], u: usize, v: usize) -> String {
    let name = |i: usize| gens.get(i).cloned().unwrap_or_else(|| format!("#{}", i));
    format!("({}, {})", name(u), name(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let a = Monomial::from_exponents(vec![1, 0, 0, 1]);
        let b = Monomial::from_exponents(vec![0, 1, 1, 0]);
        let c = Monomial::from_exponents(vec![0, 0, 0, 1]);
        assert!(a > b);
        assert!(b > c);
        assert_eq!(a.word(), vec![0, 3]);
        assert_eq!(Monomial::from_word(4, &[3, 0]), a);
    }

    #[test]
    fn missing_rule_rejected() {
        let space = Arc::new(ParamSpace::single_q());
        let err = Presentation::new(space, vec!["x".into(), "y".into()], BTreeMap::new(), None);
        assert!(matches!(err, Err(PbwError::MissingRule(_, _))));
    }

    #[test]
    fn non_unit_swap_rejected() {
        let space = Arc::new(ParamSpace::single_q());
        let q = space.param("q").unwrap();
        let mut rules = BTreeMap::new();
        rules.insert((1, 0), Rule::skew(&q + &space.one()));
        let err = Presentation::new(space, vec!["x".into(), "y".into()], rules, None);
        assert!(matches!(err, Err(PbwError::NonUnitSwap(_, _))));
    }

    #[test]
    fn correction_must_decrease() {
        let space = Arc::new(ParamSpace::single_q());
        let mut rules = BTreeMap::new();
        rules.insert(
            (1, 0),
            Rule { swap: space.one(), corrections: vec![(space.one(), Monomial::from_exponents(vec![2, 0]))] },
        );
        let err = Presentation::new(space, vec!["x".into(), "y".into()], rules, None);
        assert!(matches!(err, Err(PbwError::CorrectionNotSmaller(_, _))));
    }

    #[test]
    fn weyl_style_constant_correction_is_allowed() {
        let space = Arc::new(ParamSpace::single_q());
        let mut rules = BTreeMap::new();
        rules.insert((1, 0), Rule { swap: space.one(), corrections: vec![(space.one(), Monomial::one(2))] });
        let p = Presentation::new(space, vec!["x".into(), "y".into()], rules, None).unwrap();
        let yx = NcPoly::from_word(&p, &[1, 0]);
        assert_eq!(yx.len(), 2);
    }

    #[test]
    fn inconsistent_overlap_detected() {
        // z y = y z + 1, z x = x z, y x = 2 x y: (zy)x and z(yx) disagree.
        let space = Arc::new(ParamSpace::single_q());
        let one = space.one();
        let two = space.int(2);
        let mut rules = BTreeMap::new();
        rules.insert((1, 0), Rule::skew(two));
        rules.insert((2, 0), Rule::skew(one.clone()));
        rules.insert((2, 1), Rule { swap: one.clone(), corrections: vec![(one, Monomial::one(3))] });
        let err = Presentation::new(space, vec!["x".into(), "y".into(), "z".into()], rules, None);
        assert!(matches!(err, Err(PbwError::OverlapFailure(_, _, _))), "{:?}", err);
    }
}
