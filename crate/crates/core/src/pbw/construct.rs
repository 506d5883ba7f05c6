//! Two-factor tensor products and quotients by sets of generators.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{AlgebraHom, Monomial, NcPoly, PbwError, Presentation, Rule};

/// `A ⊗ B` on the generators of `A` (suffixed `@1`) followed by those of `B`
/// (suffixed `@2`). The two copies commute elementwise.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    alg: Arc<Presentation>,
    left: Arc<Presentation>,
    right: Arc<Presentation>,
}

fn shift_monomial(m: &Monomial, offset: usize, total: usize) -> Monomial {
    let mut e = vec![0; total];
    e[offset..offset + m.len()].copy_from_slice(m.exponents());
    Monomial::from_exponents(e)
}

pub fn tensor(left: &Arc<Presentation>, right: &Arc<Presentation>) -> Result<TensorProduct, PbwError> {
    if left.space() != right.space() {
        return Err(PbwError::ParamSpaceMismatch);
    }
    let nl = left.ngens();
    let nr = right.ngens();
    let total = nl + nr;
    let mut gens: Vec<String> = left.generators().iter().map(|g| format!("{}@1", g)).collect();
    gens.extend(right.generators().iter().map(|g| format!("{}@2", g)));

    let mut rules = BTreeMap::new();
    for ((u, v), r) in left.rules() {
        let corrections = r.corrections.iter().map(|(c, m)| (c.clone(), shift_monomial(m, 0, total))).collect();
        rules.insert((u, v), Rule { swap: r.swap.clone(), corrections });
    }
    for ((u, v), r) in right.rules() {
        let corrections = r.corrections.iter().map(|(c, m)| (c.clone(), shift_monomial(m, nl, total))).collect();
        rules.insert((u + nl, v + nl), Rule { swap: r.swap.clone(), corrections });
    }
    for u in 0..nr {
        for v in 0..nl {
            rules.insert((u + nl, v), Rule::skew(left.scalar_one()));
        }
    }
    let weights = match (left.weights(), right.weights()) {
        (Some(wl), Some(wr)) => {
            let rl = wl.first().map_or(0, Vec::len);
            let rr = wr.first().map_or(0, Vec::len);
            let mut w = Vec::with_capacity(total);
            for x in wl {
                let mut v = x.clone();
                v.extend(std::iter::repeat(0).take(rr));
                w.push(v);
            }
            for x in wr {
                let mut v = vec![0; rl];
                v.extend_from_slice(x);
                w.push(v);
            }
            Some(w)
        }
        _ => None,
    };
    let alg = Presentation::new(left.space().clone(), gens, rules, weights)?;
    Ok(TensorProduct { alg, left: left.clone(), right: right.clone() })
}

pub fn tensor_square(a: &Arc<Presentation>) -> Result<TensorProduct, PbwError> {
    tensor(a, a)
}

impl TensorProduct {
    pub fn algebra(&self) -> &Arc<Presentation> {
        &self.alg
    }

    pub fn left(&self) -> &Arc<Presentation> {
        &self.left
    }

    pub fn right(&self) -> &Arc<Presentation> {
        &self.right
    }

    /// `a ⊗ b`. Left generators precede right ones, so concatenating normal
    /// monomials gives a normal monomial.
    pub fn pure(&self, a: &NcPoly, b: &NcPoly) -> Result<NcPoly, PbwError> {
        if !super::poly::same_algebra(a.algebra(), &self.left) || !super::poly::same_algebra(b.algebra(), &self.right) {
            return Err(PbwError::PresentationMismatch);
        }
        let mut terms = Vec::with_capacity(a.len() * b.len());
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                terms.push((ma.concat(mb), ca * cb));
            }
        }
        Ok(NcPoly::from_terms(&self.alg, terms))
    }

    pub fn left_inclusion(&self) -> AlgebraHom {
        let mapping: Vec<usize> = (0..self.left.ngens()).collect();
        AlgebraHom::positional(&self.left, &self.alg, &mapping).expect("inclusion")
    }

    pub fn right_inclusion(&self) -> AlgebraHom {
        let nl = self.left.ngens();
        let mapping: Vec<usize> = (0..self.right.ngens()).map(|g| g + nl).collect();
        AlgebraHom::positional(&self.right, &self.alg, &mapping).expect("inclusion")
    }

    /// `f ⊗ g` as a map between tensor products.
    pub fn map(&self, f: &AlgebraHom, g: &AlgebraHom, target: &TensorProduct) -> Result<AlgebraHom, PbwError> {
        let mut images = Vec::with_capacity(self.alg.ngens());
        let one_r = NcPoly::one(&target.right);
        let one_l = NcPoly::one(&target.left);
        for x in f.images() {
            images.push(target.pure(x, &one_r)?);
        }
        for y in g.images() {
            images.push(target.pure(&one_l, y)?);
        }
        AlgebraHom::new(&self.alg, &target.alg, images)
    }
}

/// `A / ⟨S⟩` for a set `S` of generators, with its quotient map.
#[derive(Clone, Debug)]
pub struct GeneratorQuotient {
    pub algebra: Arc<Presentation>,
    pub map: AlgebraHom,
    /// Surviving generators of the source, in order.
    pub survivors: Vec<usize>,
}

impl GeneratorQuotient {
    /// Inclusion of the quotient's PBW basis back into the source algebra.
    pub fn lift(&self, p: &NcPoly) -> Result<NcPoly, PbwError> {
        let src = self.map.source();
        if !super::poly::same_algebra(p.algebra(), &self.algebra) {
            return Err(PbwError::PresentationMismatch);
        }
        let terms = p.terms().map(|(m, c)| {
            let mut e = vec![0; src.ngens()];
            for (k, &g) in self.survivors.iter().enumerate() {
                e[g] = m.exponents()[k];
            }
            (Monomial::from_exponents(e), c.clone())
        });
        Ok(NcPoly::from_terms(src, terms))
    }
}

/// Builds `A / ⟨S⟩`.
///
/// Requires closure: whenever a rule involves a generator of `S`, each of its
/// correction monomials has a factor in `S`. The span of monomials meeting `S`
/// is then a two-sided ideal, and the quotient is presented on the surviving
/// generators with corrections through `S` dropped.
pub fn quotient_by_generators(a: &Arc<Presentation>, killed: &[usize]) -> Result<GeneratorQuotient, PbwError> {
    let n = a.ngens();
    let mut dead = vec![false; n];
    for &g in killed {
        if g >= n {
            return Err(PbwError::UnknownGenerator(format!("#{}", g)));
        }
        dead[g] = true;
    }
    let hits = |m: &Monomial| m.exponents().iter().enumerate().any(|(g, &e)| e > 0 && dead[g]);

    for ((u, v), r) in a.rules() {
        if (dead[u] || dead[v]) && r.corrections.iter().any(|(_, m)| !hits(m)) {
            return Err(PbwError::ClosureViolation(a.describe_rule(u, v)));
        }
    }

    let survivors: Vec<usize> = (0..n).filter(|&g| !dead[g]).collect();
    let mut new_index = vec![usize::MAX; n];
    for (k, &g) in survivors.iter().enumerate() {
        new_index[g] = k;
    }
    let restrict = |m: &Monomial| Monomial::from_exponents(survivors.iter().map(|&g| m.exponents()[g]).collect());

    let mut rules = BTreeMap::new();
    for ((u, v), r) in a.rules() {
        if dead[u] || dead[v] {
            continue;
        }
        let corrections =
            r.corrections.iter().filter(|(_, m)| !hits(m)).map(|(c, m)| (c.clone(), restrict(m))).collect();
        rules.insert((new_index[u], new_index[v]), Rule { swap: r.swap.clone(), corrections });
    }
    let gens = survivors.iter().map(|&g| a.generators()[g].clone()).collect();
    let weights = a.weights().map(|w| survivors.iter().map(|&g| w[g].clone()).collect());
    let algebra = Presentation::new(a.space().clone(), gens, rules, weights)?;

    let images = (0..n)
        .map(|g| if dead[g] { NcPoly::zero(&algebra) } else { NcPoly::generator(&algebra, new_index[g]) })
        .collect();
    let map = AlgebraHom::new(a, &algebra, images)?;
    Ok(GeneratorQuotient { algebra, map, survivors })
}
