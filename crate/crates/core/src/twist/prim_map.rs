//! The quotient map `k³ → prim O_q(k³)` with `q = p²`.
//!
//! Points carry symbolic coordinates. A coordinate is treated as nonzero
//! exactly when it is a nonzero Laurent polynomial, so a point like
//! `(l1, 0, l3)` stands for the whole torus orbit of that zero-pattern.

use std::sync::Arc;

use serde_json::{json, Value};
use thiserror::Error;

use crate::pbw::{quantum_affine, AlgebraHom, Monomial, NcPoly, PbwError, Presentation};
use crate::scalar::{ParamSpace, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("the parameter space needs a parameter `p` and the alias `q = p^2`")]
    MissingSquareRoot,
    #[error("generator index {0} is not one of 1, 2, 3")]
    UnsupportedGenerator(usize),
    #[error("points live in different parameter spaces")]
    SpaceMismatch,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Pbw(#[from] PbwError),
}

/// `{p, l1, l2, l3, m1, m2, m3, t, t1, t3}` with `q = p²`.
pub fn quotient_space() -> Arc<ParamSpace> {
    ParamSpace::new(["p", "l1", "l2", "l3", "m1", "m2", "m3", "t", "t1", "t3"])
        .and_then(|s| s.with_square_root("q", "p"))
        .expect("fixed names are valid")
        .into_arc()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPoint {
    pub coords: [Scalar; 3],
}

impl QuotientPoint {
    pub fn new(a: Scalar, b: Scalar, c: Scalar) -> Self {
        QuotientPoint { coords: [a, b, c] }
    }

    /// The point whose `i`-th coordinate is `l_i` on `support` and zero elsewhere.
    pub fn generic(space: &ParamSpace, support: [bool; 3]) -> Self {
        let c = |i: usize| {
            if support[i] {
                space.param(&format!("l{}", i + 1)).expect("l_i declared")
            } else {
                space.zero()
            }
        };
        QuotientPoint::new(c(0), c(1), c(2))
    }

    /// `true` at the nonzero coordinates.
    pub fn support(&self) -> [bool; 3] {
        [!self.coords[0].is_zero(), !self.coords[1].is_zero(), !self.coords[2].is_zero()]
    }

    pub fn display(&self, space: &ParamSpace) -> String {
        let c: Vec<String> = self.coords.iter().map(|s| s.display(space).to_string()).collect();
        format!("({})", c.join(", "))
    }
}

/// The image ideal, one variant per shape in the table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealDescriptor {
    /// `⟨x1, x2, x3⟩`.
    Origin,
    /// `⟨x_i - λ, x_j, x_k⟩`, one-based `index`.
    Axis { index: usize, value: Scalar },
    /// `⟨x_i⟩` where `i` is the single zero coordinate.
    Coordinate { index: usize },
    /// `⟨λ2 x1 x3 - p λ1 λ3 x2⟩`.
    Generic { lambda: [Scalar; 3] },
}

/// The table rows in display order, as supports.
pub const TABLE_ROWS: [[bool; 3]; 8] = [
    [false, false, false],
    [true, false, false],
    [false, true, false],
    [false, false, true],
    [true, true, false],
    [true, false, true],
    [false, true, true],
    [true, true, true],
];

pub fn table_row(support: [bool; 3]) -> usize {
    TABLE_ROWS.iter().position(|r| *r == support).expect("every support is a row")
}

pub fn point_to_prim(pt: &QuotientPoint) -> IdealDescriptor {
    let s = pt.support();
    match s.iter().filter(|&&b| b).count() {
        0 => IdealDescriptor::Origin,
        1 => {
            let i = s.iter().position(|&b| b).unwrap();
            IdealDescriptor::Axis { index: i + 1, value: pt.coords[i].clone() }
        }
        2 => IdealDescriptor::Coordinate { index: s.iter().position(|&b| !b).unwrap() + 1 },
        _ => IdealDescriptor::Generic { lambda: pt.coords.clone() },
    }
}

fn p_of(space: &ParamSpace) -> Result<Scalar, QuotientError> {
    let p = space.param("p").map_err(|_| QuotientError::MissingSquareRoot)?;
    let q = space.param("q").map_err(|_| QuotientError::MissingSquareRoot)?;
    if &p * &p != q {
        return Err(QuotientError::MissingSquareRoot);
    }
    Ok(p)
}

/// `O_q(k³)` over `space`, with `q` the declared square.
pub fn quotient_algebra(space: &Arc<ParamSpace>) -> Result<Arc<Presentation>, QuotientError> {
    p_of(space)?;
    Ok(quantum_affine(space, 3, &space.param("q")?)?)
}

impl IdealDescriptor {
    pub fn shape(&self) -> &'static str {
        match self {
            IdealDescriptor::Origin => "origin",
            IdealDescriptor::Axis { .. } => "axis",
            IdealDescriptor::Coordinate { .. } => "coordinate",
            IdealDescriptor::Generic { .. } => "generic",
        }
    }

    /// The listed generators, as elements of `alg = O_q(k³)`.
    pub fn generators(&self, alg: &Arc<Presentation>) -> Result<Vec<NcPoly>, QuotientError> {
        let x = |i: usize| NcPoly::generator(alg, i - 1);
        Ok(match self {
            IdealDescriptor::Origin => vec![x(1), x(2), x(3)],
            IdealDescriptor::Axis { index, value } => (1..=3)
                .map(|i| if i == *index { &x(i) - &NcPoly::constant(alg, value.clone()) } else { x(i) })
                .collect(),
            IdealDescriptor::Coordinate { index } => vec![x(*index)],
            IdealDescriptor::Generic { lambda } => {
                let p = p_of(alg.space())?;
                let x13 = NcPoly::from_word(alg, &[0, 2]).scale(&lambda[1]);
                let x2 = x(2).scale(&(&(&p * &lambda[0]) * &lambda[2]));
                vec![&x13 - &x2]
            }
        })
    }

    pub fn display(&self, alg: &Arc<Presentation>) -> Result<String, QuotientError> {
        let g: Vec<String> = self.generators(alg)?.iter().map(|p| p.to_string()).collect();
        Ok(format!("⟨{}⟩", g.join(", ")))
    }

    /// Tagged JSON, scalars rendered in the expression grammar.
    pub fn to_json(&self, alg: &Arc<Presentation>) -> Result<Value, QuotientError> {
        let space = alg.space();
        let gens: Vec<String> = self.generators(alg)?.iter().map(NcPoly::to_expression).collect();
        Ok(match self {
            IdealDescriptor::Origin => json!({"shape": "origin", "generators": gens}),
            IdealDescriptor::Axis { index, value } => json!({
                "shape": "axis", "index": index, "value": value.display(space).to_string(), "generators": gens
            }),
            IdealDescriptor::Coordinate { index } => json!({"shape": "coordinate", "index": index, "generators": gens}),
            IdealDescriptor::Generic { lambda } => json!({
                "shape": "generic",
                "lambda": lambda.iter().map(|s| s.display(space).to_string()).collect::<Vec<_>>(),
                "generators": gens
            }),
        })
    }
}

/// Whether two points have the same image ideal.
pub fn fibre_equal(a: &QuotientPoint, b: &QuotientPoint) -> Result<bool, QuotientError> {
    let nv = a.coords[0].nvars();
    if a.coords.iter().chain(&b.coords).any(|c| c.nvars() != nv) {
        return Err(QuotientError::SpaceMismatch);
    }
    Ok(match (point_to_prim(a), point_to_prim(b)) {
        (IdealDescriptor::Origin, IdealDescriptor::Origin) => true,
        (IdealDescriptor::Axis { index: i, value: u }, IdealDescriptor::Axis { index: j, value: v }) => {
            i == j && u == v
        }
        (IdealDescriptor::Coordinate { index: i }, IdealDescriptor::Coordinate { index: j }) => i == j,
        // principal ideals with generators λ2·m - pλ1λ3·x2 and μ2·m - pμ1μ3·x2
        (IdealDescriptor::Generic { lambda: l }, IdealDescriptor::Generic { lambda: m }) => {
            &(&l[1] * &m[0]) * &m[2] == &(&m[1] * &l[0]) * &l[2]
        }
        _ => false,
    })
}

/// Why an image ideal does or does not contain `x_g`.
#[derive(Clone, Debug)]
pub enum Membership {
    /// `x_g` is one of the listed generators.
    Listed,
    /// A character `A → k` kills the ideal but not `x_g`.
    Character(AlgebraHom),
    /// The ideal is `zA` for a normal `z`. The relations are homogeneous in
    /// total degree and `A` is a domain, so every nonzero element of `zA` has
    /// top degree at least `deg z > deg x_g`.
    DegreeBound { normal_scalars: Vec<Scalar> },
}

impl Membership {
    pub fn contains(&self) -> bool {
        matches!(self, Membership::Listed)
    }
}

/// The character `x_i ↦ v·δ_{i,g}` of `O_q(k³)` for one-based `g`.
fn character(alg: &Arc<Presentation>, g: usize, v: &Scalar) -> Result<AlgebraHom, QuotientError> {
    let ground = Presentation::ground(alg.space().clone());
    let images =
        (1..=3).map(|i| if i == g { NcPoly::constant(&ground, v.clone()) } else { NcPoly::zero(&ground) }).collect();
    Ok(AlgebraHom::verified(alg, &ground, images)?)
}

fn kills(h: &AlgebraHom, gens: &[NcPoly]) -> Result<bool, QuotientError> {
    for p in gens {
        if !h.apply(p)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Scalars `s_i` with `z·x_i = s_i·x_i·z`, if they exist.
fn normal_scalars(z: &NcPoly) -> Result<Option<Vec<Scalar>>, QuotientError> {
    let alg = z.algebra();
    let Some((m, _)) = z.leading_term() else { return Ok(None) };
    let mut out = Vec::new();
    for i in 0..alg.ngens() {
        let x = NcPoly::generator(alg, i);
        let zx = z * &x;
        let xz = &x * z;
        let mut top = m.exponents().to_vec();
        top[i] += 1;
        let top = Monomial::from_exponents(top);
        let lead = xz.coefficient(&top);
        let lz = zx.coefficient(&top);
        let Ok(inv) = lead.inv_monomial() else { return Ok(None) };
        let s = &lz * &inv;
        if zx != xz.scale(&s) {
            return Ok(None);
        }
        out.push(s);
    }
    Ok(Some(out))
}

/// Decides `x_g ∈ I` for a table ideal `I`, with a checked certificate.
pub fn contains_generator(
    desc: &IdealDescriptor,
    g: usize,
    alg: &Arc<Presentation>,
) -> Result<Membership, QuotientError> {
    if !(1..=3).contains(&g) {
        return Err(QuotientError::UnsupportedGenerator(g));
    }
    let gens = desc.generators(alg)?;
    let xg = NcPoly::generator(alg, g - 1);
    if gens.contains(&xg) {
        return Ok(Membership::Listed);
    }
    let one = alg.scalar_one();
    let mut candidates = vec![character(alg, g, &one)?];
    if let IdealDescriptor::Axis { index, value } = desc {
        if *index == g {
            candidates.insert(0, character(alg, g, value)?);
        }
    }
    for h in candidates {
        if kills(&h, &gens)? && !h.apply(&xg)?.is_zero() {
            return Ok(Membership::Character(h));
        }
    }
    if let [z] = gens.as_slice() {
        let deg_z = z.terms().map(|(m, _)| m.degree()).max().unwrap_or(0);
        if deg_z > 1 {
            if let Some(s) = normal_scalars(z)? {
                return Ok(Membership::DegreeBound { normal_scalars: s });
            }
        }
    }
    unreachable!("every table ideal is decided above")
}

#[derive(Clone, Debug)]
pub struct PreimageReport {
    pub generator: usize,
    /// Supports of the table rows whose ideal contains `x_g`.
    pub members: Vec<[bool; 3]>,
    /// The member set is closed under specializing coordinates to zero.
    pub closed: bool,
    /// Monomial equations `Π_{i∈A} λ_i = 0` whose common zero set is the
    /// preimage, as one-based index sets.
    pub equations: Vec<Vec<usize>>,
}

impl PreimageReport {
    pub fn equations_display(&self) -> Vec<String> {
        self.equations
            .iter()
            .map(|a| a.iter().map(|i| format!("l{i}")).collect::<Vec<_>>().join("*") + " = 0")
            .collect()
    }
}

/// `{λ : x_g ∈ point_to_prim(λ)}` by case analysis over the table rows.
pub fn preimage_closed_check(g: usize, space: &Arc<ParamSpace>) -> Result<PreimageReport, QuotientError> {
    if !(1..=3).contains(&g) {
        return Err(QuotientError::UnsupportedGenerator(g));
    }
    let alg = quotient_algebra(space)?;
    let mut members = Vec::new();
    for row in TABLE_ROWS {
        let desc = point_to_prim(&QuotientPoint::generic(space, row));
        if contains_generator(&desc, g, &alg)?.contains() {
            members.push(row);
        }
    }
    let holds = |s: &[bool; 3]| members.contains(s);
    // a union of torus orbits is closed iff zeroing further coordinates stays inside
    let closed = TABLE_ROWS.iter().filter(|r| holds(r)).all(|r| {
        (0..3).all(|i| {
            let mut z = *r;
            z[i] = false;
            holds(&z)
        })
    });
    let mut equations: Vec<Vec<usize>> = Vec::new();
    if closed {
        // for each minimal non-member support Z, the monomial on Z
        let outside: Vec<[bool; 3]> = TABLE_ROWS.iter().copied().filter(|r| !holds(r)).collect();
        for z in &outside {
            let minimal = !outside.iter().any(|w| w != z && (0..3).all(|i| w[i] <= z[i]));
            if minimal {
                equations.push((0..3).filter(|&i| z[i]).map(|i| i + 1).collect());
            }
        }
        equations.sort();
        let vanishes = |s: &[bool; 3]| equations.iter().all(|a| a.iter().any(|&i| !s[i - 1]));
        debug_assert!(TABLE_ROWS.iter().all(|r| vanishes(r) == holds(r)));
    }
    Ok(PreimageReport { generator: g, members, closed, equations })
}
