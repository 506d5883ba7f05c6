//! Presentation-driven PBW rewriting.
//!
//! An algebra is given by ordered generators and, for every pair `u > v`, a
//! straightening rule `u·v = s·v·u + (lower terms)`. Elements are kept as
//! sums of sorted monomials; products are straightened by local rewriting.

mod construct;
mod hom;
mod json;
mod poly;
mod presentation;
mod presets;

use thiserror::Error;

pub use construct::{quotient_by_generators, tensor, tensor_square, GeneratorQuotient, TensorProduct};
pub use hom::AlgebraHom;
pub use json::{AliasJson, CorrectionJson, PresentationJson, RuleJson};
pub use poly::NcPoly;
pub use presentation::{Monomial, Presentation, Rule, FULL_OVERLAP_CHECK_MAX_GENS};
pub use presets::{
    matrix_generator_index, matrix_generator_name, multiparam_name, multiparam_space, preset_algebra, quantum_affine,
    quantum_affine_multiparam, quantum_matrices, quantum_plane, PresetKind, QMatrix, QParam,
};

use crate::scalar::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PbwError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("invalid generator name `{0}`")]
    InvalidGenerator(String),
    #[error("generator `{0}` declared twice")]
    DuplicateGenerator(String),
    #[error("rule pair {0} is not an out-of-order generator pair")]
    InvalidRulePair(String),
    #[error("no straightening rule for {0}*{1}")]
    MissingRule(String, String),
    #[error("leading scalar of the rule for {0}*{1} is not a unit")]
    NonUnitSwap(String, String),
    #[error("a correction in the rule for {0}*{1} is not below the swapped monomial")]
    CorrectionNotSmaller(String, String),
    #[error("mismatched vector length or parameter count")]
    ShapeMismatch,
    #[error("presentation fails associativity on the overlap {0}*{1}*{2}")]
    OverlapFailure(String, String, String),
    #[error("operands belong to different presentations")]
    PresentationMismatch,
    #[error("presentations use different parameter spaces")]
    ParamSpaceMismatch,
    #[error("quotient is not closed: relation `{0}` leaves a correction outside the killed set")]
    ClosureViolation(String),
    #[error("q-matrix is not multiplicatively antisymmetric at ({0}, {1})")]
    NonAntisymmetric(usize, usize),
    #[error("expected {expected} generator images, got {got}")]
    ImageCount { expected: usize, got: usize },
    #[error("map breaks the relation `{0}`")]
    NotAHomomorphism(String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("presentation JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[cfg(test)]
mod tests;
