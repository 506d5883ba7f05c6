//! Exact symbolic computation in quantized coordinate rings.
//!
//! Scalars are Laurent polynomials in formal parameters with rational
//! coefficients ([`scalar`]). Algebras are given by ordered generators and
//! quadratic straightening rules ([`pbw`]); elements are kept in PBW normal
//! form. On top of that sit quantum matrices ([`qmatrix`]), torus gradings
//! ([`grading`]), centers of quantum tori and their strata ([`strata`]),
//! generator patterns of torus-invariant primes in quantum matrices
//! ([`patterns`]) and cocycle twists ([`twist`]).

pub mod config;
pub mod expr;
pub mod grading;
pub mod lattice;
pub mod patterns;
pub mod pbw;
pub mod qmatrix;
pub mod scalar;
pub mod strata;
pub mod twist;
