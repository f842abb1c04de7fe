//! Exact triangular decomposition of algebraic and ordinary differential
//! polynomial systems.
//!
//! The engine decomposes a system of polynomial equations into regular
//! (resp. saturated) triangular sets whose saturation ideals cover the
//! original zero set:
//!
//! ```text
//! zero(h_1, ..., h_k) = ∪_q zero(sat(A_q))
//! ```
//!
//! Elimination of one main variable at a time is done through a Macaulay
//! matrix of the homogenized system; a case-split Gaussian elimination over
//! the coefficient parameters produces, per parameter-space case, a
//! determinant whose linear factors encode the common roots.
//!
//! Module map:
//! * [`poly_core`] — sparse multivariate polynomials over Q, pseudo-division,
//!   gcd, resultants, parsing and printing.
//! * [`casesplit_linalg`] — Macaulay matrices and the case-splitting
//!   fraction-free elimination.
//! * [`quasi_gcd`] — one-step elimination of a main variable into
//!   (Ψ, equations / inequation) components, plain and squarefree.
//! * [`algebraic_decomp`] — full decomposition into regular triangular sets.
//! * [`diff_core`] — differential polynomials: derivations, leaders,
//!   separants, partial remainder (DPM) and the SPLIT subroutine.
//! * [`diff_decomp`] — decomposition into saturated differential chains.
//! * [`verify`] — independent numeric/sampling oracles and membership tests.
//!
//! All polynomial values are immutable after construction and safe to share
//! across threads; every public entry point is deterministic for a fixed
//! seed and configuration.

pub mod poly_core;
pub mod casesplit_linalg;
pub mod quasi_gcd;
pub mod algebraic_decomp;
pub mod diff_core;
pub mod diff_decomp;
pub mod verify;
pub mod config;

pub use config::{Budget, DecomposeConfig};
pub use poly_core::{Poly, Var, VarOrder};
