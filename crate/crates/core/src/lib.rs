//! Symbolic calculus for vertex superalgebras presented by OPE tables over
//! exact rational-function coefficients.
//!
//! The crate is organized around a small number of engines:
//!
//! - [`scalar`]: multivariate rational functions over big rationals;
//! - [`expr`] / [`engine`]: canonical normal-ordered expressions and n-th
//!   products computed by structural rewriting from an OPE table;
//! - [`lattice`]: rank-one lattice vertex superalgebras with closed-form
//!   vertex operators, kept outside the generic rewrite engine;
//! - [`presentation`] / [`presets`]: algebra presentations, their text
//!   format, and the built-in catalog;
//! - [`hwmod`]: highest-weight modules over a presentation, PBW straightening
//!   and singular-vector detection;
//! - [`zhu`] / [`flow`]: Zhu-algebra reduction and spectral-flow mode maps;
//! - [`ks`] / [`curves`]: the Kazama-Suzuki embedding verifier, commutant
//!   checks, truncation-curve intersection and the module classification
//!   dictionary;
//! - [`suites`] / [`report`]: named verification suites with deterministic
//!   reports.

pub mod error;
pub mod scalar;

pub mod expr;
pub mod presentation;
pub mod engine;
pub mod ideal;
pub mod linalg;

pub mod lattice;
pub mod presets;
pub mod hwmod;
pub mod zhu;
pub mod flow;
pub mod tensor;
pub mod ks;
pub mod curves;

pub mod report;
pub mod suites;

pub use error::Error;
pub use expr::{Factor, Monomial, NormalOrderedExpr, Parity};
pub use presentation::{AlgebraPresentation, GeneratorSymbol};
pub use scalar::{Q, Scalar};
