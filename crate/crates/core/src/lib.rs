//! Exact computation of chromatic quasisymmetric functions and unicellular
//! LLT polynomials attached to natural unit interval orders.
//!
//! The crate is organised bottom-up:
//!
//! * [`qpoly`]: exact univariate polynomials in `q` and the usual q-analogs.
//! * [`combinat`]: partitions, compositions, tableaux and the tableau
//!   algorithms (jeu de taquin, switching, RSK, special rim hooks).
//! * [`symfunc`]: symmetric functions of fixed degree in the `m`, `e`, `s`
//!   and `p` bases, fundamental quasisymmetric expansions, plethysm by `q-1`.
//! * [`unigraphs`]: natural unit interval graphs and their encodings.
//! * [`chromaticq`]: brute-force and closed-form chromatic quasisymmetric
//!   functions.
//! * [`lltuni`]: unicellular LLT polynomials and their Schur expansions.
//! * [`relcheck`]: verifiers for the local linear relations.

pub mod chromaticq;
pub mod combinat;
pub mod error;
pub mod lltuni;
pub mod qpoly;
pub mod relcheck;
pub mod symfunc;
pub mod unigraphs;

pub use error::{Error, Result};
pub use qpoly::{Poly, QPoly, QPolyRat};
