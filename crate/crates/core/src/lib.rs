//! Irreducible constacyclic codes over finite fields.
//!
//! The crate builds the trace-form irreducible λ-constacyclic code of length
//! `n` over GF(q), its dual and three associated codes, computes exact weight
//! distributions, and checks closed-form predictions for several families
//! (one-weight, few-weight and quadratic-residue derived codes) against
//! exhaustive measurement.
//!
//! Module map:
//!
//! * [`gf`]: GF(p^s) arithmetic, traces and subfield embeddings.
//! * [`cosets`]: cyclotomic cosets and the integer parameters ℓ, κ, e, L.
//! * [`polyring`]: polynomials over GF(q), minimal polynomials and the
//!   factorization of `x^n - λ`.
//! * [`linear_code`]: generic linear codes, weight enumeration, MacWilliams,
//!   power moments, bounds and low-weight dependency search.
//! * [`constacyclic`]: the code family itself and its structural verifiers.
//! * [`families`]: closed-form predictors and the prediction-vs-measurement
//!   harness.

pub mod constacyclic;
pub mod cosets;
mod error;
pub mod families;
pub mod gf;
pub mod linear_code;
pub mod nt;
pub mod polyring;

pub use error::{Error, Result};

/// Default enumeration budget: the largest number of messages a single
/// exhaustive enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 1 << 28;
