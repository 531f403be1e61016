//! Generic linear codes over GF(q): exact weight distributions, duals, the
//! MacWilliams transform, power moments, sphere-packing and Griesmer bounds,
//! and dependent-column search for dual distances.

pub mod bounds;
mod code;
mod enumerate;
mod lowweight;
mod matrix;
mod weight;

pub use bounds::{griesmer_ok, optimality, sphere_packing_even_ok, sphere_packing_ok, BoundCheck, Optimality};
pub use code::{permutation_equivalent_under, LinearCode};
pub use lowweight::low_weight_search;
pub use matrix::Matrix;
pub use weight::{pless_check, PlessReport, WeightEnumerator};

/// MacWilliams transform of `we` for a code of dimension `k` over GF(q).
pub fn macwilliams(we: &WeightEnumerator, k: usize, q: u64) -> crate::Result<WeightEnumerator> {
    we.macwilliams(k, q)
}
