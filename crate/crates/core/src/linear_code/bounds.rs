//! Sphere-packing and Griesmer bounds in exact integer arithmetic, and
//! optimality certificates derived from them.

use num_bigint::BigUint;
use num_integer::Integer;

use crate::nt::binomial;
use crate::{Error, Result};

fn ball(n: u64, radius: u64, q: u64) -> BigUint {
    (0..=radius.min(n))
        .map(|i| binomial(n, i) * num_traits::pow(BigUint::from(q - 1), i as usize))
        .sum()
}

fn qpow(q: u64, e: u64) -> BigUint {
    num_traits::pow(BigUint::from(q), e as usize)
}

/// Sphere-packing bound for an [n, k, d] code:
/// Σ_{i ≤ ⌊(d−1)/2⌋} C(n,i)(q−1)^i ≤ q^{n−k}.
pub fn sphere_packing_ok(n: u64, k: u64, d: u64, q: u64) -> bool {
    sphere_packing_terms(n, k, d, q).0
}

fn sphere_packing_terms(n: u64, k: u64, d: u64, q: u64) -> (bool, BigUint, BigUint) {
    let lhs = ball(n, d.saturating_sub(1) / 2, q);
    let rhs = qpow(q, n.saturating_sub(k));
    (lhs <= rhs, lhs, rhs)
}

/// Sphere-packing bound for even minimum distance:
/// Σ_{i ≤ (d−2)/2} C(n−1,i)(q−1)^i ≤ q^{n−1−k}.
pub fn sphere_packing_even_ok(n: u64, k: u64, d: u64, q: u64) -> Result<bool> {
    Ok(sphere_packing_even_terms(n, k, d, q)?.0)
}

fn sphere_packing_even_terms(n: u64, k: u64, d: u64, q: u64) -> Result<(bool, BigUint, BigUint)> {
    if d.is_odd() || d == 0 {
        return Err(Error::OddDistance(d));
    }
    let lhs = ball(n - 1, (d - 2) / 2, q);
    if n < k + 1 {
        return Ok((false, lhs, BigUint::from(0u32)));
    }
    let rhs = qpow(q, n - 1 - k);
    Ok((lhs <= rhs, lhs, rhs))
}

/// Griesmer bound: n ≥ Σ_{i<k} ⌈d/q^i⌉.
pub fn griesmer_ok(n: u64, k: u64, d: u64, q: u64) -> bool {
    griesmer_sum(k, d, q) <= BigUint::from(n)
}

pub fn griesmer_sum(k: u64, d: u64, q: u64) -> BigUint {
    let d = BigUint::from(d);
    (0..k).map(|i| Integer::div_ceil(&d, &qpow(q, i))).sum()
}

/// A bound evaluated at specific parameters, with the inequality it
/// produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub bound: &'static str,
    pub params: (u64, u64, u64),
    /// Whether an [n, k, d] code with these parameters passes the bound.
    pub satisfied: bool,
    pub inequality: String,
}

/// Evaluates the strongest applicable sphere-packing bound at [n, k, d]:
/// the even-distance form when `d` is even, otherwise the plain form.
pub fn check_existence(n: u64, k: u64, d: u64, q: u64) -> BoundCheck {
    if d % 2 == 0 && d > 0 {
        let (ok, lhs, rhs) = sphere_packing_even_terms(n, k, d, q).expect("even distance");
        if !ok {
            return BoundCheck {
                bound: "even-distance sphere-packing bound",
                params: (n, k, d),
                satisfied: false,
                inequality: format!("{lhs} > {rhs}"),
            };
        }
    }
    let (ok, lhs, rhs) = sphere_packing_terms(n, k, d, q);
    BoundCheck {
        bound: "sphere-packing bound",
        params: (n, k, d),
        satisfied: ok,
        inequality: format!("{lhs} {} {rhs}", if ok { "<=" } else { ">" }),
    }
}

/// Optimality of an [n, k, d] code as far as the sphere-packing bounds can
/// prove it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Optimality {
    /// Refutation of [n, k, d+1] when it succeeds.
    pub distance: Option<BoundCheck>,
    /// Refutation of [n, k+1, d] when it succeeds.
    pub dimension: Option<BoundCheck>,
    /// Every evaluated bound, refuting or not.
    pub evaluated: Vec<BoundCheck>,
}

impl Optimality {
    pub fn distance_optimal(&self) -> bool {
        self.distance.is_some()
    }

    pub fn dimension_optimal(&self) -> bool {
        self.dimension.is_some()
    }
}

pub fn optimality(n: u64, k: u64, d: u64, q: u64) -> Optimality {
    let mut evaluated = Vec::new();
    let mut distance = None;
    if d < n {
        let c = check_existence(n, k, d + 1, q);
        evaluated.push(c.clone());
        if !c.satisfied {
            distance = Some(c);
        }
        if d + 2 <= n {
            evaluated.push(check_existence(n, k, d + 2, q));
        }
    }
    let mut dimension = None;
    if k < n {
        let c = check_existence(n, k + 1, d, q);
        evaluated.push(c.clone());
        if !c.satisfied {
            dimension = Some(c);
        }
    }
    Optimality { distance, dimension, evaluated }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_packing_examples() {
        assert!(sphere_packing_ok(7, 7, 1, 2));
        assert!(!sphere_packing_ok(156, 152, 5, 5));
        assert!(sphere_packing_ok(15, 9, 3, 4));
        // Hamming code is perfect
        assert!(sphere_packing_ok(7, 4, 3, 2));
        assert!(!sphere_packing_ok(7, 5, 3, 2));
    }

    #[test]
    fn even_examples() {
        assert!(sphere_packing_even_ok(9, 8, 2, 3).unwrap());
        assert!(!sphere_packing_even_ok(13, 11, 4, 3).unwrap());
        assert!(!sphere_packing_even_ok(595, 591, 4, 13).unwrap());
        assert_eq!(sphere_packing_even_ok(5, 2, 3, 2), Err(Error::OddDistance(3)));
    }

    #[test]
    fn griesmer_examples() {
        assert_eq!(griesmer_sum(3, 9, 3), BigUint::from(13u32));
        assert!(griesmer_ok(13, 3, 9, 3));
        assert_eq!(griesmer_sum(1, 7, 5), BigUint::from(7u32));
        assert_eq!(griesmer_sum(4, 6, 3), BigUint::from(10u32));
        assert!(!griesmer_ok(9, 4, 6, 3));
    }

    #[test]
    fn hamming_dual_optimal() {
        let o = optimality(156, 152, 3, 5);
        assert!(o.distance_optimal());
        assert!(o.dimension_optimal());
        assert_eq!(o.distance.as_ref().unwrap().bound, "even-distance sphere-packing bound");
        assert_eq!(o.dimension.as_ref().unwrap().bound, "sphere-packing bound");
    }
}
