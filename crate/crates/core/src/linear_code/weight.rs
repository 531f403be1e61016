use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact weight distribution of a length-`n` code; zero counts are omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    n: usize,
    counts: BTreeMap<usize, BigUint>,
}

impl WeightEnumerator {
    pub fn new(n: usize, counts: impl IntoIterator<Item = (usize, BigUint)>) -> Self {
        let mut map = BTreeMap::new();
        for (w, c) in counts {
            assert!(w <= n, "weight {w} exceeds length {n}");
            if !c.is_zero() {
                *map.entry(w).or_insert_with(BigUint::zero) += c;
            }
        }
        WeightEnumerator { n, counts: map }
    }

    /// Convenience constructor from small counts.
    pub fn from_u64(n: usize, counts: &[(usize, u64)]) -> Self {
        Self::new(n, counts.iter().map(|&(w, c)| (w, BigUint::from(c))))
    }

    /// Enumerator of the zero code of length `n`.
    pub fn zero_code(n: usize) -> Self {
        Self::from_u64(n, &[(0, 1)])
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn count(&self, w: usize) -> BigUint {
        self.counts.get(&w).cloned().unwrap_or_default()
    }

    /// `(weight, count)` pairs with nonzero count, ascending weight.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.counts.iter().map(|(&w, c)| (w, c))
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// Least nonzero weight with a nonzero count.
    pub fn min_distance(&self) -> Option<usize> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    pub fn nonzero_weights(&self) -> Vec<usize> {
        self.counts.keys().copied().filter(|&w| w > 0).collect()
    }

    /// `W(z^r)`: every weight multiplied by `r`, length `r·n`.
    pub fn substitute_power(&self, r: usize) -> Self {
        Self::new(self.n * r, self.counts.iter().map(|(&w, c)| (w * r, c.clone())))
    }

    /// Product of enumerators, the enumerator of the outer direct sum.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out: BTreeMap<usize, BigUint> = BTreeMap::new();
        for (&a, ca) in &self.counts {
            for (&b, cb) in &other.counts {
                *out.entry(a + b).or_default() += ca * cb;
            }
        }
        Self::new(self.n + other.n, out)
    }

    /// `W(z)^k`.
    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::zero_code(0);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Dual enumerator by the MacWilliams identity, for a code of dimension
    /// `k` over GF(q).
    pub fn macwilliams(&self, k: usize, q: u64) -> Result<Self> {
        let size = num_traits::pow(BigUint::from(q), k);
        if self.total() != size || self.count(0) != BigUint::one() {
            return Err(Error::InconsistentInput(format!(
                "enumerator sums to {} with A_0 = {}, expected q^k = {size} and A_0 = 1",
                self.total(),
                self.count(0)
            )));
        }
        let n = self.n;
        let qb = BigInt::from(q);
        let q1 = BigInt::from(q - 1);
        let mut acc = vec![BigInt::zero(); n + 1];
        for (&w, a) in &self.counts {
            let a = BigInt::from(a.clone());
            // Krawtchouk K_j(w) for j = 0..=n by the three-term recurrence.
            let wq = &qb * BigInt::from(w);
            let mut prev = BigInt::one();
            acc[0] += &a;
            if n == 0 {
                continue;
            }
            let mut cur = &q1 * BigInt::from(n) - &wq;
            acc[1] += &a * &cur;
            for j in 1..n {
                let nj = BigInt::from(n - j);
                let coef = &nj * &q1 + BigInt::from(j) - &wq;
                let next_num = coef * &cur - &q1 * BigInt::from(n - j + 1) * &prev;
                let (next, rem) = next_num.div_rem(&BigInt::from(j + 1));
                debug_assert!(rem.is_zero());
                acc[j + 1] += &a * &next;
                prev = cur;
                cur = next;
            }
        }
        let size = BigInt::from(size);
        let mut out = Vec::new();
        for (j, v) in acc.into_iter().enumerate() {
            let (quot, rem) = v.div_rem(&size);
            if !rem.is_zero() || quot.is_negative() {
                return Err(Error::InconsistentInput(format!(
                    "MacWilliams transform is not a nonnegative integer at weight {j}"
                )));
            }
            out.push((j, quot.to_biguint().expect("nonnegative")));
        }
        Ok(Self::new(n, out))
    }

    /// `[weight, "count"]` pairs for serialization.
    pub fn to_pairs(&self) -> Vec<(usize, String)> {
        self.counts.iter().map(|(&w, c)| (w, c.to_string())).collect()
    }
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .counts
            .iter()
            .map(|(&w, c)| match w {
                0 => c.to_string(),
                1 => format!("{c}z"),
                _ => format!("{c}z^{w}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Outcome of the first four Pless power moments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlessReport {
    pub holds: [bool; 4],
}

impl PlessReport {
    pub fn all(&self) -> bool {
        self.holds.iter().all(|&b| b)
    }
}

/// Checks the first four power moments of `we` (a code of dimension `k`
/// over GF(q)) against the dual counts `A⊥_1, A⊥_2, A⊥_3`. Each identity is
/// multiplied through by `q^j` so all arithmetic stays integral.
pub fn pless_check(we: &WeightEnumerator, dual_first3: [&BigUint; 3], k: usize, q: u64) -> PlessReport {
    let big = |x: u64| BigInt::from(x);
    let n = big(we.length() as u64);
    let q_ = big(q);
    let q1 = big(q - 1);
    let a1 = BigInt::from_biguint(Sign::Plus, dual_first3[0].clone());
    let a2 = BigInt::from_biguint(Sign::Plus, dual_first3[1].clone());
    let a3 = BigInt::from_biguint(Sign::Plus, dual_first3[2].clone());
    let qk = num_traits::pow(q_.clone(), k);
    let moment = |j: u32| -> BigInt {
        we.iter()
            .map(|(w, c)| num_traits::pow(big(w as u64), j as usize) * BigInt::from(c.clone()))
            .sum()
    };
    let lhs = |j: u32| num_traits::pow(q_.clone(), j as usize) * moment(j);
    let qn = &q1 * &n;
    let rhs = [
        BigInt::one(),
        &qn - &a1,
        &qn * &qn + &qn - (big(2) * &qn - &q_ + big(2)) * &a1 + big(2) * &a2,
        &qn * (&qn * &qn + big(3) * &qn - &q_ + big(2))
            - (big(3) * &qn * &qn - big(3) * (&q_ - big(3)) * &qn + &q_ * &q_ - big(6) * &q_ + big(6)) * &a1
            + big(6) * (&qn - &q_ + big(2)) * &a2
            - big(6) * &a3,
    ];
    let mut holds = [false; 4];
    for (j, r) in rhs.iter().enumerate() {
        holds[j] = lhs(j as u32) == &qk * r;
    }
    PlessReport { holds }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn macwilliams_small_example() {
        let w = WeightEnumerator::from_u64(5, &[(0, 1), (4, 15)]);
        let d = w.macwilliams(2, 4).unwrap();
        assert_eq!(d, WeightEnumerator::from_u64(5, &[(0, 1), (3, 30), (4, 15), (5, 18)]));
        assert_eq!(d.macwilliams(3, 4).unwrap(), w);
    }

    #[test]
    fn macwilliams_rejects_inconsistent() {
        let w = WeightEnumerator::from_u64(5, &[(0, 1), (4, 14)]);
        assert!(matches!(w.macwilliams(2, 4), Err(Error::InconsistentInput(_))));
    }

    #[test]
    fn power_and_substitution() {
        let w = WeightEnumerator::from_u64(5, &[(0, 1), (4, 15)]);
        assert_eq!(
            w.pow(3),
            WeightEnumerator::from_u64(15, &[(0, 1), (4, 45), (8, 675), (12, 3375)])
        );
        assert_eq!(w.substitute_power(3), WeightEnumerator::from_u64(15, &[(0, 1), (12, 15)]));
        assert_eq!(w.pow(0), WeightEnumerator::zero_code(0));
    }

    #[test]
    fn pless_simplex_and_perturbation() {
        // one-weight [13,3,9] over GF(3)
        let w = WeightEnumerator::from_u64(13, &[(0, 1), (9, 26)]);
        let d = w.macwilliams(3, 3).unwrap();
        let f = [&d.count(1), &d.count(2), &d.count(3)];
        assert!(pless_check(&w, f, 3, 3).all());
        let bad = WeightEnumerator::from_u64(13, &[(0, 1), (9, 27)]);
        assert!(!pless_check(&bad, f, 3, 3).all());
        let bumped = d.count(3) + 1u32;
        assert!(!pless_check(&w, [&d.count(1), &d.count(2), &bumped], 3, 3).all());
    }

    #[test]
    fn display() {
        let w = WeightEnumerator::from_u64(5, &[(0, 1), (4, 15)]);
        assert_eq!(w.to_string(), "1 + 15z^4");
        assert_eq!(w.min_distance(), Some(4));
        assert_eq!(WeightEnumerator::zero_code(3).min_distance(), None);
    }
}
