//! Exhaustive weight enumeration.
//!
//! A code over GF(q), q = p^s, with k generator rows is a GF(p)-space with
//! the K = ks basis vectors `ω^t · g_i`, ω the class of x in GF(q). Messages
//! are visited in p-ary modular Gray order, so consecutive codewords differ by
//! exactly one basis vector. Symbols are held as s digit planes: bit planes
//! packed in u64 words for p = 2, one small integer per digit otherwise. The
//! message space is split on its leading digits into chunks that run on the
//! rayon pool with private counters.

use num_bigint::BigUint;
use rayon::prelude::*;

use super::matrix::Matrix;
use super::weight::WeightEnumerator;
use crate::gf::FElem;
use crate::{Error, Result};

const MIN_CHUNKS: u64 = 64;

/// Exact weight distribution of the row space of `gen` (rows independent).
pub fn weight_distribution(gen: &Matrix, budget: u64) -> Result<WeightEnumerator> {
    let f = gen.field();
    let (k, n) = (gen.rows(), gen.cols());
    if k == 0 {
        return Ok(WeightEnumerator::zero_code(n));
    }
    let size = num_traits::pow(BigUint::from(f.order()), k);
    if size > BigUint::from(budget) {
        return Err(Error::budget(size, budget));
    }
    let p = f.characteristic();
    let s = f.degree();
    let mut basis = Vec::with_capacity(k * s);
    let mut omega = FElem::ONE;
    for t in 0..s {
        if t > 0 {
            omega = FElem(omega.0 * p);
        }
        for i in 0..k {
            basis.push(gen.row(i).iter().map(|&x| f.mul(x, omega)).collect::<Vec<_>>());
        }
    }
    let counts = if p == 2 {
        binary(&basis, s, n)
    } else if p < 128 {
        odd::<u8>(&basis, p, s, n)
    } else {
        odd::<u16>(&basis, p, s, n)
    };
    Ok(WeightEnumerator::new(
        n,
        counts.into_iter().enumerate().map(|(w, c)| (w, BigUint::from(c))),
    ))
}

/// Splits K digits into (low, high) so that p^high reaches MIN_CHUNKS.
fn split(p: u64, kk: usize) -> (usize, usize) {
    let mut high = 0;
    let mut chunks = 1u64;
    while high < kk && chunks < MIN_CHUNKS {
        high += 1;
        chunks *= p;
    }
    (kk - high, high)
}

fn merge(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

fn binary(basis: &[Vec<FElem>], s: usize, n: usize) -> Vec<u64> {
    let words = n.div_ceil(64);
    let width = s * words;
    let planes: Vec<Vec<u64>> = basis
        .iter()
        .map(|v| {
            let mut out = vec![0u64; width];
            for (i, x) in v.iter().enumerate() {
                for b in 0..s {
                    if (x.0 >> b) & 1 == 1 {
                        out[b * words + i / 64] |= 1 << (i % 64);
                    }
                }
            }
            out
        })
        .collect();
    let (low, high) = split(2, planes.len());
    let weight = |cw: &[u64]| -> usize {
        (0..words)
            .map(|w| {
                let mut o = 0u64;
                for b in 0..s {
                    o |= cw[b * words + w];
                }
                o.count_ones() as usize
            })
            .sum()
    };
    (0..1u64 << high)
        .into_par_iter()
        .map(|chunk| {
            let mut cw = vec![0u64; width];
            for h in 0..high {
                if (chunk >> h) & 1 == 1 {
                    for (c, &x) in cw.iter_mut().zip(&planes[low + h]) {
                        *c ^= x;
                    }
                }
            }
            let mut counts = vec![0u64; n + 1];
            counts[weight(&cw)] += 1;
            for t in 1..1u64 << low {
                let j = t.trailing_zeros() as usize;
                for (c, &x) in cw.iter_mut().zip(&planes[j]) {
                    *c ^= x;
                }
                counts[weight(&cw)] += 1;
            }
            counts
        })
        .reduce(|| vec![0u64; n + 1], merge)
}

trait Digit: Copy + Default + Eq + Send + Sync {
    fn from_u64(x: u64) -> Self;
    fn add_mod(self, other: Self, p: Self) -> Self;
}

impl Digit for u8 {
    fn from_u64(x: u64) -> Self {
        x as u8
    }

    #[inline(always)]
    fn add_mod(self, other: Self, p: Self) -> Self {
        let y = self + other;
        if y >= p {
            y - p
        } else {
            y
        }
    }
}

impl Digit for u16 {
    fn from_u64(x: u64) -> Self {
        x as u16
    }

    #[inline(always)]
    fn add_mod(self, other: Self, p: Self) -> Self {
        let y = self as u32 + other as u32;
        (if y >= p as u32 { y - p as u32 } else { y }) as u16
    }
}

fn odd<T: Digit>(basis: &[Vec<FElem>], p: u64, s: usize, n: usize) -> Vec<u64> {
    let pd = T::from_u64(p);
    let zero = T::default();
    let digits: Vec<Vec<T>> = basis
        .iter()
        .map(|v| {
            let mut out = vec![zero; s * n];
            for (i, x) in v.iter().enumerate() {
                let mut a = x.0;
                for b in 0..s {
                    out[b * n + i] = T::from_u64(a % p);
                    a /= p;
                }
            }
            out
        })
        .collect();
    let (low, high) = split(p, digits.len());
    let chunks = p.pow(high as u32);
    let weight = |cw: &[T]| -> usize {
        if s == 1 {
            return cw.iter().filter(|&&x| x != zero).count();
        }
        (0..n).filter(|&i| (0..s).any(|b| cw[b * n + i] != zero)).count()
    };
    (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut cw = vec![zero; s * n];
            let mut c = chunk;
            for h in 0..high {
                for _ in 0..c % p {
                    for (x, &y) in cw.iter_mut().zip(&digits[low + h]) {
                        *x = x.add_mod(y, pd);
                    }
                }
                c /= p;
            }
            let mut counts = vec![0u64; n + 1];
            counts[weight(&cw)] += 1;
            let mut counter = vec![0u64; low + 1];
            loop {
                let mut j = 0;
                while j < low && counter[j] == p - 1 {
                    counter[j] = 0;
                    j += 1;
                }
                if j == low {
                    break;
                }
                counter[j] += 1;
                for (x, &y) in cw.iter_mut().zip(&digits[j]) {
                    *x = x.add_mod(y, pd);
                }
                counts[weight(&cw)] += 1;
            }
            counts
        })
        .reduce(|| vec![0u64; n + 1], merge)
}
