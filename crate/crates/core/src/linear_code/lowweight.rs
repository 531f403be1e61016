//! Minimum distance of a code from a short parity-check matrix, by searching
//! for small sets of linearly dependent columns.

use std::collections::HashMap;

use rayon::prelude::*;

use super::matrix::Matrix;
use crate::gf::{FElem, FieldCtx};

struct Columns<'a> {
    field: &'a FieldCtx,
    /// `scaled[c][a]` is column `c` times the nonzero element with index `a + 1`.
    scaled: Vec<Vec<Vec<FElem>>>,
    /// Normalized column (leading entry one) → ascending column indices.
    index: HashMap<Vec<FElem>, Vec<usize>>,
}

impl Columns<'_> {
    fn normalize(&self, v: &[FElem]) -> Option<Vec<FElem>> {
        let lead = *v.iter().find(|x| !x.is_zero())?;
        let inv = self.field.inv(lead).ok()?;
        Some(v.iter().map(|&x| self.field.mul(x, inv)).collect())
    }

    /// Whether `sum`, a combination of columns up to `last`, is cancelled
    /// by a nonzero combination of exactly `remaining` columns after `last`.
    fn extend(&self, sum: &[FElem], last: usize, remaining: usize) -> bool {
        let f = self.field;
        if remaining == 1 {
            let target: Vec<FElem> = sum.iter().map(|&x| f.neg(x)).collect();
            let Some(key) = self.normalize(&target) else {
                return false;
            };
            return self.index.get(&key).is_some_and(|ix| ix.last().is_some_and(|&i| i > last));
        }
        let n = self.scaled.len();
        for c in last + 1..n {
            for multiple in &self.scaled[c] {
                let next: Vec<FElem> = sum.iter().zip(multiple).map(|(&a, &b)| f.add(a, b)).collect();
                if self.extend(&next, c, remaining - 1) {
                    return true;
                }
            }
        }
        false
    }
}

/// Least `w ≤ w_max` such that some `w` columns of the parity-check matrix
/// `h` are linearly dependent, i.e. the minimum distance of the code
/// `{x : h x^T = 0}` when it is at most `w_max`.
pub fn low_weight_search(h: &Matrix, w_max: usize) -> Option<usize> {
    let f = h.field().as_ref();
    let n = h.cols();
    let raw: Vec<Vec<FElem>> = (0..n).map(|c| h.column(c)).collect();
    if w_max >= 1 && raw.iter().any(|c| c.iter().all(|x| x.is_zero())) {
        return Some(1);
    }
    let nonzero: Vec<FElem> = f.elements().skip(1).collect();
    let scaled = raw
        .iter()
        .map(|c| nonzero.iter().map(|&a| c.iter().map(|&x| f.mul(x, a)).collect()).collect())
        .collect();
    let mut cols = Columns { field: f, scaled, index: HashMap::new() };
    for (i, c) in raw.iter().enumerate() {
        let key = cols.normalize(c).expect("nonzero column");
        cols.index.entry(key).or_default().push(i);
    }
    if w_max >= 2 && cols.index.values().any(|ix| ix.len() > 1) {
        return Some(2);
    }
    (3..=w_max.min(n)).find(|&w| {
        (0..n).into_par_iter().any(|first| cols.extend(&raw[first], first, w - 1))
    })
}
