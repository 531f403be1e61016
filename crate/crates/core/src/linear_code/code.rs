use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;

use super::enumerate;
use super::lowweight::low_weight_search;
use super::matrix::Matrix;
use super::weight::WeightEnumerator;
use crate::gf::{FElem, FieldCtx};
use crate::{Error, Result};

/// A linear code, stored by the reduced row echelon form of a generator
/// matrix so that equal codes have equal representations.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    gen: Matrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] code over GF({})", self.length(), self.dimension(), self.q())
    }
}

impl LinearCode {
    /// Row space of `gen`; dependent rows are dropped.
    pub fn from_generator(mut gen: Matrix) -> Self {
        let pivots = gen.rref();
        LinearCode { gen, pivots }
    }

    pub fn from_rows(field: Arc<FieldCtx>, n: usize, rows: &[Vec<FElem>]) -> Self {
        Self::from_generator(Matrix::from_rows(field, n, rows))
    }

    pub fn zero(field: Arc<FieldCtx>, n: usize) -> Self {
        Self::from_generator(Matrix::zeros(field, 0, n))
    }

    pub fn full(field: Arc<FieldCtx>, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, FElem::ONE);
        }
        Self::from_generator(m)
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        self.gen.field()
    }

    pub fn q(&self) -> u64 {
        self.field().order()
    }

    pub fn length(&self) -> usize {
        self.gen.cols()
    }

    pub fn dimension(&self) -> usize {
        self.gen.rows()
    }

    /// Generator matrix in reduced row echelon form.
    pub fn generator(&self) -> &Matrix {
        &self.gen
    }

    /// Number of codewords, q^k.
    pub fn size(&self) -> BigUint {
        num_traits::pow(BigUint::from(self.q()), self.dimension())
    }

    pub fn contains(&self, v: &[FElem]) -> bool {
        v.len() == self.length() && self.gen.rref_contains(&self.pivots, v)
    }

    pub fn dual(&self) -> LinearCode {
        Self::from_generator(self.gen.nullspace())
    }

    /// Coordinate `i` of every codeword moved to position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<LinearCode> {
        let n = self.length();
        let mut source = vec![usize::MAX; n];
        if perm.len() != n {
            return Err(Error::InconsistentInput(format!("permutation of length {} for n = {n}", perm.len())));
        }
        for (i, &j) in perm.iter().enumerate() {
            if j >= n || source[j] != usize::MAX {
                return Err(Error::InconsistentInput("not a permutation".into()));
            }
            source[j] = i;
        }
        Ok(Self::from_generator(self.gen.select_columns(&source)))
    }

    /// Coordinate `i` of every codeword multiplied by `scale[i]`.
    pub fn scaled(&self, scale: &[FElem]) -> LinearCode {
        let f = self.field().clone();
        let rows: Vec<Vec<FElem>> = (0..self.dimension())
            .map(|r| self.gen.row(r).iter().zip(scale).map(|(&x, &s)| f.mul(x, s)).collect())
            .collect();
        Self::from_rows(f, self.length(), &rows)
    }

    /// Whether two codes are the same subspace.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self == other
    }

    /// Codeword set equality by explicit enumeration; an independent check
    /// of [`LinearCode::same_code`] for small codes.
    pub fn same_code_by_enumeration(&self, other: &LinearCode, budget: u64) -> Result<bool> {
        if self.length() != other.length() {
            return Ok(false);
        }
        Ok(self.codeword_set(budget)? == other.codeword_set(budget)?)
    }

    /// All codewords as index vectors.
    pub fn codeword_set(&self, budget: u64) -> Result<BTreeSet<Vec<u64>>> {
        let size = self.size();
        if size > BigUint::from(budget) {
            return Err(Error::budget(size, budget));
        }
        let f = self.field();
        let k = self.dimension();
        let mut coeffs = vec![FElem::ZERO; k];
        let mut out = BTreeSet::new();
        loop {
            out.insert(self.gen.combine(&coeffs).iter().map(|x| x.0).collect());
            let mut i = 0;
            while i < k && coeffs[i].0 == f.order() - 1 {
                coeffs[i] = FElem::ZERO;
                i += 1;
            }
            if i == k {
                break;
            }
            coeffs[i] = FElem(coeffs[i].0 + 1);
        }
        Ok(out)
    }

    pub fn weight_distribution(&self, budget: u64) -> Result<WeightEnumerator> {
        enumerate::weight_distribution(&self.gen, budget)
    }

    /// Minimum distance; `None` for the zero code.
    pub fn min_distance(&self, budget: u64) -> Result<Option<usize>> {
        if self.dimension() == 0 {
            return Ok(None);
        }
        Ok(self.weight_distribution(budget)?.min_distance())
    }

    /// The common weight when every nonzero codeword has the same weight.
    pub fn is_constant_weight(&self, budget: u64) -> Result<Option<usize>> {
        let w = self.weight_distribution(budget)?.nonzero_weights();
        Ok(if w.len() == 1 { Some(w[0]) } else { None })
    }

    /// Minimum distance of the dual if it is at most `w_max`, found from
    /// dependent columns of this code's generator.
    pub fn dual_distance_search(&self, w_max: usize) -> Option<usize> {
        low_weight_search(&self.gen, w_max)
    }

    /// Whether the code is closed under
    /// `(c_0, …, c_{n−1}) ↦ (λ c_{n−1}, c_0, …, c_{n−2})`.
    pub fn is_constashift_closed(&self, lambda: FElem) -> bool {
        let f = self.field();
        let n = self.length();
        (0..self.dimension()).all(|r| {
            let row = self.gen.row(r);
            let mut shifted = Vec::with_capacity(n);
            shifted.push(f.mul(lambda, row[n - 1]));
            shifted.extend_from_slice(&row[..n - 1]);
            self.contains(&shifted)
        })
    }
}

/// Whether `b` is the image of `a` under the coordinate permutation `perm`
/// (coordinate `i` moved to `perm[i]`).
pub fn permutation_equivalent_under(a: &LinearCode, b: &LinearCode, perm: &[usize]) -> Result<bool> {
    if a.length() != b.length() || a.dimension() != b.dimension() {
        return Ok(false);
    }
    Ok(a.permuted(perm)?.same_code(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(q_p: u64, s: usize, rows: &[&[u64]]) -> LinearCode {
        let f = FieldCtx::default_field(q_p, s).unwrap();
        let n = rows[0].len();
        let r: Vec<Vec<FElem>> = rows.iter().map(|r| r.iter().map(|&x| FElem(x)).collect()).collect();
        LinearCode::from_rows(f, n, &r)
    }

    #[test]
    fn repetition_code() {
        let c = code(3, 1, &[&[1, 1, 1, 1]]);
        assert_eq!(c.min_distance(1 << 20).unwrap(), Some(4));
        assert_eq!(c.is_constant_weight(1 << 20).unwrap(), Some(4));
        let d = c.dual();
        assert_eq!(d.dimension(), 3);
        assert_eq!(d.dual(), c);
    }

    #[test]
    fn zero_and_full() {
        let f = FieldCtx::default_field(2, 2).unwrap();
        let z = LinearCode::zero(f.clone(), 4);
        assert_eq!(z.weight_distribution(1).unwrap(), WeightEnumerator::zero_code(4));
        assert_eq!(z.min_distance(1).unwrap(), None);
        assert_eq!(LinearCode::full(f, 4).dual(), z);
    }

    #[test]
    fn permutation_checks() {
        let c = code(2, 1, &[&[1, 1, 0, 0], &[0, 0, 1, 0]]);
        assert!(permutation_equivalent_under(&c, &c, &[0, 1, 2, 3]).unwrap());
        assert!(permutation_equivalent_under(&c, &c, &[1, 0, 2, 3]).unwrap());
        // (1,1,0,0) moves to (1,0,1,0), not a codeword
        assert!(!permutation_equivalent_under(&c, &c, &[0, 2, 1, 3]).unwrap());
        assert!(c.permuted(&[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn enumeration_agrees_with_rref_equality() {
        let a = code(3, 1, &[&[1, 2, 0, 1], &[0, 1, 1, 1]]);
        let b = code(3, 1, &[&[1, 1, 2, 0], &[0, 2, 2, 2]]);
        assert!(a.same_code(&b));
        assert!(a.same_code_by_enumeration(&b, 1000).unwrap());
        let c = code(3, 1, &[&[1, 0, 2, 2], &[0, 1, 2, 2]]);
        assert!(!a.same_code(&c));
        assert!(!a.same_code_by_enumeration(&c, 1000).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let c = code(3, 1, &[&[1, 2, 0, 1], &[0, 1, 1, 1]]);
        assert!(matches!(c.weight_distribution(8), Err(Error::BudgetExceeded { .. })));
        assert!(c.weight_distribution(9).is_ok());
    }
}
