//! Dense polynomials over a finite field, minimal polynomials and the
//! factorization of `x^n − λ` into irreducibles indexed by cyclotomic cosets.

use std::fmt;
use std::sync::Arc;

use crate::cosets;
use crate::gf::{Extension, FElem, FieldCtx};
use crate::{Error, Result};

/// A polynomial with ascending coefficients; no trailing zeros.
#[derive(Clone)]
pub struct Poly {
    field: Arc<FieldCtx>,
    coeffs: Vec<FElem>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.0.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.field.same_field(&other.field) && self.coeffs == other.coeffs
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn new(field: Arc<FieldCtx>, mut coeffs: Vec<FElem>) -> Self {
        while coeffs.last() == Some(&FElem::ZERO) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: Arc<FieldCtx>) -> Self {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: Arc<FieldCtx>) -> Self {
        Self::constant(field, FElem::ONE)
    }

    pub fn constant(field: Arc<FieldCtx>, c: FElem) -> Self {
        Self::new(field, vec![c])
    }

    /// `c·x^k`.
    pub fn monomial(field: Arc<FieldCtx>, k: usize, c: FElem) -> Self {
        let mut v = vec![FElem::ZERO; k + 1];
        v[k] = c;
        Self::new(field, v)
    }

    /// `x^n − λ`.
    pub fn x_n_minus(field: Arc<FieldCtx>, n: usize, lambda: FElem) -> Self {
        let mut v = vec![FElem::ZERO; n + 1];
        v[n] = FElem::ONE;
        v[0] = field.add(v[0], field.neg(lambda));
        Self::new(field, v)
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn coeffs(&self) -> &[FElem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FElem {
        self.coeffs.get(i).copied().unwrap_or(FElem::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> FElem {
        self.coeffs.last().copied().unwrap_or(FElem::ZERO)
    }

    fn check_field(&self, other: &Poly) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field.same_field(&other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let v = (0..len).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Ok(Poly::new(f.clone(), v))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let v = (0..len).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Ok(Poly::new(f.clone(), v))
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(f.clone()));
        }
        let mut v = vec![FElem::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                v[i + j] = f.add(v[i + j], f.mul(a, b));
            }
        }
        Ok(Poly::new(f.clone(), v))
    }

    pub fn scale(&self, c: FElem) -> Poly {
        let f = &self.field;
        Poly::new(f.clone(), self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check_field(divisor)?;
        let f = &self.field;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let inv_lead = f.inv(divisor.leading())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(f.clone()), self.clone()));
        }
        let mut quot = vec![FElem::ZERO; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = f.mul(rem[k + dd], inv_lead);
            quot[k] = c;
            if c.is_zero() {
                continue;
            }
            for (i, &g) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = f.sub(rem[k + i], f.mul(c, g));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(f.clone(), quot), Poly::new(f.clone(), rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Monic normalization; the zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading()).expect("nonzero leading coefficient");
        self.scale(inv)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check_field(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn eval(&self, x: FElem) -> FElem {
        let f = &self.field;
        self.coeffs.iter().rev().fold(FElem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Monic normalization of `x^deg f · f(1/x)`.
    pub fn reciprocal(&self) -> Result<Poly> {
        if self.coeff(0).is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let mut v = self.coeffs.clone();
        v.reverse();
        Ok(Poly::new(self.field.clone(), v).monic())
    }

    /// Coefficients mapped into another field.
    pub fn map_field(&self, field: Arc<FieldCtx>, map: impl Fn(FElem) -> FElem) -> Poly {
        let v = self.coeffs.iter().map(|&c| map(c)).collect();
        Poly::new(field, v)
    }
}

/// Product of `(x − a)` over `roots`, in the big field.
fn root_product(big: &Arc<FieldCtx>, roots: impl IntoIterator<Item = FElem>) -> Poly {
    let mut v = vec![FElem::ONE];
    for a in roots {
        let neg = big.neg(a);
        let mut next = vec![FElem::ZERO; v.len() + 1];
        for (i, &c) in v.iter().enumerate() {
            next[i + 1] = big.add(next[i + 1], c);
            next[i] = big.add(next[i], big.mul(c, neg));
        }
        v = next;
    }
    Poly::new(big.clone(), v)
}

fn project(ext: &Extension, f: &Poly) -> Poly {
    f.map_field(ext.base().clone(), |c| {
        ext.project(c).expect("orbit product has coefficients in the base field")
    })
}

/// Minimal polynomial of `x` over GF(q), as the product over its q-power
/// conjugates.
pub fn minimal_polynomial(ext: &Extension, x: FElem) -> Poly {
    let big = ext.big();
    let s = ext.base().degree();
    let mut orbit = vec![x];
    let mut y = big.frobenius(x, s);
    while y != x {
        orbit.push(y);
        y = big.frobenius(y, s);
    }
    project(ext, &root_product(big, orbit))
}

/// Irreducible factors of `x^n − λ` over GF(q) as `(leader, M_{β^leader})`,
/// ordered by leader, where `β = α^((q^t − 1)/rn)` and `λ = β^n`.
pub fn factor_xn_minus_lambda(q: u64, n: u64, r: u64, ext: &Extension) -> Result<Vec<(u64, Poly)>> {
    let rn = r * n;
    let t = cosets::mult_order(q, rn)?;
    if ext.degree() as u64 != t || ext.base().order() != q {
        return Err(Error::WrongExtensionDegree { expected: t as usize, got: ext.degree() });
    }
    let big = ext.big();
    let beta = big.pow(big.generator(), ((big.order() - 1) / rn) as u128);
    let mut out = Vec::new();
    for c in cosets::gamma1(q, n, r)? {
        let roots = c.members.iter().map(|&j| big.pow(beta, j as u128));
        out.push((c.leader, project(ext, &root_product(big, roots))));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(field: &Arc<FieldCtx>, c: &[u64]) -> Poly {
        Poly::new(field.clone(), c.iter().map(|&x| FElem(x)).collect())
    }

    #[test]
    fn arithmetic_basics() {
        let f3 = FieldCtx::default_field(3, 1).unwrap();
        let a = p(&f3, &[2, 0, 1]); // x² − 1
        let b = p(&f3, &[2, 1]); // x − 1
        assert_eq!(a.mul(&Poly::one(f3.clone())).unwrap(), a);
        assert_eq!(a.gcd(&b).unwrap(), b);
        let f2 = FieldCtx::default_field(2, 1).unwrap();
        assert!(p(&f2, &[1, 0, 0, 1]).eval(FElem::ONE).is_zero());
        assert_eq!(b.rem(&Poly::zero(f3.clone())), Err(Error::DivisionByZero));
        assert_eq!(a.add(&p(&f2, &[1])), Err(Error::FieldMismatch));
    }

    #[test]
    fn reciprocal_examples() {
        let f3 = FieldCtx::default_field(3, 1).unwrap();
        let a = p(&f3, &[2, 1]);
        assert_eq!(a.reciprocal().unwrap(), a);
        assert_eq!(p(&f3, &[2, 1, 1]).reciprocal().unwrap(), p(&f3, &[2, 2, 1]));
        assert_eq!(p(&f3, &[0, 1]).reciprocal(), Err(Error::ZeroConstantTerm));
    }

    #[test]
    fn minimal_polynomials() {
        let ext = Extension::create(2, 2, Some(&[1, 1, 1])).unwrap();
        let f2 = ext.base().clone();
        assert_eq!(minimal_polynomial(&ext, FElem::ZERO), p(&f2, &[0, 1]));
        assert_eq!(minimal_polynomial(&ext, FElem::ONE), p(&f2, &[1, 1]));
        assert_eq!(minimal_polynomial(&ext, ext.big().generator()), p(&f2, &[1, 1, 1]));
    }

    fn check_factorization(q: u64, n: u64, r: u64) -> Vec<usize> {
        let t = cosets::mult_order(q, r * n).unwrap() as usize;
        let ext = Extension::create(q, t, None).unwrap();
        let factors = factor_xn_minus_lambda(q, n, r, &ext).unwrap();
        let base = ext.base().clone();
        let big = ext.big();
        let lambda = ext.project(big.pow(big.generator(), ((big.order() - 1) / r) as u128)).unwrap();
        let target = Poly::x_n_minus(base.clone(), n as usize, lambda);
        let mut prod = Poly::one(base);
        for (_, f) in &factors {
            assert!(target.rem(f).unwrap().is_zero());
            prod = prod.mul(f).unwrap();
        }
        assert_eq!(prod, target);
        factors.iter().map(|(_, f)| f.degree().unwrap()).collect()
    }

    #[test]
    fn factorization_examples() {
        assert_eq!(check_factorization(4, 5, 3), vec![2, 2, 1]);
        assert_eq!(check_factorization(7, 6, 1), vec![1; 6]);
        assert_eq!(check_factorization(3, 11, 2), vec![5, 5, 1]);
        assert_eq!(check_factorization(4, 15, 3).iter().sum::<usize>(), 15);
    }

    #[test]
    fn wrong_degree_rejected() {
        let ext = Extension::create(4, 4, None).unwrap();
        assert_eq!(
            factor_xn_minus_lambda(4, 5, 3, &ext).unwrap_err(),
            Error::WrongExtensionDegree { expected: 2, got: 4 }
        );
    }
}
