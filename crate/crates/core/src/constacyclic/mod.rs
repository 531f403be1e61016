//! The irreducible λ-constacyclic code
//!
//! ```text
//! C = { (Tr(a θ^i))_{i<n} : a ∈ GF(q^{κℓ}) }
//! ```
//!
//! with θ = β⁻¹, β = α^((q^{κℓ}−1)/rn) and λ = α^((q^{κℓ}−1)/r), its dual,
//! and the associated codes Exp1 (cyclic, length rn/κ), Exp2 (λ-constacyclic,
//! length n/κ) and Exp3 (cyclic, length n, check polynomial M_{β^r}).

mod verify;

use std::sync::Arc;

pub use verify::{
    verify_bridge, verify_ct, verify_thm4_concat, verify_thm4_directsum, verify_thm5, verify_thm6,
    theorem7_dual_analysis, BridgeReport, CtReport, DirectSumReport, Thm5Report, Thm6Report, Thm7Report,
    Window,
};

use crate::cosets::{self, ParamBundle};
use crate::gf::{Extension, FElem, FieldCtx};
use crate::linear_code::LinearCode;
use crate::nt;
use crate::polyring::{minimal_polynomial, Poly};
use crate::{Error, Result};

/// One instance (q, n, r) with a fixed primitive α of GF(q^{κℓ}).
#[derive(Clone, Debug)]
pub struct ConstacyclicSpec {
    pub q: u64,
    pub n: u64,
    pub r: u64,
    pub ell: u64,
    pub kappa: u64,
    ext: Extension,
    pub alpha: FElem,
    pub beta: FElem,
    pub theta: FElem,
    /// λ as an element of the big field.
    pub lambda_big: FElem,
    /// λ as an element of GF(q).
    pub lambda: FElem,
}

impl ConstacyclicSpec {
    /// Builds the instance. `field_poly`, if given, is the defining
    /// polynomial of GF(q^{κℓ}) over the prime field (ascending
    /// coefficients); its root α must be primitive.
    pub fn new(q: u64, n: u64, r: u64, field_poly: Option<&[u64]>) -> Result<Self> {
        nt::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if n == 0 {
            return Err(Error::PreconditionViolated("n must be positive".into()));
        }
        let kappa = cosets::kappa(q, n, r)?;
        let ell = cosets::mult_order(q, n)?;
        let ext = Extension::create(q, (kappa * ell) as usize, field_poly)?;
        if field_poly.is_some() && ext.big().degree() > 1 && ext.big().generator() != ext.big().x() {
            return Err(Error::PreconditionViolated(
                "the root of the supplied field polynomial is not primitive".into(),
            ));
        }
        Self::with_extension(q, n, r, ext)
    }

    fn with_extension(q: u64, n: u64, r: u64, ext: Extension) -> Result<Self> {
        let kappa = cosets::kappa(q, n, r)?;
        let ell = cosets::mult_order(q, n)?;
        let big = ext.big().clone();
        let order = big.order() - 1;
        let alpha = big.generator();
        let beta = big.pow(alpha, (order / (r * n)) as u128);
        let lambda_big = big.pow(alpha, (order / r) as u128);
        let theta = big.inv(beta)?;
        let lambda = ext.project(lambda_big).expect("λ lies in GF(q)");
        assert_eq!(big.element_order(lambda_big)?, r, "ord(λ) = r");
        assert_eq!(big.pow(beta, n as u128), lambda_big, "β^n = λ");
        assert_eq!(big.element_order(beta)?, r * n, "ord(β) = rn");
        let sub = ext.base().degree() * ell as usize;
        assert!(big.in_subfield(big.pow(theta, kappa as u128), sub), "θ^κ ∈ GF(q^ℓ)");
        Ok(ConstacyclicSpec { q, n, r, ell, kappa, ext, alpha, beta, theta, lambda_big, lambda })
    }

    /// The same instance with another primitive element of GF(q^{κℓ}).
    pub fn with_alpha(&self, alpha: FElem) -> Result<Self> {
        Self::with_extension(self.q, self.n, self.r, self.ext.with_generator(alpha)?)
    }

    pub fn ext(&self) -> &Extension {
        &self.ext
    }

    /// GF(q).
    pub fn base(&self) -> &Arc<FieldCtx> {
        self.ext.base()
    }

    /// GF(q^{κℓ}).
    pub fn big(&self) -> &Arc<FieldCtx> {
        self.ext.big()
    }

    pub fn params(&self) -> Result<ParamBundle> {
        ParamBundle::new(self.q, self.n, self.r)
    }

    pub fn ext_degree(&self) -> u64 {
        self.kappa * self.ell
    }

    pub fn lambda_inv(&self) -> FElem {
        self.base().inv(self.lambda).expect("λ ≠ 0")
    }

    /// Tr_{q^d/q}(x) for `x` in the subfield GF(q^d) of the big field.
    fn partial_trace(&self, x: FElem, d: u64) -> FElem {
        let big = self.big();
        let s = self.base().degree();
        let mut acc = FElem::ZERO;
        let mut y = x;
        for _ in 0..d {
            acc = big.add(acc, y);
            y = big.frobenius(y, s);
        }
        self.ext.project(acc).expect("trace lands in GF(q)")
    }

    /// Rows `(Tr_{q^d/q}(b · θ^{step·i}))_{i<len}` for each `b` in `basis`.
    fn trace_code(&self, basis: &[FElem], d: u64, step: u64, len: u64) -> LinearCode {
        let big = self.big();
        let t = big.pow(self.theta, step as u128);
        let mut powers = Vec::with_capacity(len as usize);
        let mut cur = FElem::ONE;
        for _ in 0..len {
            powers.push(cur);
            cur = big.mul(cur, t);
        }
        let rows: Vec<Vec<FElem>> = basis
            .iter()
            .map(|&b| powers.iter().map(|&p| self.partial_trace(big.mul(b, p), d)).collect())
            .collect();
        LinearCode::from_rows(self.base().clone(), len as usize, &rows)
    }

    /// A primitive element of GF(q^ℓ) inside the big field.
    fn gamma(&self) -> FElem {
        let big = self.big();
        let sub_order = num_traits::pow(self.q, self.ell as usize) - 1;
        big.pow(self.alpha, ((big.order() - 1) / sub_order) as u128)
    }

    fn powers(&self, x: FElem, count: u64) -> Vec<FElem> {
        let big = self.big();
        let mut out = vec![FElem::ONE];
        for i in 1..count as usize {
            out.push(big.mul(out[i - 1], x));
        }
        out
    }

    /// C from its trace representation, rows c(α^j) for j < κℓ.
    pub fn build_c(&self) -> LinearCode {
        let t = self.ext_degree();
        let c = self.trace_code(&self.powers(self.alpha, t), t, 1, self.n);
        assert_eq!(c.dimension() as u64, t, "dim C = κℓ");
        c
    }

    /// Exp1: length rn/κ, dimension ℓ, cyclic.
    pub fn exp1(&self) -> LinearCode {
        let len = self.r * self.n / self.kappa;
        let c = self.trace_code(&self.powers(self.gamma(), self.ell), self.ell, self.kappa, len);
        assert_eq!(c.dimension() as u64, self.ell, "dim Exp1 = ℓ");
        c
    }

    /// Exp2: length n/κ, dimension ℓ, λ-constacyclic.
    pub fn exp2(&self) -> LinearCode {
        let len = self.n / self.kappa;
        let c = self.trace_code(&self.powers(self.gamma(), self.ell), self.ell, self.kappa, len);
        assert_eq!(c.dimension() as u64, self.ell, "dim Exp2 = ℓ");
        c
    }

    /// Exp3 from its check polynomial M_{β^r}.
    pub fn exp3(&self) -> Result<LinearCode> {
        let h = self.min_poly_of_beta_power(self.r as i128);
        build_from_check_poly(self.n, FElem::ONE, &h)
    }

    /// Exp3 from the trace form (Tr_{q^ℓ/q}(a θ^{ri}))_{i<n}.
    pub fn exp3_trace(&self) -> LinearCode {
        self.trace_code(&self.powers(self.gamma(), self.ell), self.ell, self.r, self.n)
    }

    /// M_{β^t}, the minimal polynomial over GF(q) of β^t.
    pub fn min_poly_of_beta_power(&self, t: i128) -> Poly {
        let big = self.big();
        let x = big.pow_signed(self.beta, t).expect("β ≠ 0");
        minimal_polynomial(&self.ext, x)
    }

    /// C from its check polynomial M_β.
    pub fn build_c_from_check_poly(&self) -> Result<LinearCode> {
        build_from_check_poly(self.n, self.lambda, &self.min_poly_of_beta_power(1))
    }

    /// C⊥, the λ⁻¹-constacyclic code with generator polynomial M_{β⁻¹}.
    pub fn dual_c(&self) -> LinearCode {
        let g = self.min_poly_of_beta_power(-1);
        build_from_generator_poly(self.n, &g)
    }

    /// C^(t): the λ-constacyclic code with check polynomial M_{β^t}.
    pub fn build_ct(&self, t: u64) -> Result<LinearCode> {
        if nt::gcd(t, self.n) != 1 || t % self.r != 1 % self.r {
            return Err(Error::BadT { t });
        }
        build_from_check_poly(self.n, self.lambda, &self.min_poly_of_beta_power(t as i128))
    }

    /// The factorization of x^n − λ over GF(q) by cyclotomic cosets.
    pub fn factors(&self) -> Result<Vec<(u64, Poly)>> {
        crate::polyring::factor_xn_minus_lambda(self.q, self.n, self.r, &self.ext)
    }
}

/// The code with generator polynomial `g` in GF(q)[x]/(x^n − λ): rows
/// `x^i g(x)` for `i < n − deg g`.
pub fn build_from_generator_poly(n: u64, g: &Poly) -> LinearCode {
    let field = g.field().clone();
    let dg = g.degree().expect("nonzero generator polynomial");
    let n = n as usize;
    let rows: Vec<Vec<FElem>> = (0..n.saturating_sub(dg))
        .map(|i| {
            let mut row = vec![FElem::ZERO; n];
            for (j, &c) in g.coeffs().iter().enumerate() {
                row[i + j] = c;
            }
            row
        })
        .collect();
    LinearCode::from_rows(field, n, &rows)
}

/// The ideal of GF(q)[x]/(x^n − λ) with check polynomial `h`, generated
/// by g = (x^n − λ)/h.
pub fn build_from_check_poly(n: u64, lambda: FElem, h: &Poly) -> Result<LinearCode> {
    let target = Poly::x_n_minus(h.field().clone(), n as usize, lambda);
    let (g, rem) = target.div_rem(h)?;
    if !rem.is_zero() {
        return Err(Error::NotADivisor);
    }
    Ok(build_from_generator_poly(n, &g))
}

#[cfg(test)]
mod tests {
    use super::*;

    const PAPER_4_15_3: [u64; 13] = [1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1];

    #[test]
    fn spec_4_15_3() {
        let s = ConstacyclicSpec::new(4, 15, 3, Some(&PAPER_4_15_3)).unwrap();
        assert_eq!((s.ell, s.kappa), (2, 3));
        assert_eq!(s.base().element_order(s.lambda).unwrap(), 3);
        let c = s.build_c();
        assert_eq!((c.length(), c.dimension()), (15, 6));
        assert!(c.is_constashift_closed(s.lambda));
        assert_eq!(c, s.build_c_from_check_poly().unwrap());
        let d = s.dual_c();
        assert_eq!(d.dimension(), 9);
        assert_eq!(d, c.dual());
        assert!(d.is_constashift_closed(s.lambda_inv()));
        let e1 = s.exp1();
        assert_eq!((e1.length(), e1.dimension()), (15, 2));
        assert!(e1.is_constashift_closed(FElem::ONE));
        let e2 = s.exp2();
        assert_eq!((e2.length(), e2.dimension()), (5, 2));
        assert!(e2.is_constashift_closed(s.lambda));
    }

    #[test]
    fn cyclic_and_negacyclic_cases() {
        let s = ConstacyclicSpec::new(5, 12, 1, None).unwrap();
        assert_eq!(s.lambda, FElem::ONE);
        assert_eq!(s.exp3().unwrap(), s.build_c());
        let s = ConstacyclicSpec::new(3, 11, 2, None).unwrap();
        assert_eq!(s.kappa, 1);
        assert_eq!(s.lambda, FElem(2));
        assert_eq!(s.exp2(), s.build_c());
        let e1 = s.exp1();
        assert_eq!((e1.length(), e1.dimension()), (22, 5));
    }

    #[test]
    fn degenerate_length_one() {
        let s = ConstacyclicSpec::new(3, 1, 1, None).unwrap();
        let c = s.build_c();
        assert_eq!((c.length(), c.dimension()), (1, 1));
        assert_eq!(s.dual_c().dimension(), 0);
    }

    #[test]
    fn check_polynomial_constructions() {
        let f = FieldCtx::default_field(3, 1).unwrap();
        let one = Poly::one(f.clone());
        let xm1 = Poly::new(f.clone(), vec![FElem(2), FElem::ONE]);
        let full = build_from_check_poly(4, FElem::ONE, &Poly::x_n_minus(f.clone(), 4, FElem::ONE)).unwrap();
        assert_eq!(full, LinearCode::full(f.clone(), 4));
        let rep = build_from_check_poly(4, FElem::ONE, &xm1).unwrap();
        assert_eq!(rep.dimension(), 1);
        assert_eq!(rep.min_distance(100).unwrap(), Some(4));
        let bad = Poly::new(f.clone(), vec![FElem(1), FElem(0), FElem(1)]);
        assert_eq!(build_from_check_poly(3, FElem::ONE, &bad).unwrap_err(), Error::NotADivisor);
        assert_eq!(build_from_check_poly(4, FElem::ONE, &one).unwrap().dimension(), 0);
    }

    #[test]
    fn exp3_trace_and_check_forms_agree() {
        for (q, n, r) in [(3u64, 11u64, 2u64), (4, 5, 3), (5, 13, 4), (7, 9, 2), (4, 15, 3)] {
            let s = ConstacyclicSpec::new(q, n, r, None).unwrap();
            assert_eq!(s.exp3().unwrap(), s.exp3_trace(), "({q},{n},{r})");
        }
    }

    #[test]
    fn bad_t_rejected() {
        let s = ConstacyclicSpec::new(3, 11, 2, None).unwrap();
        assert_eq!(s.build_ct(2).unwrap_err(), Error::BadT { t: 2 });
        assert_eq!(s.build_ct(1).unwrap(), s.build_c());
    }

    #[test]
    fn parameter_errors() {
        assert_eq!(ConstacyclicSpec::new(4, 6, 3, None).unwrap_err(), Error::NotCoprime { a: 4, b: 6 });
        assert_eq!(ConstacyclicSpec::new(5, 6, 3, None).unwrap_err(), Error::RNotDividingQMinus1 { q: 5, r: 3 });
        assert_eq!(ConstacyclicSpec::new(6, 5, 1, None).unwrap_err(), Error::NotPrimePower(6));
    }
}
