use std::collections::HashMap;
use std::sync::Arc;

use super::{FElem, FieldCtx};
use crate::{Error, Result};

/// GF(q^t) viewed as an extension of GF(q).
///
/// Both fields are represented over the prime field. GF(q) is embedded into
/// the unique subfield of order q of the big field by sending the class of
/// `x` to a root of GF(q)'s defining polynomial.
#[derive(Clone, Debug)]
pub struct Extension {
    base: Arc<FieldCtx>,
    big: Arc<FieldCtx>,
    embed: Vec<FElem>,
    project: HashMap<u64, FElem>,
}

impl Extension {
    pub fn new(base: Arc<FieldCtx>, big: Arc<FieldCtx>) -> Result<Self> {
        if base.characteristic() != big.characteristic() || big.degree() % base.degree() != 0 {
            return Err(Error::IncompatibleSubfield { sub: base.degree(), ext: big.degree() });
        }
        let s = base.degree();
        let embed: Vec<FElem> = if s == 1 {
            base.elements().collect()
        } else {
            let rho = find_root(&base, &big)?;
            let mut powers = vec![FElem::ONE];
            for i in 1..s {
                powers.push(big.mul(powers[i - 1], rho));
            }
            base.elements()
                .map(|a| {
                    let mut acc = FElem::ZERO;
                    for (c, &pw) in base.coefficients(a).into_iter().zip(&powers) {
                        acc = big.add(acc, big.mul(big.from_int(c), pw));
                    }
                    acc
                })
                .collect()
        };
        let project = embed.iter().enumerate().map(|(i, e)| (e.0, FElem(i as u64))).collect();
        Ok(Extension { base, big, embed, project })
    }

    /// The extension of GF(q) of degree `t`, both with default polynomials,
    /// or with `big_poly` (over the prime field) defining the big field.
    pub fn create(q: u64, t: usize, big_poly: Option<&[u64]>) -> Result<Self> {
        let (p, s) = crate::nt::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let base = FieldCtx::default_field(p, s as usize)?;
        let big = match big_poly {
            Some(f) => FieldCtx::new(p, s as usize * t, Some(f))?,
            None => FieldCtx::default_field(p, s as usize * t)?,
        };
        Self::new(base, big)
    }

    /// Same fields, big field with a different designated generator.
    pub fn with_generator(&self, g: FElem) -> Result<Self> {
        let mut e = self.clone();
        e.big = self.big.with_generator(g)?;
        Ok(e)
    }

    pub fn base(&self) -> &Arc<FieldCtx> {
        &self.base
    }

    pub fn big(&self) -> &Arc<FieldCtx> {
        &self.big
    }

    /// Degree of the big field over GF(q).
    pub fn degree(&self) -> usize {
        self.big.degree() / self.base.degree()
    }

    pub fn embed(&self, a: FElem) -> FElem {
        self.embed[a.0 as usize]
    }

    /// The GF(q) element equal to `x`, if `x` lies in the subfield.
    pub fn project(&self, x: FElem) -> Option<FElem> {
        self.project.get(&x.0).copied()
    }

    /// Trace from the big field down to GF(q).
    pub fn trace(&self, x: FElem) -> FElem {
        let t = self.big.trace(x, self.base.degree()).expect("degree checked at construction");
        self.project(t).expect("trace lands in the subfield")
    }

    /// Trace from the big field down to GF(q^t), `t` dividing the degree.
    pub fn trace_to(&self, x: FElem, t: usize) -> Result<FElem> {
        self.big.trace(x, self.base.degree() * t)
    }
}

fn find_root(base: &FieldCtx, big: &FieldCtx) -> Result<FElem> {
    let s = base.degree();
    let gamma = big.subfield_generator(s)?;
    let f = base.modulus();
    let mut cand = gamma;
    for _ in 0..base.order() - 1 {
        let mut v = FElem::ZERO;
        for &c in f.iter().rev() {
            v = big.add(big.mul(v, cand), big.from_int(c));
        }
        if v.is_zero() {
            return Ok(cand);
        }
        cand = big.mul(cand, gamma);
    }
    Err(Error::IncompatibleSubfield { sub: s, ext: big.degree() })
}
