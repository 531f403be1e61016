//! Closed-form weight enumerators for families of irreducible constacyclic
//! codes with a small parameter e, the quadratic-residue families and a
//! prediction-versus-measurement harness.

mod gauss;
mod harness;
mod qr;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::linear_code::WeightEnumerator;
use crate::nt;
use crate::{Error, Result};

pub use gauss::{gauss_cd_e3, gauss_cd_e4};
pub use harness::{
    alpha_independence, thm9_instances, verify_family, AlphaReport, FamilyReport, Lemma8Check, Measurement,
};
pub use qr::{qr_build_and_check, qr_spec, scan_qr_primes, QrFamilySpec, QrReport, QrVariant};

/// p^{num/den} for an exponent that must come out integral.
fn p_pow_frac(p: u64, num: u64, den: u64) -> Result<BigInt> {
    if num % den != 0 {
        return Err(Error::PreconditionViolated(format!("{p}^({num}/{den}) is not an integer")));
    }
    Ok(BigInt::from(nt::big_pow(p, num / den)))
}

/// Least j ≥ 1 with p^j ≡ −1 (mod e), searched up to e.
pub fn semiprimitive_j(p: u64, e: u64) -> Option<u64> {
    if e < 2 {
        return None;
    }
    let mut x = p % e;
    for j in 1..=e {
        if x == e - 1 {
            return Some(j);
        }
        x = (x as u128 * p as u128 % e as u128) as u64;
    }
    None
}

/// Weight terms `(numerator / denominator, count)` collected into an
/// enumerator; every weight must be a non-negative integer at most `len`.
fn enumerator(len: u64, terms: &[(BigInt, BigInt, BigInt)]) -> Result<WeightEnumerator> {
    let mut counts: BTreeMap<usize, BigUint> = BTreeMap::new();
    counts.insert(0, BigUint::from(1u32));
    for (num, den, count) in terms {
        let (w, rem) = num.div_rem(den);
        if !rem.is_zero() || w.is_negative() || count.is_negative() {
            return Err(Error::PreconditionViolated(format!("weight {num}/{den} is not a non-negative integer")));
        }
        let w = w.to_u64().filter(|&w| w <= len).ok_or_else(|| {
            Error::PreconditionViolated(format!("weight {w} exceeds the length {len}"))
        })?;
        *counts.entry(w as usize).or_default() += count.magnitude();
    }
    Ok(WeightEnumerator::new(len as usize, counts))
}

/// The case of the closed form that applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    /// e = 1: one weight.
    E1,
    /// e = 2: two weights.
    E2,
    /// e = 3 with p ≡ 1 (mod 3): three weights.
    E3 { c1: i64, d1: i64 },
    /// e = 4 with p ≡ 1 (mod 4): four weights.
    E4 { c1: i64, d1: i64 },
    /// p^j ≡ −1 (mod e), γ = sm/(2j): two weights.
    Semiprimitive { j: u64, gamma: u64 },
}

impl Case {
    pub fn tag(&self) -> &'static str {
        match self {
            Case::E1 => "e1",
            Case::E2 => "e2",
            Case::E3 { .. } => "e3",
            Case::E4 { .. } => "e4",
            Case::Semiprimitive { .. } => "semiprimitive",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Case::E3 { c1, d1 } | Case::E4 { c1, d1 } => write!(f, "{} (c1 = {c1}, d1 = {d1})", self.tag()),
            Case::Semiprimitive { j, gamma } => write!(f, "semiprimitive (j = {j}, gamma = {gamma})"),
            _ => f.write_str(self.tag()),
        }
    }
}

/// Shared quantities of the closed forms for GF(q), q = p^s, and degree m.
struct Powers {
    p: u64,
    s: u64,
    m: u64,
    /// q^m − 1.
    qm1: BigInt,
    /// q^{m−1}.
    a: BigInt,
}

impl Powers {
    fn new(q: u64, m: u64) -> Result<Self> {
        let (p, s) = nt::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let s = s as u64;
        if m < 1 {
            return Err(Error::PreconditionViolated("m must be positive".into()));
        }
        Ok(Powers {
            p,
            s,
            m,
            qm1: BigInt::from(nt::big_pow_minus_one(q, m)),
            a: BigInt::from(nt::big_pow(q, m - 1)),
        })
    }

    /// q^{(m − k)/den}, evaluated as a power of p.
    fn q_pow(&self, k: u64, den: u64) -> Result<BigInt> {
        if self.m < k {
            return Err(Error::PreconditionViolated(format!("m = {} < {k}", self.m)));
        }
        p_pow_frac(self.p, self.s * (self.m - k), den)
    }
}

/// Terms of the closed-form enumerator with all weights scaled by `r`.
fn case_terms(q: u64, m: u64, e: u64, case: &Case, r: u64, semiprimitive_5a: bool) -> Result<Vec<(BigInt, BigInt, BigInt)>> {
    let pw = Powers::new(q, m)?;
    let r = BigInt::from(r);
    let a = &pw.a;
    let qm1 = &pw.qm1;
    let ei = BigInt::from(e);
    Ok(match *case {
        Case::E1 => vec![(&r * a, BigInt::from(1), qm1.clone())],
        Case::E2 => {
            let b = pw.q_pow(2, 2)?;
            let count: BigInt = qm1 / 2;
            vec![(&r * (a - &b), BigInt::from(2), count.clone()), (&r * (a + &b), BigInt::from(2), count)]
        }
        Case::E3 { c1, d1 } => {
            let c = pw.q_pow(3, 2)?;
            let (c1, d1) = (BigInt::from(c1), BigInt::from(d1));
            let count: BigInt = qm1 / 3;
            let six = BigInt::from(6);
            vec![
                (&r * (a - &c1 * &c) * 2, six.clone(), count.clone()),
                (&r * (a * 2 + (&c1 + &d1 * 9) * &c), six.clone(), count.clone()),
                (&r * (a * 2 + (&c1 - &d1 * 9) * &c), six, count),
            ]
        }
        Case::E4 { c1, d1 } => {
            let b = pw.q_pow(2, 2)?;
            let f = pw.q_pow(4, 4)?;
            let (c1, d1) = (BigInt::from(c1), BigInt::from(d1));
            let count: BigInt = qm1 / 4;
            let four = BigInt::from(4);
            vec![
                (&r * (a + &b + &c1 * &f * 2), four.clone(), count.clone()),
                (&r * (a + &b - &c1 * &f * 2), four.clone(), count.clone()),
                (&r * (a - &b + &d1 * &f * 4), four.clone(), count.clone()),
                (&r * (a - &b - &d1 * &f * 4), four, count),
            ]
        }
        Case::Semiprimitive { gamma, .. } => {
            let b = pw.q_pow(2, 2)?;
            let small: BigInt = qm1 / &ei;
            let large = qm1 - &small;
            if semiprimitive_5a {
                vec![(&r * (a - (&ei - 1) * &b), ei.clone(), small), (&r * (a + &b), ei, large)]
            } else {
                let sign = if gamma % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
                vec![
                    (&r * (a + &sign * (&ei - 1) * &b), ei.clone(), small),
                    (&r * (a - &sign * &b), ei, large),
                ]
            }
        }
    })
}

/// (q^m − 1)/((q − 1)e) when e divides (q^m − 1)/(q − 1).
fn base_length(q: u64, m: u64, e: u64) -> Result<u64> {
    let total = nt::big_pow_minus_one(q, m) / BigUint::from(q - 1);
    if e == 0 || !(&total % BigUint::from(e)).is_zero() {
        return Err(Error::PreconditionViolated(format!("e = {e} does not divide (q^m - 1)/(q - 1) = {total}")));
    }
    nt::big_to_u64(&(total / BigUint::from(e)))
        .ok_or_else(|| Error::PreconditionViolated("length does not fit in 64 bits".into()))
}

/// Parameters of the e-family: n = u(q^m − 1)/((q − 1)e) over GF(q), q = p^s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thm9Params {
    pub p: u64,
    pub s: u64,
    pub q: u64,
    pub m: u64,
    pub e: u64,
    pub u: u64,
    pub r: u64,
    pub n: u64,
    pub case: Case,
    /// Whether u divides q − 1; false only for [`Thm9Params::new_relaxed`].
    pub u_divides_q_minus_1: bool,
}

impl Thm9Params {
    pub fn new(q: u64, m: u64, e: u64, u: u64, r: u64) -> Result<Self> {
        Self::build(q, m, e, u, r, true)
    }

    /// As [`Thm9Params::new`] but accepting any u ≥ 1 coprime to e; the
    /// closed form is then a conjecture for the instance.
    pub fn new_relaxed(q: u64, m: u64, e: u64, u: u64, r: u64) -> Result<Self> {
        Self::build(q, m, e, u, r, false)
    }

    fn build(q: u64, m: u64, e: u64, u: u64, r: u64, strict: bool) -> Result<Self> {
        let (p, s) = nt::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let s = s as u64;
        let fail = |msg: String| Err(Error::PreconditionViolated(msg));
        if m < 2 {
            return fail(format!("m = {m} < 2"));
        }
        let len = base_length(q, m, e)?;
        // e ≤ (q^{m/2} + 1)/2  ⇔  (2e − 1)^2 ≤ q^m
        if BigUint::from(2 * e - 1).pow(2) > nt::big_pow(q, m) {
            return fail(format!("e = {e} exceeds (q^(m/2) + 1)/2"));
        }
        let u_divides_q_minus_1 = u > 0 && (q - 1) % u == 0;
        if u == 0 || (strict && !u_divides_q_minus_1) {
            return fail(format!("u = {u} does not divide q - 1"));
        }
        if nt::gcd(e, u) != 1 {
            return Err(Error::NotCoprime { a: e, b: u });
        }
        if r == 0 || (q - 1) % r != 0 {
            return Err(Error::RNotDividingQMinus1 { q, r });
        }
        let n = len
            .checked_mul(u)
            .ok_or_else(|| Error::PreconditionViolated("length does not fit in 64 bits".into()))?;
        if nt::gcd((q - 1) / r, n) != 1 {
            return fail(format!("gcd((q - 1)/r, n) = {} != 1", nt::gcd((q - 1) / r, n)));
        }
        let case = match e {
            1 => Case::E1,
            2 if m % 2 == 0 && 2 < q => Case::E2,
            3 if p % 3 == 1 => {
                if !(3 < q && m >= 3 && m % 2 == 1 && (s * m) % 3 == 0) {
                    return fail("e = 3 with p = 1 (mod 3) needs odd m >= 3 and 3 | sm".into());
                }
                let (c1, d1) = gauss_cd_e3(p, q, m)?;
                Case::E3 { c1, d1 }
            }
            4 if p % 4 == 1 => {
                if !(4 < q && m >= 4 && m % 2 == 0 && (s * m) % 4 == 0) {
                    return fail("e = 4 with p = 1 (mod 4) needs even m >= 4 and 4 | sm".into());
                }
                let (c1, d1) = gauss_cd_e4(p, q, m)?;
                Case::E4 { c1, d1 }
            }
            e if e > 2 => match semiprimitive_j(p, e) {
                Some(j) if (s * m) % (2 * j) == 0 => Case::Semiprimitive { j, gamma: s * m / (2 * j) },
                Some(j) => return fail(format!("2j = {} does not divide sm = {}", 2 * j, s * m)),
                None => return fail(format!("no case applies to e = {e} over GF({q})")),
            },
            _ => return fail(format!("no case applies to e = {e}, m = {m} over GF({q})")),
        };
        Ok(Thm9Params { p, s, q, m, e, u, r, n, case, u_divides_q_minus_1 })
    }

    /// (q^m − 1)/((q − 1)e), the length of Exp2.
    pub fn base_length(&self) -> u64 {
        self.n / self.u
    }

    pub fn dimension(&self) -> u64 {
        self.u * self.m
    }

    /// Enumerator of Exp2, whose u-th power is the prediction for C.
    pub fn base_enumerator(&self) -> Result<WeightEnumerator> {
        let terms = case_terms(self.q, self.m, self.e, &self.case, 1, false)?;
        enumerator(self.base_length(), &terms)
    }

    /// 3, or 4 for γ even, m = 4, e = q + 1; `None` when C⊥ = {0}.
    pub fn predicted_dual_distance(&self) -> Option<u64> {
        if self.n == self.dimension() {
            return None;
        }
        match self.case {
            Case::Semiprimitive { gamma, .. } if gamma % 2 == 0 && self.m == 4 && self.e == self.q + 1 => Some(4),
            _ => Some(3),
        }
    }
}

impl fmt::Display for Thm9Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "q={} m={} e={} u={} r={} n={} case={}",
            self.q, self.m, self.e, self.u, self.r, self.n, self.case
        )
    }
}

/// Prediction for C: length, dimension, enumerator and dual distance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thm9Prediction {
    pub length: u64,
    pub dimension: u64,
    pub enumerator: WeightEnumerator,
    pub dual_distance: Option<u64>,
    pub dual_dimension: u64,
}

pub fn predict_thm9(params: &Thm9Params) -> Result<Thm9Prediction> {
    Ok(Thm9Prediction {
        length: params.n,
        dimension: params.dimension(),
        enumerator: params.base_enumerator()?.pow(params.u as usize),
        dual_distance: params.predicted_dual_distance(),
        dual_dimension: params.n - params.dimension(),
    })
}

/// Prediction for the irreducible cyclic code Exp1 of length r(q^m − 1)/((q − 1)e).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma8Prediction {
    pub case: &'static str,
    pub length: u64,
    pub dimension: u64,
    pub enumerator: WeightEnumerator,
}

/// Closed-form enumerator of the cyclic code of length r(q^m − 1)/((q − 1)e)
/// and dimension m, under the hypotheses of each case.
pub fn predict_lemma8(q: u64, r: u64, m: u64, e: u64) -> Result<Lemma8Prediction> {
    let (p, s) = nt::prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let s = s as u64;
    let fail = |msg: String| Err(Error::PreconditionViolated(msg));
    if r == 0 || (q - 1) % r != 0 {
        return Err(Error::RNotDividingQMinus1 { q, r });
    }
    if m < 2 {
        return fail(format!("m = {m} < 2"));
    }
    let len = base_length(q, m, e)? * r;
    let (tag, case, five_a) = match e {
        1 => ("1", Case::E1, false),
        2 => {
            if m % 2 != 0 || r % 2 == 0 {
                return fail("e = 2 needs m even and r odd".into());
            }
            ("2", Case::E2, false)
        }
        3 if p % 3 == 1 => {
            if m < 3 || m % 2 == 0 || (s * m) % 3 != 0 || r % 3 == 0 {
                return fail("e = 3 needs odd m >= 3, 3 | sm and gcd(r, 3) = 1".into());
            }
            let (c1, d1) = gauss_cd_e3(p, q, m)?;
            ("3", Case::E3 { c1, d1 }, false)
        }
        4 if p % 4 == 1 => {
            if m < 4 || m % 2 != 0 || (s * m) % 4 != 0 || r % 2 == 0 {
                return fail("e = 4 needs even m >= 4, 4 | sm and r odd".into());
            }
            let (c1, d1) = gauss_cd_e4(p, q, m)?;
            ("4", Case::E4 { c1, d1 }, false)
        }
        _ => {
            if m % 2 != 0 || nt::gcd(e, r) != 1 {
                return fail("the semiprimitive case needs m even and gcd(e, r) = 1".into());
            }
            let Some(j) = semiprimitive_j(p, e) else {
                return fail(format!("no j with {p}^j = -1 (mod {e})"));
            };
            if (s * m) % (2 * j) != 0 {
                return fail(format!("2j = {} does not divide sm = {}", 2 * j, s * m));
            }
            let gamma = s * m / (2 * j);
            let half = nt::big_pow(p, s * m / 2);
            let five_a = gamma % 2 == 1 && p % 2 == 1 && ((nt::big_pow(p, j) + 1u32) / BigUint::from(e)).is_odd();
            if five_a {
                if BigUint::from(e) >= half + 1u32 {
                    return fail(format!("e = {e} is not below q^(m/2) + 1"));
                }
            } else {
                // q^{m/2} + (−1)^γ (e − 1) > 0
                let pos = if gamma % 2 == 0 { true } else { half > BigUint::from(e - 1) };
                if !pos {
                    return fail("q^(m/2) + (-1)^gamma (e - 1) is not positive".into());
                }
            }
            (if five_a { "5a" } else { "5b" }, Case::Semiprimitive { j, gamma }, five_a)
        }
    };
    let terms = case_terms(q, m, e, &case, r, five_a)?;
    Ok(Lemma8Prediction { case: tag, length: len, dimension: m, enumerator: enumerator(len, &terms)? })
}

/// The enumerator of the e = 3 or e = 4 closed form with explicit (c₁, d₁).
pub fn enumerator_with_cd(q: u64, m: u64, e: u64, r: u64, c1: i64, d1: i64) -> Result<WeightEnumerator> {
    let case = match e {
        3 => Case::E3 { c1, d1 },
        4 => Case::E4 { c1, d1 },
        _ => return Err(Error::PreconditionViolated(format!("e = {e} has no (c1, d1) form"))),
    };
    let len = base_length(q, m, e)? * r;
    enumerator(len, &case_terms(q, m, e, &case, r, false)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorollaryKind {
    /// n = (q^m − 1)/(q − 1): Simplex parameters.
    Simplex,
    /// n = 2(q^m − 1)/(q − 1), q odd.
    TwoWeight,
    /// n = 3(q^m − 1)/(q − 1), q ≡ 1 (mod 3).
    ThreeWeight,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryPrediction {
    pub length: u64,
    pub dimension: u64,
    pub min_distance: u64,
    pub enumerator: WeightEnumerator,
    /// [n, n − k, 3].
    pub dual: (u64, u64, u64),
    /// The common weight q^{m−1} for the Simplex kind.
    pub constant_weight: Option<u64>,
}

/// Parameters of the u-fold (u = 1, 2, 3) e = 1 families, expanded as
/// Σ binom(u, i)(q^m − 1)^i z^{i q^{m−1}}.
pub fn predict_corollaries(kind: CorollaryKind, q: u64, m: u64, r: u64) -> Result<CorollaryPrediction> {
    nt::prime_power(q).ok_or(Error::NotPrimePower(q))?;
    if r == 0 || (q - 1) % r != 0 {
        return Err(Error::RNotDividingQMinus1 { q, r });
    }
    if m < 2 {
        return Err(Error::PreconditionViolated(format!("m = {m} < 2")));
    }
    let t = (q - 1) / r;
    let u = match kind {
        CorollaryKind::Simplex => 1,
        CorollaryKind::TwoWeight => {
            if q % 2 == 0 {
                return Err(Error::PreconditionViolated("q must be odd".into()));
            }
            2
        }
        CorollaryKind::ThreeWeight => {
            if q % 3 != 1 {
                return Err(Error::PreconditionViolated("q must be 1 (mod 3)".into()));
            }
            3
        }
    };
    if nt::gcd(t, u * m) != 1 {
        return Err(Error::NotCoprime { a: t, b: u * m });
    }
    let len = base_length(q, m, 1)? * u;
    let w = nt::big_to_u64(&nt::big_pow(q, m - 1)).expect("weight below the length");
    let qm1 = nt::big_pow_minus_one(q, m);
    let counts = (0..=u).map(|i| (i as usize * w as usize, nt::binomial(u, i) * num_traits::pow(qm1.clone(), i as usize)));
    Ok(CorollaryPrediction {
        length: len,
        dimension: u * m,
        min_distance: w,
        enumerator: WeightEnumerator::new(len as usize, counts),
        dual: (len, len - u * m, 3),
        constant_weight: (u == 1).then_some(w),
    })
}
