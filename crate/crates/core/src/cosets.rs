//! Cyclotomic cosets and the integer parameters of an instance (q, n, r).

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::nt;
use crate::{Error, Result};

/// The q-cyclotomic coset of `representative` modulo `modulus`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicCoset {
    pub modulus: u64,
    pub representative: u64,
    /// Sorted ascending.
    pub members: Vec<u64>,
    pub leader: u64,
}

impl CyclotomicCoset {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// ℓ = ord_n(q), κ, e and L for an instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamBundle {
    pub q: u64,
    pub n: u64,
    pub r: u64,
    pub ell: u64,
    pub kappa: u64,
    pub e: BigUint,
    pub big_l: BigUint,
}

impl ParamBundle {
    pub fn new(q: u64, n: u64, r: u64) -> Result<Self> {
        let kappa = kappa(q, n, r)?;
        Ok(ParamBundle {
            q,
            n,
            r,
            ell: mult_order(q, n)?,
            kappa,
            e: param_e(q, n, r)?,
            big_l: param_l(q, n, r)?,
        })
    }

    /// ord_{rn}(q) = κℓ.
    pub fn ext_degree(&self) -> u64 {
        self.kappa * self.ell
    }
}

fn check_coprime(q: u64, n: u64) -> Result<()> {
    if n == 0 || nt::gcd(q, n) != 1 {
        return Err(Error::NotCoprime { a: q, b: n });
    }
    Ok(())
}

fn check_r(q: u64, r: u64) -> Result<()> {
    if r == 0 || (q - 1) % r != 0 {
        return Err(Error::RNotDividingQMinus1 { q, r });
    }
    Ok(())
}

/// Least ℓ ≥ 1 with q^ℓ ≡ 1 (mod n).
pub fn mult_order(q: u64, n: u64) -> Result<u64> {
    check_coprime(q, n)?;
    if n == 1 {
        return Ok(1);
    }
    let qm = q % n;
    let mut acc = qm;
    let mut ell = 1;
    while acc != 1 {
        acc = ((acc as u128 * qm as u128) % n as u128) as u64;
        ell += 1;
    }
    Ok(ell)
}

/// κ = r / gcd((q^ℓ − 1)/n, r), checked against ord_{rn}(q) = κℓ.
pub fn kappa(q: u64, n: u64, r: u64) -> Result<u64> {
    check_coprime(q, n)?;
    check_r(q, r)?;
    let ell = mult_order(q, n)?;
    let quotient = nt::big_pow_minus_one(q, ell) / BigUint::from(n);
    let g = (quotient % BigUint::from(r)).gcd(&BigUint::from(r));
    let kappa = r / g.to_u64().expect("divides r");
    let rn = r.checked_mul(n).ok_or(Error::InconsistentInput("rn overflows".into()))?;
    assert_eq!(mult_order(q, rn)?, kappa * ell, "ord_rn(q) = κℓ");
    Ok(kappa)
}

pub fn cyclotomic_coset(q: u64, modulus: u64, i: u64) -> Result<CyclotomicCoset> {
    check_coprime(q, modulus)?;
    if i >= modulus {
        return Err(Error::InconsistentInput(format!("{i} is not below {modulus}")));
    }
    let mut members = vec![i];
    let mut x = (i as u128 * q as u128 % modulus as u128) as u64;
    while x != i {
        members.push(x);
        x = (x as u128 * q as u128 % modulus as u128) as u64;
    }
    members.sort_unstable();
    Ok(CyclotomicCoset { modulus, representative: i, leader: members[0], members })
}

/// All cosets modulo `modulus`, ordered by leader.
pub fn coset_partition(q: u64, modulus: u64) -> Result<Vec<CyclotomicCoset>> {
    check_coprime(q, modulus)?;
    let mut seen = vec![false; modulus as usize];
    let mut out = Vec::new();
    for i in 0..modulus {
        if seen[i as usize] {
            continue;
        }
        let c = cyclotomic_coset(q, modulus, i)?;
        for &m in &c.members {
            seen[m as usize] = true;
        }
        out.push(c);
    }
    Ok(out)
}

/// Cosets modulo rn whose leaders are ≡ 1 (mod r); they index the
/// irreducible factors of x^n − λ.
pub fn gamma1(q: u64, n: u64, r: u64) -> Result<Vec<CyclotomicCoset>> {
    check_r(q, r)?;
    let rn = r.checked_mul(n).ok_or(Error::InconsistentInput("rn overflows".into()))?;
    check_coprime(q, rn)?;
    let mut seen = vec![false; rn as usize];
    let mut out = Vec::new();
    for i in (1 % r..rn).step_by(r as usize) {
        if seen[i as usize] {
            continue;
        }
        let c = cyclotomic_coset(q, rn, i)?;
        for &m in &c.members {
            seen[m as usize] = true;
        }
        out.push(c);
    }
    Ok(out)
}

/// e = (q^ℓ − 1) / gcd(q^ℓ − 1, (q − 1)n).
pub fn param_e(q: u64, n: u64, r: u64) -> Result<BigUint> {
    check_coprime(q, n)?;
    check_r(q, r)?;
    let ell = mult_order(q, n)?;
    let a = nt::big_pow_minus_one(q, ell);
    let b = BigUint::from(q - 1) * BigUint::from(n);
    let g = a.gcd(&b);
    Ok(a / g)
}

/// L = gcd((q^{κℓ} − 1)/(q − 1), (q^{κℓ} − 1)/(nr)).
pub fn param_l(q: u64, n: u64, r: u64) -> Result<BigUint> {
    let k = kappa(q, n, r)?;
    let ell = mult_order(q, n)?;
    let a = nt::big_pow_minus_one(q, k * ell);
    let x = &a / BigUint::from(q - 1);
    let y = &a / (BigUint::from(n) * BigUint::from(r));
    debug_assert!((&a % (BigUint::from(n) * BigUint::from(r))).is_zero());
    Ok(x.gcd(&y))
}
