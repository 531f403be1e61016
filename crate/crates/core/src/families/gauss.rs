//! The integer pairs (c₁, d₁) that fix the cubic and quartic Gaussian
//! periods:
//!
//! ```text
//! 4q^{m/3} = c₁² + 27d₁²,  c₁ ≡ 1 (mod 3),  gcd(c₁, p) = 1
//! q^{m/2}  = c₁² + 4d₁²,   c₁ ≡ 1 (mod 4),  gcd(c₁, p) = 1
//! ```
//!
//! with d₁ ≥ 0.

use crate::nt;
use crate::{Error, Result};

fn isqrt(x: u128) -> u128 {
    if x < 2 {
        return x;
    }
    let mut r = (x as f64).sqrt() as u128;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

fn prime_and_exponent(p: u64, q: u64) -> Result<u64> {
    match nt::prime_power(q) {
        Some((pp, s)) if pp == p => Ok(s as u64),
        _ => Err(Error::InconsistentInput(format!("{q} is not a power of {p}"))),
    }
}

fn checked_pow(p: u64, e: u64) -> Result<u128> {
    let mut acc: u128 = 1;
    for _ in 0..e {
        acc = acc
            .checked_mul(p as u128)
            .filter(|&a| a < 1 << 100)
            .ok_or_else(|| Error::PreconditionViolated(format!("{p}^{e} is too large")))?;
    }
    Ok(acc)
}

/// Solutions of `target = c² + k·d²` with `c ≡ 1 (mod modulus)`, `p ∤ c` and `d ≥ 0`.
fn search(target: u128, k: u128, modulus: i128, p: u64) -> Vec<(i64, i64)> {
    let bound = isqrt(target) as i128 + 1;
    let mut out = Vec::new();
    for c in -bound..=bound {
        if c.rem_euclid(modulus) != 1 || c.rem_euclid(p as i128) == 0 {
            continue;
        }
        let c2 = (c * c) as u128;
        if c2 > target || (target - c2) % k != 0 {
            continue;
        }
        let d2 = (target - c2) / k;
        let d = isqrt(d2);
        if d * d == d2 {
            out.push((c as i64, d as i64));
        }
    }
    out
}

fn unique(found: Vec<(i64, i64)>, what: String) -> Result<(i64, i64)> {
    match found.as_slice() {
        [one] => Ok(*one),
        [] => Err(Error::NoRepresentation(what)),
        _ => Err(Error::InconsistentInput(format!("{what} has several solutions {found:?}"))),
    }
}

/// (c₁, d₁) with 4q^{m/3} = c₁² + 27d₁².
pub fn gauss_cd_e3(p: u64, q: u64, m: u64) -> Result<(i64, i64)> {
    let s = prime_and_exponent(p, q)?;
    if p % 3 != 1 || (s * m) % 3 != 0 {
        return Err(Error::NoRepresentation(format!("needs p = 1 (mod 3) and 3 | sm, got p = {p}, sm = {}", s * m)));
    }
    let target = 4 * checked_pow(p, s * m / 3)?;
    unique(search(target, 27, 3, p), format!("4·{p}^{} = c² + 27d²", s * m / 3))
}

/// (c₁, d₁) with q^{m/2} = c₁² + 4d₁².
pub fn gauss_cd_e4(p: u64, q: u64, m: u64) -> Result<(i64, i64)> {
    let s = prime_and_exponent(p, q)?;
    if p % 4 != 1 || (s * m) % 4 != 0 {
        return Err(Error::NoRepresentation(format!("needs p = 1 (mod 4) and 4 | sm, got p = {p}, sm = {}", s * m)));
    }
    let target = checked_pow(p, s * m / 2)?;
    unique(search(target, 4, 4, p), format!("{p}^{} = c² + 4d²", s * m / 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_examples() {
        assert_eq!(gauss_cd_e3(7, 7, 3).unwrap(), (1, 1));
        assert_eq!(gauss_cd_e3(13, 13, 3).unwrap(), (-5, 1));
        // 4·7² = 196 = 169 + 27
        assert_eq!(gauss_cd_e3(7, 49, 3).unwrap(), (13, 1));
    }

    #[test]
    fn quartic_examples() {
        assert_eq!(gauss_cd_e4(13, 13, 4).unwrap(), (5, 6));
        assert_eq!(gauss_cd_e4(5, 5, 4).unwrap(), (-3, 2));
        // q^{m/2} = 25 = 9 + 16
        assert_eq!(gauss_cd_e4(5, 25, 2).unwrap(), (-3, 2));
    }

    #[test]
    fn preconditions() {
        assert!(matches!(gauss_cd_e3(5, 5, 3), Err(Error::NoRepresentation(_))));
        assert!(matches!(gauss_cd_e3(7, 7, 2), Err(Error::NoRepresentation(_))));
        assert!(matches!(gauss_cd_e4(7, 7, 4), Err(Error::NoRepresentation(_))));
        assert!(gauss_cd_e4(5, 7, 4).is_err());
    }

    #[test]
    fn identities_hold_across_range() {
        for p in [7u64, 13, 19, 31, 37, 43] {
            for m in [3u64, 6, 9] {
                let (c, d) = gauss_cd_e3(p, p, m).unwrap();
                let lhs = 4 * (p as i128).pow((m / 3) as u32);
                assert_eq!(lhs, (c as i128).pow(2) + 27 * (d as i128).pow(2));
                assert_eq!(c.rem_euclid(3), 1);
                assert!(d >= 0 && c.rem_euclid(p as i64) != 0);
            }
        }
        for p in [5u64, 13, 17, 29, 37] {
            for m in [4u64, 8] {
                let (c, d) = gauss_cd_e4(p, p, m).unwrap();
                assert_eq!((p as i128).pow((m / 2) as u32), (c as i128).pow(2) + 4 * (d as i128).pow(2));
                assert_eq!(c.rem_euclid(4), 1);
                assert!(d >= 0 && c.rem_euclid(p as i64) != 0);
            }
        }
    }
}
