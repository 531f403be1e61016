//! Dense polynomials over the prime field GF(p), ascending coefficients.
//!
//! Only what field construction needs: remainder, trial-division
//! irreducibility and text parsing.

use crate::{Error, Result};

pub(crate) fn trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

/// Remainder of `f` modulo the monic polynomial `g`.
pub(crate) fn rem_monic(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let dg = g.len() - 1;
    let mut r = f.to_vec();
    while r.len() > dg {
        let lead = *r.last().unwrap() % p;
        let shift = r.len() - 1 - dg;
        if lead != 0 {
            for (i, &gi) in g.iter().enumerate() {
                let t = (lead * gi) % p;
                r[shift + i] = (r[shift + i] + p - t) % p;
            }
        }
        r.pop();
    }
    trim(r)
}

/// Calls `visit` with every monic polynomial of exact degree `d`.
fn for_each_monic(d: usize, p: u64, mut visit: impl FnMut(&[u64]) -> bool) {
    let mut f = vec![0u64; d + 1];
    f[d] = 1;
    loop {
        if !visit(&f) {
            return;
        }
        let mut i = 0;
        loop {
            if i == d {
                return;
            }
            f[i] += 1;
            if f[i] < p {
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }
}

/// Irreducibility by trial division against every monic polynomial of
/// degree `1..=deg/2`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    if deg == 0 {
        return false;
    }
    if deg == 1 {
        return true;
    }
    if f[0] == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let mut reducible = false;
        for_each_monic(d, p, |g| {
            if rem_monic(f, g, p).is_empty() {
                reducible = true;
                return false;
            }
            true
        });
        if reducible {
            return false;
        }
    }
    true
}

/// Parses `"c0,c1,...,cs"` (ascending coefficients in `[0, p)`).
pub fn parse_poly(text: &str, p: u64) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for tok in text.split(',') {
        let tok = tok.trim();
        let c: u64 = tok
            .parse()
            .map_err(|_| Error::InvalidPolynomial(format!("bad coefficient {tok:?}")))?;
        if c >= p {
            return Err(Error::InvalidPolynomial(format!(
                "coefficient {c} not in [0, {p})"
            )));
        }
        out.push(c);
    }
    Ok(out)
}

pub fn format_poly(f: &[u64]) -> String {
    f.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_irreducibility() {
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 2));
        assert!(is_irreducible(&[1, 1, 0, 1], 2));
        // x^2 + 1 over GF(3) is irreducible, over GF(5) it is not.
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(!is_irreducible(&[1, 0, 1], 5));
    }

    #[test]
    fn parse_round_trip() {
        let f = parse_poly("3,2,6,4,0,0,0,0,1", 7).unwrap();
        assert_eq!(format_poly(&f), "3,2,6,4,0,0,0,0,1");
        assert!(parse_poly("1,7", 7).is_err());
        assert!(parse_poly("1,x", 7).is_err());
    }
}
