//! Structural relations between C, its dual and Exp1, Exp2, Exp3, checked
//! on explicit codes.

use num_bigint::BigUint;

use super::ConstacyclicSpec;
use crate::gf::FElem;
use crate::linear_code::{optimality, permutation_equivalent_under, LinearCode, Matrix, Optimality, WeightEnumerator};
use crate::nt;
use crate::{Error, Result};

/// Exp1 equals `{(c ‖ λ⁻¹c ‖ … ‖ λ^{−(r−1)}c) : c ∈ Exp2}`.
pub fn verify_thm4_concat(spec: &ConstacyclicSpec) -> bool {
    let base = spec.base();
    let e2 = spec.exp2();
    let len = e2.length();
    let lam_inv = spec.lambda_inv();
    let rows: Vec<Vec<FElem>> = (0..e2.dimension())
        .map(|k| {
            let row = e2.generator().row(k);
            let mut out = Vec::with_capacity(len * spec.r as usize);
            let mut scale = FElem::ONE;
            for _ in 0..spec.r {
                out.extend(row.iter().map(|&x| base.mul(x, scale)));
                scale = base.mul(scale, lam_inv);
            }
            out
        })
        .collect();
    let concat = LinearCode::from_rows(base.clone(), len * spec.r as usize, &rows);
    concat.same_code(&spec.exp1())
}

/// The interleaving permutation: coordinate κi + j of C moves to position
/// j·(n/κ) + i.
pub fn interleaving(n: u64, kappa: u64) -> Vec<usize> {
    let block = n / kappa;
    let mut perm = vec![0usize; n as usize];
    for i in 0..block {
        for j in 0..kappa {
            perm[(kappa * i + j) as usize] = (j * block + i) as usize;
        }
    }
    perm
}

fn direct_sum(code: &LinearCode, copies: usize) -> LinearCode {
    let len = code.length();
    let k = code.dimension();
    let mut m = Matrix::zeros(code.field().clone(), k * copies, len * copies);
    for b in 0..copies {
        for r in 0..k {
            for (c, &x) in code.generator().row(r).iter().enumerate() {
                m.set(b * k + r, b * len + c, x);
            }
        }
    }
    LinearCode::from_generator(m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectSumReport {
    /// C under the interleaving permutation equals the κ-fold direct sum of Exp2.
    pub code: bool,
    /// The same statement for C⊥ and Exp2⊥.
    pub dual: bool,
}

impl DirectSumReport {
    pub fn passed(&self) -> bool {
        self.code && self.dual
    }
}

pub fn verify_thm4_directsum(spec: &ConstacyclicSpec) -> Result<DirectSumReport> {
    let perm = interleaving(spec.n, spec.kappa);
    let k = spec.kappa as usize;
    let e2 = spec.exp2();
    let c = spec.build_c();
    let code = permutation_equivalent_under(&c, &direct_sum(&e2, k), &perm)?;
    let dual = permutation_equivalent_under(&spec.dual_c(), &direct_sum(&e2.dual(), k), &perm)?;
    Ok(DirectSumReport { code, dual })
}

/// Weight enumerators of Exp2, Exp1 and C with the lifted predictions.
#[derive(Clone, Debug)]
pub struct Thm5Report {
    /// W(z), enumerated from Exp2.
    pub w: WeightEnumerator,
    /// W(z^r).
    pub predicted_exp1: WeightEnumerator,
    /// W(z)^κ.
    pub predicted_c: WeightEnumerator,
    pub exp1: WeightEnumerator,
    /// Enumerated directly when q^{κℓ} fits the budget.
    pub c: Option<WeightEnumerator>,
}

impl Thm5Report {
    pub fn exp1_matches(&self) -> bool {
        self.exp1 == self.predicted_exp1
    }

    pub fn c_matches(&self) -> Option<bool> {
        self.c.as_ref().map(|c| *c == self.predicted_c)
    }

    pub fn passed(&self) -> bool {
        self.exp1_matches() && self.c_matches() != Some(false)
    }
}

fn fits(code_dim: u64, q: u64, budget: u64) -> bool {
    num_traits::pow(BigUint::from(q), code_dim as usize) <= BigUint::from(budget)
}

pub fn verify_thm5(spec: &ConstacyclicSpec, budget: u64) -> Result<Thm5Report> {
    let w = spec.exp2().weight_distribution(budget)?;
    let exp1 = spec.exp1().weight_distribution(budget)?;
    let c = if fits(spec.ext_degree(), spec.q, budget) {
        Some(spec.build_c().weight_distribution(budget)?)
    } else {
        None
    };
    Ok(Thm5Report {
        predicted_exp1: w.substitute_power(spec.r as usize),
        predicted_c: w.pow(spec.kappa as usize),
        w,
        exp1,
        c,
    })
}

/// Dual enumerators of Exp2 and C.
#[derive(Clone, Debug)]
pub struct Thm6Report {
    pub exp2_dual: WeightEnumerator,
    pub exp2_dual_route: &'static str,
    /// (W⊥ of Exp2)^κ.
    pub predicted_c_dual: WeightEnumerator,
    pub c_dual: Option<WeightEnumerator>,
    pub c_dual_route: &'static str,
}

impl Thm6Report {
    pub fn matches(&self) -> Option<bool> {
        self.c_dual.as_ref().map(|d| *d == self.predicted_c_dual)
    }
}

/// Enumerator of `dual` directly when small, else by MacWilliams from `code`.
fn dual_enumerator(code: &LinearCode, dual: &LinearCode, budget: u64) -> Result<(WeightEnumerator, &'static str)> {
    if fits(dual.dimension() as u64, code.q(), budget) {
        return Ok((dual.weight_distribution(budget)?, "direct"));
    }
    let w = code.weight_distribution(budget)?;
    Ok((w.macwilliams(code.dimension(), code.q())?, "macwilliams"))
}

pub fn verify_thm6(spec: &ConstacyclicSpec, budget: u64) -> Result<Thm6Report> {
    let e2 = spec.exp2();
    let (exp2_dual, exp2_dual_route) = dual_enumerator(&e2, &e2.dual(), budget)?;
    let predicted_c_dual = exp2_dual.pow(spec.kappa as usize);
    let c = spec.build_c();
    let (c_dual, c_dual_route) = match dual_enumerator(&c, &spec.dual_c(), budget) {
        Ok((w, route)) => (Some(w), route),
        Err(Error::BudgetExceeded { .. }) => (None, "over budget"),
        Err(e) => return Err(e),
    };
    Ok(Thm6Report { exp2_dual, exp2_dual_route, predicted_c_dual, c_dual, c_dual_route })
}

/// A predicted range for a minimum distance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Window {
    Exact(u64),
    Range(u64, u64),
    AtLeast(u64),
}

impl Window {
    pub fn contains(&self, d: u64) -> bool {
        match *self {
            Window::Exact(x) => d == x,
            Window::Range(a, b) => a <= d && d <= b,
            Window::AtLeast(a) => d >= a,
        }
    }
}

impl std::fmt::Display for Window {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Window::Exact(x) => write!(f, "{x}"),
            Window::Range(a, b) => write!(f, "{a}..={b}"),
            Window::AtLeast(a) => write!(f, ">={a}"),
        }
    }
}

/// Predicted and measured dual distance of C.
#[derive(Clone, Debug)]
pub struct Thm7Report {
    pub ell: u64,
    /// gcd((q−1)/r, n).
    pub gcd: u64,
    pub case: &'static str,
    pub predicted: Window,
    /// Whether the prediction includes distance- and dimension-optimality.
    pub predicts_optimal: bool,
    pub w_max: usize,
    /// d⊥ when at most `w_max`.
    pub measured: Option<usize>,
    pub dual_dimension: u64,
    pub optimality: Option<Optimality>,
}

impl Thm7Report {
    pub fn agrees(&self) -> bool {
        let d_ok = match self.measured {
            Some(d) => self.predicted.contains(d as u64),
            // d⊥ > w_max, or C⊥ = {0}
            None => match self.predicted {
                Window::Exact(x) => x > self.w_max as u64 && self.dual_dimension > 0,
                Window::Range(_, b) => b > self.w_max as u64 && self.dual_dimension > 0,
                Window::AtLeast(_) => true,
            },
        };
        let opt_ok = !self.predicts_optimal
            || self.optimality.as_ref().is_some_and(|o| o.distance_optimal() && o.dimension_optimal());
        d_ok && opt_ok
    }
}

pub fn theorem7_dual_analysis(spec: &ConstacyclicSpec, w_max: usize) -> Result<Thm7Report> {
    let (q, n, r, ell) = (spec.q, spec.n, spec.r, spec.ell);
    let g = nt::gcd((q - 1) / r, n);
    let ql = nt::big_pow_minus_one(q, ell);
    let divides = (&ql / BigUint::from(q - 1)) % BigUint::from(n) == BigUint::from(0u32);
    // n > 2(q^{ℓ/2} − 1)/(q − 1)  ⇔  (n(q−1) + 2)^2 > 4 q^ℓ
    let lhs = BigUint::from(n * (q - 1) + 2);
    let window = &lhs * &lhs > BigUint::from(4u32) * (&ql + 1u32);
    // n > (q^{ℓ−1} − 1)/(q − 1) + 2  ⇔  n(q−1) > q^{ℓ−1} − 1 + 2(q−1)
    let optimal = ell >= 1
        && BigUint::from(n * (q - 1)) > nt::big_pow_minus_one(q, ell - 1) + BigUint::from(2 * (q - 1));
    let (case, predicted, predicts_optimal) = if ell < 2 {
        ("ell < 2", Window::AtLeast(2), false)
    } else if g > 1 {
        ("gcd((q-1)/r, n) > 1", Window::Exact(2), false)
    } else if divides && optimal {
        ("n | (q^ell-1)/(q-1), long", Window::Exact(3), true)
    } else if divides && window {
        ("n | (q^ell-1)/(q-1), window", Window::Range(3, 4), false)
    } else {
        ("gcd((q-1)/r, n) = 1", Window::AtLeast(3), false)
    };
    let c = spec.build_c();
    let measured = c.dual_distance_search(w_max);
    let dual_dimension = n - spec.ext_degree();
    let optimality = measured.map(|d| optimality(n, dual_dimension, d as u64, q));
    Ok(Thm7Report {
        ell,
        gcd: g,
        case,
        predicted,
        predicts_optimal,
        w_max,
        measured,
        dual_dimension,
        optimality,
    })
}

/// C mapped onto another trace code of length n by coordinate moves and
/// powers of λ: coordinate i goes to `i·m⁻¹ mod n` scaled by `λ^y`, where
/// `i ≡ m·x + n·y (mod rn)`.
fn monomial_map(spec: &ConstacyclicSpec, mult: u64) -> (Vec<usize>, Vec<FElem>) {
    let (n, r) = (spec.n as i128, spec.r as i128);
    let inv = nt::mod_inv(mult % spec.n, spec.n).expect("multiplier invertible mod n") as i128;
    let base = spec.base();
    let mut perm = Vec::with_capacity(n as usize);
    let mut scale = Vec::with_capacity(n as usize);
    for i in 0..n {
        let x = (i * inv).rem_euclid(n);
        let y = ((i - mult as i128 * x) / n).rem_euclid(r);
        perm.push(x as usize);
        scale.push(base.pow(spec.lambda, y as u128));
    }
    (perm, scale)
}

fn multiplier_perm(n: u64, mult: u64) -> Vec<usize> {
    (0..n).map(|i| ((i as u128 * mult as u128) % n as u128) as usize).collect()
}

/// C against a target code of length n reached through multiplier `mult`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    /// Target is the image of C under i ↦ i·mult mod n.
    pub perm_times: bool,
    /// Target is the image of C under i ↦ i·mult⁻¹ mod n.
    pub perm_inverse: bool,
    /// Target is the image of C under i ↦ i·mult⁻¹ mod n combined with the
    /// coordinate scalings by powers of λ.
    pub monomial: bool,
    /// Enumerators agree, when both fit the budget.
    pub enumerators_equal: Option<bool>,
}

pub type BridgeReport = EquivalenceReport;
pub type CtReport = EquivalenceReport;

fn equivalence(spec: &ConstacyclicSpec, target: &LinearCode, mult: u64, budget: u64) -> Result<EquivalenceReport> {
    let c = spec.build_c();
    let n = spec.n;
    let inv = nt::mod_inv(mult % n, n).expect("invertible");
    let perm_times = permutation_equivalent_under(&c, target, &multiplier_perm(n, mult))?;
    let perm_inverse = permutation_equivalent_under(&c, target, &multiplier_perm(n, inv))?;
    let (perm, scale) = monomial_map(spec, mult);
    let monomial = c.scaled(&scale).permuted(&perm)?.same_code(target);
    let enumerators_equal = if fits(c.dimension() as u64, spec.q, budget) {
        Some(c.weight_distribution(budget)? == target.weight_distribution(budget)?)
    } else {
        None
    };
    Ok(EquivalenceReport { perm_times, perm_inverse, monomial, enumerators_equal })
}

/// C against Exp3 when gcd(r, n) = 1.
pub fn verify_bridge(spec: &ConstacyclicSpec, budget: u64) -> Result<BridgeReport> {
    if nt::gcd(spec.r, spec.n) != 1 {
        return Err(Error::PreconditionViolated(format!("gcd(r, n) = {} ≠ 1", nt::gcd(spec.r, spec.n))));
    }
    equivalence(spec, &spec.exp3()?, spec.r, budget)
}

/// C against C^(t) for gcd(t, n) = 1, t ≡ 1 (mod r).
pub fn verify_ct(spec: &ConstacyclicSpec, t: u64, budget: u64) -> Result<CtReport> {
    let ct = spec.build_ct(t)?;
    equivalence(spec, &ct, t, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(q: u64, n: u64, r: u64) -> ConstacyclicSpec {
        ConstacyclicSpec::new(q, n, r, None).unwrap()
    }

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = vec![];
        for p in all_permutations(n - 1) {
            for pos in 0..n {
                let mut v = p.clone();
                v.insert(pos, n - 1);
                out.push(v);
            }
        }
        out
    }

    #[test]
    fn golden_4_15_3() {
        let s = spec(4, 15, 3);
        assert!(verify_thm4_concat(&s));
        assert!(verify_thm4_directsum(&s).unwrap().passed());
        let t5 = verify_thm5(&s, 1 << 20).unwrap();
        assert_eq!(t5.w.to_string(), "1 + 15z^4");
        assert_eq!(t5.exp1.to_string(), "1 + 15z^12");
        assert_eq!(t5.c.as_ref().unwrap().to_string(), "1 + 45z^4 + 675z^8 + 3375z^12");
        assert!(t5.passed());
        let t6 = verify_thm6(&s, 1 << 20).unwrap();
        assert_eq!(t6.exp2_dual.to_string(), "1 + 30z^3 + 15z^4 + 18z^5");
        assert_eq!(t6.matches(), Some(true));
    }

    #[test]
    fn interleaving_matches_blocks() {
        assert_eq!(interleaving(6, 2), vec![0, 3, 1, 4, 2, 5]);
        assert_eq!(interleaving(5, 1), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn bridge_is_monomial_not_permutation() {
        for (q, n, r) in [(3, 11, 2), (4, 5, 3), (5, 3, 4), (4, 7, 3)] {
            let rep = verify_bridge(&spec(q, n, r), 1 << 20).unwrap();
            assert!(rep.monomial, "{q} {n} {r}");
            assert_eq!(rep.enumerators_equal, Some(true));
            assert!(!rep.perm_times && !rep.perm_inverse, "{q} {n} {r}");
        }
        let rep = verify_bridge(&spec(4, 5, 1), 1 << 20).unwrap();
        assert!(rep.perm_times && rep.monomial);
        assert!(matches!(verify_bridge(&spec(4, 15, 3), 1 << 20), Err(Error::PreconditionViolated(_))));
    }

    #[test]
    fn no_permutation_reaches_exp3() {
        for (q, n, r) in [(4, 5, 3), (5, 3, 4), (9, 5, 4)] {
            let s = spec(q, n, r);
            let c = s.build_c();
            let e3 = s.exp3().unwrap();
            let hits = all_permutations(n as usize)
                .iter()
                .filter(|p| permutation_equivalent_under(&c, &e3, p).unwrap())
                .count();
            assert_eq!(hits, 0, "{q} {n} {r}");
        }
    }

    #[test]
    fn ct_equivalence() {
        let rep = verify_ct(&spec(3, 11, 2), 3, 1 << 20).unwrap();
        assert!(rep.monomial && rep.enumerators_equal == Some(true));
        let rep = verify_ct(&spec(4, 15, 3), 7, 1 << 20).unwrap();
        assert!(rep.monomial && rep.enumerators_equal == Some(true));
        let rep = verify_ct(&spec(4, 15, 1), 7, 1 << 20).unwrap();
        assert!(rep.perm_inverse && rep.monomial);
    }

    #[test]
    fn dual_distance_classification() {
        let t = theorem7_dual_analysis(&spec(7, 9, 2), 4).unwrap();
        assert_eq!(t.predicted, Window::Exact(2));
        assert_eq!(t.measured, Some(2));
        assert!(t.agrees());
        let t = theorem7_dual_analysis(&spec(4, 5, 3), 4).unwrap();
        assert_eq!(t.predicted, Window::Exact(3));
        assert!(t.agrees());
        let t = theorem7_dual_analysis(&spec(3, 11, 2), 4).unwrap();
        assert_eq!(t.measured, None);
        assert!(t.agrees());
    }

    #[test]
    fn window_display() {
        assert_eq!(Window::Range(3, 4).to_string(), "3..=4");
        assert!(Window::AtLeast(3).contains(7));
        assert!(!Window::Exact(3).contains(4));
    }
}
