use std::sync::Arc;

use constacode::gf::{FElem, FieldCtx};
use constacode::linear_code::{pless_check, LinearCode, WeightEnumerator};
use constacode::polyring::Poly;
use num_bigint::BigUint;
use proptest::prelude::*;

const FIELDS: &[(u64, usize)] = &[(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (2, 4), (5, 2)];

fn field(i: usize) -> Arc<FieldCtx> {
    let (p, m) = FIELDS[i % FIELDS.len()];
    FieldCtx::default_field(p, m).unwrap()
}

fn elem(f: &FieldCtx, v: u64) -> FElem {
    FElem(v % f.order())
}

/// A random code of length ≤ 7 over a small field, from up to 4 random rows.
fn small_code() -> impl Strategy<Value = LinearCode> {
    (0..FIELDS.len(), 1usize..=7, 1usize..=4, prop::collection::vec(any::<u64>(), 28)).prop_map(|(fi, n, k, raw)| {
        let f = field(fi);
        let rows: Vec<Vec<FElem>> = (0..k).map(|i| (0..n).map(|j| elem(&f, raw[i * 7 + j])).collect()).collect();
        LinearCode::from_rows(f, n, &rows)
    })
}

fn small_enumerator() -> impl Strategy<Value = WeightEnumerator> {
    (1usize..6, prop::collection::vec(0u64..50, 6)).prop_map(|(n, c)| {
        let terms: Vec<(usize, u64)> = std::iter::once((0, 1)).chain((1..=n).map(|w| (w, c[w - 1]))).collect();
        WeightEnumerator::from_u64(n, &terms)
    })
}

proptest! {
    #[test]
    fn field_axioms(fi in 0..FIELDS.len(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = field(fi);
        let (a, b, c) = (elem(&f, a), elem(&f, b), elem(&f, c));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), FElem::ZERO);
        prop_assert_eq!(f.sub(f.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), FElem::ONE);
            prop_assert_eq!(f.pow(a, (f.order() - 1) as u128), FElem::ONE);
        }
        prop_assert_eq!(f.frobenius(f.mul(a, b), 1), f.mul(f.frobenius(a, 1), f.frobenius(b, 1)));
    }

    #[test]
    fn untabled_field_axioms(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let f = FieldCtx::default_field(2, 27).unwrap();
        prop_assert!(!f.has_tables());
        let (a, b, c) = (elem(&f, a), elem(&f, b), elem(&f, c));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), FElem::ONE);
            let k = f.log(a).unwrap();
            prop_assert_eq!(f.pow(f.generator(), k as u128), a);
        }
    }

    #[test]
    fn code_dimension_and_size(code in small_code()) {
        let w = code.weight_distribution(1 << 20).unwrap();
        let q = code.q();
        prop_assert_eq!(w.total(), BigUint::from(q).pow(code.dimension() as u32));
        prop_assert_eq!(w.count(0), BigUint::from(1u32));
        prop_assert_eq!(code.dual().dimension(), code.length() - code.dimension());
        prop_assert!(code.dual().dual().same_code(&code));
        for i in 0..code.generator().rows() {
            prop_assert!(code.contains(code.generator().row(i)));
        }
    }

    #[test]
    fn rref_equality_agrees_with_enumeration(a in small_code(), seed in any::<u64>()) {
        let n = a.length();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let b = a.permuted(&perm).unwrap();
        prop_assert_eq!(a.same_code(&b), a.same_code_by_enumeration(&b, 1 << 20).unwrap());
        prop_assert_eq!(a.weight_distribution(1 << 20).unwrap(), b.weight_distribution(1 << 20).unwrap());
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        prop_assert!(b.permuted(&inv).unwrap().same_code(&a));
    }

    #[test]
    fn macwilliams_matches_dual(code in small_code()) {
        let (n, k, q) = (code.length(), code.dimension(), code.q());
        prop_assume!(BigUint::from(q).pow((n - k) as u32) <= BigUint::from(1u32 << 16));
        let w = code.weight_distribution(1 << 20).unwrap();
        let wd = code.dual().weight_distribution(1 << 20).unwrap();
        prop_assert_eq!(&w.macwilliams(k, q).unwrap(), &wd);
        prop_assert_eq!(&wd.macwilliams(n - k, q).unwrap(), &w);
        let [a, b, c] = [wd.count(1), wd.count(2), wd.count(3)];
        prop_assert!(pless_check(&w, [&a, &b, &c], k, q).all());
    }

    #[test]
    fn enumerator_algebra(a in small_enumerator(), b in small_enumerator(), r in 1usize..4, k in 0usize..4) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).substitute_power(r), a.substitute_power(r).mul(&b.substitute_power(r)));
        prop_assert_eq!(a.pow(k).pow(2), a.pow(2 * k));
        prop_assert_eq!(a.pow(k).length(), k * a.length());
        prop_assert_eq!(a.mul(&b).total(), a.total() * b.total());
        prop_assert_eq!(a.substitute_power(r).length(), r * a.length());
    }

    #[test]
    fn poly_division(fi in 0..FIELDS.len(), a in prop::collection::vec(any::<u64>(), 1..10), b in prop::collection::vec(any::<u64>(), 1..6)) {
        let f = field(fi);
        let pa = Poly::new(f.clone(), a.iter().map(|&v| elem(&f, v)).collect());
        let pb = Poly::new(f.clone(), b.iter().map(|&v| elem(&f, v)).collect());
        prop_assume!(!pb.is_zero());
        let (quo, rem) = pa.div_rem(&pb).unwrap();
        prop_assert_eq!(quo.mul(&pb).unwrap().add(&rem).unwrap(), pa.clone());
        prop_assert!(rem.is_zero() || rem.degree() < pb.degree());
        let g = pa.gcd(&pb).unwrap();
        prop_assert!(pa.rem(&g).unwrap().is_zero() && pb.rem(&g).unwrap().is_zero());
    }
}
