//! Finite fields GF(p^s) in a polynomial basis over the prime field.
//!
//! An element is stored as its index: the coefficient vector of its
//! polynomial-basis representation read as base-p digits, little-endian.
//! Index 0 is zero and index 1 is one. Fields of order at most 2^26 whose
//! defining polynomial is primitive (or prime fields) carry log/antilog
//! tables; larger fields multiply polynomials and reduce.
//!
//! Every larger field used by the crate is built over its prime field, and a
//! smaller field GF(q) is attached to it through an [`Extension`], which
//! embeds GF(q) into the subfield of the same order.

mod extension;
pub mod prime_poly;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

pub use extension::Extension;

use crate::nt;
use crate::{Error, Result};

const TABLE_LIMIT: u64 = 1 << 26;
const MAX_ORDER: u64 = 1 << 40;
const MAX_DEGREE: usize = 40;
const ADD_TABLE_LIMIT: u64 = 256;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FElem(pub u64);

impl FElem {
    pub const ZERO: FElem = FElem(0);
    pub const ONE: FElem = FElem(1);

    pub fn index(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    log: Vec<u32>,
    exp: Vec<u32>,
}

/// An immutable finite field context.
#[derive(Clone)]
pub struct FieldCtx {
    p: u64,
    degree: usize,
    order: u64,
    modulus: Vec<u64>,
    generator: FElem,
    /// Index of the element the tables are built on.
    table_base: FElem,
    pow_p: Vec<u64>,
    unit_factors: Vec<u64>,
    /// `reduce_top[t]` is the index of `t * (modulus - x^degree)`.
    reduce_top: Vec<u64>,
    tables: Option<Arc<Tables>>,
    add_table: Option<Arc<Vec<u32>>>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("degree", &self.degree)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator)
            .field("tables", &self.tables.is_some())
            .finish()
    }
}

type Digits = [u64; MAX_DEGREE];

impl FieldCtx {
    /// Builds GF(p^degree).
    ///
    /// Without `defining_poly` the lexicographically smallest monic primitive
    /// polynomial is used, ordering candidates by the index of their
    /// lower coefficients. A supplied polynomial must be monic of degree
    /// `degree` and irreducible. The designated generator is the smallest
    /// index of multiplicative order `p^degree - 1`.
    pub fn new(p: u64, degree: usize, defining_poly: Option<&[u64]>) -> Result<Arc<Self>> {
        if !nt::is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if degree == 0 {
            return Err(Error::InvalidPolynomial("extension degree must be positive".into()));
        }
        let order = checked_order(p, degree)?;
        let modulus = match defining_poly {
            Some(f) => {
                let f = prime_poly::trim(f.to_vec());
                if f.len() != degree + 1 || f[degree] != 1 {
                    return Err(Error::InvalidPolynomial(format!(
                        "defining polynomial must be monic of degree {degree}"
                    )));
                }
                if f.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidPolynomial(format!("coefficients must lie in [0, {p})")));
                }
                if !prime_poly::is_irreducible(&f, p) {
                    return Err(Error::ReduciblePolynomial { p });
                }
                f
            }
            None => default_modulus(p, degree)?,
        };
        let mut ctx = Self::raw(p, degree, order, modulus);
        ctx.generator = ctx.smallest_primitive();
        ctx.build_tables();
        Ok(Arc::new(ctx))
    }

    /// Shared default field GF(p^degree), built once per process.
    pub fn default_field(p: u64, degree: usize) -> Result<Arc<Self>> {
        static CACHE: OnceLock<Mutex<HashMap<(u64, usize), Arc<FieldCtx>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(f) = cache.lock().unwrap().get(&(p, degree)) {
            return Ok(f.clone());
        }
        let f = Self::new(p, degree, None)?;
        cache.lock().unwrap().insert((p, degree), f.clone());
        Ok(f)
    }

    /// The same field with a different designated primitive element.
    pub fn with_generator(&self, g: FElem) -> Result<Arc<Self>> {
        if g.0 >= self.order || g.is_zero() || self.element_order(g)? != self.order - 1 {
            return Err(Error::PreconditionViolated(format!("{} is not a primitive element", g.0)));
        }
        let mut ctx = self.clone();
        ctx.generator = g;
        Ok(Arc::new(ctx))
    }

    fn raw(p: u64, degree: usize, order: u64, modulus: Vec<u64>) -> Self {
        let mut pow_p = Vec::with_capacity(degree + 1);
        let mut acc = 1u64;
        for _ in 0..=degree {
            pow_p.push(acc);
            acc = acc.saturating_mul(p);
        }
        let mut ctx = FieldCtx {
            p,
            degree,
            order,
            modulus,
            generator: FElem::ONE,
            table_base: FElem::ONE,
            pow_p,
            unit_factors: nt::prime_factors(order - 1),
            reduce_top: Vec::new(),
            tables: None,
            add_table: None,
        };
        if degree > 1 && p != 2 {
            ctx.reduce_top = (0..p)
                .map(|t| {
                    let mut idx = 0u64;
                    for i in (0..degree).rev() {
                        idx = idx * p + t * ctx.modulus[i] % p;
                    }
                    idx
                })
                .collect();
        }
        if order <= ADD_TABLE_LIMIT && p != 2 && degree > 1 {
            let mut t = vec![0u32; (order * order) as usize];
            for a in 0..order {
                for b in 0..order {
                    t[(a * order + b) as usize] = ctx.add_digits(a, b) as u32;
                }
            }
            ctx.add_table = Some(Arc::new(t));
        }
        ctx
    }

    fn smallest_primitive(&self) -> FElem {
        if self.order == 2 {
            return FElem::ONE;
        }
        // For degree > 1 every index below p is a prime-field element, and
        // x (index p) is primitive whenever the modulus is.
        let start = if self.degree > 1 { self.p } else { 2 };
        (start..self.order)
            .map(FElem)
            .find(|&x| self.is_primitive(x))
            .expect("a finite field has a primitive element")
    }

    fn is_primitive(&self, x: FElem) -> bool {
        if x.is_zero() {
            return false;
        }
        let m = self.order - 1;
        self.unit_factors.iter().all(|&f| self.pow_slow(x, (m / f) as u128) != FElem::ONE)
    }

    fn build_tables(&mut self) {
        if self.order > TABLE_LIMIT {
            return;
        }
        let base = if self.degree == 1 { self.generator } else { FElem(self.p) };
        if self.degree > 1 && !self.is_primitive(base) {
            return;
        }
        let m = (self.order - 1) as usize;
        let mut exp = vec![0u32; m];
        let mut log = vec![0u32; self.order as usize];
        let mut cur = FElem::ONE;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = cur.0 as u32;
            log[cur.0 as usize] = i as u32;
            cur = if self.degree == 1 {
                FElem(cur.0 * base.0 % self.p)
            } else {
                self.mul_by_x(cur)
            };
        }
        self.table_base = base;
        self.tables = Some(Arc::new(Tables { log, exp }));
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Monic defining polynomial over GF(p), ascending coefficients.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn generator(&self) -> FElem {
        self.generator
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    /// Structural equality: same characteristic and defining polynomial.
    pub fn same_field(&self, other: &FieldCtx) -> bool {
        self.p == other.p && self.degree == other.degree && self.modulus == other.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = FElem> {
        (0..self.order).map(FElem)
    }

    /// The class of `x` (index p). Panics on a prime field.
    pub fn x(&self) -> FElem {
        assert!(self.degree > 1, "x is not an element of a prime field representation");
        FElem(self.p)
    }

    /// Embeds a prime-field value.
    pub fn from_int(&self, v: u64) -> FElem {
        FElem(v % self.p)
    }

    fn digits(&self, mut a: u64) -> Digits {
        let mut d = [0u64; MAX_DEGREE];
        for slot in d.iter_mut().take(self.degree) {
            *slot = a % self.p;
            a /= self.p;
        }
        d
    }

    fn undigits(&self, d: &[u64]) -> u64 {
        let mut idx = 0u64;
        for i in (0..self.degree).rev() {
            idx = idx * self.p + d[i];
        }
        idx
    }

    /// Coefficients of `a` over GF(p), ascending.
    pub fn coefficients(&self, a: FElem) -> Vec<u64> {
        self.digits(a.0)[..self.degree].to_vec()
    }

    fn add_digits(&self, mut a: u64, mut b: u64) -> u64 {
        let p = self.p;
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.degree {
            let mut d = a % p + b % p;
            if d >= p {
                d -= p;
            }
            out += d * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    #[inline]
    pub fn add(&self, a: FElem, b: FElem) -> FElem {
        if self.p == 2 {
            return FElem(a.0 ^ b.0);
        }
        if self.degree == 1 {
            let s = a.0 + b.0;
            return FElem(if s >= self.p { s - self.p } else { s });
        }
        if let Some(t) = &self.add_table {
            return FElem(t[(a.0 * self.order + b.0) as usize] as u64);
        }
        FElem(self.add_digits(a.0, b.0))
    }

    #[inline]
    pub fn neg(&self, a: FElem) -> FElem {
        if self.p == 2 || a.is_zero() {
            return a;
        }
        if self.degree == 1 {
            return FElem(self.p - a.0);
        }
        let mut d = self.digits(a.0);
        for x in d.iter_mut().take(self.degree) {
            *x = (self.p - *x) % self.p;
        }
        FElem(self.undigits(&d))
    }

    #[inline]
    pub fn sub(&self, a: FElem, b: FElem) -> FElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FElem, b: FElem) -> FElem {
        if a.is_zero() || b.is_zero() {
            return FElem::ZERO;
        }
        if let Some(t) = &self.tables {
            let m = t.exp.len();
            let s = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
            return FElem(t.exp[if s >= m { s - m } else { s }] as u64);
        }
        self.mul_poly(a, b)
    }

    fn mul_poly(&self, a: FElem, b: FElem) -> FElem {
        let p = self.p;
        let s = self.degree;
        if s == 1 {
            return FElem((a.0 as u128 * b.0 as u128 % p as u128) as u64);
        }
        if p == 2 {
            let mut prod: u128 = 0;
            let mut bb = b.0;
            let mut shift = 0;
            while bb != 0 {
                if bb & 1 == 1 {
                    prod ^= (a.0 as u128) << shift;
                }
                bb >>= 1;
                shift += 1;
            }
            let modmask = self.undigits_bits();
            for i in (s..2 * s - 1).rev() {
                if (prod >> i) & 1 == 1 {
                    prod ^= modmask << (i - s);
                }
            }
            return FElem(prod as u64);
        }
        let da = self.digits(a.0);
        let db = self.digits(b.0);
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..s {
            if da[i] == 0 {
                continue;
            }
            for j in 0..s {
                prod[i + j] += da[i] * db[j];
            }
            if i % 8 == 7 {
                for c in prod.iter_mut().take(2 * s) {
                    *c %= p;
                }
            }
        }
        for c in prod.iter_mut().take(2 * s) {
            *c %= p;
        }
        for k in (s..2 * s - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for i in 0..s {
                prod[k - s + i] = (prod[k - s + i] + c * (p - self.modulus[i])) % p;
            }
            prod[k] = 0;
        }
        FElem(self.undigits(&prod[..s]))
    }

    fn undigits_bits(&self) -> u128 {
        let mut m: u128 = 0;
        for (i, &c) in self.modulus.iter().enumerate() {
            if c == 1 {
                m |= 1 << i;
            }
        }
        m
    }

    fn mul_by_x(&self, a: FElem) -> FElem {
        let s = self.degree;
        if self.p == 2 {
            let mut t = a.0 << 1;
            if (t >> s) & 1 == 1 {
                t ^= self.undigits_bits() as u64;
            }
            return FElem(t);
        }
        let top_place = self.pow_p[s - 1];
        let top = a.0 / top_place;
        let rest = (a.0 % top_place) * self.p;
        if top == 0 {
            return FElem(rest);
        }
        self.sub(FElem(rest), FElem(self.reduce_top[top as usize]))
    }

    pub fn mul_scalar_int(&self, a: FElem, k: u64) -> FElem {
        self.mul(a, self.from_int(k))
    }

    /// `a^e`; for nonzero `a` the exponent is reduced modulo `q - 1`.
    pub fn pow(&self, a: FElem, e: u128) -> FElem {
        if e == 0 {
            return FElem::ONE;
        }
        if a.is_zero() {
            return FElem::ZERO;
        }
        let m = (self.order - 1) as u128;
        if let Some(t) = &self.tables {
            let l = t.log[a.0 as usize] as u128 * (e % m) % m;
            return FElem(t.exp[l as usize] as u64);
        }
        self.pow_slow(a, e % m)
    }

    fn pow_slow(&self, a: FElem, mut e: u128) -> FElem {
        let mut acc = FElem::ONE;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_poly(acc, b);
            }
            b = self.mul_poly(b, b);
            e >>= 1;
        }
        acc
    }

    /// Signed exponent, `a^(-k)` for negative `k`.
    pub fn pow_signed(&self, a: FElem, e: i128) -> Result<FElem> {
        if e >= 0 {
            return Ok(self.pow(a, e as u128));
        }
        let inv = self.inv(a)?;
        Ok(self.pow(inv, e.unsigned_abs()))
    }

    pub fn inv(&self, a: FElem) -> Result<FElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(t) = &self.tables {
            let m = t.exp.len();
            let l = t.log[a.0 as usize] as usize;
            return Ok(FElem(t.exp[(m - l) % m] as u64));
        }
        Ok(self.pow_slow(a, (self.order - 2) as u128))
    }

    pub fn div(&self, a: FElem, b: FElem) -> Result<FElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Least `t >= 1` with `x^t = 1`.
    pub fn element_order(&self, x: FElem) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        let mut t = self.order - 1;
        for &f in &self.unit_factors {
            while t % f == 0 && self.pow(x, (t / f) as u128) == FElem::ONE {
                t /= f;
            }
        }
        Ok(t)
    }

    /// `x^(p^k)`.
    pub fn frobenius(&self, x: FElem, k: usize) -> FElem {
        let k = k % self.degree;
        if k == 0 || x.is_zero() {
            return x;
        }
        self.pow(x, self.pow_p[k] as u128)
    }

    /// Trace onto the subfield GF(p^sub_degree): `x + x^Q + ... ` with
    /// `Q = p^sub_degree`.
    pub fn trace(&self, x: FElem, sub_degree: usize) -> Result<FElem> {
        if sub_degree == 0 || self.degree % sub_degree != 0 {
            return Err(Error::IncompatibleSubfield { sub: sub_degree, ext: self.degree });
        }
        let mut acc = FElem::ZERO;
        let mut y = x;
        for _ in 0..self.degree / sub_degree {
            acc = self.add(acc, y);
            y = self.frobenius(y, sub_degree);
        }
        Ok(acc)
    }

    pub fn in_subfield(&self, x: FElem, sub_degree: usize) -> bool {
        self.frobenius(x, sub_degree) == x
    }

    /// A primitive element of the subfield GF(p^sub_degree).
    pub fn subfield_generator(&self, sub_degree: usize) -> Result<FElem> {
        if sub_degree == 0 || self.degree % sub_degree != 0 {
            return Err(Error::IncompatibleSubfield { sub: sub_degree, ext: self.degree });
        }
        let sub_order = self.pow_p[sub_degree] - 1;
        Ok(self.pow(self.generator, ((self.order - 1) / sub_order) as u128))
    }

    /// Discrete logarithm to the designated generator.
    pub fn log(&self, x: FElem) -> Option<u64> {
        if x.is_zero() {
            return None;
        }
        let m = self.order - 1;
        if let Some(t) = &self.tables {
            let lx = t.log[x.0 as usize] as u64;
            if self.generator == self.table_base {
                return Some(lx);
            }
            let lg = t.log[self.generator.0 as usize] as u64;
            let inv = nt::mod_inv(lg, m)?;
            return Some((lx as u128 * inv as u128 % m as u128) as u64);
        }
        // baby-step giant-step
        let step = nt::ceil_sqrt(m).max(1);
        let mut baby = HashMap::with_capacity(step as usize);
        let mut cur = FElem::ONE;
        for j in 0..step {
            baby.entry(cur.0).or_insert(j);
            cur = self.mul(cur, self.generator);
        }
        let giant = self.inv(self.pow(self.generator, step as u128)).ok()?;
        let mut y = x;
        for i in 0..=step {
            if let Some(&j) = baby.get(&y.0) {
                return Some((i * step + j) % m);
            }
            y = self.mul(y, giant);
        }
        None
    }

    /// `"a^k"` when a logarithm exists, `"0"` for zero.
    pub fn format_log(&self, x: FElem) -> String {
        match self.log(x) {
            Some(k) => format!("a^{k}"),
            None => "0".into(),
        }
    }

    /// Parses a decimal index or an `a^k` power of the generator.
    pub fn parse_elem(&self, text: &str) -> Result<FElem> {
        let text = text.trim();
        if let Some(k) = text.strip_prefix("a^") {
            let k: u128 = k
                .parse()
                .map_err(|_| Error::InvalidPolynomial(format!("bad exponent in {text:?}")))?;
            return Ok(self.pow(self.generator, k));
        }
        let v: u64 = text
            .parse()
            .map_err(|_| Error::InvalidPolynomial(format!("bad element {text:?}")))?;
        if v >= self.order {
            return Err(Error::InvalidPolynomial(format!("index {v} not below {}", self.order)));
        }
        Ok(FElem(v))
    }
}

fn checked_order(p: u64, degree: usize) -> Result<u64> {
    if degree > MAX_DEGREE {
        return Err(Error::FieldTooLarge { p, degree });
    }
    let mut order = 1u64;
    for _ in 0..degree {
        order = order.checked_mul(p).ok_or(Error::FieldTooLarge { p, degree })?;
        if order > MAX_ORDER {
            return Err(Error::FieldTooLarge { p, degree });
        }
    }
    Ok(order)
}

fn default_modulus(p: u64, degree: usize) -> Result<Vec<u64>> {
    let order = checked_order(p, degree)?;
    if degree == 1 {
        // x + c with root -c primitive
        let probe = FieldCtx::raw(p, 1, order, vec![0, 1]);
        for c in 0..p {
            let root = FElem((p - c) % p);
            if p == 2 && root == FElem::ONE || p > 2 && probe.is_primitive(root) {
                return Ok(vec![c, 1]);
            }
        }
        return Err(Error::NonPrimitivePolynomialWhenDefaultRequested { p, degree });
    }
    let lower = order;
    for c in 1..lower {
        if c % p == 0 {
            continue;
        }
        let mut f: Vec<u64> = Vec::with_capacity(degree + 1);
        let mut t = c;
        for _ in 0..degree {
            f.push(t % p);
            t /= p;
        }
        f.push(1);
        let probe = FieldCtx::raw(p, degree, order, f.clone());
        let x = FElem(p);
        if probe.pow_slow(x, (order - 1) as u128) != FElem::ONE {
            continue;
        }
        if probe.is_primitive(x) {
            if !prime_poly::is_irreducible(&f, p) {
                return Err(Error::ReduciblePolynomial { p });
            }
            return Ok(f);
        }
    }
    Err(Error::NonPrimitivePolynomialWhenDefaultRequested { p, degree })
}
