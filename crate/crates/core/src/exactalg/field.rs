//! Arithmetic in GF(p^e).
//!
//! Elements are encoded as integers in `[0, q)`: the coefficient vector of the
//! polynomial representative, constant term in the least significant base-p digit.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactalg::counting::{is_prime, prime_factors};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 20;
const LOG_TABLE_LIMIT: u32 = 512;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub const fn from_raw(v: u32) -> Self {
        FieldElement(v)
    }

    pub const fn value(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
    add: Option<Vec<u32>>,
}

struct Inner {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: u32,
    tables: Option<Tables>,
}

/// A finite field handle; cloning is cheap.
#[derive(Clone)]
pub struct FiniteField {
    inner: Arc<Inner>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.inner.p, self.inner.e)
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.inner.p == other.inner.p && self.inner.e == other.inner.e
    }
}

impl Eq for FiniteField {}

/// Builds GF(p^e) with the lexicographically least monic irreducible modulus,
/// comparing coefficient vectors from the constant term upward.
pub fn make_field(p: u32, e: u32) -> Result<FiniteField> {
    if !is_prime(p as u64) {
        return Err(Error::NotPrime(p as u64));
    }
    if e == 0 {
        return Err(Error::OutOfRange("extension degree must be positive".into()));
    }
    let q = (p as u64).checked_pow(e).filter(|&q| q <= MAX_ORDER).ok_or_else(|| {
        Error::TooLarge {
            what: format!("field order {p}^{e}"),
            limit: MAX_ORDER,
        }
    })? as u32;
    let modulus = least_irreducible(p, e);
    let mut inner = Inner {
        p,
        e,
        q,
        modulus,
        generator: 0,
        tables: None,
    };
    inner.generator = find_generator(&inner);
    if q <= LOG_TABLE_LIMIT {
        inner.tables = Some(build_tables(&inner));
    }
    Ok(FiniteField {
        inner: Arc::new(inner),
    })
}

/// Builds GF(q) for a prime power q.
pub fn field_of_order(q: u32) -> Result<FiniteField> {
    let (p, e) = crate::exactalg::counting::prime_power(q as u64).ok_or(Error::NotPrimePower(q as u64))?;
    make_field(p as u32, e)
}

fn to_digits(mut v: u32, p: u32, e: u32) -> Vec<u32> {
    let mut out = vec![0; e as usize];
    for d in out.iter_mut() {
        *d = v % p;
        v /= p;
    }
    out
}

fn from_digits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of `a` modulo the monic polynomial `m`, coefficients mod p.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                let t = (lead as u64 * c as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - t) % p;
            }
        }
        r.pop();
    }
    r
}

fn least_irreducible(p: u32, e: u32) -> Vec<u32> {
    if e == 1 {
        return vec![0, 1];
    }
    let count = (p as u64).pow(e);
    for code in 0..count {
        let mut cand = to_digits(code as u32, p, e);
        cand.push(1);
        if is_irreducible(&cand, p) {
            return cand;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    if f[0] == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut g = to_digits(code as u32, p, d as u32);
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn raw_mul(inner: &Inner, a: u32, b: u32) -> u32 {
    let (p, e) = (inner.p, inner.e);
    if e == 1 {
        return (a as u64 * b as u64 % p as u64) as u32;
    }
    let da = to_digits(a, p, e);
    let db = to_digits(b, p, e);
    let mut prod = vec![0u32; 2 * e as usize - 1];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
        }
    }
    from_digits(&poly_rem(&prod, &inner.modulus, p), p)
}

fn raw_add(p: u32, e: u32, a: u32, b: u32) -> u32 {
    if p == 2 {
        return a ^ b;
    }
    if e == 1 {
        return (a + b) % p;
    }
    let (mut a, mut b, mut out, mut place) = (a, b, 0u32, 1u32);
    for _ in 0..e {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

fn raw_pow(inner: &Inner, mut a: u32, mut n: u64) -> u32 {
    let mut acc = 1;
    while n > 0 {
        if n & 1 == 1 {
            acc = raw_mul(inner, acc, a);
        }
        a = raw_mul(inner, a, a);
        n >>= 1;
    }
    acc
}

fn find_generator(inner: &Inner) -> u32 {
    let order = inner.q as u64 - 1;
    if order == 1 {
        return 1;
    }
    let factors = prime_factors(order);
    (2..inner.q)
        .find(|&g| factors.iter().all(|&r| raw_pow(inner, g, order / r) != 1))
        .expect("multiplicative group is cyclic")
}

fn build_tables(inner: &Inner) -> Tables {
    let q = inner.q as usize;
    let mut exp = vec![0u32; 2 * (q - 1).max(1)];
    let mut log = vec![0u32; q];
    let mut x = 1u32;
    for i in 0..q - 1 {
        exp[i] = x;
        log[x as usize] = i as u32;
        x = raw_mul(inner, x, inner.generator);
    }
    for i in q - 1..exp.len() {
        exp[i] = exp[i - (q - 1)];
    }
    let add = (inner.p != 2 && inner.e > 1).then(|| {
        let mut t = vec![0u32; q * q];
        for a in 0..q {
            for b in 0..q {
                t[a * q + b] = raw_add(inner.p, inner.e, a as u32, b as u32);
            }
        }
        t
    });
    Tables { exp, log, add }
}

impl FiniteField {
    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.e
    }

    pub fn order(&self) -> u32 {
        self.inner.q
    }

    /// Modulus coefficients, constant term first; monic of degree e.
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    /// Least element (by encoding) generating the multiplicative group.
    pub fn generator(&self) -> FieldElement {
        FieldElement(self.inner.generator)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.inner.q).map(FieldElement)
    }

    pub fn element(&self, v: u32) -> FieldElement {
        assert!(v < self.inner.q, "encoding {v} out of range for GF({})", self.inner.q);
        FieldElement(v)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, v: i64) -> FieldElement {
        FieldElement(v.rem_euclid(self.inner.p as i64) as u32)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let inner = &*self.inner;
        if inner.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if inner.e == 1 {
            let s = a.0 + b.0;
            return FieldElement(if s >= inner.p { s - inner.p } else { s });
        }
        match inner.tables.as_ref().and_then(|t| t.add.as_ref()) {
            Some(t) => FieldElement(t[(a.0 * inner.q + b.0) as usize]),
            None => FieldElement(raw_add(inner.p, inner.e, a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let inner = &*self.inner;
        if inner.p == 2 || a.0 == 0 {
            return a;
        }
        if inner.e == 1 {
            return FieldElement(inner.p - a.0);
        }
        let mut digits = to_digits(a.0, inner.p, inner.e);
        for d in digits.iter_mut() {
            *d = (inner.p - *d) % inner.p;
        }
        FieldElement(from_digits(&digits, inner.p))
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        match &self.inner.tables {
            Some(t) => FieldElement(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
            None => FieldElement(raw_mul(&self.inner, a.0, b.0)),
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        assert!(!a.is_zero(), "zero has no inverse");
        let q = self.inner.q;
        match &self.inner.tables {
            Some(t) if q > 2 => {
                let l = t.log[a.0 as usize];
                FieldElement(t.exp[((q - 1 - l) % (q - 1)) as usize])
            }
            _ => self.pow(a, q as u64 - 2),
        }
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: FieldElement, n: u64) -> FieldElement {
        FieldElement(raw_pow(&self.inner, a.0, n))
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElement) -> u64 {
        assert!(!a.is_zero());
        let n = self.inner.q as u64 - 1;
        let mut order = n;
        for r in prime_factors(n) {
            while order.is_multiple_of(r) && self.pow(a, order / r) == FieldElement::ONE {
                order /= r;
            }
        }
        order
    }

    /// Images of every element of `sub` under the canonical embedding into `self`:
    /// the generator of `sub`'s polynomial basis goes to the least root of its modulus.
    pub fn embedding_of(&self, sub: &FiniteField) -> Result<Vec<FieldElement>> {
        if sub.characteristic() != self.characteristic() || !self.degree().is_multiple_of(sub.degree()) {
            return Err(Error::OutOfRange(format!("{sub:?} is not a subfield of {self:?}")));
        }
        let m = sub.modulus();
        let root = self
            .elements()
            .find(|&x| {
                let mut acc = FieldElement::ZERO;
                for &c in m.iter().rev() {
                    acc = self.add(self.mul(acc, x), FieldElement(c));
                }
                acc.is_zero()
            })
            .expect("subfield modulus splits in the extension");
        let p = sub.characteristic();
        let e = sub.degree();
        Ok(sub
            .elements()
            .map(|a| {
                let digits = to_digits(a.0, p, e);
                let mut acc = FieldElement::ZERO;
                for &c in digits.iter().rev() {
                    acc = self.add(self.mul(acc, root), FieldElement(c));
                }
                acc
            })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf3_two_squared_is_one() {
        let f = make_field(3, 1).unwrap();
        assert_eq!(f.mul(f.element(2), f.element(2)), FieldElement::ONE);
    }

    #[test]
    fn gf4_modulus_and_square_of_x() {
        let f = make_field(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        // x = 0b10, x + 1 = 0b11
        assert_eq!(f.mul(f.element(2), f.element(2)), f.element(3));
    }

    #[test]
    fn gf7_group_order_six() {
        let f = make_field(7, 1).unwrap();
        assert_eq!(f.multiplicative_order(f.generator()), 6);
    }

    #[test]
    fn gf9_uses_x_squared_plus_one() {
        let f = make_field(3, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
        assert_eq!(f.multiplicative_order(f.generator()), 8);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(make_field(6, 1).unwrap_err(), Error::NotPrime(6));
        assert!(matches!(make_field(2, 21), Err(Error::TooLarge { .. })));
        assert!(make_field(2, 20).is_ok());
    }

    #[test]
    fn large_field_without_tables_agrees_with_pow() {
        let f = make_field(2, 10).unwrap();
        let g = f.generator();
        assert_eq!(f.multiplicative_order(g), 1023);
        let a = f.element(517);
        assert_eq!(f.mul(a, f.inv(a)), FieldElement::ONE);
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        let small = make_field(2, 2).unwrap();
        let big = make_field(2, 4).unwrap();
        let map = big.embedding_of(&small).unwrap();
        for a in small.elements() {
            for b in small.elements() {
                let (ia, ib) = (map[a.value() as usize], map[b.value() as usize]);
                assert_eq!(map[small.add(a, b).value() as usize], big.add(ia, ib));
                assert_eq!(map[small.mul(a, b).value() as usize], big.mul(ia, ib));
            }
        }
        assert!(big.embedding_of(&make_field(2, 3).unwrap()).is_err());
    }
}
