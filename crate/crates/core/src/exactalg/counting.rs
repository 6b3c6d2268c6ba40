use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `Some((p, e))` when `q = p^e` with p prime and e ≥ 1.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let f = prime_factors(q);
    if f.len() != 1 {
        return None;
    }
    let p = f[0];
    let (mut e, mut r) = (0, q);
    while r > 1 {
        r /= p;
        e += 1;
    }
    Some((p, e))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Number of k-dimensional subspaces of GF(q)^n.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> Result<BigInt> {
    if k > n {
        return Err(Error::OutOfRange(format!("k = {k} exceeds n = {n}")));
    }
    if q < 2 {
        return Err(Error::OutOfRange(format!("q = {q} must be at least 2")));
    }
    let q = BigInt::from(q);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= num_traits::pow(q.clone(), (n - i) as usize) - 1;
        den *= num_traits::pow(q.clone(), (i + 1) as usize) - 1;
    }
    Ok(num / den)
}

/// Π_{i<r} (z − q^i).
pub fn q_falling(z: &BigInt, q: u64, r: usize) -> BigInt {
    let q = BigInt::from(q);
    let mut acc = BigInt::one();
    let mut qi = BigInt::one();
    for _ in 0..r {
        acc *= z - &qi;
        qi *= &q;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn gaussian_binomial_examples() {
        assert_eq!(gaussian_binomial(5, 0, 3).unwrap(), BigInt::one());
        assert_eq!(gaussian_binomial(4, 2, 2).unwrap(), BigInt::from(6 + 16 + 13));
        assert!(gaussian_binomial(2, 3, 2).is_err());
        assert!(gaussian_binomial(2, 1, 1).is_err());
    }

    #[test]
    fn gaussian_binomial_counts_lines_by_brute_force() {
        // 1-dim subspaces of GF(2)^6 are the nonzero vectors
        let lines = (1u32..64).count();
        assert_eq!(gaussian_binomial(6, 1, 2).unwrap(), BigInt::from(lines));
    }

    #[test]
    fn falling_product_vanishes_at_low_powers() {
        assert!(q_falling(&BigInt::from(9), 3, 3).is_zero());
        assert_eq!(q_falling(&BigInt::from(27), 3, 2), BigInt::from(26 * 24));
    }
}
