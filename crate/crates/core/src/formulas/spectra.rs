//! Higher weight spectra in closed form.

use num_bigint::BigInt;

use crate::codes::SpectrumTable;
use crate::error::Result;
use crate::exactalg::gaussian_binomial;

use super::{qpoly, require_prime_power};

/// Weight q² + a·q + b.
type Offset = (i64, i64);

/// (weight, r, numerator terms (exponent, coefficient), denominator), valid for q ≥ 7.
type Entry = (Offset, usize, &'static [(u32, i64)], i64);

const GENERIC: &[Entry] = &[
    ((-2, 0), 1, &[(3, 1), (1, -1)], 2),
    ((-2, 1), 1, &[(4, 1), (3, 1)], 2),
    ((-1, -1), 1, &[(5, 1), (4, -2), (3, 1)], 2),
    ((-1, -1), 2, &[(4, 1), (2, -1)], 1),
    ((-1, 0), 1, &[(4, 1), (2, 1), (1, 2)], 1),
    ((-1, 0), 2, &[(3, 2), (2, 3), (1, 1)], 1),
    ((-1, 0), 3, &[(2, 1), (1, 1)], 1),
    ((-1, 1), 1, &[(5, 1), (3, -1)], 2),
    ((0, -4), 2, &[(8, 1), (7, -4), (6, 5), (5, 1), (4, -6), (3, 3)], 24),
    ((0, -3), 2, &[(7, 4), (6, -9), (5, 1), (4, 9), (3, -5)], 6),
    ((0, -3), 3, &[(6, 1), (5, -1), (4, -1), (3, 1)], 6),
    ((0, -2), 2, &[(8, 1), (7, -2), (6, 13), (5, -9), (4, -14), (3, 11)], 4),
    ((0, -2), 3, &[(7, 1), (5, 1), (3, -2)], 2),
    ((0, -2), 4, &[(4, 1), (2, -1)], 2),
    ((0, -1), 1, &[(4, 1), (3, -1)], 2),
    ((0, -1), 2, &[(8, 2), (7, 4), (6, -5), (5, 29), (4, 15), (3, -27), (2, 6)], 6),
    ((0, -1), 3, &[(8, 2), (6, 3), (5, 3), (4, 5), (3, 3)], 2),
    ((0, -1), 4, &[(6, 1), (5, 1), (3, 1), (2, 2)], 1),
    ((0, -1), 5, &[(2, 1)], 1),
    ((0, 0), 1, &[(3, 1), (1, -1), (0, 2)], 2),
    ((0, 0), 2, &[(8, 9), (7, 8), (6, 21), (5, -19), (4, 42), (3, 59), (2, -24), (0, 24)], 24),
    ((0, 0), 3, &[(9, 6), (7, 9), (6, 8), (5, 7), (4, 4), (3, 14), (2, 6), (0, 6)], 6),
    ((0, 0), 4, &[(8, 2), (7, 2), (6, 2), (5, 2), (4, 5), (3, 2), (2, 1), (1, 2), (0, 2)], 2),
    ((0, 0), 5, &[(5, 1), (4, 1), (3, 1), (1, 1), (0, 1)], 1),
    ((0, 0), 6, &[(0, 1)], 1),
];

/// Weights whose whole column is replaced for small q: (q, w, [(r, A)]).
const OVERRIDES: &[(u32, usize, &[(usize, i64)])] = &[
    (5, 21, &[(1, 1500), (2, 6500)]),
    (4, 12, &[(1, 280), (2, 1020), (3, 20)]),
    (4, 13, &[(1, 480), (2, 5280), (3, 480)]),
    (3, 5, &[(1, 54), (2, 126)]),
    (3, 6, &[(1, 96), (2, 588), (3, 84)]),
    (3, 7, &[(1, 108), (2, 2160), (3, 1188)]),
];

/// Entry of a replaced column whose printed value disagrees with exhaustive enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpectrumErratum {
    pub q: u32,
    pub w: usize,
    pub r: usize,
    pub printed: i64,
    pub corrected: i64,
}

/// A^(4)_{q²−2} = C(q², 2) also holds at q = 3; the printed column lists it as zero.
pub const SPECTRUM_ERRATA: &[SpectrumErratum] = &[SpectrumErratum {
    q: 3,
    w: 7,
    r: 4,
    printed: 0,
    corrected: 36,
}];

/// The spectra of RM_2(2,2) = GF(2)^4: (r, w, A).
const BINARY: &[(usize, usize, i64)] = &[
    (1, 1, 4),
    (1, 2, 6),
    (1, 3, 4),
    (1, 4, 1),
    (2, 2, 6),
    (2, 3, 16),
    (2, 4, 13),
    (3, 3, 4),
    (3, 4, 11),
    (4, 4, 1),
];

fn weight(q: u32, (a, b): Offset) -> usize {
    let q = q as i64;
    (q * q + a * q + b) as usize
}

/// Every A_w^(r) of RM_q(2,2); entries not listed are zero.
pub fn fallq_spectra(q: u32) -> Result<SpectrumTable> {
    require_prime_power(q)?;
    let n = (q * q) as usize;
    if q == 2 {
        let mut t = SpectrumTable::new(2, 4, 4);
        t.set(0, 0, BigInt::from(1));
        for &(r, w, a) in BINARY {
            t.set(r, w, BigInt::from(a));
        }
        return Ok(t);
    }
    let mut t = SpectrumTable::new(q, 6, n);
    t.set(0, 0, BigInt::from(1));
    for &(off, r, terms, den) in GENERIC {
        let w = weight(q, off);
        let v = t.get(r, w) + qpoly(q as u64, terms, den);
        t.set(r, w, v);
    }
    for &(_, w, column) in OVERRIDES.iter().filter(|o| o.0 == q) {
        for r in 0..=6 {
            t.set(r, w, BigInt::from(0));
        }
        for &(r, a) in column {
            t.set(r, w, BigInt::from(a));
        }
    }
    for e in SPECTRUM_ERRATA.iter().filter(|e| e.q == q) {
        t.set(e.r, e.w, BigInt::from(e.corrected));
    }
    Ok(t)
}

/// Spectra of RM_q(1,m): A_{q^m−q^{m−i}}^(i) = q^i [m,i]_q for 1 ≤ i ≤ m and
/// A_{q^m}^(i) = [m,i−1]_q for 1 ≤ i ≤ m+1.
pub fn rm1m_spectra(q: u32, m: u32) -> Result<SpectrumTable> {
    require_prime_power(q)?;
    let qm = (q as usize).pow(m);
    let k = m as usize + 1;
    let mut t = SpectrumTable::new(q, k, qm);
    t.set(0, 0, BigInt::from(1));
    for i in 1..=m {
        let w = qm - (q as usize).pow(m - i);
        let a = num_traits::pow(BigInt::from(q), i as usize) * gaussian_binomial(m, i, q as u64)?;
        t.set(i as usize, w, a);
    }
    for i in 1..=m + 1 {
        let v = t.get(i as usize, qm) + gaussian_binomial(m, i - 1, q as u64)?;
        t.set(i as usize, qm, v);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn spot_values() {
        assert_eq!(fallq_spectra(7).unwrap().get(6, 49), b(1));
        assert_eq!(fallq_spectra(4).unwrap().get(2, 13), b(5280));
        assert_eq!(fallq_spectra(3).unwrap().get(3, 6), b(84));
        assert_eq!(fallq_spectra(2).unwrap().get(2, 4), b(13));
        assert_eq!(fallq_spectra(5).unwrap().get(1, 15), b(60));
        assert_eq!(fallq_spectra(6).unwrap_err(), Error::NotPrimePower(6));
    }

    #[test]
    fn q3_erratum_restores_the_generic_value() {
        let t = fallq_spectra(3).unwrap();
        assert_eq!(t.get(4, 7), crate::exactalg::binomial(9, 2));
        assert_eq!(t.get(3, 7), b(1188));
    }

    #[test]
    fn row_sums_are_gaussian_binomials() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            assert!(fallq_spectra(q).unwrap().row_sums_are_gaussian(), "q = {q}");
        }
    }

    #[test]
    fn small_q_columns_away_from_collisions_follow_the_generic_formulas() {
        // q = 5, w = 24 = q² − 1 is not overridden
        let t = fallq_spectra(5).unwrap();
        assert_eq!(t.get(5, 24), b(25));
        assert_eq!(t.get(1, 24), b((625 - 125) / 2));
    }

    #[test]
    fn rm1m_examples() {
        let t = rm1m_spectra(2, 2).unwrap();
        assert_eq!(t.get(3, 4), b(1));
        assert_eq!(t.get(2, 4), b(3));
        assert_eq!(rm1m_spectra(2, 3).unwrap().get(3, 8), b(7));
        assert_eq!(t.get(0, 0), b(1));
        assert_eq!(t.get(1, 2), b(6));
        for (q, m) in [(2, 2), (3, 2), (2, 3), (5, 3)] {
            assert!(rm1m_spectra(q, m).unwrap().row_sums_are_gaussian(), "q={q} m={m}");
        }
    }
}
