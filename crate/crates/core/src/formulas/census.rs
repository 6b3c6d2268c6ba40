//! Counting formulas: conics by class and affine category, the minimal sets of
//! each nullity for RM_q(2,2), and their local Betti numbers.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactalg::binomial;
use crate::geometry::{AffineCategory, ConicClass};

use super::{qpoly, require_prime_power};

/// Complement shapes of the minimal sets of nullity ≥ 2 (q ≥ 7).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// A line and a point off it.
    Theta,
    /// Four points, no three collinear.
    Gamma,
    /// A line.
    Alpha,
    /// Three non-collinear points.
    Delta,
    /// Two points.
    Epsilon,
    /// One point.
    Omega,
    /// The empty set; the family is the ground set itself.
    Whole,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Theta,
        Family::Gamma,
        Family::Alpha,
        Family::Delta,
        Family::Epsilon,
        Family::Omega,
        Family::Whole,
    ];

    pub fn nullity(self) -> usize {
        match self {
            Family::Theta | Family::Gamma => 2,
            Family::Alpha | Family::Delta => 3,
            Family::Epsilon => 4,
            Family::Omega => 5,
            Family::Whole => 6,
        }
    }

    /// Cardinality of the cycle.
    pub fn size(self, q: u32) -> usize {
        let q = q as usize;
        let n = q * q;
        n - match self {
            Family::Theta => q + 1,
            Family::Gamma => 4,
            Family::Alpha => q,
            Family::Delta => 3,
            Family::Epsilon => 2,
            Family::Omega => 1,
            Family::Whole => 0,
        }
    }

    /// Number of cycles of this shape.
    pub fn count(self, q: u32) -> BigInt {
        let qq = q as u64;
        let n = qq * qq;
        match self {
            Family::Theta => BigInt::from((n + qq) * (n - qq)),
            Family::Gamma => qpoly(qq, &[(8, 1), (7, -4), (6, 5), (5, 1), (4, -6), (3, 3)], 24),
            Family::Alpha => BigInt::from(n + qq),
            Family::Delta => qpoly(qq, &[(6, 1), (5, -1), (4, -1), (3, 1)], 6),
            Family::Epsilon => binomial(n, 2),
            Family::Omega => BigInt::from(n),
            Family::Whole => BigInt::from(1),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Family::Theta => "theta",
            Family::Gamma => "gamma",
            Family::Alpha => "alpha",
            Family::Delta => "delta",
            Family::Epsilon => "epsilon",
            Family::Omega => "omega",
            Family::Whole => "E",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Number of conics in P²_q of each projective class.
pub fn conic_class_counts(q: u32) -> Result<BTreeMap<ConicClass, BigInt>> {
    require_prime_power(q)?;
    let q = q as u64;
    Ok(BTreeMap::from([
        (ConicClass::DoubleLine, qpoly(q, &[(2, 1), (1, 1), (0, 1)], 1)),
        (ConicClass::LinePair, qpoly(q, &[(4, 1), (3, 2), (2, 2), (1, 1)], 2)),
        (ConicClass::Irreducible, qpoly(q, &[(5, 1), (2, -1)], 1)),
        (ConicClass::ConjugatePair, qpoly(q, &[(4, 1), (1, -1)], 2)),
    ]))
}

/// Number of conics in each affine category.
pub fn conic_category_counts(q: u32) -> Result<BTreeMap<AffineCategory, BigInt>> {
    require_prime_power(q)?;
    let q = q as u64;
    use AffineCategory::*;
    Ok(BTreeMap::from([
        (A, BigInt::from(1)),
        (B, qpoly(q, &[(2, 1), (1, 1)], 1)),
        (C, qpoly(q, &[(2, 1), (1, 1)], 1)),
        (D, qpoly(q, &[(4, 1), (3, 1)], 2)),
        (E, qpoly(q, &[(3, 1), (1, -1)], 2)),
        (F, qpoly(q, &[(5, 1), (3, -1)], 2)),
        (G, qpoly(q, &[(4, 1), (2, -1)], 1)),
        (H, qpoly(q, &[(5, 1), (4, -2), (3, 1)], 2)),
        (I, qpoly(q, &[(4, 1), (3, -1)], 2)),
        (J, qpoly(q, &[(3, 1), (1, -1)], 2)),
    ]))
}

/// Minimal sets of each nullity of the RM_q(2,2) matroid, q ≥ 7, keyed by
/// (nullity, cardinality). Nullity 1 comes from conic categories e, d, h, g, f.
pub fn rm22_census(q: u32) -> Result<BTreeMap<(usize, usize), BigInt>> {
    require_prime_power(q)?;
    if q < 7 {
        return Err(Error::UnsupportedQ(q));
    }
    let cats = conic_category_counts(q)?;
    let n = (q * q) as usize;
    let mut out = BTreeMap::new();
    use AffineCategory::*;
    for c in [E, D, H, G, F] {
        out.insert((1, n - c.affine_zeros(q)), cats[&c].clone());
    }
    for f in Family::ALL {
        out.insert((f.nullity(), f.size(q)), f.count(q));
    }
    Ok(out)
}

/// Per-family counts (nullity ≥ 2), q ≥ 7.
pub fn rm22_family_counts(q: u32) -> Result<Vec<(Family, BigInt)>> {
    require_prime_power(q)?;
    if q < 7 {
        return Err(Error::UnsupportedQ(q));
    }
    Ok(Family::ALL.iter().map(|&f| (f, f.count(q))).collect())
}

/// β^(ℓ)_{i,σ} for one σ of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalBetti {
    pub ell: usize,
    pub i: usize,
    pub family: Family,
    pub value: BigInt,
}

/// Local Betti numbers of the family members at elongation ℓ ∈ {0, 1, 2}, q ≥ 7.
pub fn local_betti(q: u32, ell: usize) -> Result<Vec<LocalBetti>> {
    require_prime_power(q)?;
    if q < 7 {
        return Err(Error::UnsupportedQ(q));
    }
    use Family::*;
    let table: &[(Family, &[(u32, i64)], i64)] = match ell {
        0 => &[
            (Theta, &[(1, 1)], 1),
            (Gamma, &[(1, 1)], 1),
            (Alpha, &[(3, 1), (2, -2), (1, -1), (0, 2)], 1),
            (Delta, &[(3, 1), (2, -4), (1, 5)], 1),
            (Epsilon, &[(5, 1), (4, -6), (3, 14), (2, -11)], 2),
            (Omega, &[(7, 1), (6, -7), (5, 20), (4, -20), (3, -15), (2, 30), (1, -9)], 6),
            (Whole, &[(9, 1), (8, -8), (7, 29), (6, -51), (5, 18), (4, 59), (3, -60), (1, 36), (0, -24)], 24),
        ],
        1 => &[
            (Theta, &[(0, 1)], 1),
            (Gamma, &[(0, 1)], 1),
            (Alpha, &[(2, 1), (1, -1), (0, -1)], 1),
            (Delta, &[(2, 1), (1, -3), (0, 5)], 1),
            (Epsilon, &[(4, 1), (3, -4), (2, 10), (1, -11)], 2),
            (Omega, &[(6, 1), (5, -4), (4, 11), (3, -17), (2, -6), (1, 27), (0, -6)], 6),
            (Whole, &[(8, 1), (7, -4), (6, 13), (5, -31), (4, 10), (3, 59), (2, -48), (1, -24), (0, 24)], 24),
        ],
        2 => &[
            (Alpha, &[(0, 1)], 1),
            (Delta, &[(0, 1)], 1),
            (Epsilon, &[(2, 1), (1, -1)], 1),
            (Omega, &[(4, 1), (3, -1), (2, -1), (1, -1)], 2),
            (Whole, &[(6, 1), (5, -1), (4, -1), (3, -5), (2, 6), (1, 6), (0, -6)], 6),
        ],
        _ => return Err(Error::OutOfRange(format!("local values are tabulated for ell ≤ 2, got {ell}"))),
    };
    Ok(table
        .iter()
        .map(|&(family, terms, den)| LocalBetti {
            ell,
            i: family.nullity() - ell,
            family,
            value: qpoly(q as u64, terms, den),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::closed_betti;
    use num_traits::Zero;

    #[test]
    fn category_counts_partition_the_conics() {
        for q in [2u32, 3, 4, 5, 7, 8, 9, 16] {
            let total: BigInt = conic_category_counts(q).unwrap().values().sum();
            let by_class: BigInt = conic_class_counts(q).unwrap().values().sum();
            let expected = BigInt::from((q as u64).pow(6) - 1) / BigInt::from(q - 1);
            assert_eq!(total, expected);
            assert_eq!(by_class, expected);
            let cats = conic_category_counts(q).unwrap();
            let classes = conic_class_counts(q).unwrap();
            for class in ConicClass::ALL {
                let s: BigInt = cats.iter().filter(|(c, _)| c.class() == class).map(|(_, v)| v).sum();
                assert_eq!(s, classes[&class], "q={q} {class:?}");
            }
        }
    }

    #[test]
    fn local_values_times_counts_give_graded_betti_numbers() {
        for q in [7u32, 8, 9, 11] {
            for ell in 0..=2 {
                let table = closed_betti(q, ell).unwrap();
                let mut by_slot: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
                for lb in local_betti(q, ell).unwrap() {
                    *by_slot.entry((lb.i, lb.family.size(q))).or_default() += lb.family.count(q) * &lb.value;
                }
                for ((i, j), v) in by_slot {
                    let expected = table.get(i, j);
                    assert_eq!(v, expected, "q={q} ell={ell} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn census_sizes_are_the_hamming_weights() {
        let q = 7;
        let c = rm22_census(q).unwrap();
        let d = crate::formulas::hamming_weights(q).unwrap();
        for (r, &dr) in d.iter().enumerate() {
            let least = c.keys().filter(|(n, _)| *n == r + 1).map(|&(_, s)| s).min().unwrap();
            assert_eq!(least, dr);
        }
        assert!(c.values().all(|v| !v.is_zero()));
    }
}
