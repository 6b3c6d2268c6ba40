use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Solves `a · x = b` exactly. The system may be overdetermined but must be
/// consistent and have full column rank.
pub fn solve_exact(a: &[Vec<BigRational>], b: &[BigRational]) -> Result<Vec<BigRational>> {
    assert_eq!(a.len(), b.len(), "row count mismatch");
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), cols, "ragged system");
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut rank = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        let Some(pr) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(pr, rank);
        let inv = BigRational::one() / &m[rank][c];
        for v in m[rank].iter_mut() {
            *v *= &inv;
        }
        for r in 0..m.len() {
            if r == rank || m[r][c].is_zero() {
                continue;
            }
            let factor = m[r][c].clone();
            for cc in c..=cols {
                let t = &factor * &m[rank][cc];
                m[r][cc] -= t;
            }
        }
        pivots.push(c);
        rank += 1;
    }
    if m[rank..].iter().any(|row| !row[cols].is_zero()) {
        return Err(Error::Inconsistent);
    }
    if rank < cols {
        return Err(Error::Underdetermined);
    }
    Ok((0..cols).map(|i| m[i][cols].clone()).collect())
}

pub fn ratio(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
