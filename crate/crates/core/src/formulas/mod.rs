//! Closed forms: the higher weight spectra, Betti numbers and weight polynomials of
//! RM_q(2,2) as exact functions of q, the RM_q(1,m) and uniform-matroid families,
//! conic counts, and the embedded small-q tables.

mod betti;
mod census;
mod fixtures;
mod spectra;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exactalg::prime_power;

pub use betti::{
    closed_betti, closed_phi_profile, gwp_closed, herzog_kuhl_rm1m, rm1m_betti, typo_slots,
    uniform_betti, TypoSlot,
};
pub use census::{
    conic_category_counts, conic_class_counts, local_betti, rm22_census, rm22_family_counts,
    Family, LocalBetti,
};
pub use fixtures::{fixtures, Erratum, FixtureSet};
pub use spectra::{fallq_spectra, rm1m_spectra, SpectrumErratum, SPECTRUM_ERRATA};

/// Σ c·q^e over `terms` (e, c), divided exactly by `den`.
pub(crate) fn qpoly(q: u64, terms: &[(u32, i64)], den: i64) -> BigInt {
    let v = qpoly_ratio(q, terms, den);
    assert!(v.is_integer(), "closed form is not integral at q = {q}");
    v.to_integer()
}

/// Same as [`qpoly`] without the integrality requirement.
pub(crate) fn qpoly_ratio(q: u64, terms: &[(u32, i64)], den: i64) -> BigRational {
    let q = BigInt::from(q);
    let num: BigInt = terms
        .iter()
        .map(|&(e, c)| BigInt::from(c) * num_traits::pow(q.clone(), e as usize))
        .sum();
    BigRational::new(num, BigInt::from(den))
}

pub(crate) fn require_prime_power(q: u32) -> Result<()> {
    match prime_power(q as u64) {
        Some(_) => Ok(()),
        None => Err(Error::NotPrimePower(q as u64)),
    }
}

/// Generalized Hamming weights d_1..d_6 of RM_q(2,2), q ≥ 3.
pub fn hamming_weights(q: u32) -> Result<[usize; 6]> {
    require_prime_power(q)?;
    if q == 2 {
        return Err(Error::UnsupportedQ(q));
    }
    let q = q as usize;
    let n = q * q;
    Ok([n - 2 * q, n - q - 1, n - q, n - 2, n - 1, n])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamming_weights_at_small_q() {
        assert_eq!(hamming_weights(5).unwrap(), [15, 19, 20, 23, 24, 25]);
        assert_eq!(hamming_weights(3).unwrap(), [3, 5, 6, 7, 8, 9]);
        assert_eq!(hamming_weights(4).unwrap()[0], 8);
        assert_eq!(hamming_weights(2), Err(Error::UnsupportedQ(2)));
        assert_eq!(hamming_weights(6), Err(Error::NotPrimePower(6)));
    }

    #[test]
    fn qpoly_evaluates_exactly() {
        // (q^3 - q)/2 at q = 7
        assert_eq!(qpoly(7, &[(3, 1), (1, -1)], 2), BigInt::from(168));
        assert!(!qpoly_ratio(7, &[(1, 1)], 2).is_integer());
    }
}
