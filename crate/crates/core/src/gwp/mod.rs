//! Generalized weight polynomials P_w(Z) = Σ_ℓ (φ_w^(ℓ) − φ_w^(ℓ−1)) Z^ℓ, their
//! inversion to higher weight spectra, and the extension-code check
//! P_w(q^m) = #{codewords of weight w in C ⊗ GF(q^m)}.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::codes::{extend_code, Budget, LinearCode, SpectrumTable};
use crate::error::{Error, Result};
use crate::exactalg::q_falling;
use crate::matroid::PhiProfile;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightPolynomial {
    pub w: usize,
    /// Ascending coefficients, no trailing zeros.
    coeffs: Vec<BigInt>,
}

impl WeightPolynomial {
    pub fn new(w: usize, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        WeightPolynomial { w, coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, z: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * z + c)
    }
}

/// One polynomial per internal degree with a nonzero φ column, sorted by w.
pub fn gwp_assemble(phi: &PhiProfile) -> Result<Vec<WeightPolynomial>> {
    let k = phi.dimension();
    // every level carries φ_0 = 1; a gap means a missing table
    if (0..=k).any(|l| !phi.get(l, 0).is_one()) {
        return Err(Error::MissingColumn(0));
    }
    Ok(phi
        .columns()
        .into_iter()
        .map(|j| {
            let coeffs = (0..=k).map(|l| phi.get(l, j) - phi.get_previous(l, j)).collect();
            WeightPolynomial::new(j, coeffs)
        })
        .filter(|p| !p.is_zero())
        .collect())
}

/// Solves P_w(q^e) = Σ_{r ≤ e} A_w^(r) Π_{i<r}(q^e − q^i) for e = 0..k.
pub fn gwp_invert(polys: &[WeightPolynomial], q: u32, k: usize) -> Result<SpectrumTable> {
    if q < 2 {
        return Err(Error::OutOfRange(format!("q = {q} must be at least 2")));
    }
    let n = polys.iter().map(|p| p.w).max().unwrap_or(0);
    let mut t = SpectrumTable::new(q, k, n);
    let qb = BigInt::from(q);
    for p in polys {
        let mut a: Vec<BigInt> = Vec::with_capacity(k + 1);
        for e in 0..=k {
            let z = num_traits::pow(qb.clone(), e);
            let mut rest = p.eval(&z);
            for (r, ar) in a.iter().enumerate() {
                rest -= ar * q_falling(&z, q as u64, r);
            }
            let (v, rem) = rest.div_rem(&q_falling(&z, q as u64, e));
            if !rem.is_zero() {
                return Err(Error::NonIntegralSpectrum { w: p.w, r: e });
            }
            if v.is_negative() {
                return Err(Error::NegativeSpectrum { w: p.w, r: e });
            }
            a.push(v);
        }
        for (r, v) in a.into_iter().enumerate() {
            t.set(r, p.w, v);
        }
    }
    Ok(t)
}

/// P_w(Z) = Σ_r A_w^(r) Π_{i<r}(Z − q^i), for every weight with a nonzero entry.
pub fn gwp_from_spectra(t: &SpectrumTable) -> Vec<WeightPolynomial> {
    let q = BigInt::from(t.q());
    let weights: BTreeSet<usize> = t.entries().keys().map(|&(_, w)| w).collect();
    // falling[r] = coefficients of Π_{i<r}(Z − q^i)
    let mut falling: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for r in 0..t.dimension() {
        let prev = &falling[r];
        let root = num_traits::pow(q.clone(), r);
        let mut next = vec![BigInt::zero(); prev.len() + 1];
        for (i, c) in prev.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * &root;
        }
        falling.push(next);
    }
    weights
        .into_iter()
        .map(|w| {
            let mut coeffs = vec![BigInt::zero(); t.dimension() + 1];
            for r in 0..=t.dimension() {
                let a = t.get(r, w);
                if !a.is_zero() {
                    for (i, c) in falling[r].iter().enumerate() {
                        coeffs[i] += &a * c;
                    }
                }
            }
            WeightPolynomial::new(w, coeffs)
        })
        .collect()
}

/// Outcome of comparing P_w(q^m) with the weight distribution of the extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionReport {
    pub m: u32,
    /// Weight → (P_w(q^m), codewords of weight w).
    pub compared: BTreeMap<usize, (BigInt, BigInt)>,
    pub mismatches: Vec<usize>,
}

impl ExtensionReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Checks P_w(q^m) against a direct count of codewords of C ⊗ GF(q^m).
pub fn extension_check(c: &LinearCode, m: u32, polys: &[WeightPolynomial]) -> Result<ExtensionReport> {
    let q = c.field().order() as u64;
    let limit = 1u64 << 24;
    let size = q
        .checked_pow(m * c.dimension() as u32)
        .filter(|&s| s <= limit)
        .ok_or_else(|| Error::TooLarge {
            what: format!("{q}^({m}·{}) extended codewords", c.dimension()),
            limit,
        })?;
    let ext = extend_code(c, m)?;
    let counts = ext.weight_distribution(&Budget {
        codewords: size,
        ..Budget::default()
    })?;
    let z = num_traits::pow(BigInt::from(q), m as usize);
    let by_w: BTreeMap<usize, BigInt> = polys.iter().map(|p| (p.w, p.eval(&z))).collect();
    let weights: BTreeSet<usize> = by_w.keys().chain(counts.keys()).copied().collect();
    let mut compared = BTreeMap::new();
    let mut mismatches = Vec::new();
    for w in weights {
        let expected = by_w.get(&w).cloned().unwrap_or_default();
        let actual = counts.get(&w).cloned().unwrap_or_default();
        if expected != actual {
            mismatches.push(w);
        }
        compared.insert(w, (expected, actual));
    }
    Ok(ExtensionReport { m, compared, mismatches })
}

/// Coefficients of W_r(X, Y) = Σ_w A_w^(r) X^{n−w} Y^w, indexed by w = 0..n.
pub fn spectrum_polynomial(t: &SpectrumTable, r: usize) -> Result<Vec<BigInt>> {
    if r > t.dimension() || r > t.max_rank() {
        return Err(Error::MissingRow(r));
    }
    Ok((0..=t.length()).map(|w| t.get(r, w)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::build_rm22;
    use crate::formulas::fixtures;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn assemble_q5() {
        let phi = fixtures(5).unwrap().phi_profile();
        let polys = gwp_assemble(&phi).unwrap();
        let p0 = polys.iter().find(|p| p.w == 0).unwrap();
        assert_eq!(p0.coeffs(), &[b(1)]);
        let p15 = polys.iter().find(|p| p.w == 15).unwrap();
        assert_eq!(p15.coeffs(), &[b(-60), b(60)]);
        assert_eq!(p15.eval(&b(5)), b(240));
        for p in polys.iter().filter(|p| p.w > 0) {
            assert!(p.eval(&b(1)).is_zero(), "w = {}", p.w);
        }
        let t = gwp_invert(&polys, 5, 6).unwrap();
        assert_eq!(t.get(1, 15), b(60));
    }

    #[test]
    fn inversion_reproduces_binary_spectra() {
        let phi = fixtures(2).unwrap().phi_profile();
        let t = gwp_invert(&gwp_assemble(&phi).unwrap(), 2, 4).unwrap();
        assert_eq!(t.get(2, 4), b(13));
        assert_eq!(t.get(0, 0), b(1));
        assert!((1..=4).all(|r| t.get(r, 0).is_zero()));
    }

    #[test]
    fn missing_levels_are_reported() {
        let mut phi = PhiProfile::new(2);
        phi.set(0, 0, b(1));
        assert_eq!(gwp_assemble(&phi).unwrap_err(), Error::MissingColumn(0));
    }

    #[test]
    fn inversion_rejects_negative_entries() {
        let p = WeightPolynomial::new(3, vec![b(2), b(-2)]);
        assert!(matches!(gwp_invert(&[p], 3, 2), Err(Error::NegativeSpectrum { .. })));
    }

    #[test]
    fn extension_counts_for_the_binary_code() {
        let c = build_rm22(2).unwrap();
        let polys = gwp_assemble(&fixtures(2).unwrap().phi_profile()).unwrap();
        let r1 = extension_check(&c, 1, &polys).unwrap();
        assert!(r1.passed());
        let counts: Vec<BigInt> = (0..=4).map(|w| r1.compared[&w].1.clone()).collect();
        assert_eq!(counts, vec![b(1), b(4), b(6), b(4), b(1)]);
        let r2 = extension_check(&c, 2, &polys).unwrap();
        assert!(r2.passed());
        for w in 0..=4u32 {
            let expected = b(3i64.pow(w)) * crate::exactalg::binomial(4, w as u64);
            assert_eq!(r2.compared[&(w as usize)].1, expected);
        }
    }

    #[test]
    fn spectrum_polynomial_rows() {
        let t = crate::formulas::fallq_spectra(2).unwrap();
        assert_eq!(spectrum_polynomial(&t, 1).unwrap(), vec![b(0), b(4), b(6), b(4), b(1)]);
        assert_eq!(spectrum_polynomial(&t, 0).unwrap(), vec![b(1), b(0), b(0), b(0), b(0)]);
        let t3 = crate::formulas::fallq_spectra(3).unwrap();
        let top = spectrum_polynomial(&t3, 6).unwrap();
        assert_eq!(top[9], b(1));
        assert_eq!(top.iter().filter(|v| !v.is_zero()).count(), 1);
        assert_eq!(spectrum_polynomial(&t, 5).unwrap_err(), Error::MissingRow(5));
    }

    #[test]
    fn forward_map_inverts() {
        for q in [2u32, 3, 4, 5, 7] {
            let t = crate::formulas::fallq_spectra(q).unwrap();
            let polys = gwp_from_spectra(&t);
            let back = gwp_invert(&polys, q, t.dimension()).unwrap();
            assert_eq!(back.entries(), t.entries(), "q = {q}");
        }
    }
}
