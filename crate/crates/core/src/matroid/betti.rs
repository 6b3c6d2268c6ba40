use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::{CycleInventory, Matroid, MobiusStrategy, MobiusTable};

/// N-graded Betti numbers β_{i,j} of one elongation; β_{0,0} = 1.
#[derive(Clone, PartialEq, Eq)]
pub struct BettiTable {
    ell: usize,
    length: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BettiTable(ell={}, ", self.ell)?;
        f.debug_map()
            .entries(self.entries.iter().map(|(k, v)| (k, v.to_string())))
            .finish()?;
        write!(f, ")")
    }
}

impl BettiTable {
    /// Table holding only β_{0,0} = 1; `length` is the homological length n(E) − ℓ.
    pub fn new(ell: usize, length: usize) -> Self {
        BettiTable {
            ell,
            length,
            entries: BTreeMap::from([((0, 0), BigInt::one())]),
        }
    }

    pub fn elongation(&self) -> usize {
        self.ell
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        if v.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), v);
        }
    }

    pub fn add(&mut self, i: usize, j: usize, v: &BigInt) {
        let cur = self.get(i, j);
        self.set(i, j, cur + v);
    }

    /// Nonzero entries keyed by (i, j).
    pub fn entries(&self) -> &BTreeMap<(usize, usize), BigInt> {
        &self.entries
    }

    /// φ_j = Σ_i (−1)^i β_{i,j} for every j with a nonzero value.
    pub fn phis(&self) -> BTreeMap<usize, BigInt> {
        let mut out: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (&(i, j), v) in &self.entries {
            let e = out.entry(j).or_default();
            if i % 2 == 0 {
                *e += v;
            } else {
                *e -= v;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// Σ_{i,j} (−1)^i j^s β_{i,j} for s = 0..s_count.
    pub fn bs_residuals(&self, s_count: usize) -> Vec<BigInt> {
        let phis = self.phis();
        (0..s_count)
            .map(|s| {
                phis.iter()
                    .map(|(&j, phi)| num_traits::pow(BigInt::from(j), s) * phi)
                    .sum()
            })
            .collect()
    }

    /// max(j − i) over nonzero entries.
    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j.saturating_sub(i)).max().unwrap_or(0)
    }

    pub fn max_homological_degree(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Entries where the two tables differ, as (i, j, self, other).
    pub fn differences(&self, other: &BettiTable) -> Vec<(usize, usize, BigInt, BigInt)> {
        let keys: std::collections::BTreeSet<_> = self.entries.keys().chain(other.entries.keys()).collect();
        keys.into_iter()
            .filter_map(|&(i, j)| {
                let (a, b) = (self.get(i, j), other.get(i, j));
                (a != b).then_some((i, j, a, b))
            })
            .collect()
    }
}

/// Betti table of `m` at its elongation level from the Möbius values of its cycles.
pub fn betti_table(m: &Matroid, inv: &CycleInventory) -> Result<BettiTable> {
    let mu = MobiusTable::compute(m, inv, MobiusStrategy::Auto, None)?;
    let table = table_from_mobius(m, inv, &mu);
    let residuals = table.bs_residuals(table.length());
    if residuals.iter().any(|r| !r.is_zero()) {
        return Err(Error::BsViolation {
            ell: m.elongation(),
            residuals: residuals.iter().map(ToString::to_string).collect(),
        });
    }
    Ok(table)
}

/// Aggregates |μ| by (nullity − ℓ, cardinality) over the cycles that have a value.
pub fn table_from_mobius(m: &Matroid, inv: &CycleInventory, mu: &MobiusTable) -> BettiTable {
    let ell = mu.elongation();
    let mut sums: BTreeMap<(usize, usize), i128> = BTreeMap::new();
    for (idx, c) in inv.cycles().iter().enumerate() {
        let v = mu.value(idx);
        if c.nullity > ell && v != 0 {
            *sums.entry((c.nullity - ell, c.size())).or_insert(0) += v.abs();
        }
    }
    let mut table = BettiTable::new(ell, m.code_dimension() - ell);
    for ((i, j), v) in sums {
        table.set(i, j, BigInt::from(v));
    }
    table
}

/// φ_j^(ℓ) for ℓ = 0..k, with the convention row φ^(k) = [j = 0].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiProfile {
    k: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl PhiProfile {
    pub fn new(k: usize) -> Self {
        PhiProfile {
            k,
            entries: BTreeMap::from([((k, 0), BigInt::one())]),
        }
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    /// φ_j^(ℓ); zero for ℓ > k.
    pub fn get(&self, ell: usize, j: usize) -> BigInt {
        self.entries.get(&(ell, j)).cloned().unwrap_or_default()
    }

    /// φ_j^(ℓ−1), zero when ℓ = 0.
    pub fn get_previous(&self, ell: usize, j: usize) -> BigInt {
        if ell == 0 {
            BigInt::zero()
        } else {
            self.get(ell - 1, j)
        }
    }

    pub fn set(&mut self, ell: usize, j: usize, v: BigInt) {
        if v.is_zero() {
            self.entries.remove(&(ell, j));
        } else {
            self.entries.insert((ell, j), v);
        }
    }

    /// Nonzero entries keyed by (ℓ, j).
    pub fn entries(&self) -> &BTreeMap<(usize, usize), BigInt> {
        &self.entries
    }

    /// Internal degrees with a nonzero φ at some ℓ.
    pub fn columns(&self) -> std::collections::BTreeSet<usize> {
        self.entries.keys().map(|&(_, j)| j).collect()
    }

    /// Σ_j j^s φ_j^(ℓ) for s = 0..k−ℓ; all zero for a valid profile.
    pub fn bs_residuals(&self, ell: usize) -> Vec<BigInt> {
        (0..self.k.saturating_sub(ell))
            .map(|s| {
                self.entries
                    .range((ell, 0)..=(ell, usize::MAX))
                    .map(|(&(_, j), v)| num_traits::pow(BigInt::from(j), s) * v)
                    .sum()
            })
            .collect()
    }

    pub fn satisfies_bs(&self) -> bool {
        (0..=self.k).all(|ell| self.bs_residuals(ell).iter().all(Zero::is_zero))
    }
}

/// Alternating sums of the tables for ℓ = 0..k−1 (table ℓ = k is the convention row).
pub fn phi_profile(tables: &[BettiTable], k: usize) -> Result<PhiProfile> {
    let mut profile = PhiProfile::new(k);
    for ell in 0..k {
        let t = tables
            .iter()
            .find(|t| t.elongation() == ell)
            .ok_or(Error::MissingElongation(ell))?;
        for (j, v) in t.phis() {
            profile.set(ell, j, v);
        }
    }
    Ok(profile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{build_rm22, Budget};
    use crate::matroid::{cycle_inventory, InventoryMethod};

    fn tables(q: u32) -> Vec<BettiTable> {
        let m = Matroid::from_code(&build_rm22(q).unwrap()).unwrap();
        let inv = cycle_inventory(&m, InventoryMethod::Flats, &Budget::default()).unwrap();
        (0..m.code_dimension())
            .map(|ell| betti_table(&m.elongate(ell).unwrap(), &inv).unwrap())
            .collect()
    }

    #[test]
    fn q3_selected_entries() {
        let t = tables(3);
        assert_eq!(t[0].get(2, 5), BigInt::from(324));
        assert_eq!(t[0].get(3, 6), BigInt::from(600));
        assert_eq!(t[0].regularity(), 3);
    }

    #[test]
    fn q2_is_the_boolean_table() {
        let t = tables(2);
        let row: Vec<BigInt> = (0..5).map(|i| t[0].get(i, i)).collect();
        assert_eq!(row, [1, 4, 6, 4, 1].map(BigInt::from).to_vec());
    }

    #[test]
    fn profile_needs_every_level() {
        let t = tables(3);
        let p = phi_profile(&t, 6).unwrap();
        assert!(p.satisfies_bs());
        assert_eq!(p.get(0, 0), BigInt::one());
        assert_eq!(p.get(6, 0), BigInt::one());
        assert_eq!(phi_profile(&t[..3], 6).unwrap_err(), Error::MissingElongation(3));
    }

    #[test]
    fn perturbed_table_breaks_identities() {
        let mut t = tables(3).remove(0);
        assert!(t.bs_residuals(6).iter().all(Zero::is_zero));
        t.add(2, 5, &BigInt::one());
        assert!(t.bs_residuals(6).iter().any(|r| !r.is_zero()));
    }
}
