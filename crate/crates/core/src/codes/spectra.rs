use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactalg::gaussian_binomial;
use crate::support::Support;

use super::subspace::{free_slots, pivot_patterns};
use super::{Budget, LinearCode};

/// Higher weight spectra: `(r, w) → A_w^(r)`, the number of r-dimensional
/// subcodes of support weight w. Zero entries are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumTable {
    q: u32,
    k: usize,
    n: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
    truncated_at: Option<usize>,
}

impl SpectrumTable {
    pub fn new(q: u32, k: usize, n: usize) -> Self {
        SpectrumTable {
            q,
            k,
            n,
            entries: BTreeMap::new(),
            truncated_at: None,
        }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, w: usize) -> BigInt {
        self.entries.get(&(r, w)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, r: usize, w: usize, v: BigInt) {
        if v.is_zero() {
            self.entries.remove(&(r, w));
        } else {
            self.entries.insert((r, w), v);
        }
    }

    /// Nonzero entries keyed by `(r, w)`.
    pub fn entries(&self) -> &BTreeMap<(usize, usize), BigInt> {
        &self.entries
    }

    pub fn row(&self, r: usize) -> BTreeMap<usize, BigInt> {
        self.entries
            .range((r, 0)..=(r, usize::MAX))
            .map(|(&(_, w), v)| (w, v.clone()))
            .collect()
    }

    pub fn row_sum(&self, r: usize) -> BigInt {
        self.row(r).values().sum()
    }

    /// Largest r whose row is fully computed.
    pub fn max_rank(&self) -> usize {
        match self.truncated_at {
            Some(0) => 0,
            Some(r) => r - 1,
            None => self.k,
        }
    }

    /// First dimension whose enumeration exceeded the budget, if any.
    pub fn truncated_at(&self) -> Option<usize> {
        self.truncated_at
    }

    pub fn mark_truncated(&mut self, r: usize) {
        self.truncated_at = Some(r);
    }

    pub fn require_complete(&self) -> Result<&Self> {
        match self.truncated_at {
            None => Ok(self),
            Some(r) => Err(Error::TooLarge {
                what: format!("subspace enumeration at dimension {r}"),
                limit: 0,
            }),
        }
    }

    /// Generalized Hamming weight d_r, the least support weight of an
    /// r-dimensional subcode.
    pub fn hamming_weight(&self, r: usize) -> Option<usize> {
        self.row(r).keys().next().copied()
    }

    /// Row sums equal the Gaussian binomials [k, r]_q for every computed row.
    pub fn row_sums_are_gaussian(&self) -> bool {
        (0..=self.max_rank().min(self.k)).all(|r| {
            gaussian_binomial(self.k as u32, r as u32, self.q as u64)
                .is_ok_and(|g| g == self.row_sum(r))
        })
    }

    /// Same entries on the rows both tables cover.
    pub fn agrees_with(&self, other: &SpectrumTable, r_max: usize) -> bool {
        (0..=r_max).all(|r| self.row(r) == other.row(r))
    }
}

/// Exhaustive A_w^(r) for r ≤ `r_max`. Rows whose subspace count exceeds the
/// budget are skipped and the table is marked truncated at the first such r.
pub fn brute_force_spectra(c: &LinearCode, r_max: usize, budget: &Budget) -> Result<SpectrumTable> {
    let q = c.field().order();
    let k = c.dimension();
    let n = c.length();
    let supports = c.message_supports(budget)?;
    let mut table = SpectrumTable::new(q, k, n);
    for r in 0..=r_max.min(k) {
        let count = gaussian_binomial(k as u32, r as u32, q as u64)?;
        if count.to_u64().is_none_or(|c| c > budget.subspaces) {
            table.mark_truncated(r);
            break;
        }
        let hist = support_histogram(&supports, q as usize, k, r, n);
        for (w, &v) in hist.iter().enumerate() {
            table.set(r, w, BigInt::from(v));
        }
    }
    Ok(table)
}

struct Shard {
    pivots: Vec<usize>,
    slots: Vec<(usize, usize)>,
    fixed: Vec<usize>,
}

/// Support-weight histogram over all r-dimensional subspaces.
pub(crate) fn support_histogram(supports: &[Support], q: usize, k: usize, r: usize, n: usize) -> Vec<u64> {
    let mut shards = Vec::new();
    for pivots in pivot_patterns(k, r) {
        let slots = free_slots(k, &pivots);
        let fixed_len = slots.len().min(2);
        for code in 0..q.pow(fixed_len as u32) {
            let fixed = (0..fixed_len).map(|i| code / q.pow(i as u32) % q).collect();
            shards.push(Shard {
                pivots: pivots.clone(),
                slots: slots.clone(),
                fixed,
            });
        }
    }
    let powers: Vec<usize> = (0..k).map(|c| q.pow(c as u32)).collect();
    shards
        .par_iter()
        .map(|shard| {
            let mut hist = vec![0u64; n + 1];
            // per row: base index and the columns of its still-free slots
            let mut base: Vec<usize> = shard.pivots.iter().map(|&p| powers[p]).collect();
            let mut free: Vec<Vec<usize>> = vec![Vec::new(); r];
            for (s, &(row, col)) in shard.slots.iter().enumerate() {
                match shard.fixed.get(s) {
                    Some(&v) => base[row] += v * powers[col],
                    None => free[row].push(powers[col]),
                }
            }
            rows_rec(0, 0, supports, q, &base, &free, &mut hist);
            hist
        })
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}

fn rows_rec(
    i: usize,
    acc: Support,
    supports: &[Support],
    q: usize,
    base: &[usize],
    free: &[Vec<usize>],
    hist: &mut [u64],
) {
    if i == base.len() {
        hist[acc.count_ones() as usize] += 1;
        return;
    }
    let steps = &free[i];
    let mut digits = vec![0usize; steps.len()];
    let mut idx = base[i];
    loop {
        rows_rec(i + 1, acc | supports[idx], supports, q, base, free, hist);
        let mut exhausted = true;
        for s in (0..steps.len()).rev() {
            if digits[s] + 1 < q {
                digits[s] += 1;
                idx += steps[s];
                exhausted = false;
                break;
            }
            idx -= digits[s] * steps[s];
            digits[s] = 0;
        }
        if exhausted {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{build_rm22, SubcodeIterator};

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn c2_spectra() {
        let t = brute_force_spectra(&build_rm22(2).unwrap(), 4, &Budget::default()).unwrap();
        assert_eq!(t.get(3, 3), big(4));
        assert_eq!(t.get(3, 4), big(11));
        assert_eq!(t.get(4, 4), big(1));
        assert_eq!(t.get(2, 2), big(6));
        assert!(t.row_sums_are_gaussian());
    }

    #[test]
    fn c3_second_spectrum() {
        let t = brute_force_spectra(&build_rm22(3).unwrap(), 2, &Budget::default()).unwrap();
        assert_eq!(t.get(2, 7), big(2160));
        assert_eq!(t.get(1, 5), big(54));
    }

    #[test]
    fn c4_first_spectrum() {
        let t = brute_force_spectra(&build_rm22(4).unwrap(), 1, &Budget::default()).unwrap();
        assert_eq!(t.get(1, 12), big(280));
        assert_eq!(t.hamming_weight(1), Some(8));
    }

    #[test]
    fn truncation_marker() {
        let budget = Budget { subspaces: 1000, ..Budget::default() };
        let t = brute_force_spectra(&build_rm22(3).unwrap(), 6, &budget).unwrap();
        assert_eq!(t.truncated_at(), Some(2));
        assert_eq!(t.max_rank(), 1);
        assert!(t.require_complete().is_err());
        assert!(t.row_sums_are_gaussian());
    }

    #[test]
    fn histogram_matches_naive_subspace_supports() {
        let c = build_rm22(3).unwrap();
        let supports = c.message_supports(&Budget::default()).unwrap();
        let mut naive = vec![0u64; 10];
        for m in SubcodeIterator::new(c.field(), 6, 2) {
            let s = (0..2).fold(0u128, |acc, i| {
                let idx: usize = m.row(i).iter().enumerate().map(|(j, x)| x.value() as usize * 3usize.pow(j as u32)).sum();
                acc | supports[idx]
            });
            naive[s.count_ones() as usize] += 1;
        }
        assert_eq!(support_histogram(&supports, 3, 6, 2, 9), naive);
    }
}
